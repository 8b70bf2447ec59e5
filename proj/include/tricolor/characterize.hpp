#pragma once

// Decision procedures for non-singularity, zero inverse diagonal,
// unimodularity and 3-colored inverses of unicyclic and bicyclic graphs.
// They read only matchings, cycles, pegs, paths and weights; none of them
// touches the algebraic oracle.

#include <optional>
#include <string>
#include <vector>

#include "tricolor/combinatorics.hpp"
#include "tricolor/graph.hpp"

namespace tricolor {

struct Witness {
  std::optional<Matching> matching;
  std::vector<Cycle> cycles;
  std::vector<VertexPair> pegs;
  std::vector<Path> paths;
  std::string note;
};

struct Verdict {
  std::string predicate;
  bool holds;
  std::optional<Witness> witness;
};

namespace detail {

inline void require_in_model(const Analysis& a, const char* who) {
  const auto tag = a.shape().tag;
  if (tag != ShapeClass::Tag::unicyclic && !a.shape().is_bicyclic()) {
    throw ShapeError(std::string(who) + " requires a unicyclic or bicyclic graph, got " + to_string(a.shape()));
  }
  if (!a.in_model()) throw ModelError(std::string(who) + " requires a cycle of weight ±i");
}

/// w(Γ)(-1)^{|Γ|/2} for an even real cycle; 0 otherwise.
inline int signed_parity(const Analysis& a, std::size_t k) {
  const int len = a.cycles()[k].length();
  if (!a.is_real(k) || len % 2) return 0;
  return static_cast<int>(a.weight(k).re) * ((len / 2) % 2 ? -1 : 1);
}

inline std::vector<std::size_t> independent_cycles(const Analysis& a) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < a.cycles().size(); ++k)
    if (a.is_independent(k)) out.push_back(k);
  return out;
}

inline Witness cycle_witness(const Analysis& a, std::size_t k, std::string note) {
  Witness w;
  w.cycles.push_back(a.cycles()[k]);
  w.matching = a.first_perfect_matching(a.graph().all() & ~a.cycles()[k].mask);
  w.note = std::move(note);
  return w;
}

inline Witness matching_witness(const Analysis& a, std::string note) {
  Witness w;
  w.matching = a.first_perfect_matching(a.graph().all());
  w.note = std::move(note);
  return w;
}

}  // namespace detail

/// Non-singular iff a perfect matching exists.
inline Verdict nonsingular_unicyclic(const Analysis& a) {
  if (a.shape().tag != ShapeClass::Tag::unicyclic) throw ShapeError("nonsingular_unicyclic requires a unicyclic graph");
  detail::require_in_model(a, "nonsingular_unicyclic");
  const bool holds = a.has_perfect_matching(a.graph().all());
  if (!holds) return {"nonsingular", false, std::nullopt};
  return {"nonsingular", true, detail::matching_witness(a, "perfect matching")};
}

/// Case analysis over perfect matchings and independent cycles.
inline Verdict nonsingular_bicyclic(const Analysis& a) {
  if (!a.shape().is_bicyclic()) throw ShapeError("nonsingular_bicyclic requires a bicyclic graph");
  detail::require_in_model(a, "nonsingular_bicyclic");
  const std::int64_t m0 = a.matching_count(a.graph().all());
  const auto indep = detail::independent_cycles(a);
  const char* name = "nonsingular";

  if (m0 == 1) return {name, true, detail::matching_witness(a, "unique perfect matching")};

  if (m0 == 0) {
    for (std::size_t k : indep) {
      if (a.is_real(k) && a.cycles()[k].length() % 2 == 1) {
        return {name, true, detail::cycle_witness(a, k, "no perfect matching; odd independent cycle of weight ±1")};
      }
    }
    return {name, false, std::nullopt};
  }

  // m0 > 1
  auto real_condition = [&](std::size_t k) {
    // w=1 with |Γ|=4k+2, or w=-1 with |Γ|=4k
    return detail::signed_parity(a, k) == -1;
  };
  if (a.shape().tag == ShapeClass::Tag::bicyclic_theta) {
    if (indep.size() > 1) {
      Witness w;
      for (std::size_t k : indep) w.cycles.push_back(a.cycles()[k]);
      w.note = "more than one independent cycle";
      return {name, true, w};
    }
    if (indep.size() == 1) {
      const std::size_t k = indep.front();
      if (!a.is_real(k)) return {name, true, detail::cycle_witness(a, k, "unique independent cycle of weight ±i")};
      if (real_condition(k)) return {name, true, detail::cycle_witness(a, k, "unique independent cycle with w(-1)^{|C|/2} = -1")};
      return {name, false, detail::cycle_witness(a, k, "unique independent cycle with w(-1)^{|C|/2} = 1")};
    }
    return {name, false, std::nullopt};
  }

  // ∞-type: Γ' has weight ±i, Γ is the other cycle.
  const auto& cs = a.cycles();
  std::size_t gp = cs.size() - 1;
  while (gp > 0 && a.is_real(gp)) --gp;
  const std::size_t g = gp == 0 ? 1 : 0;
  const bool g_ind = a.is_independent(g), gp_ind = a.is_independent(gp);
  if (!g_ind && gp_ind) return {name, true, detail::cycle_witness(a, gp, "only the ±i cycle is independent")};
  if (g_ind) {
    if (!a.is_real(g)) return {name, true, detail::cycle_witness(a, g, "independent cycle of weight ±i")};
    if (real_condition(g)) return {name, true, detail::cycle_witness(a, g, "independent cycle with w(-1)^{|C|/2} = -1")};
    return {name, false, detail::cycle_witness(a, g, "independent cycle with w(-1)^{|C|/2} = 1")};
  }
  return {name, false, std::nullopt};
}

inline Verdict nonsingular_predicate(const Analysis& a) {
  return a.shape().tag == ShapeClass::Tag::unicyclic ? nonsingular_unicyclic(a) : nonsingular_bicyclic(a);
}

/// All b_ii vanish: always for unicyclic; for bicyclic iff a perfect
/// matching exists and no odd ±1 cycle has exactly one peg relative to
/// some perfect matching.
inline Verdict zero_diagonal_predicate(const Analysis& a, PegRule rule = PegRule::with_chords) {
  detail::require_in_model(a, "zero_diagonal_predicate");
  if (!nonsingular_predicate(a).holds) throw SingularError("zero_diagonal_predicate requires a non-singular graph");
  const char* name = "zero_diagonal";
  if (a.shape().tag == ShapeClass::Tag::unicyclic) return {name, true, Witness{{}, {}, {}, {}, "non-singular unicyclic"}};
  const auto matchings = a.perfect_matchings(a.graph().all());
  if (matchings.empty()) return {name, false, Witness{{}, {}, {}, {}, "no perfect matching"}};
  for (std::size_t k = 0; k < a.cycles().size(); ++k) {
    const Cycle& c = a.cycles()[k];
    if (!a.is_real(k) || c.length() % 2 == 0) continue;
    for (const auto& m : matchings) {
      const PegSet p = pegs(m, c, rule);
      if (p.count() == 1) {
        return {name, false, Witness{m, {c}, p.pegs, {}, "odd ±1 cycle with exactly one peg"}};
      }
    }
  }
  return {name, true, std::nullopt};
}

/// |det A| = 1.
inline Verdict unimodular_predicate(const Analysis& a) {
  detail::require_in_model(a, "unimodular_predicate");
  const char* name = "unimodular";
  const std::int64_t m0 = a.matching_count(a.graph().all());
  if (m0 == 1) return {name, true, detail::matching_witness(a, "unique perfect matching")};
  if (a.shape().tag != ShapeClass::Tag::bicyclic_theta || m0 == 0) return {name, false, std::nullopt};
  const auto indep = detail::independent_cycles(a);
  if (indep.size() != a.cycles().size()) return {name, false, std::nullopt};
  for (std::size_t k = 0; k < a.cycles().size(); ++k) {
    if (detail::signed_parity(a, k) == 1) {
      return {name, true, detail::cycle_witness(a, k, "all cycles independent; w(-1)^{|C|/2} = 1")};
    }
  }
  return {name, false, std::nullopt};
}

namespace detail {

/// |P|-|Q| ≡ 2 (mod 4) with w(P)=w(Q), or ≡ 0 (mod 4) with w(P)=-w(Q).
inline bool cancelling_pair(const ColoredDigraph& g, const Path& p, const Path& q) {
  const int diff = ((p.length() - q.length()) % 4 + 4) % 4;
  const GaussianInt wp = path_weight(g, p), wq = path_weight(g, q);
  return (diff == 2 && wp == wq) || (diff == 0 && wp == -wq);
}

}  // namespace detail

/// Every inverse entry lies in {0, ±1, ±i}.
inline Verdict inverse_is_3colored(const Analysis& a, PegRule rule = PegRule::with_chords) {
  detail::require_in_model(a, "inverse_is_3colored");
  if (!nonsingular_predicate(a).holds || !zero_diagonal_predicate(a, rule).holds) {
    throw ModelError("inverse_is_3colored requires an invertible graph");
  }
  const char* name = "inverse_3colored";
  const auto matchings = a.perfect_matchings(a.graph().all());
  if (matchings.size() != 1) {
    return {name, false, Witness{{}, {}, {}, {}, "perfect matching is not unique"}};
  }
  const Matching& m = matchings.front();

  if (a.shape().tag == ShapeClass::Tag::unicyclic) {
    const PegSet p = pegs(m, a.cycles().front(), rule);
    if (p.count() == 2) return {name, false, Witness{m, {p.cycle}, p.pegs, {}, "cycle has exactly two pegs"}};
    return {name, true, Witness{m, {p.cycle}, p.pegs, {}, "unique perfect matching; peg count is not two"}};
  }

  Witness evidence{m, {}, {}, {}, "unique perfect matching; no cycle has exactly two pegs"};
  for (const Cycle& c : a.cycles()) {
    const PegSet p = pegs(m, c, rule);
    if (p.count() != 2) continue;
    // outer endpoints u', v'; a chord peg may be read either way
    auto outer = [&](const VertexPair& e) {
      std::vector<Vertex> v;
      if (!c.contains(e.first)) v.push_back(e.first);
      if (!c.contains(e.second)) v.push_back(e.second);
      if (v.empty()) v = {e.first, e.second};
      return v;
    };
    bool satisfied = false;
    std::vector<Path> pair;
    for (Vertex up : outer(p.pegs[0])) {
      for (Vertex vp : outer(p.pegs[1])) {
        if (up == vp || satisfied) continue;
        const auto paths = mm_alternating_paths(a, up, vp);
        for (std::size_t x = 0; x < paths.size() && !satisfied; ++x)
          for (std::size_t y = x + 1; y < paths.size() && !satisfied; ++y)
            if (detail::cancelling_pair(a.graph(), paths[x].path, paths[y].path)) {
              satisfied = true;
              pair = {paths[x].path, paths[y].path};
            }
      }
    }
    if (!satisfied) {
      return {name, false, Witness{m, {c}, p.pegs, {}, "two-peg cycle without a cancelling mm-alternating pair"}};
    }
    evidence.cycles.push_back(c);
    evidence.pegs.insert(evidence.pegs.end(), p.pegs.begin(), p.pegs.end());
    evidence.paths.insert(evidence.paths.end(), pair.begin(), pair.end());
    evidence.note = "unique perfect matching; every two-peg cycle has a cancelling mm-alternating pair";
  }
  return {name, true, evidence};
}

// Graph-level conveniences.
inline Verdict nonsingular_unicyclic(const ColoredDigraph& g) { return nonsingular_unicyclic(Analysis(g)); }
inline Verdict nonsingular_bicyclic(const ColoredDigraph& g) { return nonsingular_bicyclic(Analysis(g)); }
inline Verdict zero_diagonal_predicate(const ColoredDigraph& g) { return zero_diagonal_predicate(Analysis(g)); }
inline Verdict unimodular_predicate(const ColoredDigraph& g) { return unimodular_predicate(Analysis(g)); }
inline Verdict inverse_is_3colored(const ColoredDigraph& g) { return inverse_is_3colored(Analysis(g)); }

}  // namespace tricolor
