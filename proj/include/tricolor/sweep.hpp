#pragma once

// Verification sweep: every generated instance is run through the
// combinatorial routines, the characterization predicates and the
// algebraic oracle, and a list of structural properties is tallied.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "tricolor/characterize.hpp"
#include "tricolor/combinatorics.hpp"
#include "tricolor/exact.hpp"
#include "tricolor/generators.hpp"
#include "tricolor/graph.hpp"

namespace tricolor {

enum class Check {
  round_trip,
  det_equivalence,
  inverse_equivalence,
  adjugate_identity,
  inverse_hermitian,
  conjugate_orientation,
  bicyclic_det_formula,
  nonsingular_verdict,
  zero_diagonal_verdict,
  unimodular_verdict,
  inverse_3colored_verdict,
  witness_validity,
  ses_count_single_independent,
  ses_count_infinity_both_independent,
  ses_count_theta_all_independent,
  multiple_matchings_iff_even_independent,
  no_matching_even_cycles_singular,
  peg_parity,
  closed_form_single_independent,
  closed_form_infinity_both_independent,
  closed_form_theta_all_independent,
  mm_path_bound,
  mm_alternating_iff_contributing,
  infinity_shared_vertex_independence,
  theta_independent_count,
  theta_branch_parity,
  theta_single_real_cycle,
  imaginary_independent_not_3colored,
  multiple_matchings_not_3colored,
  no_two_peg_cycle_3colored,
  zero_diagonal_iff_pegs,
  peg_blocking,
  odd_cycle_odd_peg_count,
  literal_path_sign,
  zero_diagonal_outward_pegs,
  inverse_3colored_outward_pegs,
  count_
};

inline constexpr std::size_t kCheckCount = static_cast<std::size_t>(Check::count_);

struct CheckInfo {
  const char* name;
  const char* description;
  bool gating;  // a violation is a counterexample; otherwise only reported
};

inline const CheckInfo& info(Check c) {
  static const std::array<CheckInfo, kCheckCount> table{{
      {"round_trip", "serialize then parse gives the same graph", true},
      {"det_equivalence", "combinatorial det equals the Bareiss det", true},
      {"inverse_equivalence", "combinatorial adjugate equals the Bareiss adjugate (nonsingular)", true},
      {"adjugate_identity", "A * adj(A) = det(A) * I", true},
      {"inverse_hermitian", "the inverse is Hermitian and det is real", true},
      {"conjugate_orientation", "reversing every green arc conjugates the inverse and keeps det", true},
      {"bicyclic_det_formula", "matching-count det formula equals the oracle det (bicyclic)", true},
      {"nonsingular_verdict", "nonsingular predicate equals det != 0", true},
      {"zero_diagonal_verdict", "zero-diagonal predicate equals the oracle diagonal (nonsingular)", true},
      {"unimodular_verdict", "unimodular predicate equals |det| = 1", true},
      {"inverse_3colored_verdict", "3-colored-inverse predicate equals the oracle entries (invertible)", true},
      {"witness_validity", "every verdict witness passes its definitional check", true},
      {"ses_count_single_independent", "bicyclic, perfect matching, one independent cycle: 3 spanning elementary subgraphs", true},
      {"ses_count_infinity_both_independent", "∞-type, perfect matching, both cycles independent: 9 spanning elementary subgraphs", true},
      {"ses_count_theta_all_independent", "θ-type, perfect matching, all cycles independent: 6 spanning elementary subgraphs", true},
      {"multiple_matchings_iff_even_independent", "more than one perfect matching iff some even cycle is independent", true},
      {"no_matching_even_cycles_singular", "no perfect matching and all cycles even implies det = 0", true},
      {"peg_parity", "outward pegs have the parity of |Γ|; zero pegs under some matching iff independent", true},
      {"closed_form_single_independent", "det closed form with exactly one independent cycle", true},
      {"closed_form_infinity_both_independent", "det closed form for ∞-type with both cycles independent", true},
      {"closed_form_theta_all_independent", "det closed form for θ-type with all cycles independent", true},
      {"mm_path_bound", "at most four mm-alternating paths between any two vertices (bicyclic)", true},
      {"mm_alternating_iff_contributing", "G - P has a contributing subgraph iff P is mm-alternating (invertible bicyclic)", true},
      {"infinity_shared_vertex_independence", "∞-type with a shared vertex and a perfect matching: at most one independent cycle", true},
      {"theta_independent_count", "θ-type with several perfect matchings: one or three independent cycles", true},
      {"theta_branch_parity", "θ-type with all cycles independent: every branch path has an even vertex count", true},
      {"theta_single_real_cycle", "in-model θ-type has exactly one cycle of weight ±1", true},
      {"imaginary_independent_not_3colored", "invertible with one independent even cycle, of weight ±i: inverse not 3-colored", true},
      {"multiple_matchings_not_3colored", "invertible bicyclic with several perfect matchings: inverse not 3-colored", true},
      {"no_two_peg_cycle_3colored", "invertible bicyclic, unique matching, no two-peg cycle: inverse 3-colored", true},
      {"zero_diagonal_iff_pegs", "nonsingular bicyclic with a matching: zero diagonal iff each odd ±1 cycle has >= 2 pegs under every matching", true},
      {"peg_blocking", "a cycle with >= 3 pegs under every matching is not independent in B - P for any path P", true},
      {"odd_cycle_odd_peg_count", "an odd cycle has an odd number of pegs (chords counted) under every matching", false},
      {"literal_path_sign", "inverse from the path expansion with sign (-1)^{n+|P|} equals the oracle (nonsingular)", false},
      {"zero_diagonal_outward_pegs", "zero-diagonal predicate with chords not counted as pegs equals the oracle", false},
      {"inverse_3colored_outward_pegs", "3-colored-inverse predicate with chords not counted as pegs equals the oracle", false},
  }};
  return table[static_cast<std::size_t>(c)];
}

/// Lexicographic instance position: (order, skeleton index, coloring code).
struct InstanceKey {
  int order{0};
  std::uint64_t skeleton{0};
  std::uint64_t coloring{0};
  friend auto operator<=>(const InstanceKey&, const InstanceKey&) = default;
};

struct Counterexample {
  Check check;
  InstanceKey key;
  std::string graph;  // graph file text
  std::string detail;
};

struct CheckTally {
  std::uint64_t evaluated{0};
  std::uint64_t violated{0};
  std::optional<Counterexample> first;
};

/// Collects per-check outcomes for one worker.
class Recorder {
 public:
  Recorder() : tallies_(kCheckCount) {}

  void begin(const InstanceKey& key, const ColoredDigraph& g) {
    key_ = key;
    graph_ = &g;
  }

  template <class Detail>
  void record(Check c, bool ok, Detail&& detail) {
    auto& t = tallies_[static_cast<std::size_t>(c)];
    ++t.evaluated;
    if (ok) return;
    ++t.violated;
    if (!t.first || key_ < t.first->key) t.first = Counterexample{c, key_, serialize_graph(*graph_), detail()};
  }
  void record(Check c, bool ok) {
    record(c, ok, [] { return std::string{}; });
  }

  const std::vector<CheckTally>& tallies() const { return tallies_; }

  void merge(const Recorder& other) {
    for (std::size_t k = 0; k < kCheckCount; ++k) {
      auto& t = tallies_[k];
      const auto& o = other.tallies_[k];
      t.evaluated += o.evaluated;
      t.violated += o.violated;
      if (o.first && (!t.first || o.first->key < t.first->key)) t.first = o.first;
    }
  }

 private:
  std::vector<CheckTally> tallies_;
  InstanceKey key_{};
  const ColoredDigraph* graph_{nullptr};
};

namespace detail {

inline std::string verdict_text(bool predicate, bool oracle) {
  return std::string("predicate ") + (predicate ? "true" : "false") + ", oracle " + (oracle ? "true" : "false");
}

/// Oracle adjugate as 64-bit Gaussian integers.
inline exact::Adjugate<std::int64_t> oracle_adjugate(const ColoredDigraph& g) {
  const auto a = integer_adjacency(g);
  if (auto fast = exact::adjugate_checked(a)) return *fast;
  const auto big = exact::adjugate_big(a);
  auto to64 = [](const exact::Gaussian<exact::Integer>& x) {
    return GaussianInt{static_cast<std::int64_t>(x.re), static_cast<std::int64_t>(x.im)};
  };
  exact::Adjugate<std::int64_t> out{to64(big.det), exact::Matrix<GaussianInt>(big.adj.order())};
  for (std::size_t i = 0; i < big.adj.order(); ++i)
    for (std::size_t j = 0; j < big.adj.order(); ++j) out.adj(i, j) = to64(big.adj(i, j));
  return out;
}

inline ColoredDigraph reverse_green(const ColoredDigraph& g) {
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) edges.push_back(e.color == Color::green ? Edge{e.v, e.u, e.color} : e);
  return ColoredDigraph(g.order(), std::move(edges));
}

inline bool witness_valid(const ColoredDigraph& g, const Witness& w) {
  if (w.matching && !is_matching_of(g, *w.matching)) return false;
  for (const auto& c : w.cycles)
    if (!is_cycle_of(g, c)) return false;
  for (const auto& p : w.paths)
    if (!is_path_of(g, p)) return false;
  for (const auto& e : w.pegs)
    if (!w.matching || !w.matching->contains(e.first, e.second)) return false;
  return true;
}

inline std::int64_t pow_sign(int e) { return sign_power(e); }

}  // namespace detail

struct InstanceOptions {
  bool conjugate_check{true};
  bool path_checks{true};  // the per-path properties, the costliest part
};

/// Runs every applicable check on one graph.
inline void check_instance(const ColoredDigraph& g, Recorder& r, const InstanceOptions& opt = {}) {
  using exact::Adjugate;
  const int n = g.order();
  const VertexMask all = g.all();

  r.record(Check::round_trip, parse_graph(serialize_graph(g)) == g);

  const Analysis a(g);
  const auto oracle = detail::oracle_adjugate(g);
  const GaussianInt det = oracle.det;
  const bool nonsingular = !det.is_zero();
  const auto comb = adjugate_combinatorial(a);

  r.record(Check::det_equivalence, comb.det == det, [&] {
    return "combinatorial " + exact::to_string(comb.det) + ", oracle " + exact::to_string(det);
  });

  // ground truth from the oracle
  bool zero_diag = false, unimodular = false, three_colored = false;
  if (nonsingular) {
    r.record(Check::literal_path_sign, adjugate_combinatorial(a, PathSign::literal).adj == oracle.adj);
    r.record(Check::inverse_equivalence, comb.adj == oracle.adj, [&] {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (!(comb.adj(i, j) == oracle.adj(i, j)))
            return "adj(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "): combinatorial " +
                   exact::to_string(comb.adj(i, j)) + ", oracle " + exact::to_string(oracle.adj(i, j));
      return std::string{};
    });
    const auto A = integer_adjacency(g);
    bool identity = true;
    for (int i = 0; i < n && identity; ++i)
      for (int j = 0; j < n && identity; ++j) {
        GaussianInt s{};
        for (int k = 0; k < n; ++k) s += A(i, k) * oracle.adj(k, j);
        identity = s == (i == j ? det : GaussianInt{});
      }
    r.record(Check::adjugate_identity, identity);
    bool herm = det.im == 0;
    for (int i = 0; i < n && herm; ++i)
      for (int j = i; j < n && herm; ++j) herm = oracle.adj(j, i) == oracle.adj(i, j).conj();
    r.record(Check::inverse_hermitian, herm);

    zero_diag = true;
    for (int i = 0; i < n; ++i) zero_diag = zero_diag && oracle.adj(i, i).is_zero();
    unimodular = det.norm() == 1;
    three_colored = true;
    const GaussianInt idet = det * GaussianInt{0, 1};
    for (int i = 0; i < n && three_colored; ++i)
      for (int j = 0; j < n && three_colored; ++j) {
        const GaussianInt x = oracle.adj(i, j);
        three_colored = x.is_zero() || x == det || x == -det || x == idet || x == -idet;
      }
  }

  if (opt.conjugate_check) {
    const ColoredDigraph h = detail::reverse_green(g);
    const auto other = detail::oracle_adjugate(h);
    bool ok = other.det == det && det.im == 0;
    if (ok && nonsingular) ok = other.adj == oracle.adj.map([](const GaussianInt& x) { return x.conj(); });
    if (ok) ok = det_combinatorial(h) == det.re;
    r.record(Check::conjugate_orientation, ok);
  }

  const bool bicyclic = a.shape().is_bicyclic();
  const bool theta = a.shape().tag == ShapeClass::Tag::bicyclic_theta;
  const bool infinity = a.shape().tag == ShapeClass::Tag::bicyclic_infinity;
  const bool modelled = (bicyclic || a.shape().tag == ShapeClass::Tag::unicyclic) && a.in_model();

  if (bicyclic && a.in_model()) {
    const std::int64_t f = det_bicyclic_formula(a);
    r.record(Check::bicyclic_det_formula, GaussianInt{f, 0} == det,
             [&] { return "formula " + std::to_string(f) + ", oracle " + exact::to_string(det); });
  }

  // predicates
  if (modelled) {
    const Verdict ns = nonsingular_predicate(a);
    r.record(Check::nonsingular_verdict, ns.holds == nonsingular, [&] { return detail::verdict_text(ns.holds, nonsingular); });
    bool witnesses_ok = !ns.witness || detail::witness_valid(g, *ns.witness);
    const Verdict um = unimodular_predicate(a);
    r.record(Check::unimodular_verdict, um.holds == unimodular, [&] { return detail::verdict_text(um.holds, unimodular); });
    witnesses_ok = witnesses_ok && (!um.witness || detail::witness_valid(g, *um.witness));
    if (nonsingular && ns.holds) {
      const Verdict zd = zero_diagonal_predicate(a);
      r.record(Check::zero_diagonal_verdict, zd.holds == zero_diag, [&] { return detail::verdict_text(zd.holds, zero_diag); });
      witnesses_ok = witnesses_ok && (!zd.witness || detail::witness_valid(g, *zd.witness));
      const Verdict zd_out = zero_diagonal_predicate(a, PegRule::outward_only);
      r.record(Check::zero_diagonal_outward_pegs, zd_out.holds == zero_diag,
               [&] { return detail::verdict_text(zd_out.holds, zero_diag); });
      if (zero_diag && zd_out.holds) {
        const bool tc_out = inverse_is_3colored(a, PegRule::outward_only).holds;
        r.record(Check::inverse_3colored_outward_pegs, tc_out == three_colored,
                 [&] { return detail::verdict_text(tc_out, three_colored); });
      }
      if (zero_diag && zd.holds) {
        const Verdict tc = inverse_is_3colored(a);
        r.record(Check::inverse_3colored_verdict, tc.holds == three_colored,
                 [&] { return detail::verdict_text(tc.holds, three_colored); });
        witnesses_ok = witnesses_ok && (!tc.witness || detail::witness_valid(g, *tc.witness));
      }
    }
    r.record(Check::witness_validity, witnesses_ok);
  }

  // matchings, independence, pegs
  const std::int64_t m0 = a.matching_count(all);
  const auto& cycles = a.cycles();
  std::vector<std::size_t> indep;
  for (std::size_t k = 0; k < cycles.size(); ++k)
    if (a.is_independent(k)) indep.push_back(k);
  const std::size_t ses = a.elementary_subgraphs(all).size();
  auto signed_parity = [&](std::size_t k) {
    return a.weight(k).re * detail::pow_sign(cycles[k].length() / 2);
  };
  const std::int64_t half_sign = n % 2 == 0 ? detail::pow_sign(n / 2) : 0;

  {
    bool even_indep = false;
    for (std::size_t k : indep) even_indep = even_indep || cycles[k].length() % 2 == 0;
    r.record(Check::multiple_matchings_iff_even_independent, (m0 > 1) == even_indep);
  }
  if (m0 == 0 && std::all_of(cycles.begin(), cycles.end(), [](const Cycle& c) { return c.length() % 2 == 0; })) {
    r.record(Check::no_matching_even_cycles_singular, det.is_zero());
  }

  const auto matchings = a.perfect_matchings(all);
  {
    bool ok = true, literal = true;
    bool any_odd = false;
    for (std::size_t k = 0; k < cycles.size(); ++k) {
      bool zero_somewhere = false;
      for (const auto& m : matchings) {
        const PegSet p = pegs(m, cycles[k]);
        ok = ok && outward_peg_count(p) % 2 == cycles[k].length() % 2;
        zero_somewhere = zero_somewhere || p.count() == 0;
        if (cycles[k].length() % 2) {
          any_odd = true;
          literal = literal && p.count() % 2 == 1;
        }
      }
      if (!matchings.empty()) ok = ok && zero_somewhere == a.is_independent(k);
    }
    if (!matchings.empty()) r.record(Check::peg_parity, ok);
    if (any_odd && !matchings.empty()) r.record(Check::odd_cycle_odd_peg_count, literal);
  }

  if (bicyclic && m0 > 0 && a.in_model()) {
    if (indep.size() == 1) {
      r.record(Check::ses_count_single_independent, ses == 3, [&] { return std::to_string(ses) + " subgraphs"; });
      const std::size_t k = indep.front();
      const std::int64_t expect = a.is_real(k) ? 2 * half_sign * (1 - signed_parity(k)) : 2 * half_sign;
      r.record(Check::closed_form_single_independent, GaussianInt{expect, 0} == det,
               [&] { return "closed form " + std::to_string(expect) + ", oracle " + exact::to_string(det); });
    }
    if (infinity && indep.size() == 2) {
      r.record(Check::ses_count_infinity_both_independent, ses == 9, [&] { return std::to_string(ses) + " subgraphs"; });
      std::int64_t expect = 4 * half_sign;
      for (std::size_t k : indep)
        if (a.is_real(k)) expect = 4 * half_sign * (1 - signed_parity(k));
      r.record(Check::closed_form_infinity_both_independent, GaussianInt{expect, 0} == det,
               [&] { return "closed form " + std::to_string(expect) + ", oracle " + exact::to_string(det); });
    }
    if (theta && indep.size() == 3) {
      r.record(Check::ses_count_theta_all_independent, ses == 6, [&] { return std::to_string(ses) + " subgraphs"; });
      std::optional<std::int64_t> expect;
      for (std::size_t k = 0; k < 3; ++k)
        if (a.is_real(k)) expect = half_sign * (3 - 2 * signed_parity(k));
      r.record(Check::closed_form_theta_all_independent, expect && GaussianInt{*expect, 0} == det, [&] {
        return "closed form " + (expect ? std::to_string(*expect) : std::string("undefined")) + ", oracle " +
               exact::to_string(det);
      });
      bool even = true;
      for (const auto& p : theta_paths(g).paths) even = even && p.vertices.size() % 2 == 0;
      r.record(Check::theta_branch_parity, even);
    }
    if (infinity && (cycles[0].mask & cycles[1].mask)) {
      r.record(Check::infinity_shared_vertex_independence, indep.size() <= 1);
    }
  }
  if (theta && m0 > 1) r.record(Check::theta_independent_count, indep.size() == 1 || indep.size() == 3);
  if (theta && a.in_model()) {
    int real = 0;
    for (std::size_t k = 0; k < cycles.size(); ++k) real += a.is_real(k);
    r.record(Check::theta_single_real_cycle, real == 1);
  }

  const bool invertible = nonsingular && zero_diag;
  if (invertible) {
    std::vector<std::size_t> even_indep;
    for (std::size_t k : indep)
      if (cycles[k].length() % 2 == 0) even_indep.push_back(k);
    if (even_indep.size() == 1 && !a.is_real(even_indep.front())) {
      r.record(Check::imaginary_independent_not_3colored, !three_colored);
    }
    if (bicyclic && m0 >= 2) r.record(Check::multiple_matchings_not_3colored, !three_colored);
    if (bicyclic && m0 == 1) {
      const bool two_peg = std::any_of(cycles.begin(), cycles.end(),
                                       [&](const Cycle& c) { return pegs(matchings.front(), c).count() == 2; });
      if (!two_peg) r.record(Check::no_two_peg_cycle_3colored, three_colored);
    }
  }

  if (bicyclic && nonsingular && m0 > 0) {
    for (std::size_t k = 0; k < cycles.size(); ++k) {
      if (!a.is_real(k) || cycles[k].length() % 2 == 0) continue;
      const bool enough = std::all_of(matchings.begin(), matchings.end(),
                                      [&](const Matching& m) { return pegs(m, cycles[k]).count() >= 2; });
      r.record(Check::zero_diagonal_iff_pegs, enough == zero_diag);
    }
  }

  if (!opt.path_checks) return;

  if (bicyclic) {
    const auto counts = mm_alternating_counts(a);
    int most = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) most = std::max(most, counts(i, j));
    r.record(Check::mm_path_bound, most <= 4, [&] { return "max " + std::to_string(most) + " mm-alternating paths"; });
  }

  if (bicyclic && invertible) {
    bool ok = true;
    for (Vertex u = 0; u < n && ok; ++u)
      for (Vertex v = 0; v < n && ok; ++v) {
        if (u == v) continue;
        for (const auto& p : enumerate_paths(g, u, v)) {
          const bool contributing = a.has_contributing_ses(all & ~p.mask);
          if (contributing != mm_alternating_witness(a, p).has_value()) {
            ok = false;
            break;
          }
        }
      }
    r.record(Check::mm_alternating_iff_contributing, ok);
  }

  if (bicyclic && m0 > 0) {
    for (std::size_t k = 0; k < cycles.size(); ++k) {
      const bool blocked = std::all_of(matchings.begin(), matchings.end(),
                                       [&](const Matching& m) { return pegs(m, cycles[k]).count() >= 3; });
      if (!blocked) continue;
      bool ok = true;
      for (Vertex u = 0; u < n && ok; ++u) {
        if (!(cycles[k].mask & bit(u))) ok = a.has_perfect_matching(all & ~bit(u) & ~cycles[k].mask) == false;
        for (Vertex v = u + 1; v < n && ok; ++v)
          for (const auto& p : enumerate_paths(g, u, v)) {
            if (p.mask & cycles[k].mask) continue;
            if (a.has_perfect_matching(all & ~p.mask & ~cycles[k].mask)) {
              ok = false;
              break;
            }
          }
      }
      r.record(Check::peg_blocking, ok);
    }
  }
}

// ---------------------------------------------------------------------------
// Sweep driver.

struct SweepConfig {
  Family family{Family::unicyclic};
  int max_order{8};
  int min_order{0};  // 0: family minimum
  ColoringMode::Kind kind{ColoringMode::Kind::exhaustive};
  GreenOrientation green{GreenOrientation::canonical};
  std::size_t samples{1000};  // per order, sampled mode
  std::uint64_t seed{1};
  unsigned jobs{1};
  InstanceOptions options{};
};

struct OrderStats {
  int order;
  std::uint64_t skeletons;
  std::uint64_t instances;
};

struct SweepSummary {
  SweepConfig config;
  std::vector<OrderStats> orders;
  std::vector<CheckTally> tallies;

  std::uint64_t instances() const {
    std::uint64_t s = 0;
    for (const auto& o : orders) s += o.instances;
    return s;
  }
  /// Lexicographically first violation of a gating check.
  std::optional<Counterexample> first_counterexample() const {
    std::optional<Counterexample> best;
    for (std::size_t k = 0; k < kCheckCount; ++k) {
      const auto& t = tallies[k];
      if (!info(static_cast<Check>(k)).gating || !t.first) continue;
      if (!best || std::tie(t.first->key, k) < std::tie(best->key, k)) best = t.first;
    }
    return best;
  }
  bool passed() const { return !first_counterexample().has_value(); }
  const CheckTally& tally(Check c) const { return tallies[static_cast<std::size_t>(c)]; }
};

namespace detail {

/// Calls `body(worker)` on `jobs` threads.
inline void run_workers(unsigned jobs, const std::function<void(unsigned)>& body) {
  if (jobs <= 1) {
    body(0);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(body, w);
  for (auto& t : pool) t.join();
}

}  // namespace detail

inline SweepSummary run_sweep(const SweepConfig& cfg) {
  const int lo = std::max(cfg.min_order, minimum_order(cfg.family));
  FamilySpec spec{cfg.family, cfg.max_order,
                  cfg.kind == ColoringMode::Kind::exhaustive ? ColoringMode::exhaustive(cfg.green)
                                                             : ColoringMode::sampled(cfg.samples, cfg.seed),
                  true};
  spec.validate();
  const unsigned jobs = std::max(1u, cfg.jobs);

  SweepSummary summary{cfg, {}, {}};
  Recorder total;
  for (int n = lo; n <= cfg.max_order; ++n) {
    std::vector<Recorder> recorders(jobs);
    std::vector<std::uint64_t> produced(jobs, 0);
    std::uint64_t skeleton_count = 0;

    if (cfg.kind == ColoringMode::Kind::exhaustive) {
      const auto skeletons = generate_skeletons(cfg.family, n);
      skeleton_count = skeletons.size();
      detail::run_workers(jobs, [&](unsigned w) {
        for (std::size_t s = w; s < skeletons.size(); s += jobs) {
          ColoringStream stream(skeletons[s], ColoringMode::exhaustive(cfg.green), true);
          while (auto g = stream.next()) {
            recorders[w].begin({n, s, stream.position()}, *g);
            check_instance(*g, recorders[w], cfg.options);
            ++produced[w];
          }
        }
      });
    } else {
      // one deterministic stream per order; instances drawn up front
      std::seed_seq seq{cfg.seed, static_cast<std::uint64_t>(n)};
      std::mt19937_64 rng(seq);
      std::vector<ColoredDigraph> drawn;
      while (drawn.size() < cfg.samples) {
        const ColoredDigraph skeleton = sample_skeleton(cfg.family, n, rng);
        ColoringStream stream(skeleton, ColoringMode::sampled(1, rng()), true);
        if (auto g = stream.next()) drawn.push_back(std::move(*g));
      }
      skeleton_count = drawn.size();
      detail::run_workers(jobs, [&](unsigned w) {
        for (std::size_t k = w; k < drawn.size(); k += jobs) {
          recorders[w].begin({n, k, 0}, drawn[k]);
          check_instance(drawn[k], recorders[w], cfg.options);
          ++produced[w];
        }
      });
    }

    std::uint64_t count = 0;
    for (unsigned w = 0; w < jobs; ++w) {
      total.merge(recorders[w]);
      count += produced[w];
    }
    summary.orders.push_back({n, skeleton_count, count});
  }
  summary.tallies = total.tallies();
  return summary;
}

}  // namespace tricolor
