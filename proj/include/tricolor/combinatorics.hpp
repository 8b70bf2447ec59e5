#pragma once

// Combinatorial side: perfect matchings, elementary subgraphs, pegs,
// mm-alternating paths, and the determinant/inverse expansions over
// contributing spanning elementary subgraphs.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tricolor/errors.hpp"
#include "tricolor/exact.hpp"
#include "tricolor/graph.hpp"

namespace tricolor {

/// Unordered edge, first < second.
using VertexPair = std::pair<Vertex, Vertex>;

inline VertexPair make_pair_sorted(Vertex a, Vertex b) { return a < b ? VertexPair{a, b} : VertexPair{b, a}; }

struct Matching {
  std::vector<VertexPair> edges;  // sorted
  VertexMask mask{0};

  static Matching of(std::vector<VertexPair> es) {
    for (auto& e : es) e = make_pair_sorted(e.first, e.second);
    std::sort(es.begin(), es.end());
    Matching m{std::move(es), 0};
    for (auto [a, b] : m.edges) m.mask |= bit(a) | bit(b);
    return m;
  }
  bool contains(Vertex a, Vertex b) const {
    return std::binary_search(edges.begin(), edges.end(), make_pair_sorted(a, b));
  }
  /// Partner of v, if covered.
  std::optional<Vertex> mate(Vertex v) const {
    for (auto [a, b] : edges) {
      if (a == v) return b;
      if (b == v) return a;
    }
    return std::nullopt;
  }
  friend bool operator==(const Matching& a, const Matching& b) { return a.edges == b.edges; }
  friend auto operator<=>(const Matching& a, const Matching& b) { return a.edges <=> b.edges; }
};

inline bool is_matching_of(const ColoredDigraph& g, const Matching& m) {
  VertexMask seen = 0;
  for (auto [a, b] : m.edges) {
    if (a < 0 || b >= g.order() || !g.adjacent(a, b)) return false;
    if (seen & (bit(a) | bit(b))) return false;
    seen |= bit(a) | bit(b);
  }
  return true;
}

inline bool is_perfect_matching_of(const ColoredDigraph& g, const Matching& m) {
  return is_matching_of(g, m) && m.mask == g.all();
}

struct ElementarySubgraph {
  std::vector<VertexPair> independent_edges;
  std::vector<Cycle> cycles;
  int singular_count{0};  // independent edges + cycles of weight exactly 1
  VertexMask mask{0};

  int cycle_count() const { return static_cast<int>(cycles.size()); }
  bool is_perfect_matching() const { return cycles.empty(); }
};

/// Per-graph tables shared by the combinatorial routines: the cycle list with
/// weights and the recursive counters over induced vertex subsets.
class Analysis {
 public:
  explicit Analysis(ColoredDigraph g) : g_(std::move(g)) {
    require_enumerable(g_);
    cycles_ = enumerate_cycles(g_);
    weights_.reserve(cycles_.size());
    by_vertex_.assign(g_.order(), {});
    for (std::size_t k = 0; k < cycles_.size(); ++k) {
      weights_.push_back(cycle_weight(g_, cycles_[k]));
      for (Vertex v : cycles_[k].vertices) by_vertex_[v].push_back(k);
    }
    shape_ = classify_shape(g_, cycles_);
  }

  const ColoredDigraph& graph() const { return g_; }
  int order() const { return g_.order(); }
  const std::vector<Cycle>& cycles() const { return cycles_; }
  const GaussianInt& weight(std::size_t k) const { return weights_[k]; }
  bool is_real(std::size_t k) const { return weights_[k].im == 0; }
  const ShapeClass& shape() const { return shape_; }
  bool in_model() const {
    return std::any_of(weights_.begin(), weights_.end(), [](const GaussianInt& w) { return w.im != 0; });
  }

  /// Number of perfect matchings of G[mask].
  std::int64_t matching_count(VertexMask mask) const {
    if (mask == 0) return 1;
    const Vertex v = lowest(mask);
    std::int64_t total = 0;
    for (VertexMask nb = g_.neighbors(v) & mask; nb; nb &= nb - 1) {
      total += matching_count(mask & ~(bit(v) | bit(lowest(nb))));
    }
    return total;
  }

  bool has_perfect_matching(VertexMask mask) const {
    if (mask == 0) return true;
    if (popcount(mask) % 2) return false;
    const Vertex v = lowest(mask);
    for (VertexMask nb = g_.neighbors(v) & mask; nb; nb &= nb - 1) {
      if (has_perfect_matching(mask & ~(bit(v) | bit(lowest(nb))))) return true;
    }
    return false;
  }

  /// Σ (-1)^{|S_H|} 2^{|C_H|} over contributing spanning elementary
  /// subgraphs H of G[mask].
  std::int64_t signed_ses_sum(VertexMask mask) const {
    if (mask == 0) return 1;
    const Vertex v = lowest(mask);
    std::int64_t total = 0;
    for (VertexMask nb = g_.neighbors(v) & mask; nb; nb &= nb - 1) {
      total -= signed_ses_sum(mask & ~(bit(v) | bit(lowest(nb))));
    }
    for (std::size_t k : by_vertex_[v]) {
      if (!is_real(k) || (cycles_[k].mask & ~mask)) continue;
      // weight 1 is a singular component, weight -1 is not
      const std::int64_t factor = weights_[k].re == 1 ? -2 : 2;
      total += factor * signed_ses_sum(mask & ~cycles_[k].mask);
    }
    return total;
  }

  bool has_contributing_ses(VertexMask mask) const {
    if (mask == 0) return true;
    const Vertex v = lowest(mask);
    for (VertexMask nb = g_.neighbors(v) & mask; nb; nb &= nb - 1) {
      if (has_contributing_ses(mask & ~(bit(v) | bit(lowest(nb))))) return true;
    }
    for (std::size_t k : by_vertex_[v]) {
      if (!is_real(k) || (cycles_[k].mask & ~mask)) continue;
      if (has_contributing_ses(mask & ~cycles_[k].mask)) return true;
    }
    return false;
  }

  /// Perfect matchings of G[mask], lexicographic.
  std::vector<Matching> perfect_matchings(VertexMask mask) const {
    std::vector<Matching> out;
    std::vector<VertexPair> chosen;
    auto rec = [&](auto&& self, VertexMask rest) -> void {
      if (rest == 0) {
        out.push_back(Matching::of(chosen));
        return;
      }
      const Vertex v = lowest(rest);
      for (VertexMask nb = g_.neighbors(v) & rest; nb; nb &= nb - 1) {
        const Vertex u = lowest(nb);
        chosen.emplace_back(v, u);
        self(self, rest & ~(bit(v) | bit(u)));
        chosen.pop_back();
      }
    };
    rec(rec, mask);
    std::sort(out.begin(), out.end());
    return out;
  }

  std::optional<Matching> first_perfect_matching(VertexMask mask) const {
    std::vector<VertexPair> chosen;
    auto rec = [&](auto&& self, VertexMask rest) -> bool {
      if (rest == 0) return true;
      const Vertex v = lowest(rest);
      for (VertexMask nb = g_.neighbors(v) & rest; nb; nb &= nb - 1) {
        const Vertex u = lowest(nb);
        chosen.emplace_back(v, u);
        if (self(self, rest & ~(bit(v) | bit(u)))) return true;
        chosen.pop_back();
      }
      return false;
    };
    if (!rec(rec, mask)) return std::nullopt;
    return Matching::of(chosen);
  }

  /// Spanning elementary subgraphs of G[mask], contributing or not.
  std::vector<ElementarySubgraph> elementary_subgraphs(VertexMask mask) const {
    std::vector<ElementarySubgraph> out;
    ElementarySubgraph cur;
    auto rec = [&](auto&& self, VertexMask rest) -> void {
      if (rest == 0) {
        ElementarySubgraph h = cur;
        std::sort(h.independent_edges.begin(), h.independent_edges.end());
        h.mask = mask;
        out.push_back(std::move(h));
        return;
      }
      const Vertex v = lowest(rest);
      for (VertexMask nb = g_.neighbors(v) & rest; nb; nb &= nb - 1) {
        const Vertex u = lowest(nb);
        cur.independent_edges.emplace_back(v, u);
        ++cur.singular_count;
        self(self, rest & ~(bit(v) | bit(u)));
        --cur.singular_count;
        cur.independent_edges.pop_back();
      }
      for (std::size_t k : by_vertex_[v]) {
        if (cycles_[k].mask & ~rest) continue;
        const bool singular = weights_[k] == GaussianInt{1, 0};
        cur.cycles.push_back(cycles_[k]);
        cur.singular_count += singular;
        self(self, rest & ~cycles_[k].mask);
        cur.singular_count -= singular;
        cur.cycles.pop_back();
      }
    };
    rec(rec, mask);
    return out;
  }

  std::optional<std::size_t> index_of(const Cycle& c) const {
    auto it = std::lower_bound(cycles_.begin(), cycles_.end(), c);
    if (it == cycles_.end() || !(*it == c)) return std::nullopt;
    return static_cast<std::size_t>(it - cycles_.begin());
  }

  bool is_independent(std::size_t k) const { return has_perfect_matching(g_.all() & ~cycles_[k].mask); }

 private:
  ColoredDigraph g_;
  std::vector<Cycle> cycles_;
  std::vector<GaussianInt> weights_;
  std::vector<std::vector<std::size_t>> by_vertex_;
  ShapeClass shape_{};
};

// ---------------------------------------------------------------------------
// Matchings, independence, elementary subgraphs.

inline std::vector<Matching> enumerate_perfect_matchings(const Analysis& a) {
  return a.perfect_matchings(a.graph().all());
}
inline std::vector<Matching> enumerate_perfect_matchings(const ColoredDigraph& g) {
  return enumerate_perfect_matchings(Analysis(g));
}

/// G - Γ has a perfect matching (vacuous when Γ spans G).
inline bool is_independent_cycle(const Analysis& a, const Cycle& c) {
  return a.has_perfect_matching(a.graph().all() & ~c.mask);
}
inline bool is_independent_cycle(const ColoredDigraph& g, const Cycle& c) {
  if (!is_cycle_of(g, c)) throw ModelError("not a cycle of the graph");
  return is_independent_cycle(Analysis(g), c);
}

inline std::vector<ElementarySubgraph> enumerate_spanning_elementary(const Analysis& a) {
  return a.elementary_subgraphs(a.graph().all());
}
inline std::vector<ElementarySubgraph> enumerate_spanning_elementary(const ColoredDigraph& g) {
  return enumerate_spanning_elementary(Analysis(g));
}

/// No cycle component has weight ±i.
inline bool is_contributing(const ColoredDigraph& g, const ElementarySubgraph& h) {
  return std::all_of(h.cycles.begin(), h.cycles.end(), [&](const Cycle& c) {
    return weight_class(cycle_weight(g, c)) == WeightClass::real;
  });
}

// ---------------------------------------------------------------------------
// Determinant expansions.

inline std::int64_t sign_power(int e) { return (e % 2 == 0) ? 1 : -1; }

/// Σ_{H contributing} (-1)^{n-|S_H|} 2^{|C_H|}.
inline std::int64_t det_combinatorial(const Analysis& a) {
  return sign_power(a.order()) * a.signed_ses_sum(a.graph().all());
}
inline std::int64_t det_combinatorial(const ColoredDigraph& g) { return det_combinatorial(Analysis(g)); }

/// Bicyclic reduction m0(-1)^{n/2} - 2 Σ m1_k Re w(Γ_k) (-1)^{(n+|Γ_k|)/2}.
inline std::int64_t det_bicyclic_formula(const Analysis& a) {
  if (!a.shape().is_bicyclic()) throw ShapeError("det_bicyclic_formula requires a bicyclic graph");
  if (!a.in_model()) throw ModelError("det_bicyclic_formula requires a cycle of weight ±i");
  const int n = a.order();
  const VertexMask all = a.graph().all();
  std::int64_t det = n % 2 == 0 ? a.matching_count(all) * sign_power(n / 2) : 0;
  for (std::size_t k = 0; k < a.cycles().size(); ++k) {
    const int len = a.cycles()[k].length();
    if ((n + len) % 2 != 0) continue;  // odd remainder: m1 = 0
    const std::int64_t m1 = a.matching_count(all & ~a.cycles()[k].mask);
    det -= 2 * m1 * a.weight(k).re * sign_power((n + len) / 2);
  }
  return det;
}
inline std::int64_t det_bicyclic_formula(const ColoredDigraph& g) { return det_bicyclic_formula(Analysis(g)); }

// ---------------------------------------------------------------------------
// Pegs.

struct PegSet {
  Cycle cycle;
  Matching matching;
  std::vector<VertexPair> pegs;

  int count() const { return static_cast<int>(pegs.size()); }
};

/// Whether a matching chord of Γ counts as a peg.
enum class PegRule { with_chords, outward_only };

/// Matching edges that are chords of Γ or have exactly one endpoint on Γ.
inline PegSet pegs(const Matching& m, const Cycle& c, PegRule rule = PegRule::with_chords) {
  PegSet out{c, m, {}};
  for (auto [a, b] : m.edges) {
    const bool ina = c.contains(a), inb = c.contains(b);
    const bool chord = ina && inb && !c.has_edge(a, b);
    if (ina != inb || (chord && rule == PegRule::with_chords)) out.pegs.emplace_back(a, b);
  }
  return out;
}

inline PegSet pegs(const ColoredDigraph& g, const Matching& m, const Cycle& c, PegRule rule = PegRule::with_chords) {
  if (!is_perfect_matching_of(g, m)) throw ModelError("pegs: not a perfect matching of the graph");
  if (!is_cycle_of(g, c)) throw ModelError("pegs: not a cycle of the graph");
  return pegs(m, c, rule);
}

/// Pegs with exactly one endpoint on Γ.
inline int outward_peg_count(const PegSet& p) {
  return static_cast<int>(std::count_if(p.pegs.begin(), p.pegs.end(), [&](const VertexPair& e) {
    return p.cycle.contains(e.first) != p.cycle.contains(e.second);
  }));
}

// ---------------------------------------------------------------------------
// mm-alternating paths.

struct AlternatingPath {
  Path path;
  Matching witness;
};

/// Alternates with `m`, first and last edges in `m`; `m` must be perfect.
inline bool is_mm_alternating(const ColoredDigraph& g, const Path& p, const Matching& m) {
  if (!is_path_of(g, p) || p.length() < 1 || p.length() % 2 == 0) return false;
  if (!is_perfect_matching_of(g, m)) return false;
  for (int k = 0; k < p.length(); ++k) {
    if (m.contains(p.vertices[k], p.vertices[k + 1]) != (k % 2 == 0)) return false;
  }
  return true;
}

/// A perfect matching relative to which `p` is mm-alternating, if any.
inline std::optional<Matching> mm_alternating_witness(const Analysis& a, const Path& p) {
  if (p.length() < 1 || p.length() % 2 == 0) return std::nullopt;
  auto rest = a.first_perfect_matching(a.graph().all() & ~p.mask);
  if (!rest) return std::nullopt;
  std::vector<VertexPair> edges = rest->edges;
  for (int k = 0; k < p.length(); k += 2) edges.emplace_back(p.vertices[k], p.vertices[k + 1]);
  return Matching::of(std::move(edges));
}

inline std::vector<AlternatingPath> mm_alternating_paths(const Analysis& a, Vertex u, Vertex v) {
  if (u == v) throw std::invalid_argument("mm_alternating_paths requires distinct endpoints");
  std::vector<AlternatingPath> out;
  for (auto& p : enumerate_paths(a.graph(), u, v)) {
    if (auto w = mm_alternating_witness(a, p)) out.push_back({std::move(p), std::move(*w)});
  }
  return out;
}
inline std::vector<AlternatingPath> mm_alternating_paths(const ColoredDigraph& g, Vertex u, Vertex v) {
  return mm_alternating_paths(Analysis(g), u, v);
}

/// Number of mm-alternating paths between every ordered pair, by path DFS.
inline exact::Matrix<int> mm_alternating_counts(const Analysis& a) {
  const ColoredDigraph& g = a.graph();
  const int n = g.order();
  exact::Matrix<int> counts(n, 0);
  std::vector<Vertex> stack;
  auto dfs = [&](auto&& self, Vertex v, VertexMask used) -> void {
    const int len = static_cast<int>(stack.size()) - 1;
    if (len % 2 == 1) {
      // odd-position edges cover V(P); the rest needs a perfect matching
      if (a.has_perfect_matching(g.all() & ~used)) ++counts(stack.front(), v);
    }
    for (VertexMask nb = g.neighbors(v) & ~used; nb; nb &= nb - 1) {
      const Vertex w = lowest(nb);
      stack.push_back(w);
      self(self, w, used | bit(w));
      stack.pop_back();
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    stack.assign(1, s);
    dfs(dfs, s, bit(s));
  }
  return counts;
}

// ---------------------------------------------------------------------------
// Combinatorial inverse.

/// Sign attached to an i ⇝ j path: the cofactor sign (-1)^{n-1}, or the
/// (-1)^{n+|P|} of the textbook statement, which differs on even |P|.
enum class PathSign { cofactor, literal };

/// det A(G) and adj(A) = det * A^{-1}, both from path/subgraph expansions.
inline exact::Adjugate<std::int64_t> adjugate_combinatorial(const Analysis& a, PathSign sign = PathSign::cofactor) {
  const ColoredDigraph& g = a.graph();
  const int n = g.order();
  const VertexMask all = g.all();
  exact::Adjugate<std::int64_t> out{GaussianInt{det_combinatorial(a), 0}, exact::Matrix<GaussianInt>(n)};
  for (Vertex i = 0; i < n; ++i) {
    // det A(G)_{ii} = det of G - i
    out.adj(i, i) = GaussianInt{sign_power(n - 1) * a.signed_ses_sum(all & ~bit(i)), 0};
  }
  // b_ij * det = Σ_P w(P) (-1)^{n-1} Σ_H (-1)^{|S_H|} 2^{|C_H|}, H over G - P
  std::vector<Vertex> stack;
  auto dfs = [&](auto&& self, Vertex v, VertexMask used, const GaussianInt& w) -> void {
    const int len = static_cast<int>(stack.size()) - 1;
    if (len > 0) {
      const std::int64_t s = a.signed_ses_sum(all & ~used);
      if (s != 0) {
        const std::int64_t e = sign == PathSign::cofactor ? sign_power(n - 1) : sign_power(n + len);
        out.adj(stack.front(), v) += w * GaussianInt{e * s, 0};
      }
    }
    for (VertexMask nb = g.neighbors(v) & ~used; nb; nb &= nb - 1) {
      const Vertex x = lowest(nb);
      stack.push_back(x);
      self(self, x, used | bit(x), w * g.weight(v, x));
      stack.pop_back();
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    stack.assign(1, s);
    dfs(dfs, s, bit(s), GaussianInt{1, 0});
  }
  return out;
}

/// i ⇝ j paths P for which G - P has a contributing spanning elementary subgraph.
inline std::vector<Path> inverse_entry_paths(const Analysis& a, Vertex i, Vertex j) {
  std::vector<Path> out;
  for (auto& p : enumerate_paths(a.graph(), i, j)) {
    if (a.has_contributing_ses(a.graph().all() & ~p.mask)) out.push_back(std::move(p));
  }
  return out;
}

inline exact::GaussianMatrix to_inverse(const exact::Adjugate<std::int64_t>& adj) {
  if (adj.det.is_zero()) throw SingularError("graph is singular");
  const exact::GaussianRational det(adj.det);
  return adj.adj.map([&](const GaussianInt& x) { return exact::GaussianRational(x) / det; });
}

inline exact::GaussianMatrix inverse_combinatorial(const Analysis& a) { return to_inverse(adjugate_combinatorial(a)); }
inline exact::GaussianMatrix inverse_combinatorial(const ColoredDigraph& g) {
  return inverse_combinatorial(Analysis(g));
}

/// Every principal minor of A(G) vanishes (oracle route).
inline bool zero_diagonal(const ColoredDigraph& g) {
  const auto a = adjacency_matrix(g);
  if (exact::det_exact(a.matrix()).is_zero()) throw SingularError("zero_diagonal requires a non-singular graph");
  for (int i = 0; i < g.order(); ++i) {
    if (!exact::principal_minor(a.matrix(), i).is_zero()) return false;
  }
  return true;
}

}  // namespace tricolor
