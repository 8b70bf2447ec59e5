#pragma once

// Small unicyclic and bicyclic skeletons and their colorings, for the
// verification sweep.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "tricolor/errors.hpp"
#include "tricolor/combinatorics.hpp"
#include "tricolor/graph.hpp"

namespace tricolor {

enum class Family { unicyclic, bicyclic_infinity, bicyclic_theta };

inline std::string to_string(Family f) {
  switch (f) {
    case Family::unicyclic: return "unicyclic";
    case Family::bicyclic_infinity: return "bicyclic_infinity";
    case Family::bicyclic_theta: return "bicyclic_theta";
  }
  return "?";
}

inline ShapeClass::Tag shape_tag(Family f) {
  switch (f) {
    case Family::unicyclic: return ShapeClass::Tag::unicyclic;
    case Family::bicyclic_infinity: return ShapeClass::Tag::bicyclic_infinity;
    case Family::bicyclic_theta: return ShapeClass::Tag::bicyclic_theta;
  }
  return ShapeClass::Tag::tree;
}

/// Smallest order the family admits.
inline int minimum_order(Family f) {
  switch (f) {
    case Family::unicyclic: return 3;
    case Family::bicyclic_theta: return 4;
    case Family::bicyclic_infinity: return 5;
  }
  return 0;
}

/// Green arcs: both orientations per edge, or only u -> v with u < v.
enum class GreenOrientation { both, canonical };

struct ColoringMode {
  enum class Kind { exhaustive, sampled };
  Kind kind{Kind::exhaustive};
  std::size_t count{0};  // sampled only
  std::uint64_t seed{0};
  GreenOrientation green{GreenOrientation::both};

  static ColoringMode exhaustive(GreenOrientation g = GreenOrientation::both) {
    return {Kind::exhaustive, 0, 0, g};
  }
  static ColoringMode sampled(std::size_t count, std::uint64_t seed) {
    return {Kind::sampled, count, seed, GreenOrientation::both};
  }
};

inline constexpr int kMaxExhaustiveOrder = 12;
inline constexpr int kMaxSampledOrder = 16;

struct FamilySpec {
  Family shape{Family::unicyclic};
  int order{3};
  ColoringMode coloring{};
  bool require_in_model{true};

  void validate() const {
    const int limit = coloring.kind == ColoringMode::Kind::exhaustive ? kMaxExhaustiveOrder : kMaxSampledOrder;
    if (order > limit) {
      throw LimitError("order " + std::to_string(order) + " exceeds the " +
                       (coloring.kind == ColoringMode::Kind::exhaustive ? "exhaustive" : "sampled") +
                       " limit of " + std::to_string(limit));
    }
    if (order < 1) throw LimitError("order must be positive");
  }
};

// ---------------------------------------------------------------------------
// Canonical form of an uncolored graph by individualization-refinement.

namespace detail {

using Partition = std::vector<int>;  // vertex -> cell rank

inline Partition refine(const std::vector<VertexMask>& adj, Partition colors) {
  const int n = static_cast<int>(adj.size());
  int cells = static_cast<int>(std::set<int>(colors.begin(), colors.end()).size());
  for (;;) {
    std::vector<std::pair<std::vector<int>, int>> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> key{colors[v]};
      std::vector<int> nb;
      for (VertexMask m = adj[v]; m; m &= m - 1) nb.push_back(colors[lowest(m)]);
      std::sort(nb.begin(), nb.end());
      key.insert(key.end(), nb.begin(), nb.end());
      sig[v] = {std::move(key), v};
    }
    std::vector<std::vector<int>> keys;
    for (auto& s : sig) keys.push_back(s.first);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    Partition next(n);
    for (int v = 0; v < n; ++v) {
      next[v] = static_cast<int>(std::lower_bound(keys.begin(), keys.end(), sig[v].first) - keys.begin());
    }
    const int now = static_cast<int>(keys.size());
    colors = std::move(next);
    if (now == cells) return colors;
    cells = now;
  }
}

inline void canonical_search(const std::vector<VertexMask>& adj, const Partition& start,
                             std::vector<VertexPair>& best, bool& have_best) {
  const int n = static_cast<int>(adj.size());
  const Partition colors = refine(adj, start);
  std::vector<int> size(n, 0);
  for (int c : colors) ++size[c];
  int target = -1;
  for (int c = 0; c < n; ++c) {
    if (size[c] > 1) {
      target = c;
      break;
    }
  }
  if (target < 0) {
    std::vector<VertexPair> form;
    for (int u = 0; u < n; ++u)
      for (VertexMask m = adj[u]; m; m &= m - 1) {
        const int v = lowest(m);
        if (u < v) form.push_back(make_pair_sorted(colors[u], colors[v]));
      }
    std::sort(form.begin(), form.end());
    if (!have_best || form < best) {
      best = std::move(form);
      have_best = true;
    }
    return;
  }
  for (int v = 0; v < n; ++v) {
    if (colors[v] != target) continue;
    Partition next(n);
    for (int x = 0; x < n; ++x) next[x] = 2 * colors[x] + (colors[x] == target && x != v ? 1 : 0);
    canonical_search(adj, next, best, have_best);
  }
}

}  // namespace detail

/// Isomorphism-invariant edge list of the underlying simple graph.
inline std::vector<VertexPair> canonical_form(int order, const std::vector<VertexPair>& edges) {
  std::vector<VertexMask> adj(order, 0);
  for (auto [a, b] : edges) {
    adj[a] |= bit(b);
    adj[b] |= bit(a);
  }
  std::vector<VertexPair> best;
  bool have = false;
  detail::canonical_search(adj, detail::Partition(order, 0), best, have);
  return best;
}

inline std::vector<VertexPair> canonical_form(const ColoredDigraph& g) {
  std::vector<VertexPair> edges;
  for (const auto& e : g.edges()) edges.emplace_back(e.u, e.v);
  return canonical_form(g.order(), edges);
}

inline ColoredDigraph skeleton_from(int order, const std::vector<VertexPair>& edges) {
  std::vector<Edge> es;
  for (auto [a, b] : edges) es.push_back({a, b, Color::red});
  return ColoredDigraph(order, std::move(es));
}

namespace detail {

inline void add_cycle(std::vector<VertexPair>& edges, const std::vector<Vertex>& vs) {
  for (std::size_t k = 0; k < vs.size(); ++k) edges.emplace_back(vs[k], vs[(k + 1) % vs.size()]);
}

/// Skeletons of minimum degree two (the 2-cores) of the given order.
inline std::vector<std::vector<VertexPair>> core_skeletons(Family f, int n) {
  std::vector<std::vector<VertexPair>> out;
  auto range = [](Vertex from, int count) {
    std::vector<Vertex> v(count);
    for (int k = 0; k < count; ++k) v[k] = from + k;
    return v;
  };
  switch (f) {
    case Family::unicyclic: {
      std::vector<VertexPair> e;
      add_cycle(e, range(0, n));
      out.push_back(e);
      break;
    }
    case Family::bicyclic_theta: {
      // branch paths of lengths a <= b <= c; at most one of length 1
      for (int a = 1; a <= n; ++a)
        for (int b = std::max(a, 2); b <= n; ++b) {
          const int c = n + 1 - a - b;
          if (c < b) continue;
          std::vector<VertexPair> e;
          Vertex next = 2;
          for (int len : {a, b, c}) {
            Vertex prev = 0;
            for (int k = 1; k < len; ++k) {
              e.emplace_back(prev, next);
              prev = next++;
            }
            e.emplace_back(prev, 1);
          }
          out.push_back(e);
        }
      break;
    }
    case Family::bicyclic_infinity: {
      for (int p = 3; p <= n; ++p)
        for (int q = p; q <= n; ++q) {
          // figure eight: p + q - 1 = n
          if (p + q - 1 == n) {
            std::vector<VertexPair> e;
            add_cycle(e, range(0, p));
            std::vector<Vertex> second{0};
            for (Vertex v : range(p, q - 1)) second.push_back(v);
            add_cycle(e, second);
            out.push_back(e);
          }
          // dumbbell: p + q + L - 1 = n, L >= 1
          const int len = n + 1 - p - q;
          if (len >= 1) {
            std::vector<VertexPair> e;
            add_cycle(e, range(0, p));
            add_cycle(e, range(p, q));
            Vertex prev = 0;
            Vertex next = p + q;
            for (int k = 1; k < len; ++k) {
              e.emplace_back(prev, next);
              prev = next++;
            }
            e.emplace_back(prev, p);
            out.push_back(e);
          }
        }
      break;
    }
  }
  return out;
}

inline std::vector<std::vector<VertexPair>> skeleton_forms(Family f, int n,
                                                           std::map<int, std::vector<std::vector<VertexPair>>>& memo) {
  if (n < minimum_order(f)) return {};
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  std::set<std::vector<VertexPair>> forms;
  for (const auto& e : core_skeletons(f, n)) forms.insert(canonical_form(n, e));
  for (const auto& smaller : skeleton_forms(f, n - 1, memo)) {
    for (Vertex v = 0; v < n - 1; ++v) {
      auto e = smaller;
      e.emplace_back(v, n - 1);
      forms.insert(canonical_form(n, e));
    }
  }
  std::vector<std::vector<VertexPair>> out(forms.begin(), forms.end());
  memo[n] = out;
  return out;
}

}  // namespace detail

/// One representative per isomorphism class of connected graphs of the
/// family and order, all edges red, in canonical-form order.
inline std::vector<ColoredDigraph> generate_skeletons(Family f, int n) {
  if (n > kMaxSampledOrder) throw LimitError("skeleton order " + std::to_string(n) + " exceeds " + std::to_string(kMaxSampledOrder));
  std::map<int, std::vector<std::vector<VertexPair>>> memo;
  std::vector<ColoredDigraph> out;
  for (const auto& form : detail::skeleton_forms(f, n, memo)) out.push_back(skeleton_from(n, form));
  return out;
}

inline std::vector<ColoredDigraph> generate_skeletons(const FamilySpec& spec) {
  spec.validate();
  return generate_skeletons(spec.shape, spec.order);
}

/// Uniformly random labeled skeleton of the family: a Prüfer tree plus
/// extra edges, rejected until the shape matches.
template <class Rng>
ColoredDigraph sample_skeleton(Family f, int n, Rng& rng) {
  if (n < minimum_order(f)) throw LimitError("order below the family minimum");
  if (n > kMaxSampledOrder) throw LimitError("sampled order exceeds " + std::to_string(kMaxSampledOrder));
  const int extra = f == Family::unicyclic ? 1 : 2;
  auto draw = [&](int bound) { return static_cast<int>(rng() % static_cast<std::uint64_t>(bound)); };
  for (;;) {
    std::vector<int> pruefer(n - 2);
    for (auto& x : pruefer) x = draw(n);
    std::vector<int> degree(n, 1);
    for (int x : pruefer) ++degree[x];
    std::vector<VertexPair> edges;
    for (int x : pruefer) {
      int leaf = 0;
      while (degree[leaf] != 1) ++leaf;
      edges.push_back(make_pair_sorted(leaf, x));
      --degree[leaf];
      --degree[x];
    }
    int u = -1, w = -1;
    for (int v = 0; v < n; ++v) {
      if (degree[v] == 1) (u < 0 ? u : w) = v;
    }
    edges.push_back(make_pair_sorted(u, w));
    std::set<VertexPair> present(edges.begin(), edges.end());
    bool ok = true;
    for (int k = 0; k < extra && ok; ++k) {
      const int a = draw(n), b = draw(n);
      if (a == b || present.count(make_pair_sorted(a, b))) {
        ok = false;
        break;
      }
      present.insert(make_pair_sorted(a, b));
      edges.push_back(make_pair_sorted(a, b));
    }
    if (!ok) continue;
    ColoredDigraph g = skeleton_from(n, edges);
    if (classify_shape(g).tag == shape_tag(f)) return g;
  }
}

// ---------------------------------------------------------------------------
// Colorings.

namespace detail {

/// Edge indices of each cycle of the skeleton.
inline std::vector<std::vector<int>> cycle_edge_sets(const ColoredDigraph& s) {
  std::vector<std::vector<int>> out;
  for (const auto& c : enumerate_cycles(s)) {
    std::vector<int> idx;
    for (int k = 0; k < c.length(); ++k) {
      const Vertex a = c.vertices[k], b = c.vertices[(k + 1) % c.length()];
      for (int e = 0; e < s.size(); ++e) {
        const auto& ed = s.edges()[e];
        if ((ed.u == a && ed.v == b) || (ed.u == b && ed.v == a)) idx.push_back(e);
      }
    }
    out.push_back(std::move(idx));
  }
  return out;
}

}  // namespace detail

/// Pull-based, restartable stream of colorings of one skeleton. Digit per
/// edge: 0 red, 1 blue, 2 green u->v (u < v), 3 green v->u.
class ColoringStream {
 public:
  ColoringStream(ColoredDigraph skeleton, ColoringMode mode, bool require_in_model = true)
      : skeleton_(std::move(skeleton)), mode_(mode), require_in_model_(require_in_model) {
    require_enumerable(skeleton_);
    cycles_ = detail::cycle_edge_sets(skeleton_);
    base_ = mode_.green == GreenOrientation::both ? 4 : 3;
    total_ = 1;
    for (int e = 0; e < skeleton_.size(); ++e) {
      if (total_ > (std::uint64_t{1} << 60) / base_) throw LimitError("too many colorings to enumerate");
      total_ *= base_;
    }
    reset();
  }

  void reset() {
    cursor_ = 0;
    emitted_ = 0;
    rng_.seed(mode_.seed);
  }

  /// Exhaustive index (or draw index) of the coloring last returned.
  std::uint64_t position() const { return last_; }
  std::uint64_t total_colorings() const { return total_; }

  std::optional<ColoredDigraph> next() {
    if (mode_.kind == ColoringMode::Kind::exhaustive) {
      while (cursor_ < total_) {
        const std::uint64_t code = cursor_++;
        if (!accepted(code)) continue;
        last_ = code;
        ++emitted_;
        return build(code);
      }
      return std::nullopt;
    }
    if (emitted_ >= mode_.count || (require_in_model_ && cycles_.empty())) return std::nullopt;
    for (;;) {
      const std::uint64_t code = rng_() % total_;
      ++cursor_;
      if (!accepted(code)) continue;
      last_ = code;
      ++emitted_;
      return build(code);
    }
  }

  ColoredDigraph build(std::uint64_t code) const {
    std::vector<Edge> edges;
    for (const auto& e : skeleton_.edges()) {
      const int digit = static_cast<int>(code % base_);
      code /= base_;
      const Vertex a = std::min(e.u, e.v), b = std::max(e.u, e.v);
      switch (digit) {
        case 0: edges.push_back({a, b, Color::red}); break;
        case 1: edges.push_back({a, b, Color::blue}); break;
        case 2: edges.push_back({a, b, Color::green}); break;
        default: edges.push_back({b, a, Color::green}); break;
      }
    }
    return ColoredDigraph(skeleton_.order(), std::move(edges));
  }

 private:
  /// A cycle has weight ±i iff it carries an odd number of green edges.
  bool accepted(std::uint64_t code) const {
    if (!require_in_model_) return true;
    std::vector<int> digits(skeleton_.size());
    for (auto& d : digits) {
      d = static_cast<int>(code % base_);
      code /= base_;
    }
    for (const auto& cyc : cycles_) {
      int greens = 0;
      for (int e : cyc) greens += digits[e] >= 2;
      if (greens % 2) return true;
    }
    return false;
  }

  ColoredDigraph skeleton_;
  ColoringMode mode_;
  bool require_in_model_;
  std::vector<std::vector<int>> cycles_;
  std::uint64_t base_{4};
  std::uint64_t total_{1};
  std::uint64_t cursor_{0};
  std::uint64_t emitted_{0};
  std::uint64_t last_{0};
  std::mt19937_64 rng_;
};

inline std::vector<ColoredDigraph> colorize(const ColoredDigraph& skeleton, ColoringMode mode,
                                            bool require_in_model = true) {
  ColoringStream s(skeleton, mode, require_in_model);
  std::vector<ColoredDigraph> out;
  while (auto g = s.next()) out.push_back(std::move(*g));
  return out;
}

}  // namespace tricolor
