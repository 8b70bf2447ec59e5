#pragma once

// 3-colored digraphs: red edges weigh +1, blue edges -1, and a green arc
// (u,v) weighs i on u->v (so -i on v->u).

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "tricolor/errors.hpp"
#include "tricolor/exact.hpp"

namespace tricolor {

using Vertex = int;  // 0-based internally, 1-based in text formats
using VertexMask = std::uint32_t;
using exact::GaussianInt;

inline constexpr int kMaxOrder = 32;
/// Bound for every exponential enumeration.
inline constexpr int kMaxEnumerableOrder = 16;

inline VertexMask bit(Vertex v) { return VertexMask{1} << v; }
inline int popcount(VertexMask m) { return std::popcount(m); }
inline Vertex lowest(VertexMask m) { return std::countr_zero(m); }

enum class Color : std::uint8_t { red, blue, green };

inline char color_letter(Color c) {
  switch (c) {
    case Color::red: return 'r';
    case Color::blue: return 'b';
    case Color::green: return 'g';
  }
  return '?';
}

/// Red/blue edges are stored with u < v; green arcs keep their direction.
struct Edge {
  Vertex u;
  Vertex v;
  Color color;

  friend bool operator==(const Edge&, const Edge&) = default;
};

class ColoredDigraph {
 public:
  ColoredDigraph(int order, std::vector<Edge> edges) : order_(order), edges_(std::move(edges)) {
    if (order_ < 1) throw ModelError("graph must have at least one vertex");
    if (order_ > kMaxOrder) {
      throw LimitError("graph order " + std::to_string(order_) + " exceeds " +
                       std::to_string(kMaxOrder));
    }
    adjacency_.assign(order_, 0);
    weights_.assign(static_cast<std::size_t>(order_) * order_, GaussianInt{});
    for (auto& e : edges_) {
      if (e.u < 0 || e.u >= order_ || e.v < 0 || e.v >= order_) {
        throw ModelError("edge " + std::to_string(e.u + 1) + " " + std::to_string(e.v + 1) +
                         " references a vertex outside 1.." + std::to_string(order_));
      }
      if (e.u == e.v) throw ModelError("self-loop at vertex " + std::to_string(e.u + 1));
      if (adjacency_[e.u] & bit(e.v)) {
        throw ModelError("duplicate edge between " + std::to_string(std::min(e.u, e.v) + 1) +
                         " and " + std::to_string(std::max(e.u, e.v) + 1));
      }
      if (e.color != Color::green && e.u > e.v) std::swap(e.u, e.v);
      adjacency_[e.u] |= bit(e.v);
      adjacency_[e.v] |= bit(e.u);
      GaussianInt w;
      switch (e.color) {
        case Color::red: w = {1, 0}; break;
        case Color::blue: w = {-1, 0}; break;
        case Color::green: w = {0, 1}; break;
      }
      weight_ref(e.u, e.v) = w;
      weight_ref(e.v, e.u) = w.conj();
    }
    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
      auto key = [](const Edge& e) { return std::pair{std::min(e.u, e.v), std::max(e.u, e.v)}; };
      return key(a) < key(b);
    });
    if (!is_connected()) throw ModelError("underlying graph is disconnected");
  }

  int order() const { return order_; }
  int size() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  VertexMask all() const { return order_ == 32 ? ~VertexMask{0} : (VertexMask{1} << order_) - 1; }
  VertexMask neighbors(Vertex v) const { return adjacency_[v]; }
  bool adjacent(Vertex u, Vertex v) const { return (adjacency_[u] & bit(v)) != 0; }
  int degree(Vertex v) const { return popcount(adjacency_[v]); }

  /// Adjacency entry a_{uv}.
  const GaussianInt& weight(Vertex u, Vertex v) const {
    return weights_[static_cast<std::size_t>(u) * order_ + v];
  }

  /// |E| - |V| + 1.
  int cyclomatic_number() const { return size() - order_ + 1; }

  friend bool operator==(const ColoredDigraph& a, const ColoredDigraph& b) {
    return a.order_ == b.order_ && a.edges_ == b.edges_;
  }

 private:
  GaussianInt& weight_ref(Vertex u, Vertex v) {
    return weights_[static_cast<std::size_t>(u) * order_ + v];
  }

  bool is_connected() const {
    VertexMask seen = 1, frontier = 1;
    while (frontier) {
      VertexMask next = 0;
      for (VertexMask f = frontier; f; f &= f - 1) next |= adjacency_[lowest(f)];
      frontier = next & ~seen;
      seen |= next;
    }
    return seen == all();
  }

  int order_;
  std::vector<Edge> edges_;
  std::vector<VertexMask> adjacency_;
  std::vector<GaussianInt> weights_;
};

inline void require_enumerable(const ColoredDigraph& g) {
  if (g.order() > kMaxEnumerableOrder) {
    throw LimitError("order " + std::to_string(g.order()) + " exceeds the enumeration bound " +
                     std::to_string(kMaxEnumerableOrder));
  }
}

// ---------------------------------------------------------------------------
// Text format.

/// Parses `n=<count>` followed by `<u> <v> <c>` lines, c in {r,b,g}.
/// `#` starts a comment; `;` separates lines like a newline does.
inline ColoredDigraph parse_graph(std::string_view text) {
  // (physical line number, statement) after comments are removed
  std::vector<std::pair<int, std::string>> lines;
  {
    int physical = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      ++physical;
      std::string_view body = text.substr(start, end - start);
      body = body.substr(0, body.find('#'));
      std::size_t from = 0;
      for (;;) {
        const std::size_t semi = body.find(';', from);
        lines.emplace_back(physical, std::string(body.substr(from, semi == std::string_view::npos ? semi : semi - from)));
        if (semi == std::string_view::npos) break;
        from = semi + 1;
      }
      start = end + 1;
    }
  }

  std::optional<int> order;
  std::vector<Edge> edges;
  for (const auto& entry : lines) {
    const int line_no = entry.first;
    std::istringstream in(entry.second);
    std::string first;
    if (!(in >> first)) continue;
    auto fail = [&](const std::string& why) {
      return ParseError("line " + std::to_string(line_no) + ": " + why);
    };
    if (!order) {
      // accept "n=6", "n = 6", "n= 6"
      std::string rest;
      std::getline(in, rest);
      std::string header = first + rest;
      header.erase(std::remove_if(header.begin(), header.end(), ::isspace), header.end());
      if (header.rfind("n=", 0) != 0) throw fail("expected header 'n=<count>'");
      const std::string count = header.substr(2);
      if (count.empty() || !std::all_of(count.begin(), count.end(), ::isdigit) || count.size() > 6) {
        throw fail("invalid vertex count '" + count + "'");
      }
      order = std::stoi(count);
      continue;
    }
    std::string second, color, extra;
    if (!(in >> second >> color)) throw fail("expected '<u> <v> <color>'");
    if (in >> extra) throw fail("unexpected trailing token '" + extra + "'");
    auto vertex = [&](const std::string& s) {
      if (s.empty() || s.size() > 6 || !std::all_of(s.begin(), s.end(), ::isdigit)) {
        throw fail("invalid vertex '" + s + "'");
      }
      return std::stoi(s) - 1;
    };
    Color c;
    if (color == "r") {
      c = Color::red;
    } else if (color == "b") {
      c = Color::blue;
    } else if (color == "g") {
      c = Color::green;
    } else {
      throw fail("unknown color '" + color + "' (expected r, b or g)");
    }
    edges.push_back({vertex(first), vertex(second), c});
  }
  if (!order) throw ParseError("missing header 'n=<count>'");
  return ColoredDigraph(*order, std::move(edges));
}

inline std::string serialize_graph(const ColoredDigraph& g) {
  std::string out = "n=" + std::to_string(g.order()) + "\n";
  for (const auto& e : g.edges()) {
    out += std::to_string(e.u + 1) + " " + std::to_string(e.v + 1) + " " + color_letter(e.color) + "\n";
  }
  return out;
}

inline exact::HermitianMatrix adjacency_matrix(const ColoredDigraph& g) {
  exact::GaussianMatrix m(g.order());
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = 0; v < g.order(); ++v) m(u, v) = exact::GaussianRational(g.weight(u, v));
  return exact::HermitianMatrix(std::move(m));
}

/// Adjacency matrix as Gaussian integers, for the fast oracle kernels.
inline exact::Matrix<GaussianInt> integer_adjacency(const ColoredDigraph& g) {
  exact::Matrix<GaussianInt> m(g.order());
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = 0; v < g.order(); ++v) m(u, v) = g.weight(u, v);
  return m;
}

// ---------------------------------------------------------------------------
// Cycles and paths.

/// Simple cycle, canonical: lowest vertex first, then its smaller neighbour.
struct Cycle {
  std::vector<Vertex> vertices;
  VertexMask mask{0};

  static Cycle canonical(std::vector<Vertex> seq) {
    auto lo = std::min_element(seq.begin(), seq.end());
    std::rotate(seq.begin(), lo, seq.end());
    if (seq.size() > 2 && seq.back() < seq[1]) std::reverse(seq.begin() + 1, seq.end());
    Cycle c{std::move(seq), 0};
    for (Vertex v : c.vertices) c.mask |= bit(v);
    return c;
  }

  int length() const { return static_cast<int>(vertices.size()); }
  bool contains(Vertex v) const { return (mask & bit(v)) != 0; }
  /// True when {a,b} is one of the cycle's edges.
  bool has_edge(Vertex a, Vertex b) const {
    const int n = length();
    for (int k = 0; k < n; ++k) {
      Vertex x = vertices[k], y = vertices[(k + 1) % n];
      if ((x == a && y == b) || (x == b && y == a)) return true;
    }
    return false;
  }

  friend bool operator==(const Cycle& a, const Cycle& b) { return a.vertices == b.vertices; }
  friend auto operator<=>(const Cycle& a, const Cycle& b) { return a.vertices <=> b.vertices; }
};

struct Path {
  std::vector<Vertex> vertices;
  VertexMask mask{0};

  static Path of(std::vector<Vertex> seq) {
    Path p{std::move(seq), 0};
    for (Vertex v : p.vertices) p.mask |= bit(v);
    return p;
  }

  int length() const { return static_cast<int>(vertices.size()) - 1; }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
  Path reversed() const { return of({vertices.rbegin(), vertices.rend()}); }

  friend bool operator==(const Path& a, const Path& b) { return a.vertices == b.vertices; }
  friend auto operator<=>(const Path& a, const Path& b) { return a.vertices <=> b.vertices; }
};

/// Every simple cycle of the underlying graph, lexicographically ordered.
inline std::vector<Cycle> enumerate_cycles(const ColoredDigraph& g) {
  require_enumerable(g);
  std::vector<Cycle> out;
  std::vector<Vertex> stack;
  // Cycles rooted at s use only vertices > s; second < last fixes direction.
  auto dfs = [&](auto&& self, Vertex s, Vertex v, VertexMask used) -> void {
    for (VertexMask nb = g.neighbors(v); nb; nb &= nb - 1) {
      const Vertex w = lowest(nb);
      if (w == s && stack.size() >= 3 && stack[1] < stack.back()) {
        out.push_back(Cycle::canonical(stack));
      } else if (w > s && !(used & bit(w))) {
        stack.push_back(w);
        self(self, s, w, used | bit(w));
        stack.pop_back();
      }
    }
  };
  for (Vertex s = 0; s < g.order(); ++s) {
    stack.assign(1, s);
    dfs(dfs, s, s, bit(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// All simple paths from `from` to `to`, lexicographically ordered.
inline std::vector<Path> enumerate_paths(const ColoredDigraph& g, Vertex from, Vertex to) {
  require_enumerable(g);
  std::vector<Path> out;
  std::vector<Vertex> stack{from};
  auto dfs = [&](auto&& self, Vertex v, VertexMask used) -> void {
    if (v == to) {
      out.push_back(Path::of(stack));
      return;
    }
    for (VertexMask nb = g.neighbors(v) & ~used; nb; nb &= nb - 1) {
      const Vertex w = lowest(nb);
      stack.push_back(w);
      self(self, w, used | bit(w));
      stack.pop_back();
    }
  };
  if (from != to) dfs(dfs, from, bit(from));
  return out;
}

enum class WeightClass { real, imaginary };

inline WeightClass weight_class(const GaussianInt& w) {
  return w.im == 0 ? WeightClass::real : WeightClass::imaginary;
}

/// Product of adjacency entries along the canonical traversal, closing the cycle.
inline GaussianInt cycle_weight(const ColoredDigraph& g, const Cycle& c) {
  GaussianInt w{1, 0};
  const int n = c.length();
  for (int k = 0; k < n; ++k) w *= g.weight(c.vertices[k], c.vertices[(k + 1) % n]);
  return w;
}

/// Product of adjacency entries in traversal order; reversal conjugates it.
inline GaussianInt path_weight(const ColoredDigraph& g, const Path& p) {
  GaussianInt w{1, 0};
  for (std::size_t k = 0; k + 1 < p.vertices.size(); ++k) w *= g.weight(p.vertices[k], p.vertices[k + 1]);
  return w;
}

inline bool is_cycle_of(const ColoredDigraph& g, const Cycle& c) {
  if (c.length() < 3) return false;
  VertexMask seen = 0;
  for (int k = 0; k < c.length(); ++k) {
    const Vertex v = c.vertices[k];
    if (v < 0 || v >= g.order() || (seen & bit(v))) return false;
    seen |= bit(v);
    if (!g.adjacent(v, c.vertices[(k + 1) % c.length()])) return false;
  }
  return true;
}

inline bool is_path_of(const ColoredDigraph& g, const Path& p) {
  if (p.vertices.empty()) return false;
  VertexMask seen = 0;
  for (std::size_t k = 0; k < p.vertices.size(); ++k) {
    const Vertex v = p.vertices[k];
    if (v < 0 || v >= g.order() || (seen & bit(v))) return false;
    seen |= bit(v);
    if (k > 0 && !g.adjacent(p.vertices[k - 1], v)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Shape classification.

struct ShapeClass {
  enum class Tag { tree, unicyclic, bicyclic_infinity, bicyclic_theta, k_cyclic };
  Tag tag;
  int k;  // cyclomatic number

  bool is_bicyclic() const { return tag == Tag::bicyclic_infinity || tag == Tag::bicyclic_theta; }
  friend bool operator==(const ShapeClass&, const ShapeClass&) = default;
};

inline std::string to_string(ShapeClass::Tag t) {
  switch (t) {
    case ShapeClass::Tag::tree: return "tree";
    case ShapeClass::Tag::unicyclic: return "unicyclic";
    case ShapeClass::Tag::bicyclic_infinity: return "bicyclic_infinity";
    case ShapeClass::Tag::bicyclic_theta: return "bicyclic_theta";
    case ShapeClass::Tag::k_cyclic: return "k_cyclic";
  }
  return "?";
}

inline std::string to_string(const ShapeClass& s) {
  if (s.tag == ShapeClass::Tag::k_cyclic) return std::to_string(s.k) + "_cyclic";
  return to_string(s.tag);
}

/// θ vs ∞ by pairwise vertex intersection of the enumerated cycles.
inline ShapeClass classify_shape(const ColoredDigraph& g, const std::vector<Cycle>& cycles) {
  const int k = g.cyclomatic_number();
  using Tag = ShapeClass::Tag;
  if (k == 0) return {Tag::tree, 0};
  if (k == 1) return {Tag::unicyclic, 1};
  if (k > 2) return {Tag::k_cyclic, k};
  for (std::size_t a = 0; a < cycles.size(); ++a)
    for (std::size_t b = a + 1; b < cycles.size(); ++b)
      if (popcount(cycles[a].mask & cycles[b].mask) >= 2) return {Tag::bicyclic_theta, 2};
  return {Tag::bicyclic_infinity, 2};
}

inline ShapeClass classify_shape(const ColoredDigraph& g) {
  if (g.cyclomatic_number() != 2) return classify_shape(g, {});
  return classify_shape(g, enumerate_cycles(g));
}

/// True when some cycle has weight ±i.
inline bool in_model(const ColoredDigraph& g, const std::vector<Cycle>& cycles) {
  return std::any_of(cycles.begin(), cycles.end(), [&](const Cycle& c) {
    return weight_class(cycle_weight(g, c)) == WeightClass::imaginary;
  });
}

inline bool in_model(const ColoredDigraph& g) {
  if (g.cyclomatic_number() == 0) return false;
  return in_model(g, enumerate_cycles(g));
}

struct ThetaPaths {
  Vertex i;
  Vertex j;
  std::array<Path, 3> paths;  // by length, then lexicographic
};

/// Branch vertices and the three internally disjoint paths of a θ-graph.
inline ThetaPaths theta_paths(const ColoredDigraph& g) {
  if (classify_shape(g).tag != ShapeClass::Tag::bicyclic_theta) {
    throw ShapeError("theta_paths requires a theta-type bicyclic graph");
  }
  // 2-core: peel leaves
  VertexMask core = g.all();
  for (bool changed = true; changed;) {
    changed = false;
    for (Vertex v = 0; v < g.order(); ++v) {
      if ((core & bit(v)) && popcount(g.neighbors(v) & core) <= 1) {
        core &= ~bit(v);
        changed = true;
      }
    }
  }
  std::vector<Vertex> branch;
  for (Vertex v = 0; v < g.order(); ++v)
    if ((core & bit(v)) && popcount(g.neighbors(v) & core) == 3) branch.push_back(v);
  if (branch.size() != 2) throw ShapeError("theta core does not have two branch vertices");

  std::vector<Path> found;
  std::vector<Vertex> stack{branch[0]};
  auto dfs = [&](auto&& self, Vertex v, VertexMask used) -> void {
    for (VertexMask nb = g.neighbors(v) & core & ~used; nb; nb &= nb - 1) {
      const Vertex w = lowest(nb);
      stack.push_back(w);
      if (w == branch[1]) {
        found.push_back(Path::of(stack));
      } else {
        self(self, w, used | bit(w));
      }
      stack.pop_back();
    }
  };
  dfs(dfs, branch[0], bit(branch[0]));
  if (found.size() != 3) throw ShapeError("theta core does not have three branch paths");
  std::sort(found.begin(), found.end(), [](const Path& a, const Path& b) {
    return std::pair{a.length(), a.vertices} < std::pair{b.length(), b.vertices};
  });
  return {branch[0], branch[1], {found[0], found[1], found[2]}};
}

}  // namespace tricolor
