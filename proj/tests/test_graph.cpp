#include <random>

#include "catch_amalgamated.hpp"
#include "oracle.hpp"
#include "tricolor/graph.hpp"

using namespace tricolor;

namespace {

const char* kExampleB =
    "n=6\n"
    "1 2 r\n2 3 r\n4 3 g\n4 1 r\n1 6 r\n2 5 r\n5 6 r\n";

std::vector<Vertex> one_based(std::vector<Vertex> v) {
  for (auto& x : v) --x;
  return v;
}

/// Random connected colored graph: a random tree plus `extra` edges.
ColoredDigraph random_graph(int n, int extra, std::mt19937& rng) {
  std::vector<Edge> edges;
  std::set<std::pair<int, int>> used;
  auto color = [&] { return static_cast<Color>(rng() % 3); };
  auto orient = [&](int a, int b) { return rng() % 2 ? Edge{a, b, color()} : Edge{b, a, color()}; };
  for (int v = 1; v < n; ++v) {
    const int u = static_cast<int>(rng() % v);
    edges.push_back(orient(u, v));
    used.insert({u, v});
  }
  extra = std::min(extra, n * (n - 1) / 2 - (n - 1));
  while (extra > 0) {
    int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    if (!used.insert({a, b}).second) continue;
    edges.push_back(orient(a, b));
    --extra;
  }
  return ColoredDigraph(n, edges);
}

}  // namespace

TEST_CASE("parse the text format", "[graph]") {
  const auto g = parse_graph(kExampleB);
  CHECK(g.order() == 6);
  CHECK(g.size() == 7);
  CHECK(g.weight(3, 2) == GaussianInt{0, 1});
  CHECK(g.weight(2, 3) == GaussianInt{0, -1});
  CHECK(g.weight(0, 1) == GaussianInt{1, 0});
  CHECK(g.weight(0, 2) == GaussianInt{});

  const auto h = parse_graph("# comment\n n = 2 \n\n1 2 b  # blue\n");
  CHECK(h.weight(0, 1) == GaussianInt{-1, 0});
  CHECK(parse_graph("n=2;1 2 g") == parse_graph("n=2\n1 2 g\n"));
}

TEST_CASE("parse errors carry the line number", "[graph]") {
  auto message = [](const char* text) {
    try {
      parse_graph(text);
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message("n=2\n1 2 x\n") == "line 2: unknown color 'x' (expected r, b or g)");
  CHECK(message("1 2 r\n").rfind("line 1:", 0) == 0);
  CHECK(message("n=3\n1 2\n").rfind("line 2:", 0) == 0);
  CHECK(message("n=2\n1 2 r extra\n").rfind("line 2:", 0) == 0);
  CHECK(message("") == "missing header 'n=<count>'");
}

TEST_CASE("model errors", "[graph]") {
  CHECK_THROWS_AS(parse_graph("n=2\n1 1 r\n"), ModelError);
  CHECK_THROWS_AS(parse_graph("n=2\n1 2 r\n2 1 g\n"), ModelError);
  CHECK_THROWS_AS(parse_graph("n=3\n1 2 r\n"), ModelError);
  CHECK_THROWS_AS(parse_graph("n=2\n1 3 r\n"), ModelError);
  CHECK_THROWS_AS(ColoredDigraph(33, {}), LimitError);
}

TEST_CASE("serialize then parse is the identity", "[graph][property]") {
  std::mt19937 rng(1);
  for (int k = 0; k < 300; ++k) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const auto g = random_graph(n, static_cast<int>(rng() % 3), rng);
    CHECK(parse_graph(serialize_graph(g)) == g);
  }
}

TEST_CASE("adjacency matrix is Hermitian", "[graph][property]") {
  std::mt19937 rng(2);
  for (int k = 0; k < 100; ++k) {
    const auto g = random_graph(2 + static_cast<int>(rng() % 8), static_cast<int>(rng() % 4), rng);
    const auto a = adjacency_matrix(g);
    CHECK(exact::is_hermitian(a.matrix()));
    for (int i = 0; i < g.order(); ++i) CHECK(a(i, i).is_zero());
  }
}

TEST_CASE("cycle enumeration agrees with brute force", "[graph][oracle]") {
  std::mt19937 rng(4);
  for (int k = 0; k < 150; ++k) {
    const auto g = random_graph(3 + static_cast<int>(rng() % 5), static_cast<int>(rng() % 4), rng);
    std::set<std::vector<int>> found;
    for (const auto& c : enumerate_cycles(g)) {
      CHECK(is_cycle_of(g, c));
      found.insert(c.vertices);
    }
    CHECK(found == oracle::brute_cycles(g));
  }
}

TEST_CASE("cycles of the θ example", "[graph]") {
  const auto g = parse_graph(kExampleB);
  const auto cycles = enumerate_cycles(g);
  REQUIRE(cycles.size() == 3);
  CHECK(cycles[0].vertices == one_based({1, 2, 3, 4}));
  CHECK(cycles[1].vertices == one_based({1, 2, 5, 6}));
  CHECK(cycles[2].vertices == one_based({1, 4, 3, 2, 5, 6}));
  CHECK(cycle_weight(g, cycles[0]) == GaussianInt{0, -1});
  CHECK(cycle_weight(g, cycles[1]) == GaussianInt{1, 0});
  CHECK(weight_class(cycle_weight(g, cycles[2])) == WeightClass::imaginary);
}

TEST_CASE("reversing a path or cycle conjugates its weight", "[graph][property]") {
  std::mt19937 rng(6);
  for (int k = 0; k < 100; ++k) {
    const auto g = random_graph(4 + static_cast<int>(rng() % 4), 1 + static_cast<int>(rng() % 3), rng);
    for (const auto& c : enumerate_cycles(g)) {
      std::vector<Vertex> rev(c.vertices.rbegin(), c.vertices.rend());
      GaussianInt w{1, 0};
      for (std::size_t s = 0; s < rev.size(); ++s) w = w * g.weight(rev[s], rev[(s + 1) % rev.size()]);
      CHECK(w == cycle_weight(g, c).conj());
      CHECK(weight_class(w) == weight_class(cycle_weight(g, c)));
    }
    const int u = 0, v = g.order() - 1;
    for (const auto& p : enumerate_paths(g, u, v)) {
      CHECK(path_weight(g, p.reversed()) == path_weight(g, p).conj());
    }
  }
}

TEST_CASE("path enumeration", "[graph]") {
  const auto g = parse_graph(kExampleB);
  const auto paths = enumerate_paths(g, 0, 1);
  REQUIRE(paths.size() == 3);
  for (const auto& p : paths) CHECK(is_path_of(g, p));
  CHECK(paths[0].vertices == one_based({1, 2}));
  CHECK(paths[1].vertices == one_based({1, 4, 3, 2}));
  CHECK(paths[2].vertices == one_based({1, 6, 5, 2}));
  CHECK(path_weight(g, paths[1]) == GaussianInt{0, 1});
}

TEST_CASE("shape classification", "[graph]") {
  CHECK(classify_shape(parse_graph("n=2;1 2 r")).tag == ShapeClass::Tag::tree);
  CHECK(classify_shape(parse_graph("n=4;1 2 g;2 3 r;3 4 r;4 1 r")).tag == ShapeClass::Tag::unicyclic);
  CHECK(classify_shape(parse_graph(kExampleB)).tag == ShapeClass::Tag::bicyclic_theta);
  CHECK(classify_shape(parse_graph("n=5;1 2 r;2 3 r;3 1 r;1 4 r;4 5 r;5 1 g")).tag ==
        ShapeClass::Tag::bicyclic_infinity);
  CHECK(classify_shape(parse_graph("n=6;1 2 r;2 3 r;3 1 r;3 4 r;4 5 r;5 6 r;6 4 r")).tag ==
        ShapeClass::Tag::bicyclic_infinity);
  CHECK(classify_shape(parse_graph("n=4;1 2 r;1 3 r;1 4 r;2 3 r;2 4 r;3 4 r")).tag == ShapeClass::Tag::k_cyclic);
  CHECK(classify_shape(parse_graph("n=4;1 2 r;1 3 r;1 4 r;2 3 r;2 4 r;3 4 r")).k == 3);
  CHECK(to_string(classify_shape(parse_graph(kExampleB))) == "bicyclic_theta");
}

TEST_CASE("in-model test", "[graph]") {
  CHECK(in_model(parse_graph(kExampleB)));
  CHECK_FALSE(in_model(parse_graph("n=4;1 2 r;2 3 r;3 4 b;4 1 r")));
  CHECK_FALSE(in_model(parse_graph("n=4;1 2 g;2 3 g;3 4 r;4 1 r")));
  CHECK(in_model(parse_graph("n=3;1 2 g;2 3 r;3 1 b")));
  CHECK_FALSE(in_model(parse_graph("n=2;1 2 g")));
}

TEST_CASE("θ branch paths", "[graph]") {
  const auto t = theta_paths(parse_graph(kExampleB));
  CHECK(t.i == 0);
  CHECK(t.j == 1);
  CHECK(t.paths[0].vertices == one_based({1, 2}));
  CHECK(t.paths[1].vertices == one_based({1, 4, 3, 2}));
  CHECK(t.paths[2].vertices == one_based({1, 6, 5, 2}));
  CHECK_THROWS_AS(theta_paths(parse_graph("n=3;1 2 g;2 3 r;3 1 r")), ShapeError);
}

TEST_CASE("integer adjacency matches the rational one", "[graph]") {
  const auto g = parse_graph(kExampleB);
  const auto a = adjacency_matrix(g);
  const auto z = integer_adjacency(g);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) CHECK(exact::GaussianRational(z(i, j)) == a(i, j));
}

TEST_CASE("semicolons inside comments are ignored", "[graph]") {
  CHECK(parse_graph("# a; b\nn=2 # c; d\n1 2 r\n") == parse_graph("n=2;1 2 r"));
  try {
    parse_graph("n=3;1 2 r\n2 3 q");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).rfind("line 2:", 0) == 0);
  }
}
