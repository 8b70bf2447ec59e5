#pragma once

// Slow reference implementations used only by the tests.

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "tricolor/tricolor.hpp"

namespace oracle {

using tricolor::GaussianInt;
using tricolor::exact::Matrix;

/// Laplace expansion along the first row.
inline GaussianInt laplace_det(const Matrix<GaussianInt>& m) {
  const std::size_t n = m.order();
  if (n == 0) return GaussianInt{1};
  if (n == 1) return m(0, 0);
  GaussianInt total{};
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    Matrix<GaussianInt> minor(n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = m(r, c);
      }
    const GaussianInt term = m(0, j) * laplace_det(minor);
    total = j % 2 == 0 ? total + term : total - term;
  }
  return total;
}

/// Classical adjugate from cofactors: adj(i,j) = (-1)^{i+j} det(M without row j, column i).
inline Matrix<GaussianInt> cofactor_adjugate(const Matrix<GaussianInt>& m) {
  const std::size_t n = m.order();
  Matrix<GaussianInt> adj(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix<GaussianInt> minor(n - 1);
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == j) continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c) {
          if (c == i) continue;
          minor(rr, cc++) = m(r, c);
        }
        ++rr;
      }
      const GaussianInt d = laplace_det(minor);
      adj(i, j) = (i + j) % 2 == 0 ? d : -d;
    }
  return adj;
}

/// Perfect matchings by trying every subset of edges.
inline std::set<std::vector<std::pair<int, int>>> brute_matchings(const tricolor::ColoredDigraph& g) {
  std::set<std::vector<std::pair<int, int>>> out;
  const auto& es = g.edges();
  const int m = static_cast<int>(es.size());
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
    std::vector<int> seen(g.order(), 0);
    std::vector<std::pair<int, int>> chosen;
    bool ok = true;
    for (int k = 0; k < m && ok; ++k) {
      if (!(s >> k & 1)) continue;
      const int a = std::min(es[k].u, es[k].v), b = std::max(es[k].u, es[k].v);
      ok = !seen[a]++ && !seen[b]++;
      chosen.emplace_back(a, b);
    }
    if (ok && std::all_of(seen.begin(), seen.end(), [](int x) { return x == 1; })) {
      std::sort(chosen.begin(), chosen.end());
      out.insert(chosen);
    }
  }
  return out;
}

/// Vertex sets of cycles, found by permuting every vertex subset.
inline std::set<std::vector<int>> brute_cycles(const tricolor::ColoredDigraph& g) {
  std::set<std::vector<int>> out;
  const int n = g.order();
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    std::vector<int> vs;
    for (int v = 0; v < n; ++v)
      if (s >> v & 1) vs.push_back(v);
    if (vs.size() < 3) continue;
    std::vector<int> perm(vs.begin() + 1, vs.end());
    do {
      bool closed = g.adjacent(vs[0], perm.front()) && g.adjacent(perm.back(), vs[0]);
      for (std::size_t k = 0; k + 1 < perm.size() && closed; ++k) closed = g.adjacent(perm[k], perm[k + 1]);
      if (closed && perm.front() < perm.back()) {
        std::vector<int> c{vs[0]};
        c.insert(c.end(), perm.begin(), perm.end());
        out.insert(c);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

}  // namespace oracle
