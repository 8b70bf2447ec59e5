#pragma once

// Exact Gaussian-rational arithmetic and the algebraic determinant/inverse
// oracle. No floating point is used anywhere in this header.

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tricolor/errors.hpp"

namespace tricolor::exact {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

namespace detail {

/// Thrown by the checked 64-bit kernels; callers retry with Integer.
struct Overflow {};

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
template <class Int>
Int add(const Int& a, const Int& b) {
  return a + b;
}
template <class Int>
Int sub(const Int& a, const Int& b) {
  return a - b;
}
template <class Int>
Int mul(const Int& a, const Int& b) {
  return a * b;
}

}  // namespace detail

/// Gaussian integer re + im*i over an integer type.
template <class Int>
struct Gaussian {
  Int re{0};
  Int im{0};

  Gaussian() = default;
  Gaussian(Int r, Int i = Int{0}) : re(std::move(r)), im(std::move(i)) {}  // NOLINT

  bool is_zero() const { return re == 0 && im == 0; }
  Gaussian conj() const { return {re, detail::sub(Int{0}, im)}; }
  Int norm() const { return detail::add(detail::mul(re, re), detail::mul(im, im)); }

  friend Gaussian operator+(const Gaussian& a, const Gaussian& b) {
    return {detail::add(a.re, b.re), detail::add(a.im, b.im)};
  }
  friend Gaussian operator-(const Gaussian& a, const Gaussian& b) {
    return {detail::sub(a.re, b.re), detail::sub(a.im, b.im)};
  }
  friend Gaussian operator-(const Gaussian& a) { return Gaussian{} - a; }
  friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
    return {detail::sub(detail::mul(a.re, b.re), detail::mul(a.im, b.im)),
            detail::add(detail::mul(a.re, b.im), detail::mul(a.im, b.re))};
  }
  Gaussian& operator+=(const Gaussian& o) { return *this = *this + o; }
  Gaussian& operator-=(const Gaussian& o) { return *this = *this - o; }
  Gaussian& operator*=(const Gaussian& o) { return *this = *this * o; }
  friend bool operator==(const Gaussian& a, const Gaussian& b) {
    return a.re == b.re && a.im == b.im;
  }
};

using GaussianInt = Gaussian<std::int64_t>;

/// Quotient of Gaussian integers known to divide exactly.
template <class Int>
Gaussian<Int> divide_exact(const Gaussian<Int>& x, const Gaussian<Int>& d) {
  const Int n = d.norm();
  const Gaussian<Int> p = x * d.conj();
  if (p.re % n != 0 || p.im % n != 0) {
    throw std::logic_error("divide_exact: inexact Gaussian division");
  }
  return {p.re / n, p.im / n};
}

/// Exact complex number with rational real and imaginary parts.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(Rational re, Rational im = Rational{0})  // NOLINT
      : re_(std::move(re)), im_(std::move(im)) {}
  GaussianRational(int re) : re_(re) {}  // NOLINT
  template <class Int>
  explicit GaussianRational(const Gaussian<Int>& g) : re_(Integer(g.re)), im_(Integer(g.im)) {}

  static GaussianRational i() { return {Rational{0}, Rational{1}}; }

  const Rational& real() const { return re_; }
  const Rational& imag() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }
  bool is_gaussian_integer() const {
    return denominator(re_) == 1 && denominator(im_) == 1;
  }
  GaussianRational conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re_ + b.re_, a.im_ + b.im_};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re_ - b.re_, a.im_ - b.im_};
  }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    if (b.is_zero()) throw SingularError("division by zero");
    const Rational n = b.norm();
    const GaussianRational p = a * b.conj();
    return {p.re_ / n, p.im_ / n};
  }
  GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
  GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
  GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

/// Dense square matrix, row-major.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n, const T& fill = T{}) : n_(n), data_(n * n, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
    return m;
  }

  std::size_t order() const { return n_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < n_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  /// Copy with row and column `k` removed.
  Matrix without(std::size_t k) const {
    Matrix m(n_ - 1);
    for (std::size_t i = 0, r = 0; i < n_; ++i) {
      if (i == k) continue;
      for (std::size_t j = 0, c = 0; j < n_; ++j) {
        if (j == k) continue;
        m(r, c++) = (*this)(i, j);
      }
      ++r;
    }
    return m;
  }

  template <class F>
  auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
    Matrix<decltype(f(std::declval<const T&>()))> m(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) m(i, j) = f((*this)(i, j));
    return m;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("matrix order mismatch");
    Matrix c(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i)
      for (std::size_t k = 0; k < a.n_; ++k) {
        const T& aik = a(i, k);
        if (aik == T{}) continue;
        for (std::size_t j = 0; j < a.n_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.n_ == b.n_ && a.data_ == b.data_;
  }

 private:
  std::size_t n_{0};
  std::vector<T> data_;
};

using GaussianMatrix = Matrix<GaussianRational>;

inline bool is_hermitian(const GaussianMatrix& m) {
  for (std::size_t i = 0; i < m.order(); ++i)
    for (std::size_t j = i; j < m.order(); ++j)
      if (!(m(j, i) == m(i, j).conj())) return false;
  return true;
}

/// Square matrix with enforced conjugate symmetry.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(GaussianMatrix m) : m_(std::move(m)) {
    if (!is_hermitian(m_)) throw ModelError("matrix is not Hermitian");
  }
  std::size_t order() const { return m_.order(); }
  const GaussianRational& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const GaussianMatrix& matrix() const { return m_; }
  friend bool operator==(const HermitianMatrix& a, const HermitianMatrix& b) {
    return a.m_ == b.m_;
  }

 private:
  GaussianMatrix m_;
};

// ---------------------------------------------------------------------------
// Fraction-free elimination over Gaussian integers.

/// det(A) together with adj(A) = det(A) * A^{-1}. `adj` is empty when singular.
template <class Int>
struct Adjugate {
  Gaussian<Int> det;
  Matrix<Gaussian<Int>> adj;
};

/// Bareiss determinant; every intermediate division is exact.
template <class Int>
Gaussian<Int> bareiss_determinant(Matrix<Gaussian<Int>> a) {
  const std::size_t n = a.order();
  if (n == 0) return Gaussian<Int>{Int{1}};
  bool negate = false;
  Gaussian<Int> prev{Int{1}};
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k).is_zero()) ++p;
    if (p == n) return Gaussian<Int>{};
    if (p != k) {
      a.swap_rows(p, k);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = divide_exact(a(i, j) * a(k, k) - a(i, k) * a(k, j), prev);
      }
      a(i, k) = Gaussian<Int>{};
    }
    prev = a(k, k);
  }
  return negate ? -a(n - 1, n - 1) : a(n - 1, n - 1);
}

/// Fraction-free Gauss-Jordan on [A | I]. The left block ends as d*I and the
/// right block as d*A^{-1}, where d is det of the row-permuted matrix.
template <class Int>
Adjugate<Int> bareiss_adjugate(const Matrix<Gaussian<Int>>& in) {
  const std::size_t n = in.order();
  const std::size_t w = 2 * n;
  std::vector<Gaussian<Int>> a(n * w);
  auto at = [&](std::size_t i, std::size_t j) -> Gaussian<Int>& { return a[i * w + j]; };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) at(i, j) = in(i, j);
    at(i, n + i) = Gaussian<Int>{Int{1}};
  }
  if (n == 0) return {Gaussian<Int>{Int{1}}, Matrix<Gaussian<Int>>(0)};

  bool negate = false;
  Gaussian<Int> prev{Int{1}};
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && at(p, k).is_zero()) ++p;
    if (p == n) return {Gaussian<Int>{}, Matrix<Gaussian<Int>>{}};
    if (p != k) {
      for (std::size_t j = 0; j < w; ++j) std::swap(at(p, j), at(k, j));
      negate = !negate;
    }
    const Gaussian<Int> pivot = at(k, k);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      const Gaussian<Int> factor = at(i, k);
      for (std::size_t j = 0; j < w; ++j) {
        if (j == k) continue;
        at(i, j) = divide_exact(at(i, j) * pivot - factor * at(k, j), prev);
      }
      at(i, k) = Gaussian<Int>{};
    }
    prev = pivot;
  }
  // Every diagonal entry of the left block now equals the last pivot.
  const Gaussian<Int> d = at(n - 1, n - 1);
  Adjugate<Int> out{negate ? -d : d, Matrix<Gaussian<Int>>(n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.adj(i, j) = negate ? -at(i, n + j) : at(i, n + j);
  return out;
}

/// Adjugate of a small Gaussian-integer matrix with overflow-checked 64-bit
/// arithmetic; nullopt when an intermediate leaves the int64 range.
inline std::optional<Adjugate<std::int64_t>> adjugate_checked(const Matrix<GaussianInt>& m) {
  try {
    return bareiss_adjugate(m);
  } catch (const detail::Overflow&) {
    return std::nullopt;
  }
}

inline Adjugate<Integer> adjugate_big(const Matrix<GaussianInt>& m) {
  return bareiss_adjugate(m.map([](const GaussianInt& g) {
    return Gaussian<Integer>{Integer(g.re), Integer(g.im)};
  }));
}

namespace detail {

/// M scaled row-wise to Gaussian integers: M = diag(1/scale) * integral.
struct IntegralForm {
  Matrix<Gaussian<Integer>> integral;
  std::vector<Integer> scale;
};

inline IntegralForm clear_denominators(const GaussianMatrix& m) {
  const std::size_t n = m.order();
  IntegralForm out{Matrix<Gaussian<Integer>>(n), std::vector<Integer>(n, Integer{1})};
  for (std::size_t i = 0; i < n; ++i) {
    Integer l{1};
    for (std::size_t j = 0; j < n; ++j) {
      l = boost::multiprecision::lcm(l, denominator(m(i, j).real()));
      l = boost::multiprecision::lcm(l, denominator(m(i, j).imag()));
    }
    out.scale[i] = l;
    for (std::size_t j = 0; j < n; ++j) {
      const Rational re = m(i, j).real() * l;
      const Rational im = m(i, j).imag() * l;
      out.integral(i, j) = Gaussian<Integer>{numerator(re), numerator(im)};
    }
  }
  return out;
}

inline std::optional<Matrix<GaussianInt>> narrow(const Matrix<Gaussian<Integer>>& m) {
  constexpr std::int64_t lim = std::int64_t{1} << 40;
  Matrix<GaussianInt> out(m.order());
  for (std::size_t i = 0; i < m.order(); ++i)
    for (std::size_t j = 0; j < m.order(); ++j) {
      const auto& g = m(i, j);
      if (abs(g.re) > lim || abs(g.im) > lim) return std::nullopt;
      out(i, j) = GaussianInt{static_cast<std::int64_t>(g.re), static_cast<std::int64_t>(g.im)};
    }
  return out;
}

inline Gaussian<Integer> widen(const GaussianInt& g) { return {Integer(g.re), Integer(g.im)}; }

inline Gaussian<Integer> determinant_integral(const Matrix<Gaussian<Integer>>& m) {
  if (auto small = narrow(m)) {
    try {
      return widen(bareiss_determinant(*small));
    } catch (const Overflow&) {
    }
  }
  return bareiss_determinant(m);
}

inline Adjugate<Integer> adjugate_integral(const Matrix<Gaussian<Integer>>& m) {
  if (auto small = narrow(m)) {
    if (auto fast = adjugate_checked(*small)) {
      return {widen(fast->det), fast->adj.map(widen)};
    }
  }
  return bareiss_adjugate(m);
}

inline GaussianRational to_rational(const Gaussian<Integer>& g, const Integer& den = Integer{1}) {
  return {Rational(g.re, den), Rational(g.im, den)};
}

}  // namespace detail

/// Exact determinant via fraction-free elimination.
inline GaussianRational det_exact(const GaussianMatrix& m) {
  const auto form = detail::clear_denominators(m);
  Integer scale{1};
  for (const auto& s : form.scale) scale *= s;
  return detail::to_rational(detail::determinant_integral(form.integral), scale);
}

/// Exact inverse; throws SingularError when det is zero.
inline GaussianMatrix inverse_exact(const GaussianMatrix& m) {
  const auto form = detail::clear_denominators(m);
  const auto adj = detail::adjugate_integral(form.integral);
  if (adj.det.is_zero()) throw SingularError("matrix is singular");
  const GaussianRational det = detail::to_rational(adj.det);
  const std::size_t n = m.order();
  GaussianMatrix inv(n);
  // (D^{-1} A')^{-1} = A'^{-1} D, so column j picks up scale[j].
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      inv(i, j) = detail::to_rational(adj.adj(i, j)) * GaussianRational(Rational(form.scale[j])) / det;
  return inv;
}

inline HermitianMatrix inverse_exact(const HermitianMatrix& m) {
  return HermitianMatrix(inverse_exact(m.matrix()));
}

/// det of M with row and column `i` (0-based) deleted.
inline GaussianRational principal_minor(const GaussianMatrix& m, std::size_t i) {
  if (i >= m.order()) throw std::out_of_range("principal_minor: index out of range");
  return det_exact(m.without(i));
}

// ---------------------------------------------------------------------------
// Canonical text form "a/b+c/d*i".

inline std::string to_string(const Rational& r) {
  const Integer& num = numerator(r);
  const Integer& den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline std::string to_string(const GaussianRational& z) {
  const Rational& re = z.real();
  const Rational& im = z.imag();
  auto imag_part = [](const Rational& v) {
    if (v == 1) return std::string("i");
    if (v == -1) return std::string("-i");
    return to_string(v) + "*i";
  };
  if (im == 0) return to_string(re);
  if (re == 0) return imag_part(im);
  std::string s = to_string(re);
  std::string t = imag_part(im);
  if (t.front() != '-') s += '+';
  return s + t;
}

inline std::string to_string(const GaussianInt& g) {
  return to_string(GaussianRational(g));
}

namespace detail {

inline Rational parse_rational(std::string_view s, std::string_view whole) {
  auto fail = [&] { return ParseError("malformed Gaussian rational: '" + std::string(whole) + "'"); };
  if (s.empty()) throw fail();
  bool neg = false;
  if (s.front() == '+' || s.front() == '-') {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  const auto slash = s.find('/');
  auto digits = [&](std::string_view d) {
    if (d.empty()) throw fail();
    for (char c : d)
      if (c < '0' || c > '9') throw fail();
    return Integer(std::string(d));
  };
  Integer num = digits(s.substr(0, slash));
  Integer den = slash == std::string_view::npos ? Integer{1} : digits(s.substr(slash + 1));
  if (den == 0) throw fail();
  Rational r(num, den);
  return neg ? Rational(-r) : r;
}

}  // namespace detail

/// Inverse of to_string; accepts any sign/fraction spelling of the same form.
inline GaussianRational parse_gaussian(std::string_view text) {
  std::string_view s = text;
  if (s.empty()) throw ParseError("empty Gaussian rational");
  if (s.back() != 'i') return {detail::parse_rational(s, text), Rational{0}};
  s.remove_suffix(1);
  if (!s.empty() && s.back() == '*') s.remove_suffix(1);
  // split at the last sign that is not the leading character
  std::size_t split = std::string_view::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if (s[k] == '+' || s[k] == '-') {
      split = k;
      break;
    }
  }
  std::string_view re_part = split == std::string_view::npos ? std::string_view{} : s.substr(0, split);
  std::string_view im_part = split == std::string_view::npos ? s : s.substr(split);
  Rational im;
  if (im_part.empty() || im_part == "+") {
    im = 1;
  } else if (im_part == "-") {
    im = -1;
  } else {
    im = detail::parse_rational(im_part, text);
  }
  Rational re = re_part.empty() ? Rational{0} : detail::parse_rational(re_part, text);
  return {re, im};
}

inline nlohmann::json to_json(const GaussianMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.order(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.order(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline GaussianMatrix matrix_from_json(const nlohmann::json& rows) {
  if (!rows.is_array()) throw ParseError("matrix JSON must be an array of rows");
  GaussianMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    if (!row.is_array() || row.size() != rows.size()) throw ParseError("matrix JSON must be square");
    for (std::size_t j = 0; j < row.size(); ++j) m(i, j) = parse_gaussian(row[j].get<std::string>());
  }
  return m;
}

}  // namespace tricolor::exact
