#include <random>

#include "catch_amalgamated.hpp"
#include "oracle.hpp"
#include "tricolor/exact.hpp"

using namespace tricolor;
using namespace tricolor::exact;

namespace {

GaussianInt unit(int k) {
  static const GaussianInt units[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return units[k & 3];
}

/// Random Hermitian matrix with entries in {0, ±1, ±i} off the diagonal.
Matrix<GaussianInt> random_hermitian(std::size_t n, std::mt19937& rng) {
  Matrix<GaussianInt> m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const int r = static_cast<int>(rng() % 6);
      if (r >= 4) continue;
      m(i, j) = unit(r);
      m(j, i) = unit(r).conj();
    }
  return m;
}

GaussianMatrix rational(const Matrix<GaussianInt>& m) {
  return m.map([](const GaussianInt& x) { return GaussianRational(x); });
}

}  // namespace

TEST_CASE("Gaussian integer arithmetic", "[exact]") {
  const GaussianInt a{2, 3}, b{1, -1};
  CHECK(a * b == GaussianInt{5, 1});
  CHECK(a.conj() == GaussianInt{2, -3});
  CHECK(a.norm() == 13);
  CHECK(divide_exact(a * b, b) == a);
  CHECK_THROWS_AS(divide_exact(GaussianInt{1, 0}, GaussianInt{2, 0}), std::logic_error);
}

TEST_CASE("checked 64-bit arithmetic reports overflow", "[exact]") {
  const std::int64_t big = std::int64_t{1} << 62;
  CHECK_THROWS_AS(exact::detail::mul(big, 4), exact::detail::Overflow);
  CHECK_THROWS_AS(exact::detail::add(big, big), exact::detail::Overflow);
}

TEST_CASE("Gaussian rational arithmetic", "[exact]") {
  const GaussianRational half(Rational(1, 2));
  const GaussianRational z = half + GaussianRational::i();
  CHECK(z * z.conj() == GaussianRational(Rational(5, 4)));
  CHECK((z / z) == GaussianRational(1));
  CHECK_THROWS_AS(z / GaussianRational(0), SingularError);
  CHECK(z.is_gaussian_integer() == false);
  CHECK(GaussianRational::i().is_real() == false);
}

TEST_CASE("canonical Gaussian strings", "[exact]") {
  CHECK(to_string(GaussianRational(0)) == "0");
  CHECK(to_string(GaussianRational::i()) == "i");
  CHECK(to_string(-GaussianRational::i()) == "-i");
  CHECK(to_string(GaussianRational(1) - GaussianRational::i()) == "1-i");
  CHECK(to_string(GaussianRational(Rational(0), Rational(1, 2))) == "1/2*i");
  CHECK(to_string(GaussianRational(Rational(-3, 4), Rational(-5, 2))) == "-3/4-5/2*i");
}

TEST_CASE("parse and format round-trip", "[exact][property]") {
  std::mt19937 rng(11);
  for (int k = 0; k < 500; ++k) {
    const auto r = [&] { return Rational(static_cast<int>(rng() % 21) - 10, static_cast<int>(rng() % 6) + 1); };
    const GaussianRational z(r(), r());
    CHECK(parse_gaussian(to_string(z)) == z);
  }
  CHECK(parse_gaussian("2+3*i") == GaussianRational(Rational(2), Rational(3)));
  CHECK(parse_gaussian("-i") == -GaussianRational::i());
  CHECK_THROWS_AS(parse_gaussian("1+"), ParseError);
  CHECK_THROWS_AS(parse_gaussian("x"), ParseError);
}

TEST_CASE("Bareiss determinant equals cofactor expansion", "[exact][oracle]") {
  std::mt19937 rng(3);
  for (std::size_t n = 1; n <= 7; ++n) {
    for (int rep = 0; rep < 30; ++rep) {
      const auto m = random_hermitian(n, rng);
      const GaussianInt expect = oracle::laplace_det(m);
      CHECK(bareiss_determinant(m) == expect);
      CHECK(det_exact(rational(m)) == GaussianRational(expect));
    }
  }
}

TEST_CASE("Bareiss adjugate equals the cofactor adjugate", "[exact][oracle]") {
  std::mt19937 rng(5);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (int rep = 0; rep < 30; ++rep) {
      const auto m = random_hermitian(n, rng);
      const auto adj = bareiss_adjugate(m);
      const GaussianInt det = oracle::laplace_det(m);
      CHECK(adj.det == det);
      if (!det.is_zero()) CHECK(adj.adj == oracle::cofactor_adjugate(m));
    }
  }
}

TEST_CASE("inverse times matrix is the identity", "[exact]") {
  std::mt19937 rng(8);
  int tried = 0;
  while (tried < 40) {
    const auto m = random_hermitian(5, rng);
    if (oracle::laplace_det(m).is_zero()) continue;
    ++tried;
    const auto a = rational(m);
    CHECK(a * inverse_exact(a) == GaussianMatrix::identity(5));
  }
}

TEST_CASE("inverse of a Hermitian matrix is Hermitian", "[exact][property]") {
  std::mt19937 rng(9);
  int tried = 0;
  while (tried < 40) {
    const auto m = random_hermitian(6, rng);
    if (oracle::laplace_det(m).is_zero()) continue;
    ++tried;
    CHECK(is_hermitian(inverse_exact(HermitianMatrix(rational(m))).matrix()));
  }
}

TEST_CASE("rational entries and large entries take the exact path", "[exact]") {
  GaussianMatrix m(2);
  m(0, 0) = GaussianRational(Rational(1, 3));
  m(0, 1) = GaussianRational(Rational(1, 2), Rational(1));
  m(1, 0) = m(0, 1).conj();
  m(1, 1) = GaussianRational(Rational(-2, 5));
  // det = -2/15 - (1/4 + 1) = -83/60
  CHECK(det_exact(m) == GaussianRational(Rational(-83, 60)));
  CHECK(m * inverse_exact(m) == GaussianMatrix::identity(2));

  const Integer huge = Integer(1) << 70;
  GaussianMatrix big(2);
  big(0, 0) = GaussianRational(Rational(huge));
  big(1, 1) = GaussianRational(Rational(huge));
  big(0, 1) = big(1, 0) = GaussianRational(1);
  CHECK(det_exact(big) == GaussianRational(Rational(huge * huge - 1)));
  CHECK(big * inverse_exact(big) == GaussianMatrix::identity(2));
}

TEST_CASE("singular and malformed matrices are rejected", "[exact]") {
  GaussianMatrix m(2);
  m(0, 1) = m(1, 0) = GaussianRational(0);
  CHECK_THROWS_AS(inverse_exact(m), SingularError);
  GaussianMatrix skew(2);
  skew(0, 1) = GaussianRational::i();
  skew(1, 0) = GaussianRational::i();
  CHECK_THROWS_AS(HermitianMatrix(skew), ModelError);
}

TEST_CASE("principal minors", "[exact]") {
  GaussianMatrix m(3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (i != j) m(i, j) = GaussianRational(1);
  CHECK(principal_minor(m, 0) == GaussianRational(-1));
  CHECK(det_exact(m) == GaussianRational(2));
}

TEST_CASE("matrix JSON round-trip", "[exact]") {
  GaussianMatrix m(2);
  m(0, 1) = GaussianRational(Rational(1, 2), Rational(-1));
  m(1, 0) = m(0, 1).conj();
  const auto j = to_json(m);
  CHECK(j.dump() == R"([["0","1/2-i"],["1/2+i","0"]])");
  CHECK(matrix_from_json(j) == m);
}
