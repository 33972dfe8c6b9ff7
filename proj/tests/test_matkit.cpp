#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "schemelab/matkit.hpp"

using namespace schemelab;

namespace {

RatMatrix from_ints(const std::vector<std::vector<long>>& rows) {
  RatMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = Rational(rows[i][j]);
  return m;
}

// Path graph on n vertices: eigenvalues 2 cos(pi k / (n + 1)).
RatMatrix path(std::size_t n) {
  RatMatrix m(n);
  for (std::size_t i = 0; i + 1 < n; ++i) m(i, i + 1) = m(i + 1, i) = Rational(1);
  return m;
}

std::vector<double> path_spectrum(std::size_t n) {
  std::vector<double> v;
  for (std::size_t k = 1; k <= n; ++k)
    v.push_back(2.0 * std::cos(std::numbers::pi * static_cast<double>(k) / static_cast<double>(n + 1)));
  std::sort(v.rbegin(), v.rend());
  return v;
}

}  // namespace

TEST_CASE("rationals stay canonical") {
  CHECK(Rational::parse("-6/4").str() == "-3/2");
  CHECK(Rational::parse("7").str() == "7/1");
  CHECK(Rational(4, -6) == Rational(-2, 3));
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK(Rational(1, 3).to_double() == 1.0 / 3.0);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
  CHECK_THROWS(Rational(1) / Rational(0));
}

TEST_CASE("binomials follow Pascal's rule") {
  for (long n = 1; n <= 40; ++n)
    for (long k = 1; k < n; ++k) CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial64(30, 15) == 155117520);
}

TEST_CASE("products and Kronecker products") {
  const RatMatrix a = from_ints({{1, 2}, {3, 4}});
  const RatMatrix b = from_ints({{0, 1}, {1, 0}});
  CHECK(mat_mul(a, b) == from_ints({{2, 1}, {4, 3}}));
  const RatMatrix k = kron(a, b);
  REQUIRE(k.size() == 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(k(i, j) == a(i / 2, j / 2) * b(i % 2, j % 2));
  CHECK_THROWS_AS(mat_mul(a, RatMatrix(3)), std::invalid_argument);
  CHECK(a.transpose().transpose() == a);
  CHECK_FALSE(a.is_symmetric());
}

TEST_CASE("json round trip keeps exact entries") {
  RatMatrix m(2);
  m(0, 0) = Rational(1, 3);
  m(0, 1) = Rational(-5, 7);
  m(1, 0) = Rational(2);
  const auto j = to_json(m);
  CHECK(rat_matrix_from_json(nlohmann::json::parse(j.dump())) == m);
}

TEST_CASE("both eigensolvers reproduce the path spectrum") {
  for (std::size_t n : {1u, 2u, 5u, 12u, 40u}) {
    const auto want = path_spectrum(n);
    for (EigenMethod method : {EigenMethod::Jacobi, EigenMethod::Tridiagonal}) {
      EigenOptions o;
      o.method = method;
      const Spectrum s = eig_sym(path(n), o);
      REQUIRE(s.values.size() == n);
      for (std::size_t i = 0; i < n; ++i) CHECK(s.values[i] == doctest::Approx(want[i]).epsilon(1e-10));
    }
  }
}

TEST_CASE("Jacobi eigenvectors have small residuals") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(-5, 5);
  RatMatrix m(9);
  for (std::size_t i = 0; i < 9; ++i)
    for (std::size_t j = i; j < 9; ++j) m(i, j) = m(j, i) = Rational(d(rng));
  EigenOptions o;
  o.vectors = true;
  const Spectrum s = eig_sym(m, o);
  REQUIRE(s.residual);
  CHECK(*s.residual < 1e-10);
  double trace = 0, sum = 0;
  for (std::size_t i = 0; i < 9; ++i) trace += m(i, i).to_double();
  for (double v : s.values) sum += v;
  CHECK(sum == doctest::Approx(trace));
}

TEST_CASE("eigensolver rejects asymmetric input") {
  CHECK_THROWS_AS(eig_sym(from_ints({{0, 1}, {0, 0}})), std::invalid_argument);
}

TEST_CASE("grouping merges nearby values") {
  const auto g = group_eigenvalues({3.0, 1.0 + 1e-9, 1.0, -2.0});
  REQUIRE(g.size() == 3);
  CHECK(g[1].second == 2);
}

TEST_CASE("exact PSD check") {
  // Gram matrices are PSD.
  const RatMatrix b = from_ints({{1, 2, 0}, {0, 1, 3}, {1, 3, 3}});
  const RatMatrix gram = mat_mul(b.transpose(), b);
  PsdOptions exact;
  exact.mode = PsdMode::Exact;
  CHECK(psd_check(gram, exact).verdict == PsdVerdict::Psd);
  CHECK(psd_check(RatMatrix::ones(4), exact).verdict == PsdVerdict::Psd);

  const PsdResult bad = psd_check(from_ints({{0, 1}, {1, 0}}), exact);
  CHECK(bad.verdict == PsdVerdict::NotPsd);
  REQUIRE(bad.witness_index);

  const PsdResult neg = psd_check(from_ints({{2, 0, 0}, {0, 1, 0}, {0, 0, -1}}), exact);
  CHECK(neg.verdict == PsdVerdict::NotPsd);
  REQUIRE(neg.witness_pivot);
  CHECK(neg.witness_pivot->sign() < 0);
}

TEST_CASE("float PSD check reports borderline and witnesses") {
  PsdOptions fl;
  fl.mode = PsdMode::Float;
  const PsdResult singular = psd_check(RatMatrix::ones(3), fl);
  CHECK(singular.verdict == PsdVerdict::Borderline);
  const PsdResult bad = psd_check(from_ints({{1, 2}, {2, 1}}), fl);
  CHECK(bad.verdict == PsdVerdict::NotPsd);
  REQUIRE(bad.min_eigenvalue);
  CHECK(*bad.min_eigenvalue == doctest::Approx(-1.0));
  REQUIRE(bad.witness_vector.size() == 2);
  CHECK(std::abs(bad.witness_vector[0] + bad.witness_vector[1]) < 1e-12);
  CHECK(psd_check(RatMatrix::identity(3), fl).verdict == PsdVerdict::Psd);
}

TEST_CASE("auto mode respects the exact dimension cap") {
  PsdOptions o;
  o.exact_dim_cap = 2;
  CHECK(psd_check(RatMatrix::identity(3), o).used == PsdMode::Float);
  CHECK(psd_check(RatMatrix::identity(2), o).used == PsdMode::Exact);
  o.mode = PsdMode::Exact;
  CHECK_THROWS_AS(psd_check(RatMatrix::identity(3), o), std::invalid_argument);
  CHECK(parse_psd_mode("float") == PsdMode::Float);
}
