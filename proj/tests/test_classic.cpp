#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "schemelab/classic_schemes.hpp"

using namespace schemelab;

namespace {

std::vector<double> sorted_numeric(const RatMatrix& m) {
  EigenOptions o;
  o.method = m.size() > 64 ? EigenMethod::Tridiagonal : EigenMethod::Jacobi;
  auto v = eig_sym(m, o).values;
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<double> expand(const std::vector<std::pair<long, long>>& value_mult) {
  std::vector<double> v;
  for (auto [x, m] : value_mult)
    for (long t = 0; t < m; ++t) v.push_back(static_cast<double>(x));
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("colex order and rank") {
  const auto s = colex_subsets(4, 2);
  CHECK(s == std::vector<std::uint64_t>{0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100});
  for (std::size_t i = 0; i < s.size(); ++i) CHECK(colex_rank(s[i]) == i);
  const auto t = colex_subsets(9, 4);
  CHECK(t.size() == 126);
  for (std::size_t i = 0; i < t.size(); ++i) CHECK(colex_rank(t[i]) == i);
  CHECK_THROWS_AS(colex_subsets(3, 4), std::invalid_argument);
}

TEST_CASE("Johnson schemes satisfy the axioms with the textbook valencies") {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{5, 2}, {6, 3}, {7, 3}, {8, 2}}) {
    const AssociationScheme s = johnson_scheme(p, q);
    CHECK(verify_axioms(s).ok());
    for (int i = 0; i <= std::min(q, p - q); ++i)
      CHECK(static_cast<long>(s.associate(static_cast<std::size_t>(i)).row_count(0)) ==
            binomial64(q, i) * binomial64(p - q, i));
  }
}

TEST_CASE("Johnson eigenvalue formulas agree with each other and the graph spectrum") {
  for (int p = 2; p <= 12; ++p)
    for (int q = 0; q <= p; ++q)
      for (int i = 0; i <= std::min(q, p - q); ++i)
        for (int j = 0; j <= std::min(q, p - q); ++j)
          CHECK(johnson_eigenvalue(p, q, i, j) == johnson_eigenvalue_alt(p, q, i, j));
  // Johnson graph J(n, k): (k - j)(n - k - j) - j with multiplicity C(n, j) - C(n, j - 1).
  for (auto [n, k] : std::vector<std::pair<int, int>>{{6, 3}, {7, 2}, {9, 3}}) {
    std::vector<std::pair<long, long>> want;
    for (int j = 0; j <= std::min(k, n - k); ++j) {
      want.emplace_back((k - j) * (n - k - j) - j, binomial64(n, j) - binomial64(n, j - 1));
      CHECK(johnson_eigenvalue(n, k, 1, j) == (k - j) * (n - k - j) - j);
      CHECK(johnson_multiplicity(n, j) == binomial64(n, j) - binomial64(n, j - 1));
    }
    const auto got = sorted_numeric(johnson_matrix(n, k, 1));
    const auto exp = expand(want);
    REQUIRE(got.size() == exp.size());
    for (std::size_t t = 0; t < got.size(); ++t) CHECK(got[t] == doctest::Approx(exp[t]).epsilon(1e-9));
  }
}

TEST_CASE("Johnson P-matrices attach to the numeric eigenmatrix") {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{6, 2}, {7, 3}}) {
    PMatrix pm = p_matrix(johnson_scheme(p, q));
    CHECK(attach_exact(pm, johnson_p_matrix(p, q)));
  }
}

TEST_CASE("Hamming schemes and Krawtchouk values") {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 4}, {3, 3}, {4, 2}}) {
    const AssociationScheme s = hamming_scheme(p, q);
    CHECK(verify_axioms(s).ok());
    long total = 1;
    for (int t = 0; t < q; ++t) total *= p;
    for (int i = 0; i <= q; ++i) {
      const long vi = binomial64(q, i) * static_cast<long>(std::pow(p - 1, i));
      CHECK(static_cast<long>(s.associate(static_cast<std::size_t>(i)).row_count(0)) == vi);
      // Orthogonality: sum_j m_j K_i(j) K_l(j) = p^q v_i [i = l].
      for (int l = 0; l <= q; ++l) {
        mpz_class sum = 0;
        for (int j = 0; j <= q; ++j)
          sum += hamming_multiplicity(p, q, j) * hamming_eigenvalue(p, q, i, j) * hamming_eigenvalue(p, q, l, j);
        CHECK(sum == (i == l ? mpz_class(total * vi) : mpz_class(0)));
      }
    }
    // Distance-1 graph: (p - 1) q - p j with multiplicity C(q, j) (p - 1)^j.
    std::vector<std::pair<long, long>> want;
    for (int j = 0; j <= q; ++j) {
      CHECK(hamming_eigenvalue(p, q, 1, j) == (p - 1) * q - p * j);
      want.emplace_back((p - 1) * q - p * j, binomial64(q, j) * static_cast<long>(std::pow(p - 1, j)));
    }
    const auto got = sorted_numeric(hamming_matrix(p, q, 1));
    const auto exp = expand(want);
    REQUIRE(got.size() == exp.size());
    for (std::size_t t = 0; t < got.size(); ++t) CHECK(got[t] == doctest::Approx(exp[t]).epsilon(1e-9));
    PMatrix pm = p_matrix(s);
    CHECK(attach_exact(pm, hamming_p_matrix(p, q)));
  }
}

TEST_CASE("folded subscheme of the odd binary cube") {
  for (int ell : {2, 3}) {
    const FoldedHamming f = folded_hamming_subscheme(ell);
    CHECK(f.report.ok());
    CHECK(f.product_identity);
    // I, B_1..B_ell and the antipodal class.
    CHECK(f.scheme.class_count() == static_cast<std::size_t>(ell + 2));
    CHECK(f.scheme.associate(static_cast<std::size_t>(ell + 1)).row_count(0) == 1);
    CHECK(is_commutative(structure_constants(f.scheme)));
    CHECK(f.scheme.ground_size() == (std::size_t{1} << (2 * ell + 1)));
    // B_i joins words at distance i or 2 ell + 1 - i.
    const long n = 2 * ell + 1;
    for (int i = 1; i <= ell; ++i)
      CHECK(static_cast<long>(f.scheme.associate(static_cast<std::size_t>(i)).row_count(0)) ==
            binomial64(n, i) + binomial64(n, n - i));
  }
  CHECK_THROWS_AS(folded_hamming_subscheme(1), std::invalid_argument);
}
