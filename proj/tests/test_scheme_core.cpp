#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "schemelab/scheme_core.hpp"

using namespace schemelab;

namespace {

// Distance classes of the n-cycle.
AssociationScheme cycle_scheme(int n) {
  std::vector<BinaryMatrix> a(static_cast<std::size_t>(n / 2 + 1), BinaryMatrix(static_cast<std::size_t>(n)));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int d = std::min((x - y + n) % n, (y - x + n) % n);
      a[static_cast<std::size_t>(d)].set(static_cast<std::size_t>(x), static_cast<std::size_t>(y));
    }
  return AssociationScheme(std::move(a));
}

using Perm = std::array<int, 3>;

std::vector<Perm> s3() {
  std::vector<Perm> g;
  Perm p{0, 1, 2};
  do g.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return g;
}

Perm compose(const Perm& a, const Perm& b) {  // (a b)(t) = a(b(t))
  return {a[b[0]], a[b[1]], a[b[2]]};
}

std::size_t index_of(const std::vector<Perm>& g, const Perm& p) {
  return static_cast<std::size_t>(std::find(g.begin(), g.end(), p) - g.begin());
}

// Thin scheme of S3: (x, y) lies in class g iff y = x g.
AssociationScheme s3_scheme() {
  const auto g = s3();
  std::vector<BinaryMatrix> a(6, BinaryMatrix(6));
  for (std::size_t x = 0; x < 6; ++x)
    for (std::size_t k = 0; k < 6; ++k) a[k].set(x, index_of(g, compose(g[x], g[k])));
  return AssociationScheme(std::move(a));
}

}  // namespace

TEST_CASE("binary matrix basics") {
  BinaryMatrix m(70);
  m.set(3, 69);
  m.set(69, 3);
  CHECK(m.count() == 2);
  CHECK(m.is_symmetric());
  CHECK(m.first_one() == std::make_pair(std::size_t{3}, std::size_t{69}));
  CHECK(BinaryMatrix::from_rat(m.to_rat()) == m);
  RatMatrix bad(2);
  bad(0, 0) = Rational(2);
  CHECK_THROWS_AS(BinaryMatrix::from_rat(bad), std::invalid_argument);
}

TEST_CASE("count_product matches a naive product") {
  const AssociationScheme c = cycle_scheme(7);
  const auto& a = c.associate(1);
  const auto& b = c.associate(2);
  const auto prod = count_product(a, b);
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j) {
      std::int64_t s = 0;
      for (std::size_t k = 0; k < 7; ++k) s += a.get(i, k) && b.get(k, j);
      CHECK(prod[i * 7 + j] == s);
    }
}

TEST_CASE("pentagon scheme constants") {
  const AssociationScheme c = cycle_scheme(5);
  const AxiomReport rep = verify_axioms(c);
  CHECK(rep.ok());
  const StructureConstants sc = structure_constants(c);
  // A1^2 = 2I + A2, A1 A2 = A1 + A2.
  CHECK(sc(1, 1, 0) == 2);
  CHECK(sc(1, 1, 1) == 0);
  CHECK(sc(1, 1, 2) == 1);
  CHECK(sc(1, 2, 1) == 1);
  CHECK(sc(1, 2, 2) == 1);
  CHECK(is_commutative(sc));
  CHECK(is_symmetric(sc));
  CHECK(sc.valency == std::vector<std::int64_t>{1, 2, 2});
}

TEST_CASE("group scheme constants follow the multiplication table") {
  const auto g = s3();
  const AssociationScheme s = s3_scheme();
  CHECK(verify_axioms(s).ok());
  const StructureConstants sc = structure_constants(s);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      const std::size_t k = index_of(g, compose(g[i], g[j]));
      for (std::size_t t = 0; t < 6; ++t) CHECK(sc(i, j, t) == (t == k ? 1 : 0));
    }
  CHECK_FALSE(is_commutative(sc));
  CHECK_FALSE(is_symmetric(sc));
  CHECK_THROWS_AS(p_matrix(s), std::invalid_argument);
}

TEST_CASE("axiom failures carry witnesses") {
  // Path on three vertices: the distance classes are not closed under products.
  std::vector<BinaryMatrix> a(3, BinaryMatrix(3));
  for (std::size_t i = 0; i < 3; ++i) a[0].set(i, i);
  a[1].set(0, 1); a[1].set(1, 0); a[1].set(1, 2); a[1].set(2, 1);
  a[2].set(0, 2); a[2].set(2, 0);
  const AxiomReport rep = verify_axioms(AssociationScheme(a));
  CHECK(rep.a1);
  CHECK(rep.a3);
  CHECK_FALSE(rep.a4);
  CHECK(rep.witness);

  std::vector<BinaryMatrix> gap = {BinaryMatrix::identity(3)};
  const AxiomReport rep2 = verify_axioms(AssociationScheme(gap));
  CHECK_FALSE(rep2.a3);
}

TEST_CASE("contraction checks agree with dense verification") {
  const AssociationScheme c = cycle_scheme(8);  // classes 0..4
  const StructureConstants sc = structure_constants(c);
  const std::vector<ClassPartition> candidates = {
      {{1, 2, 3, 4}}, {{1, 3}, {2, 4}}, {{1, 2}, {3, 4}}, {{2}, {1, 3}, {4}}, {{4}, {1, 2, 3}}, {{1}, {2, 3, 4}}};
  for (const auto& blocks : candidates) {
    const ContractionCheck chk = check_contraction(sc, blocks);
    const ContractionResult dense = contract(c, blocks);
    CHECK(chk.is_subscheme() == dense.report.ok());
  }
  CHECK_THROWS_AS(validate_partition({{1, 2}}, 5), std::invalid_argument);
  CHECK_THROWS_AS(validate_partition({{0, 1, 2, 3, 4}}, 5), std::invalid_argument);
  CHECK_THROWS_AS(validate_partition({{1, 2}, {2, 3, 4}}, 5), std::invalid_argument);
}

TEST_CASE("wreath product of two trivial schemes") {
  const AssociationScheme k2 = cycle_scheme(2);
  const AssociationScheme k3 = cycle_scheme(3);
  const AssociationScheme w = wreath(k2, k3);
  CHECK(w.ground_size() == 6);
  CHECK(w.class_count() == 3);
  CHECK(verify_axioms(w).ok());
  // I (x) A(K3) has valency 2 and A(K2) (x) J has valency 3.
  CHECK(w.associate(1).row_count(0) == 2);
  CHECK(w.associate(2).row_count(0) == 3);
}

TEST_CASE("eigenmatrix of the heptagon scheme") {
  const AssociationScheme c = cycle_scheme(7);
  const PMatrix pm = p_matrix(c);
  REQUIRE(pm.rows.size() == 4);
  CHECK(pm.multiplicities[0] == 1);
  for (std::size_t j = 1; j < 4; ++j) CHECK(pm.multiplicities[j] == 2);
  // Class i acts on the eigenspace of frequency f as 2 cos(2 pi i f / 7).
  std::vector<double> want, got;
  for (int f = 1; f <= 3; ++f) want.push_back(2 * std::cos(2 * std::numbers::pi * f / 7.0));
  for (std::size_t j = 1; j < 4; ++j) got.push_back(pm.rows[j][1]);
  std::sort(want.begin(), want.end());
  std::sort(got.begin(), got.end());
  for (std::size_t t = 0; t < 3; ++t) CHECK(got[t] == doctest::Approx(want[t]).epsilon(1e-9));
  for (double v : pm.rows[0]) CHECK(v == doctest::Approx(v > 1.5 ? 2.0 : 1.0));
}
