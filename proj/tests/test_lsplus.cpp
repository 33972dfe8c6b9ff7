#include <doctest.h>

#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <stdexcept>

#include "schemelab/hypermatching.hpp"
#include "schemelab/lsplus.hpp"

using namespace schemelab;

namespace {

LsCertificate rank_one(const std::vector<int>& x) {
  LsCertificate c;
  const std::size_t n = x.size();
  c.Y = RatMatrix(n + 1);
  std::vector<int> v{1};
  v.insert(v.end(), x.begin(), x.end());
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; j <= n; ++j) c.Y(i, j) = Rational(v[i] * v[j]);
  return c;
}

PsdOptions exact_psd() {
  PsdOptions o;
  o.mode = PsdMode::Exact;
  return o;
}

// The displayed 7-cycle certificate, scaled by 7.
LsCertificate seven_cycle_certificate() {
  const int rows[8][8] = {{7, 3, 3, 3, 3, 3, 3, 3}, {3, 3, 0, 2, 1, 1, 2, 0}, {3, 0, 3, 0, 2, 1, 1, 2},
                          {3, 2, 0, 3, 0, 2, 1, 1}, {3, 1, 2, 0, 3, 0, 2, 1}, {3, 1, 1, 2, 0, 3, 0, 2},
                          {3, 2, 1, 1, 2, 0, 3, 0}, {3, 0, 2, 1, 1, 2, 0, 3}};
  LsCertificate c;
  c.Y = RatMatrix(8);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) c.Y(i, j) = Rational(rows[i][j], 7);
  return c;
}

// Every 0/1 point of {x : rows hold}, by depth-first search over coordinates.
std::vector<std::vector<int>> integral_points(const Polytope& P) {
  std::vector<std::vector<int>> out;
  std::vector<int> x(P.n, 0);
  auto feasible = [&](std::size_t upto) {
    for (const auto& row : P.rows) {
      Rational lhs = 0;
      bool decided = true;
      for (const auto& [i, a] : row.coeffs) {
        if (i >= upto && a.sign() < 0) decided = false;
        if (i < upto && x[i]) lhs += a;
      }
      // Positive coefficients only grow the left side, so prune early on them.
      if (decided && row.rhs < lhs) return false;
    }
    return true;
  };
  std::function<void(std::size_t)> dfs = [&](std::size_t i) {
    if (!feasible(i)) return;
    if (i == P.n) {
      out.push_back(x);
      return;
    }
    x[i] = 0;
    dfs(i + 1);
    x[i] = 1;
    dfs(i + 1);
    x[i] = 0;
  };
  dfs(0);
  return out;
}

std::size_t stable_set_count(const Graph& g) {
  std::size_t c = 0;
  for (std::uint32_t s = 0; s < (1u << g.n()); ++s) {
    bool ok = true;
    for (auto [u, v] : g.edges()) ok = ok && !(((s >> u) & 1u) && ((s >> v) & 1u));
    c += ok;
  }
  return c;
}

}  // namespace

TEST_CASE("polytope builders") {
  const Polytope f = build_frac(families::cycle(7));
  CHECK(f.n == 7);
  CHECK(f.rows.size() == 7);
  const Polytope m = build_mt(5, 2, 1);
  CHECK(m.n == 10);
  REQUIRE(m.rows.size() == 5);
  for (const auto& row : m.rows) {
    CHECK(row.coeffs.size() == 4);  // each vertex lies in four edges of K5
    CHECK(row.rhs == Rational(1));
  }
  const Polytope c = build_mt_cover(5, 2, 1);
  for (const auto& row : c.rows) CHECK(row.rhs == Rational(-1));
  CHECK(build_bmt(2, 5, 2).n == 10);
  CHECK_THROWS_AS(build_mt(3, 2, 2), std::invalid_argument);
}

TEST_CASE("cone membership") {
  const Polytope f = build_frac(families::cycle(7));
  std::vector<Rational> v(8, Rational(3, 7));
  v[0] = 1;
  CHECK(cone_member(f, v));
  CHECK(cone_member(f, std::vector<Rational>(8, Rational(0))));
  std::vector<Rational> ray(8, Rational(0));
  ray[1] = 1;
  CHECK_FALSE(cone_member(f, ray));
  std::vector<Rational> over(8, Rational(4, 7));
  over[0] = 1;
  const ConeCheck chk = cone_check(f, over);
  CHECK_FALSE(chk.member);
  CHECK(chk.violated_row);
}

TEST_CASE("rank-one lifts of integral points verify") {
  std::mt19937 rng(2);
  std::vector<Graph> gs = {families::cycle(5), families::cycle(7), families::antihole(7), families::complete(4)};
  for (int t = 0; t < 6; ++t) {
    const std::size_t n = 5 + static_cast<std::size_t>(t % 4);
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (rng() % 2) e.emplace_back(i, j);
    gs.push_back(Graph::from_edges(n, e));
  }
  for (const Graph& g : gs) {
    const Polytope P = build_frac(g);
    const auto pts = integral_points(P);
    CHECK(pts.size() == stable_set_count(g));
    for (const auto& x : pts) CHECK(verify_certificate(P, rank_one(x), exact_psd()).ok());
  }
  for (auto [p, q, r] : std::vector<std::array<int, 3>>{{5, 2, 1}, {6, 2, 1}, {7, 2, 1}, {6, 3, 1}, {6, 2, 2}}) {
    const Polytope P = build_mt(p, q, r);
    const auto pts = integral_points(P);
    CHECK_FALSE(pts.empty());
    for (const auto& x : pts) {
      const CertificateReport rep = verify_certificate(P, rank_one(x), exact_psd());
      CHECK(rep.ok());
      CHECK(rep.point_in_cone);
    }
  }
}

TEST_CASE("seven-cycle certificate verifies exactly and breaks when perturbed") {
  const Polytope P = build_frac(families::cycle(7));
  const LsCertificate c = seven_cycle_certificate();
  const CertificateReport rep = verify_certificate(P, c, exact_psd());
  CHECK(rep.ok());
  CHECK(rep.psd.used == PsdMode::Exact);
  for (const auto& xi : c.x()) CHECK(xi == Rational(3, 7));

  LsCertificate bad = c;
  bad.Y(1, 3) += Rational(1, 7);
  bad.Y(3, 1) += Rational(1, 7);
  CHECK_FALSE(verify_certificate(P, bad, exact_psd()).ok());
  LsCertificate asym = c;
  asym.Y(1, 3) += Rational(1, 7);
  CHECK_FALSE(verify_certificate(P, asym, exact_psd()).symmetric);

  const LsCertificate back = certificate_from_json(nlohmann::json::parse(to_json(c).dump()));
  CHECK(back.Y == c.Y);
}

TEST_CASE("stable set values of antiholes") {
  for (std::size_t ell : {2u, 3u, 4u}) {
    const Graph g = families::antihole(2 * ell + 1);
    const AlphaLsReport rep = alpha_lsplus_dvt(g, exact_psd());
    CHECK(rep.ok());
    CHECK(rep.exact);
    CHECK(rep.bound == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(alpha_bruteforce(g) == 2);
    REQUIRE(rep.optimum);
    CHECK(std::abs(rep.optimum->value - rep.bound) < 1e-8);
    const ThetaReport th = theta_dvt(g);
    CHECK(th.value == doctest::Approx(1.0 + 1.0 / std::cos(std::numbers::pi / static_cast<double>(2 * ell + 1))));
    CHECK(th.value >= rep.bound - 1e-12);
  }
}

TEST_CASE("Johnson complements") {
  for (int p : {5, 6}) {
    const Graph g = complement(families::johnson_graph(p, 2, 1));
    const AlphaLsReport rep = alpha_lsplus_dvt(g, exact_psd());
    CHECK(rep.ok());
    CHECK(rep.bound == doctest::Approx(p - 1).epsilon(1e-10));
    CHECK(alpha_bruteforce(g) == static_cast<std::size_t>(p - 1));
  }
  const Graph k = complement(families::johnson_graph(5, 2, 2));
  const AlphaLsReport rep = alpha_lsplus_dvt(k, exact_psd());
  CHECK(rep.ok());
  CHECK(rep.bound == doctest::Approx(2.5).epsilon(1e-10));
  CHECK(theta_dvt(k).value == doctest::Approx(2.5).epsilon(1e-10));
  CHECK(alpha_bruteforce(k) == 2);
}

TEST_CASE("non-DVT bound on the seven-cycle is a valid lower bound only") {
  const AlphaLsReport rep = alpha_lsplus_dvt(families::cycle(7));
  CHECK_FALSE(rep.exact);
  CHECK(rep.delta == doctest::Approx((3 + std::sqrt(57.0)) / 8).epsilon(1e-12));
  CHECK(rep.bound == doctest::Approx((5.0 + rep.delta) / (rep.delta + 1)).epsilon(1e-12));
  CHECK(rep.bound < 3.0);
  CHECK(rep.certificate.ok());
  CHECK_THROWS_AS(alpha_lsplus_dvt(Graph::from_edges(4, {{0, 1}})), std::invalid_argument);
}

TEST_CASE("matching certificate on K5") {
  const RankCertificateReport rep = stgen1_certificate(5, 2, 1, 1, exact_psd());
  CHECK(rep.ok());
  REQUIRE(rep.alphas.size() >= 2);
  CHECK(rep.alphas[0] == Rational(1, 4));
  CHECK(rep.alphas[1] == Rational(1, 2));
  // Lower block (1/4)(I + (1/2) Petersen) has eigenvalues 5/8, 3/8 and 0.
  const LsCertificate c = stgen1_matrix(5, 2, 1);
  RatMatrix lower(10);
  for (std::size_t i = 0; i < 10; ++i)
    for (std::size_t j = 0; j < 10; ++j) lower(i, j) = c.Y(i + 1, j + 1);
  const auto vals = eig_sym(lower).values;
  for (double v : vals) {
    const bool known = std::abs(v - 0.625) < 1e-9 || std::abs(v - 0.375) < 1e-9 || std::abs(v) < 1e-9;
    CHECK(known);
  }
  CHECK(verify_certificate(build_mt(5, 2, 1), c, exact_psd()).ok());
  CHECK_THROWS_AS(stgen1_certificate(3, 2, 1, 1), std::invalid_argument);
}

TEST_CASE("b-matching certificate degenerates to the matching case at b = 1") {
  const RankCertificateReport rep = stgen4_certificate(1, 5, 2, exact_psd());
  CHECK(rep.ok());
  REQUIRE(rep.alphas.size() == 4);
  CHECK(rep.alphas[1].is_zero());
  CHECK(rep.alphas[2].is_zero());
  for (const auto& e : rep.eigen) CHECK(e.closed_form.sign() >= 0);
  // q divides bp: the point is integral, so no rank is claimed.
  CHECK_FALSE(stgen4_certificate(2, 6, 2).implied_rank);
  CHECK_THROWS_AS(stgen4_certificate(5, 5, 2), std::invalid_argument);
}

TEST_CASE("integrality gaps") {
  const GapReport g = mt_gap(7, 2, 1);
  CHECK(g.ok());
  CHECK(g.ratio_form == Rational(7, 6));
  CHECK(g.mod_form == Rational(7, 6));
  CHECK(g.packing_bruteforce == 3L);
  CHECK(g.covering_bruteforce == 4L);
  CHECK(mt_gap(5, 2, 1).ratio_form == Rational(5, 4));
  CHECK_THROWS_AS(mt_gap(6, 2, 1), std::invalid_argument);
  // Three disjoint triples fit in ten points, four are needed to cover them.
  CHECK(max_disjoint_matchings(10, 3, 1) == 3);
  CHECK(min_matching_cover(10, 3, 1) == 4);
}
