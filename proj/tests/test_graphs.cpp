#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "schemelab/classic_schemes.hpp"
#include "schemelab/graphs.hpp"

using namespace schemelab;

namespace {

bool is_automorphism(const Graph& a, const Graph& b, const std::vector<std::size_t>& f) {
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j = 0; j < a.n(); ++j)
      if (a.has_edge(i, j) != b.has_edge(f[i], f[j])) return false;
  return true;
}

Graph relabel(const Graph& g, const std::vector<std::size_t>& perm) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (auto [u, v] : g.edges()) e.emplace_back(perm[u], perm[v]);
  return Graph::from_edges(g.n(), e);
}

Graph path(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

Graph prism5() {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(5 + i, 5 + (i + 1) % 5);
    e.emplace_back(i, 5 + i);
  }
  return Graph::from_edges(10, e);
}

// Stable set number by scanning every vertex subset.
std::size_t alpha_by_subsets(const Graph& g) {
  const std::size_t n = g.n();
  std::size_t best = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      if ((s >> i) & 1u)
        for (std::size_t j = i + 1; j < n && ok; ++j) ok = !(((s >> j) & 1u) && g.has_edge(i, j));
    if (ok) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(s)));
  }
  return best;
}

std::vector<double> numeric_spectrum(const Graph& g) { return eig_sym(g.adjacency().to_rat()).values; }

}  // namespace

TEST_CASE("construction validates the adjacency") {
  BinaryMatrix loop(3);
  loop.set(1, 1);
  CHECK_THROWS_AS(Graph{loop}, std::invalid_argument);
  BinaryMatrix arc(3);
  arc.set(0, 1);
  CHECK_THROWS_AS(Graph{arc}, std::invalid_argument);
  const Graph p = families::petersen();
  CHECK(p.n() == 10);
  CHECK(p.regular_degree() == std::size_t{3});
  CHECK(p.edge_count() == 15);
  CHECK_FALSE(p.has_triangle());
  CHECK(p.is_connected());
  const Graph c = complement(p);
  CHECK(c.edge_count() + p.edge_count() == 45);
}

TEST_CASE("textbook spectra") {
  const auto ps = families::petersen().spectrum();
  CHECK(ps.front() == doctest::Approx(3));
  CHECK(std::count_if(ps.begin(), ps.end(), [](double x) { return std::abs(x - 1) < 1e-9; }) == 5);
  CHECK(std::count_if(ps.begin(), ps.end(), [](double x) { return std::abs(x + 2) < 1e-9; }) == 4);
  const Graph ico = families::icosahedron();
  CHECK(ico.regular_degree() == std::size_t{5});
  CHECK(ico.lambda2() == doctest::Approx(std::sqrt(5.0)));
  CHECK(ico.lambda_min() == doctest::Approx(-std::sqrt(5.0)));
}

TEST_CASE("registered spectral hints agree with numeric eigenvalues") {
  std::vector<Graph> gs = {families::cycle(7),          families::cycle(10),
                           families::antihole(9),        families::complete(6),
                           families::icosahedron(),      families::petersen(),
                           families::johnson_graph(7, 3, 1), families::johnson_graph(6, 2, 2),
                           families::folded_cube_graph(2), complement(families::petersen())};
  for (const Graph& g : gs) {
    CAPTURE(g.name());
    const auto s = numeric_spectrum(g);
    CHECK(g.lambda1() == doctest::Approx(s.front()).epsilon(1e-9));
    CHECK(g.lambda2() == doctest::Approx(s[1]).epsilon(1e-9));
    CHECK(g.lambda_min() == doctest::Approx(s.back()).epsilon(1e-9));
  }
}

TEST_CASE("exact stable set and clique numbers") {
  CHECK(alpha_bruteforce(families::petersen()) == 4);
  CHECK(omega_bruteforce(families::petersen()) == 2);
  CHECK(alpha_bruteforce(families::cycle(9)) == 4);
  CHECK(omega_bruteforce(families::antihole(7)) == 3);
  CHECK(alpha_bruteforce(families::icosahedron()) == 3);
  CHECK(omega_bruteforce(families::icosahedron()) == 3);
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 6 + static_cast<std::size_t>(trial % 9);
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (rng() % 3 == 0) e.emplace_back(i, j);
    const Graph g = Graph::from_edges(n, e);
    CHECK(alpha_bruteforce(g) == alpha_by_subsets(g));
    CHECK(omega_bruteforce(g) == alpha_by_subsets(complement(g)));
  }
}

TEST_CASE("automorphism and isomorphism searches return valid maps") {
  const Graph p = families::petersen();
  for (std::size_t v = 0; v < 10; ++v) {
    const auto f = find_automorphism(p, 0, v);
    REQUIRE(f);
    CHECK((*f)[0] == v);
    CHECK(is_automorphism(p, p, *f));
  }
  std::vector<std::size_t> perm(10);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), std::mt19937(9));
  const Graph q = relabel(p, perm);
  const auto iso = find_isomorphism(p, q);
  REQUIRE(iso);
  CHECK(is_automorphism(p, q, *iso));
  CHECK_FALSE(find_isomorphism(p, prism5()));
  CHECK_FALSE(find_automorphism(path(4), 0, 1));
}

TEST_CASE("vertex transitivity") {
  CHECK(is_vertex_transitive(families::petersen()));
  CHECK(is_vertex_transitive(families::cycle(8)));
  CHECK(is_vertex_transitive(prism5()));
  CHECK_FALSE(is_vertex_transitive(path(5)));
  // Stabiliser of a Petersen vertex: the vertex, its neighbours, the rest.
  const auto orb = automorphisms_fixing(families::petersen(), 0);
  std::vector<std::size_t> reps(orb.begin(), orb.end());
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  CHECK(reps.size() == 3);
}

TEST_CASE("punching removes a closed neighbourhood") {
  const Graph p = families::petersen();
  const Punched pu = punch(p, 0);
  CHECK(pu.graph.n() == 6);
  for (std::size_t v : pu.original) CHECK((v != 0 && !p.has_edge(0, v)));
}

TEST_CASE("distance schemes") {
  const DistanceScheme ds = distance_scheme(families::petersen());
  CHECK(ds.distance_regular());
  CHECK(ds.diameter == 2);
  CHECK(distance_graph(families::petersen(), 2) == complement(families::petersen()));
  CHECK_FALSE(distance_scheme(path(4)).distance_regular());
  const auto K = dvt_from_distance_regular(families::complete(5), 1);
  CHECK_FALSE(K.hypotheses_hold);
  CHECK(K.failed_hypothesis == "graph is complete");
}

TEST_CASE("spectral bounds on the Petersen graph") {
  const Graph p = families::petersen();
  // Chromatic number 3 and clique number 2.
  CHECK(hoffman_bound(p) == 3);
  CHECK(delsarte_bound(p, johnson_scheme(5, 2)) == 2);
  CHECK(delta_g(p) > 0);
  // Triangle-free branch: C5 gives 1, C7 gives (3 + sqrt 57) / 8.
  CHECK(delta_g(families::cycle(5)) == doctest::Approx(1.0));
  CHECK(delta_g(families::cycle(7)) == doctest::Approx((3 + std::sqrt(57.0)) / 8));
  CHECK(hoffman_bound(families::complete(6)) == 6);
  CHECK_THROWS_AS(delta_g(path(5)), std::invalid_argument);
}

TEST_CASE("serialisation round trips") {
  const Graph p = families::petersen();
  CHECK(graph_from_json(nlohmann::json::parse(to_json(p).dump())) == p);
  CHECK(graph_from_dimacs(to_dimacs(p)) == p);
  CHECK_THROWS(graph_from_dimacs("p edge 2 1\ne 1 3\n"));
}
