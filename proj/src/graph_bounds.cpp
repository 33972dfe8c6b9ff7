#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "schemelab/graphs.hpp"

namespace schemelab {

double delta_g(const Graph& g) {
  const auto k = g.regular_degree();
  if (!k) throw std::invalid_argument("delta_g: graph is not regular");
  if (g.n() < 4) throw std::invalid_argument("delta_g: needs n >= 4");
  const double n = static_cast<double>(g.n());
  const double kk = static_cast<double>(*k);
  if (g.has_triangle()) return (2 * n - 3 * kk) / (n - 3);
  const double b = n - 3 * kk + 2;
  return (b + std::sqrt(b * b + 4 * (n - 3) * (n - 2 * kk))) / (2 * (n - 3));
}

namespace {

class MaxClique {
 public:
  MaxClique(const Graph& g, const SearchBudget& b) : budget_(b.node_budget) {
    if (g.n() > 64) throw std::length_error("clique search: more than 64 vertices");
    nbr_.assign(g.n(), 0);
    for (std::size_t i = 0; i < g.n(); ++i)
      for (std::size_t j = 0; j < g.n(); ++j)
        if (g.has_edge(i, j)) nbr_[i] |= std::uint64_t{1} << j;
  }

  std::size_t run() {
    const std::size_t n = nbr_.size();
    if (n == 0) return 0;
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    expand(all, 0);
    return best_;
  }

 private:
  // Greedy colouring of the candidate set bounds the clique size from above.
  void expand(std::uint64_t cand, std::size_t size) {
    if (++nodes_ > budget_) throw std::runtime_error("clique search: node budget exhausted");
    std::vector<int> order, colour;
    std::uint64_t rest = cand;
    int c = 0;
    while (rest) {
      ++c;
      std::uint64_t avail = rest;
      while (avail) {
        const int v = std::countr_zero(avail);
        const std::uint64_t bit = std::uint64_t{1} << v;
        avail &= ~(nbr_[static_cast<std::size_t>(v)] | bit);
        rest &= ~bit;
        order.push_back(v);
        colour.push_back(c);
      }
    }
    for (std::size_t t = order.size(); t-- > 0;) {
      if (size + static_cast<std::size_t>(colour[t]) <= best_) return;
      const int v = order[t];
      const std::uint64_t next = cand & nbr_[static_cast<std::size_t>(v)];
      if (next == 0) {
        if (size + 1 > best_) best_ = size + 1;
      } else {
        expand(next, size + 1);
      }
      cand &= ~(std::uint64_t{1} << v);
    }
  }

  std::vector<std::uint64_t> nbr_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  std::size_t best_ = 0;
};

double least_eigenvalue(const Graph& g) {
  const double ln = g.lambda_min();
  if (ln >= 0) throw std::domain_error("spectral bound: least eigenvalue is not negative");
  return ln;
}

}  // namespace

std::size_t omega_bruteforce(const Graph& g, const SearchBudget& b) { return MaxClique(g, b).run(); }

std::size_t alpha_bruteforce(const Graph& g, const SearchBudget& b) {
  return MaxClique(complement(g), b).run();
}

long delsarte_bound(const Graph& g, const AssociationScheme& scheme) {
  if (scheme.ground_size() != g.n())
    throw std::invalid_argument("delsarte_bound: scheme ground set does not match the graph");
  if (!is_commutative(structure_constants(scheme)))
    throw std::invalid_argument("delsarte_bound: scheme is not commutative");
  BinaryMatrix cover(g.n());
  for (std::size_t i = 1; i < scheme.class_count(); ++i) {
    const BinaryMatrix& a = scheme.associate(i);
    const auto pos = a.first_one();
    if (!pos) continue;
    if (g.has_edge(pos->first, pos->second)) cover |= a;
  }
  if (!(cover == g.adjacency()))
    throw std::invalid_argument("delsarte_bound: adjacency is not a union of scheme classes");
  return static_cast<long>(std::floor(1.0 - g.lambda1() / least_eigenvalue(g) + 1e-9));
}

long hoffman_bound(const Graph& g) {
  return static_cast<long>(std::ceil(1.0 - g.lambda1() / least_eigenvalue(g) - 1e-9));
}

long clique_bound_dvt(const Graph& g) {
  const Graph gc = complement(g);
  if (!dvt_report(gc).deeply_vertex_transitive)
    throw std::domain_error("clique_bound_dvt: complement is not deeply vertex-transitive");
  const double m = std::min({g.lambda_min(), -2.0, -1.0 - delta_g(gc)});
  return static_cast<long>(std::floor(1.0 - g.lambda1() / m + 1e-9));
}

}  // namespace schemelab
