#pragma once
// Simple undirected graphs built from associates: spectra, automorphism and
// transitivity tests, the deeply-vertex-transitive predicate, exact stable
// set and clique numbers for small graphs, and spectral bounds.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "schemelab/matkit.hpp"
#include "schemelab/scheme_core.hpp"

namespace schemelab {

// Closed-form spectral values registered by family constructors.
struct SpectralHint {
  std::optional<double> lambda2;
  std::optional<double> lambda_min;
  std::string source;
};

class Graph {
 public:
  Graph();
  explicit Graph(std::size_t n);
  // Throws std::invalid_argument unless symmetric with zero diagonal.
  explicit Graph(BinaryMatrix adjacency, std::string name = {});
  static Graph from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                          std::string name = {});

  std::size_t n() const { return adj_.size(); }
  const BinaryMatrix& adjacency() const { return adj_; }
  bool has_edge(std::size_t i, std::size_t j) const { return adj_.get(i, j); }
  std::size_t degree(std::size_t i) const { return adj_.row_count(i); }
  std::optional<std::size_t> regular_degree() const;
  std::size_t edge_count() const;
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  bool has_triangle() const;
  bool is_connected() const;
  const std::string& name() const { return name_; }

  // Eigenvalues of A(G), descending, computed once.
  const std::vector<double>& spectrum() const;
  double lambda1() const;
  // Second largest eigenvalue counted with multiplicity; closed form when registered.
  double lambda2() const;
  double lambda_min() const;
  const SpectralHint& hint() const { return hint_; }
  void set_hint(SpectralHint h) { hint_ = std::move(h); }

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  struct Cache;
  BinaryMatrix adj_;
  std::string name_;
  SpectralHint hint_;
  std::shared_ptr<Cache> cache_;
};

Graph from_associate(const RatMatrix& m);
Graph from_associate(const BinaryMatrix& m);
Graph complement(const Graph& g);

struct Punched {
  Graph graph;
  std::vector<std::size_t> original;  // original[v] = vertex of g
};
// Induced subgraph on vertices that are neither i nor adjacent to i.
Punched punch(const Graph& g, std::size_t i);

struct AutomorphismOptions {
  std::size_t max_vertices = 64;
  std::size_t node_budget = 2'000'000;
};

// An automorphism sending u to v, searched by colour refinement with
// individualisation. Throws std::runtime_error when the budget runs out.
std::optional<std::vector<std::size_t>> find_automorphism(const Graph& g, std::size_t u,
                                                          std::size_t v,
                                                          const AutomorphismOptions& opts = {});
// Isomorphism search between two graphs; nullopt when none exists.
std::optional<std::vector<std::size_t>> find_isomorphism(const Graph& a, const Graph& b,
                                                         const AutomorphismOptions& opts = {});
bool is_vertex_transitive(const Graph& g, const AutomorphismOptions& opts = {});
// orbit[v] = smallest vertex in the orbit of v under the stabiliser of i.
std::vector<std::size_t> automorphisms_fixing(const Graph& g, std::size_t i,
                                              const AutomorphismOptions& opts = {});

struct DvtReport {
  bool vertex_transitive = false;
  bool punched_transitive = false;
  bool complement_has_noncomplete_component = false;
  bool deeply_vertex_transitive = false;
};
DvtReport dvt_report(const Graph& g, const AutomorphismOptions& opts = {});

// Requires a regular graph with n >= 4.
double delta_g(const Graph& g);

struct SearchBudget {
  std::size_t node_budget = 50'000'000;
};
std::size_t omega_bruteforce(const Graph& g, const SearchBudget& b = {});
std::size_t alpha_bruteforce(const Graph& g, const SearchBudget& b = {});

// Floor of 1 - l1/ln; g's edges must be a union of classes of a commutative scheme.
long delsarte_bound(const Graph& g, const AssociationScheme& scheme);
// Ceiling of 1 - l1/ln.
long hoffman_bound(const Graph& g);
// Floor of 1 - l1/min{ln, -2, -1 - delta(complement)}; complement must be DVT.
long clique_bound_dvt(const Graph& g);

struct DistanceScheme {
  AssociationScheme scheme;  // I, G^(1), ..., G^(diameter)
  AxiomReport report;
  int diameter = 0;
  bool distance_regular() const { return report.ok(); }
};
DistanceScheme distance_scheme(const Graph& g);
Graph distance_graph(const Graph& g, int d);

struct DistanceRegularDvt {
  Graph graph;  // complement of G^(d)
  DvtReport report;
  bool hypotheses_hold = false;
  std::string failed_hypothesis;
};
// Throws std::logic_error if the hypotheses hold but the conclusion fails.
DistanceRegularDvt dvt_from_distance_regular(const Graph& g, int d);

namespace families {
Graph cycle(std::size_t n);
Graph complete(std::size_t n);
Graph antihole(std::size_t n);
Graph icosahedron();
Graph petersen();
Graph johnson_graph(int p, int q, int i);
// Graph of B_ell in the folded scheme on {0,1}^(2 ell + 1).
Graph folded_cube_graph(int ell);
}  // namespace families

nlohmann::ordered_json to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);
// "p edge n m" header then "e u v" lines, 1-based.
std::string to_dimacs(const Graph& g);
Graph graph_from_dimacs(const std::string& text);
nlohmann::ordered_json to_json(const DvtReport& r);

}  // namespace schemelab
