#include <algorithm>
#include <cmath>
#include <deque>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "schemelab/classic_schemes.hpp"
#include "schemelab/graphs.hpp"

namespace schemelab {

struct Graph::Cache {
  std::once_flag once;
  std::vector<double> values;
};

Graph::Graph() : cache_(std::make_shared<Cache>()) {}

Graph::Graph(std::size_t n) : adj_(n), cache_(std::make_shared<Cache>()) {}

Graph::Graph(BinaryMatrix adjacency, std::string name)
    : adj_(std::move(adjacency)), name_(std::move(name)), cache_(std::make_shared<Cache>()) {
  for (std::size_t i = 0; i < adj_.size(); ++i)
    if (adj_.get(i, i)) throw std::invalid_argument("Graph: loop at vertex " + std::to_string(i));
  if (!adj_.is_symmetric()) throw std::invalid_argument("Graph: adjacency is not symmetric");
}

Graph Graph::from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                        std::string name) {
  BinaryMatrix a(n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw std::invalid_argument("Graph: edge endpoint out of range");
    if (u == v) throw std::invalid_argument("Graph: loop at vertex " + std::to_string(u));
    a.set(u, v);
    a.set(v, u);
  }
  return Graph(std::move(a), std::move(name));
}

std::optional<std::size_t> Graph::regular_degree() const {
  if (n() == 0) return 0;
  const std::size_t k = degree(0);
  for (std::size_t i = 1; i < n(); ++i)
    if (degree(i) != k) return std::nullopt;
  return k;
}

std::size_t Graph::edge_count() const { return adj_.count() / 2; }

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n(); ++i)
    for (std::size_t j = i + 1; j < n(); ++j)
      if (adj_.get(i, j)) out.emplace_back(i, j);
  return out;
}

bool Graph::has_triangle() const {
  // trace(A^3) > 0 iff some edge has a common neighbour.
  for (std::size_t i = 0; i < n(); ++i)
    for (std::size_t j = i + 1; j < n(); ++j) {
      if (!adj_.get(i, j)) continue;
      for (std::size_t w = 0; w < adj_.words(); ++w)
        if (adj_.row(i)[w] & adj_.row(j)[w]) return true;
    }
  return false;
}

bool Graph::is_connected() const {
  if (n() == 0) return true;
  std::vector<char> seen(n(), 0);
  std::deque<std::size_t> queue{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t u = 0; u < n(); ++u)
      if (adj_.get(v, u) && !seen[u]) {
        seen[u] = 1;
        ++count;
        queue.push_back(u);
      }
  }
  return count == n();
}

const std::vector<double>& Graph::spectrum() const {
  std::call_once(cache_->once, [&] {
    if (n() == 0) return;
    EigenOptions eo;
    eo.method = n() > 400 ? EigenMethod::Tridiagonal : EigenMethod::Jacobi;
    cache_->values = eig_sym(adj_.to_dense(), eo).values;
  });
  return cache_->values;
}

double Graph::lambda1() const {
  if (auto k = regular_degree()) return static_cast<double>(*k);
  return spectrum().front();
}

double Graph::lambda2() const {
  if (hint_.lambda2) return *hint_.lambda2;
  const auto& s = spectrum();
  if (s.size() < 2) throw std::domain_error("lambda2: graph has fewer than two vertices");
  return s[1];
}

double Graph::lambda_min() const {
  if (hint_.lambda_min) return *hint_.lambda_min;
  return spectrum().back();
}

Graph from_associate(const BinaryMatrix& m) { return Graph(m); }
Graph from_associate(const RatMatrix& m) {
  if (!m.is_zero_one()) throw std::invalid_argument("from_associate: entries must be 0 or 1");
  return Graph(BinaryMatrix::from_rat(m));
}

Graph complement(const Graph& g) {
  const std::size_t n = g.n();
  BinaryMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && !g.has_edge(i, j)) c.set(i, j);
  Graph out(std::move(c), g.name().empty() ? std::string() : "complement(" + g.name() + ")");
  // On the all-ones complement the spectrum maps theta -> -1 - theta.
  if (g.regular_degree() && g.n() >= 2) {
    SpectralHint h;
    if (g.hint().lambda_min) h.lambda2 = -1.0 - *g.hint().lambda_min;
    if (g.hint().lambda2) h.lambda_min = -1.0 - *g.hint().lambda2;
    if (h.lambda2 || h.lambda_min) h.source = "complement of " + g.hint().source;
    out.set_hint(std::move(h));
  }
  return out;
}

Punched punch(const Graph& g, std::size_t i) {
  if (i >= g.n()) throw std::out_of_range("punch: vertex out of range");
  Punched p;
  for (std::size_t v = 0; v < g.n(); ++v)
    if (v != i && !g.has_edge(i, v)) p.original.push_back(v);
  BinaryMatrix a(p.original.size());
  for (std::size_t x = 0; x < p.original.size(); ++x)
    for (std::size_t y = 0; y < p.original.size(); ++y)
      if (g.has_edge(p.original[x], p.original[y])) a.set(x, y);
  p.graph = Graph(std::move(a));
  return p;
}

DistanceScheme distance_scheme(const Graph& g) {
  if (!g.is_connected()) throw std::invalid_argument("distance_scheme: graph is not connected");
  const std::size_t n = g.n();
  std::vector<int> dist(n * n, -1);
  int diameter = 0;
  for (std::size_t s = 0; s < n; ++s) {
    std::deque<std::size_t> queue{s};
    dist[s * n + s] = 0;
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      for (std::size_t u = 0; u < n; ++u)
        if (g.has_edge(v, u) && dist[s * n + u] < 0) {
          dist[s * n + u] = dist[s * n + v] + 1;
          diameter = std::max(diameter, dist[s * n + u]);
          queue.push_back(u);
        }
    }
  }
  std::vector<BinaryMatrix> a(static_cast<std::size_t>(diameter) + 1, BinaryMatrix(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) a[static_cast<std::size_t>(dist[x * n + y])].set(x, y);
  std::vector<std::string> labels;
  for (int d = 0; d <= diameter; ++d) labels.push_back("D" + std::to_string(d));
  DistanceScheme out;
  out.scheme = AssociationScheme(std::move(a), std::move(labels));
  out.report = verify_axioms(out.scheme);
  out.diameter = diameter;
  return out;
}

Graph distance_graph(const Graph& g, int d) {
  const DistanceScheme ds = distance_scheme(g);
  if (d < 1 || d > ds.diameter) throw std::invalid_argument("distance_graph: d outside [1, diameter]");
  return Graph(ds.scheme.associate(static_cast<std::size_t>(d)));
}

namespace {

// Components of g that are not complete graphs.
bool has_noncomplete_component(const Graph& g) {
  const std::size_t n = g.n();
  std::vector<int> comp(n, -1);
  int c = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> members{s};
    comp[s] = c;
    for (std::size_t t = 0; t < members.size(); ++t)
      for (std::size_t u = 0; u < n; ++u)
        if (g.has_edge(members[t], u) && comp[u] < 0) {
          comp[u] = c;
          members.push_back(u);
        }
    std::size_t edges = 0;
    for (auto v : members) edges += g.degree(v);
    edges /= 2;
    if (edges != members.size() * (members.size() - 1) / 2) return true;
    ++c;
  }
  return false;
}

}  // namespace

DvtReport dvt_report(const Graph& g, const AutomorphismOptions& opts) {
  DvtReport r;
  r.vertex_transitive = is_vertex_transitive(g, opts);
  if (r.vertex_transitive) {
    // All punched graphs are isomorphic, so one vertex decides.
    r.punched_transitive = g.n() == 0 || is_vertex_transitive(punch(g, 0).graph, opts);
  } else {
    r.punched_transitive = true;
    for (std::size_t i = 0; i < g.n() && r.punched_transitive; ++i)
      r.punched_transitive = is_vertex_transitive(punch(g, i).graph, opts);
  }
  r.complement_has_noncomplete_component = has_noncomplete_component(complement(g));
  r.deeply_vertex_transitive =
      r.vertex_transitive && r.punched_transitive && r.complement_has_noncomplete_component;
  return r;
}

DistanceRegularDvt dvt_from_distance_regular(const Graph& g, int d) {
  const DistanceScheme ds = distance_scheme(g);
  if (d < 1 || d > ds.diameter)
    throw std::invalid_argument("dvt_from_distance_regular: d outside [1, diameter]");
  DistanceRegularDvt out;
  const Graph gd(ds.scheme.associate(static_cast<std::size_t>(d)));
  out.graph = complement(gd);
  out.report = dvt_report(out.graph);
  if (ds.diameter < 2)
    out.failed_hypothesis = "graph is complete";
  else if (!ds.distance_regular())
    out.failed_hypothesis = "not distance-regular: " + ds.report.witness.value_or("axiom failure");
  else if (!is_vertex_transitive(g))
    out.failed_hypothesis = "not vertex-transitive";
  else if (!has_noncomplete_component(gd))
    out.failed_hypothesis = "every component of G^(" + std::to_string(d) + ") is complete";
  out.hypotheses_hold = out.failed_hypothesis.empty();
  if (out.hypotheses_hold && !out.report.deeply_vertex_transitive)
    throw std::logic_error("dvt_from_distance_regular: hypotheses hold but the complement of G^(" +
                           std::to_string(d) + ") is not deeply vertex-transitive");
  return out;
}

namespace families {

Graph cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle: n >= 3");
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  Graph g = Graph::from_edges(n, e, "C" + std::to_string(n));
  const double pi = std::numbers::pi;
  SpectralHint h;
  h.lambda2 = 2.0 * std::cos(2.0 * pi / static_cast<double>(n));
  h.lambda_min = 2.0 * std::cos(2.0 * pi * static_cast<double>(n / 2) / static_cast<double>(n));
  h.source = "cycle spectrum 2cos(2 pi j/n)";
  g.set_hint(std::move(h));
  return g;
}

Graph complete(std::size_t n) {
  BinaryMatrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) a.set(i, j);
  Graph g(std::move(a), "K" + std::to_string(n));
  if (n >= 2) g.set_hint({-1.0, -1.0, "complete graph spectrum"});
  return g;
}

Graph antihole(std::size_t n) {
  const Graph c = complement(cycle(n));
  Graph out(c.adjacency(), "antihole" + std::to_string(n));
  out.set_hint(c.hint());
  return out;
}

Graph icosahedron() {
  // Two poles and two pentagons.
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < 5; ++i) {
    const std::size_t u = 1 + i, un = 1 + (i + 1) % 5;
    const std::size_t l = 6 + i, ln = 6 + (i + 1) % 5;
    e.emplace_back(0, u);
    e.emplace_back(u, un);
    e.emplace_back(l, ln);
    e.emplace_back(11, l);
    e.emplace_back(u, l);
    e.emplace_back(un, l);
  }
  Graph g = Graph::from_edges(12, e, "icosahedron");
  g.set_hint({std::sqrt(5.0), -std::sqrt(5.0), "icosahedron spectrum"});
  return g;
}

Graph johnson_graph(int p, int q, int i) {
  Graph g(johnson_binary(p, q, i), "G(J_{" + std::to_string(p) + "," + std::to_string(q) + "," +
                                       std::to_string(i) + "})");
  const int d = std::min(q, p - q);
  if (d >= 1) {
    double hi = -1e300, lo = 1e300;
    for (int j = 1; j <= d; ++j) {
      const double v = johnson_eigenvalue(p, q, i, j).get_d();
      hi = std::max(hi, v);
      lo = std::min(lo, v);
    }
    g.set_hint({hi, lo, "Johnson eigenvalues"});
  }
  return g;
}

Graph petersen() {
  Graph g = johnson_graph(5, 2, 2);
  Graph out(g.adjacency(), "Petersen");
  out.set_hint(g.hint());
  return out;
}

Graph folded_cube_graph(int ell) {
  if (ell < 1) throw std::invalid_argument("folded_cube_graph: ell >= 1");
  const int n = 2 * ell + 1;
  BinaryMatrix a = hamming_binary(2, n, ell);
  a |= hamming_binary(2, n, ell + 1);
  Graph g(std::move(a), "G_" + std::to_string(ell));
  double hi = -1e300, lo = 1e300;
  for (int j = 1; j <= n; ++j) {
    const mpz_class sum = hamming_eigenvalue(2, n, ell, j) + hamming_eigenvalue(2, n, ell + 1, j);
    const double v = sum.get_d();
    hi = std::max(hi, v);
    lo = std::min(lo, v);
  }
  g.set_hint({hi, lo, "Krawtchouk sums"});
  return g;
}

}  // namespace families

nlohmann::ordered_json to_json(const Graph& g) {
  nlohmann::ordered_json j;
  j["n"] = g.n();
  if (!g.name().empty()) j["name"] = g.name();
  auto e = nlohmann::ordered_json::array();
  for (auto [u, v] : g.edges()) e.push_back({u, v});
  j["edges"] = std::move(e);
  return j;
}

Graph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n")) throw std::invalid_argument("graph JSON needs 'n'");
  const auto n = j.at("n").get<std::size_t>();
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  if (j.contains("edges")) {
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw std::invalid_argument("graph JSON: edges are pairs");
      edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
    }
  } else if (j.contains("adjacency")) {
    return from_associate(rat_matrix_from_json(j.at("adjacency")));
  }
  return Graph::from_edges(n, edges, j.value("name", std::string()));
}

std::string to_dimacs(const Graph& g) {
  std::ostringstream os;
  os << "p edge " << g.n() << " " << g.edge_count() << "\n";
  for (auto [u, v] : g.edges()) os << "e " << u + 1 << " " << v + 1 << "\n";
  return os.str();
}

Graph graph_from_dimacs(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::optional<std::size_t> n;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    if (tag == "p") {
      std::string kind;
      std::size_t nv = 0, m = 0;
      if (!(ls >> kind >> nv >> m)) throw std::invalid_argument("DIMACS: malformed 'p' line");
      n = nv;
    } else if (tag == "e") {
      std::size_t u = 0, v = 0;
      if (!(ls >> u >> v) || u == 0 || v == 0) throw std::invalid_argument("DIMACS: malformed 'e' line");
      edges.emplace_back(u - 1, v - 1);
    } else {
      throw std::invalid_argument("DIMACS: unknown line '" + line + "'");
    }
  }
  if (!n) throw std::invalid_argument("DIMACS: missing 'p' line");
  return Graph::from_edges(*n, edges);
}

nlohmann::ordered_json to_json(const DvtReport& r) {
  nlohmann::ordered_json j;
  j["vertex_transitive"] = r.vertex_transitive;
  j["punched_transitive"] = r.punched_transitive;
  j["complement_has_noncomplete_component"] = r.complement_has_noncomplete_component;
  j["deeply_vertex_transitive"] = r.deeply_vertex_transitive;
  return j;
}

}  // namespace schemelab
