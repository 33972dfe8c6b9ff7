#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "schemelab/graphs.hpp"

namespace schemelab {

namespace {

using Colouring = std::vector<int>;

class Search {
 public:
  Search(const Graph& a, const Graph& b, const AutomorphismOptions& opts)
      : a_(a), b_(b), n_(a.n()), budget_(opts.node_budget) {
    if (a.n() > opts.max_vertices || b.n() > opts.max_vertices)
      throw std::length_error("automorphism search: more than " + std::to_string(opts.max_vertices) +
                              " vertices");
  }

  std::optional<std::vector<std::size_t>> run(Colouring ca, Colouring cb) {
    if (a_.n() != b_.n() || a_.edge_count() != b_.edge_count()) return std::nullopt;
    return search(std::move(ca), std::move(cb));
  }

 private:
  // Refines both colourings with one shared signature table so that colour
  // ids stay comparable. False when the colour histograms differ.
  bool refine(Colouring& ca, Colouring& cb) const {
    std::size_t colours = distinct(ca);
    while (true) {
      std::map<std::vector<int>, int> ids;
      std::vector<std::vector<int>> sa(n_), sb(n_);
      auto signatures = [&](const Graph& g, const Colouring& c, std::vector<std::vector<int>>& s) {
        for (std::size_t v = 0; v < n_; ++v) {
          s[v].push_back(c[v]);
          std::vector<int> nb;
          for (std::size_t u = 0; u < n_; ++u)
            if (g.has_edge(v, u)) nb.push_back(c[u]);
          std::sort(nb.begin(), nb.end());
          s[v].insert(s[v].end(), nb.begin(), nb.end());
          ids.emplace(s[v], 0);
        }
      };
      signatures(a_, ca, sa);
      signatures(b_, cb, sb);
      int next = 0;
      for (auto& [sig, id] : ids) id = next++;
      std::vector<int> hist(ids.size(), 0);
      for (std::size_t v = 0; v < n_; ++v) {
        ca[v] = ids[sa[v]];
        cb[v] = ids[sb[v]];
        ++hist[static_cast<std::size_t>(ca[v])];
        --hist[static_cast<std::size_t>(cb[v])];
      }
      if (std::any_of(hist.begin(), hist.end(), [](int h) { return h != 0; })) return false;
      if (ids.size() == colours) return true;
      colours = ids.size();
    }
  }

  static std::size_t distinct(const Colouring& c) {
    Colouring s = c;
    std::sort(s.begin(), s.end());
    return static_cast<std::size_t>(std::unique(s.begin(), s.end()) - s.begin());
  }

  std::optional<std::vector<std::size_t>> search(Colouring ca, Colouring cb) {
    if (++nodes_ > budget_) throw std::runtime_error("automorphism search: node budget exhausted");
    if (!refine(ca, cb)) return std::nullopt;
    std::vector<int> size(n_ + 1, 0);
    for (int c : ca) ++size[static_cast<std::size_t>(c)];
    int cell = -1;
    for (std::size_t c = 0; c < size.size(); ++c)
      if (size[c] >= 2 && (cell < 0 || size[c] < size[static_cast<std::size_t>(cell)]))
        cell = static_cast<int>(c);
    if (cell < 0) {
      std::vector<std::size_t> sigma(n_);
      std::vector<std::size_t> where(n_ + 1);
      for (std::size_t v = 0; v < n_; ++v) where[static_cast<std::size_t>(cb[v])] = v;
      for (std::size_t v = 0; v < n_; ++v) sigma[v] = where[static_cast<std::size_t>(ca[v])];
      for (std::size_t u = 0; u < n_; ++u)
        for (std::size_t v = u + 1; v < n_; ++v)
          if (a_.has_edge(u, v) != b_.has_edge(sigma[u], sigma[v])) return std::nullopt;
      return sigma;
    }
    const std::size_t x = static_cast<std::size_t>(
        std::find(ca.begin(), ca.end(), cell) - ca.begin());
    const int fresh = static_cast<int>(n_) + 1;
    for (std::size_t y = 0; y < n_; ++y) {
      if (cb[y] != cell) continue;
      Colouring na = ca, nb = cb;
      na[x] = fresh;
      nb[y] = fresh;
      if (auto r = search(std::move(na), std::move(nb))) return r;
    }
    return std::nullopt;
  }

  const Graph& a_;
  const Graph& b_;
  std::size_t n_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
};

struct Orbits {
  std::vector<std::size_t> parent;
  explicit Orbits(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  void join(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  void absorb(const std::vector<std::size_t>& sigma) {
    for (std::size_t v = 0; v < sigma.size(); ++v) join(v, sigma[v]);
  }
};

}  // namespace

std::optional<std::vector<std::size_t>> find_automorphism(const Graph& g, std::size_t u,
                                                          std::size_t v,
                                                          const AutomorphismOptions& opts) {
  if (u >= g.n() || v >= g.n()) throw std::out_of_range("find_automorphism: vertex out of range");
  Colouring ca(g.n(), 0), cb(g.n(), 0);
  ca[u] = 1;
  cb[v] = 1;
  return Search(g, g, opts).run(std::move(ca), std::move(cb));
}

std::optional<std::vector<std::size_t>> find_isomorphism(const Graph& a, const Graph& b,
                                                         const AutomorphismOptions& opts) {
  if (a.n() != b.n()) return std::nullopt;
  return Search(a, b, opts).run(Colouring(a.n(), 0), Colouring(b.n(), 0));
}

bool is_vertex_transitive(const Graph& g, const AutomorphismOptions& opts) {
  if (g.n() <= 1) return true;
  if (!g.regular_degree()) return false;
  Orbits orbits(g.n());
  for (std::size_t v = 1; v < g.n(); ++v) {
    if (orbits.find(v) == 0) continue;
    auto sigma = find_automorphism(g, 0, v, opts);
    if (!sigma) return false;
    orbits.absorb(*sigma);
  }
  return true;
}

std::vector<std::size_t> automorphisms_fixing(const Graph& g, std::size_t i,
                                              const AutomorphismOptions& opts) {
  if (i >= g.n()) throw std::out_of_range("automorphisms_fixing: vertex out of range");
  Orbits orbits(g.n());
  for (std::size_t a = 0; a < g.n(); ++a) {
    if (a == i || orbits.find(a) != a) continue;
    for (std::size_t b = a + 1; b < g.n(); ++b) {
      if (b == i || orbits.find(b) == orbits.find(a)) continue;
      Colouring ca(g.n(), 0), cb(g.n(), 0);
      ca[i] = cb[i] = 1;
      ca[a] = 2;
      cb[b] = 2;
      if (auto sigma = Search(g, g, opts).run(std::move(ca), std::move(cb))) orbits.absorb(*sigma);
    }
  }
  std::vector<std::size_t> out(g.n());
  for (std::size_t v = 0; v < g.n(); ++v) out[v] = orbits.find(v);
  return out;
}

}  // namespace schemelab
