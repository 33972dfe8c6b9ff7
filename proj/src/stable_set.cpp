#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "schemelab/lsplus.hpp"

namespace schemelab {

namespace {

struct Region {
  std::size_t n = 0, k = 0;
  double lambda2 = 0;
  bool edge_oo = false, edge_nn = false, edge_no = false;

  // Interval of admissible c for a given b, empty when lo > hi.
  std::pair<double, double> c_range(double b) const {
    double lo = 0.0, hi = b;  // box on non-neighbour coordinates of Y e_i and Y (e0 - e_i)
    lo = std::max(lo, 2 * b - 1);
    if (edge_oo) {
      hi = std::min(hi, b / 2);
      lo = std::max(lo, (3 * b - 1) / 2);
    }
    if (edge_no) lo = std::max(lo, 3 * b - 1);
    if (lambda2 > -1) hi = std::min(hi, b / (lambda2 + 1));
    const double nk = static_cast<double>(n - k - 1);
    const double nn = static_cast<double>(n);
    if (nk > 0)
      lo = std::max(lo, (b * b * nn - b) / nk);
    else if (b - b * b * nn < 0)
      lo = hi + 1;
    return {lo, hi};
  }

  double b_cap() const {
    double cap = 0.5;  // 2b <= 1 from an edge at i, and the box
    if (edge_nn) cap = std::min(cap, 1.0 / 3);
    return cap;
  }

  bool feasible(double b) const {
    const auto [lo, hi] = c_range(b);
    return lo <= hi + 1e-15;
  }
};

Region region_of(const Graph& g) {
  Region r;
  r.n = g.n();
  r.k = g.degree(0);
  r.lambda2 = g.lambda2();
  std::vector<std::size_t> nb, far;
  for (std::size_t v = 1; v < g.n(); ++v) (g.has_edge(0, v) ? nb : far).push_back(v);
  for (std::size_t x : far)
    for (std::size_t y : far) r.edge_oo = r.edge_oo || g.has_edge(x, y);
  for (std::size_t x : nb)
    for (std::size_t y : nb) r.edge_nn = r.edge_nn || g.has_edge(x, y);
  for (std::size_t x : nb)
    for (std::size_t y : far) r.edge_no = r.edge_no || g.has_edge(x, y);
  return r;
}

// Certificate of the lower-bound proof at a rational a.
LsCertificate proof_certificate(const Graph& g, const Rational& a) {
  const std::size_t n = g.n();
  const Rational nn(static_cast<long>(n));
  const Rational k(static_cast<long>(*g.regular_degree()));
  const Rational d = nn * (a + 1) * (a + 1) / (nn - k + a);
  LsCertificate c;
  c.Y = RatMatrix(n + 1);
  c.Y(0, 0) = 1;
  const Rational diag = (a + 1) / d, off = Rational(1) / d;
  for (std::size_t i = 0; i < n; ++i) {
    c.Y(0, i + 1) = c.Y(i + 1, 0) = c.Y(i + 1, i + 1) = diag;
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && !g.has_edge(i, j)) c.Y(i + 1, j + 1) = off;
  }
  return c;
}

DvtReport safe_dvt(const Graph& g) {
  try {
    return dvt_report(g);
  } catch (const std::length_error&) {
    return {};
  }
}

}  // namespace

TemplateOptimum template_optimum(const Graph& g) {
  if (!g.regular_degree() || g.n() < 2) throw std::invalid_argument("template_optimum: regular graph needed");
  const Region reg = region_of(g);
  TemplateOptimum t;
  double lo = 0.0, hi = reg.b_cap();
  if (reg.feasible(hi)) {
    lo = hi;
  } else {
    for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
      const double mid = 0.5 * (lo + hi);
      (reg.feasible(mid) ? lo : hi) = mid;
    }
  }
  t.b = lo;
  const auto [clo, chi] = reg.c_range(lo);
  t.c = std::max(0.0, std::min(clo, chi));
  t.value = static_cast<double>(reg.n) * t.b;
  t.constraints = {"c >= 0", "c <= b", "b - c <= 1 - b", "2b <= 1",
                   "b + c(n-k-1) - n b^2 >= 0"};
  if (reg.lambda2 > -1) t.constraints.emplace_back("c <= b/(lambda2+1)");
  if (reg.edge_oo) {
    t.constraints.emplace_back("2c <= b");
    t.constraints.emplace_back("3b - 2c <= 1");
  }
  if (reg.edge_nn) t.constraints.emplace_back("3b <= 1");
  if (reg.edge_no) t.constraints.emplace_back("3b - c <= 1");
  return t;
}

bool AlphaLsReport::ok() const {
  if (!certificate.ok()) return false;
  if (exact && (!optimum_gap || *optimum_gap >= 1e-8)) return false;
  return true;
}

AlphaLsReport alpha_lsplus_dvt(const Graph& g, const PsdOptions& psd) {
  const auto k = g.regular_degree();
  if (!k) throw std::invalid_argument("alpha_lsplus_dvt: graph is not regular");
  if (g.n() < 4) throw std::invalid_argument("alpha_lsplus_dvt: needs n >= 4");
  AlphaLsReport r;
  r.n = g.n();
  r.k = *k;
  r.triangle = g.has_triangle();
  r.lambda2 = g.lambda2();
  r.delta = delta_g(g);
  r.a = std::max({1.0, r.lambda2, r.delta});
  const double n = static_cast<double>(r.n), kk = static_cast<double>(r.k);
  r.bound = (n - kk + r.a) / (r.a + 1);
  r.dvt = safe_dvt(g);
  r.exact = r.dvt.deeply_vertex_transitive;
  if (r.exact) {
    r.optimum = template_optimum(g);
    r.optimum_gap = std::abs(r.optimum->value - r.bound);
  }

  const Polytope P = build_frac(g);
  // Small-denominator rational equal to a when a is rational; otherwise a
  // value just above it, which keeps every inequality of the proof valid.
  std::optional<Rational> snapped;
  for (long den = 1; den <= 512 && !snapped; ++den) {
    const long num = static_cast<long>(std::ceil(r.a * static_cast<double>(den) - 1e-9));
    const Rational cand(num, den);
    if (std::abs(cand.to_double() - r.a) < 1e-11) snapped = cand;
  }
  auto attempt = [&](const Rational& a) {
    r.certificate_a = a;
    r.certificate = verify_certificate(P, proof_certificate(g, a), psd);
    return r.certificate.ok();
  };
  r.certificate_a_exact = snapped && attempt(*snapped);
  if (!r.certificate_a_exact) {
    const long scale = 1'000'000'000;
    attempt(Rational(static_cast<long>(std::ceil(r.a * scale)) + 1, scale));
  }
  const Rational nk(static_cast<long>(r.n - r.k));
  r.certificate_value = (nk + r.certificate_a) / (r.certificate_a + 1);
  return r;
}

nlohmann::ordered_json to_json(const AlphaLsReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["triangle"] = r.triangle;
  j["lambda2"] = {{"value", r.lambda2}, {"provenance", "numeric"}};
  j["delta"] = {{"value", r.delta}, {"provenance", "closed-form"}};
  j["a"] = r.a;
  j["bound"] = {{"value", r.bound}, {"provenance", "closed-form"}};
  j["deeply_vertex_transitive"] = to_json(r.dvt);
  j["exact"] = r.exact;
  if (r.optimum) {
    j["template"] = {{"b", r.optimum->b},
                     {"c", r.optimum->c},
                     {"value", r.optimum->value},
                     {"provenance", "numeric"},
                     {"constraints", r.optimum->constraints}};
    j["template_gap"] = *r.optimum_gap;
  }
  j["certificate"] = {{"a", r.certificate_a.str()},
                      {"a_exact", r.certificate_a_exact},
                      {"value", r.certificate_value.str()},
                      {"report", to_json(r.certificate)}};
  j["ok"] = r.ok();
  return j;
}

ThetaReport theta_dvt(const Graph& g) {
  const auto k = g.regular_degree();
  if (!k) throw std::invalid_argument("theta_dvt: graph is not regular");
  if (g.n() < 2 || *k + 1 == g.n()) throw std::invalid_argument("theta_dvt: graph is complete");
  ThetaReport t;
  const double l2 = g.lambda2();
  t.value = (static_cast<double>(g.n() - *k) + l2) / (l2 + 1);
  t.dvt = safe_dvt(g);
  t.exact = t.dvt.deeply_vertex_transitive;
  return t;
}

}  // namespace schemelab
