#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "schemelab/matkit.hpp"

namespace schemelab {

std::string_view to_string(PsdMode m) {
  switch (m) {
    case PsdMode::Exact: return "exact";
    case PsdMode::Float: return "float";
    case PsdMode::Auto: return "auto";
  }
  return "auto";
}

std::string_view to_string(PsdVerdict v) {
  switch (v) {
    case PsdVerdict::Psd: return "psd";
    case PsdVerdict::NotPsd: return "not_psd";
    case PsdVerdict::Borderline: return "borderline";
  }
  return "psd";
}

PsdMode parse_psd_mode(std::string_view s) {
  if (s == "exact") return PsdMode::Exact;
  if (s == "float") return PsdMode::Float;
  if (s == "auto") return PsdMode::Auto;
  throw std::invalid_argument("unknown PSD mode '" + std::string(s) + "'");
}

namespace {

// Symmetric elimination with largest-diagonal pivoting. A PSD matrix never
// produces a negative pivot, and a zero pivot forces its whole row to vanish.
PsdResult exact_ldlt(const RatMatrix& a) {
  const std::size_t n = a.size();
  std::vector<mpq_class> w(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) w[i * n + j] = a(i, j).raw();
  auto at = [&](std::size_t i, std::size_t j) -> mpq_class& {
    return i <= j ? w[i * n + j] : w[j * n + i];
  };
  std::vector<std::size_t> live(n);
  for (std::size_t i = 0; i < n; ++i) live[i] = i;
  PsdResult res;
  res.used = PsdMode::Exact;
  mpq_class f;
  while (!live.empty()) {
    std::size_t best = 0;
    for (std::size_t t = 1; t < live.size(); ++t)
      if (at(live[t], live[t]) > at(live[best], live[best])) best = t;
    const std::size_t piv = live[best];
    const mpq_class d = at(piv, piv);
    if (sgn(d) < 0) {
      res.verdict = PsdVerdict::NotPsd;
      res.witness_index = piv;
      res.witness_pivot = Rational(d);
      return res;
    }
    if (sgn(d) == 0) {
      for (std::size_t s = 0; s < live.size(); ++s)
        for (std::size_t t = s + 1; t < live.size(); ++t)
          if (sgn(at(live[s], live[t])) != 0) {
            res.verdict = PsdVerdict::NotPsd;
            res.witness_index = live[s];
            res.witness_pivot = Rational(0);
            return res;
          }
      res.verdict = PsdVerdict::Psd;
      return res;
    }
    live.erase(live.begin() + static_cast<std::ptrdiff_t>(best));
    for (std::size_t s = 0; s < live.size(); ++s) {
      const std::size_t i = live[s];
      if (sgn(at(i, piv)) == 0) continue;
      f = at(i, piv) / d;
      for (std::size_t t = s; t < live.size(); ++t) {
        const std::size_t j = live[t];
        const mpq_class& pj = at(piv, j);
        if (sgn(pj) == 0) continue;
        at(i, j) -= f * pj;
      }
    }
  }
  res.verdict = PsdVerdict::Psd;
  return res;
}

PsdResult float_check(const RatMatrix& a, double tol) {
  PsdResult res;
  res.used = PsdMode::Float;
  if (a.size() == 0) {
    res.verdict = PsdVerdict::Psd;
    return res;
  }
  EigenOptions eo;
  eo.vectors = true;
  const Spectrum s = eig_sym(a, eo);
  const double lmin = s.values.back();
  const double scale = std::max(1.0, std::max(std::fabs(s.values.front()), std::fabs(lmin)));
  res.min_eigenvalue = lmin;
  const double* v = s.vectors.row(a.size() - 1);
  if (lmin < -tol * scale) {
    res.verdict = PsdVerdict::NotPsd;
    res.witness_vector.assign(v, v + a.size());
  } else if (std::fabs(lmin) <= tol * scale) {
    res.verdict = PsdVerdict::Borderline;
    res.witness_vector.assign(v, v + a.size());
  } else {
    res.verdict = PsdVerdict::Psd;
  }
  return res;
}

}  // namespace

PsdResult psd_check(const RatMatrix& a, const PsdOptions& opts) {
  if (!a.is_symmetric()) throw std::invalid_argument("psd_check: matrix is not symmetric");
  switch (opts.mode) {
    case PsdMode::Exact:
      if (a.size() > opts.exact_dim_cap)
        throw std::invalid_argument("psd_check: exact mode capped at dimension " +
                                    std::to_string(opts.exact_dim_cap));
      return exact_ldlt(a);
    case PsdMode::Float:
      return float_check(a, opts.tol);
    case PsdMode::Auto:
      return a.size() <= opts.exact_dim_cap ? exact_ldlt(a) : float_check(a, opts.tol);
  }
  return exact_ldlt(a);
}

}  // namespace schemelab
