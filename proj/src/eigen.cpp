#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "schemelab/kernels.hpp"
#include "schemelab/matkit.hpp"

namespace schemelab {
namespace {

double frobenius(const DenseMatrix& a) {
  double s = 0.0;
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) s += kernels::active().dot(a.row(i), a.row(i), n);
  return std::sqrt(s);
}

double off_diagonal(const DenseMatrix& a) {
  double s = 0.0;
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) s += a(i, j) * a(i, j);
  return std::sqrt(2.0 * s);
}

Spectrum jacobi(DenseMatrix a, const EigenOptions& opts) {
  const auto& k = kernels::active();
  const std::size_t n = a.size();
  DenseMatrix vt;
  if (opts.vectors) {
    vt = DenseMatrix(n);
    for (std::size_t i = 0; i < n; ++i) vt(i, i) = 1.0;
  }
  const double scale = std::max(frobenius(a), 1e-300);
  Spectrum out;
  out.method = EigenMethod::Jacobi;
  int sweep = 0;
  for (;; ++sweep) {
    if (off_diagonal(a) <= opts.tolerance * scale) break;
    if (sweep >= opts.max_sweeps)
      throw std::runtime_error("eig_sym: Jacobi did not converge in " +
                               std::to_string(opts.max_sweeps) + " sweeps");
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double app = a(p, p);
        const double aqq = a(q, q);
        const double g = 100.0 * std::fabs(apq);
        if (sweep > 3 && std::fabs(app) + g == std::fabs(app) &&
            std::fabs(aqq) + g == std::fabs(aqq)) {
          a(p, q) = a(q, p) = 0.0;
          continue;
        }
        const double theta = (aqq - app) / (2.0 * apq);
        double t;
        if (std::fabs(theta) > 1e150)
          t = 0.5 / theta;
        else
          t = (theta >= 0.0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        k.rotate(a.row(p), a.row(q), c, s, n);
        for (std::size_t r = 0; r < n; ++r) {
          a(r, p) = a(p, r);
          a(r, q) = a(q, r);
        }
        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = a(q, p) = 0.0;
        if (opts.vectors) k.rotate(vt.row(p), vt.row(q), c, s, n);
      }
    }
  }
  out.sweeps = sweep;
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x) > a(y, y); });
  out.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.values[i] = a(order[i], order[i]);
  if (opts.vectors) {
    out.vectors = DenseMatrix(n);
    for (std::size_t i = 0; i < n; ++i)
      std::copy(vt.row(order[i]), vt.row(order[i]) + n, out.vectors.row(i));
  }
  return out;
}

// Householder reduction to tridiagonal form on a full symmetric copy.
void householder(DenseMatrix& a, std::vector<double>& d, std::vector<double>& e) {
  const auto& k = kernels::active();
  const std::size_t n = a.size();
  d.assign(n, 0.0);
  e.assign(n, 0.0);
  std::vector<double> v(n), p(n), w(n);
  for (std::size_t c = 0; c + 2 < n; ++c) {
    const std::size_t m = n - c - 1;
    const double* x = a.row(c) + c + 1;
    const double norm = std::sqrt(k.dot(x, x, m));
    d[c] = a(c, c);
    if (norm == 0.0) {
      e[c] = 0.0;
      continue;
    }
    const double alpha = x[0] >= 0.0 ? -norm : norm;
    std::copy(x, x + m, v.begin());
    v[0] -= alpha;
    const double vnorm2 = k.dot(v.data(), v.data(), m);
    e[c] = alpha;
    if (vnorm2 == 0.0) continue;
    const double beta = 2.0 / vnorm2;
    for (std::size_t i = 0; i < m; ++i) p[i] = beta * k.dot(a.row(c + 1 + i) + c + 1, v.data(), m);
    const double kk = 0.5 * beta * k.dot(v.data(), p.data(), m);
    for (std::size_t i = 0; i < m; ++i) w[i] = p[i] - kk * v[i];
    for (std::size_t i = 0; i < m; ++i) {
      double* row = a.row(c + 1 + i) + c + 1;
      k.axpy(-v[i], w.data(), row, m);
      k.axpy(-w[i], v.data(), row, m);
    }
  }
  if (n >= 2) {
    d[n - 2] = a(n - 2, n - 2);
    e[n - 2] = a(n - 2, n - 1);
  }
  if (n >= 1) d[n - 1] = a(n - 1, n - 1);
  if (n >= 1) e[n - 1] = 0.0;
}

// Implicit QL with Wilkinson-style shifts; e[i] couples i and i+1.
void tridiagonal_ql(std::vector<double>& d, std::vector<double>& e) {
  const int n = static_cast<int>(d.size());
  constexpr double eps = 2.220446049250313e-16;
  double anorm = 0.0;
  for (int i = 0; i < n; ++i) anorm = std::max(anorm, std::fabs(d[i]) + std::fabs(e[i]));
  // Absolute floor so that couplings between zero diagonals still deflate.
  const double floor = 1e-3 * eps * anorm;
  // Total sweep budget across all eigenvalues, as in LAPACK's steqr.
  long budget = 30L * std::max(n, 1);
  for (int l = 0; l < n; ++l) {
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
        if (std::fabs(e[m]) <= eps * dd || std::fabs(e[m]) <= floor) break;
      }
      if (m != l) {
        if (--budget < 0) throw std::runtime_error("eig_sym: tridiagonal QL did not converge");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + (g >= 0.0 ? std::fabs(r) : -std::fabs(r)));
        double s = 1.0, c = 1.0, p = 0.0;
        int i;
        for (i = m - 1; i >= l; --i) {
          const double f = s * e[i];
          const double b = c * e[i];
          e[i + 1] = (r = std::hypot(f, g));
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          d[i + 1] = g + (p = s * r);
          g = c * r - b;
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

double residual_of(const DenseMatrix& a, const Spectrum& s) {
  const auto& k = kernels::active();
  const std::size_t n = a.size();
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double* v = s.vectors.row(i);
    for (std::size_t r = 0; r < n; ++r) {
      const double av = k.dot(a.row(r), v, n);
      worst = std::max(worst, std::fabs(av - s.values[i] * v[r]));
    }
  }
  return worst;
}

}  // namespace

Spectrum eig_sym(const DenseMatrix& a, const EigenOptions& opts) {
  if (!a.is_symmetric()) throw std::invalid_argument("eig_sym: matrix is not symmetric");
  if (opts.method == EigenMethod::Tridiagonal) {
    if (opts.vectors)
      throw std::invalid_argument("eig_sym: the tridiagonal method returns eigenvalues only");
    DenseMatrix work = a;
    Spectrum out;
    out.method = EigenMethod::Tridiagonal;
    std::vector<double> e;
    householder(work, out.values, e);
    tridiagonal_ql(out.values, e);
    std::sort(out.values.begin(), out.values.end(), std::greater<>());
    return out;
  }
  Spectrum out = jacobi(a, opts);
  if (opts.vectors) out.residual = residual_of(a, out);
  return out;
}

Spectrum eig_sym(const RatMatrix& a, const EigenOptions& opts) {
  if (!a.is_symmetric()) throw std::invalid_argument("eig_sym: matrix is not symmetric");
  return eig_sym(DenseMatrix::from(a), opts);
}

std::vector<std::pair<double, int>> group_eigenvalues(const std::vector<double>& values,
                                                      double tol) {
  std::vector<double> v = values;
  std::sort(v.begin(), v.end(), std::greater<>());
  std::vector<std::pair<double, int>> groups;
  double sum = 0.0;
  for (double x : v) {
    if (!groups.empty() &&
        std::fabs(groups.back().first - x) <= tol * std::max(1.0, std::fabs(x))) {
      auto& g = groups.back();
      sum += x;
      ++g.second;
      g.first = sum / g.second;
    } else {
      groups.emplace_back(x, 1);
      sum = x;
    }
  }
  return groups;
}

}  // namespace schemelab
