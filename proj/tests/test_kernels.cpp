#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "schemelab/kernels.hpp"

using namespace schemelab::kernels;

namespace {

std::vector<double> random_doubles(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  std::vector<double> v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

// Naive loops, independent of both tables.
double naive_dot(const std::vector<double>& x, const std::vector<double>& y) {
  long double s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += static_cast<long double>(x[i]) * y[i];
  return static_cast<double>(s);
}

std::uint64_t naive_popcount(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  std::uint64_t c = 0;
  for (std::size_t w = 0; w < a.size(); ++w)
    for (int t = 0; t < 64; ++t) c += ((a[w] & b[w]) >> t) & 1u;
  return c;
}

}  // namespace

TEST_CASE("scalar kernels against naive loops") {
  std::mt19937_64 rng(7);
  const KernelTable& s = scalar_table();
  for (std::size_t n : {0u, 1u, 3u, 4u, 7u, 16u, 33u, 100u}) {
    auto x = random_doubles(rng, n), y = random_doubles(rng, n);
    CHECK(s.dot(x.data(), y.data(), n) == doctest::Approx(naive_dot(x, y)).epsilon(1e-12));
    auto z = y;
    s.axpy(0.5, x.data(), z.data(), n);
    for (std::size_t i = 0; i < n; ++i) CHECK(z[i] == y[i] + 0.5 * x[i]);
    auto rx = x, ry = y;
    const double c = std::cos(0.3), sn = std::sin(0.3);
    s.rotate(rx.data(), ry.data(), c, sn, n);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(rx[i] == c * x[i] - sn * y[i]);
      CHECK(ry[i] == sn * x[i] + c * y[i]);
    }
  }
  std::vector<std::uint64_t> a(9), b(9);
  for (auto& w : a) w = rng();
  for (auto& w : b) w = rng();
  CHECK(s.and_popcount(a.data(), b.data(), a.size()) == naive_popcount(a, b));
}

TEST_CASE("vector variant matches the scalar reference") {
  const KernelTable* v = avx2_table();
  if (!v) {
    MESSAGE("no vector variant on this machine");
    return;
  }
  const KernelTable& s = scalar_table();
  std::mt19937_64 rng(11);
  for (std::size_t n = 0; n <= 70; ++n) {
    auto x = random_doubles(rng, n), y = random_doubles(rng, n);
    const double ds = s.dot(x.data(), y.data(), n), dv = v->dot(x.data(), y.data(), n);
    CHECK(std::abs(ds - dv) <= 1e-14 * (1.0 + static_cast<double>(n)));

    auto ys = y, yv = y;
    s.axpy(-1.75, x.data(), ys.data(), n);
    v->axpy(-1.75, x.data(), yv.data(), n);
    CHECK(ys == yv);

    auto xs = x, xv = x, ys2 = y, yv2 = y;
    s.rotate(xs.data(), ys2.data(), 0.6, 0.8, n);
    v->rotate(xv.data(), yv2.data(), 0.6, 0.8, n);
    CHECK(xs == xv);
    CHECK(ys2 == yv2);

    std::vector<std::uint64_t> a(n), b(n);
    for (auto& w : a) w = rng();
    for (auto& w : b) w = rng();
    CHECK(s.and_popcount(a.data(), b.data(), n) == v->and_popcount(a.data(), b.data(), n));
  }
}

TEST_CASE("force switches the active table") {
  const KernelTable& before = active();
  force(scalar_table());
  CHECK(active().name == scalar_table().name);
  force(before);
  CHECK(active().name == before.name);
}
