#include <stdexcept>

#include "schemelab/kernels.hpp"
#include "schemelab/scheme_core.hpp"

namespace schemelab {

BinaryMatrix::BinaryMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

BinaryMatrix BinaryMatrix::identity(std::size_t n) {
  BinaryMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BinaryMatrix BinaryMatrix::from_rat(const RatMatrix& r) {
  BinaryMatrix m(r.size());
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (r(i, j).is_zero()) continue;
      if (r(i, j) != Rational(1))
        throw std::invalid_argument("BinaryMatrix: entry (" + std::to_string(i) + "," +
                                    std::to_string(j) + ") is not 0 or 1");
      m.set(i, j);
    }
  return m;
}

void BinaryMatrix::set(std::size_t i, std::size_t j, bool v) {
  std::uint64_t& w = bits_[i * words_ + (j >> 6)];
  const std::uint64_t bit = std::uint64_t{1} << (j & 63);
  w = v ? (w | bit) : (w & ~bit);
}

std::size_t BinaryMatrix::row_count(std::size_t i) const {
  std::size_t c = 0;
  for (std::size_t w = 0; w < words_; ++w) c += __builtin_popcountll(bits_[i * words_ + w]);
  return c;
}

std::size_t BinaryMatrix::count() const {
  std::size_t c = 0;
  for (auto w : bits_) c += __builtin_popcountll(w);
  return c;
}

std::optional<std::pair<std::size_t, std::size_t>> BinaryMatrix::first_one() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t w = 0; w < words_; ++w) {
      const std::uint64_t x = bits_[i * words_ + w];
      if (x) return std::make_pair(i, w * 64 + static_cast<std::size_t>(__builtin_ctzll(x)));
    }
  return std::nullopt;
}

BinaryMatrix BinaryMatrix::transpose() const {
  BinaryMatrix t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t x = bits_[i * words_ + w];
      while (x) {
        const std::size_t j = w * 64 + static_cast<std::size_t>(__builtin_ctzll(x));
        t.set(j, i);
        x &= x - 1;
      }
    }
  return t;
}

RatMatrix BinaryMatrix::to_rat() const {
  RatMatrix r(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (get(i, j)) r(i, j) = 1;
  return r;
}

DenseMatrix BinaryMatrix::to_dense() const {
  DenseMatrix d(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (get(i, j)) d(i, j) = 1.0;
  return d;
}

BinaryMatrix& BinaryMatrix::operator|=(const BinaryMatrix& o) {
  if (o.n_ != n_) throw std::invalid_argument("BinaryMatrix: dimension mismatch");
  for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= o.bits_[i];
  return *this;
}

std::vector<std::int64_t> count_product(const BinaryMatrix& a, const BinaryMatrix& b) {
  if (a.size() != b.size()) throw std::invalid_argument("count_product: dimension mismatch");
  const auto& k = kernels::active();
  const std::size_t n = a.size();
  const BinaryMatrix bt = b.transpose();
  std::vector<std::int64_t> c(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      c[i * n + j] = static_cast<std::int64_t>(k.and_popcount(a.row(i), bt.row(j), a.words()));
  return c;
}

BinaryMatrix kron(const BinaryMatrix& a, const BinaryMatrix& b) {
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  BinaryMatrix c(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) {
      if (!a.get(i, j)) continue;
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l)
          if (b.get(k, l)) c.set(i * nb + k, j * nb + l);
    }
  return c;
}

}  // namespace schemelab
