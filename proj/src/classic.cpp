#include <algorithm>
#include <stdexcept>
#include <string>

#include "schemelab/classic_schemes.hpp"

namespace schemelab {

std::vector<std::uint64_t> colex_subsets(int p, int q) {
  if (q < 0 || q > p || p > 63) throw std::invalid_argument("colex_subsets: need 0 <= q <= p <= 63");
  std::vector<std::uint64_t> out;
  if (q == 0) return {0};
  // Gosper's hack walks q-subsets in increasing integer order, which is colex.
  std::uint64_t s = (std::uint64_t{1} << q) - 1;
  const std::uint64_t limit = std::uint64_t{1} << p;
  while (s < limit) {
    out.push_back(s);
    const std::uint64_t c = s & (~s + 1);
    const std::uint64_t r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
  return out;
}

std::size_t colex_rank(std::uint64_t mask) {
  std::size_t rank = 0;
  long t = 1;
  while (mask) {
    const long e = __builtin_ctzll(mask);
    rank += static_cast<std::size_t>(binomial64(e, t));
    ++t;
    mask &= mask - 1;
  }
  return rank;
}

BinaryMatrix johnson_binary(int p, int q, int i) {
  if (i < 0 || i > q || q > p) throw std::invalid_argument("johnson: need 0 <= i <= q <= p");
  if (p > 63 && (q <= 1 || q >= p - 1)) {
    // Beyond the mask width only the trivial schemes on p points remain.
    const std::size_t n = q == 0 || q == p ? 1 : static_cast<std::size_t>(p);
    const int meet_off = q == 1 ? 0 : p - 2;  // |S & T| for distinct S, T
    BinaryMatrix m(n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (a == b ? i == 0 : meet_off == q - i) m.set(a, b);
    return m;
  }
  const auto sets = colex_subsets(p, q);
  BinaryMatrix m(sets.size());
  for (std::size_t a = 0; a < sets.size(); ++a)
    for (std::size_t b = 0; b < sets.size(); ++b)
      if (__builtin_popcountll(sets[a] & sets[b]) == q - i) m.set(a, b);
  return m;
}

RatMatrix johnson_matrix(int p, int q, int i) { return johnson_binary(p, q, i).to_rat(); }

AssociationScheme johnson_scheme(int p, int q) {
  const int d = std::min(q, p - q);
  std::vector<BinaryMatrix> a;
  std::vector<std::string> labels;
  for (int i = 0; i <= d; ++i) {
    a.push_back(johnson_binary(p, q, i));
    labels.push_back("J" + std::to_string(i));
  }
  return AssociationScheme(std::move(a), std::move(labels));
}

mpz_class johnson_eigenvalue(int p, int q, int i, int j) {
  mpz_class s = 0;
  for (int h = 0; h <= q; ++h) {
    const mpz_class t = binomial(j, h) * binomial(q - j, i - h) * binomial(p - q - j, i - h);
    if (h % 2) s -= t;
    else s += t;
  }
  return s;
}

mpz_class johnson_eigenvalue_alt(int p, int q, int i, int j) {
  mpz_class s = 0;
  for (int h = i; h <= q; ++h) {
    const mpz_class t = binomial(h, i) * binomial(p - 2 * h, q - h) * binomial(p - h - j, h - j);
    if ((h - i + j) % 2) s -= t;
    else s += t;
  }
  return s;
}

mpz_class johnson_multiplicity(int p, int j) { return binomial(p, j) - binomial(p, j - 1); }

std::vector<std::vector<Rational>> johnson_p_matrix(int p, int q) {
  const int d = std::min(q, p - q);
  std::vector<std::vector<Rational>> rows;
  for (int j = 0; j <= d; ++j) {
    std::vector<Rational> row;
    for (int i = 0; i <= d; ++i) row.emplace_back(johnson_eigenvalue(p, q, i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

std::size_t ipow(int p, int q) {
  std::size_t n = 1;
  for (int t = 0; t < q; ++t) n *= static_cast<std::size_t>(p);
  return n;
}

int hamming_distance(std::size_t a, std::size_t b, int p, int q) {
  int d = 0;
  for (int t = 0; t < q; ++t) {
    d += (a % static_cast<std::size_t>(p)) != (b % static_cast<std::size_t>(p));
    a /= static_cast<std::size_t>(p);
    b /= static_cast<std::size_t>(p);
  }
  return d;
}

}  // namespace

BinaryMatrix hamming_binary(int p, int q, int i) {
  if (p < 1 || q < 0 || i < 0 || i > q) throw std::invalid_argument("hamming: need p >= 1, 0 <= i <= q");
  const std::size_t n = ipow(p, q);
  BinaryMatrix m(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (hamming_distance(a, b, p, q) == i) m.set(a, b);
  return m;
}

RatMatrix hamming_matrix(int p, int q, int i) { return hamming_binary(p, q, i).to_rat(); }

AssociationScheme hamming_scheme(int p, int q) {
  const int d = p == 1 ? 0 : q;
  std::vector<BinaryMatrix> a;
  std::vector<std::string> labels;
  for (int i = 0; i <= d; ++i) {
    a.push_back(hamming_binary(p, q, i));
    labels.push_back("H" + std::to_string(i));
  }
  return AssociationScheme(std::move(a), std::move(labels));
}

mpz_class hamming_eigenvalue(int p, int q, int i, int j) {
  mpz_class s = 0;
  for (int h = 0; h <= i; ++h) {
    mpz_class pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(p - 1),
                  static_cast<unsigned long>(i - h));
    const mpz_class t = pw * binomial(j, h) * binomial(q - j, i - h);
    if (h % 2) s -= t;
    else s += t;
  }
  return s;
}

mpz_class hamming_multiplicity(int p, int q, int j) {
  mpz_class pw;
  mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(p - 1), static_cast<unsigned long>(j));
  return binomial(q, j) * pw;
}

std::vector<std::vector<Rational>> hamming_p_matrix(int p, int q) {
  std::vector<std::vector<Rational>> rows;
  for (int j = 0; j <= q; ++j) {
    std::vector<Rational> row;
    for (int i = 0; i <= q; ++i) row.emplace_back(hamming_eigenvalue(p, q, i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

FoldedHamming folded_hamming_subscheme(int ell) {
  if (ell < 2) throw std::invalid_argument("folded_hamming_subscheme: need ell >= 2");
  const int n = 2 * ell + 1;
  std::vector<BinaryMatrix> h;
  for (int i = 0; i <= n; ++i) h.push_back(hamming_binary(2, n, i));
  FoldedHamming out;
  out.ell = ell;
  std::vector<BinaryMatrix> b{h[0]};
  std::vector<std::string> labels{"I"};
  for (int j = 1; j <= ell; ++j) {
    BinaryMatrix m = h[static_cast<std::size_t>(n - j)];
    m |= h[static_cast<std::size_t>(j)];
    b.push_back(std::move(m));
    labels.push_back("B" + std::to_string(j));
  }
  // The antipodal class H_n lies in no B_j; without it A3 fails.
  b.push_back(h[static_cast<std::size_t>(n)]);
  labels.push_back("P");
  out.scheme = AssociationScheme(b, labels);
  out.report = verify_axioms(out.scheme);

  // H_n is the antipodal permutation P. B_i = (P + I) H_i and (P + I)^2 = 2 (P + I),
  // so B_i B_j = 2 (P + I) H_i H_j.
  const std::size_t dim = h[0].size();
  std::vector<std::size_t> antipode(dim);
  for (std::size_t x = 0; x < dim; ++x) antipode[x] = (dim - 1) ^ x;
  out.product_identity = true;
  for (int i = 1; i <= ell && out.product_identity; ++i)
    for (int j = 1; j <= ell && out.product_identity; ++j) {
      const auto bb = count_product(b[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(j)]);
      const auto hh = count_product(h[static_cast<std::size_t>(i)], h[static_cast<std::size_t>(j)]);
      for (std::size_t x = 0; x < dim && out.product_identity; ++x)
        for (std::size_t y = 0; y < dim; ++y)
          if (bb[x * dim + y] != 2 * (hh[x * dim + y] + hh[antipode[x] * dim + y])) {
            out.product_identity = false;
            break;
          }
    }
  if (!out.product_identity)
    throw std::logic_error("folded_hamming_subscheme: B_i B_j != 2 (P + I) H_i H_j");
  return out;
}

}  // namespace schemelab
