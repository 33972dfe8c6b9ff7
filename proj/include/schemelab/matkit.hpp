#pragma once
// Exact rational matrices, a symmetric eigensolver and PSD checks.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace schemelab {

// Always in lowest terms with a positive denominator (gmp canonical form).
class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(int v) : q_(static_cast<long>(v)) {}  // NOLINT
  Rational(long num, long den);
  explicit Rational(const mpz_class& num, const mpz_class& den = 1);
  explicit Rational(mpq_class q);

  // Accepts "a", "a/b" and "-a/b"; throws std::invalid_argument otherwise.
  static Rational parse(std::string_view text);

  // "num/den", always with the slash.
  std::string str() const;
  // Correctly rounded to nearest.
  double to_double() const;

  const mpq_class& raw() const { return q_; }
  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }
  int sign() const { return sgn(q_); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }

 private:
  mpq_class q_;
};

// Exact binomial coefficient, zero outside 0 <= k <= n.
mpz_class binomial(long n, long k);
std::int64_t binomial64(long n, long k);

// Square dense matrix over the rationals, row-major.
class RatMatrix {
 public:
  RatMatrix() = default;
  explicit RatMatrix(std::size_t n) : n_(n), a_(n * n) {}

  static RatMatrix identity(std::size_t n);
  static RatMatrix ones(std::size_t n);

  std::size_t size() const { return n_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  bool is_symmetric() const;
  bool is_zero_one() const;
  RatMatrix transpose() const;

  RatMatrix& operator+=(const RatMatrix& o);
  RatMatrix& operator-=(const RatMatrix& o);
  RatMatrix& operator*=(const Rational& s);
  friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
  friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
  friend RatMatrix operator*(RatMatrix a, const Rational& s) { return a *= s; }
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.n_ == b.n_ && a.a_ == b.a_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Rational> a_;
};

// Throws std::invalid_argument on dimension mismatch.
RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b);
RatMatrix kron(const RatMatrix& a, const RatMatrix& b);

// {"n": int, "rows": [["num/den", ...], ...]}
nlohmann::ordered_json to_json(const RatMatrix& m);
RatMatrix rat_matrix_from_json(const nlohmann::json& j);

// Square dense matrix of doubles, row-major.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t n) : n_(n), a_(n * n, 0.0) {}
  static DenseMatrix from(const RatMatrix& m);

  std::size_t size() const { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  double* row(std::size_t i) { return a_.data() + i * n_; }
  const double* row(std::size_t i) const { return a_.data() + i * n_; }
  bool is_symmetric() const;

 private:
  std::size_t n_ = 0;
  std::vector<double> a_;
};

enum class EigenMethod { Jacobi, Tridiagonal };

struct EigenOptions {
  EigenMethod method = EigenMethod::Jacobi;
  bool vectors = false;
  double tolerance = 1e-12;
  int max_sweeps = 100;
};

struct Spectrum {
  std::vector<double> values;  // descending
  // max_i |A v_i - l_i v_i|_inf; present only when vectors were computed.
  std::optional<double> residual;
  int sweeps = 0;
  EigenMethod method = EigenMethod::Jacobi;
  DenseMatrix vectors;  // row i is the unit eigenvector of values[i]; empty unless requested
};

// Throws std::invalid_argument when the input is not exactly symmetric and
// std::runtime_error on non-convergence. The tridiagonal method (Householder
// reduction plus implicit QL) returns eigenvalues only.
Spectrum eig_sym(const RatMatrix& a, const EigenOptions& opts = {});
Spectrum eig_sym(const DenseMatrix& a, const EigenOptions& opts = {});

// Eigenvalues grouped as (value, multiplicity), merged when within tol.
std::vector<std::pair<double, int>> group_eigenvalues(const std::vector<double>& values,
                                                      double tol = 1e-7);

enum class PsdMode { Exact, Float, Auto };
enum class PsdVerdict { Psd, NotPsd, Borderline };

std::string_view to_string(PsdMode m);
std::string_view to_string(PsdVerdict v);
PsdMode parse_psd_mode(std::string_view s);

struct PsdOptions {
  PsdMode mode = PsdMode::Auto;
  double tol = 1e-9;
  std::size_t exact_dim_cap = 512;
};

struct PsdResult {
  PsdVerdict verdict = PsdVerdict::Psd;
  PsdMode used = PsdMode::Exact;
  // Exact mode: original row index and value of the failing pivot.
  std::optional<std::size_t> witness_index;
  std::optional<Rational> witness_pivot;
  // Float mode: smallest eigenvalue and its eigenvector.
  std::optional<double> min_eigenvalue;
  std::vector<double> witness_vector;
};

PsdResult psd_check(const RatMatrix& a, const PsdOptions& opts = {});

}  // namespace schemelab
