#include <stdexcept>
#include <string>

#include "schemelab/matkit.hpp"

namespace schemelab {

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::ones(std::size_t n) {
  RatMatrix m(n);
  for (auto& x : m.a_) x = 1;
  return m;
}

bool RatMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool RatMatrix::is_zero_one() const {
  for (const auto& x : a_)
    if (!(x.is_zero() || x == Rational(1))) return false;
  return true;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& o) {
  if (o.n_ != n_) throw std::invalid_argument("RatMatrix: dimension mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& o) {
  if (o.n_ != n_) throw std::invalid_argument("RatMatrix: dimension mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

RatMatrix& RatMatrix::operator*=(const Rational& s) {
  for (auto& x : a_) x *= s;
  return *this;
}

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("mat_mul: dimension mismatch " + std::to_string(a.size()) +
                                " vs " + std::to_string(b.size()));
  const std::size_t n = a.size();
  RatMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
    }
  return c;
}

RatMatrix kron(const RatMatrix& a, const RatMatrix& b) {
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  RatMatrix c(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l) c(i * nb + k, j * nb + l) = a(i, j) * b(k, l);
    }
  return c;
}

nlohmann::ordered_json to_json(const RatMatrix& m) {
  nlohmann::ordered_json j;
  j["n"] = m.size();
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    auto row = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < m.size(); ++k) row.push_back(m(i, k).str());
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j;
}

RatMatrix rat_matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("rows"))
    throw std::invalid_argument("matrix JSON needs keys 'n' and 'rows'");
  const auto n = j.at("n").get<std::size_t>();
  const auto& rows = j.at("rows");
  if (!rows.is_array() || rows.size() != n)
    throw std::invalid_argument("matrix JSON: expected " + std::to_string(n) + " rows");
  RatMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = rows[i];
    if (!row.is_array() || row.size() != n)
      throw std::invalid_argument("matrix JSON: row " + std::to_string(i) + " has wrong length");
    for (std::size_t k = 0; k < n; ++k) {
      const auto& e = row[k];
      if (e.is_string())
        m(i, k) = Rational::parse(e.get<std::string>());
      else if (e.is_number_integer())
        m(i, k) = Rational(e.get<long>());
      else
        throw std::invalid_argument("matrix JSON: entries must be \"num/den\" strings");
    }
  }
  return m;
}

DenseMatrix DenseMatrix::from(const RatMatrix& m) {
  DenseMatrix d(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) d(i, j) = m(i, j).to_double();
  return d;
}

bool DenseMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

}  // namespace schemelab
