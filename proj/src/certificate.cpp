#include <stdexcept>

#include "schemelab/lsplus.hpp"
#include "schemelab/parallel.hpp"

namespace schemelab {

std::vector<Rational> LsCertificate::x() const {
  std::vector<Rational> out;
  for (std::size_t i = 1; i < Y.size(); ++i) out.push_back(Y(i, 0));
  return out;
}

nlohmann::ordered_json to_json(const LsCertificate& c) {
  nlohmann::ordered_json j;
  j["Y"] = to_json(c.Y);
  return j;
}

LsCertificate certificate_from_json(const nlohmann::json& j) {
  LsCertificate c;
  c.Y = rat_matrix_from_json(j.contains("Y") ? j.at("Y") : j);
  return c;
}

CertificateReport verify_certificate(const Polytope& P, const LsCertificate& cert,
                                     const PsdOptions& psd) {
  CertificateReport r;
  const RatMatrix& Y = cert.Y;
  const std::size_t m = Y.size();
  r.dimensions = m == P.n + 1;
  if (!r.dimensions) {
    r.psd.verdict = PsdVerdict::NotPsd;
    return r;
  }
  r.symmetric = Y.is_symmetric();
  r.corner = Y(0, 0) == Rational(1);
  for (std::size_t i = 1; i < m && r.corner; ++i) r.corner = Y(i, 0) == Y(i, i);

  std::vector<char> col_ok(m, 1), comp_ok(m, 1);
  parallel_for(m - 1, [&](std::size_t t) {
    const std::size_t i = t + 1;
    std::vector<Rational> col(m), comp(m);
    for (std::size_t k = 0; k < m; ++k) {
      col[k] = Y(k, i);
      comp[k] = Y(k, 0) - Y(k, i);
    }
    col_ok[i] = cone_member(P, col);
    comp_ok[i] = cone_member(P, comp);
  });
  for (std::size_t i = 1; i < m; ++i) {
    if (!col_ok[i]) r.failed_columns.push_back(i);
    if (!comp_ok[i]) r.failed_complements.push_back(i);
  }
  std::vector<Rational> e0(m);
  for (std::size_t k = 0; k < m; ++k) e0[k] = Y(k, 0);
  r.point_in_cone = cone_member(P, e0);
  if (r.symmetric)
    r.psd = psd_check(Y, psd);
  else
    r.psd.verdict = PsdVerdict::NotPsd;
  return r;
}

nlohmann::ordered_json to_json(const CertificateReport& r) {
  nlohmann::ordered_json checks;
  checks["dimensions"] = r.dimensions;
  checks["symmetric"] = r.symmetric;
  checks["corner"] = r.corner;
  checks["columns_in_cone"] = r.failed_columns.empty();
  checks["complements_in_cone"] = r.failed_complements.empty();
  checks["point_in_cone"] = r.point_in_cone;
  checks["psd"] = r.psd_ok();
  nlohmann::ordered_json j;
  j["checks"] = std::move(checks);
  if (!r.failed_columns.empty()) j["failed_columns"] = r.failed_columns;
  if (!r.failed_complements.empty()) j["failed_complements"] = r.failed_complements;
  nlohmann::ordered_json p;
  p["mode"] = std::string(to_string(r.psd.used));
  p["verdict"] = std::string(to_string(r.psd.verdict));
  if (r.psd.min_eigenvalue) p["lambda_min"] = *r.psd.min_eigenvalue;
  if (r.psd.witness_index) p["witness_index"] = *r.psd.witness_index;
  if (r.psd.witness_pivot) p["witness_pivot"] = r.psd.witness_pivot->str();
  j["psd"] = std::move(p);
  return j;
}

}  // namespace schemelab
