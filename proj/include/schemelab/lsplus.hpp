#pragma once
// Lovasz-Schrijver LS+ certificates: packing polytopes and their cones,
// certificate verification, the stable set values of deeply vertex-transitive
// graphs, and rank lower-bound certificates for hypermatching polytopes.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "schemelab/graphs.hpp"
#include "schemelab/matkit.hpp"

namespace schemelab {

// Sparse row a x <= rhs. Covering rows are stored negated.
struct PolytopeRow {
  std::vector<std::pair<std::size_t, Rational>> coeffs;
  Rational rhs;
};

// {x in [0,1]^n : every row holds}.
struct Polytope {
  std::size_t n = 0;
  std::vector<PolytopeRow> rows;
  std::string name;
};

Polytope build_frac(const Graph& g);
// Coordinates follow enumerate_matchings(p, q, r); one row per vertex.
Polytope build_mt(int p, int q, int r);
Polytope build_mt_cover(int p, int q, int r);
// Coordinates follow colex_subsets(p, q).
Polytope build_bmt(int b, int p, int q);
Polytope build_bmt_cover(int b, int p, int q);

struct ConeCheck {
  bool member = false;
  std::optional<std::size_t> violated_row;
  std::string reason;
};

// v = (v0, v1..vn): member iff v = 0, or v0 > 0 and v / v0 in P. Exact.
ConeCheck cone_check(const Polytope& P, const std::vector<Rational>& v);
bool cone_member(const Polytope& P, const std::vector<Rational>& v);

struct LsCertificate {
  RatMatrix Y;  // (n+1) x (n+1), index 0 is the homogenising coordinate
  std::vector<Rational> x() const;
};

nlohmann::ordered_json to_json(const LsCertificate& c);
LsCertificate certificate_from_json(const nlohmann::json& j);

struct CertificateReport {
  bool dimensions = false;
  bool symmetric = false;
  bool corner = false;  // Y e0 = diag(Y) and Y[0][0] = 1
  std::vector<std::size_t> failed_columns;     // Y e_i outside K(P)
  std::vector<std::size_t> failed_complements; // Y (e0 - e_i) outside K(P)
  bool point_in_cone = false;                  // Y e0 in K(P)
  PsdResult psd;
  bool psd_ok() const { return psd.verdict == PsdVerdict::Psd; }
  bool cones_ok() const { return failed_columns.empty() && failed_complements.empty(); }
  bool ok() const {
    return dimensions && symmetric && corner && cones_ok() && point_in_cone && psd_ok();
  }
};

CertificateReport verify_certificate(const Polytope& P, const LsCertificate& cert,
                                     const PsdOptions& psd = {});
nlohmann::ordered_json to_json(const CertificateReport& r);

// Maximum of n b over the symmetric template [1, b e^T; b e, b I + c A(complement)].
struct TemplateOptimum {
  double b = 0;
  double c = 0;
  double value = 0;
  std::vector<std::string> constraints;  // the constraint families that applied
};

// Vertex-transitive g only; the constraint families are read off vertex 0.
TemplateOptimum template_optimum(const Graph& g);

struct AlphaLsReport {
  std::size_t n = 0;
  std::size_t k = 0;
  bool triangle = false;
  double lambda2 = 0;
  double delta = 0;
  double a = 0;
  double bound = 0;  // (n - k + a) / (a + 1)
  DvtReport dvt;
  bool exact = false;  // bound is the value of alpha_LS+ (DVT case)
  std::optional<TemplateOptimum> optimum;
  std::optional<double> optimum_gap;
  // Explicit certificate at a rational a' >= a.
  Rational certificate_a;
  bool certificate_a_exact = false;  // a' equals a
  Rational certificate_value;       // e^T x of the certified point
  CertificateReport certificate;
  bool ok() const;
};

// Throws std::invalid_argument for non-regular graphs or n < 4.
AlphaLsReport alpha_lsplus_dvt(const Graph& g, const PsdOptions& psd = {});
nlohmann::ordered_json to_json(const AlphaLsReport& r);

struct ThetaReport {
  double value = 0;  // (n - k + l2) / (l2 + 1)
  bool exact = false;
  DvtReport dvt;
};
// Throws std::invalid_argument for non-regular or complete graphs.
ThetaReport theta_dvt(const Graph& g);

// An inductive hypothesis a certificate relies on.
struct InductionObligation {
  std::string statement;
  bool discharged = false;
  bool cited = false;  // a general LS+ property taken from the literature
  std::string how;
};

struct EigenCheck {
  int j = 0;
  Rational closed_form;
  std::optional<Rational> alternate;  // unfactored sum where one exists
  double numeric = 0;
  int multiplicity = 0;
};

struct RankCertificateReport {
  std::string family;  // "mt" or "bmt"
  int b = 0, p = 0, q = 0, r = 0;
  int level = 0;
  // Lower bound on the LS+ rank certified by this level, when the fractional
  // point lies outside the integer hull.
  std::optional<int> implied_rank;
  std::vector<Rational> alphas;
  std::size_t ground = 0;
  bool corner = false;
  // Combinatorial identity behind the Y (e0 - e_S) cone condition.
  std::optional<bool> identity;
  // Ye_S has exactly the prescribed entry pattern.
  bool structure = false;
  // Averaged w vectors reproduce the columns of Y (b-matching family).
  std::optional<bool> averaging;
  // Direct exact cone checks against P; available at level 1.
  std::optional<bool> direct_cones;
  std::vector<EigenCheck> eigen;
  bool eigen_nonnegative = false;
  double eigen_max_deviation = 0;
  bool eigen_match = false;
  std::optional<PsdResult> psd;
  std::vector<InductionObligation> obligations;
  std::vector<std::string> warnings;
  bool ok() const;
};

// Requires p >= 2qr and 1 <= level < floor(p / qr).
RankCertificateReport stgen1_certificate(int p, int q, int r, int level,
                                         const PsdOptions& psd = {});
// Requires q^2 >= b and p >= b + q - 1; the rank claim also needs q not dividing bp.
RankCertificateReport stgen4_certificate(int b, int p, int q, const PsdOptions& psd = {});
nlohmann::ordered_json to_json(const RankCertificateReport& r);

// Certificate matrices themselves, for export.
LsCertificate stgen1_matrix(int p, int q, int r);
LsCertificate stgen4_matrix(int b, int p, int q);

struct GapReport {
  int p = 0, q = 0, r = 0;
  Rational lp_optimum;       // p / qr, certified by a primal-dual pair
  bool lp_certified = false;
  long integer_optimum = 0;  // floor(p / qr)
  Rational ratio_form;       // (p / qr) / floor(p / qr)
  Rational mod_form;         // 1 + (p mod qr) / (p - p mod qr)
  std::optional<long> packing_bruteforce;
  std::optional<long> covering_bruteforce;
  long covering_optimum = 0;  // ceil(p / qr)
  bool ok() const;
};

// Throws std::invalid_argument unless p > qr and qr does not divide p.
GapReport mt_gap(int p, int q, int r, bool brute_force = true);
nlohmann::ordered_json to_json(const GapReport& g);

// Most pairwise vertex-disjoint r-matchings / fewest covering [p].
long max_disjoint_matchings(int p, int q, int r);
long min_matching_cover(int p, int q, int r);

}  // namespace schemelab
