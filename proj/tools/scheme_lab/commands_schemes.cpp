#include <algorithm>
#include <cmath>
#include <memory>

#include "commands.hpp"
#include "schemelab/classic_schemes.hpp"

namespace scheme_lab {

using namespace schemelab;

namespace {

constexpr double kSpectrumTol = 1e-7;
constexpr std::size_t kDenseCap = 4096;

struct SchemeArgs {
  int p = 0;
  int q = 0;
  int ell = 2;
  bool eigenvalues = false;
  bool folded = false;
};

// Numeric spectrum of one associate against the closed-form multiset.
double spectrum_deviation(const BinaryMatrix& a, const std::vector<std::pair<double, long>>& want) {
  EigenOptions o;
  o.method = a.size() > 64 ? EigenMethod::Tridiagonal : EigenMethod::Jacobi;
  auto got = eig_sym(a.to_dense(), o).values;
  std::vector<double> w;
  for (const auto& [x, m] : want) w.insert(w.end(), static_cast<std::size_t>(m), x);
  std::sort(got.begin(), got.end());
  std::sort(w.begin(), w.end());
  if (got.size() != w.size()) return INFINITY;
  double dev = 0;
  for (std::size_t k = 0; k < w.size(); ++k) dev = std::max(dev, std::fabs(got[k] - w[k]));
  return dev;
}

Report johnson_report(const SchemeArgs& a, const RunConfig&) {
  if (a.q < 0 || a.q > a.p || a.p > 63) throw UsageError("johnson needs 0 <= q <= p <= 63");
  Report rep("johnson");
  rep.input()["p"] = a.p;
  rep.input()["q"] = a.q;
  const int d = std::min(a.q, a.p - a.q);
  const mpz_class ground = binomial(a.p, a.q);
  rep.results()["ground"] = ground.get_str();
  Json vals = Json::array();
  for (int i = 0; i <= d; ++i) vals.push_back(mpz_class(binomial(a.q, i) * binomial(a.p - a.q, i)).get_str());
  rep.results()["valencies"] = tagged(std::move(vals), Provenance::ClosedForm);

  Json rows = Json::array();
  bool formulas_agree = true;
  for (int j = 0; j <= d; ++j) {
    Json row = Json::array();
    for (int i = 0; i <= d; ++i) {
      const mpz_class e = johnson_eigenvalue(a.p, a.q, i, j);
      formulas_agree = formulas_agree && e == johnson_eigenvalue_alt(a.p, a.q, i, j);
      row.push_back(e.get_str());
    }
    const mpz_class m = johnson_multiplicity(a.p, j);
    rows.push_back(Json{{"j", j}, {"multiplicity", m.get_str()}, {"eigenvalues", std::move(row)}});
  }
  rep.results()["eigenmatrix"] = tagged(std::move(rows), Provenance::ClosedForm);
  rep.check("both eigenvalue formulas agree", formulas_agree, Provenance::Exact);

  if (ground > kDenseCap) {
    rep.warn("ground set above " + std::to_string(kDenseCap) + "; axioms and numeric spectra skipped");
    return rep;
  }
  const AssociationScheme s = johnson_scheme(a.p, a.q);
  const AxiomReport ax = verify_axioms(s);
  rep.results()["axioms"] = to_json(ax);
  rep.check("association scheme axioms", ax.ok(), Provenance::Exact);
  if (a.eigenvalues) {
    Json dev = Json::array();
    double worst = 0;
    for (int i = 1; i <= d; ++i) {
      std::vector<std::pair<double, long>> want;
      for (int j = 0; j <= d; ++j)
        want.emplace_back(johnson_eigenvalue(a.p, a.q, i, j).get_d(), johnson_multiplicity(a.p, j).get_si());
      const double e = spectrum_deviation(s.associate(static_cast<std::size_t>(i)), want);
      worst = std::max(worst, e);
      dev.push_back(Json{{"i", i}, {"max_deviation", e}});
    }
    rep.results()["numeric_spectra"] = tagged(std::move(dev), Provenance::Numeric);
    rep.check("closed form matches numeric spectra", worst < kSpectrumTol, Provenance::Numeric);
  }
  return rep;
}

Report folded_report(const SchemeArgs& a) {
  Report rep("hamming --folded");
  int ell = a.ell;
  if (a.q > 0) {
    if (a.p != 2 || a.q % 2 == 0) throw UsageError("--folded needs --p 2 and an odd --q");
    ell = (a.q - 1) / 2;
  }
  rep.input()["ell"] = ell;
  if (ell < 2 || ell > 5) throw UsageError("--folded needs 2 <= ell <= 5");
  const FoldedHamming fh = folded_hamming_subscheme(ell);
  rep.results()["ground"] = fh.scheme.ground_size();
  rep.results()["classes"] = fh.scheme.class_count();
  Json vals = Json::array();
  for (std::size_t i = 0; i < fh.scheme.class_count(); ++i) vals.push_back(fh.scheme.associate(i).row_count(0));
  rep.results()["valencies"] = tagged(std::move(vals), Provenance::Exact);
  rep.results()["axioms"] = to_json(fh.report);
  rep.check("folded classes form a scheme", fh.report.ok(), Provenance::Exact);
  rep.check("product identity through the antipodal map", fh.product_identity, Provenance::Exact);
  return rep;
}

Report hamming_report(const SchemeArgs& a, const RunConfig&) {
  if (a.folded) return folded_report(a);
  if (a.p < 2 || a.q < 1) throw UsageError("hamming needs p >= 2 and q >= 1");
  Report rep("hamming");
  rep.input()["p"] = a.p;
  rep.input()["q"] = a.q;
  mpz_class ground = 1;
  for (int t = 0; t < a.q; ++t) ground *= a.p;
  rep.results()["ground"] = ground.get_str();
  Json vals = Json::array();
  for (int i = 0; i <= a.q; ++i) {
    mpz_class v = binomial(a.q, i);
    for (int t = 0; t < i; ++t) v *= a.p - 1;
    vals.push_back(v.get_str());
  }
  rep.results()["valencies"] = tagged(std::move(vals), Provenance::ClosedForm);
  Json rows = Json::array();
  mpz_class total = 0;
  for (int j = 0; j <= a.q; ++j) {
    Json row = Json::array();
    for (int i = 0; i <= a.q; ++i) row.push_back(hamming_eigenvalue(a.p, a.q, i, j).get_str());
    const mpz_class m = hamming_multiplicity(a.p, a.q, j);
    total += m;
    rows.push_back(Json{{"j", j}, {"multiplicity", m.get_str()}, {"eigenvalues", std::move(row)}});
  }
  rep.results()["eigenmatrix"] = tagged(std::move(rows), Provenance::ClosedForm);
  rep.check("multiplicities sum to the ground size", total == ground, Provenance::Exact);

  if (ground > kDenseCap) {
    rep.warn("ground set above " + std::to_string(kDenseCap) + "; axioms and numeric spectra skipped");
    return rep;
  }
  const AssociationScheme s = hamming_scheme(a.p, a.q);
  const AxiomReport ax = verify_axioms(s);
  rep.results()["axioms"] = to_json(ax);
  rep.check("association scheme axioms", ax.ok(), Provenance::Exact);
  if (a.eigenvalues) {
    Json dev = Json::array();
    double worst = 0;
    for (int i = 1; i <= a.q; ++i) {
      std::vector<std::pair<double, long>> want;
      for (int j = 0; j <= a.q; ++j)
        want.emplace_back(hamming_eigenvalue(a.p, a.q, i, j).get_d(), hamming_multiplicity(a.p, a.q, j).get_si());
      const double e = spectrum_deviation(s.associate(static_cast<std::size_t>(i)), want);
      worst = std::max(worst, e);
      dev.push_back(Json{{"i", i}, {"max_deviation", e}});
    }
    rep.results()["numeric_spectra"] = tagged(std::move(dev), Provenance::Numeric);
    rep.check("closed form matches numeric spectra", worst < kSpectrumTol, Provenance::Numeric);
  }
  return rep;
}

}  // namespace

void register_scheme_commands(CLI::App& app, Dispatch& d) {
  auto args = std::make_shared<SchemeArgs>();
  auto* j = app.add_subcommand("johnson", "Johnson scheme J(p, q)");
  j->add_option("--p", args->p)->required();
  j->add_option("--q", args->q)->required();
  j->add_flag("--eigenvalues", args->eigenvalues, "Compare closed forms with numeric spectra");
  j->callback([&d, args] { d.run = [args](const RunConfig& c) { return johnson_report(*args, c); }; });

  auto* h = app.add_subcommand("hamming", "Hamming scheme H(q, p) or its folded subscheme");
  h->add_option("--p", args->p, "Alphabet size");
  h->add_option("--q", args->q, "Word length");
  h->add_flag("--eigenvalues", args->eigenvalues, "Compare closed forms with numeric spectra");
  h->add_flag("--folded", args->folded, "Folded subscheme of the binary cube of length 2 ell + 1");
  h->add_option("--ell", args->ell, "Fold parameter when --q is not given");
  h->callback([&d, args] { d.run = [args](const RunConfig& c) { return hamming_report(*args, c); }; });
}

}  // namespace scheme_lab
