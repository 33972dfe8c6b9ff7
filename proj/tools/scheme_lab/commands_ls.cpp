#include <memory>
#include <sstream>

#include "commands.hpp"
#include "schemelab/lsplus.hpp"

namespace scheme_lab {

using namespace schemelab;

namespace {

struct LsArgs {
  std::string cert;
  std::string family;
  std::string file;
  std::vector<int> mt;
  std::vector<int> bmt;
  int b = 2, p = 7, q = 2, r = 1;
  int level = 1;
  std::string export_path;
  bool no_brute_force = false;
};

Report verify_report(const LsArgs& a, const RunConfig& cfg) {
  const int sources = !a.family.empty() + !a.file.empty() + !a.mt.empty() + !a.bmt.empty();
  if (sources != 1) throw UsageError("give exactly one of --family, --file, --mt and --bmt");
  if (a.cert.empty()) throw UsageError("--cert is required");
  Polytope P;
  if (!a.mt.empty()) {
    if (a.mt.size() != 3) throw UsageError("--mt takes p q r");
    P = build_mt(a.mt[0], a.mt[1], a.mt[2]);
  } else if (!a.bmt.empty()) {
    if (a.bmt.size() != 3) throw UsageError("--bmt takes b p q");
    P = build_bmt(a.bmt[0], a.bmt[1], a.bmt[2]);
  } else {
    P = build_frac(a.family.empty() ? graph_from_file(a.file) : graph_from_family(a.family));
  }
  const LsCertificate c = certificate_from_json(read_json_file(a.cert));
  Report rep("ls verify");
  rep.input()["polytope"] = P.name;
  rep.input()["certificate"] = a.cert;
  const CertificateReport cr = verify_certificate(P, c, cfg.psd());
  rep.results()["report"] = to_json(cr);
  Json x = Json::array();
  for (const auto& xi : c.x()) x.push_back(xi.str());
  rep.results()["point"] = tagged(std::move(x), Provenance::Exact);
  rep.check("certificate verifies", cr.ok(), cr.psd.used == PsdMode::Exact ? Provenance::Exact : Provenance::Numeric);
  return rep;
}

void maybe_export(const std::string& path, const LsCertificate& c, Report& rep) {
  if (path.empty()) return;
  write_text_file(path, to_json(c).dump(2) + "\n");
  rep.results()["exported"] = path;
}

Report mt_cert_report(const LsArgs& a, const RunConfig& cfg) {
  Report rep("ls mt-cert");
  rep.input()["p"] = a.p;
  rep.input()["q"] = a.q;
  rep.input()["r"] = a.r;
  rep.input()["level"] = a.level;
  const RankCertificateReport r = stgen1_certificate(a.p, a.q, a.r, a.level, cfg.psd());
  rep.results()["certificate"] = to_json(r);
  rep.merge_warnings(r.warnings);
  rep.check("certificate checks", r.ok(), Provenance::Exact);
  maybe_export(a.export_path, stgen1_matrix(a.p, a.q, a.r), rep);
  return rep;
}

Report bmt_cert_report(const LsArgs& a, const RunConfig& cfg) {
  Report rep("ls bmt-cert");
  rep.input()["b"] = a.b;
  rep.input()["p"] = a.p;
  rep.input()["q"] = a.q;
  const RankCertificateReport r = stgen4_certificate(a.b, a.p, a.q, cfg.psd());
  rep.results()["certificate"] = to_json(r);
  rep.merge_warnings(r.warnings);
  rep.check("certificate checks", r.ok(), Provenance::Exact);
  maybe_export(a.export_path, stgen4_matrix(a.b, a.p, a.q), rep);
  return rep;
}

Report alpha_report(const LsArgs& a, const RunConfig& cfg) {
  if (a.family.empty() == a.file.empty()) throw UsageError("give exactly one of --family and --file");
  const Graph g = a.family.empty() ? graph_from_file(a.file) : graph_from_family(a.family);
  Report rep("ls alpha");
  rep.input()["graph"] = g.name();
  const AlphaLsReport r = alpha_lsplus_dvt(g, cfg.psd());
  rep.results()["alpha_ls"] = to_json(r);
  if (!r.exact) rep.warn("graph is not deeply vertex-transitive; the value is a lower bound only");
  if (!r.certificate_a_exact) rep.warn("certificate uses a rational a' above a");
  rep.check("certificate verifies", r.ok(), Provenance::Exact);
  return rep;
}

Report gap_report(const LsArgs& a, const RunConfig&) {
  Report rep("ls gap");
  rep.input()["p"] = a.p;
  rep.input()["q"] = a.q;
  rep.input()["r"] = a.r;
  const GapReport g = mt_gap(a.p, a.q, a.r, !a.no_brute_force);
  rep.results()["gap"] = to_json(g);
  rep.check("gap checks", g.ok(), a.no_brute_force ? Provenance::ClosedForm : Provenance::BruteForce);
  return rep;
}

}  // namespace

void register_ls_commands(CLI::App& app, Dispatch& d) {
  auto* ls = app.add_subcommand("ls", "LS+ certificates");
  ls->require_subcommand(1);
  auto args = std::make_shared<LsArgs>();

  auto* v = ls->add_subcommand("verify", "Verify a certificate JSON against a polytope");
  v->add_option("--cert", args->cert, "Certificate JSON")->required();
  v->add_option("--family", args->family, "FRAC of a graph family");
  v->add_option("--file", args->file, "FRAC of a graph file");
  v->add_option("--mt", args->mt, "Matching polytope: p q r")->expected(3);
  v->add_option("--bmt", args->bmt, "b-matching polytope: b p q")->expected(3);
  v->callback([&d, args] { d.run = [args](const RunConfig& c) { return verify_report(*args, c); }; });

  auto* m = ls->add_subcommand("mt-cert", "Matching rank certificate");
  m->add_option("--p", args->p)->required();
  m->add_option("--q", args->q)->required();
  m->add_option("--r", args->r)->required();
  m->add_option("--level", args->level);
  m->add_option("--export", args->export_path, "Write the level-one matrix");
  m->callback([&d, args] { d.run = [args](const RunConfig& c) { return mt_cert_report(*args, c); }; });

  auto* b = ls->add_subcommand("bmt-cert", "b-matching rank certificate");
  b->add_option("--b", args->b)->required();
  b->add_option("--p", args->p)->required();
  b->add_option("--q", args->q)->required();
  b->add_option("--export", args->export_path, "Write the certificate matrix");
  b->callback([&d, args] { d.run = [args](const RunConfig& c) { return bmt_cert_report(*args, c); }; });

  auto* al = ls->add_subcommand("alpha", "LS+ stable set value of a regular graph");
  al->add_option("--family", args->family);
  al->add_option("--file", args->file);
  al->callback([&d, args] { d.run = [args](const RunConfig& c) { return alpha_report(*args, c); }; });

  auto* g = ls->add_subcommand("gap", "Integrality gap of the matching polytope");
  g->add_option("--p", args->p)->required();
  g->add_option("--q", args->q)->required();
  g->add_option("--r", args->r)->required();
  g->add_flag("--no-brute-force", args->no_brute_force);
  g->callback([&d, args] { d.run = [args](const RunConfig& c) { return gap_report(*args, c); }; });
}

}  // namespace scheme_lab
