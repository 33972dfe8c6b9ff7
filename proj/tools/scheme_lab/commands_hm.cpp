#include <memory>

#include "commands.hpp"
#include "schemelab/hypermatching.hpp"

namespace scheme_lab {

using namespace schemelab;

namespace {

struct HmArgs {
  int p = 6, q = 2, r = 2;
  int p_min = 6, p_max = 10;
  std::string sequence = "a4r2r";
  int terms = 8;
  std::string partition;
  bool all = false;
};

void require_matching_params(const HmArgs& a) {
  if (a.q < 1 || a.r < 1 || a.p < a.q * a.r || a.p > 32)
    throw UsageError("need q, r >= 1 and qr <= p <= 32");
}

Report classes_report(const HmArgs& a) {
  require_matching_params(a);
  Report rep("hm classes");
  rep.input()["p"] = a.p;
  rep.input()["q"] = a.q;
  rep.input()["r"] = a.r;
  const HypermatchingScheme s = classify(a.p, a.q, a.r);
  rep.results()["ground"] = s.ground_size();
  rep.results()["class_count"] = tagged(s.class_count(), Provenance::BruteForce);
  Json cls = Json::array();
  std::size_t total = 0;
  for (std::size_t k = 0; k < s.class_count(); ++k) {
    Json c = to_json(s.classes()[k]);
    c["valency"] = s.valency(static_cast<int>(k));
    total += s.valency(static_cast<int>(k));
    cls.push_back(std::move(c));
  }
  rep.results()["classes"] = std::move(cls);
  rep.check("valencies sum to the ground size", total == s.ground_size(), Provenance::Exact);
  rep.check("matching count matches the closed form", matching_count(a.p, a.q, a.r) == s.ground_size(),
            Provenance::ClosedForm);
  if (a.q == 2)
    rep.check("typed-partition count agrees",
              count_classes_q2(a.p, a.r) == static_cast<unsigned long>(s.class_count()), Provenance::ClosedForm);
  // Throws if a second representative pair of some class disagrees.
  const StructureConstants sc = structure_constants(s);
  rep.results()["commutative"] = is_commutative(sc);
  rep.results()["symmetric"] = is_symmetric(sc);
  return rep;
}

Report count_report(const HmArgs& a) {
  Report rep("hm count");
  rep.input()["sequence"] = a.sequence;
  rep.input()["terms"] = a.terms;
  if (a.terms < 1 || a.terms > 40) throw UsageError("--terms must lie in 1..40");
  Json v = Json::array();
  if (a.sequence == "a4r2r") {
    for (const auto& z : count_classes_q2_series(a.terms - 1)) v.push_back(z.get_str());
  } else if (a.sequence == "apq2") {
    for (int q = 0; q < a.terms; ++q) v.push_back(count_classes_r2(4 * q, q).get_str());
  } else {
    throw UsageError("--sequence must be a4r2r or apq2");
  }
  rep.results()["terms"] = tagged(std::move(v), Provenance::ClosedForm);
  return rep;
}

Report commutativity_report(const HmArgs& a) {
  if (a.p_min < a.q * a.r || a.p_max < a.p_min) throw UsageError("need qr <= p-min <= p-max");
  Report rep("hm commutativity");
  rep.input()["q"] = a.q;
  rep.input()["r"] = a.r;
  rep.input()["p_min"] = a.p_min;
  rep.input()["p_max"] = a.p_max;
  const CommutativityTable t = commutativity_table(a.q, a.r, a.p_min, a.p_max);
  rep.results()["table"] = tagged(to_json(t), Provenance::Exact);
  bool symmetric = true;
  for (std::size_t i = 0; i < t.entries.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) symmetric = symmetric && t.entries[i][j].verdict == t.entries[j][i].verdict;
  rep.check("table is symmetric", symmetric, Provenance::Exact);
  return rep;
}

Report subschemes_report(const HmArgs& a) {
  require_matching_params(a);
  Report rep("hm subschemes");
  rep.input()["p"] = a.p;
  rep.input()["q"] = a.q;
  rep.input()["r"] = a.r;
  rep.input()["symmetric_only"] = !a.all;
  SubschemeSearchOptions o;
  o.symmetric_only = !a.all;
  const auto found = subscheme_search(a.q, a.r, a.p, o);
  Json list = Json::array();
  for (const auto& f : found) {
    std::string label;
    for (const auto& b : f.block_labels) label += (label.empty() ? "" : " | ") + b;
    list.push_back(Json{{"blocks", label}, {"classes", f.blocks.size() + 1}});
  }
  rep.results()["count"] = found.size();
  rep.results()["subschemes"] = tagged(std::move(list), Provenance::Exact);
  return rep;
}

Report stability_report(const HmArgs& a) {
  if (a.partition.empty()) throw UsageError("--partition is required");
  Report rep("hm stability");
  rep.input()["q"] = a.q;
  rep.input()["r"] = a.r;
  rep.input()["partition"] = a.partition;
  rep.input()["p_max"] = a.p_max;
  const KeyPartition keys = parse_key_partition(a.partition);
  const StabilityReport s = contraction_stability(a.q, a.r, keys, a.p_max);
  Json v = Json::object();
  for (std::size_t i = 0; i < s.p_values.size(); ++i) v[std::to_string(s.p_values[i])] = static_cast<bool>(s.verdicts[i]);
  rep.results()["verdicts"] = tagged(std::move(v), Provenance::Exact);
  rep.results()["holds_through_3qr"] = s.holds_through_3qr;
  rep.check("verdicts consistent with the 3qr prediction", s.prediction_consistent, Provenance::Exact);
  return rep;
}

}  // namespace

void register_hm_commands(CLI::App& app, Dispatch& d) {
  auto hm = app.add_subcommand("hm", "Hypermatching schemes M(p, q, r)");
  hm->require_subcommand(1);
  auto args = std::make_shared<HmArgs>();
  auto pqr = [args](CLI::App* c) {
    c->add_option("--p", args->p);
    c->add_option("--q", args->q);
    c->add_option("--r", args->r);
  };
  auto* cl = hm->add_subcommand("classes", "Orbit classes by meet table");
  pqr(cl);
  cl->callback([&d, args] { d.run = [args](const RunConfig&) { return classes_report(*args); }; });

  auto* ct = hm->add_subcommand("count", "Class-count sequences");
  ct->add_option("--sequence", args->sequence, "a4r2r or apq2");
  ct->add_option("--terms", args->terms);
  ct->callback([&d, args] { d.run = [args](const RunConfig&) { return count_report(*args); }; });

  auto* cm = hm->add_subcommand("commutativity", "Which class pairs commute across p");
  cm->add_option("--q", args->q);
  cm->add_option("--r", args->r);
  cm->add_option("--p-min", args->p_min);
  cm->add_option("--p-max", args->p_max);
  cm->callback([&d, args] { d.run = [args](const RunConfig&) { return commutativity_report(*args); }; });

  auto* ss = hm->add_subcommand("subschemes", "Exhaustive subscheme search");
  pqr(ss);
  ss->add_flag("--all", args->all, "Include non-symmetric subschemes");
  ss->callback([&d, args] { d.run = [args](const RunConfig&) { return subschemes_report(*args); }; });

  auto* st = hm->add_subcommand("stability", "Check one contraction across p");
  st->add_option("--q", args->q);
  st->add_option("--r", args->r);
  st->add_option("--partition", args->partition, "Key partition such as \"M1+B8|B5+B6+B7\"");
  st->add_option("--p-max", args->p_max);
  st->callback([&d, args] { d.run = [args](const RunConfig&) { return stability_report(*args); }; });
}

}  // namespace scheme_lab
