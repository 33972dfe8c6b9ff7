#include <memory>

#include "commands.hpp"
#include "suites.hpp"

namespace scheme_lab {

namespace {

struct ReproduceArgs {
  std::string suite = "all";
  int p_max = 0;
  bool list = false;
};

Report reproduce(const ReproduceArgs& a, const RunConfig& cfg) {
  // The table runs to p = 12 by default and to 15 under --slow.
  SuiteOptions opts;
  opts.table1_p_max = cfg.slow ? 15 : 12;
  if (cfg.quick) opts.stability_p_max = 12;
  if (cfg.slow) opts.stability_p_max = 14;
  if (a.p_max) opts.table1_p_max = opts.stability_p_max = a.p_max;
  if (a.list) {
    Report rep("reproduce --list");
    Json v = Json::array();
    for (const auto& s : suites()) v.push_back(Json{{"criterion", s.criterion}, {"name", s.name}, {"summary", s.summary}});
    rep.results()["suites"] = std::move(v);
    return rep;
  }
  if (a.suite != "all") return run_suite(a.suite, cfg, opts);
  Report rep("reproduce all");
  for (const auto& s : suites()) {
    const Report sub = run_suite(s.name, cfg, opts);
    rep.results()[s.name] = sub.to_json(cfg)["results"];
    rep.absorb(s.name, sub);
  }
  return rep;
}

}  // namespace

void register_reproduce_commands(CLI::App& app, Dispatch& d) {
  auto args = std::make_shared<ReproduceArgs>();
  auto* r = app.add_subcommand("reproduce", "Run reproduction suites");
  r->add_option("--suite", args->suite, "Suite name or all");
  r->add_option("--p-max", args->p_max, "Upper p for the table and stability suites");
  r->add_flag("--list", args->list, "List suites");
  r->callback([&d, args] { d.run = [args](const RunConfig& c) { return reproduce(*args, c); }; });
}

}  // namespace scheme_lab
