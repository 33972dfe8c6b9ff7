#include <algorithm>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"
#include "report.hpp"

namespace scheme_lab {
namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

// argv without the 0th entry and without --golden-out, so that a replayed
// run echoes the same arguments.
std::vector<std::string> echoed_args(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--golden-out") {
      ++i;
      continue;
    }
    if (args[i].rfind("--golden-out=", 0) == 0) continue;
    out.push_back(args[i]);
  }
  return out;
}

Outcome run_cli(const std::vector<std::string>& args, int depth = 0);

Report replay(const std::string& path, const RunConfig& cfg, int depth) {
  if (depth > 0) throw UsageError("replay cannot be nested");
  const Json golden = read_json_file(path);
  if (!golden.contains("argv") || !golden.contains("output"))
    throw UsageError(path + ": golden file needs 'argv' and 'output'");
  const auto argv = golden["argv"].get<std::vector<std::string>>();
  const Outcome again = run_cli(argv, depth + 1);
  const std::string want = golden["output"].get<std::string>();
  Report rep("replay");
  rep.input()["golden"] = path;
  rep.input()["replayed_argv"] = argv;
  std::size_t first_diff = 0;
  while (first_diff < want.size() && first_diff < again.out.size() && want[first_diff] == again.out[first_diff])
    ++first_diff;
  const bool same = want == again.out;
  rep.results()["bytes_expected"] = want.size();
  rep.results()["bytes_produced"] = again.out.size();
  if (!same) rep.results()["first_difference_at"] = first_diff;
  rep.results()["exit_code"] = again.code;
  rep.check("output is byte-identical", same, Provenance::Exact);
  if (golden.contains("exit_code"))
    rep.check("exit code matches", golden["exit_code"].get<int>() == again.code, Provenance::Exact);
  (void)cfg;
  return rep;
}

Outcome run_cli(const std::vector<std::string>& args, int depth) {
  Outcome res;
  std::ostringstream out, err;
  CLI::App app("Association schemes, hypermatching schemes and LS+ certificates", "scheme-lab");
  app.require_subcommand(1);
  // Subcommands inherit this, so global flags may follow the subcommand.
  app.fallthrough();
  app.set_version_flag("--version", kVersion);

  RunConfig cfg;
  std::string psd_mode = "auto";
  std::string golden_out;
  app.add_option("--output", cfg.output, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", cfg.seed, "Seed, echoed in the report (every computation is deterministic)");
  app.add_option("--psd-mode", psd_mode, "PSD check mode")->check(CLI::IsMember({"exact", "float", "auto"}));
  auto* quick = app.add_flag("--quick", cfg.quick, "Smaller ranges");
  app.add_flag("--slow", cfg.slow, "Larger ranges")->excludes(quick);
  app.add_option("--golden-out", golden_out, "Write {argv, output} for later replay");

  Dispatch d;
  register_scheme_commands(app, d);
  register_hm_commands(app, d);
  register_graph_commands(app, d);
  register_ls_commands(app, d);
  register_reproduce_commands(app, d);
  std::string golden_in;
  auto* rp = app.add_subcommand("replay", "Re-run a golden file and compare output byte for byte");
  rp->add_option("golden", golden_in, "Golden JSON file")->required();
  rp->callback([&] { d.run = [&](const RunConfig& c) { return replay(golden_in, c, depth); }; });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
    cfg.psd_mode = schemelab::parse_psd_mode(psd_mode);
    cfg.argv = echoed_args(args);
    const Report rep = d.run(cfg);
    res.out = rep.render(cfg);
    res.code = rep.ok() ? 0 : 1;
    if (!golden_out.empty()) {
      Json g;
      g["argv"] = cfg.argv;
      g["output"] = res.out;
      g["exit_code"] = res.code;
      write_text_file(golden_out, g.dump(2) + "\n");
    }
  } catch (const CLI::ParseError& e) {
    res.code = app.exit(e, out, err);
    if (res.code != 0) res.code = 2;
    res.out = out.str();
    res.err = err.str();
    return res;
  } catch (const UsageError& e) {
    res.code = 2;
    res.err = std::string("error: ") + e.what() + "\n";
  } catch (const std::invalid_argument& e) {
    res.code = 2;
    res.err = std::string("error: ") + e.what() + "\n";
  } catch (const std::exception& e) {
    res.code = 3;
    res.err = std::string("internal error: ") + e.what() + "\n";
  }
  return res;
}

}  // namespace
}  // namespace scheme_lab

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const auto res = scheme_lab::run_cli(args);
  std::cout << res.out;
  std::cerr << res.err;
  return res.code;
}
