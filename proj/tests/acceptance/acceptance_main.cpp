// One PASS/FAIL line per acceptance criterion. Tolerances live in the suites.

#include <chrono>
#include <cstdio>
#include <exception>
#include <string>

#include "suites.hpp"

int main(int argc, char** argv) {
  scheme_lab::RunConfig cfg;
  cfg.argv.assign(argv + 1, argv + argc);
  for (const auto& a : cfg.argv)
    if (a == "--quick") cfg.quick = true;
  int failed = 0;
  for (const auto& s : scheme_lab::suites()) {
    const auto t0 = std::chrono::steady_clock::now();
    bool pass = false;
    std::string note;
    try {
      const scheme_lab::Report rep = scheme_lab::run_suite(s.name, cfg);
      pass = rep.ok();
      const auto j = rep.to_json(cfg);
      for (const auto& c : j["checks"])
        if (!c["pass"].get<bool>()) note += "\n      failed: " + c["name"].get<std::string>();
    } catch (const std::exception& e) {
      note = std::string("\n      exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s criterion %2d %-11s %s (%.1f s)%s\n", pass ? "PASS" : "FAIL", s.criterion, s.name.c_str(),
                s.summary.c_str(), secs, note.c_str());
    std::fflush(stdout);
    failed += !pass;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(scheme_lab::suites().size()) - failed,
              scheme_lab::suites().size());
  return failed == 0 ? 0 : 1;
}
