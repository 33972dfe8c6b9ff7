#pragma once
// Reproduction suites, one per acceptance criterion. Shared by the
// `reproduce` subcommand and the acceptance binary.

#include <string>
#include <vector>

#include "report.hpp"

namespace scheme_lab {

struct SuiteInfo {
  int criterion;
  std::string name;
  std::string summary;
};

const std::vector<SuiteInfo>& suites();

struct SuiteOptions {
  int table1_p_max = 15;
  int stability_p_max = 13;
};

// Throws UsageError for unknown names.
Report run_suite(const std::string& name, const RunConfig& cfg, const SuiteOptions& opts = {});

}  // namespace scheme_lab
