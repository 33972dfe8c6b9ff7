#pragma once
// Subcommand registration. Each register_* call adds its subcommands to the
// app; the selected one stores its action in the dispatch slot.

#include <functional>
#include <string>

#include <CLI11.hpp>

#include "report.hpp"
#include "schemelab/graphs.hpp"

namespace scheme_lab {

struct Dispatch {
  std::function<Report(const RunConfig&)> run;
};

void register_scheme_commands(CLI::App& app, Dispatch& d);
void register_hm_commands(CLI::App& app, Dispatch& d);
void register_graph_commands(CLI::App& app, Dispatch& d);
void register_ls_commands(CLI::App& app, Dispatch& d);
void register_reproduce_commands(CLI::App& app, Dispatch& d);

// "cycle:7", "antihole:9", "complete:5", "petersen", "icosahedron",
// "johnson:7,2,1", "co-johnson:5,2,2", "folded-cube:2".
schemelab::Graph graph_from_family(const std::string& spec);
// JSON when the text starts with '{', DIMACS otherwise.
schemelab::Graph graph_from_file(const std::string& path);

}  // namespace scheme_lab
