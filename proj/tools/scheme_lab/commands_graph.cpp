#include <memory>
#include <sstream>

#include "commands.hpp"

namespace scheme_lab {

using namespace schemelab;

namespace {

constexpr std::size_t kBruteForceCap = 64;  // exact alpha and omega
constexpr std::size_t kAutomorphismCap = 64;

struct GraphArgs {
  std::string file;
  std::string family;
  std::string format = "json";
  std::string out;
};

std::vector<long> parse_ints(const std::string& text) {
  std::vector<long> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stol(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw UsageError("bad integer '" + item + "' in family parameters");
    }
  }
  return v;
}

Graph load(const GraphArgs& a) {
  if (a.file.empty() == a.family.empty()) throw UsageError("give exactly one of --file and --family");
  return a.file.empty() ? graph_from_family(a.family) : graph_from_file(a.file);
}

Report graph_report(const GraphArgs& a, const RunConfig&) {
  const Graph g = load(a);
  Report rep("graph report");
  rep.input()["source"] = a.file.empty() ? "family:" + a.family : a.file;
  rep.results()["name"] = g.name();
  rep.results()["n"] = g.n();
  rep.results()["edges"] = g.edge_count();
  const auto k = g.regular_degree();
  rep.results()["regular_degree"] = k ? Json(*k) : Json(nullptr);
  rep.results()["triangle_free"] = !g.has_triangle();
  rep.results()["connected"] = g.is_connected();
  Json eig = Json::array();
  for (const auto& [v, m] : group_eigenvalues(g.spectrum())) eig.push_back(Json{{"value", v}, {"multiplicity", m}});
  rep.results()["spectrum"] = tagged(std::move(eig), Provenance::Numeric);
  if (g.hint().lambda2 || g.hint().lambda_min) {
    rep.results()["hint_source"] = g.hint().source;
    const auto& s = g.spectrum();
    if (g.hint().lambda2 && s.size() > 1)
      rep.check("registered lambda2 matches the numeric spectrum", std::abs(*g.hint().lambda2 - s[1]) < 1e-7,
                Provenance::ClosedForm);
    if (g.hint().lambda_min && !s.empty())
      rep.check("registered lambda_min matches the numeric spectrum",
                std::abs(*g.hint().lambda_min - s.back()) < 1e-7, Provenance::ClosedForm);
  }
  if (g.n() <= kAutomorphismCap) {
    const DvtReport dvt = dvt_report(g);
    rep.results()["dvt"] = to_json(dvt);
  } else {
    rep.warn("more than " + std::to_string(kAutomorphismCap) + " vertices; transitivity tests skipped");
  }
  if (g.n() <= kBruteForceCap) {
    rep.results()["alpha"] = tagged(alpha_bruteforce(g), Provenance::BruteForce);
    rep.results()["omega"] = tagged(omega_bruteforce(g), Provenance::BruteForce);
  }
  if (k && g.n() >= 4) {
    rep.results()["delta"] = tagged(delta_g(g), Provenance::ClosedForm);
    if (*k > 0) rep.results()["hoffman_bound"] = tagged(hoffman_bound(g), Provenance::ClosedForm);
  }
  return rep;
}

Report graph_export(const GraphArgs& a, const RunConfig&) {
  const Graph g = load(a);
  Report rep("graph export");
  rep.input()["format"] = a.format;
  std::string text;
  if (a.format == "json") text = to_json(g).dump(2) + "\n";
  else if (a.format == "dimacs") text = to_dimacs(g);
  else throw UsageError("--format must be json or dimacs");
  if (a.out.empty()) {
    rep.results()["graph"] = a.format == "json" ? Json(to_json(g)) : Json(text);
  } else {
    write_text_file(a.out, text);
    rep.results()["written"] = a.out;
  }
  const Graph back = a.format == "json" ? graph_from_json(nlohmann::json::parse(text)) : graph_from_dimacs(text);
  rep.check("export parses back to the same graph", back == g, Provenance::Exact);
  return rep;
}

}  // namespace

Graph graph_from_family(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  const std::vector<long> v = colon == std::string::npos ? std::vector<long>{} : parse_ints(spec.substr(colon + 1));
  auto need = [&](std::size_t count) {
    if (v.size() != count)
      throw UsageError("family '" + name + "' takes " + std::to_string(count) + " parameter(s)");
  };
  auto positive = [&](long x) {
    if (x < 1 || x > 4096) throw UsageError("family parameter out of range");
    return static_cast<std::size_t>(x);
  };
  if (name == "petersen" || name == "icosahedron") {
    need(0);
    return name == "petersen" ? families::petersen() : families::icosahedron();
  }
  if (name == "cycle" || name == "complete" || name == "antihole") {
    need(1);
    const std::size_t n = positive(v[0]);
    if (name == "cycle") return families::cycle(n);
    return name == "complete" ? families::complete(n) : families::antihole(n);
  }
  if (name == "folded-cube") {
    need(1);
    return families::folded_cube_graph(static_cast<int>(v[0]));
  }
  if (name == "johnson" || name == "co-johnson") {
    need(3);
    const Graph g = families::johnson_graph(static_cast<int>(v[0]), static_cast<int>(v[1]), static_cast<int>(v[2]));
    return name == "johnson" ? g : complement(g);
  }
  throw UsageError("unknown graph family '" + name + "'");
}

Graph graph_from_file(const std::string& path) {
  const std::string text = read_text_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return graph_from_json(nlohmann::json::parse(text));
  return graph_from_dimacs(text);
}

void register_graph_commands(CLI::App& app, Dispatch& d) {
  auto* g = app.add_subcommand("graph", "Graph reports and conversions");
  g->require_subcommand(1);
  auto args = std::make_shared<GraphArgs>();
  auto source = [args](CLI::App* c) {
    c->add_option("--file", args->file, "JSON or DIMACS graph file");
    c->add_option("--family", args->family, "Family such as cycle:7 or johnson:7,2,1");
  };
  auto* r = g->add_subcommand("report", "Spectrum, transitivity and small-graph invariants");
  source(r);
  r->callback([&d, args] { d.run = [args](const RunConfig& c) { return graph_report(*args, c); }; });
  auto* e = g->add_subcommand("export", "Write a graph as JSON or DIMACS");
  source(e);
  e->add_option("--format", args->format, "json or dimacs");
  e->add_option("--out", args->out, "Output file; the report embeds the graph otherwise");
  e->callback([&d, args] { d.run = [args](const RunConfig& c) { return graph_export(*args, c); }; });
}

}  // namespace scheme_lab
