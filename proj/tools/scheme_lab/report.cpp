#include "report.hpp"

#include <fstream>
#include <sstream>

namespace scheme_lab {

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::ClosedForm: return "closed-form";
    case Provenance::Numeric: return "numeric";
    case Provenance::BruteForce: return "brute-force";
    case Provenance::Exact: return "exact";
    case Provenance::Reference: return "reference";
  }
  return "exact";
}

Json tagged(Json value, Provenance p) {
  Json j;
  j["value"] = std::move(value);
  j["provenance"] = to_string(p);
  return j;
}

schemelab::PsdOptions RunConfig::psd() const {
  schemelab::PsdOptions o;
  o.mode = psd_mode;
  return o;
}

void Report::check(const std::string& name, bool pass, Provenance p, Json detail) {
  Json c;
  c["name"] = name;
  c["pass"] = pass;
  c["provenance"] = to_string(p);
  if (!detail.is_null()) c["detail"] = std::move(detail);
  checks_.push_back(std::move(c));
}

void Report::warn(const std::string& w) { warnings_.push_back(w); }

void Report::merge_warnings(const std::vector<std::string>& ws) {
  warnings_.insert(warnings_.end(), ws.begin(), ws.end());
}

bool Report::ok() const {
  for (const auto& c : checks_)
    if (!c["pass"].get<bool>()) return false;
  return true;
}

void Report::absorb(const std::string& prefix, const Report& other) {
  for (Json c : other.checks_) {
    c["name"] = prefix + ": " + c["name"].get<std::string>();
    checks_.push_back(std::move(c));
  }
  for (const auto& w : other.warnings_) warnings_.push_back(prefix + ": " + w);
}

Json Report::to_json(const RunConfig& cfg) const {
  Json j;
  j["tool"] = "scheme-lab";
  j["version"] = kVersion;
  j["command"] = command_;
  Json in = input_;
  in["argv"] = cfg.argv;
  in["seed"] = cfg.seed;
  in["psd_mode"] = std::string(schemelab::to_string(cfg.psd_mode));
  j["input"] = std::move(in);
  j["results"] = results_;
  j["checks"] = checks_;
  j["warnings"] = warnings_;
  j["ok"] = ok();
  return j;
}

namespace {

void flatten(const Json& j, const std::string& prefix, std::ostringstream& os) {
  if (j.is_object() && !j.empty()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), os);
  } else {
    os << prefix << ": " << j.dump() << "\n";
  }
}

}  // namespace

std::string Report::render(const RunConfig& cfg) const {
  if (cfg.output != "text") return to_json(cfg).dump(2) + "\n";
  std::ostringstream os;
  os << "scheme-lab " << kVersion << " " << command_ << "\n";
  flatten(results_, "", os);
  for (const auto& c : checks_)
    os << (c["pass"].get<bool>() ? "[pass] " : "[FAIL] ") << c["name"].get<std::string>() << " ("
       << c["provenance"].get<std::string>() << ")\n";
  for (const auto& w : warnings_) os << "warning: " << w << "\n";
  os << (ok() ? "ok" : "FAILED") << "\n";
  return os.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Json read_json_file(const std::string& path) {
  const std::string text = read_text_file(path);
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError("malformed JSON in '" + path + "': " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

}  // namespace scheme_lab
