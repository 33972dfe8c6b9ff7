#pragma once
// Report assembly shared by every subcommand.

#include <string>
#include <vector>

#include <json.hpp>

#include "schemelab/matkit.hpp"

namespace scheme_lab {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "0.1.0";

// Where a reported number comes from.
enum class Provenance { ClosedForm, Numeric, BruteForce, Exact, Reference };
const char* to_string(Provenance p);

// A value tagged with its provenance.
Json tagged(Json value, Provenance p);

struct RunConfig {
  std::vector<std::string> argv;  // echoed in the report
  std::string output = "json";    // json | text
  unsigned seed = 1;
  schemelab::PsdMode psd_mode = schemelab::PsdMode::Auto;
  bool quick = false;
  bool slow = false;
  schemelab::PsdOptions psd() const;
};

class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  Json& input() { return input_; }
  Json& results() { return results_; }
  void check(const std::string& name, bool pass, Provenance p, Json detail = nullptr);
  void warn(const std::string& w);
  void merge_warnings(const std::vector<std::string>& ws);
  bool ok() const;
  // Copies another report's checks and warnings under a name prefix.
  void absorb(const std::string& prefix, const Report& other);

  Json to_json(const RunConfig& cfg) const;
  std::string render(const RunConfig& cfg) const;

 private:
  std::string command_;
  Json input_ = Json::object();
  Json results_ = Json::object();
  Json checks_ = Json::array();
  std::vector<std::string> warnings_;
};

// Thrown for bad flags or malformed inputs; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json read_json_file(const std::string& path);
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace scheme_lab
