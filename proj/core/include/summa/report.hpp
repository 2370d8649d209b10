#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace summa {

using Json = nlohmann::ordered_json;

struct RunConfig {
  std::vector<std::string> command;  // echoed into the report
  std::string format = "table";      // json | csv | table
  std::uint64_t seed = 1;
  std::optional<double> tol;
  std::optional<long> guard_subsets;
  std::string out_file;  // empty: stdout
};

// Timestamp-free payload: values, certificates, witnesses.  Exact numbers
// render as "p/q" strings, floats with 12 significant digits, so a fixed
// (command, inputs, seed) triple reproduces the same bytes.
struct Report {
  std::vector<std::string> command;
  Json payload = Json::object();
  int checks = 0;
  int failures = 0;

  bool pass() const { return failures == 0; }
  std::string render(const std::string& format) const;
};

// Collects named check groups for suite reports.
class Battery {
 public:
  explicit Battery(bool fault_injection = false)
      : fault_(fault_injection) {}

  void check(const std::string& name, bool ok, const std::string& witness = "");
  // Aggregate counter: n_ok out of n_total instances of a named property.
  void bulk(const std::string& name, int n_ok, int n_total,
            const std::string& witness = "");

  bool consume_fault();  // true exactly once when fault injection is on

  Json json() const { return entries_; }
  int checks() const { return checks_; }
  int failures() const { return failures_; }

 private:
  Json entries_ = Json::array();
  int checks_ = 0;
  int failures_ = 0;
  bool fault_ = false;
  bool fault_used_ = false;
};

}  // namespace summa
