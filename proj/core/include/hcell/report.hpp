#pragma once

#include <string>
#include <vector>

#include "hcell/algebra.hpp"

namespace hcell {

// Deterministic run report. Renders byte-identically across runs unless
// timing output is explicitly enabled.
struct Report {
  std::string command;
  std::string fixture;
  std::string field;
  struct Check {
    std::string name;
    std::string status;  // "pass" | "fail" | "skipped"
    std::string witness;
  };
  std::vector<Check> checks;
  std::vector<std::pair<std::string, std::string>> data;  // ordered payload
  bool with_timing = false;
  double seconds = 0.0;

  void absorb(const ValidationReport& rep, const std::string& prefix = "");
  void add_check(const std::string& name, bool ok, const std::string& witness = "");
  void add_data(const std::string& key, const std::string& value);
  bool all_pass() const;

  std::string render_text() const;
  std::string render_json() const;
};

}  // namespace hcell
