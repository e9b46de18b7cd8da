#include "hcell/report.hpp"

#include <sstream>

#include <json.hpp>

namespace hcell {

void Report::absorb(const ValidationReport& rep, const std::string& prefix) {
  for (auto& e : rep.entries)
    add_check(prefix.empty() ? e.check : prefix + ": " + e.check, e.ok, e.witness);
}

void Report::add_check(const std::string& name, bool ok, const std::string& witness) {
  checks.push_back({name, ok ? "pass" : "fail", ok ? "" : witness});
}

void Report::add_data(const std::string& key, const std::string& value) {
  data.emplace_back(key, value);
}

bool Report::all_pass() const {
  for (auto& c : checks)
    if (c.status == "fail") return false;
  return true;
}

std::string Report::render_text() const {
  std::ostringstream os;
  os << "== " << command << " " << fixture;
  if (!field.empty()) os << " (field " << field << ")";
  os << " ==\n";
  for (auto& [k, v] : data) os << k << ": " << v << "\n";
  for (auto& c : checks) {
    os << "[" << (c.status == "pass" ? "PASS" : c.status == "fail" ? "FAIL" : "SKIP") << "] "
       << c.name;
    if (!c.witness.empty()) os << " -- " << c.witness;
    os << "\n";
  }
  os << (all_pass() ? "result: all checks passed" : "result: CHECK FAILURES") << "\n";
  if (with_timing) os << "elapsed_seconds: " << seconds << "\n";
  return os.str();
}

std::string Report::render_json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["fixture"] = fixture;
  if (!field.empty()) j["field"] = field;
  nlohmann::ordered_json dat = nlohmann::ordered_json::object();
  for (auto& [k, v] : data) dat[k] = v;
  j["data"] = dat;
  j["checks"] = nlohmann::ordered_json::array();
  for (auto& c : checks) {
    nlohmann::ordered_json cj;
    cj["name"] = c.name;
    cj["status"] = c.status;
    if (!c.witness.empty()) cj["witness"] = c.witness;
    j["checks"].push_back(cj);
  }
  j["result"] = all_pass() ? "pass" : "fail";
  if (with_timing) j["elapsed_seconds"] = seconds;
  return j.dump(2) + "\n";
}

}  // namespace hcell
