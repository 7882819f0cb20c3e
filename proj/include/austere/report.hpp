#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace austere {

inline constexpr const char* kVersion = "0.1.0";

struct CheckResult {
  std::string name;
  bool pass = false;
  nlohmann::json measured;
  nlohmann::json tolerance;
};

// Machine-readable campaign result. Measured values are deterministic given
// the config (seed included); wall time is informational only.
struct Report {
  std::string command;
  nlohmann::json config;
  std::vector<CheckResult> checks;
  double wall_seconds = 0.0;

  bool all_pass() const;
  void add(std::string name, bool pass, nlohmann::json measured = {}, nlohmann::json tolerance = {});
  nlohmann::json to_json() const;
  static Report from_json(const nlohmann::json& j);
  std::string to_csv() const;
  // One line per check plus a summary; returns all_pass().
  bool print(std::ostream& os) const;
};

}  // namespace austere
