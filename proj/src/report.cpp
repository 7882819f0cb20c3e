#include "austere/report.hpp"

#include <ostream>
#include <sstream>

namespace austere {

using nlohmann::json;

bool Report::all_pass() const {
  for (const CheckResult& c : checks)
    if (!c.pass) return false;
  return true;
}

void Report::add(std::string name, bool pass, json measured, json tolerance) {
  checks.push_back({std::move(name), pass, std::move(measured), std::move(tolerance)});
}

json Report::to_json() const {
  json jchecks = json::array();
  for (const CheckResult& c : checks) {
    json jc = {{"name", c.name}, {"pass", c.pass}};
    if (!c.measured.is_null()) jc["measured"] = c.measured;
    if (!c.tolerance.is_null()) jc["tolerance"] = c.tolerance;
    jchecks.push_back(std::move(jc));
  }
  return {{"command", command},
          {"config", config},
          {"checks", std::move(jchecks)},
          {"all_pass", all_pass()},
          {"wall_seconds", wall_seconds},
          {"version", kVersion}};
}

Report Report::from_json(const json& j) {
  Report r;
  r.command = j.at("command").get<std::string>();
  r.config = j.at("config");
  r.wall_seconds = j.at("wall_seconds").get<double>();
  for (const json& jc : j.at("checks")) {
    CheckResult c;
    c.name = jc.at("name").get<std::string>();
    c.pass = jc.at("pass").get<bool>();
    if (jc.contains("measured")) c.measured = jc.at("measured");
    if (jc.contains("tolerance")) c.tolerance = jc.at("tolerance");
    r.checks.push_back(std::move(c));
  }
  return r;
}

std::string Report::to_csv() const {
  std::ostringstream os;
  os << "name,pass,measured\n";
  for (const CheckResult& c : checks)
    os << c.name << "," << (c.pass ? 1 : 0) << ",\"" << c.measured.dump() << "\"\n";
  return os.str();
}

bool Report::print(std::ostream& os) const {
  for (const CheckResult& c : checks) {
    os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
    if (!c.measured.is_null()) os << "  " << c.measured.dump();
    os << "\n";
  }
  os << (all_pass() ? "OK" : "FAILED") << " (" << checks.size() << " checks, " << wall_seconds
     << "s)\n";
  return all_pass();
}

}  // namespace austere
