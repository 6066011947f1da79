#include "affinv/cli/report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace affinv::cli {

PropertyRecord::PropertyRecord(std::string property_name, bool exact) : name(std::move(property_name)) {
  if (!exact) worst_residual = 0.0;
}

void PropertyRecord::record(bool ok, Json witness) {
  ++checked;
  if (!ok) {
    ++failures;
    witnesses.push_back(std::move(witness));
  }
}

void PropertyRecord::observe(double residual) {
  if (!worst_residual) worst_residual = 0.0;
  if (std::isnan(residual) || residual > *worst_residual) worst_residual = residual;
}

Json PropertyRecord::to_json() const {
  Json j{{"name", name}, {"checked", checked}, {"failures", failures}};
  if (worst_residual) {
    j["worst_residual"] = *worst_residual;
  } else {
    j["worst_residual"] = "exact";
  }
  j["witnesses"] = witnesses;
  return j;
}

bool VerificationReport::passed() const {
  return std::all_of(properties.begin(), properties.end(), [](const PropertyRecord& p) { return p.passed(); });
}

PropertyRecord& VerificationReport::add(std::string name, bool exact) {
  properties.emplace_back(std::move(name), exact);
  return properties.back();
}

Json VerificationReport::to_json() const {
  Json props = Json::array();
  for (const auto& p : properties) props.push_back(p.to_json());
  Json j{{"suite", suite},     {"n", n},          {"samples", samples},  {"seed", seed},
         {"pass", passed()},   {"properties", props}, {"tool_version", kToolVersion}, {"config", config}};
  if (timestamp) j["timestamp"] = *timestamp;
  return j;
}

std::string VerificationReport::to_markdown() const {
  std::ostringstream os;
  os << "# Verification report: " << suite << "\n\n";
  os << "- n: " << n << "\n- samples: " << samples << "\n- seed: " << seed << "\n- result: **"
     << (passed() ? "PASS" : "FAIL") << "**\n\n";
  os << "| property | checked | failures | worst residual |\n|---|---:|---:|---:|\n";
  for (const auto& p : properties) {
    os << "| " << p.name << " | " << p.checked << " | " << p.failures << " | ";
    if (p.worst_residual) {
      os << Json(*p.worst_residual).dump();
    } else {
      os << "exact";
    }
    os << " |\n";
  }
  for (const auto& p : properties) {
    if (p.witnesses.empty()) continue;
    os << "\n## Witnesses for " << p.name << "\n\n";
    for (const auto& w : p.witnesses) os << "```json\n" << w.dump() << "\n```\n";
  }
  return os.str();
}

}  // namespace affinv::cli
