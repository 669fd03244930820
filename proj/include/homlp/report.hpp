#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "json.hpp"

namespace homlp {

enum class Verdict { confirmed, discrepant, out_of_domain };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::confirmed: return "confirmed";
    case Verdict::discrepant: return "discrepant";
    case Verdict::out_of_domain: return "out_of_domain";
  }
  return "?";
}

/// One checked claim: what was asserted, what the computation produced.
struct Finding {
  std::string claim;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  std::string claimed;
  std::string computed;
  Verdict verdict = Verdict::confirmed;
  Verdict expected = Verdict::confirmed;  // what the suite anticipates
  double elapsed_ms = 0;

  bool as_expected() const { return verdict == expected; }
};

inline nlohmann::ordered_json finding_json(const Finding& f, bool with_elapsed = false) {
  nlohmann::ordered_json j;
  j["claim"] = f.claim;
  j["params"] = f.params;
  j["claimed"] = f.claimed;
  j["computed"] = f.computed;
  j["verdict"] = to_string(f.verdict);
  j["expected"] = to_string(f.expected);
  if (with_elapsed) j["elapsed_ms"] = static_cast<long long>(f.elapsed_ms);
  return j;
}

/// Findings sorted by claim (stable, so equal claims keep run order).
inline nlohmann::ordered_json report_json(std::vector<Finding> findings, bool with_elapsed = false) {
  std::stable_sort(findings.begin(), findings.end(),
                   [](const Finding& a, const Finding& b) { return a.claim < b.claim; });
  nlohmann::ordered_json j;
  j["schema"] = "homlp/1";
  j["findings"] = nlohmann::ordered_json::array();
  for (const auto& f : findings) j["findings"].push_back(finding_json(f, with_elapsed));
  return j;
}

}  // namespace homlp
