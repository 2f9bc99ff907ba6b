#pragma once

#include <json.hpp>
#include <string>
#include <string_view>
#include <vector>

namespace heavy {

using Json = nlohmann::ordered_json;

/// One named, parameterized claim with an executable predicate.
struct CheckDefinition {
  std::string name;
  std::string claim;
  Json params = Json::object();
  Json tolerance = Json::object();
};

struct Campaign {
  int version = 0;
  std::vector<CheckDefinition> checks;

  /// Throws DomainError for unknown names.
  const CheckDefinition& find(std::string_view name) const;
};

struct CheckResult {
  std::string check;
  std::string claim;
  Json params;
  Json measured;
  Json expected;
  Json tolerance;
  bool pass = false;
  double seconds = 0;  // wall time, kept out of the serialized report
};

/// Throws ParseError on malformed JSON or missing fields, and DomainError when
/// a check name has no predicate or appears twice.
Campaign parse_campaign(std::string_view json_text);
Campaign load_campaign(const std::string& path);
/// Path baked in at build time.
std::string default_campaign_path();

/// Names that have a predicate implementation, sorted.
std::vector<std::string> known_checks();

/// Runs one check. Exceptions thrown by the predicate become a failed result
/// whose measured value carries the message.
CheckResult run_check(const CheckDefinition& def);

/// Runs "all" checks or the single named one; checks run concurrently and
/// results come back sorted by name. Throws DomainError for unknown names.
std::vector<CheckResult> run_campaign(const Campaign& campaign, std::string_view selector);

/// {check, paper_ref, params, measured, expected, tolerance, pass}; no timing,
/// so identical parameters give identical bytes.
Json to_json(const CheckResult& result);
std::string results_to_json(const std::vector<CheckResult>& results);

}  // namespace heavy
