// Acceptance runner: one line per criterion, each check timed against its
// runtime budget. Parameters come from the campaign file but are pinned here
// so an edited campaign cannot quietly loosen a criterion.

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "heavy/campaign.hpp"

namespace {

using heavy::Json;

struct Pin {
  const char* pointer;
  Json value;
};

struct Criterion {
  int id;
  const char* check;
  std::optional<double> budget_seconds;
  std::vector<Pin> pins;
};

const char* kGolden = "(-1+sqrt(5))/2";

std::vector<Criterion> criteria() {
  Json census_counts = Json::array({2, 2});
  for (int i = 3; i <= 30; ++i) census_counts.push_back(1);
  return {
      {1, "morse-prefix", 0.001, {{"/params/length", 16}, {"/params/expected", "0110100110010110"}}},
      {2, "morse-balance", 1.0, {{"/params/k_min", 1}, {"/params/k_max", 16}}},
      {3,
       "morse-frequencies",
       5.0,
       {{"/params/window", 65536},
        {"/params/factors/1/factor", "11"},
        {"/params/factors/1/target", "1/6"},
        {"/params/factors/2/factor", "0011"},
        {"/params/factors/2/target", "1/12"},
        {"/tolerance/11", "1/100"},
        {"/tolerance/0011", "1/100"}}},
      {4, "morse-weight-bounds", 30.0, {{"/params/window", 65536}, {"/params/max_length", 64}}},
      {5, "morse-eleven-heaviness", 30.0, {{"/params/window", 16384}, {"/params/factor", "11"}, {"/params/alpha", "1/2"}}},
      {6,
       "ternary-substitution",
       5.0,
       {{"/params/prefix_length", 15},
        {"/params/expected_prefix", "210201120210120"},
        {"/params/horizon", 100000},
        {"/tolerance/bound", "1"}}},
      {7, "golden-alpha-heavy-uniqueness", 30.0, {{"/params/alpha", kGolden}, {"/params/up_to", 30}}},
      {8,
       "rational-counterexample",
       std::nullopt,
       {{"/params/alpha", "1/2"}, {"/params/length", 2}, {"/params/expected_witnesses", Json::array({"10", "11"})}}},
      {9, "heavy-sturmian-uniqueness", 60.0, {{"/params/max_length", 14}}},
      {10,
       "golden-heavy-census",
       30.0,
       {{"/params/alpha", kGolden}, {"/params/up_to", 30}, {"/params/expected_counts", census_counts}}},
      {11,
       "property-suites",
       120.0,
       {{"/params/reversing/max_length", 12},
        {"/params/reversing/alphas", Json::array({"1/3", "1/2", "2/3"})},
        {"/params/concatenation/max_length", 10},
        {"/params/factorization/max_length", 14}}},
      {12, "sturmian-complexity", 10.0, {{"/params/alpha", kGolden}, {"/params/up_to", 40}}},
      {13,
       "rotation-boundedness",
       5.0,
       {{"/params/alpha", kGolden}, {"/params/x0", "0"}, {"/params/horizon", 100000}, {"/tolerance/bound", "2"}}},
  };
}

Json definition_json(const heavy::CheckDefinition& d) {
  return {{"name", d.name}, {"params", d.params}, {"tolerance", d.tolerance}};
}

bool run_one(const Criterion& c, const heavy::Campaign& campaign) {
  std::string label = "criterion " + std::to_string(c.id) + " [" + c.check + "]";
  const heavy::CheckDefinition* def = nullptr;
  try {
    def = &campaign.find(c.check);
  } catch (const std::exception& e) {
    std::cout << label << ": FAIL (" << e.what() << ")\n";
    return false;
  }
  Json doc = definition_json(*def);
  for (const auto& pin : c.pins) {
    Json::json_pointer ptr(pin.pointer);
    if (!doc.contains(ptr) || doc[ptr] != pin.value) {
      std::cout << label << ": FAIL (campaign parameter " << pin.pointer << " differs from the criterion)\n";
      return false;
    }
  }
  auto result = heavy::run_check(*def);
  bool in_time = !c.budget_seconds || result.seconds < *c.budget_seconds;
  bool pass = result.pass && in_time;
  char timing[96];
  if (c.budget_seconds) {
    std::snprintf(timing, sizeof timing, "%.4f s, limit %g s", result.seconds, *c.budget_seconds);
  } else {
    std::snprintf(timing, sizeof timing, "%.4f s", result.seconds);
  }
  std::cout << label << ": " << (pass ? "PASS" : "FAIL") << " (" << timing << ")";
  if (!result.pass) std::cout << " measured=" << result.measured.dump() << " expected=" << result.expected.dump();
  if (!in_time) std::cout << " over time budget";
  std::cout << "\n";
  return pass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::optional<int> only;
  std::string config = heavy::default_campaign_path();
  app.add_option("--criterion", only, "Run a single criterion")->check(CLI::Range(1, 13));
  app.add_option("--config", config, "Campaign file");
  CLI11_PARSE(app, argc, argv);

  heavy::Campaign campaign;
  try {
    campaign = heavy::load_campaign(config);
  } catch (const std::exception& e) {
    std::cout << "cannot load campaign: " << e.what() << "\n";
    return 1;
  }
  bool all = true;
  for (const auto& c : criteria()) {
    if (only && *only != c.id) continue;
    all = run_one(c, campaign) && all;
  }
  return all ? 0 : 1;
}
