#include "heavy/campaign.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <future>
#include <map>
#include <set>
#include <sstream>

#include "heavy/errors.hpp"
#include "heavy/factors.hpp"
#include "heavy/heaviness.hpp"
#include "heavy/sequences.hpp"
#include "heavy/sturmian.hpp"

#ifndef HEAVY_DEFAULT_CAMPAIGN
#define HEAVY_DEFAULT_CAMPAIGN "campaigns/campaigns.json"
#endif

namespace heavy {

namespace {

using Predicate = std::function<void(const CheckDefinition&, CheckResult&)>;

std::int64_t int_param(const Json& params, const char* key) {
  if (!params.contains(key) || !params[key].is_number_integer()) {
    throw ParseError(std::string("parameter '") + key + "' must be an integer");
  }
  return params[key].get<std::int64_t>();
}

std::string str_param(const Json& params, const char* key) {
  if (!params.contains(key) || !params[key].is_string()) {
    throw ParseError(std::string("parameter '") + key + "' must be a string");
  }
  return params[key].get<std::string>();
}

AlgebraicTarget alpha_param(const Json& params, const char* key = "alpha") {
  return AlgebraicTarget::parse(str_param(params, key));
}

Rational rational_param(const Json& params, const char* key) { return parse_rational(str_param(params, key)); }

Json counts_json(const std::vector<std::size_t>& counts) {
  Json out = Json::array();
  for (auto c : counts) out.push_back(c);
  return out;
}

Json words_json(const std::vector<Word>& words) {
  Json out = Json::array();
  for (const auto& w : words) out.push_back(to_string(w));
  return out;
}

std::vector<Word> binary_words(std::size_t n) {
  std::vector<Word> out;
  out.reserve(std::size_t{1} << n);
  std::vector<int> bits(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    for (std::size_t i = 0; i < n; ++i) bits[i] = static_cast<int>((mask >> (n - 1 - i)) & 1u);
    out.push_back(Word::from_bits(bits));
  }
  return out;
}

SequenceHandle golden_style_handle(const Json& params) {
  return SequenceHandle::mechanical(alpha_param(params), MechanicalConvention::upper);
}

// --- Morse sequence --------------------------------------------------------

void morse_prefix_check(const CheckDefinition& def, CheckResult& r) {
  auto n = static_cast<std::size_t>(int_param(def.params, "length"));
  std::string got = to_string(morse_prefix(n));
  r.measured = got;
  r.expected = str_param(def.params, "expected");
  r.pass = r.measured == r.expected;
}

void morse_balance_check(const CheckDefinition& def, CheckResult& r) {
  auto k_min = int_param(def.params, "k_min");
  auto k_max = int_param(def.params, "k_max");
  Json mismatches = Json::array();
  for (auto k = k_min; k <= k_max; ++k) {
    Rational got = weight(morse_prefix(std::size_t{1} << k));
    if (got != Rational(Integer(1) << static_cast<unsigned long>(k - 1))) mismatches.push_back(k);
  }
  r.measured = {{"checked", k_max - k_min + 1}, {"mismatches", mismatches}};
  r.expected = {{"mismatches", Json::array()}};
  r.pass = mismatches.empty();
}

void morse_frequency_check(const CheckDefinition& def, CheckResult& r) {
  auto len = int_param(def.params, "window");
  FactorWindow win(SequenceHandle::morse(Sidedness::one_sided), 0, len);
  r.measured = Json::object();
  r.expected = Json::object();
  r.pass = true;
  for (const auto& item : def.params.at("factors")) {
    std::string f = str_param(item, "factor");
    Rational target = rational_param(item, "target");
    Rational tol = parse_rational(def.tolerance.at(f).get<std::string>());
    Rational freq = factor_frequency(win, parse_word(f));
    Rational gap = abs(freq - target);
    r.measured[f] = {{"frequency", to_string(freq)}, {"approx", freq.get_d()}, {"deviation", gap.get_d()}};
    r.expected[f] = to_string(target);
    r.pass = r.pass && gap <= tol;
  }
}

// Factors with 2k < n <= 2k+2 weigh between k and k+2.
void morse_weight_bounds_check(const CheckDefinition& def, CheckResult& r) {
  auto len = int_param(def.params, "window");
  auto max_n = static_cast<std::size_t>(int_param(def.params, "max_length"));
  FactorWindow win(SequenceHandle::morse(Sidedness::one_sided), 0, len);
  std::size_t checked = 0;
  Json violations = Json::array();
  for (std::size_t n = 1; n <= max_n; ++n) {
    long k = (static_cast<long>(n) - 1) / 2;
    for (const auto& f : factors(win, n)) {
      ++checked;
      Rational wt = weight(f);
      if (wt < k || wt > k + 2) violations.push_back(to_string(f));
    }
  }
  r.measured = {{"factors_checked", checked}, {"violations", violations.size()}};
  if (!violations.empty()) r.measured["examples"] = violations;
  r.expected = {{"violations", 0}};
  r.pass = violations.empty();
}

// Each occurrence of the factor starts an alpha-heavy word running to the
// end of the window.
void morse_occurrence_heaviness_check(const CheckDefinition& def, CheckResult& r) {
  auto len = int_param(def.params, "window");
  Word f = parse_word(str_param(def.params, "factor"));
  auto alpha = alpha_param(def.params);
  Word x = morse_prefix(static_cast<std::size_t>(len));
  std::size_t occurrences = 0;
  std::size_t violations = 0;
  Json examples = Json::array();
  for (std::size_t i = 0; i + f.size() <= x.size(); ++i) {
    if (!std::equal(f.begin(), f.end(), x.begin() + static_cast<std::ptrdiff_t>(i))) continue;
    ++occurrences;
    if (is_alpha_heavy(subword(x, i, x.size()), alpha)) continue;
    if (++violations <= 10) examples.push_back(i);
  }
  r.measured = {{"occurrences", occurrences}, {"violations", violations}};
  if (violations > 0) r.measured["first_violations"] = examples;
  r.expected = {{"violations", 0}};
  r.pass = violations == 0 && occurrences > 0;
}

// --- Substitutions and rotations -----------------------------------------

void ternary_check(const CheckDefinition& def, CheckResult& r) {
  auto s = Substitution::parse(str_param(def.params, "rules"));
  Rational seed = rational_param(def.params, "seed");
  auto prefix_len = int_param(def.params, "prefix_length");
  auto horizon = int_param(def.params, "horizon");
  Rational mean = rational_param(def.params, "mean");
  Rational bound = parse_rational(def.tolerance.at("bound").get<std::string>());

  auto handle = SequenceHandle::substitution_fixed_point(s, seed);
  Word x = handle.window(0, std::max(prefix_len, horizon));
  std::string prefix = to_string(subword(x, 0, static_cast<std::size_t>(prefix_len)));

  Rational sum = 0;
  Rational worst = 0;
  for (std::int64_t n = 1; n <= horizon; ++n) {
    sum += x[static_cast<std::size_t>(n - 1)];
    Rational dev = abs(sum - mean * n);
    if (dev > worst) worst = dev;
  }
  r.measured = {{"prefix", prefix}, {"max_deviation", to_string(worst)}};
  r.expected = {{"prefix", str_param(def.params, "expected_prefix")}, {"max_deviation_at_most", to_string(bound)}};
  r.pass = prefix == r.expected["prefix"] && worst <= bound;
}

// |S_n - n alpha| < bound, decided exactly: S_n - bound < n alpha < S_n + bound.
void rotation_check(const CheckDefinition& def, CheckResult& r) {
  auto alpha = alpha_param(def.params);
  Rational x0 = rational_param(def.params, "x0");
  auto horizon = int_param(def.params, "horizon");
  Rational bound = parse_rational(def.tolerance.at("bound").get<std::string>());

  Word x = SequenceHandle::rotation_coding(alpha, x0).window(0, horizon);
  Rational sum = 0;
  double worst = 0;
  std::int64_t first_bad = -1;
  double a = alpha.approximate();
  for (std::int64_t n = 1; n <= horizon; ++n) {
    sum += x[static_cast<std::size_t>(n - 1)];
    Integer i(static_cast<long>(n));
    bool inside = alpha.compare_multiple(sum - bound, i) < 0 && alpha.compare_multiple(sum + bound, i) > 0;
    if (!inside && first_bad < 0) first_bad = n;
    worst = std::max(worst, std::fabs(sum.get_d() - static_cast<double>(n) * a));
  }
  r.measured = {{"max_deviation_approx", worst}};
  if (first_bad >= 0) r.measured["first_violation"] = first_bad;
  r.expected = {{"max_deviation_below", to_string(bound)}};
  r.pass = first_bad < 0;
}

// --- Sturmian windows ------------------------------------------------------

void alpha_heavy_uniqueness_check(const CheckDefinition& def, CheckResult& r) {
  auto up_to = static_cast<std::size_t>(int_param(def.params, "up_to"));
  auto handle = golden_style_handle(def.params);
  auto win = saturate(handle, up_to);
  auto report = alpha_heavy_census(win, alpha_param(def.params), up_to);
  auto heavy_counts = report.counts("alpha-heavy");
  auto reversal_counts = report.counts("reversal-heavy");
  r.measured = {{"window", {win.lo(), win.hi()}},
                {"saturated", true},
                {"alpha-heavy", counts_json(heavy_counts)},
                {"reversal-heavy", counts_json(reversal_counts)}};
  r.expected = {{"alpha-heavy", counts_json(std::vector<std::size_t>(up_to, 1))},
                {"reversal-heavy", counts_json(std::vector<std::size_t>(up_to, 1))}};
  r.pass = r.measured["alpha-heavy"] == r.expected["alpha-heavy"] &&
           r.measured["reversal-heavy"] == r.expected["reversal-heavy"];
}

void rational_counterexample_check(const CheckDefinition& def, CheckResult& r) {
  auto handle = SequenceHandle::bi_periodic(parse_word(str_param(def.params, "left_period")),
                                            parse_word(str_param(def.params, "core")),
                                            parse_word(str_param(def.params, "right_period")));
  auto half = int_param(def.params, "half_window");
  auto n = static_cast<std::size_t>(int_param(def.params, "length"));
  FactorWindow win(handle, -half, half);
  auto report = alpha_heavy_census(win, alpha_param(def.params), n);
  const auto& row = report.series_named("alpha-heavy").rows.at(n - 1);
  r.measured = {{"count", row.count}, {"witnesses", words_json(row.witnesses)}};
  r.expected = {{"witnesses", def.params.at("expected_witnesses")}};
  r.pass = r.measured["witnesses"] == r.expected["witnesses"];
}

void heavy_sturmian_uniqueness_check(const CheckDefinition& def, CheckResult& r) {
  auto max_n = int_param(def.params, "max_length");
  // One task per length; the merged failure list is in (n, m) order.
  std::vector<std::future<Json>> tasks;
  for (std::int64_t n = 1; n <= max_n; ++n) {
    tasks.push_back(std::async(std::launch::async, [n] {
      Json fails = Json::array();
      for (std::int64_t m = 0; m <= n; ++m) {
        auto found = brute_force_heavy_sturmian(m, n);
        Word built = heavy_sturmian_word(m, n);
        if (found.size() != 1 || found.front() != built) {
          fails.push_back({{"m", m}, {"n", n}, {"found", words_json(found)}, {"constructed", to_string(built)}});
        }
      }
      return fails;
    }));
  }
  Json failures = Json::array();
  for (auto& t : tasks) {
    for (auto& f : t.get()) failures.push_back(std::move(f));
  }
  auto types = (max_n + 1) * (max_n + 2) / 2 - 1;
  r.measured = {{"types_checked", types}, {"failures", failures}};
  r.expected = {{"failures", Json::array()}};
  r.pass = failures.empty();
}

std::vector<std::size_t> golden_heavy_counts(const CheckDefinition& def, std::size_t up_to, FactorWindow& win_out) {
  win_out = saturate(golden_style_handle(def.params), up_to);
  return heavy_factor_census(win_out, up_to).counts("heavy");
}

void heavy_census_exact_check(const CheckDefinition& def, CheckResult& r) {
  auto up_to = static_cast<std::size_t>(int_param(def.params, "up_to"));
  FactorWindow win = FactorWindow::of_word(Word{});
  auto counts = golden_heavy_counts(def, up_to, win);
  r.measured = {{"window", {win.lo(), win.hi()}}, {"counts", counts_json(counts)}};
  r.expected = {{"counts", def.params.at("expected_counts")}};
  r.pass = r.measured["counts"] == r.expected["counts"];
}

// Two heavy factors per length up to the longest constant run, at most one
// after that.
void heavy_census_bound_check(const CheckDefinition& def, CheckResult& r) {
  auto up_to = static_cast<std::size_t>(int_param(def.params, "up_to"));
  FactorWindow win = FactorWindow::of_word(Word{});
  auto counts = golden_heavy_counts(def, up_to, win);
  std::size_t longest = 0;
  for (std::size_t n = 1; n <= up_to; ++n) {
    bool has_run = false;
    for (const auto& f : factors(win, n)) {
      has_run = has_run || std::all_of(f.begin(), f.end(), [&](const Letter& a) { return a == f[0]; });
    }
    if (!has_run) break;
    longest = n;
  }
  bool ok = true;
  for (std::size_t n = 1; n <= up_to; ++n) ok = ok && (n <= longest ? counts[n - 1] == 2 : counts[n - 1] <= 1);
  r.measured = {{"longest_constant_run", longest}, {"counts", counts_json(counts)}};
  r.expected = {{"up_to_longest_run", 2}, {"beyond", "at most 1"}};
  r.pass = ok;
}

void sturmian_complexity_check(const CheckDefinition& def, CheckResult& r) {
  auto up_to = static_cast<std::size_t>(int_param(def.params, "up_to"));
  auto win = saturate(golden_style_handle(def.params), up_to);
  std::vector<std::size_t> got;
  std::vector<std::size_t> want;
  for (std::size_t n = 1; n <= up_to; ++n) {
    got.push_back(complexity(win, n));
    want.push_back(n + 1);
  }
  r.measured = {{"window", {win.lo(), win.hi()}}, {"complexity", counts_json(got)}};
  r.expected = {{"complexity", counts_json(want)}};
  r.pass = got == want;
}

// --- Exhaustive property suites -------------------------------------------

Json reversing_suite(const Json& p, bool& ok) {
  auto max_n = static_cast<std::size_t>(int_param(p, "max_length"));
  std::size_t applicable = 0, bad = 0;
  for (const auto& a : p.at("alphas")) {
    auto alpha = AlgebraicTarget::parse(a.get<std::string>());
    for (std::size_t n = 1; n <= max_n; ++n) {
      for (const auto& w : binary_words(n)) {
        if (!is_alpha_heavy(subword(w, 0, n - 1), alpha) || alpha.compare(avg_weight(w)) > 0) continue;
        ++applicable;
        // Both readings of the conclusion: transpose alpha-light, reversal (-alpha)-heavy.
        if (!check_reversing(w, alpha) || !is_alpha_light(transpose(w), alpha)) ++bad;
      }
    }
  }
  ok = ok && bad == 0;
  return {{"applicable_words", applicable}, {"counterexamples", bad}};
}

Json concatenation_suite(const Json& p, bool& ok) {
  auto max_n = static_cast<std::size_t>(int_param(p, "max_length"));
  std::vector<std::pair<Word, Rational>> heavy_words;
  for (std::size_t n = 1; n <= max_n; ++n) {
    for (auto& w : binary_words(n)) {
      if (is_heavy(w)) {
        Rational avg = avg_weight(w);
        heavy_words.emplace_back(std::move(w), avg);
      }
    }
  }
  std::size_t bad = 0;
  for (const auto& [a, wa] : heavy_words) {
    for (const auto& [b, wb] : heavy_words) {
      if (is_heavy(concat(a, b)) != (wa >= wb)) ++bad;
    }
  }
  ok = ok && bad == 0;
  return {{"heavy_words", heavy_words.size()}, {"pairs", heavy_words.size() * heavy_words.size()}, {"counterexamples", bad}};
}

Json factorization_suite(const Json& p, bool& ok) {
  auto max_n = static_cast<std::size_t>(int_param(p, "max_length"));
  std::size_t words = 0, bad = 0;
  for (std::size_t n = 1; n <= max_n; ++n) {
    for (const auto& w : binary_words(n)) {
      ++words;
      auto f = heavy_factorization(w);
      Word joined;
      bool good = true;
      for (std::size_t i = 0; i < f.blocks.size(); ++i) {
        good = good && !f.blocks[i].empty() && is_heavy(f.blocks[i]);
        if (i > 0) good = good && avg_weight(f.blocks[i - 1]) < avg_weight(f.blocks[i]);
        joined = concat(joined, f.blocks[i]);
      }
      if (!good || joined != w) ++bad;
    }
  }
  ok = ok && bad == 0;
  return {{"words", words}, {"counterexamples", bad}};
}

void property_suites_check(const CheckDefinition& def, CheckResult& r) {
  bool ok = true;
  auto rev = std::async(std::launch::async, [&] {
    bool local = true;
    auto j = reversing_suite(def.params.at("reversing"), local);
    return std::pair{j, local};
  });
  auto cat = std::async(std::launch::async, [&] {
    bool local = true;
    auto j = concatenation_suite(def.params.at("concatenation"), local);
    return std::pair{j, local};
  });
  auto fac = std::async(std::launch::async, [&] {
    bool local = true;
    auto j = factorization_suite(def.params.at("factorization"), local);
    return std::pair{j, local};
  });
  auto [rj, rok] = rev.get();
  auto [cj, cok] = cat.get();
  auto [fj, fok] = fac.get();
  ok = rok && cok && fok;
  r.measured = {{"reversing", rj}, {"concatenation", cj}, {"factorization", fj}};
  r.expected = {{"counterexamples", 0}};
  r.pass = ok;
}

const std::map<std::string, Predicate, std::less<>>& registry() {
  static const std::map<std::string, Predicate, std::less<>> table = {
      {"golden-alpha-heavy-uniqueness", alpha_heavy_uniqueness_check},
      {"golden-heavy-census", heavy_census_exact_check},
      {"golden-heavy-census-bound", heavy_census_bound_check},
      {"heavy-sturmian-uniqueness", heavy_sturmian_uniqueness_check},
      {"morse-balance", morse_balance_check},
      {"morse-eleven-heaviness", morse_occurrence_heaviness_check},
      {"morse-frequencies", morse_frequency_check},
      {"morse-prefix", morse_prefix_check},
      {"morse-weight-bounds", morse_weight_bounds_check},
      {"property-suites", property_suites_check},
      {"rational-counterexample", rational_counterexample_check},
      {"rotation-boundedness", rotation_check},
      {"sturmian-complexity", sturmian_complexity_check},
      {"ternary-substitution", ternary_check},
  };
  return table;
}

}  // namespace

const CheckDefinition& Campaign::find(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return c;
  }
  throw DomainError("unknown campaign check '" + std::string(name) + "'");
}

Campaign parse_campaign(std::string_view json_text) {
  Json doc;
  try {
    doc = Json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("campaign file is not valid JSON: ") + e.what());
  }
  Campaign out;
  try {
    out.version = doc.at("version").get<int>();
    std::set<std::string> seen;
    for (const auto& c : doc.at("checks")) {
      CheckDefinition def;
      def.name = c.at("name").get<std::string>();
      def.claim = c.at("claim").get<std::string>();
      def.params = c.value("params", Json::object());
      def.tolerance = c.value("tolerance", Json::object());
      if (!registry().contains(def.name)) throw DomainError("campaign check '" + def.name + "' has no implementation");
      if (!seen.insert(def.name).second) throw DomainError("campaign check '" + def.name + "' is defined twice");
      out.checks.push_back(std::move(def));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed campaign file: ") + e.what());
  }
  return out;
}

Campaign load_campaign(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open campaign file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_campaign(buf.str());
}

std::string default_campaign_path() { return HEAVY_DEFAULT_CAMPAIGN; }

std::vector<std::string> known_checks() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : registry()) out.push_back(name);
  return out;
}

CheckResult run_check(const CheckDefinition& def) {
  CheckResult r;
  r.check = def.name;
  r.claim = def.claim;
  r.params = def.params;
  r.tolerance = def.tolerance;
  auto it = registry().find(def.name);
  if (it == registry().end()) throw DomainError("unknown campaign check '" + def.name + "'");
  auto start = std::chrono::steady_clock::now();
  try {
    it->second(def, r);
  } catch (const std::exception& e) {
    r.measured = {{"error", e.what()}};
    r.pass = false;
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CheckResult> run_campaign(const Campaign& campaign, std::string_view selector) {
  std::vector<const CheckDefinition*> chosen;
  if (selector == "all") {
    for (const auto& c : campaign.checks) chosen.push_back(&c);
  } else {
    chosen.push_back(&campaign.find(selector));
  }
  std::vector<std::future<CheckResult>> tasks;
  for (const auto* def : chosen) tasks.push_back(std::async(std::launch::async, [def] { return run_check(*def); }));
  std::vector<CheckResult> out;
  for (auto& t : tasks) out.push_back(t.get());
  std::sort(out.begin(), out.end(), [](const CheckResult& a, const CheckResult& b) { return a.check < b.check; });
  return out;
}

Json to_json(const CheckResult& result) {
  return {{"check", result.check},       {"paper_ref", result.claim}, {"params", result.params},
          {"measured", result.measured}, {"expected", result.expected}, {"tolerance", result.tolerance},
          {"pass", result.pass}};
}

std::string results_to_json(const std::vector<CheckResult>& results) {
  Json arr = Json::array();
  bool all = true;
  for (const auto& r : results) {
    arr.push_back(to_json(r));
    all = all && r.pass;
  }
  Json doc = {{"pass", all}, {"results", arr}};
  return doc.dump(2) + "\n";
}

}  // namespace heavy
