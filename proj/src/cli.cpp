#include "heavy/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>

#include "heavy/campaign.hpp"
#include "heavy/errors.hpp"
#include "heavy/factors.hpp"
#include "heavy/heaviness.hpp"
#include "heavy/sequences.hpp"

namespace heavy {

namespace {

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;

struct SourceOptions {
  std::string kind;
  std::string sided = "one";
  std::string file;
  std::string seed;
  std::string alpha;
  std::string convention = "upper";
  std::string x0 = "0";
  std::string pattern;
};

void add_source_options(CLI::App* cmd, SourceOptions& s) {
  cmd->add_option("source", s.kind, "Sequence: morse, subst, mechanical, rotation or periodic")
      ->required()
      ->check(CLI::IsMember({"morse", "subst", "mechanical", "rotation", "periodic"}));
  cmd->add_option("--sided", s.sided, "Morse sidedness")->check(CLI::IsMember({"one", "two"}));
  cmd->add_option("--file", s.file, "Substitution rules, one 'letter -> image' per line");
  cmd->add_option("--seed", s.seed, "Seed letter of the substitution fixed point");
  cmd->add_option("--alpha", s.alpha, "Exact target, e.g. 3/5 or (-1+sqrt(5))/2");
  cmd->add_option("--convention", s.convention, "Mechanical convention")->check(CLI::IsMember({"upper", "lower"}));
  cmd->add_option("--x0", s.x0, "Rotation starting point (exact rational)");
  cmd->add_option("--pattern", s.pattern, "Periodic pattern: core(R)* or (L)*core(R)*");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void require(bool present, const std::string& what, const std::string& kind) {
  if (!present) throw ParseError(kind + " sequences need " + what);
}

SequenceHandle periodic_handle(const std::string& pattern) {
  static const std::regex form(R"(^(?:\(([^()]+)\)\*)?([^()]*)\(([^()]+)\)\*$)");
  std::smatch m;
  if (!std::regex_match(pattern, m, form)) {
    throw ParseError("periodic pattern '" + pattern + "' is not of the form core(R)* or (L)*core(R)*");
  }
  Word core = m[2].length() > 0 ? parse_word(m[2].str()) : Word{};
  Word right = parse_word(m[3].str());
  if (m[1].matched) return SequenceHandle::bi_periodic(parse_word(m[1].str()), core, right);
  return SequenceHandle::eventually_periodic(core, right);
}

SequenceHandle make_source(const SourceOptions& s) {
  if (s.kind == "morse") {
    return SequenceHandle::morse(s.sided == "two" ? Sidedness::two_sided : Sidedness::one_sided);
  }
  if (s.kind == "subst") {
    require(!s.file.empty(), "--file", s.kind);
    require(!s.seed.empty(), "--seed", s.kind);
    return SequenceHandle::substitution_fixed_point(Substitution::parse(read_file(s.file)), parse_rational(s.seed));
  }
  if (s.kind == "mechanical") {
    require(!s.alpha.empty(), "--alpha", s.kind);
    auto conv = s.convention == "lower" ? MechanicalConvention::lower : MechanicalConvention::upper;
    return SequenceHandle::mechanical(AlgebraicTarget::parse(s.alpha), conv);
  }
  if (s.kind == "rotation") {
    require(!s.alpha.empty(), "--alpha", s.kind);
    return SequenceHandle::rotation_coding(AlgebraicTarget::parse(s.alpha), parse_rational(s.x0));
  }
  require(!s.pattern.empty(), "--pattern", s.kind);
  return periodic_handle(s.pattern);
}

// Writes to the file when a path is given, otherwise to out.
void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw ParseError("cannot write " + path);
  f << text;
}

struct GenerateArgs {
  SourceOptions source;
  std::size_t length = 0;
  std::int64_t start = 0;
  std::string out;
};

int cmd_generate(const GenerateArgs& a, std::ostream& out) {
  auto handle = make_source(a.source);
  Word w = handle.window(a.start, a.start + static_cast<std::int64_t>(a.length));
  emit(to_string(w) + "\n", a.out, out);
  return kOk;
}

struct CheckArgs {
  std::string word;
  std::string file;
  std::string mode = "heavy";
  std::string alpha;
};

int cmd_check(const CheckArgs& a, std::ostream& out) {
  if (a.word.empty() == a.file.empty()) throw ParseError("give either a word or --file");
  std::string text = a.word;
  if (!a.file.empty()) {
    text = read_file(a.file);
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.pop_back();
  }
  Word w = parse_word(text);
  bool wants_alpha = a.mode == "alpha-heavy" || a.mode == "alpha-light";
  if (wants_alpha == a.alpha.empty()) {
    throw ParseError(wants_alpha ? "mode " + a.mode + " needs --alpha" : "mode " + a.mode + " takes no --alpha");
  }
  std::optional<std::size_t> bad;
  if (a.mode == "heavy") {
    bad = first_heavy_violation(w);
  } else if (a.mode == "light") {
    bad = first_light_violation(w);
  } else if (a.mode == "alpha-heavy") {
    bad = first_alpha_heavy_violation(w, AlgebraicTarget::parse(a.alpha));
  } else {
    bad = first_alpha_light_violation(w, AlgebraicTarget::parse(a.alpha));
  }
  if (!bad) {
    out << "true\n";
    return kOk;
  }
  out << "false at prefix " << *bad << "\n";
  return kFalse;
}

struct CensusArgs {
  SourceOptions source;
  std::string kind = "alpha-heavy";
  std::size_t up_to = 0;
  std::size_t window = 0;
  std::size_t max_window = std::size_t{1} << 22;
  std::string format = "json";
  std::string out;
};

int cmd_census(const CensusArgs& a, std::ostream& out) {
  auto handle = make_source(a.source);
  if (a.kind == "alpha-heavy" && a.source.alpha.empty()) throw ParseError("alpha-heavy census needs --alpha");
  // A fixed --window is reported as-is with its saturation status; without
  // one the window is doubled until it saturates.
  std::optional<FactorWindow> win;
  bool saturated = true;
  if (a.window > 0) {
    win.emplace(default_window(handle, a.window));
    saturated = is_saturated(handle, a.window, a.up_to);
  } else {
    win.emplace(saturate(handle, a.up_to, std::min<std::size_t>(256, a.max_window), a.max_window));
  }
  CensusReport report;
  if (a.kind == "alpha-heavy") {
    report = alpha_heavy_census(*win, AlgebraicTarget::parse(a.source.alpha), a.up_to);
  } else if (a.kind == "heavy") {
    report = heavy_factor_census(*win, a.up_to);
  } else if (a.kind == "special") {
    report = special_census(*win, a.up_to);
  } else {
    report = complexity_census(*win, a.up_to);
  }
  report.saturated = saturated;
  emit(a.format == "csv" ? to_csv(report) : to_json(report) + "\n", a.out, out);
  return kOk;
}

struct VerifyArgs {
  std::string campaign = "all";
  std::string config;
  std::string out;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  auto campaign = load_campaign(a.config.empty() ? default_campaign_path() : a.config);
  auto results = run_campaign(campaign, a.campaign);
  bool all = true;
  for (const auto& r : results) all = all && r.pass;
  std::string json = results_to_json(results);
  if (a.out.empty()) {
    out << json;
  } else {
    emit(json, a.out, out);
    for (const auto& r : results) out << (r.pass ? "PASS " : "FAIL ") << r.check << "\n";
  }
  return all ? kOk : kFalse;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Heavy words, Sturmian constructions and factor censuses"};
  app.name("heavy");
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "Print a window of a sequence");
  add_source_options(g, gen.source);
  g->add_option("--length", gen.length, "Number of letters")->required();
  g->add_option("--start", gen.start, "Index of the first letter");
  g->add_option("--out", gen.out, "Output path (default stdout)");

  CheckArgs chk;
  auto* c = app.add_subcommand("check", "Test a word for heaviness or lightness");
  c->add_option("word", chk.word, "Word, e.g. 1010 or 3/2,-1,0");
  c->add_option("--file", chk.file, "Read the word from a file");
  c->add_option("--mode", chk.mode, "Predicate")->check(CLI::IsMember({"heavy", "light", "alpha-heavy", "alpha-light"}));
  c->add_option("--alpha", chk.alpha, "Exact target for alpha modes");

  CensusArgs cen;
  auto* n = app.add_subcommand("census", "Count factors by length on a saturated window");
  add_source_options(n, cen.source);
  n->add_option("--kind", cen.kind, "Census kind")->check(CLI::IsMember({"alpha-heavy", "heavy", "special", "complexity"}));
  n->add_option("--up-to", cen.up_to, "Largest factor length")->required()->check(CLI::PositiveNumber);
  n->add_option("--window", cen.window, "Fixed window length instead of saturation");
  n->add_option("--max-window", cen.max_window, "Largest window saturation may try");
  n->add_option("--format", cen.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  n->add_option("--out", cen.out, "Output path (default stdout)");

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify", "Run verification checks");
  v->add_option("campaign", ver.campaign, "Check name or 'all'");
  v->add_option("--config", ver.config, "Campaign file");
  v->add_option("--out", ver.out, "Results path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (g->parsed()) return cmd_generate(gen, out);
    if (c->parsed()) return cmd_check(chk, out);
    if (n->parsed()) return cmd_census(cen, out);
    return cmd_verify(ver, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace heavy
