#include "heavy/factors.hpp"

#include <algorithm>
#include <stdexcept>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "heavy/errors.hpp"
#include "heavy/heaviness.hpp"

namespace heavy {
namespace {

using CodeView = std::u32string_view;

void require_length(const FactorWindow& win, std::size_t n, std::size_t lowest, const char* what) {
  if (n < lowest || n > win.size()) {
    throw BoundsError(std::string(what) + " length " + std::to_string(n) + " outside [" + std::to_string(lowest) +
                      ", " + std::to_string(win.size()) + "]");
  }
}

std::unordered_set<CodeView> distinct_views(const FactorWindow& win, std::size_t n) {
  const CodeView all(win.codes());
  std::unordered_set<CodeView> out;
  for (std::size_t i = 0; i + n <= all.size(); ++i) out.insert(all.substr(i, n));
  return out;
}

std::vector<CodeView> sorted_views(const FactorWindow& win, std::size_t n) {
  auto set = distinct_views(win, n);
  std::vector<CodeView> out(set.begin(), set.end());
  std::sort(out.begin(), out.end());
  return out;
}

Word decode(const FactorWindow& win, CodeView v) {
  std::vector<Letter> letters;
  letters.reserve(v.size());
  for (char32_t c : v) letters.push_back(win.alphabet()[c]);
  return Word(std::move(letters));
}

template <typename Predicate>
CensusRow census_row(const FactorWindow& win, std::size_t n, Predicate&& keep) {
  CensusRow row{n, 0, {}};
  for (CodeView v : sorted_views(win, n)) {
    Word w = decode(win, v);
    if (keep(w)) row.witnesses.push_back(std::move(w));
  }
  row.count = row.witnesses.size();
  return row;
}

CensusReport report_header(const FactorWindow& win, std::string kind) {
  CensusReport r;
  r.kind = std::move(kind);
  r.source = win.describe();
  r.window_lo = win.lo();
  r.window_hi = win.hi();
  return r;
}

void require_binary(const FactorWindow& win) {
  for (const auto& a : win.alphabet()) {
    if (a != 0 && a != 1) throw DomainError("balance is defined for binary windows only");
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

FactorWindow::FactorWindow(SequenceHandle source, std::int64_t lo, std::int64_t hi)
    : FactorWindow(source, source.describe(), lo, source.window(lo, hi)) {}

FactorWindow::FactorWindow(std::optional<SequenceHandle> source, std::string description, std::int64_t lo, Word w)
    : source_(std::move(source)),
      description_(std::move(description)),
      lo_(lo),
      hi_(lo + static_cast<std::int64_t>(w.size())),
      word_(std::move(w)) {
  encode();
}

FactorWindow FactorWindow::of_word(Word w, std::string description) {
  return FactorWindow(std::nullopt, std::move(description), 0, std::move(w));
}

std::string FactorWindow::describe() const { return description_; }

void FactorWindow::encode() {
  alphabet_ = word_.letters();
  std::sort(alphabet_.begin(), alphabet_.end());
  alphabet_.erase(std::unique(alphabet_.begin(), alphabet_.end()), alphabet_.end());
  codes_.reserve(word_.size());
  for (const auto& a : word_) {
    auto it = std::lower_bound(alphabet_.begin(), alphabet_.end(), a);
    codes_.push_back(static_cast<char32_t>(it - alphabet_.begin()));
  }
}

std::set<Word> factors(const FactorWindow& win, std::size_t n) {
  require_length(win, n, 1, "factor");
  std::set<Word> out;
  for (CodeView v : distinct_views(win, n)) out.insert(decode(win, v));
  return out;
}

std::size_t complexity(const FactorWindow& win, std::size_t n) {
  require_length(win, n, 1, "factor");
  return distinct_views(win, n).size();
}

std::set<Word> special_factors(const FactorWindow& win, std::size_t n, Side side) {
  if (n + 1 > win.size()) {
    throw BoundsError("special factors of length " + std::to_string(n) + " need a window longer than " +
                      std::to_string(n));
  }
  const CodeView all(win.codes());
  struct Extensions {
    char32_t first;
    bool several;
  };
  std::unordered_map<CodeView, Extensions> seen;
  for (std::size_t i = 0; i + n + 1 <= all.size(); ++i) {
    CodeView key = side == Side::right ? all.substr(i, n) : all.substr(i + 1, n);
    char32_t ext = side == Side::right ? all[i + n] : all[i];
    auto [it, inserted] = seen.try_emplace(key, Extensions{ext, false});
    if (!inserted && it->second.first != ext) it->second.several = true;
  }
  std::set<Word> out;
  for (const auto& [key, ext] : seen) {
    if (ext.several) out.insert(decode(win, key));
  }
  return out;
}

bool is_balanced(const FactorWindow& win, std::size_t up_to) {
  require_binary(win);
  require_length(win, up_to, 1, "balance");
  std::vector<std::int64_t> prefix(win.size() + 1, 0);
  for (std::size_t i = 0; i < win.size(); ++i) prefix[i + 1] = prefix[i] + (win.word()[i] == 1 ? 1 : 0);
  for (std::size_t n = 1; n <= up_to; ++n) {
    std::int64_t lo = prefix[n];
    std::int64_t hi = prefix[n];
    for (std::size_t i = 1; i + n <= win.size(); ++i) {
      std::int64_t s = prefix[i + n] - prefix[i];
      lo = std::min(lo, s);
      hi = std::max(hi, s);
    }
    if (hi - lo > 1) return false;
  }
  return true;
}

bool transpose_closed(const FactorWindow& win, std::size_t up_to) {
  require_length(win, up_to, 1, "transpose closure");
  for (std::size_t n = 1; n <= up_to; ++n) {
    auto set = distinct_views(win, n);
    for (CodeView v : set) {
      std::u32string reversed(v.rbegin(), v.rend());
      if (!set.contains(CodeView(reversed))) return false;
    }
  }
  return true;
}

const CensusSeries& CensusReport::series_named(const std::string& name) const {
  for (const auto& s : series) {
    if (s.name == name) return s;
  }
  throw std::out_of_range("census has no series named '" + name + "'");
}

std::vector<std::size_t> CensusReport::counts(const std::string& name) const {
  std::vector<std::size_t> out;
  for (const auto& row : series_named(name).rows) out.push_back(row.count);
  return out;
}

CensusReport alpha_heavy_census(const FactorWindow& win, const AlgebraicTarget& alpha, std::size_t up_to) {
  require_length(win, up_to, 1, "census");
  CensusReport r = report_header(win, "alpha-heavy");
  r.alpha = alpha;
  const AlgebraicTarget negated = -alpha;
  CensusSeries heavy{"alpha-heavy", {}};
  CensusSeries reversed{"reversal-heavy", {}};
  for (std::size_t n = 1; n <= up_to; ++n) {
    heavy.rows.push_back(census_row(win, n, [&](const Word& w) { return is_alpha_heavy(w, alpha); }));
    reversed.rows.push_back(census_row(win, n, [&](const Word& w) { return is_alpha_heavy(reversal(w), negated); }));
  }
  r.series.push_back(std::move(heavy));
  r.series.push_back(std::move(reversed));
  return r;
}

CensusReport heavy_factor_census(const FactorWindow& win, std::size_t up_to) {
  require_length(win, up_to, 1, "census");
  CensusReport r = report_header(win, "heavy");
  CensusSeries heavy{"heavy", {}};
  for (std::size_t n = 1; n <= up_to; ++n) {
    heavy.rows.push_back(census_row(win, n, [](const Word& w) { return is_heavy(w); }));
  }
  r.series.push_back(std::move(heavy));
  return r;
}

CensusReport complexity_census(const FactorWindow& win, std::size_t up_to) {
  require_length(win, up_to, 1, "census");
  CensusReport r = report_header(win, "complexity");
  CensusSeries all{"factors", {}};
  for (std::size_t n = 1; n <= up_to; ++n) {
    all.rows.push_back(census_row(win, n, [](const Word&) { return true; }));
  }
  r.series.push_back(std::move(all));
  return r;
}

CensusReport special_census(const FactorWindow& win, std::size_t up_to) {
  if (up_to + 1 > win.size()) throw BoundsError("special census needs a window longer than up_to");
  CensusReport r = report_header(win, "special");
  for (Side side : {Side::right, Side::left}) {
    CensusSeries s{side == Side::right ? "right-special" : "left-special", {}};
    for (std::size_t n = 0; n <= up_to; ++n) {
      auto found = special_factors(win, n, side);
      s.rows.push_back(CensusRow{n, found.size(), std::vector<Word>(found.begin(), found.end())});
    }
    r.series.push_back(std::move(s));
  }
  return r;
}

std::string to_json(const CensusReport& report) {
  nlohmann::ordered_json j;
  j["kind"] = report.kind;
  nlohmann::ordered_json meta;
  meta["source"] = report.source;
  meta["alpha"] = report.alpha ? nlohmann::ordered_json(report.alpha->to_string()) : nlohmann::ordered_json(nullptr);
  meta["window"] = {report.window_lo, report.window_hi};
  meta["saturated"] = report.saturated ? nlohmann::ordered_json(*report.saturated) : nlohmann::ordered_json(nullptr);
  j["metadata"] = std::move(meta);
  j["series"] = nlohmann::ordered_json::array();
  for (const auto& s : report.series) {
    nlohmann::ordered_json js;
    js["name"] = s.name;
    js["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : s.rows) {
      nlohmann::ordered_json jr;
      jr["length"] = row.length;
      jr["count"] = row.count;
      jr["witnesses"] = nlohmann::ordered_json::array();
      for (const auto& w : row.witnesses) jr["witnesses"].push_back(to_string(w));
      js["rows"].push_back(std::move(jr));
    }
    j["series"].push_back(std::move(js));
  }
  return j.dump(2) + "\n";
}

std::string to_csv(const CensusReport& report) {
  std::string out = "series,length,count,witnesses\n";
  for (const auto& s : report.series) {
    for (const auto& row : s.rows) {
      std::string joined;
      for (std::size_t i = 0; i < row.witnesses.size(); ++i) {
        if (i > 0) joined += '|';
        joined += to_string(row.witnesses[i]);
      }
      out += s.name + "," + std::to_string(row.length) + "," + std::to_string(row.count) + "," + csv_field(joined) +
             "\n";
    }
  }
  return out;
}

Rational factor_frequency(const FactorWindow& win, const Word& f) {
  if (f.size() > win.size()) {
    throw BoundsError("factor of length " + std::to_string(f.size()) + " is longer than the window");
  }
  const Rational positions(static_cast<unsigned long>(win.size() - f.size() + 1));
  std::u32string needle;
  for (const auto& a : f) {
    auto it = std::lower_bound(win.alphabet().begin(), win.alphabet().end(), a);
    if (it == win.alphabet().end() || *it != a) return Rational(0);
    needle.push_back(static_cast<char32_t>(it - win.alphabet().begin()));
  }
  const CodeView hay(win.codes());
  unsigned long count = 0;
  for (std::size_t pos = hay.find(needle); pos != CodeView::npos; pos = hay.find(needle, pos + 1)) {
    ++count;
    if (needle.empty() && pos == hay.size()) break;
  }
  Rational freq = Rational(count) / positions;
  return freq;
}

FactorWindow default_window(const SequenceHandle& s, std::size_t length) {
  const auto len = static_cast<std::int64_t>(length);
  if (s.two_sided()) return FactorWindow(s, -len / 2, len - len / 2);
  return FactorWindow(s, 0, len);
}

namespace {

std::vector<std::size_t> complexity_profile(const FactorWindow& win, std::size_t up_to) {
  std::vector<std::size_t> out;
  for (std::size_t n = 1; n <= up_to; ++n) out.push_back(n <= win.size() ? complexity(win, n) : 0);
  return out;
}

}  // namespace

bool is_saturated(const SequenceHandle& s, std::size_t length, std::size_t up_to) {
  return complexity_profile(default_window(s, length), up_to) ==
         complexity_profile(default_window(s, 2 * length), up_to);
}

FactorWindow saturate(const SequenceHandle& s, std::size_t up_to, std::size_t initial_length,
                      std::size_t max_length) {
  std::size_t length = std::max<std::size_t>({initial_length, up_to + 1, 1});
  if (2 * length > max_length) throw BudgetError("saturation window exceeds the budget");
  FactorWindow current = default_window(s, length);
  auto profile = complexity_profile(current, up_to);
  for (;;) {
    if (2 * length > max_length) {
      throw BudgetError("factor counts up to length " + std::to_string(up_to) + " did not stabilise within " +
                        std::to_string(max_length) + " letters");
    }
    FactorWindow doubled = default_window(s, 2 * length);
    auto next = complexity_profile(doubled, up_to);
    if (next == profile) return doubled;
    length *= 2;
    current = std::move(doubled);
    profile = std::move(next);
  }
}

}  // namespace heavy
