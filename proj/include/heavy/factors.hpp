#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "heavy/algebraic.hpp"
#include "heavy/sequences.hpp"
#include "heavy/word.hpp"

namespace heavy {

/// Materialized letters of a sequence on [lo, hi). Factor sets computed from
/// a window are subsets of the factor sets of the infinite sequence.
class FactorWindow {
 public:
  FactorWindow(SequenceHandle source, std::int64_t lo, std::int64_t hi);
  /// Window over a bare finite word, indexed from 0.
  static FactorWindow of_word(Word w, std::string description = "word");

  const Word& word() const noexcept { return word_; }
  std::size_t size() const noexcept { return word_.size(); }
  std::int64_t lo() const noexcept { return lo_; }
  std::int64_t hi() const noexcept { return hi_; }
  const std::optional<SequenceHandle>& source() const noexcept { return source_; }
  std::string describe() const;

  /// Distinct letters in increasing order, and the window as indices into it.
  const std::vector<Letter>& alphabet() const noexcept { return alphabet_; }
  const std::u32string& codes() const noexcept { return codes_; }

 private:
  FactorWindow(std::optional<SequenceHandle> source, std::string description, std::int64_t lo, Word w);
  void encode();

  std::optional<SequenceHandle> source_;
  std::string description_;
  std::int64_t lo_ = 0;
  std::int64_t hi_ = 0;
  Word word_;
  std::vector<Letter> alphabet_;
  std::u32string codes_;
};

/// Distinct length-n factors, ordered lexicographically by letter value.
/// Throws BoundsError unless 1 <= n <= |window|.
std::set<Word> factors(const FactorWindow& win, std::size_t n);

/// Number of distinct length-n factors.
std::size_t complexity(const FactorWindow& win, std::size_t n);

enum class Side { right, left };

/// Length-n factors A with two distinct letters b such that Ab (bA) is a
/// factor. Throws BoundsError unless n + 1 <= |window|.
std::set<Word> special_factors(const FactorWindow& win, std::size_t n, Side side);

/// Same-length factors differ in weight by at most one, for every length up
/// to up_to. Throws DomainError on non-binary windows.
bool is_balanced(const FactorWindow& win, std::size_t up_to);

/// Factor sets of every length up to up_to are closed under transpose.
/// Within a finite window a failure is definitive; success is evidence.
bool transpose_closed(const FactorWindow& win, std::size_t up_to);

struct CensusRow {
  std::size_t length = 0;
  std::size_t count = 0;
  std::vector<Word> witnesses;
};

struct CensusSeries {
  std::string name;
  std::vector<CensusRow> rows;
};

/// Per-length counts and witnesses, one series per predicate.
struct CensusReport {
  std::string kind;
  std::string source;
  std::optional<AlgebraicTarget> alpha;
  std::int64_t window_lo = 0;
  std::int64_t window_hi = 0;
  std::optional<bool> saturated;
  std::vector<CensusSeries> series;

  /// Throws std::out_of_range for unknown names.
  const CensusSeries& series_named(const std::string& name) const;
  /// Counts of a series, indexed by row.
  std::vector<std::size_t> counts(const std::string& name) const;
};

/// Series "alpha-heavy" (A is alpha-heavy) and "reversal-heavy" (rho(A) is
/// (-alpha)-heavy) for lengths 1..up_to.
CensusReport alpha_heavy_census(const FactorWindow& win, const AlgebraicTarget& alpha, std::size_t up_to);
/// Series "heavy": locally heavy factors for lengths 1..up_to.
CensusReport heavy_factor_census(const FactorWindow& win, std::size_t up_to);
/// Series "factors": all distinct factors, count = p(n).
CensusReport complexity_census(const FactorWindow& win, std::size_t up_to);
/// Series "right-special" and "left-special" for lengths 0..up_to.
CensusReport special_census(const FactorWindow& win, std::size_t up_to);

/// JSON object {kind, metadata, series: [{name, rows: [{length, count, witnesses}]}]}.
std::string to_json(const CensusReport& report);
/// Header "series,length,count,witnesses"; witnesses joined by '|'.
std::string to_csv(const CensusReport& report);

/// Overlapping occurrences of f divided by |window| - |f| + 1.
/// Throws BoundsError when |f| > |window|.
Rational factor_frequency(const FactorWindow& win, const Word& f);

/// Window of the given length: [0, len) for one-sided handles, centered
/// [-len/2, len - len/2) for two-sided ones.
FactorWindow default_window(const SequenceHandle& s, std::size_t length);

/// True when complexity counts for lengths 1..up_to agree with those of the
/// doubled default window.
bool is_saturated(const SequenceHandle& s, std::size_t length, std::size_t up_to);

/// Doubles a default window, starting at initial_length, until complexity
/// counts for all lengths <= up_to are unchanged across one doubling.
/// Throws BudgetError if that needs more than max_length letters.
FactorWindow saturate(const SequenceHandle& s, std::size_t up_to, std::size_t initial_length = 256,
                      std::size_t max_length = std::size_t{1} << 22);

}  // namespace heavy
