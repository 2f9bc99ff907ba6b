#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "heavy/algebraic.hpp"
#include "heavy/word.hpp"

namespace heavy {

enum class Sidedness { one_sided, two_sided };
enum class MechanicalConvention { lower, upper };

/// k x k letter-count matrix; entry (i, j) counts alphabet[j] in the image of alphabet[i].
using IncidenceMatrix = std::vector<std::vector<std::int64_t>>;

/// Substitution over a finite alphabet of exact letters.
class Substitution {
 public:
  /// Rules in alphabet order. Every image must be nonempty and use only
  /// letters of the alphabet; letters must be distinct. Throws DomainError.
  explicit Substitution(std::vector<std::pair<Letter, Word>> rules);

  /// One rule per line, "letter -> image" (e.g. "2 -> 210"). Blank lines and
  /// lines starting with '#' are ignored. Throws ParseError or DomainError.
  static Substitution parse(std::string_view text);

  /// 0 -> 01, 1 -> 10.
  static Substitution morse();

  const std::vector<Letter>& alphabet() const noexcept { return alphabet_; }
  std::optional<std::size_t> index_of(const Letter& a) const;
  /// Throws DomainError for letters outside the alphabet.
  const Word& image(const Letter& a) const;

  const std::vector<std::uint32_t>& coded_image(std::size_t letter_index) const {
    return coded_images_[letter_index];
  }

  std::string to_string() const;

 private:
  std::vector<Letter> alphabet_;
  std::vector<Word> images_;
  std::vector<std::vector<std::uint32_t>> coded_images_;
};

namespace detail {
class SequenceSource;
}

/// Immutable descriptor of a one- or two-sided infinite sequence with random
/// access. Copies share the underlying generator.
class SequenceHandle {
 public:
  enum class Kind {
    morse_one_sided,
    morse_two_sided,
    substitution_fixed_point,
    mechanical,
    rotation_coding,
    eventually_periodic,
    shifted,
  };

  /// Two-sided Morse is M^T M: letter i < 0 equals M_{-i-1}.
  static SequenceHandle morse(Sidedness sided);
  /// Throws DomainError / NotAFixedPointError as fixed_point_prefix does.
  static SequenceHandle substitution_fixed_point(Substitution s, Letter seed);
  /// Two-sided. Letters 0..n-1 reproduce mechanical_word(alpha, n, convention).
  static SequenceHandle mechanical(AlgebraicTarget alpha, MechanicalConvention convention);
  /// Two-sided coding of x -> x + alpha mod 1 by [0, alpha).
  static SequenceHandle rotation_coding(AlgebraicTarget alpha, Rational x0);
  /// One-sided: preperiod then period repeated forever.
  static SequenceHandle eventually_periodic(Word preperiod, Word period);
  /// Two-sided: ...LLL core RRR..., with the core starting at index 0.
  static SequenceHandle bi_periodic(Word left_period, Word core, Word right_period);

  /// Handle whose letter i is this handle's letter i + k. Shifts that would
  /// reach before index 0 of a one-sided sequence throw DomainError.
  SequenceHandle shifted(std::int64_t k) const;

  Kind kind() const noexcept;
  Sidedness sidedness() const noexcept;
  bool two_sided() const noexcept { return sidedness() == Sidedness::two_sided; }

  /// Throws DomainError for negative i on a one-sided handle.
  Letter letter_at(std::int64_t i) const;
  /// Letters on [lo, hi).
  Word window(std::int64_t lo, std::int64_t hi) const;

  std::string describe() const;

 private:
  explicit SequenceHandle(std::shared_ptr<const detail::SequenceSource> source) : source_(std::move(source)) {}
  std::shared_ptr<const detail::SequenceSource> source_;
};

/// Parity of popcount(i) for i >= 0; M_{-i-1} for i < 0 on two-sided.
Letter morse_letter(std::int64_t i, Sidedness sided);
/// First n letters of M.
Word morse_prefix(std::size_t n);

Word substitution_apply(const Substitution& s, const Word& w);
IncidenceMatrix substitution_matrix(const Substitution& s);
/// Some power of the matrix is strictly positive; checked up to the
/// Wielandt bound (k-1)^2 + 1. Throws DomainError on non-square input.
bool is_primitive(const IncidenceMatrix& m);

/// Smallest N <= |alphabet| with Sigma^N(seed) = seed u, u nonempty.
/// Throws NotAFixedPointError when no such N exists.
std::size_t fixed_point_period(const Substitution& s, const Letter& seed);
/// First n letters of the periodic point lim Sigma^{kN}(seed).
Word fixed_point_prefix(const Substitution& s, const Letter& seed, std::size_t n);

/// lower: a_i = floor(i a) - floor((i-1) a), i = 0..n-1.
/// upper: c_i = ceil(i a) - ceil((i-1) a), i = 1..n (always alpha-heavy).
/// Throws DomainError unless 0 <= alpha <= 1.
Word mechanical_word(const AlgebraicTarget& alpha, std::size_t n, MechanicalConvention convention);

/// Letter i is 1 iff frac(x0 + i alpha) lies in [0, alpha).
/// Throws DomainError unless 0 <= alpha < 1.
Word rotation_coding(const AlgebraicTarget& alpha, const Rational& x0, std::size_t n);

Integer floor_multiple(const AlgebraicTarget& alpha, const Integer& i);

}  // namespace heavy
