#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "heavy/rational.hpp"

namespace heavy {

using Letter = Rational;

/// Finite word over an alphabet of exact rationals.
///
/// Words are immutable values; every operator returns a new word. Indices are
/// zero-based and half-open ranges follow the A_{i,j} = a_i ... a_{j-1}
/// convention, so `subword(w, i, i)` is the empty word.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}

  /// Binary word from 0/1 flags.
  static Word from_bits(std::span<const int> bits);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }

  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  /// True when every letter is 0 or 1.
  bool is_binary() const;

  friend bool operator==(const Word&, const Word&) = default;
  /// Lexicographic by letter value, shorter prefix first.
  friend bool operator<(const Word& a, const Word& b) { return a.letters_ < b.letters_; }

 private:
  std::vector<Letter> letters_;
};

/// Weight and length of a word; for binary words 0 <= weight <= length.
struct WordType {
  Rational weight;
  std::size_t length = 0;

  friend bool operator==(const WordType&, const WordType&) = default;
};

WordType type_of(const Word& w);

Rational weight(const Word& w);

/// weight / length. Throws UndefinedAverageError on the empty word.
Rational avg_weight(const Word& w);

/// Letters i..j-1. Throws BoundsError unless 0 <= i <= j <= |w|.
Word subword(const Word& w, std::size_t i, std::size_t j);

Word transpose(const Word& w);

/// 0 <-> 1 swap. Throws DomainError on any non-binary letter.
Word conjugate(const Word& w);

/// Negated transpose: rho(A)_i = -a_{n-1-i}.
Word reversal(const Word& w);

Word concat(const Word& a, const Word& b);

/// Exact prefix sums P_0 = 0, P_k = a_0 + ... + a_{k-1}; size |w| + 1.
std::vector<Rational> prefix_sums(const Word& w);

/// Digit string when every letter is a single digit 0-9, otherwise letter
/// tokens joined by commas. A one-letter word whose token is not a single
/// digit gets a trailing comma so that it does not read back as digits.
std::string to_string(const Word& w);

/// Inverse of to_string. Throws ParseError.
Word parse_word(std::string_view text);

std::size_t hash_value(const Word& w) noexcept;

}  // namespace heavy

template <>
struct std::hash<heavy::Word> {
  std::size_t operator()(const heavy::Word& w) const noexcept { return heavy::hash_value(w); }
};
