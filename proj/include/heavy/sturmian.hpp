#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "heavy/algebraic.hpp"
#include "heavy/word.hpp"

namespace heavy {

/// Lengths n_i of the maximal 1-runs of 1^{n_0}0 1^{n_1}0 ... 1^{n_k}0, each
/// equal to base or base + 1.
struct RunDecomposition {
  std::vector<std::size_t> runs;
  std::size_t base = 0;

  friend bool operator==(const RunDecomposition&, const RunDecomposition&) = default;
};

/// Throws NotDerivableError unless w is binary, ends in 0, every 0 is
/// preceded by a 1 and the run lengths take at most two adjacent values.
RunDecomposition run_decomposition(const Word& w);

/// Inverse of run_decomposition.
Word reconstruct(const RunDecomposition& d);

/// Derived word with letters n_i - base. Throws NotDerivableError.
Word desubstitute(const Word& w);

/// The unique heavy Sturmian (balanced) word with weight m and length n.
///
/// Built recursively: a non-coprime type splits into gcd(m, n) equal heavy
/// blocks; a coprime type with 2m > n is rebuilt from its 1-run derived word
/// of type (m mod (n - m), n - m); a type with 2m < n is the conjugate of the
/// transpose of the type (n - m, n) word. Throws DomainError unless
/// 0 <= m <= n and n >= 1.
Word heavy_sturmian_word(std::int64_t m, std::int64_t n);

/// Every binary word of weight m and length n that is both heavy and
/// balanced, in lexicographic order. Exhaustive enumeration, independent of
/// heavy_sturmian_word. Throws BudgetError for n > 24.
std::vector<Word> brute_force_heavy_sturmian(std::int64_t m, std::int64_t n);

/// Factors of the word itself of equal length differ in weight by at most
/// one. Throws DomainError on non-binary input.
bool is_balanced_word(const Word& w);

/// Length-n prefix of the unique alpha-heavy sequence in the orbit closure of
/// a Sturmian sequence of density alpha, i.e. the upper mechanical word.
/// Throws DomainError for rational alpha, alpha outside (0, 1), or n == 0.
Word unique_alpha_heavy_prefix(const AlgebraicTarget& alpha, std::size_t n);

}  // namespace heavy
