#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "heavy/algebraic.hpp"
#include "heavy/sequences.hpp"
#include "heavy/word.hpp"

namespace heavy {

// Prefix predicates. A word is alpha-heavy (alpha-light) when every nonempty
// prefix has average weight >= alpha (<= alpha); equality counts. The empty
// word satisfies both vacuously.

bool is_alpha_heavy(const Word& w, const AlgebraicTarget& alpha);
bool is_alpha_light(const Word& w, const AlgebraicTarget& alpha);

/// Length of the shortest prefix violating alpha-heaviness, if any.
std::optional<std::size_t> first_alpha_heavy_violation(const Word& w, const AlgebraicTarget& alpha);
std::optional<std::size_t> first_alpha_light_violation(const Word& w, const AlgebraicTarget& alpha);

/// Locally heavy: alpha-heavy for alpha = avg_weight(w). Equivalently every
/// split has avg(w_{0,i}) >= avg(w_{i,n}). Throws UndefinedAverageError on
/// the empty word.
bool is_heavy(const Word& w);
/// Locally light (Lyndon-type). Throws UndefinedAverageError on the empty word.
bool is_light(const Word& w);

std::optional<std::size_t> first_heavy_violation(const Word& w);
std::optional<std::size_t> first_light_violation(const Word& w);

/// Reversing check: given |w| >= 1, w without its last letter alpha-heavy and
/// avg(w) <= alpha, reports whether reversal(w) is (-alpha)-heavy. This is
/// always expected to hold. Throws ContractError when the hypotheses fail.
bool check_reversing(const Word& w, const AlgebraicTarget& alpha);

/// Smallest N such that w_{N,|w|} is delta-heavy, found by jumping past each
/// failing prefix. Returns nullopt when no nonempty suffix qualifies.
std::optional<std::size_t> delta_heavy_suffix_start(const Word& w, const AlgebraicTarget& delta);

struct FactorLocation {
  std::size_t index = 0;
  std::size_t length = 0;

  friend bool operator==(const FactorLocation&, const FactorLocation&) = default;
};

/// Longest alpha-heavy factor, leftmost on ties; nullopt when no letter
/// reaches alpha. Linear number of exact comparisons (next-smaller scan over
/// P_k - k alpha).
std::optional<FactorLocation> longest_alpha_heavy_factor(const Word& w, const AlgebraicTarget& alpha);

/// Greedy factorization into longest heavy prefixes. Block averages strictly
/// increase from left to right. (The Lyndon-dual of Duval's factorization,
/// but computed by the greedy rule, not lexicographically.)
struct HeavyFactorization {
  std::vector<Word> blocks;
};

/// Throws UndefinedAverageError on the empty word.
HeavyFactorization heavy_factorization(const Word& w);

struct DensityPoint {
  std::size_t length = 0;
  Rational value;
};

/// For each length 1..max_len, the largest average weight over factors of
/// that length. Throws BoundsError unless 1 <= max_len <= |w|.
std::vector<DensityPoint> banach_density_profile(const Word& w, std::size_t max_len);

/// S_n for n in [from, to], with S_0 = 0, S_{n+1} = S_n + x_n, so that
/// S_n = -(x_n + ... + x_{-1}) for n < 0. Throws DomainError when from < 0
/// on a one-sided handle and BoundsError when to < from.
std::vector<Rational> partial_sums(const SequenceHandle& s, std::int64_t from, std::int64_t to);

/// S_i >= i * target for every m <= i <= n.
bool heavy_set_member(const SequenceHandle& s, std::int64_t m, std::int64_t n, const AlgebraicTarget& target);

}  // namespace heavy
