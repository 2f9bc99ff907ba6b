#include "heavy/heaviness.hpp"

#include <algorithm>

#include "heavy/errors.hpp"

namespace heavy {
namespace {

// Letters over a common denominator, so the prefix scan works on integers.
struct ScaledWord {
  std::vector<Integer> numerators;
  Integer denominator = 1;

  explicit ScaledWord(const Word& w) {
    for (const auto& a : w) mpz_lcm(denominator.get_mpz_t(), denominator.get_mpz_t(), a.get_den_mpz_t());
    numerators.reserve(w.size());
    for (const auto& a : w) numerators.emplace_back(a.get_num() * (denominator / a.get_den()));
  }
};

// First prefix length i with sign(P_i - i alpha) on the wrong side.
// heavy: violation when P_i < i alpha; light: violation when P_i > i alpha.
std::optional<std::size_t> first_violation(const Word& w, const AlgebraicTarget& alpha, bool heavy) {
  ScaledWord scaled(w);
  Integer sum = 0;
  Integer index = 0;
  for (std::size_t i = 0; i < scaled.numerators.size(); ++i) {
    sum += scaled.numerators[i];
    ++index;
    int s = alpha.compare_multiple(sum, scaled.denominator, index);
    if (heavy ? s < 0 : s > 0) return i + 1;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::size_t> first_alpha_heavy_violation(const Word& w, const AlgebraicTarget& alpha) {
  return first_violation(w, alpha, true);
}

std::optional<std::size_t> first_alpha_light_violation(const Word& w, const AlgebraicTarget& alpha) {
  return first_violation(w, alpha, false);
}

bool is_alpha_heavy(const Word& w, const AlgebraicTarget& alpha) { return !first_violation(w, alpha, true); }

bool is_alpha_light(const Word& w, const AlgebraicTarget& alpha) { return !first_violation(w, alpha, false); }

std::optional<std::size_t> first_heavy_violation(const Word& w) {
  return first_violation(w, AlgebraicTarget(avg_weight(w)), true);
}

std::optional<std::size_t> first_light_violation(const Word& w) {
  return first_violation(w, AlgebraicTarget(avg_weight(w)), false);
}

bool is_heavy(const Word& w) { return !first_heavy_violation(w); }

bool is_light(const Word& w) { return !first_light_violation(w); }

bool check_reversing(const Word& w, const AlgebraicTarget& alpha) {
  if (w.empty()) throw ContractError("reversing check needs a nonempty word");
  if (!is_alpha_heavy(subword(w, 0, w.size() - 1), alpha)) {
    throw ContractError("reversing check: " + to_string(w) + " without its last letter is not " +
                        alpha.to_string() + "-heavy");
  }
  if (alpha.compare(avg_weight(w)) > 0) {
    throw ContractError("reversing check: average weight of " + to_string(w) + " exceeds " + alpha.to_string());
  }
  return is_alpha_heavy(reversal(w), -alpha);
}

std::optional<std::size_t> delta_heavy_suffix_start(const Word& w, const AlgebraicTarget& delta) {
  // If w_{N,k} is the first failing prefix of the suffix at N, every start in
  // (N, k) fails at k as well, so the next candidate is k itself.
  ScaledWord scaled(w);
  Integer run = 0;
  std::size_t start = 0;
  for (std::size_t k = 0; k < scaled.numerators.size(); ++k) {
    run += scaled.numerators[k];
    Integer len(static_cast<unsigned long>(k + 1 - start));
    if (delta.compare_multiple(run, scaled.denominator, len) < 0) {
      start = k + 1;
      run = 0;
    }
  }
  if (start == w.size()) return std::nullopt;
  return start;
}

std::optional<FactorLocation> longest_alpha_heavy_factor(const Word& w, const AlgebraicTarget& alpha) {
  // w_{i,j} is alpha-heavy iff D_k >= D_i for all i < k <= j, where
  // D_k = P_k - k alpha. So the longest factor from i ends just before the
  // next index k with D_k < D_i.
  const std::size_t n = w.size();
  ScaledWord scaled(w);
  std::vector<Integer> prefix(n + 1);
  for (std::size_t k = 0; k < n; ++k) prefix[k + 1] = prefix[k] + scaled.numerators[k];

  const auto strictly_below = [&](std::size_t k, std::size_t i) {
    Integer diff = prefix[k] - prefix[i];
    return alpha.compare_multiple(diff, scaled.denominator, Integer(static_cast<unsigned long>(k - i))) < 0;
  };

  std::vector<std::size_t> next_smaller(n + 1, n + 1);
  std::vector<std::size_t> stack;
  for (std::size_t i = n + 1; i-- > 0;) {
    while (!stack.empty() && !strictly_below(stack.back(), i)) stack.pop_back();
    if (!stack.empty()) next_smaller[i] = stack.back();
    stack.push_back(i);
  }

  std::optional<FactorLocation> best;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t end = next_smaller[i] == n + 1 ? n : next_smaller[i] - 1;
    std::size_t len = end - i;
    if (len > 0 && (!best || len > best->length)) best = FactorLocation{i, len};
  }
  return best;
}

HeavyFactorization heavy_factorization(const Word& w) {
  if (w.empty()) throw UndefinedAverageError("heavy factorization of the empty word is undefined");
  const auto prefix = prefix_sums(w);
  HeavyFactorization out;
  std::size_t pos = 0;
  while (pos < w.size()) {
    // w_{pos,pos+L} is heavy iff its average is <= every shorter prefix
    // average, i.e. it attains the running minimum.
    std::size_t best = 1;
    Rational running_min = prefix[pos + 1] - prefix[pos];
    for (std::size_t len = 2; pos + len <= w.size(); ++len) {
      Rational avg = (prefix[pos + len] - prefix[pos]) / static_cast<unsigned long>(len);
      if (avg <= running_min) {
        best = len;
        running_min = avg;
      }
    }
    out.blocks.push_back(subword(w, pos, pos + best));
    pos += best;
  }
  return out;
}

std::vector<DensityPoint> banach_density_profile(const Word& w, std::size_t max_len) {
  if (max_len < 1 || max_len > w.size()) {
    throw BoundsError("density profile length " + std::to_string(max_len) + " outside [1, " +
                      std::to_string(w.size()) + "]");
  }
  const auto prefix = prefix_sums(w);
  std::vector<DensityPoint> out;
  out.reserve(max_len);
  for (std::size_t len = 1; len <= max_len; ++len) {
    Rational best = prefix[len] - prefix[0];
    for (std::size_t i = 1; i + len <= w.size(); ++i) {
      Rational s = prefix[i + len] - prefix[i];
      if (s > best) best = s;
    }
    out.push_back(DensityPoint{len, best / static_cast<unsigned long>(len)});
  }
  return out;
}

std::vector<Rational> partial_sums(const SequenceHandle& s, std::int64_t from, std::int64_t to) {
  if (to < from) throw BoundsError("partial sums need from <= to");
  if (from < 0 && !s.two_sided()) {
    throw DomainError("negative time " + std::to_string(from) + " on a one-sided sequence");
  }
  const std::int64_t lo = std::min<std::int64_t>(from, 0);
  const std::int64_t hi = std::max<std::int64_t>(to, 0);
  // sums[t - lo] = S_t for t in [lo, hi]
  std::vector<Rational> sums(static_cast<std::size_t>(hi - lo + 1));
  const Word right = s.window(0, hi);
  for (std::int64_t t = 1; t <= hi; ++t) {
    sums[static_cast<std::size_t>(t - lo)] = sums[static_cast<std::size_t>(t - 1 - lo)] + right[static_cast<std::size_t>(t - 1)];
  }
  if (lo < 0) {
    const Word left = s.window(lo, 0);
    for (std::int64_t t = -1; t >= lo; --t) {
      sums[static_cast<std::size_t>(t - lo)] = sums[static_cast<std::size_t>(t + 1 - lo)] - left[static_cast<std::size_t>(t - lo)];
    }
  }
  return std::vector<Rational>(sums.begin() + (from - lo), sums.begin() + (to - lo) + 1);
}

bool heavy_set_member(const SequenceHandle& s, std::int64_t m, std::int64_t n, const AlgebraicTarget& target) {
  if (n < m) throw BoundsError("heavy set H(m, n) needs m <= n");
  const auto sums = partial_sums(s, m, n);
  for (std::int64_t i = m; i <= n; ++i) {
    if (target.compare_multiple(sums[static_cast<std::size_t>(i - m)], Integer(static_cast<long>(i))) < 0) return false;
  }
  return true;
}

}  // namespace heavy
