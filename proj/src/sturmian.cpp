#include "heavy/sturmian.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "heavy/errors.hpp"
#include "heavy/heaviness.hpp"
#include "heavy/sequences.hpp"

namespace heavy {
namespace {

Word constant_word(int letter, std::size_t n) { return Word(std::vector<Letter>(n, Letter(letter))); }

void require_type(std::int64_t m, std::int64_t n) {
  if (n < 1 || m < 0 || m > n) {
    throw DomainError("no binary word of weight " + std::to_string(m) + " and length " + std::to_string(n));
  }
}

}  // namespace

RunDecomposition run_decomposition(const Word& w) {
  if (!w.is_binary()) throw NotDerivableError("run decomposition needs a binary word");
  if (w.empty() || w[w.size() - 1] != 0) throw NotDerivableError("word " + to_string(w) + " does not end in 0");
  RunDecomposition d;
  std::size_t run = 0;
  for (const auto& a : w) {
    if (a == 1) {
      ++run;
      continue;
    }
    if (run == 0) {
      throw NotDerivableError("word " + to_string(w) + " has a run of zeros; use the 0-run mirror");
    }
    d.runs.push_back(run);
    run = 0;
  }
  auto [lo, hi] = std::minmax_element(d.runs.begin(), d.runs.end());
  if (*hi - *lo > 1) {
    throw NotDerivableError("1-runs of " + to_string(w) + " take values further apart than N, N+1");
  }
  d.base = *lo;
  return d;
}

Word reconstruct(const RunDecomposition& d) {
  std::vector<Letter> letters;
  for (auto run : d.runs) {
    letters.insert(letters.end(), run, Letter(1));
    letters.emplace_back(0);
  }
  return Word(std::move(letters));
}

Word desubstitute(const Word& w) {
  RunDecomposition d = run_decomposition(w);
  std::vector<Letter> letters;
  letters.reserve(d.runs.size());
  for (auto run : d.runs) letters.emplace_back(static_cast<unsigned long>(run - d.base));
  return Word(std::move(letters));
}

Word heavy_sturmian_word(std::int64_t m, std::int64_t n) {
  require_type(m, n);
  if (m == 0) return constant_word(0, static_cast<std::size_t>(n));
  if (m == n) return constant_word(1, static_cast<std::size_t>(n));

  const std::int64_t g = std::gcd(m, n);
  if (g > 1) {
    const Word block = heavy_sturmian_word(m / g, n / g);
    Word out;
    for (std::int64_t i = 0; i < g; ++i) out = concat(out, block);
    return out;
  }

  if (2 * m < n) return conjugate(transpose(heavy_sturmian_word(n - m, n)));

  // One 0 closes each 1-run; the runs are N or N+1 long and their excess
  // over N spells the derived word.
  const std::int64_t zeros = n - m;
  const std::int64_t base = m / zeros;
  const Word derived = heavy_sturmian_word(m % zeros, zeros);
  RunDecomposition d;
  d.base = static_cast<std::size_t>(base);
  for (const auto& b : derived) d.runs.push_back(static_cast<std::size_t>(base + b.get_num().get_si()));
  return reconstruct(d);
}

bool is_balanced_word(const Word& w) {
  if (!w.is_binary()) throw DomainError("balance is defined for binary words only");
  const std::size_t n = w.size();
  std::vector<std::int64_t> prefix(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + (w[i] == 1 ? 1 : 0);
  for (std::size_t len = 1; len < n; ++len) {
    std::int64_t lo = prefix[len];
    std::int64_t hi = prefix[len];
    for (std::size_t i = 1; i + len <= n; ++i) {
      lo = std::min(lo, prefix[i + len] - prefix[i]);
      hi = std::max(hi, prefix[i + len] - prefix[i]);
    }
    if (hi - lo > 1) return false;
  }
  return true;
}

std::vector<Word> brute_force_heavy_sturmian(std::int64_t m, std::int64_t n) {
  require_type(m, n);
  if (n > 24) throw BudgetError("enumeration of length " + std::to_string(n) + " words exceeds the 2^24 budget");
  const auto length = static_cast<unsigned>(n);
  const auto to_word = [length](std::uint32_t mask) {
    std::vector<Letter> letters;
    letters.reserve(length);
    // Most significant bit first, so increasing masks are lexicographic.
    for (unsigned i = 0; i < length; ++i) letters.emplace_back(static_cast<int>((mask >> (length - 1 - i)) & 1u));
    return Word(std::move(letters));
  };

  std::vector<Word> out;
  const std::uint32_t limit = std::uint32_t{1} << length;
  std::uint32_t mask = m == 0 ? 0 : (std::uint32_t{1} << static_cast<unsigned>(m)) - 1;
  while (mask < limit) {
    Word w = to_word(mask);
    if (is_heavy(w) && is_balanced_word(w)) out.push_back(std::move(w));
    if (mask == 0) break;
    // Next mask with the same popcount.
    const std::uint32_t lowest = mask & (~mask + 1);
    const std::uint32_t ripple = mask + lowest;
    mask = (((ripple ^ mask) >> 2) / lowest) | ripple;
    if (ripple == 0) break;
  }
  return out;
}

Word unique_alpha_heavy_prefix(const AlgebraicTarget& alpha, std::size_t n) {
  if (alpha.is_rational()) {
    throw DomainError("the alpha-heavy limit sequence is unique only for irrational alpha; got " + alpha.to_string());
  }
  if (alpha.compare(Rational(0)) >= 0 || alpha.compare(Rational(1)) <= 0) {
    throw DomainError("alpha = " + alpha.to_string() + " must lie in (0, 1)");
  }
  if (n == 0) throw DomainError("prefix length must be at least 1");
  return mechanical_word(alpha, n, MechanicalConvention::upper);
}

}  // namespace heavy
