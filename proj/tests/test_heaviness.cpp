#include <doctest.h>

#include <random>

#include "heavy/errors.hpp"
#include "heavy/heaviness.hpp"
#include "oracles.hpp"

using heavy::AlgebraicTarget;
using heavy::Rational;
using heavy::Word;
using oracle::w;

namespace {

AlgebraicTarget frac(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return AlgebraicTarget(r);
}

// Quadratic oracle: smallest N whose suffix has all prefix averages >= p/q.
std::optional<std::size_t> brute_suffix_start(const std::vector<int>& x, long p, long q) {
  for (std::size_t n = 0; n < x.size(); ++n) {
    if (oracle::alpha_heavy(std::vector<int>(x.begin() + static_cast<long>(n), x.end()), p, q)) return n;
  }
  return std::nullopt;
}

std::optional<heavy::FactorLocation> brute_longest(const std::vector<int>& x, long p, long q) {
  std::optional<heavy::FactorLocation> best;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j <= x.size(); ++j) {
      std::vector<int> f(x.begin() + static_cast<long>(i), x.begin() + static_cast<long>(j));
      if (!oracle::alpha_heavy(f, p, q)) break;
      if (!best || j - i > best->length) best = heavy::FactorLocation{i, j - i};
    }
  }
  return best;
}

}  // namespace

TEST_SUITE("heaviness") {
  TEST_CASE("alpha-heavy and alpha-light examples") {
    CHECK(heavy::is_alpha_heavy(w("11"), frac(1, 2)));
    CHECK_FALSE(heavy::is_alpha_heavy(w("10101"), frac(3, 5)));
    CHECK(heavy::first_alpha_heavy_violation(w("10101"), frac(3, 5)) == 2u);
    CHECK(heavy::is_alpha_heavy(w("11010"), frac(3, 5)));
    CHECK(heavy::is_alpha_heavy(Word{}, frac(1, 2)));

    CHECK(heavy::is_alpha_light(w("00"), frac(1, 2)));
    CHECK(heavy::is_alpha_light(w("001"), frac(1, 2)));
    CHECK_FALSE(heavy::is_alpha_light(w("1"), frac(1, 2)));
  }

  TEST_CASE("local heaviness examples") {
    CHECK(heavy::is_heavy(w("1010")));
    CHECK_FALSE(heavy::is_heavy(w("101")));
    CHECK(heavy::first_heavy_violation(w("101")) == 2u);
    CHECK(heavy::is_heavy(w("110")));
    CHECK_THROWS_AS(heavy::is_heavy(Word{}), heavy::UndefinedAverageError);

    CHECK(heavy::is_light(w("001")));
    CHECK(heavy::is_light(w("0101")));
    CHECK_FALSE(heavy::is_light(w("10")));
    CHECK_THROWS_AS(heavy::is_light(Word{}), heavy::UndefinedAverageError);
  }

  TEST_CASE("heaviness with rational letters and irrational targets") {
    Word x{Rational(3, 2), Rational(-1, 3), 1};
    CHECK(heavy::is_alpha_heavy(x, frac(7, 12)));  // averages 3/2, 7/12, 13/18
    CHECK_FALSE(heavy::is_alpha_heavy(x, frac(2, 3)));
    auto golden = AlgebraicTarget::parse("(-1+sqrt(5))/2");
    CHECK(heavy::is_alpha_heavy(w("11011010"), golden));
    CHECK_FALSE(heavy::is_alpha_heavy(w("10110101"), golden));
  }

  TEST_CASE("reversing check") {
    CHECK(heavy::check_reversing(w("100"), frac(1, 2)));
    CHECK(heavy::check_reversing(w("10"), frac(1, 2)));
    CHECK(heavy::check_reversing(w("1100"), frac(1, 2)));
    CHECK(heavy::check_reversing(w("0"), frac(1, 2)));  // empty prefix is vacuously heavy
    CHECK_THROWS_AS(heavy::check_reversing(w("011"), frac(1, 2)), heavy::ContractError);
    CHECK_THROWS_AS(heavy::check_reversing(w("111"), frac(1, 2)), heavy::ContractError);
    CHECK_THROWS_AS(heavy::check_reversing(Word{}, frac(1, 2)), heavy::ContractError);
  }

  TEST_CASE("delta-heavy suffix start") {
    CHECK(heavy::delta_heavy_suffix_start(w("0011"), frac(1, 2)) == 2u);
    CHECK(heavy::delta_heavy_suffix_start(w("111"), frac(1, 2)) == 0u);
    CHECK_FALSE(heavy::delta_heavy_suffix_start(w("000"), frac(1, 2)));
    CHECK_FALSE(heavy::delta_heavy_suffix_start(Word{}, frac(1, 2)));
  }

  TEST_CASE("delta-heavy suffix start matches the quadratic scan") {
    for (unsigned n = 1; n <= 11; ++n) {
      for (const auto& s : oracle::binary_words(n)) {
        for (auto [p, q] : {std::pair{1L, 3L}, std::pair{1L, 2L}, std::pair{2L, 3L}}) {
          auto got = heavy::delta_heavy_suffix_start(w(s), frac(p, q));
          CHECK(got == brute_suffix_start(oracle::bits_of(s), p, q));
        }
      }
    }
  }

  TEST_CASE("longest alpha-heavy factor") {
    CHECK(heavy::longest_alpha_heavy_factor(w("00110"), frac(1, 2)) == heavy::FactorLocation{2, 3});
    CHECK(heavy::longest_alpha_heavy_factor(w("1111"), frac(1, 1)) == heavy::FactorLocation{0, 4});
    CHECK_FALSE(heavy::longest_alpha_heavy_factor(w("000"), frac(1, 2)));
    for (unsigned n = 1; n <= 10; ++n) {
      for (const auto& s : oracle::binary_words(n)) {
        for (auto [p, q] : {std::pair{1L, 3L}, std::pair{1L, 2L}, std::pair{3L, 5L}}) {
          CHECK(heavy::longest_alpha_heavy_factor(w(s), frac(p, q)) == brute_longest(oracle::bits_of(s), p, q));
        }
      }
    }
  }

  TEST_CASE("heavy factorization examples") {
    using V = std::vector<Word>;
    CHECK(heavy::heavy_factorization(w("0110")).blocks == V{w("0"), w("110")});
    CHECK(heavy::heavy_factorization(w("1010")).blocks == V{w("1010")});
    // "00" is itself heavy, so greedy-longest takes it as one block.
    CHECK(heavy::heavy_factorization(w("001")).blocks == V{w("00"), w("1")});
    CHECK_THROWS_AS(heavy::heavy_factorization(Word{}), heavy::UndefinedAverageError);
  }

  TEST_CASE("banach density profile") {
    auto p = heavy::banach_density_profile(w("1111"), 2);
    REQUIRE(p.size() == 2);
    CHECK(p[0].value == 1);
    CHECK(p[1].value == 1);

    Word morse = heavy::morse_prefix(1024);
    auto m2 = heavy::banach_density_profile(morse, 2);
    CHECK(m2[0].value == 1);
    CHECK(m2[1].value == 1);
    auto m4 = heavy::banach_density_profile(morse, 4);
    CHECK(m4[3].length == 4);
    CHECK(m4[3].value == Rational(3, 4));

    CHECK_THROWS_AS(heavy::banach_density_profile(w("11"), 0), heavy::BoundsError);
    CHECK_THROWS_AS(heavy::banach_density_profile(w("11"), 3), heavy::BoundsError);
  }

  TEST_CASE("partial sums") {
    auto one = heavy::SequenceHandle::morse(heavy::Sidedness::one_sided);
    auto sums = heavy::partial_sums(one, 0, 4);
    CHECK(sums == std::vector<Rational>{0, 0, 1, 2, 2});
    CHECK(heavy::partial_sums(one, 0, 0) == std::vector<Rational>{0});
    CHECK(heavy::partial_sums(one, 3, 4) == std::vector<Rational>{2, 2});
    CHECK_THROWS_AS(heavy::partial_sums(one, -1, 2), heavy::DomainError);

    // x_{-2} x_{-1} = 10, so S_{-1} = -x_{-1} = 0 and S_{-2} = -1.
    auto two = heavy::SequenceHandle::morse(heavy::Sidedness::two_sided);
    CHECK(heavy::partial_sums(two, -2, 0) == std::vector<Rational>{-1, 0, 0});
    // Same values through the reversal: S_n = w(rho(X_{n,0})) for n < 0.
    for (std::int64_t n = -40; n < 0; ++n) {
      CHECK(heavy::partial_sums(two, n, n).front() == heavy::weight(heavy::reversal(two.window(n, 0))));
    }
  }

  TEST_CASE("heavy set membership") {
    auto two = heavy::SequenceHandle::morse(heavy::Sidedness::two_sided);
    std::int64_t at = -1;
    for (std::int64_t k = 2; k < 4096 && at < 0; ++k) {
      if (heavy::to_string(two.window(k - 2, k + 2)) == "0011") at = k;
    }
    REQUIRE(at > 0);
    auto centered = two.shifted(at);
    CHECK(heavy::to_string(centered.window(-2, 2)) == "0011");
    CHECK(heavy::heavy_set_member(centered, -100, 100, frac(1, 2)));

    auto one = heavy::SequenceHandle::morse(heavy::Sidedness::one_sided);
    CHECK(heavy::heavy_set_member(one, 0, 0, frac(7, 3)));
    CHECK(heavy::heavy_set_member(two, 0, 0, AlgebraicTarget::parse("sqrt(2)")));
    std::int64_t zeros = -1;
    for (std::int64_t k = 0; zeros < 0; ++k) {
      if (heavy::to_string(one.window(k, k + 2)) == "00") zeros = k;
    }
    CHECK_FALSE(heavy::heavy_set_member(one.shifted(zeros), 0, 2, frac(1, 2)));
    CHECK_THROWS_AS(heavy::heavy_set_member(one, -1, 2, frac(1, 2)), heavy::DomainError);
    CHECK_THROWS_AS(heavy::heavy_set_member(one, 3, 2, frac(1, 2)), heavy::BoundsError);
  }

  TEST_CASE("prefix closure of alpha-heaviness (random sampling)") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> bit(0, 1);
    std::uniform_int_distribution<int> len(1, 40);
    for (int trial = 0; trial < 3000; ++trial) {
      std::vector<int> x(static_cast<std::size_t>(len(rng)));
      x[0] = 1;
      for (std::size_t i = 1; i < x.size(); ++i) x[i] = bit(rng);
      Word word = Word::from_bits(x);
      auto alpha = frac(1 + trial % 4, 5);
      if (!heavy::is_alpha_heavy(word, alpha)) continue;
      for (std::size_t j = 0; j <= word.size(); ++j) CHECK(heavy::is_alpha_heavy(heavy::subword(word, 0, j), alpha));
    }
  }

  TEST_CASE("local heaviness equals heaviness at the word's own average") {
    for (unsigned n = 1; n <= 10; ++n) {
      for (const auto& s : oracle::binary_words(n)) {
        Word x = w(s);
        bool heavy_word = heavy::is_heavy(x);
        CHECK(heavy_word == heavy::is_alpha_heavy(x, AlgebraicTarget(heavy::avg_weight(x))));
        CHECK(heavy_word == oracle::locally_heavy(oracle::bits_of(s)));
      }
    }
    CHECK(heavy::is_heavy(w("1010")));
    CHECK_FALSE(heavy::is_heavy(w("101")));
  }
}

TEST_SUITE("heaviness") {
  TEST_CASE("reversing principle holds whenever its hypotheses do") {
    for (unsigned n = 1; n <= 10; ++n) {
      for (const auto& s : oracle::binary_words(n)) {
        auto bits = oracle::bits_of(s);
        for (auto [p, q] : {std::pair{1L, 3L}, std::pair{1L, 2L}, std::pair{2L, 3L}}) {
          long total = 0;
          for (int b : bits) total += b;
          bool hyp = oracle::alpha_heavy(std::vector<int>(bits.begin(), bits.end() - 1), p, q) &&
                     total * q <= static_cast<long>(n) * p;
          if (!hyp) {
            CHECK_THROWS_AS(heavy::check_reversing(w(s), frac(p, q)), heavy::ContractError);
            continue;
          }
          // The transpose must be alpha-light: its prefix averages stay <= p/q.
          std::vector<int> t(bits.rbegin(), bits.rend());
          std::vector<int> neg;
          for (int b : t) neg.push_back(-b);
          CHECK(oracle::alpha_heavy(neg, -p, q));
          CHECK(heavy::check_reversing(w(s), frac(p, q)));
        }
      }
    }
  }

  TEST_CASE("concatenating heavy words") {
    std::vector<std::string> heavy_words;
    for (unsigned n = 1; n <= 7; ++n) {
      for (const auto& s : oracle::binary_words(n)) {
        if (oracle::locally_heavy(oracle::bits_of(s))) heavy_words.push_back(s);
      }
    }
    for (const auto& a : heavy_words) {
      for (const auto& b : heavy_words) {
        bool joined = heavy::is_heavy(w(a + b));
        bool averages = heavy::avg_weight(w(a)) >= heavy::avg_weight(w(b));
        CHECK(joined == averages);
      }
    }
  }

  TEST_CASE("heavy factorization round trip") {
    for (unsigned n = 1; n <= 12; ++n) {
      for (const auto& s : oracle::binary_words(n)) {
        auto f = heavy::heavy_factorization(w(s));
        std::string joined;
        for (std::size_t i = 0; i < f.blocks.size(); ++i) {
          const auto& b = f.blocks[i];
          joined += heavy::to_string(b);
          CHECK(oracle::locally_heavy(oracle::bits_of(heavy::to_string(b))));
          if (i > 0) CHECK(heavy::avg_weight(f.blocks[i - 1]) < heavy::avg_weight(b));
        }
        CHECK(joined == s);
        // Greedy: the first block is the longest heavy prefix.
        std::size_t longest = 0;
        for (std::size_t j = 1; j <= s.size(); ++j) {
          if (oracle::locally_heavy(oracle::bits_of(s.substr(0, j)))) longest = j;
        }
        CHECK(f.blocks.front().size() == longest);
      }
    }
  }
}
