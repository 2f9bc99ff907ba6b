#include <doctest.h>

#include <bit>
#include <cmath>

#include "heavy/errors.hpp"
#include "heavy/sequences.hpp"
#include "oracles.hpp"

using heavy::AlgebraicTarget;
using heavy::MechanicalConvention;
using heavy::Rational;
using heavy::SequenceHandle;
using heavy::Sidedness;
using heavy::Substitution;
using heavy::Word;
using oracle::w;

namespace {

Substitution ternary() { return Substitution::parse("# three-letter example\n0 -> 120\n1 -> 201\n2 -> 210\n"); }

AlgebraicTarget golden() { return AlgebraicTarget::parse("(-1+sqrt(5))/2"); }

}  // namespace

TEST_SUITE("sequences") {
  TEST_CASE("morse letters") {
    CHECK(heavy::morse_letter(0, Sidedness::one_sided) == 0);
    CHECK(heavy::morse_letter(3, Sidedness::one_sided) == 0);
    CHECK(heavy::morse_letter(-1, Sidedness::two_sided) == 0);
    CHECK(heavy::morse_letter(-2, Sidedness::two_sided) == 1);
    CHECK_THROWS_AS(heavy::morse_letter(-1, Sidedness::one_sided), heavy::DomainError);
  }

  TEST_CASE("morse prefixes") {
    CHECK(heavy::to_string(heavy::morse_prefix(4)) == "0110");
    CHECK(heavy::to_string(heavy::morse_prefix(16)) == "0110100110010110");
    CHECK(heavy::morse_prefix(0).empty());
  }

  TEST_CASE("morse doubling and popcount agree") {
    Word m = heavy::morse_prefix(1);
    for (int k = 0; k <= 16; ++k) {
      Word next = heavy::morse_prefix(std::size_t{1} << (k + 1));
      CHECK(next == heavy::concat(m, heavy::conjugate(m)));
      m = next;
    }
    Word big = heavy::morse_prefix(std::size_t{1} << 16);
    bool agree = true;
    for (std::size_t i = 0; i < big.size(); ++i) {
      agree = agree && big[i] == static_cast<long>(std::popcount(i) & 1);
    }
    CHECK(agree);
    for (int k = 1; k <= 16; ++k) {
      CHECK(heavy::weight(heavy::morse_prefix(std::size_t{1} << k)) == Rational(1L << (k - 1)));
    }
  }

  TEST_CASE("two-sided morse mirrors the one-sided sequence") {
    auto two = SequenceHandle::morse(Sidedness::two_sided);
    CHECK(heavy::to_string(two.window(-10, 10)) == "01100101100110100110");
    for (std::int64_t i = 1; i <= 500; ++i) CHECK(two.letter_at(-i) == two.letter_at(i - 1));
  }

  TEST_CASE("substitution application") {
    auto m = Substitution::morse();
    CHECK(heavy::to_string(heavy::substitution_apply(m, w("0"))) == "01");
    CHECK(heavy::to_string(heavy::substitution_apply(m, w("01"))) == "0110");
    CHECK(heavy::to_string(heavy::substitution_apply(ternary(), w("2"))) == "210");
    CHECK_THROWS_AS(heavy::substitution_apply(m, w("2")), heavy::DomainError);
  }

  TEST_CASE("substitution parsing rejects malformed input") {
    CHECK_THROWS_AS(Substitution::parse("0 -> 01\n1 -> 12\n"), heavy::DomainError);
    CHECK_THROWS_AS(Substitution::parse("0 -> 01\n0 -> 10\n"), heavy::DomainError);
    CHECK_THROWS_AS(Substitution::parse("0 01\n"), heavy::ParseError);
    CHECK_THROWS_AS(Substitution::parse("0 -> \n"), heavy::DomainError);
    CHECK_THROWS_AS(Substitution::parse("# nothing\n"), heavy::DomainError);
    CHECK(ternary().to_string() == "0->120, 1->201, 2->210");
  }

  TEST_CASE("incidence matrices and primitivity") {
    using M = heavy::IncidenceMatrix;
    CHECK(heavy::substitution_matrix(Substitution::morse()) == M{{1, 1}, {1, 1}});
    CHECK(heavy::substitution_matrix(ternary()) == M{{1, 1, 1}, {1, 1, 1}, {1, 1, 1}});
    auto id = Substitution::parse("0 -> 0\n1 -> 1\n");
    CHECK(heavy::substitution_matrix(id) == M{{1, 0}, {0, 1}});

    CHECK(heavy::is_primitive(M{{1, 1}, {1, 1}}));
    CHECK_FALSE(heavy::is_primitive(M{{1, 0}, {0, 1}}));
    CHECK_FALSE(heavy::is_primitive(M{{0, 1}, {1, 0}}));
    // Fibonacci substitution: positive only from the second power on.
    CHECK(heavy::is_primitive(M{{1, 1}, {1, 0}}));
    // Wielandt's extremal 3x3 matrix needs exactly (3-1)^2+1 = 5 steps.
    CHECK(heavy::is_primitive(M{{0, 1, 0}, {0, 0, 1}, {1, 1, 0}}));
    CHECK_THROWS_AS(heavy::is_primitive(M{{1, 1}}), heavy::DomainError);
  }

  TEST_CASE("fixed points") {
    CHECK(heavy::to_string(heavy::fixed_point_prefix(ternary(), 2, 9)) == "210201120");
    CHECK(heavy::to_string(heavy::fixed_point_prefix(ternary(), 2, 15)) == "210201120210120");
    CHECK(heavy::to_string(heavy::fixed_point_prefix(Substitution::morse(), 0, 8)) == "01101001");
    CHECK(heavy::fixed_point_period(Substitution::morse(), 0) == 1u);

    // 0 -> 1, 1 -> 10 has period two from seed 0: 0, 1, 10, 101, ...
    auto swap = Substitution::parse("0 -> 1\n1 -> 10\n");
    CHECK(heavy::fixed_point_period(swap, 1) == 1u);
    CHECK(heavy::fixed_point_period(Substitution::parse("0 -> 1\n1 -> 01\n"), 0) == 2u);
    CHECK_THROWS_AS(heavy::fixed_point_prefix(Substitution::parse("0 -> 0\n1 -> 1\n"), 0, 4),
                    heavy::NotAFixedPointError);
    CHECK_THROWS_AS(heavy::fixed_point_prefix(ternary(), 5, 4), heavy::DomainError);
  }

  TEST_CASE("fixed point prefixes are invariant under the substitution") {
    for (const auto& [s, seed] : {std::pair{ternary(), Rational(2)}, std::pair{Substitution::morse(), Rational(0)},
                                  std::pair{Substitution::parse("0 -> 1\n1 -> 01\n"), Rational(0)}}) {
      auto period = heavy::fixed_point_period(s, seed);
      Word p = heavy::fixed_point_prefix(s, seed, 200);
      Word img = p;
      for (std::size_t k = 0; k < period; ++k) img = heavy::substitution_apply(s, img);
      Word longer = heavy::fixed_point_prefix(s, seed, img.size());
      CHECK(img == longer);
      CHECK(heavy::subword(longer, 0, 200) == p);
    }
  }

  TEST_CASE("ternary discrepancy stays within one") {
    auto handle = SequenceHandle::substitution_fixed_point(ternary(), 2);
    Word x = handle.window(0, 100000);
    Rational s = 0;
    bool ok = true;
    for (std::size_t n = 1; n <= x.size(); ++n) {
      s += x[n - 1];
      Rational d = s - static_cast<long>(n);
      ok = ok && abs(d) <= 1;
    }
    CHECK(ok);
    CHECK(heavy::to_string(handle.window(0, 15)) == "210201120210120");
  }

  TEST_CASE("mechanical words") {
    CHECK(heavy::to_string(heavy::mechanical_word(Rational(3, 5), 5, MechanicalConvention::upper)) == "11010");
    CHECK(heavy::to_string(heavy::mechanical_word(golden(), 8, MechanicalConvention::upper)) == "11011010");
    CHECK(heavy::to_string(heavy::mechanical_word(Rational(0), 4, MechanicalConvention::upper)) == "0000");
    CHECK(heavy::to_string(heavy::mechanical_word(Rational(1), 3, MechanicalConvention::upper)) == "111");
    CHECK(heavy::to_string(heavy::mechanical_word(Rational(3, 5), 5, MechanicalConvention::lower)) == "10101");
    CHECK_THROWS_AS(heavy::mechanical_word(Rational(3, 2), 4, MechanicalConvention::upper), heavy::DomainError);
    CHECK_THROWS_AS(heavy::mechanical_word(-golden(), 4, MechanicalConvention::upper), heavy::DomainError);
  }

  TEST_CASE("golden mechanical word matches a high-precision oracle") {
    auto handle = SequenceHandle::mechanical(golden(), MechanicalConvention::upper);
    Word got = handle.window(-3000, 3000);
    auto want = oracle::golden_upper_mechanical(-3000, 3000);
    REQUIRE(got.size() == want.size());
    bool same = true;
    for (std::size_t i = 0; i < want.size(); ++i) same = same && got[i] == want[i];
    CHECK(same);
    // Handle letters 0..n-1 reproduce the finite word.
    CHECK(handle.window(0, 500) == heavy::mechanical_word(golden(), 500, MechanicalConvention::upper));
  }

  TEST_CASE("upper and lower prefix sums differ by at most one") {
    for (const auto& alpha : {golden(), AlgebraicTarget::parse("sqrt(2)-1"), AlgebraicTarget(Rational(3, 5))}) {
      Word up = heavy::mechanical_word(alpha, 1000, MechanicalConvention::upper);
      Word lo = heavy::mechanical_word(alpha, 1000, MechanicalConvention::lower);
      auto su = heavy::prefix_sums(up);
      auto sl = heavy::prefix_sums(lo);
      bool ok = true;
      for (std::size_t i = 0; i < su.size(); ++i) ok = ok && abs(su[i] - sl[i]) <= 1;
      CHECK(ok);
    }
  }

  TEST_CASE("rotation coding") {
    CHECK(heavy::to_string(heavy::rotation_coding(golden(), 0, 5)) == "10101");
    CHECK(heavy::to_string(heavy::rotation_coding(Rational(1, 2), 0, 4)) == "1010");
    CHECK(heavy::rotation_coding(golden(), 0, 0).empty());
    CHECK_THROWS_AS(heavy::rotation_coding(Rational(1), 0, 4), heavy::DomainError);

    // Letter i is 1 iff frac(x0 + i alpha) < alpha; oracle in long double.
    long double g = (std::sqrt(5.0L) - 1) / 2;
    Word x = heavy::rotation_coding(golden(), Rational(1, 3), 2000);
    bool ok = true;
    for (std::size_t i = 0; i < x.size(); ++i) {
      long double v = 1.0L / 3 + static_cast<long double>(i) * g;
      int bit = (v - std::floor(v)) < g ? 1 : 0;
      ok = ok && x[i] == bit;
    }
    CHECK(ok);
  }

  TEST_CASE("rotation coding sums stay within two of n alpha") {
    auto handle = SequenceHandle::rotation_coding(golden(), 0);
    Word x = handle.window(0, 100000);
    Rational s = 0;
    double worst = 0;
    for (std::size_t n = 1; n <= x.size(); ++n) {
      s += x[n - 1];
      worst = std::max(worst, std::fabs(s.get_d() - static_cast<double>(n) * 0.6180339887498949));
    }
    CHECK(worst < 2);
  }

  TEST_CASE("floor multiples") {
    CHECK(heavy::floor_multiple(golden(), 4) == 2);
    CHECK(heavy::floor_multiple(golden(), 0) == 0);
    CHECK(heavy::floor_multiple(Rational(3, 5), 7) == 4);
    CHECK(heavy::floor_multiple(Rational(3, 5), -7) == -5);
  }

  TEST_CASE("periodic handles and shifts") {
    auto p = SequenceHandle::eventually_periodic(w("01"), w("0"));
    CHECK(heavy::to_string(p.window(0, 6)) == "010000");
    CHECK_THROWS_AS(p.letter_at(-1), heavy::DomainError);
    CHECK_THROWS_AS(p.shifted(-1), heavy::DomainError);
    CHECK_THROWS_AS(SequenceHandle::eventually_periodic(w("1"), Word{}), heavy::DomainError);

    auto b = SequenceHandle::bi_periodic(w("10"), w("1"), w("10"));
    CHECK(heavy::to_string(b.window(-4, 5)) == "101011010");
    CHECK(b.two_sided());

    auto m = SequenceHandle::morse(Sidedness::one_sided);
    auto s = m.shifted(3).shifted(2);
    CHECK(s.window(0, 20) == m.window(5, 25));
    CHECK(s.shifted(-5).window(0, 20) == m.window(0, 20));
    CHECK(s.kind() == SequenceHandle::Kind::shifted);
    CHECK_FALSE(m.describe().empty());
  }
}
