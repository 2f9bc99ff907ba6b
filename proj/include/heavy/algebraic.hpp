#pragma once

#include <string>
#include <string_view>

#include "heavy/rational.hpp"

namespace heavy {

/// Exact heaviness target alpha = (p + q*sqrt(d)) / r.
///
/// Covers the rationals (q == 0, d == 0) and the real quadratic irrationals.
/// The representation is canonical: r > 0, gcd(p, q, r) == 1, d is not a
/// perfect square when q != 0 and small square factors of d are moved into
/// q. All floors, ceilings and comparisons are decided with integer
/// arithmetic; no floating point is involved.
class AlgebraicTarget {
 public:
  /// Zero.
  AlgebraicTarget() = default;
  AlgebraicTarget(const Rational& value);  // NOLINT(google-explicit-constructor)

  /// Throws DomainError when r == 0 or d < 0.
  static AlgebraicTarget quadratic(Integer p, Integer q, Integer d, Integer r);

  /// Accepts exact expressions built from integers, + - * / parentheses and
  /// sqrt(N), e.g. "3/5", "(-1+1*sqrt(5))/2", "sqrt(2)-1". Decimal input is
  /// rejected. Throws ParseError.
  static AlgebraicTarget parse(std::string_view text);

  const Integer& p() const noexcept { return p_; }
  const Integer& q() const noexcept { return q_; }
  const Integer& d() const noexcept { return d_; }
  const Integer& r() const noexcept { return r_; }

  bool is_rational() const noexcept { return q_ == 0; }
  /// Throws DomainError when the target is irrational.
  Rational as_rational() const;

  AlgebraicTarget operator-() const;

  /// floor(i * alpha), exact.
  Integer floor_multiple(const Integer& i) const;
  /// ceil(i * alpha), exact.
  Integer ceil_multiple(const Integer& i) const;
  /// floor(offset + i * alpha), exact.
  Integer floor_affine(const Rational& offset, const Integer& i) const;

  /// Sign of (x - alpha): -1, 0 or +1.
  int compare(const Rational& x) const;
  /// Sign of (x - i * alpha): -1, 0 or +1.
  int compare_multiple(const Rational& x, const Integer& i) const;
  /// Sign of (num / den - i * alpha) for den > 0.
  int compare_multiple(const Integer& num, const Integer& den, const Integer& i) const;

  /// For display only.
  double approximate() const;

  /// Canonical spelling accepted by parse().
  std::string to_string() const;

  friend bool operator==(const AlgebraicTarget&, const AlgebraicTarget&) = default;

 private:
  AlgebraicTarget(Integer p, Integer q, Integer d, Integer r)
      : p_(std::move(p)), q_(std::move(q)), d_(std::move(d)), r_(std::move(r)) {}

  Integer p_ = 0;
  Integer q_ = 0;
  Integer d_ = 0;
  Integer r_ = 1;
};

}  // namespace heavy
