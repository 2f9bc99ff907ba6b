#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace heavy {

/// Exact arbitrary-precision rational. Always kept in canonical form.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "7", "-3", "3/5" or "-6/10" (canonicalised). Decimal points,
/// exponents and zero denominators are rejected with ParseError.
Rational parse_rational(std::string_view text);

/// Canonical "p" or "p/q" spelling.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

bool is_integer(const Rational& value);

/// Approximate value for human-readable reports only.
double approximate(const Rational& value);

std::size_t hash_value(const Rational& value) noexcept;

}  // namespace heavy
