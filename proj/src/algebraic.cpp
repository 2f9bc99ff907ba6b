#include "heavy/algebraic.hpp"

#include <cctype>
#include <cmath>
#include <optional>

#include "heavy/errors.hpp"

namespace heavy {
namespace {

Integer isqrt(const Integer& n) {
  Integer root;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  return root;
}

bool is_perfect_square(const Integer& n) { return mpz_perfect_square_p(n.get_mpz_t()) != 0; }

Integer floor_div(const Integer& a, const Integer& b) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

Integer ceil_div(const Integer& a, const Integer& b) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

int sign(const Integer& z) { return mpz_sgn(z.get_mpz_t()); }

// floor((a + b*sqrt(d)) / c) for c > 0; b*sqrt(d) irrational unless b == 0.
Integer floor_quadratic(const Integer& a, const Integer& b, const Integer& d, const Integer& c) {
  if (b == 0) return floor_div(a, c);
  Integer root = isqrt(b * b * d);
  Integer t = b > 0 ? root : Integer(-root - 1);
  return floor_div(a + t, c);
}

// sign(l - m*sqrt(d)), with m*sqrt(d) irrational unless m == 0.
int sign_minus_root(const Integer& l, const Integer& m, const Integer& d) {
  if (m == 0) return sign(l);
  if (m > 0) {
    if (l <= 0) return -1;
    return sign(Integer(l * l - m * m * d));
  }
  if (l >= 0) return 1;
  return sign(Integer(m * m * d - l * l));
}

// Parsed values of the form a + b*sqrt(d) with rational a, b.
struct QuadValue {
  Rational a = 0;
  Rational b = 0;
  Integer d = 0;

  bool rational() const { return b == 0; }
};

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string text) : text_(std::move(text)) {}

  QuadValue parse() {
    QuadValue v = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("cannot parse target '" + text_ + "': " + why);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  static Integer common_d(const QuadValue& x, const QuadValue& y, const ExpressionParser& self) {
    if (x.rational()) return y.d;
    if (y.rational()) return x.d;
    if (x.d != y.d) self.fail("only one square root radical is supported");
    return x.d;
  }

  QuadValue add(const QuadValue& x, const QuadValue& y, int s) const {
    Integer d = common_d(x, y, *this);
    QuadValue out{x.a + s * y.a, x.b + s * y.b, d};
    if (out.b == 0) out.d = 0;
    return out;
  }

  QuadValue mul(const QuadValue& x, const QuadValue& y) const {
    Integer d = common_d(x, y, *this);
    QuadValue out{x.a * y.a + x.b * y.b * d, x.a * y.b + x.b * y.a, d};
    if (out.b == 0) out.d = 0;
    return out;
  }

  QuadValue div(const QuadValue& x, const QuadValue& y) const {
    if (!y.rational()) fail("division by an irrational quantity is not supported");
    if (y.a == 0) fail("division by zero");
    QuadValue out{x.a / y.a, x.b / y.a, x.d};
    return out;
  }

  QuadValue expr() {
    QuadValue v = term();
    for (;;) {
      if (accept('+')) {
        v = add(v, term(), 1);
      } else if (accept('-')) {
        v = add(v, term(), -1);
      } else {
        return v;
      }
    }
  }

  QuadValue term() {
    QuadValue v = unary();
    for (;;) {
      if (accept('*')) {
        v = mul(v, unary());
      } else if (accept('/')) {
        v = div(v, unary());
      } else {
        return v;
      }
    }
  }

  QuadValue unary() {
    if (accept('-')) {
      QuadValue v = unary();
      return QuadValue{-v.a, -v.b, v.d};
    }
    if (accept('+')) return unary();
    return primary();
  }

  Integer integer_literal() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E')) {
      fail("decimal input is not exact; write a fraction instead");
    }
    return Integer(text_.substr(start, pos_ - start), 10);
  }

  QuadValue primary() {
    skip_space();
    if (accept('(')) {
      QuadValue v = expr();
      expect(')');
      return v;
    }
    if (text_.compare(pos_, 4, "sqrt") == 0) {
      pos_ += 4;
      expect('(');
      Integer n = integer_literal();
      expect(')');
      if (is_perfect_square(n)) return QuadValue{Rational(isqrt(n)), 0, 0};
      return QuadValue{0, 1, n};
    }
    if (pos_ < text_.size() && text_[pos_] == '.') fail("decimal input is not exact; write a fraction instead");
    return QuadValue{Rational(integer_literal()), 0, 0};
  }

  std::string text_;
  std::size_t pos_ = 0;
};

std::string normalise_minus(std::string_view text) {
  // U+2212 MINUS SIGN is accepted as '-'.
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
        static_cast<unsigned char>(text[i + 1]) == 0x88 && static_cast<unsigned char>(text[i + 2]) == 0x92) {
      out.push_back('-');
      i += 2;
    } else {
      out.push_back(text[i]);
    }
  }
  return out;
}

}  // namespace

AlgebraicTarget::AlgebraicTarget(const Rational& value)
    : p_(value.get_num()), q_(0), d_(0), r_(value.get_den()) {}

AlgebraicTarget AlgebraicTarget::quadratic(Integer p, Integer q, Integer d, Integer r) {
  if (r == 0) throw DomainError("target denominator must be nonzero");
  if (d < 0) throw DomainError("target radicand must be nonnegative");
  if (q == 0 || d == 0) {
    q = 0;
    d = 0;
  } else if (is_perfect_square(d)) {
    p += q * isqrt(d);
    q = 0;
    d = 0;
  } else {
    // Move small square factors of d into q.
    for (unsigned long k = 2; k <= 100000; ++k) {
      Integer kk = k * k;
      if (kk > d) break;
      while (mpz_divisible_p(d.get_mpz_t(), kk.get_mpz_t())) {
        d /= kk;
        q *= k;
      }
    }
  }
  if (r < 0) {
    p = -p;
    q = -q;
    r = -r;
  }
  Integer g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r.get_mpz_t());
  if (g > 1) {
    p /= g;
    q /= g;
    r /= g;
  }
  return AlgebraicTarget(std::move(p), std::move(q), std::move(d), std::move(r));
}

AlgebraicTarget AlgebraicTarget::parse(std::string_view text) {
  std::string normalised = normalise_minus(text);
  QuadValue v = ExpressionParser(normalised).parse();
  if (v.rational()) return AlgebraicTarget(v.a);
  // a + b sqrt(d) with a = a1/a2, b = b1/b2 over the common denominator.
  Integer den;
  mpz_lcm(den.get_mpz_t(), v.a.get_den_mpz_t(), v.b.get_den_mpz_t());
  Integer p = v.a.get_num() * (den / v.a.get_den());
  Integer q = v.b.get_num() * (den / v.b.get_den());
  return quadratic(std::move(p), std::move(q), v.d, std::move(den));
}

Rational AlgebraicTarget::as_rational() const {
  if (!is_rational()) throw DomainError("target " + to_string() + " is irrational");
  Rational out(p_, r_);
  out.canonicalize();
  return out;
}

AlgebraicTarget AlgebraicTarget::operator-() const { return AlgebraicTarget(-p_, -q_, d_, r_); }

Integer AlgebraicTarget::floor_multiple(const Integer& i) const {
  return floor_quadratic(i * p_, i * q_, d_, r_);
}

Integer AlgebraicTarget::ceil_multiple(const Integer& i) const {
  if (is_rational() || i == 0) return ceil_div(i * p_, r_);
  return floor_multiple(i) + 1;
}

Integer AlgebraicTarget::floor_affine(const Rational& offset, const Integer& i) const {
  const Integer& a = offset.get_num();
  const Integer& b = offset.get_den();
  return floor_quadratic(a * r_ + b * i * p_, b * i * q_, d_, b * r_);
}

int AlgebraicTarget::compare(const Rational& x) const { return compare_multiple(x, Integer(1)); }

int AlgebraicTarget::compare_multiple(const Rational& x, const Integer& i) const {
  return compare_multiple(x.get_num(), x.get_den(), i);
}

int AlgebraicTarget::compare_multiple(const Integer& num, const Integer& den, const Integer& i) const {
  // sign(num/den - i(p + q sqrt d)/r) = sign(num*r - den*i*p - den*i*q*sqrt d)
  Integer di = den * i;
  Integer l = num * r_ - di * p_;
  if (q_ == 0) return sign(l);
  Integer m = di * q_;
  return sign_minus_root(l, m, d_);
}

double AlgebraicTarget::approximate() const {
  return (p_.get_d() + q_.get_d() * std::sqrt(d_.get_d())) / r_.get_d();
}

std::string AlgebraicTarget::to_string() const {
  if (is_rational()) return heavy::to_string(as_rational());
  std::string out = "(" + p_.get_str();
  out += q_ < 0 ? "-" : "+";
  Integer mag = abs(q_);
  out += mag.get_str() + "*sqrt(" + d_.get_str() + "))";
  if (r_ != 1) out += "/" + r_.get_str();
  return out;
}

}  // namespace heavy
