#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace galeforge {

using Integer = mpz_class;

// Exact rational scalar. Always in lowest terms with positive denominator;
// all arithmetic is exact. Serializes as "p/q" (q > 0; "0/1" for zero).
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design
  Rational(const Integer& n) : v_(n) {}
  Rational(const Integer& num, const Integer& den);
  Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

  // Strict parse of the canonical "p/q" form; rejects q <= 0, gcd(p,q) != 1,
  // whitespace, signs on q, and non-canonical digit strings.
  static Rational parse(std::string_view text);

  std::string str() const;

  Integer num() const { return v_.get_num(); }
  Integer den() const { return v_.get_den(); }
  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.v_, b.v_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0   ? std::strong_ordering::less
           : c > 0 ? std::strong_ordering::greater
                   : std::strong_ordering::equal;
  }

 private:
  mpq_class v_;  // invariant: canonical (mpq arithmetic preserves this)
};

// C(n, k), zero when k < 0 or k > n.
Integer binomial(long n, long k);

}  // namespace galeforge
