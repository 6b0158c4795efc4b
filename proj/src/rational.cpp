#include "galeforge/rational.hpp"

#include <stdexcept>

namespace galeforge {

Rational::Rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) {
    throw std::domain_error("Rational: zero denominator");
  }
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos || text.find('/', slash + 1) != std::string_view::npos) {
    throw std::invalid_argument("Rational: expected \"p/q\", got \"" + std::string(text) + "\"");
  }
  const std::string num_s(text.substr(0, slash));
  const std::string den_s(text.substr(slash + 1));
  Integer num, den;
  try {
    num = Integer(num_s);
    den = Integer(den_s);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("Rational: malformed \"" + std::string(text) + "\"");
  }
  if (sgn(den) <= 0) {
    throw std::invalid_argument("Rational: denominator must be positive in \"" + std::string(text) + "\"");
  }
  Integer g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (g != 1) {
    throw std::invalid_argument("Rational: not in lowest terms: \"" + std::string(text) + "\"");
  }
  Rational r(num, den);
  if (r.str() != text) {  // rejects whitespace, leading zeros, "-0", "+1"
    throw std::invalid_argument("Rational: non-canonical form \"" + std::string(text) + "\"");
  }
  return r;
}

std::string Rational::str() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) {
    throw std::domain_error("Rational: division by zero");
  }
  v_ /= o.v_;
  return *this;
}

Integer binomial(long n, long k) {
  if (k < 0 || k > n || n < 0) {
    return 0;
  }
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace galeforge
