#include "gzeta/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace gzeta {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(long num, long den) { return make_rational(Integer(num), Integer(den)); }

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Integer parse_integer(std::string_view s) {
  s = trim(s);
  std::size_t pos = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) pos = 1;
  if (pos == s.size()) throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
  for (std::size_t i = pos; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
  }
  // mpz_set_str rejects a leading '+'
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return Integer(digits, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  text = trim(text);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  return make_rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

std::string to_string(const Rational& q) { return q.get_str(10); }
std::string to_string(const Integer& n) { return n.get_str(10); }

double to_double(const Rational& q) { return mpq_get_d(q.get_mpq_t()); }
double to_double(const Integer& n) { return mpz_get_d(n.get_mpz_t()); }

Integer factorial(unsigned long n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return c;
}

Integer power(const Integer& base, unsigned long exponent) {
  Integer p;
  mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), exponent);
  return p;
}

Rational power(const Rational& base, long exponent) {
  if (exponent >= 0) {
    return Rational(power(base.get_num(), static_cast<unsigned long>(exponent)),
                    power(base.get_den(), static_cast<unsigned long>(exponent)));
  }
  if (base == 0) throw std::domain_error("zero to a negative power");
  return make_rational(power(base.get_den(), static_cast<unsigned long>(-exponent)),
                       power(base.get_num(), static_cast<unsigned long>(-exponent)));
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace gzeta
