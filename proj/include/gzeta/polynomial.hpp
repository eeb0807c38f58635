#pragma once

#include "gzeta/rational.hpp"

#include <complex>
#include <initializer_list>
#include <string>
#include <vector>

namespace gzeta {

/// Dense univariate polynomial with exact rational coefficients, indexed by
/// exponent. Trailing zeros are trimmed, so the zero polynomial has no
/// coefficients and degree() == -1.
class RatPolynomial {
 public:
  RatPolynomial() = default;
  explicit RatPolynomial(std::vector<Rational> coeffs);
  RatPolynomial(std::initializer_list<Rational> coeffs);

  static RatPolynomial constant(const Rational& c);
  /// c * x^k
  static RatPolynomial monomial(const Rational& c, long k);
  static RatPolynomial from_integers(const std::vector<long>& coeffs);

  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Coefficient of x^k; zero outside the stored range.
  Rational operator[](long k) const;
  bool has_integer_coefficients() const;

  Rational evaluate(const Rational& x) const;
  double evaluate(double x) const;
  std::complex<double> evaluate(std::complex<double> x) const;

  RatPolynomial derivative() const;
  /// p(x + c)
  RatPolynomial taylor_shift(const Rational& c) const;
  /// x^k * p(x)
  RatPolynomial shifted_up(long k) const;

  /// Euclidean division; throws std::domain_error on a zero divisor.
  std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& divisor) const;
  /// Multiplicity of x = root as a zero of the polynomial (zero polynomial -> throws).
  long root_multiplicity(const Rational& root) const;

  RatPolynomial& operator+=(const RatPolynomial& o);
  RatPolynomial& operator-=(const RatPolynomial& o);
  RatPolynomial& operator*=(const RatPolynomial& o);
  RatPolynomial& operator*=(const Rational& c);

  friend RatPolynomial operator+(RatPolynomial a, const RatPolynomial& b) { return a += b; }
  friend RatPolynomial operator-(RatPolynomial a, const RatPolynomial& b) { return a -= b; }
  friend RatPolynomial operator*(RatPolynomial a, const RatPolynomial& b) { return a *= b; }
  friend RatPolynomial operator*(RatPolynomial a, const Rational& c) { return a *= c; }
  friend RatPolynomial operator*(const Rational& c, RatPolynomial a) { return a *= c; }
  RatPolynomial operator-() const;

  friend bool operator==(const RatPolynomial& a, const RatPolynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Human-readable form such as "1/2*w^2 - w + 3".
  std::string to_string(const std::string& var = "x") const;
  /// Ascending coefficient strings; inverse of from_strings.
  std::vector<std::string> to_strings() const;
  static RatPolynomial from_strings(const std::vector<std::string>& coeffs);

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// (1 - t^k)
RatPolynomial one_minus_power(long k);

}  // namespace gzeta
