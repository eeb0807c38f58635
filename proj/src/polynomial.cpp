#include "gzeta/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace gzeta {

RatPolynomial::RatPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RatPolynomial::RatPolynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

RatPolynomial RatPolynomial::constant(const Rational& c) { return RatPolynomial({c}); }

RatPolynomial RatPolynomial::monomial(const Rational& c, long k) {
  if (k < 0) throw std::invalid_argument("negative exponent in monomial");
  std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
  v.back() = c;
  return RatPolynomial(std::move(v));
}

RatPolynomial RatPolynomial::from_integers(const std::vector<long>& coeffs) {
  std::vector<Rational> v;
  v.reserve(coeffs.size());
  for (long c : coeffs) v.emplace_back(c);
  return RatPolynomial(std::move(v));
}

void RatPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RatPolynomial::operator[](long k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

bool RatPolynomial::has_integer_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return is_integer(c); });
}

Rational RatPolynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double RatPolynomial::evaluate(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + to_double(*it);
  return acc;
}

std::complex<double> RatPolynomial::evaluate(std::complex<double> x) const {
  std::complex<double> acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + to_double(*it);
  return acc;
}

RatPolynomial RatPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return RatPolynomial(std::move(d));
}

RatPolynomial RatPolynomial::taylor_shift(const Rational& c) const {
  // Horner in the polynomial ring: p(x+c) = (...(a_n (x+c) + a_{n-1})(x+c) + ...)
  RatPolynomial result;
  const RatPolynomial step({c, Rational(1)});
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    result *= step;
    result += constant(*it);
  }
  return result;
}

RatPolynomial RatPolynomial::shifted_up(long k) const {
  if (k < 0) throw std::invalid_argument("negative shift");
  if (is_zero()) return {};
  std::vector<Rational> v(static_cast<std::size_t>(k));
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return RatPolynomial(std::move(v));
}

std::pair<RatPolynomial, RatPolynomial> RatPolynomial::divmod(const RatPolynomial& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = coeffs_;
  const long dd = divisor.degree();
  const Rational& lead = divisor.coeffs_.back();
  if (degree() < dd) return {RatPolynomial{}, *this};
  std::vector<Rational> quot(static_cast<std::size_t>(degree() - dd + 1));
  for (long k = degree() - dd; k >= 0; --k) {
    Rational q = rem[static_cast<std::size_t>(k + dd)] / lead;
    quot[static_cast<std::size_t>(k)] = q;
    if (q == 0) continue;
    for (long i = 0; i <= dd; ++i) rem[static_cast<std::size_t>(k + i)] -= q * divisor.coeffs_[static_cast<std::size_t>(i)];
  }
  return {RatPolynomial(std::move(quot)), RatPolynomial(std::move(rem))};
}

long RatPolynomial::root_multiplicity(const Rational& root) const {
  if (is_zero()) throw std::domain_error("root multiplicity of the zero polynomial");
  const RatPolynomial linear({-root, Rational(1)});
  RatPolynomial p = *this;
  long mult = 0;
  while (p.evaluate(root) == 0) {
    p = p.divmod(linear).first;
    ++mult;
  }
  return mult;
}

RatPolynomial& RatPolynomial::operator+=(const RatPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

RatPolynomial& RatPolynomial::operator-=(const RatPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

RatPolynomial& RatPolynomial::operator*=(const RatPolynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> prod(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) prod[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(prod);
  trim();
  return *this;
}

RatPolynomial& RatPolynomial::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

RatPolynomial RatPolynomial::operator-() const {
  RatPolynomial r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

std::string RatPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (long k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (k == 0) {
      out += gzeta::to_string(mag);
      continue;
    }
    if (mag != 1) out += gzeta::to_string(mag) + "*";
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

std::vector<std::string> RatPolynomial::to_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(gzeta::to_string(c));
  return out;
}

RatPolynomial RatPolynomial::from_strings(const std::vector<std::string>& coeffs) {
  std::vector<Rational> v;
  v.reserve(coeffs.size());
  for (const auto& s : coeffs) v.push_back(parse_rational(s));
  return RatPolynomial(std::move(v));
}

RatPolynomial one_minus_power(long k) {
  if (k < 0) throw std::invalid_argument("negative exponent");
  if (k == 0) return {};
  std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
  v.front() = 1;
  v.back() = -1;
  return RatPolynomial(std::move(v));
}

}  // namespace gzeta
