#include "gzeta/bernoulli.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace gzeta {

WeightSeq::WeightSeq(std::vector<long> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw std::invalid_argument("weight sequence must be nonempty");
  for (long a : weights_) {
    if (a < 1) throw std::invalid_argument("weights must be positive integers");
    period_ = std::lcm(period_, a);
  }
}

long WeightSeq::sum() const { return std::accumulate(weights_.begin(), weights_.end(), 0L); }

bool WeightSeq::is_standard() const {
  return std::all_of(weights_.begin(), weights_.end(), [](long a) { return a == 1; });
}

WeightSeq WeightSeq::with_unit_weights(std::size_t count) const {
  auto w = weights_;
  w.insert(w.end(), count, 1L);
  return WeightSeq(std::move(w));
}

namespace {

std::mutex bernoulli_mutex;
std::vector<Rational> bernoulli_cache{Rational(1)};

}  // namespace

std::vector<Rational> bernoulli_numbers(unsigned n_max) {
  std::lock_guard lock(bernoulli_mutex);
  // sum_{j=0}^{n} C(n+1, j) B_j = 0 for n >= 1, i.e. the coefficients of
  // (e^z - 1)/z times z/(e^z - 1) = 1.
  for (unsigned n = static_cast<unsigned>(bernoulli_cache.size()); n <= n_max; ++n) {
    Rational acc = 0;
    for (unsigned j = 0; j < n; ++j) acc += Rational(binomial(n + 1, j)) * bernoulli_cache[j];
    bernoulli_cache.push_back(-acc / Rational(n + 1));
  }
  return {bernoulli_cache.begin(), bernoulli_cache.begin() + n_max + 1};
}

Rational bernoulli_number(unsigned n) { return bernoulli_numbers(n).back(); }

Rational sum_powers(unsigned k, const Integer& n) {
  if (k == 0) throw std::invalid_argument("Faulhaber's formula requires k >= 1");
  if (n < 0) throw std::invalid_argument("sum_powers requires n >= 0");
  const auto b = bernoulli_numbers(k);
  Rational acc = 0;
  for (unsigned l = 0; l <= k; ++l) {
    acc += Rational(binomial(k + 1, l)) * b[l] * Rational(power(n, 1 + k - l));
  }
  // The formula with B_1 = -1/2 sums 0^k + ... + (n-1)^k; add the n^k term.
  return acc / Rational(k + 1) + Rational(power(n, k));
}

namespace {

/// Truncated power series inverse: returns c with (s * c) = 1 mod z^{order+1}.
std::vector<Rational> series_inverse(const std::vector<Rational>& s, unsigned order) {
  std::vector<Rational> c(order + 1);
  c[0] = 1 / s[0];
  for (unsigned n = 1; n <= order; ++n) {
    Rational acc = 0;
    for (unsigned k = 1; k <= n && k < s.size(); ++k) acc += s[k] * c[n - k];
    c[n] = -acc * c[0];
  }
  return c;
}

std::vector<Rational> series_product(const std::vector<Rational>& a, const std::vector<Rational>& b, unsigned order) {
  std::vector<Rational> c(order + 1);
  for (unsigned i = 0; i <= order && i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; i + j <= order && j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

}  // namespace

RatPolynomial bernoulli_barnes_poly(unsigned l, const WeightSeq& a) {
  std::vector<Rational> prod(l + 1);
  prod[0] = 1;
  for (long ai : a.weights()) {
    // (e^{a z} - 1)/z = sum_n a^{n+1} z^n / (n+1)!
    std::vector<Rational> s(l + 1);
    for (unsigned n = 0; n <= l; ++n) s[n] = make_rational(power(Integer(ai), n + 1), factorial(n + 1));
    prod = series_product(prod, series_inverse(s, l), l);
  }
  // [z^l] e^{xz} prod(z) = sum_n prod[l-n] x^n / n!
  std::vector<Rational> coeffs(l + 1);
  const Rational lfact(factorial(l));
  for (unsigned n = 0; n <= l; ++n) coeffs[n] = lfact * prod[l - n] / Rational(factorial(n));
  return RatPolynomial(std::move(coeffs));
}

namespace {

void multinomial_terms(const WeightSeq& a, const std::vector<Rational>& b, std::size_t pos, unsigned remaining,
                       const Rational& partial, Rational& acc) {
  const Integer ai(a[pos]);
  if (pos + 1 == a.size()) {
    acc += partial * b[remaining] * power(Rational(ai), static_cast<long>(remaining) - 1) /
           Rational(factorial(remaining));
    return;
  }
  for (unsigned i = 0; i <= remaining; ++i) {
    if (b[i] == 0) continue;
    Rational term = partial * b[i] * power(Rational(ai), static_cast<long>(i) - 1) / Rational(factorial(i));
    multinomial_terms(a, b, pos + 1, remaining - i, term, acc);
  }
}

}  // namespace

Rational bernoulli_barnes_number(unsigned l, const WeightSeq& a) {
  const auto b = bernoulli_numbers(l);
  Rational acc = 0;
  multinomial_terms(a, b, 0, l, Rational(1), acc);
  return acc * Rational(factorial(l));
}

}  // namespace gzeta
