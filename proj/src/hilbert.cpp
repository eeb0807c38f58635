#include "gzeta/hilbert.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace gzeta {

BettiTable::BettiTable(std::vector<BettiEntry> entries) : entries_(std::move(entries)) {
  std::set<std::pair<int, long>> seen;
  for (const auto& e : entries_) {
    if (e.homological < 0 || e.degree < 0) throw std::invalid_argument("Betti indices must be nonnegative");
    if (e.beta < 1) throw std::invalid_argument("Betti numbers must be positive");
    if (!seen.emplace(e.homological, e.degree).second)
      throw std::invalid_argument("duplicate Betti entry (" + std::to_string(e.homological) + ", " +
                                  std::to_string(e.degree) + ")");
  }
}

int BettiTable::projective_dimension() const {
  int p = -1;
  for (const auto& e : entries_) p = std::max(p, e.homological);
  return p;
}

HilbertSeries::HilbertSeries(WeightSeq weights, RatPolynomial numerator)
    : weights_(std::move(weights)), numerator_(std::move(numerator)) {
  if (!numerator_.has_integer_coefficients())
    throw std::invalid_argument("Hilbert series numerator must have integer coefficients");
}

HilbertSeries HilbertSeries::free(WeightSeq weights) {
  return HilbertSeries(std::move(weights), RatPolynomial::constant(1));
}

long HilbertSeries::polynomial_part_bound() const { return numerator_.degree() - weights_.sum(); }

const Rational& QuasiPolynomial::coefficient(long k, long n) const {
  long j = n % period;
  if (j < 0) j += period;
  return coeffs[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
}

Rational QuasiPolynomial::evaluate(long n) const {
  Rational acc = 0;
  const Rational x(n);
  for (long k = degree; k >= 0; --k) acc = acc * x + coefficient(k, n);
  return acc;
}

HilbertSeries series_from_betti(const WeightSeq& weights, const BettiTable& betti) {
  RatPolynomial num;
  for (const auto& e : betti.entries()) {
    Rational c(e.beta);
    if (e.homological % 2 != 0) c = -c;
    num += RatPolynomial::monomial(c, e.degree);
  }
  return HilbertSeries(weights, std::move(num));
}

Expansion expand(const HilbertSeries& series, long n_max) {
  if (n_max < 0) throw std::invalid_argument("expand requires n_max >= 0");
  Expansion out;
  out.values.assign(static_cast<std::size_t>(n_max) + 1, Integer(0));
  const auto& h = series.numerator().coefficients();
  for (std::size_t k = 0; k < h.size() && static_cast<long>(k) <= n_max; ++k) out.values[k] = h[k].get_num();
  // multiply by 1/(1 - t^a): running sum with stride a
  for (long a : series.weights().weights()) {
    for (long n = a; n <= n_max; ++n) out.values[static_cast<std::size_t>(n)] += out.values[static_cast<std::size_t>(n - a)];
  }
  out.has_negative = std::any_of(out.values.begin(), out.values.end(), [](const Integer& v) { return v < 0; });
  return out;
}

long dimension(const HilbertSeries& series) {
  if (series.is_zero()) throw std::domain_error("zero module");
  const long order = series.numerator().root_multiplicity(Rational(1));
  return std::max(0L, static_cast<long>(series.weights().size()) - order);
}

long a_invariant(const HilbertSeries& series) {
  if (series.is_zero()) throw std::domain_error("zero module");
  return series.polynomial_part_bound();
}

namespace {

/// Exact Lagrange interpolation through (xs[i], ys[i]).
RatPolynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  RatPolynomial result;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (ys[i] == 0) continue;
    RatPolynomial basis = RatPolynomial::constant(1);
    Rational denom = 1;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis *= RatPolynomial({-xs[j], Rational(1)});
      denom *= xs[i] - xs[j];
    }
    result += basis * Rational(ys[i] / denom);
  }
  return result;
}

}  // namespace

QuasiPolynomial quasi_polynomial(const HilbertSeries& series) {
  if (series.is_zero()) throw std::domain_error("zero module");
  const long period = series.weights().period();
  const long samples = static_cast<long>(series.weights().size());
  const long e_bound = series.polynomial_part_bound();
  const long first = std::max(0L, e_bound + 1);

  // Residue class j needs sample points n = j + tD > E for t = t0 .. t0 + samples - 1.
  const long n_top = first + (samples + 1) * period;
  const auto h = expand(series, n_top).values;

  std::vector<RatPolynomial> per_class(static_cast<std::size_t>(period));
  long degree = -1;
  for (long j = 0; j < period; ++j) {
    long t0 = 0;
    while (j + t0 * period < first) ++t0;
    std::vector<Rational> xs, ys;
    for (long s = 0; s < samples; ++s) {
      const long t = t0 + s;
      xs.emplace_back(t);
      ys.emplace_back(h[static_cast<std::size_t>(j + t * period)]);
    }
    // P(t) with t = (n - j)/D
    RatPolynomial in_t = interpolate(xs, ys);
    RatPolynomial in_n = in_t.taylor_shift(make_rational(-j, period));
    std::vector<Rational> c = in_n.coefficients();
    Rational scale = 1;
    for (auto& ck : c) {
      ck *= scale;
      scale /= period;
    }
    per_class[static_cast<std::size_t>(j)] = RatPolynomial(std::move(c));
    degree = std::max(degree, per_class[static_cast<std::size_t>(j)].degree());
  }

  QuasiPolynomial q;
  q.period = period;
  q.degree = degree;
  q.coeffs.assign(static_cast<std::size_t>(degree + 1), std::vector<Rational>(static_cast<std::size_t>(period)));
  for (long k = 0; k <= degree; ++k) {
    for (long j = 0; j < period; ++j) q.coeffs[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] = per_class[static_cast<std::size_t>(j)][k];
  }

  // Agreement is guaranteed for n > E; scan downward for the first mismatch.
  q.alpha = 0;
  for (long n = first - 1; n >= 0; --n) {
    if (q.evaluate(n) != Rational(h[static_cast<std::size_t>(n)])) {
      q.alpha = n + 1;
      break;
    }
  }
  return q;
}

bool validate(const HilbertSeries& series, long n_max) {
  const long top = std::max({n_max, series.polynomial_part_bound() + 1, 0L});
  return !expand(series, top).has_negative;
}

HilbertSeries shift(const HilbertSeries& series, long k) {
  if (k < 1) throw std::invalid_argument("shift requires k >= 1");
  return HilbertSeries(series.weights(), series.numerator().shifted_up(k));
}

HilbertSeries regular_quotient(const HilbertSeries& series, long k) {
  if (k < 1) throw std::invalid_argument("regular element degree must be >= 1");
  return HilbertSeries(series.weights(), series.numerator() * one_minus_power(k));
}

HilbertSeries direct_sum(const HilbertSeries& s1, const HilbertSeries& s2) {
  if (!(s1.weights() == s2.weights())) throw std::invalid_argument("direct sum of series over different weights");
  return HilbertSeries(s1.weights(), s1.numerator() + s2.numerator());
}

HilbertSeries iterate(const HilbertSeries& series, long i) {
  if (i < 1) throw std::invalid_argument("iterate requires i >= 1");
  return HilbertSeries(series.weights().with_unit_weights(static_cast<std::size_t>(i)), series.numerator());
}

std::vector<Rational> hilbert_polynomial(const HilbertSeries& series) {
  if (!series.weights().is_standard()) throw std::domain_error("standard graded only");
  const long m = dimension(series);
  std::vector<Rational> out(static_cast<std::size_t>(m));
  if (m == 0) return out;
  const auto q = quasi_polynomial(series);
  for (long k = 0; k <= std::min(q.degree, m - 1); ++k) out[static_cast<std::size_t>(k)] = q.coefficient(k, 0);
  return out;
}

Multiplicity multiplicity(const HilbertSeries& series) {
  if (!series.weights().is_standard()) throw std::domain_error("standard graded only");
  const long m = dimension(series);
  if (m == 0) throw std::domain_error("multiplicity defined here for dim >= 1");
  // h(t) = numerator / (1 - t)^{r - m}
  RatPolynomial h = series.numerator();
  const RatPolynomial one_minus_t = one_minus_power(1);
  for (long c = static_cast<long>(series.weights().size()) - m; c > 0; --c) h = h.divmod(one_minus_t).first;

  Multiplicity out;
  out.e = h.evaluate(Rational(1));
  RatPolynomial deriv = h;
  for (long k = 0; k < m; ++k) {
    out.e_k.push_back(deriv.evaluate(Rational(1)) / Rational(factorial(static_cast<unsigned long>(k))));
    deriv = deriv.derivative();
  }
  return out;
}

Integer restricted_partition(const WeightSeq& a, long n) {
  if (n < 0) throw std::invalid_argument("restricted_partition requires n >= 0");
  std::vector<Integer> ways(static_cast<std::size_t>(n) + 1, Integer(0));
  ways[0] = 1;
  for (long ai : a.weights()) {
    for (long v = ai; v <= n; ++v) ways[static_cast<std::size_t>(v)] += ways[static_cast<std::size_t>(v - ai)];
  }
  return ways.back();
}

Integer bounded_denumerant(const WeightSeq& a, long n) {
  if (n < 0) throw std::invalid_argument("bounded_denumerant requires n >= 0");
  const long period = a.period();
  std::vector<Integer> coeffs(static_cast<std::size_t>(n) + 1, Integer(0));
  coeffs[0] = 1;
  for (long ai : a.weights()) {
    const long copies = period / ai;  // x_i in [0, copies - 1]
    std::vector<Integer> next(coeffs.size(), Integer(0));
    for (long v = 0; v <= n; ++v) {
      if (coeffs[static_cast<std::size_t>(v)] == 0) continue;
      for (long x = 0; x < copies && v + x * ai <= n; ++x) next[static_cast<std::size_t>(v + x * ai)] += coeffs[static_cast<std::size_t>(v)];
    }
    coeffs = std::move(next);
  }
  return coeffs.back();
}

}  // namespace gzeta
