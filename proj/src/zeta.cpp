#include "gzeta/zeta.hpp"

#include "gzeta/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gzeta {

ZetaFunction::ZetaFunction(HilbertSeries series) : series_(std::move(series)) {
  if (series_.is_zero()) {
    quasi_.period = series_.weights().period();
    initial_.assign(2, Integer(0));
    return;
  }
  quasi_ = quasi_polynomial(series_);
  head_ = std::max(quasi_.alpha, quasi_.period);
  const auto values = expand(series_, std::max(head_, 1L)).values;
  initial_.assign(values.begin(), values.begin() + std::max(quasi_.alpha, 1L) + 1);
  for (long n = 0; n < head_; ++n) head_values_.push_back(to_double(values[static_cast<std::size_t>(n)]));
  coeffs_.resize(static_cast<std::size_t>(quasi_.degree + 1));
  for (long k = 0; k <= quasi_.degree; ++k) {
    for (long j = 0; j < quasi_.period; ++j) coeffs_[static_cast<std::size_t>(k)].push_back(to_double(quasi_.coeffs[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]));
  }
  residues_ = residues_closed(quasi_);
  limit_residues_ = residues_limit(quasi_);
}

Complex ZetaFunction::theta(Complex z, double w) const {
  Complex acc = 0.0;
  for (long n = 0; n < quasi_.alpha; ++n) {
    const auto& h = initial_[static_cast<std::size_t>(n)];
    if (h != 0) acc += to_double(h) * std::exp(-z * std::log(static_cast<double>(n) + w));
  }
  return acc;
}

Complex ZetaFunction::theta_limit(Complex z) const {
  Complex acc = 0.0;
  for (long n = 1; n < quasi_.alpha; ++n) {
    const auto& h = initial_[static_cast<std::size_t>(n)];
    if (h != 0) acc += to_double(h) * std::exp(-z * std::log(static_cast<double>(n)));
  }
  return acc;
}

namespace {

bool negligible(const RatPolynomial& residue, double w, double value) {
  double scale = 0.0;
  double wk = 1.0;
  for (const auto& c : residue.coefficients()) {
    scale += std::abs(to_double(c)) * wk;
    wk *= std::abs(w);
  }
  return std::abs(value) <= 1e-12 * std::max(1.0, scale);
}

// Cauchy integral over |zeta - center| = radius; exact for functions analytic
// on the closed disc, which covers removable singularities at the center.
template <class F>
Complex cauchy_value(const F& f, Complex z, double center) {
  constexpr int kPoints = 64;
  constexpr double kRadius = 1e-2;
  Complex acc = 0.0;
  for (int p = 0; p < kPoints; ++p) {
    const Complex offset = std::polar(kRadius, 2.0 * std::numbers::pi * p / kPoints);
    const Complex node = center + offset;
    acc += f(node) * offset / (node - z);
  }
  return acc / static_cast<double>(kPoints);
}

}  // namespace

Complex ZetaFunction::closed(Complex z, double w, const EvalConfig& cfg) const {
  if (!(w > 0.0)) throw std::invalid_argument("zeta_M(z, w) requires w > 0");
  for (long pole = 1; pole <= pole_bound(); ++pole) {
    if (std::abs(z - static_cast<double>(pole)) > cfg.pole_guard) continue;
    const RatPolynomial residue = residues_.at(pole);
    const double value = residue.evaluate(w);
    if (!negligible(residue, w, value)) {
      throw PoleError("pole of zeta_M at z = " + std::to_string(pole), pole, value, residue.to_string("w"));
    }
    return cauchy_value([&](Complex s) { return closed_unguarded(s, w, cfg); }, z, static_cast<double>(pole));
  }
  return closed_unguarded(z, w, cfg);
}

// Both evaluators sum the first head_ >= D terms directly, so every Hurwitz
// argument is at least 1 and small w costs no cancellation.
Complex ZetaFunction::closed_unguarded(Complex z, double w, const EvalConfig& cfg) const {
  Complex acc = 0.0;
  for (long n = 0; n < head_; ++n) {
    const double h = head_values_[static_cast<std::size_t>(n)];
    if (h != 0.0) acc += h * std::exp(-z * std::log(static_cast<double>(n) + w));
  }
  if (quasi_.is_zero()) return acc;
  const long period = quasi_.period;
  const double log_period = std::log(static_cast<double>(period));
  const Complex period_mz = std::exp(-z * log_period);
  for (long j = 0; j < period; ++j) {
    const long n = j + head_;
    const auto cls = static_cast<std::size_t>(n % period);
    const double x = (static_cast<double>(n) + w) / static_cast<double>(period);
    // Collect the coefficient of zeta(z - s, x) over k >= s.
    for (long s = 0; s <= quasi_.degree; ++s) {
      double c = 0.0;
      for (long k = s; k <= quasi_.degree; ++k) {
        const double d = coeffs_[static_cast<std::size_t>(k)][cls];
        if (d == 0.0) continue;
        c += d * to_double(binomial(k, s)) * std::pow(-w, static_cast<double>(k - s));
      }
      if (c == 0.0) continue;
      c *= std::pow(static_cast<double>(period), static_cast<double>(s));
      acc += period_mz * c * hurwitz_zeta(z - static_cast<double>(s), x, cfg);
    }
  }
  return acc;
}

Complex ZetaFunction::limit(Complex z, const EvalConfig& cfg) const {
  for (long pole = 1; pole <= pole_bound(); ++pole) {
    if (std::abs(z - static_cast<double>(pole)) > cfg.pole_guard) continue;
    const RatPolynomial residue = limit_residues_.at(pole);
    const double value = residue.evaluate(0.0);
    if (!negligible(residue, 0.0, value)) {
      throw PoleError("pole of zeta_M at z = " + std::to_string(pole), pole, value, residue.to_string("w"));
    }
    return cauchy_value([&](Complex s) { return limit_unguarded(s, cfg); }, z, static_cast<double>(pole));
  }
  return limit_unguarded(z, cfg);
}

Complex ZetaFunction::limit_unguarded(Complex z, const EvalConfig& cfg) const {
  // the n = 0 term is excluded from zeta_M(z)
  Complex acc = 0.0;
  for (long n = 1; n < head_; ++n) {
    const double h = head_values_[static_cast<std::size_t>(n)];
    if (h != 0.0) acc += h * std::exp(-z * std::log(static_cast<double>(n)));
  }
  if (quasi_.is_zero()) return acc;
  const long period = quasi_.period;
  const double log_period = std::log(static_cast<double>(period));
  for (long j = 0; j < period; ++j) {
    const long n = j + head_;
    const auto cls = static_cast<std::size_t>(n % period);
    const double x = static_cast<double>(n) / static_cast<double>(period);
    for (long k = 0; k <= quasi_.degree; ++k) {
      const double d = coeffs_[static_cast<std::size_t>(k)][cls];
      if (d == 0.0) continue;
      acc += d * std::exp((static_cast<double>(k) - z) * log_period) * hurwitz_zeta(z - static_cast<double>(k), x, cfg);
    }
  }
  return acc;
}

Complex theta(const HilbertSeries& series, Complex z, double w) { return ZetaFunction(series).theta(z, w); }

Complex zeta_closed(const HilbertSeries& series, Complex z, double w, const EvalConfig& cfg) {
  return ZetaFunction(series).closed(z, w, cfg);
}

Complex zeta_limit(const HilbertSeries& series, Complex z, const EvalConfig& cfg) {
  return ZetaFunction(series).limit(z, cfg);
}

namespace {

constexpr long kMaxDirectTerms = 50'000'000;

Complex direct_sum(const HilbertSeries& series, Complex z, double w, double eps, std::size_t first) {
  if (!(eps > 0.0)) throw std::invalid_argument("zeta_direct requires eps > 0");
  if (series.is_zero()) return 0.0;
  const QuasiPolynomial quasi = quasi_polynomial(series);
  const long m = quasi.degree + 1;
  long terms = std::max(quasi.alpha, 1L);
  if (m > 0) {
    const double excess = z.real() - static_cast<double>(m);
    if (excess < 1.5) throw std::domain_error("divergent region; use zeta_closed");
    // |q(n)| <= C n^{m-1} for n >= 1
    double bound = 0.0;
    for (const auto& row : quasi.coeffs) {
      double mx = 0.0;
      for (const auto& c : row) mx = std::max(mx, std::abs(to_double(c)));
      bound += mx;
    }
    const double n_tail = std::ceil(std::pow(bound / (eps * excess), 1.0 / excess));
    if (n_tail > static_cast<double>(kMaxDirectTerms)) throw std::domain_error("direct summation needs too many terms");
    terms = std::max({terms, static_cast<long>(n_tail), 16L});
  }
  const auto values = kernels::hilbert_values(series, terms);
  return kernels::dirichlet_sum(values, w, z, first);
}

}  // namespace

Complex zeta_direct(const HilbertSeries& series, Complex z, double w, double eps) {
  if (!(w > 0.0)) throw std::invalid_argument("zeta_M(z, w) requires w > 0");
  return direct_sum(series, z, w, eps, 0);
}

Complex zeta_direct_limit(const HilbertSeries& series, Complex z, double eps) {
  return direct_sum(series, z, 0.0, eps, 1);
}

Complex iterated_zeta_closed(const HilbertSeries& series, long i, Complex z, double w, const EvalConfig& cfg) {
  return zeta_closed(iterate(series, i), z, w, cfg);
}

Complex iterated_zeta_limit(const HilbertSeries& series, long i, Complex z, const EvalConfig& cfg) {
  return zeta_limit(iterate(series, i), z, cfg);
}

ResidueTable iterated_residues_closed(const HilbertSeries& series, long i) {
  return residues_closed(iterate(series, i));
}

ResidueTable iterated_residues_limit(const HilbertSeries& series, long i) {
  return residues_limit(iterate(series, i));
}

}  // namespace gzeta
