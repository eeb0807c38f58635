#include "gzeta/kernels.hpp"

#include "gzeta/zeta.hpp"

#include <cmath>
#include <stdexcept>

namespace gzeta::kernels {

namespace {

void check_dirichlet_args(double w, std::size_t first) {
  if (w < 0.0 || (w == 0.0 && first == 0)) throw std::invalid_argument("Dirichlet sum needs n + w > 0 for every term");
}

}  // namespace

Complex dirichlet_sum(std::span<const double> coeffs, double w, Complex z, std::size_t first) {
  check_dirichlet_args(w, first);
  const long size = static_cast<long>(coeffs.size());
  const long count = size - static_cast<long>(first);
  double re = 0.0, im = 0.0;
  // Each thread walks its chunk from the tail towards n = first, so the large
  // leading terms are added last; forward order loses ~1e-13 relative.
#pragma omp parallel for reduction(+ : re, im) schedule(static)
  for (long i = 0; i < count; ++i) {
    const long n = size - 1 - i;
    const double c = coeffs[static_cast<std::size_t>(n)];
    if (c == 0.0) continue;
    const Complex term = c * std::exp(-z * std::log(static_cast<double>(n) + w));
    re += term.real();
    im += term.imag();
  }
  return {re, im};
}

Complex dirichlet_sum_serial(std::span<const double> coeffs, double w, Complex z, std::size_t first) {
  check_dirichlet_args(w, first);
  Complex acc = 0.0;
  // smallest terms first
  for (std::size_t n = coeffs.size(); n-- > first;) {
    if (coeffs[n] == 0.0) continue;
    acc += coeffs[n] * std::exp(-z * std::log(static_cast<double>(n) + w));
  }
  return acc;
}

namespace {

GridValue evaluate_point(const ZetaFunction& zeta, Complex z, double w, const EvalConfig& cfg) {
  GridValue g{z, Complex(0.0), false, {}};
  try {
    g.value = zeta.closed(z, w, cfg);
    g.ok = std::isfinite(g.value.real()) && std::isfinite(g.value.imag());
    if (!g.ok) g.error = "non-finite value";
  } catch (const std::exception& e) {
    g.error = e.what();
  }
  return g;
}

}  // namespace

std::vector<GridValue> evaluate_grid(const ZetaFunction& zeta, std::span<const Complex> points, double w,
                                     const EvalConfig& cfg) {
  std::vector<GridValue> out(points.size());
  const long count = static_cast<long>(points.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (long i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i)] = evaluate_point(zeta, points[static_cast<std::size_t>(i)], w, cfg);
  }
  return out;
}

std::vector<GridValue> evaluate_grid_serial(const ZetaFunction& zeta, std::span<const Complex> points, double w,
                                            const EvalConfig& cfg) {
  std::vector<GridValue> out;
  out.reserve(points.size());
  for (const auto& z : points) out.push_back(evaluate_point(zeta, z, w, cfg));
  return out;
}

std::vector<double> hilbert_values(const HilbertSeries& series, long n_max) {
  if (n_max < 0) throw std::invalid_argument("hilbert_values requires n_max >= 0");
  std::vector<__int128> acc(static_cast<std::size_t>(n_max) + 1, 0);
  const auto& h = series.numerator().coefficients();
  for (std::size_t k = 0; k < h.size() && static_cast<long>(k) <= n_max; ++k) {
    const auto& num = h[k].get_num();
    if (!num.fits_slong_p()) throw std::overflow_error("numerator coefficient too large");
    acc[k] = num.get_si();
  }
  for (long a : series.weights().weights()) {
    for (long n = a; n <= n_max; ++n) {
      auto& dst = acc[static_cast<std::size_t>(n)];
      if (__builtin_add_overflow(dst, acc[static_cast<std::size_t>(n - a)], &dst))
        throw std::overflow_error("Hilbert function value exceeds 128 bits");
    }
  }
  std::vector<double> out(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) out[i] = static_cast<double>(acc[i]);
  return out;
}

}  // namespace gzeta::kernels
