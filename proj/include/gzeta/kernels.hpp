#pragma once

// Data-parallel kernels. Each OpenMP kernel has a serial reference with the
// same contract; tests compare the two and bench/ times them.

#include "gzeta/hilbert.hpp"
#include "gzeta/hurwitz.hpp"

#include <span>
#include <string>
#include <vector>

namespace gzeta {

class ZetaFunction;

namespace kernels {

/// sum_{n >= first} coeffs[n] * (n + w)^{-z}
Complex dirichlet_sum(std::span<const double> coeffs, double w, Complex z, std::size_t first = 0);
Complex dirichlet_sum_serial(std::span<const double> coeffs, double w, Complex z, std::size_t first = 0);

struct GridValue {
  Complex z;
  Complex value;
  bool ok = false;
  std::string error;
};

std::vector<GridValue> evaluate_grid(const ZetaFunction& zeta, std::span<const Complex> points, double w,
                                     const EvalConfig& cfg);
std::vector<GridValue> evaluate_grid_serial(const ZetaFunction& zeta, std::span<const Complex> points, double w,
                                            const EvalConfig& cfg);

/// H(M, 0..n_max) as doubles, accumulated exactly in 128-bit integers.
/// Throws std::overflow_error if an intermediate value does not fit.
std::vector<double> hilbert_values(const HilbertSeries& series, long n_max);

}  // namespace kernels
}  // namespace gzeta
