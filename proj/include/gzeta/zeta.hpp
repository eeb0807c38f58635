#pragma once

#include "gzeta/hilbert.hpp"
#include "gzeta/hurwitz.hpp"
#include "gzeta/residues.hpp"

#include <vector>

namespace gzeta {

/// zeta_M(z, w) = sum_n H(M, n) (n + w)^{-z} for a fixed Hilbert series, with
/// the quasi-polynomial, initial Hilbert values and exact residues prepared
/// once so that repeated evaluation (grids, contours) is cheap.
class ZetaFunction {
 public:
  explicit ZetaFunction(HilbertSeries series);

  const HilbertSeries& series() const { return series_; }
  const QuasiPolynomial& quasi() const { return quasi_; }
  /// Largest possible pole: degree of the quasi-polynomial + 1.
  long pole_bound() const { return quasi_.degree + 1; }
  /// H(M, 0..max(alpha, 1)).
  const std::vector<Integer>& initial_values() const { return initial_; }
  const ResidueTable& residues() const { return residues_; }
  const ResidueTable& limit_residues() const { return limit_residues_; }

  /// sum_{n < alpha} H(M, n) (n + w)^{-z}
  Complex theta(Complex z, double w) const;
  /// sum_{1 <= n < alpha} H(M, n) n^{-z}
  Complex theta_limit(Complex z) const;

  /// Closed form through Hurwitz zeta values. Throws PoleError within the
  /// pole guard of a pole with nonzero residue; points near a pole with zero
  /// residue are evaluated through the mean value over a small circle.
  Complex closed(Complex z, double w, const EvalConfig& cfg = {}) const;
  /// zeta_M(z) = lim_{w -> 0} (zeta_M(z, w) - H(M, 0) w^{-z}).
  Complex limit(Complex z, const EvalConfig& cfg = {}) const;

 private:
  Complex closed_unguarded(Complex z, double w, const EvalConfig& cfg) const;
  Complex limit_unguarded(Complex z, const EvalConfig& cfg) const;

  HilbertSeries series_;
  QuasiPolynomial quasi_;
  std::vector<Integer> initial_;
  long head_ = 0;                          // terms summed directly: max(alpha, D)
  std::vector<double> head_values_;        // H(M, 0..head_-1)
  std::vector<std::vector<double>> coeffs_;  // d_k(j) as doubles
  ResidueTable residues_;
  ResidueTable limit_residues_;
};

Complex theta(const HilbertSeries& series, Complex z, double w);
Complex zeta_closed(const HilbertSeries& series, Complex z, double w, const EvalConfig& cfg = {});
Complex zeta_limit(const HilbertSeries& series, Complex z, const EvalConfig& cfg = {});

/// Direct summation of sum_n H(M, n) (n + w)^{-z}, truncated where the tail
/// bound C N^{m - Re z} / (Re z - m) drops below eps. Requires Re z >= m + 1.5;
/// otherwise throws std::domain_error("divergent region; use zeta_closed").
Complex zeta_direct(const HilbertSeries& series, Complex z, double w, double eps = 1e-11);
/// Direct summation of sum_{n >= 1} H(M, n) n^{-z}.
Complex zeta_direct_limit(const HilbertSeries& series, Complex z, double eps = 1e-11);

/// Iterated variants: the same machinery applied to iterate(series, i).
Complex iterated_zeta_closed(const HilbertSeries& series, long i, Complex z, double w, const EvalConfig& cfg = {});
Complex iterated_zeta_limit(const HilbertSeries& series, long i, Complex z, const EvalConfig& cfg = {});
ResidueTable iterated_residues_closed(const HilbertSeries& series, long i);
ResidueTable iterated_residues_limit(const HilbertSeries& series, long i);

}  // namespace gzeta
