#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace gzeta {

using Complex = std::complex<double>;

/// Tuning for the Euler-Maclaurin evaluators.
struct EvalConfig {
  double target_abs_tol = 1e-12;
  int euler_maclaurin_terms = 12;  // J
  int min_offset = 10;             // lower bound for N + w
  double pole_guard = 1e-9;        // delta

  /// Defaults, with target_abs_tol taken from GRADED_ZETA_TOL when set.
  static EvalConfig from_environment();
  /// Throws std::invalid_argument unless every field is positive.
  void validate() const;
};

/// Raised when an evaluation point lies within the pole guard of a pole with
/// nonzero residue.
class PoleError : public std::domain_error {
 public:
  PoleError(const std::string& what, long pole, double residue, std::string exact_residue);

  long pole() const { return pole_; }
  double residue() const { return residue_; }
  const std::string& exact_residue() const { return exact_residue_; }

 private:
  long pole_;
  double residue_;
  std::string exact_residue_;
};

/// Hurwitz zeta zeta(z, w) = sum_{n>=0} (n + w)^{-z}, analytically continued
/// to all z != 1 by Euler-Maclaurin summation. Requires w > 0.
Complex hurwitz_zeta(Complex z, double w, const EvalConfig& cfg = {});

}  // namespace gzeta
