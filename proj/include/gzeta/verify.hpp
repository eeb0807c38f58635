#pragma once

#include "gzeta/hilbert.hpp"
#include "gzeta/hurwitz.hpp"
#include "gzeta/residues.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gzeta {

/// S/I over r standard-graded variables with a pure resolution of type
/// d_1 < ... < d_p, p = r - m.
struct PureResolutionSpec {
  long r = 0;
  long m = 0;
  std::vector<long> degrees;

  long p() const { return r - m; }
  /// Throws std::invalid_argument unless p >= 1, r > m >= 1, |degrees| = p and
  /// the degrees are strictly increasing positive integers.
  void validate() const;
};

/// beta_i = (-1)^{i+1} prod_{j != i} d_j / (d_j - d_i), i = 1..p.
std::vector<Rational> pure_betti(const PureResolutionSpec& spec);

struct PureIdentityReport {
  std::vector<Rational> betti;
  bool betti_integral = false;   // all beta_i positive integers
  Rational multiplicity_formula; // d_1...d_p / p!
  Rational residue_route;        // (m-1)! R_{S/I}(m) via Bernoulli-Barnes polynomials
  Rational series_route;         // h(1) after removing (1-t)^p from the numerator
  std::optional<Rational> quasi_route;  // (m-1)! R(m) from the quasi-polynomial, integral Betti numbers only
  bool robust_equal = false;
  Rational literal_lhs;          // displayed sum with d_0 = 0, beta_0 = 1
  Rational literal_rhs;          // (m-1)! (-1)^p d_1...d_p
  bool literal_equal = false;
};

PureIdentityReport check_pure_identity(const PureResolutionSpec& spec);

struct CiReport {
  double max_deviation = 0.0;
  std::size_t samples_used = 0;
};

/// Compares sum_n f_a(n) (n+w)^{-z} against sum_j (-1)^j C(r,j) zeta_a(z, w + Dj).
/// Samples within the pole guard of z = 1..r are skipped.
CiReport check_ci_identity(const WeightSeq& a, double w, const std::vector<Complex>& z_samples,
                           const EvalConfig& cfg = {});

/// e(M, I) = m! Res_{z=m+1} zeta^1_{M,I}(z) from the Hilbert series of gr_I(M).
Rational samuel_multiplicity(const HilbertSeries& graded);

struct NamedSeries {
  std::string name;
  HilbertSeries series;
  std::optional<BettiTable> betti;  // when built from a resolution
};

/// Mixed suite: free modules, shifts, regular quotients and resolutions over
/// weights with r <= 4, a_i <= 5.
std::vector<NamedSeries> series_suite();

/// Standard graded suite: polynomial rings, hypersurfaces and complete intersections.
std::vector<NamedSeries> standard_graded_suite();

/// Module over K[x, y] with Hilbert function 2n + 3; its residue at z = 1
/// distinguishes the two readings of the residue formula.
HilbertSeries disambiguation_series();

struct CheckReport {
  std::string name;
  bool passed = false;
  double max_deviation = 0.0;
  std::vector<std::string> notes;
};

/// Named identity suites: example23, example24, pure, shift, additivity, ci.
/// Throws std::invalid_argument for an unknown name.
CheckReport run_check_suite(const std::string& name, const EvalConfig& cfg = {});

const std::vector<std::string>& check_suite_names();

}  // namespace gzeta
