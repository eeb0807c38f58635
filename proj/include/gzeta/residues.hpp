#pragma once

#include "gzeta/hilbert.hpp"
#include "gzeta/hurwitz.hpp"
#include "gzeta/polynomial.hpp"

#include <functional>
#include <map>
#include <utility>
#include <vector>

namespace gzeta {

/// Exact residues at the poles z = 1, ..., m, each a polynomial in w.
/// Poles whose residue vanishes identically are not stored.
struct ResidueTable {
  long m = 0;  // highest pole with a nonzero residue, 0 when there is none
  std::map<long, RatPolynomial> entries;

  /// Residue polynomial at z = pole (zero when absent).
  RatPolynomial at(long pole) const;
  /// Same table with w replaced by a rational value.
  ResidueTable specialized(const Rational& w) const;
  double evaluate(long pole, double w) const;

  friend bool operator==(const ResidueTable&, const ResidueTable&) = default;
};

/// Residues of zeta_M(z, w) from the quasi-polynomial:
///   R(w, k+1) = (1/D) sum_{l=k}^{m-1} C(l, k) (-w)^{l-k} sum_j d_l(j).
ResidueTable residues_closed(const QuasiPolynomial& quasi);
ResidueTable residues_closed(const HilbertSeries& series);

/// Residues of zeta_M(z) = lim_{w->0} (zeta_M(z, w) - H(M,0) w^{-z}):
/// constants (1/D) sum_{j<D} d_k(j).
ResidueTable residues_limit(const QuasiPolynomial& quasi);
ResidueTable residues_limit(const HilbertSeries& series);

/// Residues of sum_t c_t * zeta_a(z, w + j_t) through Bernoulli-Barnes
/// polynomials; `terms` holds (c_t, j_t). The result is symbolic in w.
ResidueTable residues_from_shifts(const WeightSeq& weights, const std::vector<std::pair<Rational, long>>& terms);

/// Residues of zeta_M(z, w) from a graded free resolution.
ResidueTable residues_betti(const WeightSeq& weights, const BettiTable& betti);
/// As above with w fixed to a rational value (w = 0 gives the residues of zeta_M(z)).
ResidueTable residues_betti(const WeightSeq& weights, const BettiTable& betti, const Rational& w);

/// (1/(2 pi i)) times the contour integral of f over |z - z0| = radius, by the
/// trapezoid rule on `points` nodes.
Complex residue_oracle(const std::function<Complex(Complex)>& f, double z0, double radius = 1e-3, int points = 64);

}  // namespace gzeta
