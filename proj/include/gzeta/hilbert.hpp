#pragma once

#include "gzeta/polynomial.hpp"
#include "gzeta/rational.hpp"
#include "gzeta/weights.hpp"

#include <vector>

namespace gzeta {

struct BettiEntry {
  int homological;  // i
  long degree;      // j
  Integer beta;     // beta_{ij} >= 1
};

/// Sparse graded Betti numbers beta_{ij}.
class BettiTable {
 public:
  BettiTable() = default;
  /// Throws std::invalid_argument on duplicate (i, j), negative indices or beta < 1.
  explicit BettiTable(std::vector<BettiEntry> entries);

  const std::vector<BettiEntry>& entries() const { return entries_; }
  /// Largest homological degree present, -1 for an empty table.
  int projective_dimension() const;

 private:
  std::vector<BettiEntry> entries_;
};

/// Rational function h(t) / prod_i (1 - t^{a_i}) with integer numerator h.
class HilbertSeries {
 public:
  /// Throws std::invalid_argument when the numerator has a non-integer coefficient.
  HilbertSeries(WeightSeq weights, RatPolynomial numerator);
  /// Free module S: numerator 1.
  static HilbertSeries free(WeightSeq weights);

  const WeightSeq& weights() const { return weights_; }
  const RatPolynomial& numerator() const { return numerator_; }
  bool is_zero() const { return numerator_.is_zero(); }

  /// deg(h) - sum a_i; the Hilbert function is a quasi-polynomial for n > E.
  long polynomial_part_bound() const;

  friend bool operator==(const HilbertSeries&, const HilbertSeries&) = default;

 private:
  WeightSeq weights_;
  RatPolynomial numerator_;
};

/// Periodic-coefficient polynomial sum_k d[k][n mod D] n^k with stabilization index alpha.
struct QuasiPolynomial {
  long period = 1;
  long degree = -1;  // -1 encodes the zero quasi-polynomial
  std::vector<std::vector<Rational>> coeffs;  // coeffs[k][j], 0 <= j < period
  long alpha = 0;

  /// d_k(n), reading the residue class of n modulo the period.
  const Rational& coefficient(long k, long n) const;
  Rational evaluate(long n) const;
  bool is_zero() const { return degree < 0; }
};

struct Expansion {
  std::vector<Integer> values;  // H(M, 0..n_max)
  bool has_negative = false;    // not the Hilbert series of a module
};

struct Multiplicity {
  Rational e;
  std::vector<Rational> e_k;  // e_0 .. e_{m-1}
};

HilbertSeries series_from_betti(const WeightSeq& weights, const BettiTable& betti);

Expansion expand(const HilbertSeries& series, long n_max);

/// Pole order of H_M(t) at t = 1. Throws std::domain_error("zero module") on a zero numerator.
long dimension(const HilbertSeries& series);

/// deg(h) - sum a_i. Throws std::domain_error on a zero numerator.
long a_invariant(const HilbertSeries& series);

QuasiPolynomial quasi_polynomial(const HilbertSeries& series);

/// True iff every coefficient up to max(n_max, E + 1) is nonnegative.
bool validate(const HilbertSeries& series, long n_max);

/// Series of M(-k).
HilbertSeries shift(const HilbertSeries& series, long k);

/// Series of M / fM for f regular of degree k.
HilbertSeries regular_quotient(const HilbertSeries& series, long k);

HilbertSeries direct_sum(const HilbertSeries& s1, const HilbertSeries& s2);

/// Series of the i-th iterated Hilbert function (i-fold partial sums).
HilbertSeries iterate(const HilbertSeries& series, long i);

/// Coefficients d_0..d_{m-1} of the Hilbert polynomial. Standard graded only.
std::vector<Rational> hilbert_polynomial(const HilbertSeries& series);

/// e(M) = h(1) and e_k(M) = h^{(k)}(1)/k! after writing H_M = h/(1-t)^m.
/// Standard graded only, m >= 1.
Multiplicity multiplicity(const HilbertSeries& series);

/// Number of nonnegative solutions of a_1 x_1 + ... + a_r x_r = n.
Integer restricted_partition(const WeightSeq& a, long n);

/// As restricted_partition with the extra bounds 0 <= x_i <= D/a_i - 1.
Integer bounded_denumerant(const WeightSeq& a, long n);

}  // namespace gzeta
