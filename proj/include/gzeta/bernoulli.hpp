#pragma once

#include "gzeta/polynomial.hpp"
#include "gzeta/rational.hpp"
#include "gzeta/weights.hpp"

#include <vector>

namespace gzeta {

/// B_0, ..., B_{n_max} with B_1 = -1/2 (generating function z/(e^z - 1)).
/// Backed by a process-wide cache guarded by a mutex.
std::vector<Rational> bernoulli_numbers(unsigned n_max);
Rational bernoulli_number(unsigned n);

/// 1^k + ... + n^k through Faulhaber's formula. Throws std::invalid_argument for k == 0.
Rational sum_powers(unsigned k, const Integer& n);

/// Bernoulli-Barnes polynomial B_l(x; a), defined by
///   z^r e^{xz} / prod_i (e^{a_i z} - 1) = sum_l B_l(x; a) z^l / l!.
/// Computed by exact inversion of each series (e^{a z} - 1)/z.
RatPolynomial bernoulli_barnes_poly(unsigned l, const WeightSeq& a);

/// B_l(0; a) through the multinomial expansion in classical Bernoulli numbers.
Rational bernoulli_barnes_number(unsigned l, const WeightSeq& a);

}  // namespace gzeta
