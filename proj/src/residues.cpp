#include "gzeta/residues.hpp"

#include "gzeta/bernoulli.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gzeta {

RatPolynomial ResidueTable::at(long pole) const {
  auto it = entries.find(pole);
  return it == entries.end() ? RatPolynomial{} : it->second;
}

ResidueTable ResidueTable::specialized(const Rational& w) const {
  ResidueTable out;
  for (const auto& [pole, poly] : entries) {
    Rational v = poly.evaluate(w);
    if (v != 0) {
      out.entries.emplace(pole, RatPolynomial::constant(v));
      out.m = std::max(out.m, pole);
    }
  }
  return out;
}

double ResidueTable::evaluate(long pole, double w) const { return at(pole).evaluate(w); }

namespace {

void insert_nonzero(ResidueTable& table, long pole, RatPolynomial poly) {
  if (poly.is_zero()) return;
  table.m = std::max(table.m, pole);
  table.entries.emplace(pole, std::move(poly));
}

std::vector<Rational> period_sums(const QuasiPolynomial& quasi) {
  std::vector<Rational> sums;
  for (const auto& row : quasi.coeffs) {
    Rational s = 0;
    for (const auto& c : row) s += c;
    sums.push_back(s / Rational(quasi.period));
  }
  return sums;
}

}  // namespace

ResidueTable residues_closed(const QuasiPolynomial& quasi) {
  ResidueTable table;
  const auto avg = period_sums(quasi);
  for (long k = 0; k <= quasi.degree; ++k) {
    // sum_{l >= k} C(l, k) avg_l (-w)^{l-k}
    std::vector<Rational> poly(static_cast<std::size_t>(quasi.degree - k + 1));
    for (long l = k; l <= quasi.degree; ++l) {
      Rational c = Rational(binomial(l, k)) * avg[static_cast<std::size_t>(l)];
      if ((l - k) % 2 != 0) c = -c;
      poly[static_cast<std::size_t>(l - k)] = c;
    }
    insert_nonzero(table, k + 1, RatPolynomial(std::move(poly)));
  }
  return table;
}

ResidueTable residues_closed(const HilbertSeries& series) {
  if (series.is_zero() || dimension(series) == 0) return {};
  return residues_closed(quasi_polynomial(series));
}

ResidueTable residues_limit(const QuasiPolynomial& quasi) {
  ResidueTable table;
  const auto avg = period_sums(quasi);
  for (long k = 0; k <= quasi.degree; ++k) insert_nonzero(table, k + 1, RatPolynomial::constant(avg[static_cast<std::size_t>(k)]));
  return table;
}

ResidueTable residues_limit(const HilbertSeries& series) {
  if (series.is_zero() || dimension(series) == 0) return {};
  return residues_limit(quasi_polynomial(series));
}

ResidueTable residues_from_shifts(const WeightSeq& weights, const std::vector<std::pair<Rational, long>>& terms) {
  const long r = static_cast<long>(weights.size());
  ResidueTable table;
  for (long pole = 1; pole <= r; ++pole) {
    // Res_{z=l} zeta_a(z, x) = (-1)^{r-l} / ((l-1)! (r-l)!) B_{r-l}(x; a)
    const RatPolynomial barnes = bernoulli_barnes_poly(static_cast<unsigned>(r - pole), weights);
    Rational scale = Rational(1) / Rational(factorial(static_cast<unsigned long>(pole - 1)) *
                                           factorial(static_cast<unsigned long>(r - pole)));
    if ((r - pole) % 2 != 0) scale = -scale;
    RatPolynomial acc;
    for (const auto& [coeff, j] : terms) acc += barnes.taylor_shift(Rational(j)) * Rational(coeff * scale);
    insert_nonzero(table, pole, std::move(acc));
  }
  return table;
}

namespace {

std::vector<std::pair<Rational, long>> betti_terms(const BettiTable& betti) {
  std::vector<std::pair<Rational, long>> terms;
  for (const auto& e : betti.entries()) {
    Rational c(e.beta);
    if (e.homological % 2 != 0) c = -c;
    terms.emplace_back(c, e.degree);
  }
  return terms;
}

}  // namespace

ResidueTable residues_betti(const WeightSeq& weights, const BettiTable& betti) {
  return residues_from_shifts(weights, betti_terms(betti));
}

ResidueTable residues_betti(const WeightSeq& weights, const BettiTable& betti, const Rational& w) {
  return residues_betti(weights, betti).specialized(w);
}

Complex residue_oracle(const std::function<Complex(Complex)>& f, double z0, double radius, int points) {
  if (!(radius > 0.0) || points < 4) throw std::invalid_argument("residue_oracle needs a positive radius and >= 4 points");
  Complex acc = 0.0;
  for (int p = 0; p < points; ++p) {
    const double theta = 2.0 * std::numbers::pi * p / points;
    const Complex offset = std::polar(radius, theta);
    acc += f(z0 + offset) * offset;
  }
  return acc / static_cast<double>(points);
}

}  // namespace gzeta
