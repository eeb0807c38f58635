#include "gzeta/residues.hpp"
#include "gzeta/verify.hpp"
#include "gzeta/zeta.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

using namespace gzeta;
using std::numbers::pi;

namespace {

HilbertSeries series(std::vector<long> weights, std::vector<long> numerator) {
  return HilbertSeries(WeightSeq(std::move(weights)), RatPolynomial::from_integers(numerator));
}

const HilbertSeries example24 = series({2, 3}, {1, 0, 0, 0, 0, 0, -1});

Complex cpow_real(double base, Complex z) { return std::exp(-z * std::log(base)); }

}  // namespace

TEST_CASE("hurwitz zeta special values") {
  CHECK(std::abs(hurwitz_zeta(2.0, 1.0) - pi * pi / 6.0) < 1e-12);
  CHECK(std::abs(hurwitz_zeta(4.0, 1.0) - std::pow(pi, 4) / 90.0) < 1e-12);
  CHECK(std::abs(hurwitz_zeta(0.0, 0.5)) < 1e-12);
  CHECK(std::abs(hurwitz_zeta(0.0, 0.3) - 0.2) < 1e-10);
  // zeta(-1, w) = -B_2(w)/2
  const double w = 0.7;
  CHECK(std::abs(hurwitz_zeta(-1.0, w) - (-(w * w - w + 1.0 / 6.0) / 2.0)) < 1e-11);
}

TEST_CASE("hurwitz zeta matches direct summation") {
  for (double s : {1.5, 2.0, 3.0, 5.5}) {
    for (double w : {0.25, 1.0, 3.7}) {
      const double ref = oracle::hurwitz_direct(s, w);
      CHECK(std::abs(hurwitz_zeta(s, w).real() - ref) < 1e-9 * std::max(1.0, std::abs(ref)));
    }
  }
}

TEST_CASE("hurwitz zeta recurrence on random points") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> re(-8.0, 8.0), im(-15.0, 15.0), wd(0.05, 6.0);
  for (int i = 0; i < 100; ++i) {
    const Complex z(re(rng), im(rng));
    if (std::abs(z - 1.0) < 1e-3) continue;
    const double w = wd(rng);
    const Complex a = hurwitz_zeta(z, w), b = hurwitz_zeta(z, w + 1.0);
    // relative to the size of the terms: for Re z << 0 the values themselves are huge
    const double scale = std::max({1.0, std::abs(a), std::abs(b)});
    CHECK(std::abs(a - b - cpow_real(w, z)) < 1e-10 * scale);
  }
}

TEST_CASE("hurwitz zeta at negative integers") {
  // zeta(-n, w) = -B_{n+1}(w) / (n + 1), Bernoulli polynomial from the oracle numbers
  const auto b = oracle::akiyama_tanigawa(12);
  for (int n = 0; n <= 10; ++n) {
    for (double w : {0.3, 1.0, 4.7}) {
      long double poly = 0.0L;
      for (int k = 0; k <= n + 1; ++k) {
        poly += to_double(Rational(binomial(n + 1, k)) * b[static_cast<std::size_t>(k)]) *
                std::pow(static_cast<long double>(w), n + 1 - k);
      }
      const double expected = static_cast<double>(-poly / (n + 1));
      INFO("n = " << n << ", w = " << w);
      CHECK(std::abs(hurwitz_zeta(static_cast<double>(-n), w).real() - expected) <= 1e-12 * std::max(1.0, std::abs(expected)));
    }
  }
}

TEST_CASE("hurwitz zeta errors") {
  CHECK_THROWS_AS(hurwitz_zeta(1.0, 1.0), PoleError);
  CHECK_THROWS_AS(hurwitz_zeta(Complex(1.0, 1e-12), 1.0), PoleError);
  CHECK_THROWS_AS(hurwitz_zeta(2.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(hurwitz_zeta(2.0, -1.0), std::invalid_argument);
}

TEST_CASE("EvalConfig reads GRADED_ZETA_TOL") {
  setenv("GRADED_ZETA_TOL", "1e-9", 1);
  CHECK(EvalConfig::from_environment().target_abs_tol == doctest::Approx(1e-9));
  setenv("GRADED_ZETA_TOL", "abc", 1);
  CHECK_THROWS(EvalConfig::from_environment());
  unsetenv("GRADED_ZETA_TOL");
  CHECK(EvalConfig::from_environment().target_abs_tol == 1e-12);
}

TEST_CASE("theta") {
  for (double w : {0.5, 1.0, 2.25}) {
    const Complex z(0.3, 1.7);
    CHECK(std::abs(theta(example24, z, w) - cpow_real(w, z)) < 1e-14);
  }
  CHECK(theta(series({1, 1}, {1}), Complex(2.0, 0.0), 1.0) == Complex(0.0));
  // Artinian: theta is the whole function
  const auto art = HilbertSeries(WeightSeq({2, 3}), one_minus_power(6) * one_minus_power(6));
  const Complex z(-1.5, 0.5);
  CHECK(std::abs(theta(art, z, 0.7) - zeta_closed(art, z, 0.7)) < 1e-14);
}

TEST_CASE("zeta_closed of K[x,y]/(x^3 - y^2) is w^-z + zeta(z, w + 2)") {
  const ZetaFunction zeta(example24);
  double worst = 0.0;
  for (double w : {0.5, 1.0, 2.25}) {
    for (double re = -2.0; re <= 4.0; re += 0.5) {
      for (double im = -3.0; im <= 3.0; im += 0.5) {
        const Complex z(re, im);
        if (std::abs(z - 1.0) < 1e-9) continue;
        worst = std::max(worst, std::abs(zeta.closed(z, w) - (cpow_real(w, z) + hurwitz_zeta(z, w + 2.0))));
      }
    }
  }
  CHECK(worst <= 1e-9);
}

TEST_CASE("zeta_closed of K[x] is the Hurwitz zeta") {
  const ZetaFunction zeta(series({1}, {1}));
  for (const Complex z : {Complex(-1.5, 2.0), Complex(0.5, 0.0), Complex(3.0, -1.0)}) {
    CHECK(std::abs(zeta.closed(z, 0.8) - hurwitz_zeta(z, 0.8)) < 1e-12);
  }
}

TEST_CASE("zeta_direct examples") {
  CHECK(std::abs(zeta_direct(series({1}, {1}), 3.0, 1.0) - 1.2020569031595942) < 1e-10);
  const Complex v = zeta_direct(example24, 4.0, 1.0);
  CHECK(std::abs(v - (1.0 + hurwitz_zeta(4.0, 3.0))) < 1e-10);
  CHECK_THROWS_AS(zeta_direct(example24, 2.0, 1.0), std::domain_error);
  const auto s1 = series({2, 3}, {1, 1}), s2 = series({2, 3}, {0, 0, 2});
  const Complex z(4.5, 1.0);
  CHECK(std::abs(zeta_direct(direct_sum(s1, s2), z, 0.6) - zeta_direct(s1, z, 0.6) - zeta_direct(s2, z, 0.6)) < 1e-10);
}

TEST_CASE("zeta_closed agrees with direct summation on the suite") {
  std::mt19937_64 rng(1234);
  std::uniform_real_distribution<double> im(-5.0, 5.0), wd(0.2, 3.0);
  for (const auto& item : series_suite()) {
    const ZetaFunction zeta(item.series);
    const long m = zeta.pole_bound();
    for (int i = 0; i < 3; ++i) {
      const Complex z(static_cast<double>(m) + 2.0, im(rng));
      const double w = wd(rng);
      INFO(item.name);
      CHECK(std::abs(zeta.closed(z, w) - zeta_direct(item.series, z, w)) <= 1e-8);
    }
  }
}

TEST_CASE("zeta_limit") {
  const ZetaFunction zeta(example24);
  CHECK(zeta.theta_limit(Complex(2.0, 1.0)) == Complex(0.0));
  for (const Complex z : {Complex(-1.0, 1.0), Complex(2.5, 0.0), Complex(0.0, -2.0)}) {
    CHECK(std::abs(zeta.limit(z) - hurwitz_zeta(z, 2.0)) < 1e-11);
    CHECK(std::abs(zeta_limit(series({1}, {1}), z) - hurwitz_zeta(z, 1.0)) < 1e-11);
  }
  for (const auto& item : series_suite()) {
    const long m = ZetaFunction(item.series).pole_bound();
    const Complex z(static_cast<double>(m) + 2.0, 0.7);
    INFO(item.name);
    CHECK(std::abs(zeta_limit(item.series, z) - zeta_direct_limit(item.series, z)) <= 1e-8);
  }
}

TEST_CASE("zeta_limit is the w -> 0 limit") {
  const auto s = series({1, 2}, {1, 1, -1});
  const ZetaFunction zeta(s);
  const Complex z(-0.5, 1.5);
  const double w = 1e-7;
  const Complex approx = zeta.closed(z, w) - to_double(zeta.initial_values()[0]) * cpow_real(w, z);
  CHECK(std::abs(approx - zeta.limit(z)) < 1e-5);
}

TEST_CASE("pole errors carry the exact residue") {
  const ZetaFunction zeta(series({1, 1}, {1}));
  try {
    (void)zeta.closed(Complex(2.0, 0.0), 0.5);
    FAIL("expected a pole error");
  } catch (const PoleError& e) {
    CHECK(e.pole() == 2);
    CHECK(e.residue() == doctest::Approx(1.0));
    CHECK(e.exact_residue() == "1");
  }
  CHECK_THROWS_AS(zeta.closed(Complex(1.0, 0.0), 0.5), PoleError);
  CHECK_THROWS_AS(zeta.closed(2.0, 0.0), std::invalid_argument);
}

TEST_CASE("poles with vanishing residue are regular points") {
  // K[x,y]: R(w, 1) = 1 - w vanishes at w = 1
  const ZetaFunction zeta(series({1, 1}, {1}));
  const Complex at = zeta.closed(Complex(1.0, 0.0), 1.0);
  const Complex near = zeta.closed(Complex(1.0, 1e-4), 1.0);
  CHECK(std::isfinite(at.real()));
  CHECK(std::abs(at - near) < 1e-3);
  // closed form: zeta(z-1, 1) + (1 - w) zeta(z, 1) at w = 1 -> zeta(0) = -1/2
  CHECK(std::abs(at - Complex(-0.5, 0.0)) < 1e-9);
}

TEST_CASE("residues_closed examples") {
  const auto t = residues_closed(series({1, 1}, {1}));
  CHECK(t.at(2) == RatPolynomial::constant(1));
  CHECK(t.at(1) == RatPolynomial({Rational(1), Rational(-1)}));
  CHECK(residues_closed(series({2, 3}, {1})).at(2) == RatPolynomial::constant(make_rational(1, 6)));
  const auto ex = residues_closed(example24);
  CHECK(ex.m == 1);
  CHECK(ex.at(1) == RatPolynomial::constant(1));
  CHECK(residues_closed(regular_quotient(series({1}, {1}), 2)).entries.empty());
}

TEST_CASE("residue index: H(n) = 2n + 3 has R(w, 1) = 3 - 2w") {
  const auto t = residues_closed(disambiguation_series());
  CHECK(t.at(1) == RatPolynomial({Rational(3), Rational(-2)}));
  CHECK(t.at(2) == RatPolynomial::constant(2));
  const ZetaFunction zeta(disambiguation_series());
  const double w = 0.4;
  const Complex numeric = residue_oracle([&](Complex z) { return zeta.closed(z, w); }, 1.0);
  CHECK(std::abs(numeric - (3.0 - 2.0 * w)) < 1e-6);
  CHECK(std::abs(numeric - (3.0 - 3.0 * w)) > 0.1);
}

TEST_CASE("residues_limit examples") {
  const auto t = residues_limit(series({1, 1}, {1}));
  CHECK(t.at(2) == RatPolynomial::constant(1));
  CHECK(t.at(1) == RatPolynomial::constant(1));
  CHECK(residues_limit(example24).at(1) == RatPolynomial::constant(1));
  CHECK(residues_limit(series({2, 3}, {1})).at(2) == RatPolynomial::constant(make_rational(1, 6)));
}

TEST_CASE("residues_betti examples") {
  const auto ex = residues_betti(WeightSeq({2, 3}), BettiTable({{0, 0, 1}, {1, 6, 1}}));
  CHECK(ex.at(2).is_zero());
  CHECK(ex.at(1) == RatPolynomial::constant(1));
  const auto free = residues_betti(WeightSeq({2, 3}), BettiTable({{0, 0, 1}}));
  CHECK(free.at(2) == RatPolynomial::constant(make_rational(1, 6)));
  CHECK(residues_betti(WeightSeq({1, 1}), BettiTable({{0, 0, 1}}), Rational(0)).at(1) == RatPolynomial::constant(1));
}

TEST_CASE("residue routes agree exactly on the suite") {
  for (const auto& item : series_suite()) {
    INFO(item.name);
    const auto closed = residues_closed(item.series);
    CHECK(closed.specialized(0).entries == residues_limit(item.series).entries);
    if (item.betti) CHECK(residues_betti(item.series.weights(), *item.betti).entries == closed.entries);
    CHECK(closed.m == dimension(item.series));
  }
}

TEST_CASE("exact residues match the contour oracle") {
  for (const auto& item : series_suite()) {
    const ZetaFunction zeta(item.series);
    const double w = 0.65;
    const auto table = zeta.residues();
    for (long pole = 1; pole <= zeta.pole_bound(); ++pole) {
      const double exact = table.evaluate(pole, w);
      const Complex numeric = residue_oracle([&](Complex z) { return zeta.closed(z, w); }, static_cast<double>(pole));
      INFO(item.name << " pole " << pole);
      if (std::abs(exact) > 1e-9) {
        CHECK(std::abs(numeric - exact) <= 1e-5 * std::abs(exact));
      } else {
        CHECK(std::abs(numeric) < 1e-6);
      }
      // independent contour on a different radius and node set
      const Complex other = oracle::circle_average([&](Complex z) { return zeta.closed(z, w); }, static_cast<double>(pole));
      CHECK(std::abs(other - exact) <= 1e-5 * std::max(1.0, std::abs(exact)));
    }
  }
}

TEST_CASE("residue_oracle on Hurwitz zeta") {
  const Complex r = residue_oracle([](Complex z) { return hurwitz_zeta(z, 0.3); }, 1.0);
  CHECK(std::abs(r - 1.0) < 1e-6);
  const Complex r2 = residue_oracle([](Complex z) { return zeta_closed(series({1, 1}, {1}), z, 0.5); }, 1.0);
  CHECK(std::abs(r2 - 0.5) < 1e-6);
}

TEST_CASE("leading residue is constant and gives the multiplicity") {
  for (const auto& item : standard_graded_suite()) {
    const long m = dimension(item.series);
    const auto lead = residues_closed(item.series).at(m);
    CHECK(lead.degree() == 0);
    CHECK(Rational(factorial(m - 1)) * lead[0] == multiplicity(item.series).e);
  }
}

TEST_CASE("iterated zeta") {
  const auto t = iterated_residues_closed(series({1}, {1}), 1);
  CHECK(t.at(2) == RatPolynomial::constant(1));
  const auto ex = iterated_residues_limit(example24, 1);
  CHECK(ex.at(2) == RatPolynomial::constant(1));
  const ZetaFunction z1(iterate(example24, 1));
  const Complex numeric = residue_oracle([&](Complex z) { return z1.closed(z, 1.0); }, 2.0);
  CHECK(std::abs(numeric - 1.0) < 1e-6);
  for (const auto& item : standard_graded_suite()) {
    const long m = dimension(item.series);
    CHECK(Rational(factorial(m)) * iterated_residues_limit(item.series, 1).at(m + 1)[0] == multiplicity(item.series).e);
  }
  // R^i(k+1) = d^i_k in the standard graded case
  const auto s = series({1, 1, 1}, {1, 1});
  const auto q2 = quasi_polynomial(iterate(s, 2));
  const auto r2 = iterated_residues_limit(s, 2);
  for (long k = 0; k <= q2.degree; ++k) CHECK(r2.at(k + 1)[0] == q2.coefficient(k, 0));
  const Complex z(4.0, 0.4);
  CHECK(std::abs(iterated_zeta_closed(example24, 1, z, 0.5) - zeta_direct(iterate(example24, 1), z, 0.5)) < 1e-8);
  CHECK(std::abs(iterated_zeta_limit(example24, 1, z) - zeta_direct_limit(iterate(example24, 1), z)) < 1e-8);
}

TEST_CASE("structural identities") {
  const auto suite = series_suite();
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> re(-1.5, 3.8), im(-3.0, 3.0), wd(0.2, 2.5);
  for (const auto& item : suite) {
    Complex z(re(rng), im(rng));
    while (std::abs(z - std::round(z.real())) < 0.05) z += 0.13;
    const double w = wd(rng);
    const auto& s = item.series;
    INFO(item.name);
    CHECK(std::abs(zeta_closed(shift(s, 3), z, w) - zeta_closed(s, z, w + 3.0)) < 1e-9);
    CHECK(std::abs(zeta_closed(regular_quotient(s, 2), z, w) - zeta_closed(s, z, w) + zeta_closed(s, z, w + 2.0)) < 1e-9);
    const auto other = shift(HilbertSeries::free(s.weights()), 1);
    CHECK(std::abs(zeta_closed(direct_sum(s, other), z, w) - zeta_closed(s, z, w) - zeta_closed(other, z, w)) < 1e-9);
  }
}

TEST_CASE("canonical module of a polynomial ring") {
  for (const auto& w : std::vector<std::vector<long>>{{1}, {2, 3}, {1, 2, 3}, {1, 1, 1, 1}, {3, 5}}) {
    const WeightSeq a(w);
    const auto free = HilbertSeries::free(a);
    const auto canonical = HilbertSeries(a, RatPolynomial::monomial(Rational(1), a.sum()));
    const Complex z(-0.7, 2.2);
    CHECK(std::abs(zeta_closed(canonical, z, 0.9) - zeta_closed(free, z, 0.9 + static_cast<double>(a.sum()))) < 1e-9);
  }
}
