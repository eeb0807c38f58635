#include "gzeta/kernels.hpp"
#include "gzeta/zeta.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace gzeta;

TEST_CASE("dirichlet sum: parallel matches serial") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> coef(-3.0, 3.0);
  std::vector<double> c(20000);
  for (auto& x : c) x = coef(rng);
  for (const Complex z : {Complex(2.5, 0.0), Complex(3.0, 7.0), Complex(1.2, -4.0)}) {
    for (std::size_t first : {0u, 1u, 17u}) {
      const Complex a = kernels::dirichlet_sum(c, 0.3, z, first);
      const Complex b = kernels::dirichlet_sum_serial(c, 0.3, z, first);
      CHECK(std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(b)));
    }
  }
  const std::vector<double> ones(200000, 1.0);
  CHECK(std::abs(kernels::dirichlet_sum(ones, 1.0, Complex(3.0, 0.0)) - 1.2020569031595942) < 1e-10);
  CHECK(kernels::dirichlet_sum(ones, 1.0, Complex(3.0, 0.0), ones.size()) == Complex(0.0));
}

TEST_CASE("grid: parallel matches serial, failures are per point") {
  const ZetaFunction zeta(HilbertSeries(WeightSeq({1, 1}), RatPolynomial::from_integers({1})));
  std::vector<Complex> pts;
  for (double re = -2.0; re <= 3.0; re += 0.5)
    for (double im = -1.0; im <= 1.0; im += 0.5) pts.emplace_back(re, im);
  const auto a = kernels::evaluate_grid(zeta, pts, 0.5, {});
  const auto b = kernels::evaluate_grid_serial(zeta, pts, 0.5, {});
  REQUIRE(a.size() == pts.size());
  REQUIRE(b.size() == pts.size());
  std::size_t failures = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    CHECK(a[i].z == pts[i]);
    CHECK(a[i].ok == b[i].ok);
    if (a[i].ok) {
      CHECK(a[i].value == b[i].value);
    } else {
      ++failures;
      CHECK_FALSE(a[i].error.empty());
    }
  }
  CHECK(failures == 2);  // z = 1 and z = 2
}

TEST_CASE("hilbert values") {
  const auto s = HilbertSeries(WeightSeq({2, 3}), RatPolynomial::from_integers({1}));
  const auto v = kernels::hilbert_values(s, 60);
  for (long n = 0; n <= 60; ++n) CHECK(v[static_cast<std::size_t>(n)] == static_cast<double>(oracle::count_solutions({2, 3}, n)));
  const auto big = HilbertSeries(WeightSeq(std::vector<long>(12, 1)), RatPolynomial::from_integers({1}));
  CHECK_THROWS_AS(kernels::hilbert_values(big, 1000000), std::overflow_error);
}
