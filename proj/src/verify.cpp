#include "gzeta/verify.hpp"

#include "gzeta/bernoulli.hpp"
#include "gzeta/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace gzeta {

void PureResolutionSpec::validate() const {
  if (m < 1 || r <= m) throw std::invalid_argument("pure resolution needs r > m >= 1");
  if (static_cast<long>(degrees.size()) != p()) throw std::invalid_argument("pure resolution needs exactly r - m degrees");
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (degrees[i] < 1) throw std::invalid_argument("pure resolution degrees must be positive");
    if (i > 0 && degrees[i] <= degrees[i - 1]) throw std::invalid_argument("pure resolution degrees must be strictly increasing");
  }
}

std::vector<Rational> pure_betti(const PureResolutionSpec& spec) {
  spec.validate();
  const auto& d = spec.degrees;
  std::vector<Rational> betti;
  for (std::size_t i = 0; i < d.size(); ++i) {
    Rational prod = 1;
    for (std::size_t j = 0; j < d.size(); ++j) {
      if (j == i) continue;
      if (d[j] == d[i]) throw std::domain_error("repeated degree in pure resolution");
      prod *= make_rational(d[j], d[j] - d[i]);
    }
    // i is 0-based here: (-1)^{(i+1)+1}
    if (i % 2 != 0) prod = -prod;
    betti.push_back(prod);
  }
  return betti;
}

PureIdentityReport check_pure_identity(const PureResolutionSpec& spec) {
  PureIdentityReport rep;
  rep.betti = pure_betti(spec);
  const long p = spec.p();
  const auto& d = spec.degrees;
  rep.betti_integral = std::all_of(rep.betti.begin(), rep.betti.end(),
                                   [](const Rational& b) { return is_integer(b) && b > 0; });

  Rational dprod = 1;
  for (long di : d) dprod *= di;
  rep.multiplicity_formula = dprod / Rational(factorial(static_cast<unsigned long>(p)));

  // 1 + sum_i (-1)^i beta_i t^{d_i}
  std::vector<std::pair<Rational, long>> terms{{Rational(1), 0L}};
  RatPolynomial numerator = RatPolynomial::constant(1);
  for (long i = 1; i <= p; ++i) {
    Rational c = rep.betti[static_cast<std::size_t>(i - 1)];
    if (i % 2 != 0) c = -c;
    terms.emplace_back(c, d[static_cast<std::size_t>(i - 1)]);
    numerator += RatPolynomial::monomial(c, d[static_cast<std::size_t>(i - 1)]);
  }
  const WeightSeq unit(std::vector<long>(static_cast<std::size_t>(spec.r), 1L));
  const Rational mfact(factorial(static_cast<unsigned long>(spec.m - 1)));

  const ResidueTable residues = residues_from_shifts(unit, terms).specialized(0);
  rep.residue_route = mfact * residues.at(spec.m)[0];

  RatPolynomial reduced = numerator;
  bool divisible = true;
  for (long c = 0; c < p && divisible; ++c) {
    auto [q, rem] = reduced.divmod(one_minus_power(1));
    divisible = rem.is_zero();
    reduced = std::move(q);
  }
  rep.series_route = divisible ? reduced.evaluate(Rational(1)) : Rational(0);

  if (rep.betti_integral) {
    const auto quasi = quasi_polynomial(HilbertSeries(unit, numerator));
    rep.quasi_route = mfact * residues_limit(quasi).at(spec.m)[0];
  }
  rep.robust_equal = divisible && rep.residue_route == rep.multiplicity_formula &&
                     rep.series_route == rep.multiplicity_formula &&
                     (!rep.quasi_route || *rep.quasi_route == rep.multiplicity_formula);

  // Displayed sum with d_0 = 0; for i >= 1 the product runs over the resolution degrees j != i.
  const RatPolynomial barnes = bernoulli_barnes_poly(static_cast<unsigned>(p), unit);
  Rational lhs = -barnes.evaluate(Rational(0));
  for (long i = 1; i <= p; ++i) {
    Rational prod = 1;
    for (long j = 1; j <= p; ++j) {
      if (j == i) continue;
      prod *= make_rational(d[static_cast<std::size_t>(j - 1)], d[static_cast<std::size_t>(j - 1)] - d[static_cast<std::size_t>(i - 1)]);
    }
    if ((i + 1) % 2 != 0) prod = -prod;
    lhs += prod * barnes.evaluate(Rational(d[static_cast<std::size_t>(i - 1)]));
  }
  rep.literal_lhs = lhs;
  rep.literal_rhs = mfact * dprod * (p % 2 == 0 ? 1 : -1);
  rep.literal_equal = rep.literal_lhs == rep.literal_rhs;
  return rep;
}

namespace {

bool near_pole(Complex z, long poles, double guard) {
  for (long k = 1; k <= poles; ++k) {
    if (std::abs(z - static_cast<double>(k)) <= guard) return true;
  }
  return false;
}

}  // namespace

CiReport check_ci_identity(const WeightSeq& a, double w, const std::vector<Complex>& z_samples, const EvalConfig& cfg) {
  if (!(w > 0.0)) throw std::invalid_argument("check_ci_identity requires w > 0");
  const long r = static_cast<long>(a.size());
  const long period = a.period();
  const long top = period * r - a.sum();
  std::vector<double> f;
  for (long n = 0; n <= top; ++n) f.push_back(to_double(bounded_denumerant(a, n)));
  const ZetaFunction barnes(HilbertSeries::free(a));

  CiReport rep;
  for (const auto& z : z_samples) {
    if (near_pole(z, r, cfg.pole_guard)) continue;
    Complex lhs = 0.0;
    for (long n = 0; n <= top; ++n) {
      if (f[static_cast<std::size_t>(n)] != 0.0) lhs += f[static_cast<std::size_t>(n)] * std::exp(-z * std::log(n + w));
    }
    Complex rhs = 0.0;
    for (long j = 0; j <= r; ++j) {
      const double sign = j % 2 == 0 ? 1.0 : -1.0;
      rhs += sign * to_double(binomial(r, j)) * barnes.closed(z, w + static_cast<double>(period * j), cfg);
    }
    rep.max_deviation = std::max(rep.max_deviation, std::abs(lhs - rhs));
    ++rep.samples_used;
  }
  return rep;
}

Rational samuel_multiplicity(const HilbertSeries& graded) {
  const long m = dimension(graded);
  if (m == 0) throw std::domain_error("Hilbert-Samuel multiplicity needs dim >= 1");
  const ResidueTable iterated = iterated_residues_limit(graded, 1);
  return Rational(factorial(static_cast<unsigned long>(m))) * iterated.at(m + 1)[0];
}

namespace {

HilbertSeries hypersurface(std::vector<long> weights, long degree) {
  return regular_quotient(HilbertSeries::free(WeightSeq(std::move(weights))), degree);
}

HilbertSeries complete_intersection(std::vector<long> weights, const std::vector<long>& degrees) {
  HilbertSeries s = HilbertSeries::free(WeightSeq(std::move(weights)));
  for (long k : degrees) s = regular_quotient(s, k);
  return s;
}

NamedSeries from_betti(std::string name, std::vector<long> weights, std::vector<BettiEntry> entries) {
  WeightSeq w(std::move(weights));
  BettiTable betti(std::move(entries));
  HilbertSeries s = series_from_betti(w, betti);
  return {std::move(name), std::move(s), std::move(betti)};
}

}  // namespace

HilbertSeries disambiguation_series() {
  // (3 - t)/(1 - t)^2 = sum (2n + 3) t^n
  return HilbertSeries(WeightSeq({1, 1}), RatPolynomial::from_integers({3, -1}));
}

std::vector<NamedSeries> series_suite() {
  std::vector<NamedSeries> suite;
  for (const auto& w : std::vector<std::vector<long>>{{1}, {1, 1}, {2, 3}, {1, 2}, {1, 1, 1}, {2, 3, 5}, {1, 2, 3, 4}, {3, 4}, {2, 2, 3}, {1, 1, 1, 1}}) {
    std::string name = "free(";
    for (std::size_t i = 0; i < w.size(); ++i) name += (i ? "," : "") + std::to_string(w[i]);
    suite.push_back({name + ")", HilbertSeries::free(WeightSeq(w)), BettiTable({{0, 0, 1}})});
  }
  suite.push_back({"free(2,3)(-2)", shift(HilbertSeries::free(WeightSeq({2, 3})), 2), BettiTable({{0, 2, 1}})});
  suite.push_back({"free(1,2)(-3)", shift(HilbertSeries::free(WeightSeq({1, 2})), 3), BettiTable({{0, 3, 1}})});
  suite.push_back({"free(1,1,1)(-5)", shift(HilbertSeries::free(WeightSeq({1, 1, 1})), 5), BettiTable({{0, 5, 1}})});
  suite.push_back(from_betti("example24", {2, 3}, {{0, 0, 1}, {1, 6, 1}}));
  suite.push_back({"cubic(1,1,1)", hypersurface({1, 1, 1}, 3), BettiTable({{0, 0, 1}, {1, 3, 1}})});
  suite.push_back({"hyper(1,2,3,4;4)", hypersurface({1, 2, 3, 4}, 4), BettiTable({{0, 0, 1}, {1, 4, 1}})});
  suite.push_back({"ci(2,3,5;5,6)", complete_intersection({2, 3, 5}, {5, 6}), BettiTable({{0, 0, 1}, {1, 5, 1}, {1, 6, 1}, {2, 11, 1}})});
  suite.push_back(from_betti("(x,y)^2 in K[x,y,z]", {1, 1, 1}, {{0, 0, 1}, {1, 2, 3}, {2, 3, 2}}));
  suite.push_back(from_betti("ci(1,2;3,4)", {1, 2}, {{0, 0, 1}, {1, 3, 1}, {1, 4, 1}, {2, 7, 1}}));
  suite.push_back(from_betti("twisted-pair(1,1,2)", {1, 1, 2}, {{0, 0, 2}, {1, 4, 1}}));
  suite.push_back(from_betti("mixed(2,5)", {2, 5}, {{0, 0, 1}, {0, 1, 1}, {1, 10, 1}}));
  suite.push_back({"S(1,1)+S(1,1)(-1)", direct_sum(HilbertSeries::free(WeightSeq({1, 1})), shift(HilbertSeries::free(WeightSeq({1, 1})), 1)),
                   BettiTable({{0, 0, 1}, {0, 1, 1}})});
  suite.push_back({"hilbert 2n+3", disambiguation_series(), std::nullopt});
  return suite;
}

std::vector<NamedSeries> standard_graded_suite() {
  std::vector<NamedSeries> suite;
  for (long r = 1; r <= 4; ++r) {
    suite.push_back({"S_" + std::to_string(r), HilbertSeries::free(WeightSeq(std::vector<long>(static_cast<std::size_t>(r), 1L))),
                     BettiTable({{0, 0, 1}})});
  }
  for (long d = 2; d <= 8; ++d) {
    suite.push_back({"K[x,y]/(f), deg f = " + std::to_string(d), hypersurface({1, 1}, d), BettiTable({{0, 0, 1}, {1, d, 1}})});
  }
  suite.push_back({"K[x,y,z]/(f), deg f = 3", hypersurface({1, 1, 1}, 3), BettiTable({{0, 0, 1}, {1, 3, 1}})});
  suite.push_back({"ci(2,3) in 4 vars", complete_intersection({1, 1, 1, 1}, {2, 3}), BettiTable({{0, 0, 1}, {1, 2, 1}, {1, 3, 1}, {2, 5, 1}})});
  suite.push_back({"ci(2,2,2) in 4 vars", complete_intersection({1, 1, 1, 1}, {2, 2, 2}),
                   BettiTable({{0, 0, 1}, {1, 2, 3}, {2, 4, 3}, {3, 6, 1}})});
  suite.push_back(from_betti("(x,y)^2 in K[x,y,z]", {1, 1, 1}, {{0, 0, 1}, {1, 2, 3}, {2, 3, 2}}));
  suite.push_back({"hilbert 2n+3", disambiguation_series(), std::nullopt});
  return suite;
}

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

std::vector<Complex> rect_grid(double re_lo, double re_hi, double im_lo, double im_hi, double step) {
  std::vector<Complex> pts;
  for (double re = re_lo; re <= re_hi + 1e-12; re += step) {
    for (double im = im_lo; im <= im_hi + 1e-12; im += step) pts.emplace_back(re, im);
  }
  return pts;
}

Complex random_point(std::mt19937_64& rng, long avoid_up_to) {
  std::uniform_real_distribution<double> re(-1.0, 4.0), im(-3.0, 3.0);
  for (;;) {
    Complex z(re(rng), im(rng));
    bool ok = true;
    for (long k = 1; k <= avoid_up_to; ++k) ok = ok && std::abs(z - static_cast<double>(k)) > 0.05;
    if (ok) return z;
  }
}

CheckReport example24_suite(const EvalConfig& cfg) {
  CheckReport rep{"example24", false, 0.0, {}};
  const HilbertSeries series = series_from_betti(WeightSeq({2, 3}), BettiTable({{0, 0, 1}, {1, 6, 1}}));
  const ZetaFunction zeta(series);
  std::size_t points = 0;
  for (double w : {0.5, 1.0, 2.25}) {
    for (const auto& z : rect_grid(-2.0, 4.0, -3.0, 3.0, 0.5)) {
      if (std::abs(z - 1.0) <= cfg.pole_guard) continue;
      const Complex expected = std::exp(-z * std::log(w)) + hurwitz_zeta(z, w + 2.0, cfg);
      rep.max_deviation = std::max(rep.max_deviation, std::abs(zeta.closed(z, w, cfg) - expected));
      ++points;
    }
  }
  const long alpha = zeta.quasi().alpha;
  rep.passed = rep.max_deviation <= 1e-9 && alpha == 2;
  rep.notes.push_back("grid points: " + std::to_string(points * 1) + ", tolerance 1e-9");
  rep.notes.push_back("alpha(R) = " + std::to_string(alpha) + ", a(R) = " + std::to_string(a_invariant(series)) +
                      "; alpha(R) = 1 is ruled out since q(1) = 1 != 0 = H(R,1)");
  return rep;
}

CheckReport example23_suite(const EvalConfig& cfg) {
  CheckReport rep{"example23", true, 0.0, {}};
  const WeightSeq a({2, 3});
  const long top = a.period() * static_cast<long>(a.size()) - a.sum();
  std::vector<long> support;
  Integer total = 0;
  for (long n = 0; n <= top + 3; ++n) {
    const Integer f = bounded_denumerant(a, n);
    total += f;
    if (f != 0) support.push_back(n);
    if (f != 0 && f != 1) rep.passed = false;
    if (n <= top && f != bounded_denumerant(a, top - n)) rep.passed = false;
  }
  if (support != std::vector<long>{0, 2, 3, 4, 5, 7}) rep.passed = false;
  if (total != 6) rep.passed = false;
  const auto ci = check_ci_identity(a, 1.0, rect_grid(-2.0, 4.0, -3.0, 3.0, 0.5), cfg);
  rep.max_deviation = ci.max_deviation;
  rep.passed = rep.passed && ci.max_deviation <= 1e-9;
  rep.notes.push_back("f_(2,3) support {0,2,3,4,5,7}, reciprocal of degree " + std::to_string(top));
  rep.notes.push_back("identity samples: " + std::to_string(ci.samples_used) + ", tolerance 1e-9");
  return rep;
}

CheckReport pure_suite() {
  CheckReport rep{"pure", true, 0.0, {}};
  std::size_t cases = 0, literal_ok = 0;
  for (long r = 2; r <= 6; ++r) {
    for (long m = 1; m <= r - 1; ++m) {
      const long p = r - m;
      // all strictly increasing p-subsets of {1..12}
      std::vector<long> d(static_cast<std::size_t>(p));
      for (long i = 0; i < p; ++i) d[static_cast<std::size_t>(i)] = i + 1;
      for (;;) {
        const auto report = check_pure_identity({r, m, d});
        ++cases;
        if (!report.robust_equal) {
          rep.passed = false;
          rep.max_deviation = std::max(rep.max_deviation,
                                       std::abs(to_double(report.residue_route - report.multiplicity_formula)));
        }
        if (report.literal_equal) ++literal_ok;
        long i = p - 1;
        while (i >= 0 && d[static_cast<std::size_t>(i)] == 12 - (p - 1 - i)) --i;
        if (i < 0) break;
        ++d[static_cast<std::size_t>(i)];
        for (long j = i + 1; j < p; ++j) d[static_cast<std::size_t>(j)] = d[static_cast<std::size_t>(j - 1)] + 1;
      }
    }
  }
  rep.notes.push_back("cases: " + std::to_string(cases) + " (exact rational comparison)");
  rep.notes.push_back("displayed identity with d_0 = 0 holds in " + std::to_string(literal_ok) + " of " +
                      std::to_string(cases) + " cases");
  return rep;
}

CheckReport shift_suite(const EvalConfig& cfg) {
  CheckReport rep{"shift", false, 0.0, {}};
  const auto suite = series_suite();
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<std::size_t> pick(0, suite.size() - 1);
  std::uniform_int_distribution<long> kdist(1, 8);
  std::uniform_real_distribution<double> wdist(0.1, 3.0);
  for (int trial = 0; trial < 50; ++trial) {
    const auto& s = suite[pick(rng)].series;
    const long k = kdist(rng);
    const double w = wdist(rng);
    const Complex z = random_point(rng, 6);
    const Complex lhs = zeta_closed(shift(s, k), z, w, cfg);
    const Complex rhs = zeta_closed(s, z, w + static_cast<double>(k), cfg);
    rep.max_deviation = std::max(rep.max_deviation, std::abs(lhs - rhs));
  }
  rep.passed = rep.max_deviation <= 1e-8;
  rep.notes.push_back("50 random instances of zeta_{M(-k)}(z,w) = zeta_M(z,w+k), tolerance 1e-8");
  return rep;
}

CheckReport additivity_suite(const EvalConfig& cfg) {
  CheckReport rep{"additivity", false, 0.0, {}};
  const auto suite = series_suite();
  std::mt19937_64 rng(777);
  std::uniform_int_distribution<std::size_t> pick(0, suite.size() - 1);
  std::uniform_int_distribution<long> kdist(1, 6);
  std::uniform_real_distribution<double> wdist(0.1, 3.0);
  double add = 0.0, quot = 0.0, incl = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const auto& s1 = suite[pick(rng)].series;
    const HilbertSeries s2 = shift(HilbertSeries::free(s1.weights()), kdist(rng));
    const double w = wdist(rng);
    const Complex z = random_point(rng, 6);
    add = std::max(add, std::abs(zeta_closed(direct_sum(s1, s2), z, w, cfg) - zeta_closed(s1, z, w, cfg) -
                                 zeta_closed(s2, z, w, cfg)));

    const long k = kdist(rng);
    quot = std::max(quot, std::abs(zeta_closed(regular_quotient(s1, k), z, w, cfg) - zeta_closed(s1, z, w, cfg) +
                                   zeta_closed(s1, z, w + static_cast<double>(k), cfg)));

    // regular sequence of length 2 or 3 on the free module over the same weights
    const HilbertSeries base = HilbertSeries::free(s1.weights());
    std::vector<long> degs(1 + trial % 2 + 1);
    for (auto& dg : degs) dg = kdist(rng);
    HilbertSeries quotient = base;
    for (long dg : degs) quotient = regular_quotient(quotient, dg);
    const ZetaFunction zb(base);
    Complex alt = 0.0;
    for (unsigned mask = 0; mask < (1u << degs.size()); ++mask) {
      long total = 0;
      int bits = 0;
      for (std::size_t b = 0; b < degs.size(); ++b) {
        if (mask & (1u << b)) {
          total += degs[b];
          ++bits;
        }
      }
      alt += (bits % 2 == 0 ? 1.0 : -1.0) * zb.closed(z, w + static_cast<double>(total), cfg);
    }
    incl = std::max(incl, std::abs(zeta_closed(quotient, z, w, cfg) - alt));
  }
  rep.max_deviation = std::max({add, quot, incl});
  rep.passed = rep.max_deviation <= 1e-8;
  rep.notes.push_back("direct sum: " + fmt(add) + ", regular quotient: " + fmt(quot) + ", inclusion-exclusion: " + fmt(incl));
  rep.notes.push_back("50 random instances each, tolerance 1e-8");
  return rep;
}

CheckReport ci_suite(const EvalConfig& cfg) {
  CheckReport rep{"ci", false, 0.0, {}};
  const auto grid = rect_grid(-2.0, 4.0, -3.0, 3.0, 0.5);
  for (const auto& a : std::vector<std::vector<long>>{{2, 3}, {1, 2, 4}, {2, 2, 3}}) {
    for (double w : {0.7, 1.0, 3.0}) {
      const auto ci = check_ci_identity(WeightSeq(a), w, grid, cfg);
      rep.max_deviation = std::max(rep.max_deviation, ci.max_deviation);
    }
  }
  rep.passed = rep.max_deviation <= 1e-8;
  rep.notes.push_back("a in {(2,3),(1,2,4),(2,2,3)}, w in {0.7,1,3}, tolerance 1e-8");
  return rep;
}

}  // namespace

const std::vector<std::string>& check_suite_names() {
  static const std::vector<std::string> names{"example23", "example24", "pure", "shift", "additivity", "ci"};
  return names;
}

CheckReport run_check_suite(const std::string& name, const EvalConfig& cfg) {
  if (name == "example24") return example24_suite(cfg);
  if (name == "example23") return example23_suite(cfg);
  if (name == "pure") return pure_suite();
  if (name == "shift") return shift_suite(cfg);
  if (name == "additivity") return additivity_suite(cfg);
  if (name == "ci") return ci_suite(cfg);
  throw std::invalid_argument("unknown check suite '" + name + "'");
}

}  // namespace gzeta
