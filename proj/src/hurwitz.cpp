#include "gzeta/hurwitz.hpp"

#include "gzeta/bernoulli.hpp"

#include <quadmath.h>

#include <cmath>
#include <cstdlib>
#include <vector>

namespace gzeta {

EvalConfig EvalConfig::from_environment() {
  EvalConfig cfg;
  if (const char* tol = std::getenv("GRADED_ZETA_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(tol, &end);
    if (end == tol || *end != '\0' || !(v > 0.0)) throw std::invalid_argument("GRADED_ZETA_TOL must be a positive number");
    cfg.target_abs_tol = v;
  }
  return cfg;
}

void EvalConfig::validate() const {
  if (!(target_abs_tol > 0.0) || euler_maclaurin_terms < 1 || min_offset < 1 || !(pole_guard > 0.0))
    throw std::invalid_argument("evaluation parameters must be positive");
}

PoleError::PoleError(const std::string& what, long pole, double residue, std::string exact_residue)
    : std::domain_error(what), pole_(pole), residue_(residue), exact_residue_(std::move(exact_residue)) {}

namespace {

// Two-part split keeps the 64-bit mantissa of long double.
long double to_long_double(const Integer& v) {
  const double hi = v.get_d();
  const double lo = Integer(v - Integer(hi)).get_d();
  return static_cast<long double>(hi) + static_cast<long double>(lo);
}

__float128 to_quad(const Integer& v) {
  __float128 acc = 0;
  Integer rest = v;
  for (int part = 0; part < 3; ++part) {
    const double d = rest.get_d();
    acc += d;
    rest -= Integer(d);
  }
  return acc;
}

// B_{2j} / (2j)! for j = 1..count
const std::vector<long double>& em_coefficients(int count) {
  static const std::vector<long double> table = [] {
    constexpr unsigned kMax = 40;
    const auto b = bernoulli_numbers(2 * kMax);
    std::vector<long double> t;
    for (unsigned j = 1; j <= kMax; ++j) {
      const Rational c = b[2 * j] / Rational(factorial(2 * j));
      t.push_back(to_long_double(c.get_num()) / to_long_double(c.get_den()));
    }
    return t;
  }();
  if (count > static_cast<int>(table.size())) throw std::invalid_argument("too many Euler-Maclaurin terms");
  return table;
}

const std::vector<__float128>& em_coefficients_quad(int count) {
  static const std::vector<__float128> table = [] {
    constexpr unsigned kMax = 40;
    const auto b = bernoulli_numbers(2 * kMax);
    std::vector<__float128> t;
    for (unsigned j = 1; j <= kMax; ++j) {
      const Rational c = b[2 * j] / Rational(factorial(2 * j));
      t.push_back(to_quad(c.get_num()) / to_quad(c.get_den()));
    }
    return t;
  }();
  if (count > static_cast<int>(table.size())) throw std::invalid_argument("too many Euler-Maclaurin terms");
  return table;
}

struct EmResult {
  Complex value;
  double last = 0.0;  // size of the final correction term
};

// Euler-Maclaurin with head sum over n < n_offset, in long double.
EmResult em_wide(Complex z, double w, long n_offset, int terms) {
  using Wide = std::complex<long double>;
  const auto& coef = em_coefficients(terms);
  const Wide zl(z.real(), z.imag());
  Wide head = 0.0L;
  for (long n = n_offset - 1; n >= 0; --n) head += std::exp(-zl * std::log(static_cast<long double>(n) + w));
  const long double x = static_cast<long double>(n_offset) + w;
  const Wide x_mz = std::exp(-zl * std::log(x));  // x^{-z}
  Wide tail = x_mz * x / (zl - 1.0L) + 0.5L * x_mz;
  Wide poch = zl;        // (z)_{2j-1}
  Wide xpow = x_mz / x;  // x^{-z-2j+1}
  Wide last = 0.0L;
  for (int j = 1; j <= terms; ++j) {
    last = coef[static_cast<std::size_t>(j - 1)] * poch * xpow;
    tail += last;
    const long double k = 2.0L * j;
    poch *= (zl + (k - 1.0L)) * (zl + k);
    xpow /= x * x;
  }
  const Wide v = head + tail;
  return {Complex(static_cast<double>(v.real()), static_cast<double>(v.imag())), static_cast<double>(std::abs(last))};
}

// Same in binary128, for Re z << 0 where the head grows like N^{1 - Re z}
// and cancels against the tail.
EmResult em_quad(Complex z, double w, long n_offset, int terms) {
  const auto& coef = em_coefficients_quad(terms);
  __complex128 zq;
  __real__ zq = z.real();
  __imag__ zq = z.imag();
  __complex128 head = 0;
  for (long n = n_offset - 1; n >= 0; --n) head += cexpq(-zq * clogq(static_cast<__float128>(n) + w));
  const __float128 x = static_cast<__float128>(n_offset) + w;
  const __complex128 x_mz = cexpq(-zq * logq(x));
  __complex128 tail = x_mz * x / (zq - 1) + x_mz / 2;
  __complex128 poch = zq;
  __complex128 xpow = x_mz / x;
  __complex128 last = 0;
  for (int j = 1; j <= terms; ++j) {
    last = coef[static_cast<std::size_t>(j - 1)] * poch * xpow;
    tail += last;
    const __float128 k = 2 * j;
    poch *= (zq + (k - 1)) * (zq + k);
    xpow /= x * x;
  }
  const __complex128 v = head + tail;
  return {Complex(static_cast<double>(crealq(v)), static_cast<double>(cimagq(v))), static_cast<double>(cabsq(last))};
}

}  // namespace

Complex hurwitz_zeta(Complex z, double w, const EvalConfig& cfg) {
  if (!(w > 0.0)) throw std::invalid_argument("Hurwitz zeta requires w > 0");
  if (std::abs(z - 1.0) <= cfg.pole_guard) throw PoleError("pole of Hurwitz zeta", 1, 1.0, "1");
  const int terms = cfg.euler_maclaurin_terms;
  double reach = std::max(static_cast<double>(cfg.min_offset), 2.0 * std::abs(z));
  for (int attempt = 0;; ++attempt) {
    const long n_offset = std::max(0L, static_cast<long>(std::ceil(reach - w)));
    const double x = static_cast<double>(n_offset) + w;
    // long double keeps ~1e-19 relative on the head; switch once the head
    // magnitude would cost more than ~1e-13 absolute
    const double head_log10 = (1.0 - z.real()) * std::log10(x);
    const EmResult r = head_log10 > 6.0 ? em_quad(z, w, n_offset, terms) : em_wide(z, w, n_offset, terms);
    if (r.last <= cfg.target_abs_tol * std::max(1.0, std::abs(r.value)) || attempt >= 6) return r.value;
    reach *= 2.0;
  }
}

}  // namespace gzeta
