// gzeta: command-line front end for graded-module zeta computations.
// Results are JSON documents on stdout; `grid` writes CSV to a file.

#include "gzeta/kernels.hpp"
#include "gzeta/spec_io.hpp"
#include "gzeta/verify.hpp"
#include "gzeta/zeta.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace {

using gzeta::Complex;
using nlohmann::json;

constexpr int kExitFailedCheck = 1;
constexpr int kExitParse = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_spec_text(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) throw gzeta::SpecError("cannot open spec file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

double parse_number(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw UsageError("malformed " + what + " '" + s + "'");
  }
  if (used != s.size()) throw UsageError("malformed " + what + " '" + s + "'");
  return v;
}

Complex parse_complex(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos) return {parse_number(s, "--z"), 0.0};
  return {parse_number(s.substr(0, comma), "--z"), parse_number(s.substr(comma + 1), "--z")};
}

struct Range {
  double lo, hi, step;
};

Range parse_range(const std::string& s, const std::string& what) {
  auto a = s.find(':');
  auto b = s.find(':', a == std::string::npos ? a : a + 1);
  if (a == std::string::npos || b == std::string::npos) throw UsageError(what + " must be LO:HI:STEP");
  Range r{parse_number(s.substr(0, a), what), parse_number(s.substr(a + 1, b - a - 1), what),
          parse_number(s.substr(b + 1), what)};
  if (!(r.step > 0.0) || r.hi < r.lo) throw UsageError(what + " needs LO <= HI and STEP > 0");
  return r;
}

std::vector<double> range_points(const Range& r) {
  std::vector<double> pts;
  const long count = static_cast<long>(std::floor((r.hi - r.lo) / r.step + 1e-9));
  for (long i = 0; i <= count; ++i) pts.push_back(r.lo + static_cast<double>(i) * r.step);
  return pts;
}

json complex_json(Complex v) { return {{"re", gzeta::format_double(v.real())}, {"im", gzeta::format_double(v.imag())}}; }

json vector_strings(const std::vector<gzeta::Rational>& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(gzeta::to_string(q));
  return out;
}

struct Loaded {
  gzeta::ModuleSpecDoc doc;
  gzeta::HilbertSeries series;
};

Loaded load(const std::string& path) {
  auto doc = gzeta::parse_module_spec_text(read_spec_text(path));
  try {
    auto series = gzeta::build_series(doc);
    return {std::move(doc), std::move(series)};
  } catch (const std::invalid_argument& e) {
    throw gzeta::SpecError(e.what());
  }
}

json result_doc(const std::string& op, const json& input) { return {{"operation", op}, {"input", input}}; }

/// Residues of sum_j h_j zeta_a(z, w + j) read off the numerator h.
gzeta::ResidueTable numerator_route(const gzeta::HilbertSeries& s) {
  std::vector<std::pair<gzeta::Rational, long>> terms;
  const auto& c = s.numerator().coefficients();
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] != 0) terms.emplace_back(c[j], static_cast<long>(j));
  }
  return gzeta::residues_from_shifts(s.weights(), terms);
}

void print(const json& doc) { std::cout << doc.dump(2) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zeta-Barnes type functions of graded modules"};
  app.require_subcommand(1);

  std::string spec_path;
  long n_value = 0;

  auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert function values H(M, 0..N)");
  hilbert_cmd->add_option("--spec", spec_path, "module description (JSON, '-' for stdin)")->required();
  hilbert_cmd->add_option("--n", n_value, "largest degree")->required()->check(CLI::NonNegativeNumber);

  auto* quasi_cmd = app.add_subcommand("quasipoly", "period, alpha and coefficient table of the quasi-polynomial");
  quasi_cmd->add_option("--spec", spec_path)->required();

  std::string z_text, w_text;
  bool direct = false, limit = false;
  auto* eval_cmd = app.add_subcommand("eval", "evaluate zeta_M(z, w)");
  eval_cmd->add_option("--spec", spec_path)->required();
  eval_cmd->add_option("--z", z_text, "RE[,IM]")->required();
  eval_cmd->add_option("--w", w_text, "shift parameter w > 0");
  eval_cmd->add_flag("--direct", direct, "also report the direct-summation oracle");
  eval_cmd->add_flag("--limit", limit, "evaluate zeta_M(z) instead of zeta_M(z, w)");

  bool betti_route = false;
  long iterate_count = 0;
  auto* res_cmd = app.add_subcommand("residues", "exact residue table");
  res_cmd->add_option("--spec", spec_path)->required();
  res_cmd->add_option("--w", w_text, "specialize w (rational, e.g. 1/2)");
  res_cmd->add_flag("--limit", limit, "residues of zeta_M(z)");
  res_cmd->add_flag("--betti-route", betti_route, "use the Bernoulli-Barnes formula");
  res_cmd->add_option("--iterate", iterate_count, "iterated Hilbert function index")->check(CLI::NonNegativeNumber);

  bool samuel = false;
  auto* mult_cmd = app.add_subcommand("mult", "multiplicity and Hilbert coefficients");
  mult_cmd->add_option("--spec", spec_path)->required();
  mult_cmd->add_flag("--samuel", samuel, "treat the series as gr_I(M) and report e(M, I)");

  std::string a_text;
  bool bounded = false;
  auto* part_cmd = app.add_subcommand("partition", "restricted partition function p_a(n)");
  part_cmd->add_option("--a", a_text, "comma-separated weights")->required();
  part_cmd->add_option("--n", n_value)->required()->check(CLI::NonNegativeNumber);
  part_cmd->add_flag("--bounded", bounded, "bounded denumerant f_a(n)");

  std::string suite;
  auto* check_cmd = app.add_subcommand("check", "run an identity suite");
  check_cmd->add_option("--suite", suite)->required()->check(CLI::IsMember(gzeta::check_suite_names()));

  std::string re_text, im_text, out_path;
  auto* grid_cmd = app.add_subcommand("grid", "CSV of |zeta_M| and arg over a rectangle");
  grid_cmd->add_option("--spec", spec_path)->required();
  grid_cmd->add_option("--w", w_text)->required();
  grid_cmd->add_option("--re", re_text, "LO:HI:STEP")->required();
  grid_cmd->add_option("--im", im_text, "LO:HI:STEP")->required();
  grid_cmd->add_option("--out", out_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    const auto cfg = gzeta::EvalConfig::from_environment();

    if (*hilbert_cmd) {
      const auto loaded = load(spec_path);
      const auto ex = gzeta::expand(loaded.series, n_value);
      json doc = result_doc("hilbert", gzeta::to_json(loaded.doc));
      json values = json::array();
      for (const auto& v : ex.values) values.push_back(gzeta::to_string(v));
      doc["values"] = values;
      doc["module_series"] = !ex.has_negative;
      print(doc);
    } else if (*quasi_cmd) {
      const auto loaded = load(spec_path);
      json doc = result_doc("quasipoly", gzeta::to_json(loaded.doc));
      doc["quasi_polynomial"] = gzeta::quasi_polynomial_json(gzeta::quasi_polynomial(loaded.series));
      doc["dimension"] = gzeta::dimension(loaded.series);
      doc["a_invariant"] = gzeta::a_invariant(loaded.series);
      print(doc);
    } else if (*eval_cmd) {
      const auto loaded = load(spec_path);
      const Complex z = parse_complex(z_text);
      const gzeta::ZetaFunction zeta(loaded.series);
      json doc = result_doc("eval", gzeta::to_json(loaded.doc));
      doc["z"] = complex_json(z);
      doc["tolerance"] = gzeta::format_double(cfg.target_abs_tol);
      Complex value;
      if (limit) {
        value = zeta.limit(z, cfg);
      } else {
        if (w_text.empty()) throw UsageError("eval needs --w unless --limit is given");
        const double w = parse_number(w_text, "--w");
        doc["w"] = gzeta::format_double(w);
        value = zeta.closed(z, w, cfg);
      }
      doc["value"] = complex_json(value);
      if (direct) {
        const Complex oracle = limit ? gzeta::zeta_direct_limit(loaded.series, z)
                                     : gzeta::zeta_direct(loaded.series, z, parse_number(w_text, "--w"));
        doc["direct"] = complex_json(oracle);
        doc["difference"] = gzeta::format_double(std::abs(value - oracle));
      }
      print(doc);
    } else if (*res_cmd) {
      const auto loaded = load(spec_path);
      gzeta::HilbertSeries series = iterate_count > 0 ? gzeta::iterate(loaded.series, iterate_count) : loaded.series;
      gzeta::ResidueTable table;
      std::string route;
      if (betti_route) {
        const auto betti = iterate_count == 0 ? gzeta::plain_betti_table(loaded.doc) : std::nullopt;
        table = betti ? gzeta::residues_betti(series.weights(), *betti) : numerator_route(series);
        if (limit) table = table.specialized(0);
        route = "bernoulli-barnes";
      } else {
        table = limit ? gzeta::residues_limit(series) : gzeta::residues_closed(series);
        route = limit ? "quasi-polynomial (limit)" : "quasi-polynomial";
      }
      json doc = result_doc("residues", gzeta::to_json(loaded.doc));
      doc["route"] = route;
      doc["iterate"] = iterate_count;
      if (!w_text.empty()) {
        const auto w = gzeta::parse_rational(w_text);
        doc["w"] = gzeta::to_string(w);
        table = table.specialized(w);
      }
      doc["table"] = gzeta::residue_table_json(table, "w");
      print(doc);
    } else if (*mult_cmd) {
      const auto loaded = load(spec_path);
      const auto& s = loaded.series;
      const long m = gzeta::dimension(s);
      const auto mult = gzeta::multiplicity(s);
      const auto quasi = gzeta::quasi_polynomial(s);
      const gzeta::Rational mfact(gzeta::factorial(static_cast<unsigned long>(m - 1)));
      json doc = result_doc("mult", gzeta::to_json(loaded.doc));
      doc["dimension"] = m;
      doc["e"] = gzeta::to_string(mult.e);
      doc["e_k"] = vector_strings(mult.e_k);
      doc["leading_coefficient_route"] = gzeta::to_string(mfact * quasi.coefficient(m - 1, 0));
      doc["residue_route"] = gzeta::to_string(mfact * gzeta::residues_limit(quasi).at(m)[0]);
      doc["iterated_residue_route"] =
          gzeta::to_string(gzeta::Rational(gzeta::factorial(static_cast<unsigned long>(m))) *
                           gzeta::iterated_residues_limit(s, 1).at(m + 1)[0]);
      if (samuel) doc["samuel_multiplicity"] = gzeta::to_string(gzeta::samuel_multiplicity(s));
      print(doc);
    } else if (*part_cmd) {
      std::vector<long> weights;
      std::stringstream ss(a_text);
      for (std::string item; std::getline(ss, item, ',');) weights.push_back(static_cast<long>(parse_number(item, "--a")));
      const gzeta::WeightSeq a(weights);
      json doc = result_doc("partition", {{"a", weights}, {"n", n_value}, {"bounded", bounded}});
      doc["value"] = gzeta::to_string(bounded ? gzeta::bounded_denumerant(a, n_value) : gzeta::restricted_partition(a, n_value));
      print(doc);
    } else if (*check_cmd) {
      const auto rep = gzeta::run_check_suite(suite, cfg);
      json doc = result_doc("check", {{"suite", suite}});
      doc["status"] = rep.passed ? "PASS" : "FAIL";
      doc["max_deviation"] = gzeta::format_double(rep.max_deviation);
      doc["notes"] = rep.notes;
      print(doc);
      return rep.passed ? 0 : kExitFailedCheck;
    } else if (*grid_cmd) {
      const auto loaded = load(spec_path);
      const double w = parse_number(w_text, "--w");
      const auto re = range_points(parse_range(re_text, "--re"));
      const auto im = range_points(parse_range(im_text, "--im"));
      std::vector<Complex> points;
      for (double x : re) {
        for (double y : im) points.emplace_back(x, y);
      }
      const gzeta::ZetaFunction zeta(loaded.series);
      const auto values = gzeta::kernels::evaluate_grid(zeta, points, w, cfg);
      std::ofstream out(out_path);
      if (!out) throw UsageError("cannot write '" + out_path + "'");
      out << "re,im,abs,arg\r\n";
      std::size_t failed = 0;
      for (const auto& g : values) {
        out << gzeta::format_double(g.z.real()) << ',' << gzeta::format_double(g.z.imag()) << ',';
        if (g.ok) {
          out << gzeta::format_double(std::abs(g.value)) << ',' << gzeta::format_double(std::arg(g.value));
        } else {
          ++failed;
          out << ',';
        }
        out << "\r\n";
      }
      json doc = result_doc("grid", gzeta::to_json(loaded.doc));
      doc["points"] = values.size();
      doc["skipped"] = failed;
      doc["out"] = out_path;
      print(doc);
    }
  } catch (const gzeta::PoleError& e) {
    json err{{"error", "pole"},
             {"message", e.what()},
             {"pole", e.pole()},
             {"residue", gzeta::format_double(e.residue())},
             {"exact_residue", e.exact_residue()}};
    std::cerr << err.dump() << '\n';
    return kExitFailedCheck;
  } catch (const gzeta::SpecError& e) {
    std::cerr << json{{"error", "parse"}, {"message", e.what()}}.dump() << '\n';
    return kExitParse;
  } catch (const UsageError& e) {
    std::cerr << json{{"error", "usage"}, {"message", e.what()}}.dump() << '\n';
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "evaluation"}, {"message", e.what()}}.dump() << '\n';
    return kExitFailedCheck;
  }
  return 0;
}
