#include "gzeta/spec_io.hpp"

#include <cstdio>

namespace gzeta {

using nlohmann::json;

namespace {

long integer_field(const json& v, const std::string& what) {
  if (!v.is_number_integer()) throw SpecError(what + " must be an integer");
  return v.get<long>();
}

std::vector<long> integer_list(const json& v, const std::string& what) {
  if (!v.is_array()) throw SpecError(what + " must be an array of integers");
  std::vector<long> out;
  for (const auto& x : v) out.push_back(integer_field(x, what + " entry"));
  return out;
}

}  // namespace

ModuleSpecDoc parse_module_spec(const json& doc) {
  if (!doc.is_object()) throw SpecError("module description must be a JSON object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "weights" && key != "numerator" && key != "betti" && key != "shift" && key != "regular_degrees" &&
        key != "iterate")
      throw SpecError("unknown field '" + key + "'");
  }
  ModuleSpecDoc spec;
  if (!doc.contains("weights")) throw SpecError("missing field 'weights'");
  spec.weights = integer_list(doc["weights"], "weights");
  if (spec.weights.empty()) throw SpecError("weights must be nonempty");
  for (long a : spec.weights) {
    if (a < 1) throw SpecError("weights must be positive");
  }

  const bool has_num = doc.contains("numerator");
  const bool has_betti = doc.contains("betti");
  if (has_num == has_betti) throw SpecError("exactly one of 'numerator' and 'betti' is required");
  if (has_num) spec.numerator = integer_list(doc["numerator"], "numerator");
  if (has_betti) {
    const auto& rows = doc["betti"];
    if (!rows.is_array()) throw SpecError("betti must be an array of [i, j, beta] triples");
    std::vector<BettiEntry> entries;
    for (const auto& row : rows) {
      const auto triple = integer_list(row, "betti triple");
      if (triple.size() != 3) throw SpecError("betti entries must be [i, j, beta] triples");
      entries.push_back({static_cast<int>(triple[0]), triple[1], Integer(triple[2])});
    }
    try {
      BettiTable check(entries);
    } catch (const std::invalid_argument& e) {
      throw SpecError(e.what());
    }
    spec.betti = std::move(entries);
  }
  if (doc.contains("shift")) {
    spec.shift = integer_field(doc["shift"], "shift");
    if (spec.shift < 0) throw SpecError("shift must be nonnegative");
  }
  if (doc.contains("regular_degrees")) {
    spec.regular_degrees = integer_list(doc["regular_degrees"], "regular_degrees");
    for (long k : spec.regular_degrees) {
      if (k < 1) throw SpecError("regular_degrees must be positive");
    }
  }
  if (doc.contains("iterate")) {
    spec.iterate = integer_field(doc["iterate"], "iterate");
    if (spec.iterate < 0) throw SpecError("iterate must be nonnegative");
  }
  return spec;
}

ModuleSpecDoc parse_module_spec_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SpecError(std::string("invalid JSON: ") + e.what());
  }
  return parse_module_spec(doc);
}

json to_json(const ModuleSpecDoc& spec) {
  json doc;
  doc["weights"] = spec.weights;
  if (spec.numerator) doc["numerator"] = *spec.numerator;
  if (spec.betti) {
    json rows = json::array();
    for (const auto& e : *spec.betti) rows.push_back({e.homological, e.degree, e.beta.get_si()});
    doc["betti"] = rows;
  }
  if (spec.shift != 0) doc["shift"] = spec.shift;
  if (!spec.regular_degrees.empty()) doc["regular_degrees"] = spec.regular_degrees;
  if (spec.iterate != 0) doc["iterate"] = spec.iterate;
  return doc;
}

HilbertSeries build_series(const ModuleSpecDoc& spec) {
  const WeightSeq weights(spec.weights);
  HilbertSeries series = spec.numerator ? HilbertSeries(weights, RatPolynomial::from_integers(*spec.numerator))
                                        : series_from_betti(weights, BettiTable(*spec.betti));
  if (spec.shift > 0) series = shift(series, spec.shift);
  for (long k : spec.regular_degrees) series = regular_quotient(series, k);
  if (spec.iterate > 0) series = iterate(series, spec.iterate);
  return series;
}

std::optional<BettiTable> plain_betti_table(const ModuleSpecDoc& spec) {
  if (!spec.betti || spec.shift != 0 || !spec.regular_degrees.empty() || spec.iterate != 0) return std::nullopt;
  return BettiTable(*spec.betti);
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json polynomial_json(const RatPolynomial& p, const std::string& var) {
  return {{"coefficients", p.to_strings()}, {"text", p.to_string(var)}};
}

RatPolynomial polynomial_from_json(const json& j) {
  try {
    return RatPolynomial::from_strings(j.at("coefficients").get<std::vector<std::string>>());
  } catch (const std::exception& e) {
    throw SpecError(std::string("malformed polynomial: ") + e.what());
  }
}

json residue_table_json(const ResidueTable& table, const std::string& var) {
  json entries = json::array();
  for (const auto& [pole, poly] : table.entries) {
    json e = polynomial_json(poly, var);
    e["pole"] = pole;
    entries.push_back(e);
  }
  return {{"m", table.m}, {"residues", entries}};
}

ResidueTable residue_table_from_json(const json& j) {
  ResidueTable table;
  try {
    table.m = j.at("m").get<long>();
    for (const auto& e : j.at("residues")) table.entries.emplace(e.at("pole").get<long>(), polynomial_from_json(e));
  } catch (const SpecError&) {
    throw;
  } catch (const std::exception& e) {
    throw SpecError(std::string("malformed residue table: ") + e.what());
  }
  return table;
}

json quasi_polynomial_json(const QuasiPolynomial& q) {
  json rows = json::array();
  for (const auto& row : q.coeffs) {
    json r = json::array();
    for (const auto& c : row) r.push_back(to_string(c));
    rows.push_back(r);
  }
  return {{"period", q.period}, {"degree", q.degree}, {"alpha", q.alpha}, {"coefficients", rows}};
}

QuasiPolynomial quasi_polynomial_from_json(const json& j) {
  QuasiPolynomial q;
  try {
    q.period = j.at("period").get<long>();
    q.degree = j.at("degree").get<long>();
    q.alpha = j.at("alpha").get<long>();
    for (const auto& row : j.at("coefficients")) {
      std::vector<Rational> r;
      for (const auto& c : row) r.push_back(parse_rational(c.get<std::string>()));
      q.coeffs.push_back(std::move(r));
    }
  } catch (const std::exception& e) {
    throw SpecError(std::string("malformed quasi-polynomial: ") + e.what());
  }
  return q;
}

}  // namespace gzeta
