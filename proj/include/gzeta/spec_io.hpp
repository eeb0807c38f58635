#pragma once

#include "gzeta/hilbert.hpp"
#include "gzeta/residues.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gzeta {

/// Malformed module description or result document.
class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// JSON module description:
///   {"weights": [2, 3], "numerator": [1, 0, 0, 0, 0, 0, -1]}
///   {"weights": [2, 3], "betti": [[0, 0, 1], [1, 6, 1]], "shift": 2,
///    "regular_degrees": [4], "iterate": 1}
/// numerator and betti are mutually exclusive; exactly one is required.
struct ModuleSpecDoc {
  std::vector<long> weights;
  std::optional<std::vector<long>> numerator;
  std::optional<std::vector<BettiEntry>> betti;
  long shift = 0;
  std::vector<long> regular_degrees;
  long iterate = 0;
};

ModuleSpecDoc parse_module_spec(const nlohmann::json& doc);
ModuleSpecDoc parse_module_spec_text(const std::string& text);
nlohmann::json to_json(const ModuleSpecDoc& spec);

/// Base series, then shift, regular quotients and iteration in that order.
HilbertSeries build_series(const ModuleSpecDoc& spec);
/// The Betti table when the document has one and no transformation is applied.
std::optional<BettiTable> plain_betti_table(const ModuleSpecDoc& spec);

/// Decimal with 17 significant digits.
std::string format_double(double v);

nlohmann::json polynomial_json(const RatPolynomial& p, const std::string& var);
RatPolynomial polynomial_from_json(const nlohmann::json& j);

nlohmann::json residue_table_json(const ResidueTable& table, const std::string& var);
ResidueTable residue_table_from_json(const nlohmann::json& j);

nlohmann::json quasi_polynomial_json(const QuasiPolynomial& q);
QuasiPolynomial quasi_polynomial_from_json(const nlohmann::json& j);

}  // namespace gzeta
