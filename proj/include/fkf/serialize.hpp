#pragma once

#include <string>

#include <json.hpp>

#include "fkf/killing.hpp"

namespace fkf {

inline constexpr int schema_version = 1;

// Interchange representation is the balanced form:
// { schema_version, ansatz, cycles, coefficients: [ { name, index,
//   lambda_degree, prefactor_h3_thirds, terms: [ { re, im, gamma,
//   monomial: { "<z-index>": exp, "r2": exp } } ] } ] }
// Rationals are emitted as strings; output is deterministic.
nlohmann::json state_to_json(const KillingState&);
KillingState state_from_json(const nlohmann::json&);

std::string state_to_latex(const KillingState&);
std::string state_to_text(const KillingState&);

std::string report_to_json_line(const struct CheckReport&);

// write-temp-then-rename
void atomic_write_file(const std::string& path, const std::string& content);

} // namespace fkf
