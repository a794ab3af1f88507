#pragma once

// JSON schemas shared by the CLI and the file formats:
//
//   state file:  {"k": 2, "alpha": [[[re,im],...],...], "kappa": [[...]]}
//
// Complex numbers are [re, im] pairs, matrices row-major.

#include <json.hpp>
#include <string>

#include "sekine/lattice.hpp"
#include "sekine/walks.hpp"

namespace sekine {

nlohmann::json state_to_json(const Functional& f);

/// Parses and shape-checks a state file. Throws std::invalid_argument on
/// malformed input; semantic checks (positivity etc.) stay with is_state.
Functional state_from_json(const nlohmann::json& j);

nlohmann::json descriptor_to_json(const IdempotentDescriptor& d);
nlohmann::json report_to_json(const IdempotencyReport& rep);
nlohmann::json catalog_to_json(const Catalog& catalog);
nlohmann::json lattice_to_json(const Catalog& catalog, const HasseDiagram& hd);
nlohmann::json spectral_to_json(const SpectralReport& rep);
nlohmann::json walk_report_to_json(const WalkReport& rep, std::size_t max_trace = 1000);
nlohmann::json fourier_table_to_json(const Functional& f);

/// "1/8"-style rendering when x is within 1e-9 of a rational with
/// denominator <= max_den; plain decimal otherwise.
std::string format_rational(double x, long max_den);
std::string format_scalar(Complex z, long max_den);

} // namespace sekine
