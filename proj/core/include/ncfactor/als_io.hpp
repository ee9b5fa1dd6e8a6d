#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "ncfactor/als.hpp"

namespace ncfactor {

/// {"alphabet", "dim", "u", "coefficients": [{"component", "matrix"}], "v"}; every
/// scalar is a "p/q" string. Field order is fixed.
nlohmann::ordered_json als_to_json(const Als& s);
/// Throws InvalidAls (std::invalid_argument for bad scalars) on malformed input;
/// u must be e_1.
Als als_from_json(const nlohmann::json& j);

/// Bracket layout with '.' for zero entries:
///   u = [1 . .]
///   A =
///   [1  -x  .]
///   ...
///   v = [. . 1]^T
std::string format_als(const Als& s);

/// "10 - x", "4/3*y", "0"
std::string format_entry(const Als& s, std::size_t i, std::size_t j);

}  // namespace ncfactor
