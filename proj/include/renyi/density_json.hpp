#pragma once

// JSON form of a density:
//   {"kind": "normal", "sigma2": 1}
//   {"kind": "uniform", "a": 0, "b": 2}
//   {"kind": "exponential", "rate": 1}          optional "reflected": true
//   {"kind": "laplace", "scale": 1}
//   {"kind": "grid", "xs_min": -1, "xs_max": 1, "n": 3, "fs": [0, 1, 0]}

#include <string_view>

#include <json.hpp>

#include "renyi/density.hpp"

namespace renyi {

/// Throws DomainError on unknown kinds, missing fields or bad values.
Density1D density_from_json(const nlohmann::json& spec);
Density1D parse_density(std::string_view text);

nlohmann::json density_to_json(const Density1D& d);

}  // namespace renyi
