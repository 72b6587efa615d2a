#pragma once

#include <string>

#include <json.hpp>

#include "pathtoggle/orbits.hpp"

namespace pathtoggle {

inline constexpr int kSchemaVersion = 1;

// {"n":..., "word":[...], "states":["1010100", ...], "column_sums":[...]}
nlohmann::json orbit_to_json(const Orbit& o);
// Inverse of orbit_to_json; re-validates the cycle.
Orbit orbit_from_json(const nlohmann::json& j);

// Header row "1,...,n", then one row per state.
std::string orbit_board_csv(const Orbit& o);

}  // namespace pathtoggle
