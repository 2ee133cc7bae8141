#pragma once

#include <string>

#include "annuli/geometry.hpp"
#include "json.hpp"

namespace annuli {
namespace geom {

// Rationals serialize as "num/den" strings so round-trips are bit-exact.
nlohmann::json rat_to_json(const Rat& x);
Rat rat_from_json(const nlohmann::json& j);

nlohmann::json bound_to_json(const RadiusBound& b);
RadiusBound bound_from_json(const nlohmann::json& j);

std::string norm_to_string(const Norm& n);
Norm norm_from_string(const std::string& s);

nlohmann::json shape_to_json(const Shape& s);
Shape shape_from_json(const nlohmann::json& j);

}  // namespace geom
}  // namespace annuli
