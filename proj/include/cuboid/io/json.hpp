#pragma once

#include <json.hpp>

#include "cuboid/algebra/rational.hpp"
#include "cuboid/model/cuboid.hpp"

namespace cuboid::io {

using Json = nlohmann::ordered_json;

/// Exact "p/q" string; integers keep the "/1" form.
inline std::string fraction(const algebra::Rational& q) { return algebra::to_string(q, true); }

Json fractions(const model::Quadruple& q);
Json to_json(const model::SlantedCuboid& c);

/// Inverse of fractions(); throws Error(Parse).
model::Quadruple quadruple_from_json(const Json& j);

}  // namespace cuboid::io
