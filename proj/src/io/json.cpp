#include "cuboid/io/json.hpp"

#include "cuboid/error.hpp"

namespace cuboid::io {

Json fractions(const model::Quadruple& q) {
    Json out = Json::array();
    for (auto& x : q) out.push_back(fraction(x));
    return out;
}

Json to_json(const model::SlantedCuboid& c) {
    Json out;
    out["s"] = fractions(c.s);
    out["u"] = fractions(c.u);
    out["v"] = fractions(c.v);
    out["rectangular"] = model::is_rectangular(c);
    return out;
}

model::Quadruple quadruple_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 4) throw Error(ErrorKind::Parse, "expected an array of four fractions");
    model::Quadruple q;
    for (std::size_t k = 0; k < 4; ++k) {
        if (!j[k].is_string()) throw Error(ErrorKind::Parse, "fraction must be a string");
        q[k] = algebra::parse_rational(j[k].get<std::string>());
    }
    return q;
}

}  // namespace cuboid::io
