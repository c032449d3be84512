#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "cuboid/trig/expression.hpp"

namespace cuboid::corpus {

using algebra::Polynomial;
using algebra::Rational;
using algebra::RationalFunction;
using algebra::VarId;

/// A fully bound verification context: angles with their generators, named
/// angle combinations, named subexpressions, and the modulus for reduction.
struct Environment {
    std::string id;
    trig::AngleEnv angles;
    std::map<std::string, trig::AngleCombo> angle_names;
    std::map<std::string, trig::Expr> symbols;
    std::set<std::string> variables;
    std::optional<Polynomial> modulus;
    VarId modulus_var = 0;

    /// Bound angle or named combination; throws Error(UnboundAngle).
    trig::AngleCombo angle(const std::string& name) const;
    /// Symbol, then variable; throws Error(MalformedInput).
    trig::Expr symbol(const std::string& name) const;
};

/// "SEC4", "SEC5" or "SEC7". Built once and shared; throws
/// Error(MalformedInput) for an unknown id.
const Environment& environment(std::string_view id);

/// u_k and v_k of the Pythagorean parametrization in s_k.
RationalFunction edge_u(int k);
RationalFunction edge_v(int k);

}  // namespace cuboid::corpus
