#pragma once

#include <array>
#include <optional>
#include <vector>

#include "cuboid/model/cuboid.hpp"

namespace cuboid::solutions {

using algebra::Polynomial;
using algebra::Rational;
using algebra::RationalFunction;
using algebra::Integer;

struct ParametricPoint {
    Rational s;
    Rational mu;
    int variant = 1;  // 1: (s,θ,η,ζ) 2: (θ,s,η,ζ) 3: (s,θ,ζ,η) 4: (θ,s,ζ,η)
};

/// 0 < s < 1, mu > 0, 1 - mu^2 - 2mu > 0, variant in 1..4.
model::Verdict check_point(const ParametricPoint& p);

/// Closed forms; throw Error(Domain) when a denominator vanishes.
Rational theta(const Rational& s, const Rational& mu);
Rational eta(const Rational& s, const Rational& mu);
Rational zeta(const Rational& s, const Rational& mu);

RationalFunction theta(const RationalFunction& s, const RationalFunction& mu);
RationalFunction eta(const RationalFunction& s, const RationalFunction& mu);
RationalFunction zeta(const RationalFunction& s, const RationalFunction& mu);

/// Arranges (s, θ, η, ζ) per variant; throws Error(MalformedInput) for a bad
/// variant number.
template <class T>
std::array<T, 4> arrange(int variant, const T& s, const T& th, const T& et, const T& ze);

struct Generated {
    ParametricPoint point;
    model::Quadruple quadruple{};  // set whenever the point itself is valid
    model::Verdict verdict;        // "range" for a bad point, "outside domain D" after generation
    std::optional<model::SlantedCuboid> cuboid;
};

/// Never throws for a bad point: rejection is reported in the verdict.
Generated generate(const ParametricPoint& p);

/// Numerator of the basic equation at the symbolic variant; zero polynomial
/// means the family solves it identically. mutate flips the sign of 2mu in
/// zeta's last factor.
Polynomial theorem61_residue(int variant, bool mutate = false);
bool theorem61_symbolic_check(int variant);

struct PerfectSlantedCuboid {
    std::array<Integer, 3> edges;            // scaled 1, u1, u2
    std::array<Integer, 4> face_diagonals;   // scaled u3, u4, v1, v2
    std::array<Integer, 2> space_diagonals;  // scaled v3, v4
    Integer scale;
};

PerfectSlantedCuboid rescale_to_perfect(const model::SlantedCuboid& c);
/// Divides back by the scale.
model::SlantedCuboid unscale(const PerfectSlantedCuboid& p);

template <class T>
struct UValues {
    T u2, u3, u4;
};

/// Route (a): M from the tangent relation with tan psi = 1/u1, then u2 = u1 M,
/// u3 = u1(w+ - M w-), u4 = u1(w- + M w+). Route (b): u_k = (1-s_k^2)/(2 s_k)
/// with s2 = θ, s3 = η, s4 = ζ.
UValues<RationalFunction> special_route_a(const RationalFunction& s, const RationalFunction& m);
UValues<RationalFunction> special_route_b(const RationalFunction& s, const RationalFunction& m);
UValues<Rational> special_route_a(const Rational& s, const Rational& m);
UValues<Rational> special_route_b(const Rational& s, const Rational& m);

/// Both routes at a valid point; Verdict "range" for a bad point, "mismatch"
/// if the routes disagree.
model::Verdict special_example_equivalence(const Rational& s, const Rational& m);
/// Symbolic form: true when all three differences normalize to zero.
bool special_example_symbolic();

/// All rational roots of a univariate integer polynomial (coefficients from
/// degree 0 upward), ascending. Throws Error(UnsupportedDegree) when a
/// constant or leading coefficient is too large to factor by trial division.
std::vector<Rational> rational_roots(std::vector<Integer> coeffs);

/// Numerator of eta - zeta restricted to the fiber s = const, as integer
/// coefficients in mu.
std::vector<Integer> rectangular_fiber(const Rational& s);

}  // namespace cuboid::solutions
