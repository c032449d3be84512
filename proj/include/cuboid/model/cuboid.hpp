#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "cuboid/algebra/rational_function.hpp"

namespace cuboid::model {

using algebra::Polynomial;
using algebra::Rational;
using algebra::RationalFunction;

/// Outcome of a predicate: the first failing clause names the reason.
struct Verdict {
    bool ok = true;
    std::string reason;  // "ok", "equation", "degenerate", "inequality", "range"
    std::string clause;  // human-readable failing clause, empty when ok

    explicit operator bool() const { return ok; }
};

/// The four equivalent strict inequality sets for a parallelogram with
/// sides u1, u2 and diagonals u3, u4.
enum class InequalitySet {
    DiagonalU3,   // |u1-u2| < u3 < u1+u2
    DiagonalU4,   // |u1-u2| < u4 < u1+u2
    UpperBounds,  // u3 < u1+u2, u4 < u1+u2
    LowerBounds,  // |u1-u2| < u3, |u1-u2| < u4
};

inline constexpr std::array<InequalitySet, 4> kInequalitySets = {
    InequalitySet::DiagonalU3, InequalitySet::DiagonalU4, InequalitySet::UpperBounds,
    InequalitySet::LowerBounds};

std::string to_string(InequalitySet s);

/// Strict evaluation of one inequality set; reason is "degenerate" when a
/// bound is attained and "inequality" when it is exceeded.
Verdict inequality_set(InequalitySet set, const Rational& u1, const Rational& u2, const Rational& u3,
                       const Rational& u4);

/// Parallelogram equation plus the DiagonalU3 set. Throws Error(Domain) on a
/// non-positive input.
Verdict parallelogram_check(const Rational& u1, const Rational& u2, const Rational& u3,
                            const Rational& u4);

/// u = (1-s^2)/(2s), v = (1+s^2)/(2s). Throws Error(Domain) unless 0 < s < 1.
std::pair<Rational, Rational> uv_from_s(const Rational& s);

/// The degree-8 basic equation in s1..s4 with the printed sign set.
Polynomial basic_equation();

/// Numerator of 2u1^2 + 2u2^2 - u3^2 - u4^2 after substituting u_k(s_k).
Polynomial cleared_basic_equation();

using Quadruple = std::array<Rational, 4>;

/// Range gates 0 < s_k < 1 and the two strict slant inequalities,
/// each evaluated regardless of the others.
struct ClauseReport {
    std::vector<std::pair<std::string, bool>> clauses;
    bool ok() const;
    /// First failing clause, empty when ok.
    std::string first_failure() const;
};
ClauseReport slant_inequalities(const Quadruple& q);

/// The two slant inequality polynomials (each must be negative).
std::array<Polynomial, 2> slant_polynomials();

/// Throws Error(Domain) unless parallelogram_check passes.
Rational m_param(const Rational& u1, const Rational& u2, const Rational& u3, const Rational& u4);
Rational n_param(const Rational& u1, const Rational& u2, const Rational& u3, const Rational& u4);

/// (u3, u4) from sides and a parameter in (0,1); throws Error(Domain) otherwise.
std::pair<Rational, Rational> parallelogram_from_m(const Rational& u1, const Rational& u2, const Rational& m);
std::pair<Rational, Rational> parallelogram_from_n(const Rational& u1, const Rational& u2, const Rational& n);

/// Symbolic forms of the same maps, for identity checks.
std::pair<RationalFunction, RationalFunction> parallelogram_from_m(const RationalFunction& u1,
                                                                   const RationalFunction& u2,
                                                                   const RationalFunction& m);
std::pair<RationalFunction, RationalFunction> parallelogram_from_n(const RationalFunction& u1,
                                                                   const RationalFunction& u2,
                                                                   const RationalFunction& n);

/// Slanted cuboid with the perpendicular edge scaled to 1.
struct SlantedCuboid {
    Quadruple s;
    std::array<Rational, 4> u;
    std::array<Rational, 4> v;
};

/// Throws Error(Domain) naming the failing clause when q is not a valid
/// generator quadruple.
SlantedCuboid build_cuboid(const Quadruple& q);

/// Quadruple validity without throwing.
Verdict check_quadruple(const Quadruple& q);

bool is_rectangular(const SlantedCuboid& c);

}  // namespace cuboid::model
