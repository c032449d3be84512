#pragma once

#include <array>
#include <compare>
#include <map>
#include <string>

#include "cuboid/trig/expression.hpp"

namespace cuboid::trig {

/// Monomial in the atoms c_x = cos(x/2) (one per bound angle, any integer
/// exponent) and w = sqrt(2) (exponent 0 or 1, since w^2 = 2 is applied eagerly).
struct AtomMonomial {
    std::array<std::int16_t, kMaxAngles> c{};
    std::uint8_t w = 0;

    bool is_one() const;
    auto operator<=>(const AtomMonomial&) const = default;
    std::string to_string(const AngleEnv& env) const;
};

/// Expanded form: a polynomial in the atoms with rational-function
/// coefficients over the environment's slot variables.
class AtomPolynomial {
public:
    AtomPolynomial() = default;
    AtomPolynomial(const RationalFunction& c);  // NOLINT(google-explicit-constructor)
    static AtomPolynomial atom(const AtomMonomial& m, const RationalFunction& c);

    const std::map<AtomMonomial, RationalFunction>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// True when only the atom-free monomial appears.
    bool is_rational() const;
    RationalFunction rational_part() const;

    AtomPolynomial operator-() const;
    friend AtomPolynomial operator+(const AtomPolynomial& a, const AtomPolynomial& b);
    friend AtomPolynomial operator-(const AtomPolynomial& a, const AtomPolynomial& b);
    friend AtomPolynomial operator*(const AtomPolynomial& a, const AtomPolynomial& b);
    AtomPolynomial scaled(const RationalFunction& c) const;

private:
    void add_term(const AtomMonomial& m, const RationalFunction& c);
    std::map<AtomMonomial, RationalFunction> terms_;
};

/// Expands every trig node by the addition formulas. Full angles use the
/// generator values directly, a leftover half-angle contributes c_x, and pi/4
/// multiples contribute w. Results are in slot variables (see AngleEnv).
AtomPolynomial expand(const Expr& e, const AngleEnv& env);

/// c_x^(2k) -> (1/(1+g^2))^k for every atom, in slot variables.
AtomPolynomial half_angle_reduce(const AtomPolynomial& e, const AngleEnv& env);

/// a / b. A single-term divisor is inverted directly; otherwise the divisor is
/// half-angle reduced and rationalized by conjugates.
AtomPolynomial divide(const AtomPolynomial& a, const AtomPolynomial& b, const AngleEnv& env);

/// expand, then half_angle_reduce, then map back to the generators.
/// Throws Error(NonRationalizable) if an atom survives with nonzero coefficient.
RationalFunction expand_trig(const Expr& e, const AngleEnv& env);

}  // namespace cuboid::trig
