#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "cuboid/algebra/polynomial.hpp"

namespace cuboid::algebra {

/// Limits under which construction cancels the full polynomial gcd. Beyond
/// them only integer and monomial content is removed and fully_reduced()
/// reports false; zero tests only need the numerator, so the value is still
/// exact, just not canonical.
struct GcdPolicy {
    std::size_t max_vars = 8;
    std::uint32_t max_degree = 48;
    std::size_t max_terms = 3000;
};

GcdPolicy gcd_policy();
void set_gcd_policy(const GcdPolicy& p);

/// Quotient of polynomials in canonical form: num and den have integer
/// coefficients, den is a positive integer times a primitive polynomial with
/// positive leading coefficient, and no integer or monomial factor is shared.
class RationalFunction {
public:
    RationalFunction() : den_(1L) {}
    RationalFunction(const Polynomial& p);  // NOLINT(google-explicit-constructor)
    RationalFunction(const Rational& c);    // NOLINT(google-explicit-constructor)
    RationalFunction(long c);               // NOLINT(google-explicit-constructor)
    /// Throws Error(MalformedInput) when den is the zero polynomial.
    RationalFunction(const Polynomial& num, const Polynomial& den);

    static RationalFunction var(std::string_view name);
    static RationalFunction var(VarId v);

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool fully_reduced() const { return reduced_; }
    std::optional<Rational> as_constant() const;
    Universe used_variables() const;

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }
    RationalFunction pow(int e) const;
    RationalFunction inverse() const;

    /// Throws Error(Domain) when the denominator vanishes at point.
    Rational evaluate(const std::map<VarId, Rational>& point) const;
    RationalFunction evaluated(VarId v, const Rational& x) const;

    bool operator==(const RationalFunction& o) const;
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    enum class Mode { Policy, Force, Coprime };
    RationalFunction(Polynomial num, Polynomial den, Mode mode);
    void normalize(Mode mode);

    Polynomial num_;
    Polynomial den_;
    bool reduced_ = true;

    friend RationalFunction normal(const RationalFunction& x);
};

/// Canonical form with the full gcd attempted regardless of the size policy
/// whenever the denominator has at most four variables and degree 16.
RationalFunction normal(const RationalFunction& x);

/// Numerator of normal(x).
Polynomial numer(const RationalFunction& x);

using Bindings = std::map<VarId, RationalFunction>;

/// Exact composition p(bindings) as a cleared pair (num, den) with no gcd
/// step; den is a product of powers of the binding denominators. Bindings
/// that share a denominator are homogenized together, which keeps degrees low.
std::pair<Polynomial, Polynomial> substitute_cleared(const Polynomial& p, const Bindings& b);

RationalFunction substitute(const Polynomial& p, const Bindings& b);
RationalFunction substitute(const RationalFunction& x, const Bindings& b);

}  // namespace cuboid::algebra
