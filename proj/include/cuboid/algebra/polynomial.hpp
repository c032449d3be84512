#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cuboid/algebra/rational.hpp"
#include "cuboid/algebra/variable.hpp"

namespace cuboid::algebra {

/// Strictly ascending list of variable ids.
using Universe = std::vector<VarId>;

using PowerList = std::vector<std::pair<VarId, std::uint32_t>>;

/// Sparse multivariate polynomial with rational coefficients.
///
/// Terms are kept sorted in descending graded-lex order (total degree first,
/// then exponents compared variable by variable in universe order), with no
/// zero coefficients. Exponent rows are stored flat, one row per term.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const Rational& c);  // NOLINT(google-explicit-constructor)
    Polynomial(long c);             // NOLINT(google-explicit-constructor)

    static Polynomial var(VarId v, std::uint32_t e = 1);
    static Polynomial var(std::string_view name, std::uint32_t e = 1);
    static Polynomial monomial(const Rational& c, const PowerList& powers);
    /// Rows may be unsorted and repeated; they are sorted and combined.
    static Polynomial from_terms(Universe u, std::vector<std::uint32_t> exps,
                                 std::vector<Rational> coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return coeffs_.size() == 1; }
    std::size_t size() const { return coeffs_.size(); }
    std::size_t nvars() const { return universe_.size(); }
    const Universe& universe() const { return universe_; }

    const std::uint32_t* exponents(std::size_t term) const {
        return exps_.data() + term * universe_.size();
    }
    const Rational& coefficient(std::size_t term) const { return coeffs_[term]; }
    std::uint32_t term_degree(std::size_t term) const;

    Rational coefficient_of(const PowerList& powers) const;
    Rational constant_term() const;
    /// Leading coefficient in the monomial order; zero for the zero polynomial.
    Rational leading_coefficient() const;

    std::uint32_t degree(VarId v) const;
    std::uint32_t total_degree() const;
    Universe used_variables() const;
    bool uses(VarId v) const { return degree(v) > 0; }

    Polynomial lifted(const Universe& u) const;
    Polynomial trimmed() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    Polynomial scaled(const Rational& c) const;
    Polynomial pow(unsigned e) const;

    /// result[k] is the coefficient of v^k (universe kept, v-exponent zero).
    std::vector<Polynomial> coefficients_in(VarId v) const;
    Polynomial leading_coefficient_in(VarId v) const;

    Polynomial evaluated(VarId v, const Rational& x) const;
    /// Full evaluation; every used variable must appear in point.
    Rational evaluate(const std::map<VarId, Rational>& point) const;
    Polynomial substituted(VarId v, const Polynomial& q) const;

    /// Signed rational c such that *this / c has coprime integer coefficients
    /// and a positive leading coefficient. Zero for the zero polynomial.
    Rational content() const;
    Polynomial primitive_part() const;
    /// Largest monic monomial dividing every term (1 for zero).
    Polynomial monomial_content() const;
    /// Exact division by a single-term polynomial; throws if not exact.
    Polynomial divided_by_monomial(const Polynomial& m) const;
    bool has_integer_coefficients() const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    Universe universe_;
    std::vector<std::uint32_t> exps_;
    std::vector<Rational> coeffs_;

    friend class PolynomialBuilder;
};

Universe universe_union(const Universe& a, const Universe& b);

/// a / b when b divides a exactly, otherwise nullopt.
std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);

/// Fraction-free pseudo-remainder: lc_v(b)^(deg_v a - deg_v b + 1) * a mod b.
Polynomial prem(const Polynomial& a, const Polynomial& b, VarId v);

/// Pseudo-remainder with integer and monomial content (in variables other
/// than v) stripped after each step. Zero exactly when prem(a, b, v) is zero;
/// the cheaper choice for zero tests on large inputs.
Polynomial reduce_modulo(const Polynomial& a, const Polynomial& b, VarId v);

/// b^2 - 4ac for p = a v^2 + b v + c; throws unless deg_v p == 2.
Polynomial discriminant(const Polynomial& p, VarId v);

/// Greatest common divisor, primitive with positive leading coefficient.
/// gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

}  // namespace cuboid::algebra
