#include "cuboid/model/cuboid.hpp"

#include "cuboid/error.hpp"

namespace cuboid::model {

using algebra::to_string;

std::string to_string(InequalitySet s) {
    switch (s) {
        case InequalitySet::DiagonalU3: return "diagonal-u3";
        case InequalitySet::DiagonalU4: return "diagonal-u4";
        case InequalitySet::UpperBounds: return "upper-bounds";
        case InequalitySet::LowerBounds: return "lower-bounds";
    }
    return "?";
}

namespace {

// lhs < rhs, strictly.
bool strict_less(Verdict& out, const Rational& lhs, const Rational& rhs, const std::string& clause) {
    if (lhs < rhs) return true;
    out.ok = false;
    out.reason = lhs == rhs ? "degenerate" : "inequality";
    out.clause = clause;
    return false;
}

void require_positive(const Rational& x, const char* name) {
    if (x <= 0) throw Error(ErrorKind::Domain, std::string(name) + " must be positive, got " + to_string(x));
}

}  // namespace

Verdict inequality_set(InequalitySet set, const Rational& u1, const Rational& u2, const Rational& u3,
                       const Rational& u4) {
    Verdict out{true, "ok", {}};
    Rational lo = algebra::abs(u1 - u2), hi = u1 + u2;
    switch (set) {
        case InequalitySet::DiagonalU3:
            strict_less(out, lo, u3, "|u1-u2| < u3") && strict_less(out, u3, hi, "u3 < u1+u2");
            break;
        case InequalitySet::DiagonalU4:
            strict_less(out, lo, u4, "|u1-u2| < u4") && strict_less(out, u4, hi, "u4 < u1+u2");
            break;
        case InequalitySet::UpperBounds:
            strict_less(out, u3, hi, "u3 < u1+u2") && strict_less(out, u4, hi, "u4 < u1+u2");
            break;
        case InequalitySet::LowerBounds:
            strict_less(out, lo, u3, "|u1-u2| < u3") && strict_less(out, lo, u4, "|u1-u2| < u4");
            break;
    }
    return out;
}

Verdict parallelogram_check(const Rational& u1, const Rational& u2, const Rational& u3,
                            const Rational& u4) {
    require_positive(u1, "u1");
    require_positive(u2, "u2");
    require_positive(u3, "u3");
    require_positive(u4, "u4");
    if (u3 * u3 + u4 * u4 != 2 * u1 * u1 + 2 * u2 * u2)
        return {false, "equation", "u3^2 + u4^2 = 2u1^2 + 2u2^2"};
    return inequality_set(InequalitySet::DiagonalU3, u1, u2, u3, u4);
}

std::pair<Rational, Rational> uv_from_s(const Rational& s) {
    if (s <= 0 || s >= 1) throw Error(ErrorKind::Domain, "s = " + to_string(s) + " outside (0,1)");
    Rational u = (1 - s * s) / (2 * s), v = (1 + s * s) / (2 * s);
    return {u, v};
}

Polynomial basic_equation() {
    using algebra::PowerList;
    auto s = [](int k) { return algebra::variable("s" + std::to_string(k)); };
    auto term = [&](long c, unsigned e1, unsigned e2, unsigned e3, unsigned e4) {
        PowerList pl;
        if (e1) pl.emplace_back(s(1), e1);
        if (e2) pl.emplace_back(s(2), e2);
        if (e3) pl.emplace_back(s(3), e3);
        if (e4) pl.emplace_back(s(4), e4);
        return Polynomial::monomial(Rational(c), pl);
    };
    return term(1, 2, 2, 2, 4) + term(1, 2, 2, 4, 2) + term(-2, 2, 4, 2, 2) + term(-2, 4, 2, 2, 2) +
           term(4, 2, 2, 2, 2) + term(-2, 0, 2, 2, 2) + term(-2, 2, 0, 2, 2) + term(1, 2, 2, 0, 2) +
           term(1, 2, 2, 2, 0);
}

Polynomial cleared_basic_equation() {
    auto u = [](int k) {
        RationalFunction s = RationalFunction::var("s" + std::to_string(k));
        return (RationalFunction(1L) - s * s) / (RationalFunction(2L) * s);
    };
    RationalFunction e = RationalFunction(2L) * u(1).pow(2) + RationalFunction(2L) * u(2).pow(2) -
                         u(3).pow(2) - u(4).pow(2);
    return algebra::numer(e);
}

std::array<Polynomial, 2> slant_polynomials() {
    Polynomial s1 = Polynomial::var("s1"), s2 = Polynomial::var("s2");
    auto one = [&](const Polynomial& sk) {
        return s1 * s2 * s2 * sk + s1 * s1 * s2 * sk - s1 * s2 * sk * sk + s1 * s2 - s2 * sk - s1 * sk;
    };
    return {one(Polynomial::var("s3")), one(Polynomial::var("s4"))};
}

bool ClauseReport::ok() const {
    for (auto& [name, holds] : clauses)
        if (!holds) return false;
    return true;
}

std::string ClauseReport::first_failure() const {
    for (auto& [name, holds] : clauses)
        if (!holds) return name;
    return {};
}

ClauseReport slant_inequalities(const Quadruple& q) {
    ClauseReport r;
    for (int k = 0; k < 4; ++k) {
        std::string name = "0 < s" + std::to_string(k + 1) + " < 1";
        r.clauses.emplace_back(name, q[k] > 0 && q[k] < 1);
    }
    std::map<algebra::VarId, Rational> point;
    for (int k = 0; k < 4; ++k) point[algebra::variable("s" + std::to_string(k + 1))] = q[k];
    auto polys = slant_polynomials();
    r.clauses.emplace_back("slant inequality in s3 < 0", polys[0].evaluate(point) < 0);
    r.clauses.emplace_back("slant inequality in s4 < 0", polys[1].evaluate(point) < 0);
    return r;
}

Rational m_param(const Rational& u1, const Rational& u2, const Rational& u3, const Rational& u4) {
    Verdict v = parallelogram_check(u1, u2, u3, u4);
    if (!v) throw Error(ErrorKind::Domain, "not a parallelogram: " + v.clause);
    return (2 * u2 + u3 - u4) / (2 * u1 + u3 + u4);
}

Rational n_param(const Rational& u1, const Rational& u2, const Rational& u3, const Rational& u4) {
    Verdict v = parallelogram_check(u1, u2, u3, u4);
    if (!v) throw Error(ErrorKind::Domain, "not a parallelogram: " + v.clause);
    return (2 * u2 - u3 + u4) / (2 * u1 + u3 + u4);
}

namespace {

// Generic over Rational and RationalFunction.
template <class T>
std::pair<T, T> from_m(const T& u1, const T& u2, const T& m) {
    T one(1L), two(2L);
    T d = m * m + one;
    T u3 = (two * m - m * m + one) / d * u1 + (two * m + m * m - one) / d * u2;
    T u4 = (one - m * m - two * m) / d * u1 + (two * m - m * m + one) / d * u2;
    return {u3, u4};
}

template <class T>
std::pair<T, T> from_n(const T& u1, const T& u2, const T& n) {
    T one(1L), two(2L);
    T d = n * n + one;
    T u3 = (one - two * n - n * n) / d * u1 + (one + two * n - n * n) / d * u2;
    T u4 = (one - n * n + two * n) / d * u1 + (two * n + n * n - one) / d * u2;
    return {u3, u4};
}

void check_sides(const Rational& u1, const Rational& u2, const Rational& p, const char* name) {
    require_positive(u1, "u1");
    require_positive(u2, "u2");
    if (p <= 0 || p >= 1) throw Error(ErrorKind::Domain, std::string(name) + " = " + to_string(p) + " outside (0,1)");
}

}  // namespace

std::pair<Rational, Rational> parallelogram_from_m(const Rational& u1, const Rational& u2, const Rational& m) {
    check_sides(u1, u2, m, "m");
    auto [a, b] = from_m<Rational>(u1, u2, m);
    a.canonicalize();
    b.canonicalize();
    return {a, b};
}

std::pair<Rational, Rational> parallelogram_from_n(const Rational& u1, const Rational& u2, const Rational& n) {
    check_sides(u1, u2, n, "n");
    auto [a, b] = from_n<Rational>(u1, u2, n);
    a.canonicalize();
    b.canonicalize();
    return {a, b};
}

std::pair<RationalFunction, RationalFunction> parallelogram_from_m(const RationalFunction& u1,
                                                                   const RationalFunction& u2,
                                                                   const RationalFunction& m) {
    return from_m(u1, u2, m);
}

std::pair<RationalFunction, RationalFunction> parallelogram_from_n(const RationalFunction& u1,
                                                                   const RationalFunction& u2,
                                                                   const RationalFunction& n) {
    return from_n(u1, u2, n);
}

Verdict check_quadruple(const Quadruple& q) {
    for (int k = 0; k < 4; ++k)
        if (q[k] <= 0 || q[k] >= 1)
            return {false, "range", "0 < s" + std::to_string(k + 1) + " < 1"};
    std::map<algebra::VarId, Rational> point;
    for (int k = 0; k < 4; ++k) point[algebra::variable("s" + std::to_string(k + 1))] = q[k];
    if (basic_equation().evaluate(point) != 0) return {false, "equation", "basic equation"};
    ClauseReport r = slant_inequalities(q);
    if (!r.ok()) return {false, "inequality", r.first_failure()};
    return {true, "ok", {}};
}

SlantedCuboid build_cuboid(const Quadruple& q) {
    Verdict v = check_quadruple(q);
    if (!v) throw Error(ErrorKind::Domain, "invalid generator quadruple (" + v.reason + "): " + v.clause);
    SlantedCuboid c;
    c.s = q;
    for (int k = 0; k < 4; ++k) std::tie(c.u[k], c.v[k]) = uv_from_s(q[k]);
    return c;
}

bool is_rectangular(const SlantedCuboid& c) { return c.u[2] == c.u[3]; }

}  // namespace cuboid::model
