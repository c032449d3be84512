#include "cuboid/limit/analysis.hpp"

#include <algorithm>

#include "cuboid/error.hpp"

namespace cuboid::limit {

using algebra::Polynomial;
using algebra::to_string;

namespace {

void require_generator(const Rational& g, const char* name) {
    if (g <= 0 || g >= 1)
        throw Error(ErrorKind::Domain, std::string(name) + " = " + to_string(g) + " outside (0,1)");
}

template <class T>
struct Sines {
    T S, S1;
};

// r, r1 of the regular linear system.
template <class T>
std::pair<T, T> r_pair(const T& S, const T& S1, const T& f) {
    T one(1L);
    T den = one - f * f * S1 * S;
    return {f * (f * S1 + one) / den, f * (f * S + one) / den};
}

template <class T>
T D_closed(const T& S, const T& S1, const T& f) {
    T one(1L);
    T q = f * f * S1 * S - one;
    return f * (f * S1 + one) * (f * S + one) / (q * q);
}

template <class T>
T Delta_closed(const T& S, const T& S1, const T& f) {
    T one(1L), two(2L);
    return (f * f * S1 * S + two * f * S + one) / (f * f * S1 * S - one);
}

bool zero(const RationalFunction& x) { return algebra::normal(x).is_zero(); }

}  // namespace

Rational sin2_from_generator(const Rational& g) {
    Rational d = 1 + g * g;
    return 4 * g * (1 - g * g) / (d * d);
}

Rational cos2_from_generator(const Rational& g) {
    Rational d = 1 + g * g, a = 1 - g * g;
    return (a * a - 4 * g * g) / (d * d);
}

Rational tan_from_generator(const Rational& g) {
    if (g * g == 1) throw Error(ErrorKind::Domain, "tan undefined at generator " + to_string(g));
    return 2 * g / (1 - g * g);
}

Rational cot_from_generator(const Rational& g) {
    if (g == 0) throw Error(ErrorKind::Domain, "cot undefined at generator 0");
    return (1 - g * g) / (2 * g);
}

Rational delta_from_D(const Rational& sin2a, const Rational& D) { return 1 + 4 * D * sin2a; }

std::pair<Rational, Rational> solve_M(const Rational& gen, const Rational& r) {
    require_generator(gen, "generator");
    return {-2 * r - cot_from_generator(gen), 2 * r + tan_from_generator(gen)};
}

void check_scenario(const LimitScenario& sc) {
    require_generator(sc.gen_alpha, "gen_alpha");
    require_generator(sc.gen_alpha1, "gen_alpha1");
    if (sc.f == 0) throw Error(ErrorKind::Domain, "f must be nonzero");
    Rational S = sin2_from_generator(sc.gen_alpha), S1 = sin2_from_generator(sc.gen_alpha1);
    if (sc.f * sc.f * S * S1 == 1) throw Error(ErrorKind::Singular, "singular case: f^2 sin2a sin2a1 = 1");
}

std::pair<Rational, Rational> r_r1_from_f(const LimitScenario& sc) {
    check_scenario(sc);
    auto [r, r1] = r_pair<Rational>(sin2_from_generator(sc.gen_alpha), sin2_from_generator(sc.gen_alpha1), sc.f);
    return {r, r1};
}

DDelta D_Delta_from_sines(const Rational& S, const Rational& S1, const Rational& f) {
    if (f * f * S * S1 == 1) throw Error(ErrorKind::Singular, "singular case: f^2 sin2a sin2a1 = 1");
    return {D_closed(S, S1, f), Delta_closed(S, S1, f), Delta_closed(S1, S, f)};
}

DDelta D_Delta_from_f(const LimitScenario& sc) {
    check_scenario(sc);
    return D_Delta_from_sines(sin2_from_generator(sc.gen_alpha), sin2_from_generator(sc.gen_alpha1), sc.f);
}

LimitResult analyze(const LimitScenario& sc) {
    LimitResult out;
    std::tie(out.r, out.r1) = r_r1_from_f(sc);
    DDelta d = D_Delta_from_f(sc);
    out.D = d.D;
    out.Delta = d.Delta;
    out.Delta1 = d.Delta1;
    std::tie(out.M_plus, out.M_minus) = solve_M(sc.gen_alpha, out.r);
    std::tie(out.M1_plus, out.M1_minus) = solve_M(sc.gen_alpha1, out.r1);
    out.r_minus_r1 = out.r - out.r1;
    return out;
}

CaseReport case_split(const LimitScenario& sc) {
    auto [r, r1] = r_r1_from_f(sc);
    Rational S = sin2_from_generator(sc.gen_alpha), S1 = sin2_from_generator(sc.gen_alpha1);
    CaseReport c;
    if (r != r1) {
        c.case_number = 1;
        Rational den = r * S - r1 * S1;
        c.identity_holds = den != 0 && sc.f == (r1 - r) / den;
        return c;
    }
    c.case_number = 2;
    c.identity_holds = S == S1 && 1 + r * S != 0 && sc.f == r / (1 + r * S);
    const Rational& g = sc.gen_alpha;
    if (sc.gen_alpha1 == g) c.option = "alpha1 = alpha";
    else if (sc.gen_alpha1 == (1 - g) / (1 + g)) c.option = "alpha1 + alpha = pi/2";
    else c.option = "none";
    return c;
}

RefutationReport refutation_demo(const Rational& gen_alpha, const Rational& gen_alpha1,
                                 const std::vector<Rational>& fs) {
    require_generator(gen_alpha, "gen_alpha");
    require_generator(gen_alpha1, "gen_alpha1");
    RefutationReport rep;
    rep.gen_alpha = gen_alpha;
    rep.gen_alpha1 = gen_alpha1;
    rep.sin2a = sin2_from_generator(gen_alpha);
    rep.sin2a1 = sin2_from_generator(gen_alpha1);
    if (rep.sin2a == rep.sin2a1)
        throw Error(ErrorKind::Inapplicable, "scenario inapplicable: sin2a = sin2a1");
    // remainder = f^3 P (1 + f S1) / (1 - f^2 P) with P = S S1; bound its
    // cofactor uniformly on |f| <= fmax.
    Rational fmax = 0;
    for (auto& f : fs) fmax = std::max(fmax, algebra::abs(f));
    Rational P = algebra::abs(rep.sin2a * rep.sin2a1);
    Rational slack = 1 - fmax * fmax * P;
    if (!fs.empty() && slack <= 0)
        throw Error(ErrorKind::Domain, "f sequence too large for a uniform truncation bound");
    rep.bound_constant = fs.empty() ? Rational(0) : P * (1 + fmax * algebra::abs(rep.sin2a1)) / slack;
    for (auto& f : fs) {
        LimitScenario sc{gen_alpha, gen_alpha1, f};
        RefutationRow row;
        row.f = f;
        std::tie(row.r, row.r1) = r_r1_from_f(sc);
        row.r_minus_r1 = row.r - row.r1;
        row.D = D_Delta_from_f(sc).D;
        row.remainder = row.r - f - f * f * rep.sin2a1;
        Rational af = algebra::abs(f);
        row.within_bound = algebra::abs(row.remainder) <= rep.bound_constant * af * af * af;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

std::vector<Rational> default_f_sequence() { return {Rational(1, 10), Rational(1, 100), Rational(1, 1000)}; }

std::vector<std::pair<std::string, bool>> symbolic_checks() {
    using RF = RationalFunction;
    RF one(1L), two(2L), four(4L);
    RF g = RF::var("g"), r = RF::var("r"), M = RF::var("M"), D = RF::var("D");
    RF S = four * g * (one - g * g) / ((one + g * g) * (one + g * g));
    RF C = ((one - g * g) * (one - g * g) - four * g * g) / ((one + g * g) * (one + g * g));
    RF tan_a = two * g / (one - g * g), cot_a = (one - g * g) / (two * g);
    auto eq92 = [&](const RF& m, const RF& d) { return (m * m - one) * S + two * m * C - four * d; };

    std::vector<std::pair<std::string, bool>> out;
    // Quarter discriminant in M equals 1 + 4 D S after cos^2 + sin^2 = 1.
    Polynomial p = algebra::numer(eq92(M, D) * ((one + g * g).pow(4)));
    Polynomial disc = algebra::discriminant(p, algebra::variable("M"));
    RF quarter = RF(disc) / (four * (one + g * g).pow(8));
    out.emplace_back("discriminant quarter equals 1 + 4 D sin2a", zero(quarter - (one + four * D * S)));

    RF Dr = S * r * r + r;
    out.emplace_back("M+ solves the quadratic", zero(eq92(-two * r - cot_a, Dr)));
    out.emplace_back("M- solves the quadratic", zero(eq92(two * r + tan_a, Dr)));

    RF s2 = RF::var("S"), s21 = RF::var("S1"), f = RF::var("f");
    auto [rr, rr1] = r_pair(s2, s21, f);
    out.emplace_back("r, r1 solve the linear system",
                     zero(rr / f - s21 * rr1 - one) && zero(s2 * rr - rr1 / f + one));
    RF Dc = D_closed(s2, s21, f);
    out.emplace_back("D closed form equals sin2a r^2 + r", zero(Dc - (s2 * rr * rr + rr)));
    out.emplace_back("D closed form equals sin2a1 r1^2 + r1", zero(Dc - (s21 * rr1 * rr1 + rr1)));
    out.emplace_back("Delta closed form", zero(Delta_closed(s2, s21, f) - (-two * s2 * rr - one)));
    out.emplace_back("Delta1 closed form", zero(Delta_closed(s21, s2, f) - (-two * s21 * rr1 - one)));
    out.emplace_back("r - r1 closed form",
                     zero(rr - rr1 - f * f * (s21 - s2) / (one - f * f * s21 * s2)));
    out.emplace_back("case (i) expresses f", zero(f - (rr1 - rr) / (rr * s2 - rr1 * s21)));
    {
        auto [re, re1] = r_pair(s2, s2, f);
        out.emplace_back("case (ii) expresses f", zero(f - re / (one + re * s2)) && zero(re - re1));
    }
    out.emplace_back("truncation remainder has factor f^3",
                     zero(rr - f - f * f * s21 - f * f * f * s2 * s21 * (one + f * s21) / (one - f * f * s2 * s21)));
    out.emplace_back("D has factor f", algebra::numer(Dc).evaluated(algebra::variable("f"), Rational(0)).is_zero());
    return out;
}

}  // namespace cuboid::limit
