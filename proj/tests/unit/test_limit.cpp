#include "doctest.h"

#include "cuboid/error.hpp"
#include "cuboid/limit/analysis.hpp"

using namespace cuboid;
using namespace cuboid::limit;

namespace {

Rational q(long p, long d = 1) { return Rational(p, d); }

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::Io;  // sentinel
}

}  // namespace

TEST_CASE("double angles from generators") {
    CHECK(sin2_from_generator(q(1, 2)) == q(24, 25));
    CHECK(sin2_from_generator(q(1, 4)) == q(240, 289));
    CHECK(cos2_from_generator(q(1, 2)) == q(-7, 25));
    CHECK(tan_from_generator(q(1, 2)) == q(4, 3));
    CHECK(cot_from_generator(q(1, 2)) == q(3, 4));
    CHECK_THROWS_AS(tan_from_generator(q(1)), Error);
    for (auto g : {q(1, 3), q(2, 7), q(5, 11)}) {
        Rational s = sin2_from_generator(g), c = cos2_from_generator(g);
        CHECK(s * s + c * c == 1);
    }
}

TEST_CASE("delta and M roots") {
    CHECK(delta_from_D(q(24, 25), 0) == 1);
    CHECK(delta_from_D(q(24, 25), 1) == q(121, 25));
    auto [mp, mm] = solve_M(q(1, 2), 0);
    CHECK(mp == q(-3, 4));
    CHECK(mm == q(4, 3));
    // Both roots satisfy the quadratic with D = S r^2 + r.
    Rational g(2, 5), r(3, 7);
    Rational S = sin2_from_generator(g), C = cos2_from_generator(g), D = S * r * r + r;
    auto [p, m] = solve_M(g, r);
    for (const Rational& M : {p, m}) CHECK((M * M - 1) * S + 2 * M * C == 4 * D);
    CHECK(kind_of([] { solve_M(q(1), q(1)); }) == ErrorKind::Domain);
}

TEST_CASE("r and r1") {
    LimitScenario sc{q(1, 2), q(1, 4), q(1, 10)};
    auto [r, r1] = r_r1_from_f(sc);
    Rational S(24, 25), S1(240, 289), f(1, 10);
    CHECK(r / f - S1 * r1 == 1);
    CHECK(S * r - r1 / f == -1);
    CHECK(r != r1);
    CHECK(r - r1 == f * f * (S1 - S) / (1 - f * f * S1 * S));
    LimitResult res = analyze(sc);
    CHECK(res.D == S * r * r + r);
    CHECK(res.D == S1 * r1 * r1 + r1);
    CHECK(res.Delta == -2 * S * r - 1);
    CHECK(res.Delta1 == -2 * S1 * r1 - 1);
    CHECK(res.Delta * res.Delta == delta_from_D(S, res.D));
    CHECK(res.M_minus == 2 * r + q(4, 3));

    // f^2 S S1 = 1 is singular.
    Rational fs = 1;  // S = S1 = 1 at generator sqrt2 - 1 is irrational, so test the sine form.
    CHECK(kind_of([&] { D_Delta_from_sines(q(1, 2), q(2), fs); }) == ErrorKind::Singular);
    CHECK(kind_of([] { r_r1_from_f({q(1, 2), q(1, 4), q(0)}); }) == ErrorKind::Domain);
    CHECK(kind_of([] { r_r1_from_f({q(3, 2), q(1, 4), q(1)}); }) == ErrorKind::Domain);
    // S = 24/25 twice: f = 25/24 makes the system singular.
    CHECK(kind_of([] { r_r1_from_f({q(1, 2), q(1, 2), q(25, 24)}); }) == ErrorKind::Singular);
}

TEST_CASE("D and Delta boundary values") {
    DDelta d = D_Delta_from_sines(q(1, 2), q(0), q(-1));
    CHECK(d.Delta == 0);
    DDelta small = D_Delta_from_sines(q(24, 25), q(240, 289), q(1, 1000));
    CHECK(small.D != 0);
    CHECK(algebra::abs(small.D) < q(2, 1000));
}

TEST_CASE("case split") {
    CaseReport c1 = case_split({q(1, 2), q(1, 4), q(1, 10)});
    CHECK(c1.case_number == 1);
    CHECK(c1.identity_holds);
    CaseReport c2 = case_split({q(1, 3), q(1, 3), q(1, 10)});
    CHECK(c2.case_number == 2);
    CHECK(c2.identity_holds);
    CHECK(c2.option == "alpha1 = alpha");
    CaseReport c3 = case_split({q(1, 2), q(1, 3), q(1, 7)});
    CHECK(c3.case_number == 2);
    CHECK(c3.identity_holds);
    CHECK(c3.option == "alpha1 + alpha = pi/2");
}

TEST_CASE("refutation") {
    RefutationReport rep = refutation_demo(q(1, 2), q(1, 4), default_f_sequence());
    REQUIRE(rep.rows.size() == 3);
    int sign = algebra::sign(rep.sin2a1 - rep.sin2a);
    Rational prev_D = 1;
    for (auto& row : rep.rows) {
        CHECK(row.r_minus_r1 != 0);
        CHECK(algebra::sign(row.r_minus_r1) == sign);
        CHECK(row.within_bound);
        CHECK(row.D != 0);
        CHECK(algebra::abs(row.D) < prev_D);
        prev_D = algebra::abs(row.D);
        // Independent route: r - r1 straight from the linear system.
        Rational f = row.f, S = rep.sin2a, S1 = rep.sin2a1;
        Rational det = -1 / (f * f) + S * S1;
        Rational r = (-1 / f - S1) / det, r1 = (-1 / f - S) / det;
        CHECK(row.r == r);
        CHECK(row.r1 == r1);
    }
    CHECK(kind_of([] { refutation_demo(q(1, 2), q(1, 2), {q(1, 10)}); }) == ErrorKind::Inapplicable);
    CHECK(kind_of([] { refutation_demo(q(1, 2), q(1, 3), {q(1, 10)}); }) == ErrorKind::Inapplicable);
    CHECK(kind_of([] { refutation_demo(q(1, 2), q(1, 4), {q(0)}); }) == ErrorKind::Domain);
    CHECK(refutation_demo(q(1, 2), q(1, 4), {}).rows.empty());
}

TEST_CASE("symbolic identities") {
    for (auto& [name, ok] : symbolic_checks()) {
        INFO(name);
        CHECK(ok);
    }
}
