#include "doctest.h"

#include "cuboid/algebra/rational_function.hpp"
#include "cuboid/error.hpp"

using namespace cuboid;
using namespace cuboid::algebra;

namespace {
RationalFunction s1() { return RationalFunction::var("s1"); }
RationalFunction s2() { return RationalFunction::var("s2"); }
Polynomial ps1() { return Polynomial::var("s1"); }
}  // namespace

TEST_CASE("normal cancels common factors") {
    RationalFunction x(ps1() * ps1() - Polynomial(1L), ps1() - Polynomial(1L));
    CHECK(x == s1() + RationalFunction(1L));
    CHECK(x.denominator() == Polynomial(1L));
    CHECK(numer(x) == ps1() + Polynomial(1L));
}

TEST_CASE("normal reduces integer content") {
    RationalFunction x(Polynomial(2L) * ps1(), Polynomial(4L) * Polynomial::var("s2"));
    CHECK(x.numerator() == ps1());
    CHECK(x.denominator() == Polynomial(2L) * Polynomial::var("s2"));
}

TEST_CASE("zero numerator and zero denominator") {
    RationalFunction z(Polynomial(), Polynomial::var("s2"));
    CHECK(numer(z).is_zero());
    CHECK(z.denominator() == Polynomial(1L));
    try {
        RationalFunction bad(ps1(), Polynomial());
        FAIL("zero denominator accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::MalformedInput);
    }
}

TEST_CASE("sign convention puts a positive leading coefficient in the denominator") {
    RationalFunction x(ps1(), -Polynomial::var("s2") + Polynomial(1L));
    CHECK(x.denominator().leading_coefficient() > 0);
    CHECK(x == -s1() / (s2() - RationalFunction(1L)));
}

TEST_CASE("edge length from a generator evaluates exactly") {
    RationalFunction u = (RationalFunction(1L) - s1() * s1()) / (RationalFunction(2L) * s1());
    CHECK(u.evaluate({{variable("s1"), Rational(1, 2)}}) == Rational(3, 4));
    CHECK_THROWS_AS(u.evaluate({{variable("s1"), Rational(0)}}), Error);
}

TEST_CASE("field arithmetic") {
    RationalFunction a = s1() / (s1() + s2());
    RationalFunction b = s2() / (s1() + s2());
    CHECK(a + b == RationalFunction(1L));
    CHECK((a / b) == s1() / s2());
    CHECK(a * b.inverse() == s1() / s2());
    CHECK(a.pow(-2) == ((s1() + s2()) / s1()).pow(2));
    CHECK((a - a).is_zero());
}

TEST_CASE("substitution") {
    VarId v1 = variable("s1");
    Polynomial p = ps1() * ps1();
    CHECK(substitute(p, {{v1, RationalFunction(Rational(1, 2))}}) == RationalFunction(Rational(1, 4)));
    RationalFunction s = RationalFunction::var("s");
    Polynomial q = ps1() + Polynomial::var("s2");
    RationalFunction got = substitute(q, {{v1, s / (RationalFunction(1L) - s)}});
    CHECK(got == (s + s2() * (RationalFunction(1L) - s)) / (RationalFunction(1L) - s));
}

TEST_CASE("normal is idempotent") {
    RationalFunction x = (s1() * s1() - s2() * s2()) / (s1() - s2()) + s1() / s2();
    CHECK(normal(normal(x)) == normal(x));
}
