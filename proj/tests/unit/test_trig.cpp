#include "doctest.h"

#include <cmath>
#include <random>

#include "cuboid/error.hpp"
#include "cuboid/trig/expand.hpp"

using namespace cuboid;
using namespace cuboid::trig;
using algebra::RationalFunction;

namespace {

RationalFunction m() { return RationalFunction::var("m"); }
RationalFunction one() { return RationalFunction(1L); }

AngleEnv env_alpha(const RationalFunction& g) { return bind_angle(AngleEnv{}, "alpha", g); }

AngleCombo A() { return AngleCombo::angle("alpha"); }

}  // namespace

TEST_CASE("angle combos add and scale") {
    AngleCombo x = A() + AngleCombo::half("beta") - AngleCombo::pi_quarters(1);
    CHECK(x.to_string() == "alpha + beta/2 - pi/4");
    CHECK((x - x).is_zero());
    CHECK(A().times(Rational(1, 2)) == AngleCombo::half("alpha"));
    CHECK_THROWS_AS(AngleCombo::half("alpha").times(Rational(1, 2)), Error);
}

TEST_CASE("sin and cos of a bound angle") {
    AngleEnv env = env_alpha(m());
    CHECK(expand_trig(sin(A()), env) == RationalFunction(2L) * m() / (one() + m() * m()));
    CHECK(expand_trig(cos(A()), env) == (one() - m() * m()) / (one() + m() * m()));
    AngleEnv half = env_alpha(RationalFunction(Rational(1, 2)));
    CHECK(expand_trig(cos(A()), half) == RationalFunction(Rational(3, 5)));
    CHECK(expand_trig(sin(A()), half) == RationalFunction(Rational(4, 5)));
    CHECK(expand_trig(tan(A()), half) == RationalFunction(Rational(4, 3)));
}

TEST_CASE("double angle against the 3-4-5 triangle") {
    AngleEnv env = env_alpha(RationalFunction(Rational(1, 2)));
    CHECK(expand_trig(sin(A().times(2)), env) == RationalFunction(Rational(24, 25)));
    CHECK(expand_trig(cos(A().times(2)), env) == RationalFunction(Rational(-7, 25)));
    AngleEnv sym = env_alpha(m());
    RationalFunction d = one() + m() * m();
    CHECK(expand_trig(sin(A().times(2)), sym) ==
          RationalFunction(4L) * m() * (one() - m() * m()) / (d * d));
}

TEST_CASE("omega values") {
    AngleEnv env = env_alpha(m());
    RationalFunction d = one() + m() * m();
    CHECK(expand_trig(omega(Sign::Plus, A()), env) == (one() - m() * m() + RationalFunction(2L) * m()) / d);
    Expr wp = omega(Sign::Plus, A()), wm = omega(Sign::Minus, A());
    CHECK(expand_trig(wm * wp - cos(A().times(2)), env).is_zero());
    CHECK(expand_trig(wp * wp - Expr(1L) - sin(A().times(2)), env).is_zero());
}

TEST_CASE("half angles and pi/4 rationalize") {
    AngleEnv env = env_alpha(m());
    AngleCombo h = AngleCombo::half("alpha");
    CHECK(expand_trig(tan(h), env) == m());
    CHECK(expand_trig(cot(h), env) == m().inverse());
    CHECK(expand_trig(sin(h) * sin(h) + cos(h) * cos(h), env) == one());
    AngleCombo x = h - AngleCombo::pi_quarters(1);
    Expr lhs = Expr::sqrt2() * cos(AngleCombo::pi_quarters(1) - h);
    CHECK(expand_trig(lhs - cos(h) - sin(h), env).is_zero());
    CHECK(expand_trig(tan(x) - (tan(h) - Expr(1L)) / (Expr(1L) + tan(h)), env).is_zero());
}

TEST_CASE("half-angle cosine powers reduce") {
    AngleEnv env = env_alpha(m());
    Expr c = Expr::half_cos("alpha");
    RationalFunction d = one() + m() * m();
    CHECK(expand_trig(c.pow(2), env) == d.inverse());
    CHECK(expand_trig(c.pow(4), env) == d.pow(-2));
    CHECK(expand_trig(c.pow(-2), env) == d);
    CHECK_THROWS_AS(expand_trig(c, env), Error);
}

TEST_CASE("hkmn linearity") {
    AngleEnv env = env_alpha(m());
    Expr q = Expr::var("s1");
    Expr H = hkmn(HKMN::H, A(), q), K = hkmn(HKMN::K, A(), q);
    Expr M = hkmn(HKMN::M, A(), q), N = hkmn(HKMN::N, A(), q);
    Expr two(2L);
    CHECK(expand_trig(H + K - two * omega(Sign::Minus, A()), env).is_zero());
    CHECK(expand_trig(M + N - two * omega(Sign::Plus, A()), env).is_zero());
    CHECK(expand_trig(K - H - two * q * omega(Sign::Plus, A()), env).is_zero());
}

TEST_CASE("rational generators substitute at the end") {
    RationalFunction s1 = RationalFunction::var("s1");
    RationalFunction g = (s1 - one()) / (s1 + RationalFunction(2L));
    AngleEnv env = env_alpha(g);
    RationalFunction expected = RationalFunction(2L) * g / (one() + g * g);
    CHECK(expand_trig(sin(A()), env) == expected);
    CHECK(expand_trig(sin(A()) * sin(A()) + cos(A()) * cos(A()), env) == one());
}

TEST_CASE("binding errors") {
    AngleEnv env = env_alpha(m());
    try {
        bind_angle(env, "alpha", m());
        FAIL("rebinding accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Conflict);
    }
    try {
        expand_trig(sin(AngleCombo::angle("beta")), env);
        FAIL("unbound angle accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnboundAngle);
    }
    AngleEnv zero = env_alpha(RationalFunction(0L));
    CHECK_THROWS_AS(expand_trig(tan(A().times(1) + AngleCombo::pi_quarters(2)), zero), Error);
}

TEST_CASE("expansion agrees with floating point at random rational generators") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> num(1, 40), den(41, 60);
    AngleCombo B = AngleCombo::angle("beta"), P = AngleCombo::pi_quarters(1);
    int checked = 0;
    for (int trial = 0; trial < 50; ++trial) {
        Rational ga(num(rng), den(rng)), gb(num(rng), den(rng));
        ga.canonicalize();
        gb.canonicalize();
        AngleEnv env = bind_angle(bind_angle(AngleEnv{}, "alpha", ga), "beta", gb);
        double a = 2 * std::atan(ga.get_d()), b = 2 * std::atan(gb.get_d());
        std::pair<Expr, double> cases[] = {
            {sin(A().times(2) + B), std::sin(2 * a + b)},
            {cos(A() - B.times(3)), std::cos(a - 3 * b)},
            {tan(A() + B), std::tan(a + b)},
            {cot(A() - P), 1 / std::tan(a - M_PI / 4)},
            {omega(Sign::Minus, A() + B) * sin(B), (std::cos(a + b) - std::sin(a + b)) * std::sin(b)},
            {cos(A()).pow(3) / (Expr(1L) + sin(B)), std::pow(std::cos(a), 3) / (1 + std::sin(b))},
        };
        for (auto& [e, expected] : cases) {
            auto value = expand_trig(e, env).as_constant();
            REQUIRE(value);
            CHECK(value->get_d() == doctest::Approx(expected).epsilon(1e-9));
            ++checked;
        }
    }
    CHECK(checked == 300);
}
