#include "cuboid/solutions/generator.hpp"

#include <algorithm>
#include <set>

#include "cuboid/error.hpp"

namespace cuboid::solutions {

using algebra::to_string;
using model::Verdict;

namespace {

template <class T>
struct Closed {
    T num, den;
};

template <class T>
Closed<T> theta_parts(const T& s, const T& mu) {
    T one(1L), four(4L);
    T a = one - mu * mu;
    return {(one - s * s) * (a * a - four * mu * mu), four * mu * s * a};
}

template <class T>
Closed<T> eta_parts(const T& s, const T& mu) {
    T one(1L), two(2L), four(4L);
    T a = one - mu * mu;
    return {four * mu * s * a, (one - s * s) * (one + mu * mu) * (a + two * mu)};
}

template <class T>
Closed<T> zeta_parts(const T& s, const T& mu, bool mutate = false) {
    T one(1L), two(2L), four(4L);
    T a = one - mu * mu;
    T last = mutate ? T(a + two * mu) : T(a - two * mu);
    return {(one - s * s) * (one + mu * mu) * last, four * mu * s * a};
}

Rational finish(const Closed<Rational>& c, const char* name, const Rational& s, const Rational& mu) {
    if (c.den == 0)
        throw Error(ErrorKind::Domain, std::string(name) + " undefined at s = " + to_string(s) + ", mu = " + to_string(mu));
    return c.num / c.den;
}

RationalFunction finish(const Closed<RationalFunction>& c) { return c.num / c.den; }

template <class T>
UValues<T> route_a(const T& s, const T& m) {
    T one(1L), two(2L), four(4L);
    T u1 = (one - s * s) / (two * s);
    T tan_psi = one / u1;
    T a = one - m * m;
    T tan2a = four * m * a / (a * a - four * m * m);
    T cot2a = one / tan2a;
    T M = (tan_psi * tan_psi * tan2a - four * cot2a) / four;
    T wp = (a + two * m) / (one + m * m), wm = (a - two * m) / (one + m * m);
    return {u1 * M, u1 * (wp - M * wm), u1 * (wm + M * wp)};
}

template <class T>
T u_of(const T& sk) {
    return (T(1L) - sk * sk) / (T(2L) * sk);
}

Integer lcm_den(const std::vector<Rational>& xs) {
    Integer l = 1;
    for (auto& x : xs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    return l;
}

Integer as_integer(const Rational& x) {
    if (x.get_den() != 1) throw Error(ErrorKind::Domain, "not an integer: " + to_string(x));
    return x.get_num();
}

// Positive divisors by trial division.
std::vector<Integer> divisors(Integer n) {
    n = abs(n);
    static const Integer kLimit = Integer("100000000000000");  // 1e14
    if (n > kLimit) throw Error(ErrorKind::UnsupportedDegree, "coefficient too large to factor: " + n.get_str());
    std::vector<std::pair<Integer, unsigned>> f;
    for (Integer p = 2; p * p <= n; ++p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) f.emplace_back(p, e);
    }
    if (n > 1) f.emplace_back(n, 1);
    std::vector<Integer> out{1};
    for (auto& [p, e] : f) {
        std::size_t k = out.size();
        Integer pk = 1;
        for (unsigned i = 0; i < e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < k; ++j) out.push_back(out[j] * pk);
        }
    }
    return out;
}

Rational horner(const std::vector<Integer>& c, const Rational& x) {
    Rational acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + Rational(*it);
    return acc;
}

}  // namespace

Verdict check_point(const ParametricPoint& p) {
    if (p.variant < 1 || p.variant > 4) return {false, "range", "variant in 1..4"};
    if (p.s <= 0 || p.s >= 1) return {false, "range", "0 < s < 1"};
    if (p.mu <= 0) return {false, "range", "mu > 0"};
    if (1 - p.mu * p.mu - 2 * p.mu <= 0) return {false, "range", "1 - mu^2 - 2mu > 0"};
    return {true, "ok", {}};
}

Rational theta(const Rational& s, const Rational& mu) { return finish(theta_parts(s, mu), "theta", s, mu); }
Rational eta(const Rational& s, const Rational& mu) { return finish(eta_parts(s, mu), "eta", s, mu); }
Rational zeta(const Rational& s, const Rational& mu) { return finish(zeta_parts(s, mu), "zeta", s, mu); }

RationalFunction theta(const RationalFunction& s, const RationalFunction& mu) { return finish(theta_parts(s, mu)); }
RationalFunction eta(const RationalFunction& s, const RationalFunction& mu) { return finish(eta_parts(s, mu)); }
RationalFunction zeta(const RationalFunction& s, const RationalFunction& mu) { return finish(zeta_parts(s, mu)); }

template <class T>
std::array<T, 4> arrange(int variant, const T& s, const T& th, const T& et, const T& ze) {
    switch (variant) {
        case 1: return {s, th, et, ze};
        case 2: return {th, s, et, ze};
        case 3: return {s, th, ze, et};
        case 4: return {th, s, ze, et};
    }
    throw Error(ErrorKind::MalformedInput, "variant must be 1..4, got " + std::to_string(variant));
}

template std::array<Rational, 4> arrange(int, const Rational&, const Rational&, const Rational&, const Rational&);
template std::array<RationalFunction, 4> arrange(int, const RationalFunction&, const RationalFunction&,
                                                 const RationalFunction&, const RationalFunction&);

Generated generate(const ParametricPoint& p) {
    Generated g;
    g.point = p;
    g.verdict = check_point(p);
    if (!g.verdict) return g;
    g.quadruple = arrange(p.variant, p.s, theta(p.s, p.mu), eta(p.s, p.mu), zeta(p.s, p.mu));
    Verdict v = model::check_quadruple(g.quadruple);
    if (!v) {
        g.verdict = {false, "outside domain D", v.reason + ": " + v.clause};
        return g;
    }
    g.cuboid = model::build_cuboid(g.quadruple);
    return g;
}

Polynomial theorem61_residue(int variant, bool mutate) {
    RationalFunction s = RationalFunction::var("s"), mu = RationalFunction::var("mu");
    auto q = arrange(variant, s, theta(s, mu), eta(s, mu), finish(zeta_parts(s, mu, mutate)));
    algebra::Bindings b;
    for (int k = 0; k < 4; ++k) b[algebra::variable("s" + std::to_string(k + 1))] = q[k];
    Polynomial num = algebra::substitute_cleared(model::basic_equation(), b).first;
    return num.is_zero() ? num : num.primitive_part();
}

bool theorem61_symbolic_check(int variant) { return theorem61_residue(variant).is_zero(); }

PerfectSlantedCuboid rescale_to_perfect(const model::SlantedCuboid& c) {
    std::vector<Rational> all{Rational(1)};
    for (int k = 0; k < 4; ++k) {
        all.push_back(c.u[k]);
        all.push_back(c.v[k]);
    }
    PerfectSlantedCuboid p;
    p.scale = lcm_den(all);
    Rational sc(p.scale);
    auto scaled = [&](const Rational& x) { return as_integer(x * sc); };
    p.edges = {scaled(1), scaled(c.u[0]), scaled(c.u[1])};
    p.face_diagonals = {scaled(c.u[2]), scaled(c.u[3]), scaled(c.v[0]), scaled(c.v[1])};
    p.space_diagonals = {scaled(c.v[2]), scaled(c.v[3])};
    return p;
}

model::SlantedCuboid unscale(const PerfectSlantedCuboid& p) {
    model::SlantedCuboid c;
    Rational sc(p.scale);
    auto back = [&](const Integer& x) -> Rational { return Rational(x) / sc; };
    c.u = {back(p.edges[1]), back(p.edges[2]), back(p.face_diagonals[0]), back(p.face_diagonals[1])};
    c.v = {back(p.face_diagonals[2]), back(p.face_diagonals[3]), back(p.space_diagonals[0]),
           back(p.space_diagonals[1])};
    // s = v - u since (v - u)(v + u) = 1 and s = 1/(u + v).
    for (int k = 0; k < 4; ++k) c.s[k] = c.v[k] - c.u[k];
    return c;
}

UValues<RationalFunction> special_route_a(const RationalFunction& s, const RationalFunction& m) {
    return route_a(s, m);
}

UValues<RationalFunction> special_route_b(const RationalFunction& s, const RationalFunction& m) {
    return {u_of(theta(s, m)), u_of(eta(s, m)), u_of(zeta(s, m))};
}

UValues<Rational> special_route_a(const Rational& s, const Rational& m) {
    Verdict v = check_point({s, m, 1});
    if (!v) throw Error(ErrorKind::Domain, "special example needs " + v.clause);
    return route_a(s, m);
}

UValues<Rational> special_route_b(const Rational& s, const Rational& m) {
    Verdict v = check_point({s, m, 1});
    if (!v) throw Error(ErrorKind::Domain, "special example needs " + v.clause);
    return {u_of(theta(s, m)), u_of(eta(s, m)), u_of(zeta(s, m))};
}

Verdict special_example_equivalence(const Rational& s, const Rational& m) {
    Verdict v = check_point({s, m, 1});
    if (!v) return v;
    auto a = special_route_a(s, m), b = special_route_b(s, m);
    if (a.u2 != b.u2) return {false, "mismatch", "u2"};
    if (a.u3 != b.u3) return {false, "mismatch", "u3"};
    if (a.u4 != b.u4) return {false, "mismatch", "u4"};
    return {true, "ok", {}};
}

bool special_example_symbolic() {
    RationalFunction s = RationalFunction::var("s"), m = RationalFunction::var("m");
    auto a = special_route_a(s, m), b = special_route_b(s, m);
    return algebra::normal(a.u2 - b.u2).is_zero() && algebra::normal(a.u3 - b.u3).is_zero() &&
           algebra::normal(a.u4 - b.u4).is_zero();
}

std::vector<Rational> rational_roots(std::vector<Integer> c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
    std::set<Rational> roots;
    if (c.empty()) throw Error(ErrorKind::MalformedInput, "zero polynomial has every root");
    std::size_t low = 0;
    while (c[low] == 0) ++low;
    if (low > 0) {
        roots.insert(Rational(0));
        c.erase(c.begin(), c.begin() + static_cast<long>(low));
    }
    if (c.size() > 1) {
        Integer g = 0;
        for (auto& x : c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        for (auto& x : c) x /= g;
        auto ps = divisors(c.front()), qs = divisors(c.back());
        for (auto& p : ps)
            for (auto& q : qs)
                for (int sg : {1, -1}) {
                    Rational x(Integer(sg * p), q);
                    x.canonicalize();
                    if (horner(c, x) == 0) roots.insert(x);
                }
    }
    return {roots.begin(), roots.end()};
}

std::vector<Integer> rectangular_fiber(const Rational& s) {
    RationalFunction mu = RationalFunction::var("mu");
    RationalFunction d = eta(RationalFunction(s), mu) - zeta(RationalFunction(s), mu);
    Polynomial num = algebra::numer(d);
    if (num.is_zero()) return {};
    num = num.primitive_part();
    std::vector<Integer> out;
    for (auto& coeff : num.coefficients_in(algebra::variable("mu"))) out.push_back(as_integer(coeff.constant_term()));
    return out;
}

}  // namespace cuboid::solutions
