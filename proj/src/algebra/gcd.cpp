// Multivariate gcd over the integers.
//
// Order of attack: strip contents, eliminate variables present in only one
// operand, bound the gcd degree in every variable from modular images (a
// degree-0 image proves the gcd is free of that variable), then the heuristic
// evaluate/interpolate gcd, and finally a primitive PRS as the fallback.

#include <algorithm>
#include <map>
#include <random>

#include "cuboid/algebra/polynomial.hpp"
#include "cuboid/error.hpp"

namespace cuboid::algebra {

namespace {

using u64 = std::uint64_t;
constexpr u64 kPrime = 2305843009213693951ULL;  // 2^61 - 1

u64 mulmod(u64 a, u64 b) {
    unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    u64 lo = static_cast<u64>(p & kPrime), hi = static_cast<u64>(p >> 61);
    u64 s = lo + hi;
    return s >= kPrime ? s - kPrime : s;
}

u64 addmod(u64 a, u64 b) {
    u64 s = a + b;
    return s >= kPrime ? s - kPrime : s;
}

u64 submod(u64 a, u64 b) { return a >= b ? a - b : a + kPrime - b; }

u64 powmod(u64 a, u64 e) {
    u64 r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a);
        a = mulmod(a, a);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a) { return powmod(a, kPrime - 2); }

u64 reduce(const Rational& c) {
    u64 n = mpz_fdiv_ui(c.get_num_mpz_t(), kPrime);
    u64 d = mpz_fdiv_ui(c.get_den_mpz_t(), kPrime);
    return mulmod(n, invmod(d));
}

using ModPoly = std::vector<u64>;

void trim(ModPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Degree of gcd of two univariate images; -1 if both zero.
int mod_gcd_degree(ModPoly a, ModPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a mod b
        u64 inv = invmod(b.back());
        while (a.size() >= b.size()) {
            u64 q = mulmod(a.back(), inv);
            std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i)
                a[i + shift] = submod(a[i + shift], mulmod(q, b[i]));
            trim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return static_cast<int>(a.size()) - 1;
}

std::mt19937_64& rng() {
    thread_local std::mt19937_64 gen(0x5eed1234abcdULL);
    return gen;
}

// Image of p as a univariate polynomial in universe column x, other columns
// evaluated at point (mod p).
ModPoly image(const Polynomial& p, std::size_t x, const std::vector<u64>& point) {
    ModPoly out(p.degree(p.universe()[x]) + 1, 0);
    const std::size_t n = p.nvars();
    for (std::size_t t = 0; t < p.size(); ++t) {
        const std::uint32_t* row = p.exponents(t);
        u64 v = reduce(p.coefficient(t));
        for (std::size_t i = 0; i < n; ++i)
            if (i != x && row[i] != 0) v = mulmod(v, powmod(point[i], row[i]));
        out[row[x]] = addmod(out[row[x]], v);
    }
    return out;
}

// Upper bound for deg_x gcd(a, b); a and b share the universe.
std::uint32_t degree_bound(const Polynomial& a, const Polynomial& b, std::size_t x) {
    const std::size_t n = a.nvars();
    const VarId xv = a.universe()[x];
    const std::uint32_t da = a.degree(xv), db = b.degree(xv);
    std::uint32_t best = std::min(da, db);
    for (int attempt = 0; attempt < 3 && best > 0; ++attempt) {
        std::vector<u64> point(n);
        for (auto& v : point) v = rng()() % kPrime;
        ModPoly ia = image(a, x, point), ib = image(b, x, point);
        // Leading coefficients must survive for the image degree to bound.
        if (ia.size() != da + 1 || ib.size() != db + 1 || ia.back() == 0 || ib.back() == 0)
            continue;
        int d = mod_gcd_degree(ia, ib);
        if (d >= 0) best = std::min<std::uint32_t>(best, static_cast<std::uint32_t>(d));
    }
    return best;
}

Integer integer_content(const Polynomial& p) {
    Integer g = 0;
    for (std::size_t t = 0; t < p.size(); ++t)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), p.coefficient(t).get_num_mpz_t());
    return g;
}

Integer max_norm(const Polynomial& p) {
    Integer m = 0;
    for (std::size_t t = 0; t < p.size(); ++t) {
        Integer a = abs(p.coefficient(t).get_num());
        if (a > m) m = a;
    }
    return m;
}

Polynomial normalized(const Polynomial& p) { return p.primitive_part().trimmed(); }

Polynomial interpolate(const Polynomial& h, const Integer& xi, VarId x) {
    Universe u = universe_union(h.universe(), Universe{x});
    std::size_t ix = static_cast<std::size_t>(std::lower_bound(u.begin(), u.end(), x) - u.begin());
    Polynomial hl = h.lifted(u);
    const std::size_t n = u.size();
    std::vector<std::uint32_t> exps;
    std::vector<Rational> coeffs;
    Integer half = xi / 2;
    for (std::size_t t = 0; t < hl.size(); ++t) {
        Integer g = hl.coefficient(t).get_num();
        std::uint32_t k = 0;
        while (g != 0) {
            Integer d;
            mpz_fdiv_r(d.get_mpz_t(), g.get_mpz_t(), xi.get_mpz_t());
            if (d > half) d -= xi;
            if (d != 0) {
                const std::uint32_t* row = hl.exponents(t);
                exps.insert(exps.end(), row, row + n);
                exps[exps.size() - n + ix] = k;
                coeffs.emplace_back(d);
            }
            g = (g - d) / xi;
            ++k;
        }
    }
    return Polynomial::from_terms(u, std::move(exps), std::move(coeffs));
}

constexpr std::size_t kBitBudget = 1u << 18;

std::optional<Polynomial> heuristic_gcd(const Polynomial& f0, const Polynomial& g0) {
    if (f0.is_constant() || g0.is_constant()) {
        Integer c;
        mpz_gcd(c.get_mpz_t(), integer_content(f0).get_mpz_t(), integer_content(g0).get_mpz_t());
        return Polynomial(Rational(c));
    }
    Integer cf = integer_content(f0), cg = integer_content(g0), common;
    mpz_gcd(common.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
    Polynomial f = f0.scaled(Rational(1) / Rational(cf));
    Polynomial g = g0.scaled(Rational(1) / Rational(cg));
    Universe used = universe_union(f.used_variables(), g.used_variables());
    VarId x = used.back();
    Integer bound = std::min(max_norm(f), max_norm(g));
    Integer xi = 2 * bound + 2;
    const std::uint32_t dx = std::max(f.degree(x), g.degree(x));
    const std::size_t fbits = mpz_sizeinbase(max_norm(f).get_mpz_t(), 2);
    for (int attempt = 0; attempt < 6; ++attempt) {
        std::size_t xbits = mpz_sizeinbase(xi.get_mpz_t(), 2);
        if (fbits + xbits * dx > kBitBudget) return std::nullopt;
        Polynomial ff = f.evaluated(x, Rational(xi)), gg = g.evaluated(x, Rational(xi));
        if (!ff.is_zero() && !gg.is_zero()) {
            if (auto h = heuristic_gcd(ff, gg)) {
                Polynomial cand = interpolate(*h, xi, x);
                if (!cand.is_zero()) {
                    cand = cand.primitive_part();
                    if (divide_exact(f, cand) && divide_exact(g, cand))
                        return cand.scaled(Rational(common));
                }
            }
        }
        Integer r;
        mpz_sqrt(r.get_mpz_t(), xi.get_mpz_t());
        mpz_sqrt(r.get_mpz_t(), r.get_mpz_t());
        xi = xi * 73794 * r / 27011;
    }
    return std::nullopt;
}

Polynomial gcd_dispatch(const Polynomial& a, const Polynomial& b);

// gcd of a polynomial with every coefficient of another polynomial.
Polynomial gcd_with_coefficients(Polynomial g, const std::vector<Polynomial>& cs) {
    for (const auto& c : cs) {
        if (c.is_zero()) continue;
        g = gcd(g, c);
        if (g.is_constant()) break;
    }
    return g;
}

// Coefficients of p with respect to a set of variables.
std::vector<Polynomial> coefficients_wrt(const Polynomial& p, const Universe& vs) {
    std::vector<Polynomial> layer{p};
    for (VarId v : vs) {
        std::vector<Polynomial> next;
        for (auto& q : layer)
            for (auto& c : q.coefficients_in(v))
                if (!c.is_zero()) next.push_back(c.trimmed());
        layer = std::move(next);
    }
    return layer;
}

Polynomial content_in(const Polynomial& p, VarId x) {
    Polynomial g;
    for (auto& c : p.coefficients_in(x)) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? normalized(c) : gcd(g, c);
        if (g.is_constant()) break;
    }
    return g;
}

Polynomial prs_gcd(const Polynomial& a, const Polynomial& b) {
    Universe used = universe_union(a.used_variables(), b.used_variables());
    VarId x = used.front();
    for (VarId v : used)
        if (std::max(a.degree(v), b.degree(v)) > std::max(a.degree(x), b.degree(x))) x = v;
    Polynomial ca = content_in(a, x), cb = content_in(b, x);
    Polynomial c = gcd(ca, cb);
    Polynomial p = *divide_exact(a, ca), q = *divide_exact(b, cb);
    if (p.degree(x) < q.degree(x)) std::swap(p, q);
    while (!q.is_zero()) {
        if (q.degree(x) == 0) {
            p = Polynomial(1L);
            break;
        }
        Polynomial r = prem(p, q, x);
        p = q;
        q = r.is_zero() ? r : *divide_exact(r, content_in(r, x));
    }
    Polynomial core = p.degree(x) == 0 ? Polynomial(1L) : *divide_exact(p, content_in(p, x));
    return normalized(c * core);
}

Polynomial gcd_dispatch(const Polynomial& a, const Polynomial& b) {
    // a, b: primitive, trimmed, no monomial content, non-constant.
    if (a == b) return a;
    Universe ua = a.used_variables(), ub = b.used_variables();
    Universe only_a, only_b;
    std::set_difference(ua.begin(), ua.end(), ub.begin(), ub.end(), std::back_inserter(only_a));
    std::set_difference(ub.begin(), ub.end(), ua.begin(), ua.end(), std::back_inserter(only_b));
    if (!only_a.empty()) return normalized(gcd_with_coefficients(b, coefficients_wrt(a, only_a)));
    if (!only_b.empty()) return normalized(gcd_with_coefficients(a, coefficients_wrt(b, only_b)));

    const Universe& u = ua;  // same variable set on both sides
    Polynomial al = a.lifted(u), bl = b.lifted(u);
    Universe free_of;
    bool all_zero = true;
    for (std::size_t i = 0; i < u.size(); ++i) {
        std::uint32_t d = degree_bound(al, bl, i);
        if (d == 0) free_of.push_back(u[i]);
        else all_zero = false;
    }
    if (all_zero) return Polynomial(1L);
    if (!free_of.empty()) {
        auto cs = coefficients_wrt(a, free_of);
        auto ds = coefficients_wrt(b, free_of);
        cs.insert(cs.end(), ds.begin(), ds.end());
        return normalized(gcd_with_coefficients(cs.front(), cs));
    }
    if (auto h = heuristic_gcd(a, b)) return normalized(*h);
    return prs_gcd(a, b);
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() && b.is_zero()) return {};
    if (a.is_zero()) return normalized(b);
    if (b.is_zero()) return normalized(a);
    Polynomial pa = normalized(a), pb = normalized(b);
    // Monomial part of the gcd.
    Polynomial ma = pa.monomial_content(), mb = pb.monomial_content();
    Universe u = universe_union(ma.universe(), mb.universe());
    Polynomial mal = ma.lifted(u), mbl = mb.lifted(u);
    std::vector<std::uint32_t> row(u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        row[i] = std::min(mal.exponents(0)[i], mbl.exponents(0)[i]);
    Polynomial mono = Polynomial::from_terms(u, row, {Rational(1)});
    pa = normalized(pa.divided_by_monomial(ma));
    pb = normalized(pb.divided_by_monomial(mb));
    if (pa.is_constant() || pb.is_constant()) return mono.trimmed();
    return (mono * gcd_dispatch(pa, pb)).trimmed();
}

}  // namespace cuboid::algebra
