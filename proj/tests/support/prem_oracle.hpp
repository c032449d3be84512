#pragma once

// Naive oracle: long division in v over the field of rational functions in
// the remaining variables.

#include <random>
#include <vector>

#include "cuboid/algebra/polynomial.hpp"
#include "cuboid/algebra/rational_function.hpp"

namespace oracle {

using cuboid::algebra::Polynomial;
using cuboid::algebra::RationalFunction;
using cuboid::algebra::VarId;

inline bool field_remainder_is_zero(const Polynomial& a, const Polynomial& b, VarId v) {
    std::vector<RationalFunction> r, d;
    for (auto& c : a.coefficients_in(v)) r.emplace_back(c);
    for (auto& c : b.coefficients_in(v)) d.emplace_back(c);
    while (!d.empty() && d.back().is_zero()) d.pop_back();
    while (!r.empty() && r.back().is_zero()) r.pop_back();
    while (r.size() >= d.size() && !r.empty()) {
        RationalFunction q = r.back() / d.back();
        std::size_t shift = r.size() - d.size();
        for (std::size_t i = 0; i < d.size(); ++i) r[i + shift] = r[i + shift] - q * d[i];
        r.pop_back();
        while (!r.empty() && cuboid::algebra::normal(r.back()).is_zero()) r.pop_back();
    }
    for (auto& c : r)
        if (!cuboid::algebra::normal(c).is_zero()) return false;
    return true;
}

struct PremAgreement {
    int instances = 0;
    int agree = 0;
    int zero_verdicts = 0;
};

// Random small a, b in x, y; every other instance is a planted multiple b*c
// (sometimes times a y-only unit) so both verdicts occur.
inline PremAgreement prem_agreement(unsigned long seed, int count) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coef(-3, 3);
    std::uniform_int_distribution<int> deg(0, 2);
    Polynomial x = Polynomial::var("x"), y = Polynomial::var("y");
    VarId vx = cuboid::algebra::variable("x");
    auto random_poly = [&](int dx, int dy) {
        Polynomial p;
        for (int i = 0; i <= dx; ++i)
            for (int j = 0; j <= dy; ++j) p = p + Polynomial(coef(rng)) * x.pow(i) * y.pow(j);
        return p;
    };
    PremAgreement out;
    while (out.instances < count) {
        Polynomial b = random_poly(1 + deg(rng) % 2, deg(rng));
        if (b.degree(vx) == 0) continue;
        Polynomial a = out.instances % 2 == 0 ? b * random_poly(deg(rng), deg(rng))
                                              : random_poly(b.degree(vx) + deg(rng), deg(rng));
        ++out.instances;
        bool fast = cuboid::algebra::prem(a, b, vx).is_zero();
        bool slow = field_remainder_is_zero(a, b, vx);
        out.agree += fast == slow;
        out.zero_verdicts += slow;
    }
    return out;
}

}  // namespace oracle
