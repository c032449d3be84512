// One PASS/FAIL line per acceptance criterion; exit status is the number of
// failures.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "cuboid/corpus/verify.hpp"
#include "cuboid/limit/analysis.hpp"
#include "cuboid/model/cuboid.hpp"
#include "cuboid/solutions/generator.hpp"
#include "prem_oracle.hpp"

using namespace cuboid;
using algebra::Polynomial;
using algebra::Rational;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

Outcome examples_reproduce() {
    struct Case {
        std::vector<std::string> args;
        std::vector<std::string> expected;
    };
    const Case cases[] = {{{"generate", "1/2", "1/3", "1"}, {"1/2", "7/16", "16/35", "5/16"}},
                          {{"generate", "12/25", "1/3", "1"}, {"12/25", "3367/7200", "1440/3367", "481/1440"}}};
    for (auto& c : cases) {
        std::ostringstream out, err;
        int code = cli::run(c.args, out, err);
        if (code != 0) return {false, "exit " + std::to_string(code) + " for " + c.args[1]};
        auto j = nlohmann::json::parse(out.str());
        if (j["quadruple"].get<std::vector<std::string>>() != c.expected)
            return {false, "quadruple " + j["quadruple"].dump()};
    }
    return {true, "both worked quadruples exact"};
}

Outcome families_solve() {
    for (int v = 1; v <= 4; ++v)
        if (!solutions::theorem61_residue(v).is_zero()) return {false, "variant " + std::to_string(v) + " nonzero"};
    if (solutions::theorem61_residue(1, true).is_zero()) return {false, "mutation still zero"};
    return {true, "4 variants zero, mutation nonzero"};
}

Outcome corpus_zero() {
    auto records = corpus::load_manifest(CUBOID_MANIFEST);
    corpus::VerificationReport rep = corpus::run_corpus(records, {}, 1);
    if (!rep.all_zero() || rep.errors || rep.nonzero)
        return {false, std::to_string(rep.nonzero) + " nonzero, " + std::to_string(rep.errors) + " errors"};
    const char* controls[] = {"D.33", "D.45", "W.19", "W.38", "W.41", "W.66", "P.5.23", "W.112.2", "W.126", "R.7.16.2"};
    int nonzero = 0;
    for (const char* id : controls)
        for (auto& rec : records)
            if (rec.id == id) {
                trig::Expr e = corpus::parse_expression(rec.expression, corpus::environment(rec.env));
                nonzero += corpus::verify_expression(rec, corpus::perturb(e)).verdict == corpus::VerdictKind::Nonzero;
            }
    if (nonzero != 10) return {false, std::to_string(nonzero) + "/10 controls nonzero"};
    std::ostringstream d;
    d << rep.zero << " zero, " << rep.skipped << " skipped, 10/10 controls nonzero, " << rep.seconds << " s";
    return {true, d.str()};
}

Outcome golden_basic_equation() {
    Polynomial s1 = Polynomial::var("s1"), s2 = Polynomial::var("s2"), s3 = Polynomial::var("s3"),
               s4 = Polynomial::var("s4");
    Polynomial two(2L), four(4L);
    // Printed order.
    Polynomial golden = s4.pow(4) * s1.pow(2) * s2.pow(2) * s3.pow(2) + s3.pow(4) * s1.pow(2) * s2.pow(2) * s4.pow(2) -
                        two * s2.pow(4) * s1.pow(2) * s3.pow(2) * s4.pow(2) -
                        two * s1.pow(4) * s2.pow(2) * s3.pow(2) * s4.pow(2) +
                        four * s1.pow(2) * s2.pow(2) * s3.pow(2) * s4.pow(2) -
                        two * s2.pow(2) * s3.pow(2) * s4.pow(2) - two * s1.pow(2) * s3.pow(2) * s4.pow(2) +
                        s1.pow(2) * s2.pow(2) * s4.pow(2) + s1.pow(2) * s2.pow(2) * s3.pow(2);
    Polynomial p = model::basic_equation();
    if (golden.size() != 9 || !(p == golden)) return {false, "coefficients differ from printed form"};
    Polynomial c = model::cleared_basic_equation();
    Rational k = c.coefficient_of({{algebra::variable("s1"), 2}, {algebra::variable("s2"), 2},
                                   {algebra::variable("s3"), 2}});
    if (k == 0 || !(c == Polynomial(k) * p)) return {false, "cleared derivation is not a unit multiple"};
    return {true, "9 terms match; derivation = " + algebra::to_string(k) + " * printed"};
}

Outcome prem_oracle() {
    oracle::PremAgreement r = oracle::prem_agreement(20261016, 200);
    std::string d = std::to_string(r.agree) + "/200 agree, " + std::to_string(r.zero_verdicts) + " zero";
    return {r.agree == 200 && r.zero_verdicts > 0 && r.zero_verdicts < 200, d};
}

Outcome inequality_sets_agree() {
    std::mt19937_64 rng(31);
    auto fraction = [&](long lo, long hi, long den) -> Rational {
        std::uniform_int_distribution<long> num(lo * den, hi * den);
        Rational r(num(rng), den);
        r.canonicalize();
        return r;
    };
    int tested = 0, valid = 0;
    while (tested < 500) {
        Rational u1 = fraction(0, 4, 9), u2 = fraction(0, 4, 5), m = fraction(-1, 2, 17);
        if (u1 <= 0 || u2 <= 0) continue;
        Rational d = m * m + 1;
        Rational u3 = (2 * m - m * m + 1) / d * u1 + (2 * m + m * m - 1) / d * u2;
        Rational u4 = (1 - m * m - 2 * m) / d * u1 + (2 * m - m * m + 1) / d * u2;
        if (u3 <= 0 || u4 <= 0) continue;
        if (u3 * u3 + u4 * u4 != 2 * u1 * u1 + 2 * u2 * u2) return {false, "sample off the parallelogram equation"};
        ++tested;
        bool first = model::inequality_set(model::kInequalitySets[0], u1, u2, u3, u4).ok;
        valid += first;
        for (auto set : model::kInequalitySets)
            if (model::inequality_set(set, u1, u2, u3, u4).ok != first) return {false, "sets disagree"};
    }
    return {valid > 0 && valid < 500, "500 samples, " + std::to_string(valid) + " inside"};
}

Outcome rectangular_battery() {
    auto rep = corpus::run_corpus(corpus::load_manifest(CUBOID_MANIFEST), "R.7.*", 1);
    std::string d = std::to_string(rep.zero) + "/" + std::to_string(rep.records.size()) + " zero";
    return {rep.records.size() == 8 && rep.zero == 8, d};
}

Outcome refutation() {
    auto rep = limit::refutation_demo(Rational(1, 2), Rational(1, 4), limit::default_f_sequence());
    for (auto& row : rep.rows) {
        if (row.r_minus_r1 == 0) return {false, "r = r1 at f = " + algebra::to_string(row.f)};
        if (!row.within_bound) return {false, "truncation bound violated"};
    }
    // |D| shrinks with f.
    for (std::size_t i = 1; i < rep.rows.size(); ++i)
        if (algebra::abs(rep.rows[i].D) >= algebra::abs(rep.rows[i - 1].D)) return {false, "D does not shrink"};
    for (auto& [name, holds] : limit::symbolic_checks())
        if (!holds) return {false, name};
    return {true, "r - r1 != 0 for 3 values of f; D has factor f; symbolic identities hold"};
}

Outcome routes_agree() {
    return {solutions::special_example_symbolic(), "u2, u3, u4 identical rational functions"};
}

}  // namespace

int main() {
    const std::pair<const char*, std::function<Outcome()>> criteria[] = {
        {"worked examples reproduce exactly", examples_reproduce},
        {"two-parameter families solve the basic equation", families_solve},
        {"identity corpus reduces to zero", corpus_zero},
        {"basic equation golden form", golden_basic_equation},
        {"pseudo-remainder matches field division", prem_oracle},
        {"inequality sets agree", inequality_sets_agree},
        {"rectangular limit battery", rectangular_battery},
        {"refutation along f -> 0", refutation},
        {"special example routes agree", routes_agree},
    };
    int failures = 0, n = 0;
    for (auto& [name, check] : criteria) {
        ++n;
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        failures += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " " << n << " " << name << ": " << o.detail << " [" << secs
                  << " s]\n";
    }
    return failures;
}
