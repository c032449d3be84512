#include "cuboid/corpus/verify.hpp"

#include <fnmatch.h>

#include <atomic>
#include <chrono>
#include <thread>

#include "cuboid/error.hpp"
#include "cuboid/trig/expand.hpp"

namespace cuboid::corpus {

const char* to_string(VerdictKind v) {
    switch (v) {
        case VerdictKind::Zero: return "zero";
        case VerdictKind::Nonzero: return "nonzero";
        case VerdictKind::Error: return "error";
        case VerdictKind::Skipped: return "skipped-by-paper";
    }
    return "?";
}

namespace {

Polynomial apply_substitutions(Polynomial p, const IdentityRecord& rec) {
    for (auto& [from, to] : rec.substitutions) {
        Polynomial target;
        if (std::isdigit(static_cast<unsigned char>(to[0])) || to[0] == '-')
            target = Polynomial(algebra::parse_rational(to));
        else
            target = Polynomial::var(to);
        p = p.substituted(algebra::variable(from), target);
    }
    return p;
}

}  // namespace

std::vector<Polynomial> residues(const IdentityRecord& rec, const trig::Expr& e) {
    const Environment& env = environment(rec.env);
    if (rec.modular && !env.modulus) throw Error(ErrorKind::Inapplicable, rec.env + " has no modulus");
    // Reducing c^2 -> 1/(1+g^2) is an identity, so it is applied to every
    // record; the halfangle flag only documents the original route.
    trig::AtomPolynomial a = trig::half_angle_reduce(trig::expand(e, env.angles), env.angles);
    std::vector<Polynomial> out;
    for (auto& [mono, coeff] : a.terms()) {
        Polynomial p = algebra::substitute_cleared(coeff.numerator(), env.angles.slot_bindings()).first;
        p = apply_substitutions(std::move(p), rec);
        if (rec.modular) p = algebra::reduce_modulo(p, *env.modulus, env.modulus_var);
        if (!p.is_zero()) out.push_back(std::move(p));
    }
    return out;
}

RecordResult verify_expression(const IdentityRecord& rec, const trig::Expr& e) {
    RecordResult r;
    r.id = rec.id;
    r.env = rec.env;
    auto t0 = std::chrono::steady_clock::now();
    try {
        auto res = residues(rec, e);
        if (res.empty()) {
            r.verdict = VerdictKind::Zero;
        } else {
            r.verdict = VerdictKind::Nonzero;
            for (auto& p : res) {
                r.residue_terms += p.size();
                r.residue_degree = std::max(r.residue_degree, p.total_degree());
            }
            r.detail = std::to_string(res.size()) + " atom coefficient(s), " + std::to_string(r.residue_terms) +
                       " term(s), degree " + std::to_string(r.residue_degree);
        }
    } catch (const Error& err) {
        r.verdict = VerdictKind::Error;
        r.detail = std::string(kind_name(err.kind())) + ": " + err.what();
    } catch (const std::exception& err) {
        r.verdict = VerdictKind::Error;
        r.detail = err.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

RecordResult verify_identity(const IdentityRecord& rec) {
    if (rec.status == RecordStatus::SkippedByPaper) {
        RecordResult r;
        r.id = rec.id;
        r.env = rec.env;
        r.verdict = VerdictKind::Skipped;
        r.detail = "not verified in the source";
        return r;
    }
    try {
        return verify_expression(rec, parse_expression(rec.expression, environment(rec.env)));
    } catch (const Error& err) {
        RecordResult r;
        r.id = rec.id;
        r.env = rec.env;
        r.verdict = VerdictKind::Error;
        r.detail = std::string(kind_name(err.kind())) + ": " + err.what();
        return r;
    }
}

bool id_matches(const std::string& id, const std::string& filter) {
    return filter.empty() || fnmatch(filter.c_str(), id.c_str(), 0) == 0;
}

VerificationReport run_corpus(const std::vector<IdentityRecord>& records, const std::string& filter,
                              unsigned jobs) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<const IdentityRecord*> selected;
    for (auto& r : records)
        if (id_matches(r.id, filter)) selected.push_back(&r);
    VerificationReport rep;
    rep.records.resize(selected.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < selected.size();) rep.records[i] = verify_identity(*selected[i]);
    };
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(selected.size())));
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    }
    for (auto& r : rep.records) {
        switch (r.verdict) {
            case VerdictKind::Zero: ++rep.zero; break;
            case VerdictKind::Nonzero: ++rep.nonzero; break;
            case VerdictKind::Error: ++rep.errors; break;
            case VerdictKind::Skipped: ++rep.skipped; break;
        }
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

io::Json to_json(const VerificationReport& r, bool timings) {
    io::Json j;
    j["schema"] = 1;
    io::Json recs = io::Json::array();
    for (auto& x : r.records) {
        io::Json e;
        e["id"] = x.id;
        e["env"] = x.env;
        e["verdict"] = to_string(x.verdict);
        if (!x.detail.empty()) e["detail"] = x.detail;
        if (x.verdict == VerdictKind::Nonzero) {
            e["residue_terms"] = x.residue_terms;
            e["residue_degree"] = x.residue_degree;
        }
        if (timings) e["millis"] = static_cast<long>(x.seconds * 1000);
        recs.push_back(std::move(e));
    }
    j["records"] = std::move(recs);
    j["totals"] = {{"records", r.records.size()}, {"zero", r.zero}, {"nonzero", r.nonzero},
                   {"error", r.errors},           {"skipped", r.skipped}};
    j["all_zero"] = r.all_zero();
    return j;
}

trig::Expr perturb(const trig::Expr& e, const Rational& factor) {
    using trig::Expr;
    if (e.kind() == Expr::Kind::Add && !e.node().children.empty()) {
        std::vector<Expr> terms = e.node().children;
        terms[0] = Expr(factor) * terms[0];
        return Expr::sum(terms);
    }
    return e + Expr(factor);
}

}  // namespace cuboid::corpus
