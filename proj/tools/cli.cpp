#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <sstream>
#include <thread>

#include "cuboid/corpus/verify.hpp"
#include "cuboid/error.hpp"
#include "cuboid/io/json.hpp"
#include "cuboid/limit/analysis.hpp"
#include "cuboid/solutions/generator.hpp"

namespace cuboid::cli {

using algebra::Rational;
using io::Json;

namespace {

constexpr int kOk = 0, kFail = 1, kInput = 2;

struct Options {
    bool human = false;
    std::string manifest = CUBOID_MANIFEST;
};

std::string frac(const Rational& q, const Options& o) { return algebra::to_string(q, !o.human); }

std::string join(const std::vector<std::string>& xs, const char* sep = ", ") {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + xs[i];
    return s;
}

Json base(const char* command) {
    Json j;
    j["schema"] = 1;
    j["command"] = command;
    return j;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

Json integers(const auto& xs) {
    Json a = Json::array();
    for (auto& x : xs) a.push_back(x.get_str());
    return a;
}

// --- verify ---------------------------------------------------------------

int cmd_verify(const Options& o, const std::string& filter, unsigned jobs, bool timings, std::ostream& out,
               std::ostream& err) {
    std::vector<corpus::IdentityRecord> records;
    try {
        records = corpus::load_manifest(o.manifest);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kInput;
    }
    corpus::VerificationReport rep = corpus::run_corpus(records, filter, jobs);
    if (o.human) {
        for (auto& r : rep.records) {
            out << r.id << "  " << corpus::to_string(r.verdict);
            if (!r.detail.empty() && r.verdict != corpus::VerdictKind::Skipped) out << "  " << r.detail;
            if (timings) out << "  " << static_cast<long>(r.seconds * 1000) << " ms";
            out << "\n";
        }
        out << rep.zero << " zero, " << rep.nonzero << " nonzero, " << rep.errors << " error, " << rep.skipped
            << " skipped\n";
    } else {
        Json j = corpus::to_json(rep, timings);
        Json wrapped = base("verify");
        for (auto& [k, v] : j.items())
            if (k != "schema") wrapped[k] = v;
        emit(out, wrapped);
    }
    return rep.all_zero() ? kOk : kFail;
}

// --- generate -------------------------------------------------------------

Json cuboid_json(const model::SlantedCuboid& c, const Options& o) {
    Json j = io::to_json(c);
    if (o.human) return j;
    solutions::PerfectSlantedCuboid p = solutions::rescale_to_perfect(c);
    j["perfect"] = {{"scale", p.scale.get_str()},
                    {"edges", integers(p.edges)},
                    {"face_diagonals", integers(p.face_diagonals)},
                    {"space_diagonals", integers(p.space_diagonals)}};
    return j;
}

int cmd_generate(const Options& o, const std::string& s_text, const std::string& mu_text, int variant,
                 std::ostream& out, std::ostream& err) {
    Rational s, mu;
    try {
        s = algebra::parse_rational(s_text);
        mu = algebra::parse_rational(mu_text);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kInput;
    }
    solutions::Generated g = solutions::generate({s, mu, variant});
    Json j = base("generate");
    j["parameters"] = {{"s", frac(s, o)}, {"mu", frac(mu, o)}, {"variant", variant}};
    j["ok"] = g.verdict.ok;
    if (g.verdict.reason != "range") j["quadruple"] = io::fractions(g.quadruple);
    if (!g.verdict.ok) {
        j["reason"] = g.verdict.reason;
        j["clause"] = g.verdict.clause;
        err << "rejected (" << g.verdict.reason << "): " << g.verdict.clause << "\n";
    } else {
        j["cuboid"] = cuboid_json(*g.cuboid, o);
    }
    if (o.human) {
        if (g.verdict.reason != "range") {
            std::vector<std::string> qs;
            for (auto& x : g.quadruple) qs.push_back(frac(x, o));
            out << "quadruple: (" << join(qs) << ")\n";
        }
        if (g.cuboid) {
            std::vector<std::string> us, vs;
            for (int k = 0; k < 4; ++k) {
                us.push_back(frac(g.cuboid->u[k], o));
                vs.push_back(frac(g.cuboid->v[k], o));
            }
            out << "u: " << join(us) << "\nv: " << join(vs) << "\n";
            auto p = solutions::rescale_to_perfect(*g.cuboid);
            std::vector<std::string> all;
            for (auto& x : p.edges) all.push_back(x.get_str());
            for (auto& x : p.face_diagonals) all.push_back(x.get_str());
            for (auto& x : p.space_diagonals) all.push_back(x.get_str());
            out << "scale " << p.scale.get_str() << ": " << join(all, " ") << "\n";
        }
    } else {
        emit(out, j);
    }
    return g.verdict.ok ? kOk : kFail;
}

// --- examples -------------------------------------------------------------

int cmd_examples(const Options& o, std::ostream& out) {
    struct Example {
        Rational s, mu;
        model::Quadruple expected;
    };
    const Example examples[] = {
        {Rational(1, 2), Rational(1, 3), {Rational(1, 2), Rational(7, 16), Rational(16, 35), Rational(5, 16)}},
        {Rational(12, 25),
         Rational(1, 3),
         {Rational(12, 25), Rational(3367, 7200), Rational(1440, 3367), Rational(481, 1440)}}};
    bool all_ok = true;
    Json j = base("examples");
    Json list = Json::array();
    for (auto& ex : examples) {
        solutions::Generated g = solutions::generate({ex.s, ex.mu, 1});
        bool match = g.verdict.ok && g.quadruple == ex.expected;
        bool routes = solutions::special_example_equivalence(ex.s, ex.mu).ok;
        all_ok = all_ok && match && routes;
        Json e;
        e["s"] = frac(ex.s, o);
        e["mu"] = frac(ex.mu, o);
        e["quadruple"] = io::fractions(g.quadruple);
        e["matches_expected"] = match;
        e["special_example_routes_agree"] = routes;
        if (g.cuboid) e["cuboid"] = cuboid_json(*g.cuboid, o);
        list.push_back(std::move(e));
        if (o.human)
            out << "(" << frac(ex.s, o) << ", " << frac(ex.mu, o) << ") -> " << io::fractions(g.quadruple).dump()
                << (match ? "  matches" : "  MISMATCH") << (routes ? "" : "  routes differ") << "\n";
    }
    j["examples"] = std::move(list);
    Json fam;
    for (int v = 1; v <= 4; ++v) {
        bool ok = solutions::theorem61_symbolic_check(v);
        all_ok = all_ok && ok;
        fam[std::to_string(v)] = ok;
        if (o.human) out << "family " << v << " solves the basic equation: " << (ok ? "yes" : "NO") << "\n";
    }
    j["families_solve_basic_equation"] = std::move(fam);
    bool sym = solutions::special_example_symbolic();
    all_ok = all_ok && sym;
    j["special_example_symbolic"] = sym;
    j["all_ok"] = all_ok;
    if (o.human)
        out << "special example routes agree symbolically: " << (sym ? "yes" : "NO") << "\n";
    else
        emit(out, j);
    return all_ok ? kOk : kFail;
}

// --- refute ---------------------------------------------------------------

int cmd_refute(const Options& o, const std::string& ga_text, const std::string& ga1_text, const std::string& f_text,
               std::ostream& out, std::ostream& err) {
    Rational ga, ga1;
    std::vector<Rational> fs;
    try {
        ga = algebra::parse_rational(ga_text);
        ga1 = algebra::parse_rational(ga1_text);
        if (f_text.empty()) {
            fs = limit::default_f_sequence();
        } else {
            std::stringstream ss(f_text);
            for (std::string item; std::getline(ss, item, ',');) fs.push_back(algebra::parse_rational(item));
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kInput;
    }
    limit::RefutationReport rep;
    try {
        rep = limit::refutation_demo(ga, ga1, fs);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kFail;
    }
    bool ok = true;
    Json j = base("refute");
    j["gen_alpha"] = frac(ga, o);
    j["gen_alpha1"] = frac(ga1, o);
    j["sin2a"] = frac(rep.sin2a, o);
    j["sin2a1"] = frac(rep.sin2a1, o);
    j["truncation_constant"] = frac(rep.bound_constant, o);
    Json rows = Json::array();
    for (auto& r : rep.rows) {
        ok = ok && r.r_minus_r1 != 0 && r.within_bound;
        rows.push_back({{"f", frac(r.f, o)},
                        {"r", frac(r.r, o)},
                        {"r1", frac(r.r1, o)},
                        {"r_minus_r1", frac(r.r_minus_r1, o)},
                        {"D", frac(r.D, o)},
                        {"truncation_remainder", frac(r.remainder, o)},
                        {"within_bound", r.within_bound}});
        if (o.human)
            out << "f = " << frac(r.f, o) << ": r - r1 = " << frac(r.r_minus_r1, o) << ", D = " << frac(r.D, o)
                << (r.within_bound ? "" : "  (bound violated)") << "\n";
    }
    j["rows"] = std::move(rows);
    j["r_never_equals_r1"] = ok;
    if (!o.human) emit(out, j);
    return ok ? kOk : kFail;
}

// --- limit-check ----------------------------------------------------------

int cmd_limit_check(const Options& o, unsigned jobs, std::ostream& out, std::ostream& err) {
    std::vector<corpus::IdentityRecord> records;
    try {
        records = corpus::load_manifest(o.manifest);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kInput;
    }
    bool ok = true;
    Json j = base("limit-check");
    Json sym = Json::array();
    for (auto& [name, holds] : limit::symbolic_checks()) {
        ok = ok && holds;
        sym.push_back({{"identity", name}, {"holds", holds}});
        if (o.human) out << (holds ? "holds  " : "FAILS  ") << name << "\n";
    }
    j["symbolic"] = std::move(sym);
    corpus::VerificationReport rep = corpus::run_corpus(records, "R.*", jobs);
    ok = ok && rep.all_zero() && !rep.records.empty();
    Json battery = Json::array();
    for (auto& r : rep.records) {
        battery.push_back({{"id", r.id}, {"verdict", corpus::to_string(r.verdict)}});
        if (o.human) out << r.id << "  " << corpus::to_string(r.verdict) << "\n";
    }
    j["rectangular_battery"] = std::move(battery);
    j["all_ok"] = ok;
    if (!o.human) emit(out, j);
    return ok ? kOk : kFail;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact tools for slanted cuboid identities, generators and limits", "cuboid"};
    app.require_subcommand(1);
    Options o;
    bool json_flag = false;
    auto* json_opt = app.add_flag("--json", json_flag, "Machine-readable output (default)");
    app.add_flag("--human", o.human, "Plain text output")->excludes(json_opt);
    app.add_option("--manifest", o.manifest, "Identity manifest path");

    std::string filter;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    bool timings = false;
    auto* verify = app.add_subcommand("verify", "Reduce every identity in the manifest");
    verify->add_option("--filter", filter, "Glob on record ids, e.g. W.10*");
    verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    verify->add_flag("--timings", timings, "Include per-record wall time");

    std::string s_text, mu_text;
    int variant = 1;
    auto* generate = app.add_subcommand("generate", "Generator quadruple from (s, mu)");
    generate->add_option("s", s_text, "s in (0,1)")->required();
    generate->add_option("mu", mu_text, "mu with 1 - mu^2 - 2mu > 0")->required();
    generate->add_option("variant", variant, "Family 1..4")->check(CLI::Range(1, 4));

    auto* examples = app.add_subcommand("examples", "Reproduce the worked examples");

    std::string ga, ga1, f_list;
    auto* refute = app.add_subcommand("refute", "r - r1 along a sequence f -> 0");
    refute->add_option("gen_alpha", ga)->required();
    refute->add_option("gen_alpha1", ga1)->required();
    refute->add_option("f_list", f_list, "Comma-separated f values");

    unsigned limit_jobs = jobs;
    auto* limit_check = app.add_subcommand("limit-check", "Symbolic limit identities and the rectangular battery");
    limit_check->add_option("--jobs", limit_jobs, "Worker threads")->check(CLI::PositiveNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInput;
    }

    try {
        if (*verify) return cmd_verify(o, filter, jobs, timings, out, err);
        if (*generate) return cmd_generate(o, s_text, mu_text, variant, out, err);
        if (*examples) return cmd_examples(o, out);
        if (*refute) return cmd_refute(o, ga, ga1, f_list, out, err);
        if (*limit_check) return cmd_limit_check(o, limit_jobs, out, err);
    } catch (const Error& e) {
        err << "error (" << kind_name(e.kind()) << "): " << e.what() << "\n";
        bool input = e.kind() == ErrorKind::Parse || e.kind() == ErrorKind::Io;
        return input ? kInput : kFail;
    }
    return kInput;
}

}  // namespace cuboid::cli
