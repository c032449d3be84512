#include "doctest.h"

#include "cuboid/corpus/verify.hpp"
#include "cuboid/error.hpp"

using namespace cuboid;
using namespace cuboid::corpus;

namespace {

const std::vector<IdentityRecord>& manifest() {
    static const auto records = load_manifest(CUBOID_MANIFEST);
    return records;
}

const IdentityRecord& record(const std::string& id) {
    for (auto& r : manifest())
        if (r.id == id) return r;
    throw std::runtime_error("no record " + id);
}

}  // namespace

TEST_CASE("full corpus reduces to zero") {
    VerificationReport rep = run_corpus(manifest(), {}, 4);
    for (auto& r : rep.records) {
        INFO(r.id << ": " << r.detail << " (" << r.seconds << "s)");
        CHECK((r.verdict == VerdictKind::Zero || r.verdict == VerdictKind::Skipped));
    }
    MESSAGE("corpus: " << rep.zero << " zero, " << rep.skipped << " skipped, " << rep.seconds << "s");
}

TEST_CASE("mutated records reduce to nonzero") {
    // Spread across all three environments and every flag combination.
    const char* ids[] = {"D.33", "D.45", "W.19", "W.38", "W.41", "W.66", "P.5.23", "W.112.2", "W.126", "R.7.16.2"};
    for (const char* id : ids) {
        const IdentityRecord& rec = record(id);
        trig::Expr e = parse_expression(rec.expression, environment(rec.env));
        for (long f : {2L, -1L}) {
            INFO(id << " factor " << f);
            CHECK(verify_expression(rec, perturb(e, Rational(f))).verdict == VerdictKind::Nonzero);
        }
    }
}

TEST_CASE("W.19 with u3 coefficient 2") {
    const IdentityRecord& rec = record("W.19");
    auto e = parse_expression("(- (* 2 u1) (* 2 u3 (op+ alpha)) (* u4 (op- alpha)))", environment("SEC5"));
    RecordResult r = verify_expression(rec, e);
    CHECK(r.verdict == VerdictKind::Nonzero);
    CHECK(r.residue_terms > 0);
}

TEST_CASE("modular records need the basic equation") {
    IdentityRecord rec = record("W.19");
    rec.modular = false;
    CHECK(verify_identity(rec).verdict == VerdictKind::Nonzero);
    rec = record("W.124");
    rec.modular = false;
    CHECK(verify_identity(rec).verdict == VerdictKind::Nonzero);
}

TEST_CASE("rectangular records need the substitution") {
    IdentityRecord rec = record("R.7.15.1");
    rec.substitutions.clear();
    CHECK(verify_identity(rec).verdict == VerdictKind::Nonzero);
}

TEST_CASE("filtering") {
    VerificationReport rep = run_corpus(manifest(), "W.10*");
    REQUIRE_FALSE(rep.records.empty());
    for (auto& r : rep.records) CHECK(r.id.rfind("W.10", 0) == 0);
    CHECK(rep.all_zero());
    VerificationReport one = run_corpus(manifest(), "W.19");
    CHECK(one.records.size() == 1);
    VerificationReport none = run_corpus(manifest(), "X.*");
    CHECK(none.records.empty());
    CHECK(none.all_zero());
    CHECK(id_matches("W.107.2", "W.10*"));
    CHECK_FALSE(id_matches("W.19", "W.1?0"));
}

TEST_CASE("verdicts do not depend on the schedule") {
    VerificationReport a = run_corpus(manifest(), "W.1*", 1), b = run_corpus(manifest(), "W.1*", 3);
    CHECK(to_json(a).dump() == to_json(b).dump());
    io::Json j = to_json(a);
    CHECK(j["schema"] == 1);
    CHECK_FALSE(j["records"][0].contains("millis"));
    CHECK(to_json(a, true)["records"][0].contains("millis"));
}

TEST_CASE("skipped records are listed") {
    int skipped = 0;
    for (auto& r : manifest())
        if (r.status == RecordStatus::SkippedByPaper) {
            ++skipped;
            CHECK(verify_identity(r).verdict == VerdictKind::Skipped);
        }
    CHECK(skipped == 16);
}

TEST_CASE("environment values") {
    using algebra::RationalFunction;
    // SEC5 generator m against the direct formula at a sample point.
    const Environment& e5 = environment("SEC5");
    std::map<algebra::VarId, Rational> pt;
    Rational s[4] = {Rational(1, 2), Rational(7, 16), Rational(16, 35), Rational(5, 16)};
    for (int k = 0; k < 4; ++k) pt[algebra::variable("s" + std::to_string(k + 1))] = s[k];
    auto u = [&](int k) -> Rational { return (1 - s[k - 1] * s[k - 1]) / (2 * s[k - 1]); };
    Rational m = (2 * u(2) + u(3) - u(4)) / (2 * u(1) + u(3) + u(4));
    CHECK(e5.angles.generator("alpha").evaluate(pt) == m);
    CHECK(edge_u(1).evaluate(pt) == Rational(3, 4));
    CHECK(edge_v(1).evaluate(pt) == Rational(5, 4));

    // SEC4: n = 0 collapses m to u2/u1.
    const Environment& e4 = environment("SEC4");
    RationalFunction m0 = e4.angles.generator("alpha").evaluated(algebra::variable("n"), Rational(0));
    CHECK(m0 == RationalFunction::var("u2") / RationalFunction::var("u1"));

    // SEC7: M1^2 - M^2 - 1/u1^2 vanishes modulo the basic equation.
    IdentityRecord rec;
    rec.id = "adhoc";
    rec.env = "SEC7";
    rec.modular = true;
    rec.expression = "(- (^ M1 2) (^ M 2) (/ 1 (^ u1 2)))";
    CHECK(verify_identity(rec).verdict == VerdictKind::Zero);

    CHECK_THROWS_AS(environment("SEC9"), Error);
    CHECK_THROWS_AS(e5.angle("beta"), Error);
}

TEST_CASE("expression parser") {
    const Environment& env = environment("SEC5");
    CHECK_NOTHROW(parse_expression("(+ 1/2 -3 s1 (^ s2 -2) (sqrt2) (chalf alpha))", env));
    CHECK_NOTHROW(parse_expression("(sin (a- pi4 (a* 1/2 alpha) alpha1))", env));
    auto kind = [&](const std::string& text) {
        try {
            parse_expression(text, env);
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::Io;  // sentinel: no error
    };
    CHECK(kind("(+ 1 2") == ErrorKind::Parse);
    CHECK(kind("(+ 1 2))") == ErrorKind::Parse);
    CHECK(kind("()") == ErrorKind::Parse);
    CHECK(kind("(frob s1)") == ErrorKind::Parse);
    CHECK(kind("(^ s1 1/2)") == ErrorKind::Parse);
    CHECK(kind("(sin 1 2)") == ErrorKind::Parse);
    CHECK(kind("zeta") == ErrorKind::MalformedInput);
    CHECK(kind("(cos beta)") == ErrorKind::UnboundAngle);
    CHECK(kind("(cos (a* 1/4 alpha))") == ErrorKind::MalformedInput);
    CHECK(kind("1/0") == ErrorKind::Parse);
}

TEST_CASE("manifest parser") {
    auto recs = parse_manifest("# c\n\nA.1 | SEC5 | mod,halfangle | a | (+ s1 1)\nA.2 | SEC7 | plain,subst:s4=s3 | b | s1\n"
                               "A.3 | SEC4 | skipped-by-paper | c | -\n");
    REQUIRE(recs.size() == 3);
    CHECK(recs[0].modular);
    CHECK(recs[0].halfangle);
    CHECK(recs[0].line == 3);
    CHECK(recs[1].substitutions == std::vector<std::pair<std::string, std::string>>{{"s4", "s3"}});
    CHECK(recs[2].status == RecordStatus::SkippedByPaper);
    CHECK_THROWS_AS(parse_manifest("A | SEC5 | mod | a\n"), Error);
    CHECK_THROWS_AS(parse_manifest("A | SEC5 | mod | a | s1\nA | SEC5 | mod | a | s1\n"), Error);
    CHECK_THROWS_AS(parse_manifest("A | SEC5 | weird | a | s1\n"), Error);
    CHECK_THROWS_AS(parse_manifest("A | SEC5 | mod | a | -\n"), Error);
    CHECK_THROWS_AS(load_manifest("/nonexistent/manifest"), Error);
    // Errors in a record become a verdict, not an exception.
    IdentityRecord bad = parse_manifest("B | SEC5 | mod | a | (cos beta)\n")[0];
    CHECK(verify_identity(bad).verdict == VerdictKind::Error);
}
