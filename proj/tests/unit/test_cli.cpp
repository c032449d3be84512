#include "doctest.h"

#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cuboid::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json parsed(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("generate emits exact fractions and the integer cuboid") {
    Run r = run({"generate", "1/2", "1/3"});
    REQUIRE(r.code == 0);
    auto j = parsed(r);
    CHECK(j["schema"] == 1);
    CHECK(j["quadruple"][1] == "7/16");
    CHECK(j["cuboid"]["u"][0] == "3/4");
    CHECK(j["cuboid"]["rectangular"] == false);
    CHECK(j["cuboid"]["perfect"]["scale"] == "1120");
    CHECK(j["cuboid"]["perfect"]["edges"][0] == "1120");
}

TEST_CASE("generate rejects points outside the domain") {
    Run r = run({"generate", "1/2", "9/10"});
    CHECK(r.code == 1);
    CHECK(parsed(r)["clause"] == "1 - mu^2 - 2mu > 0");
    CHECK(run({"generate", "2", "1/3"}).code == 1);
    CHECK(run({"generate", "1/2", "1/3", "5"}).code == 2);
    CHECK(run({"generate", "1/0", "1/3"}).code == 2);
    CHECK(run({"generate", "abc", "1/3"}).code == 2);
}

TEST_CASE("human output prints integers bare") {
    Run r = run({"--human", "generate", "1/2", "1/3"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("scale 1120: 1120 840 1035") != std::string::npos);
    CHECK(run({"--human", "--json", "examples"}).code == 2);
}

TEST_CASE("verify exit status and filter") {
    Run r = run({"verify", "--filter", "W.19", "--jobs", "1"});
    CHECK(r.code == 0);
    auto j = parsed(r);
    CHECK(j["records"].size() == 1);
    CHECK(j["all_zero"] == true);
    CHECK_FALSE(j["records"][0].contains("millis"));
    CHECK(run({"--manifest", "/nonexistent/manifest", "verify"}).code == 2);
}

TEST_CASE("refute") {
    Run r = run({"refute", "1/2", "1/4"});
    CHECK(r.code == 0);
    CHECK(parsed(r)["rows"].size() == 3);
    Run same = run({"refute", "1/2", "1/2"});
    CHECK(same.code == 1);
    CHECK(same.err.find("scenario inapplicable") != std::string::npos);
    CHECK(run({"refute", "1/2", "1/4", "1/10,x"}).code == 2);
}

TEST_CASE("argument errors exit 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"generate"}).code == 2);
    CHECK(run({"verify", "--bogus"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("examples and limit-check succeed") {
    Run e = run({"examples"});
    CHECK(e.code == 0);
    CHECK(parsed(e)["all_ok"] == true);
    Run l = run({"limit-check"});
    CHECK(l.code == 0);
    CHECK(parsed(l)["rectangular_battery"].size() == 8);
}
