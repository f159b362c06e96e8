#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "symdisc/cli.hpp"

using namespace symdisc;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome drive(const JobSpec& spec) {
    std::ostringstream out, err;
    int code = run(spec, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("evaluate a concrete quadratic") {
    JobSpec spec;
    spec.command = "evaluate";
    spec.n = 4;
    spec.r = 2;
    spec.coefficients = {{"2", "1"}, {"1,1", "1"}};
    auto res = drive(spec);
    CHECK(res.code == 0);
    CHECK(res.out == "5\n");
    CHECK(res.err.empty());
}

TEST_CASE("discriminant text output carries the factorization") {
    JobSpec spec;
    spec.command = "discriminant";
    spec.n = 4;
    spec.r = 2;
    spec.coefficients = {{"2", "1"}, {"1,1", "1"}};
    auto res = drive(spec);
    CHECK(res.code == 0);
    CHECK(res.out.find("C2^3") != std::string::npos);
    CHECK(res.out.find("value: 5") != std::string::npos);
    CHECK(res.out.find("regime: proven") != std::string::npos);
}

TEST_CASE("json output embeds its own job spec and round-trips") {
    JobSpec spec;
    spec.command = "discriminant";
    spec.n = 3;
    spec.r = 3;
    spec.symbolic = true;
    spec.format = "json";
    auto res = drive(spec);
    REQUIRE(res.code == 0);
    CHECK(res.out.find("\"regime_flag\": \"proven\"") != std::string::npos);
    CHECK(res.out.find("\"cr_exponent\"") != std::string::npos);
    CHECK(res.out.find("\"nonzero_parts\"") != std::string::npos);
    // Feeding the emitted document back reproduces the job byte for byte.
    JobSpec again = job_from_json(res.out);
    CHECK(again.command == "discriminant");
    CHECK(again.n == 3);
    CHECK(again.r == 3);
    CHECK(again.symbolic);
    CHECK(again.format == "json");
    auto res2 = drive(again);
    CHECK(res2.out == res.out);
}

TEST_CASE("job specs parse from plain json") {
    JobSpec spec = job_from_json(R"({
        "command": "evaluate", "n": 2, "r": 3,
        "coefficients": {"3": "1", "2,1": "-1/2"},
        "format": "text"
    })");
    CHECK(spec.command == "evaluate");
    CHECK(spec.coefficients.at("2,1") == "-1/2");
    auto res = drive(spec);
    CHECK(res.code == 0);
    CHECK_THROWS_AS(job_from_json("not json"), ParseError);
    CHECK_THROWS_AS(job_from_json("{}"), ParseError);
}

TEST_CASE("verification runs are deterministic in the seed") {
    JobSpec spec;
    spec.command = "verify";
    spec.n = 2;
    spec.r = 3;
    spec.trials = 4;
    spec.seed = 7;
    auto a = drive(spec);
    auto b = drive(spec);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == "engine == sylvester-oracle at 4/4 points\n");

    spec.n = 3;
    spec.trials = 2;
    auto c = drive(spec);
    CHECK(c.code == 0);
    CHECK(c.out == "engine == hessian-oracle at 2/2 points\n");
}

TEST_CASE("parse failures exit with code 2") {
    JobSpec spec;
    spec.command = "evaluate";
    spec.n = 2;
    spec.r = 3;
    spec.coefficients = {{"3", "0.5"}};
    auto res = drive(spec);
    CHECK(res.code == 2);
    CHECK_FALSE(res.err.empty());

    spec.coefficients = {{"2,1", "1"}, {"4", "1"}};  // weight mismatch
    CHECK(drive(spec).code == 2);

    spec.coefficients.clear();
    spec.command = "no-such-command";
    CHECK(drive(spec).code == 2);

    spec.command = "evaluate";
    spec.format = "xml";
    CHECK(drive(spec).code == 2);
}

TEST_CASE("computation failures exit with code 3") {
    JobSpec spec;
    spec.command = "verify";
    spec.n = 7;  // no oracle reaches n = 7
    spec.r = 3;
    auto res = drive(spec);
    CHECK(res.code == 3);
    CHECK_FALSE(res.err.empty());

    JobSpec cf;
    cf.command = "closed-form";
    cf.n = 3;
    cf.r = 5;  // no closed form beyond r = 3
    CHECK(drive(cf).code == 3);
}

TEST_CASE("closed-form variants are selectable") {
    JobSpec spec;
    spec.command = "closed-form";
    spec.n = 5;
    spec.r = 3;
    auto prod = drive(spec);
    CHECK(prod.code == 0);
    spec.variant = "b-form";
    auto bform = drive(spec);
    CHECK(bform.code == 0);
    CHECK(prod.out != bform.out);
    spec.variant = "cursive";
    CHECK(drive(spec).code == 2);
}

TEST_CASE("berwald-moor command reports the vanishing family") {
    JobSpec spec;
    spec.command = "berwald-moor";
    auto res = drive(spec);
    CHECK(res.code == 0);
    CHECK(res.out.find("identically zero") != std::string::npos);
}

TEST_CASE("antisym command covers both regimes") {
    JobSpec spec;
    spec.command = "antisym";
    spec.n = 4;
    spec.r = 4;
    auto res = drive(spec);
    CHECK(res.code == 0);
    CHECK(res.out.find("vanishes-for-n>2") != std::string::npos);

    spec.n = 2;
    spec.r = 4;
    spec.coefficients = {{"3", "1"}, {"2,1", "1"}, {"1,1,1", "2"}};
    auto res2 = drive(spec);
    CHECK(res2.code == 0);
    CHECK(res2.out.find("n2-reduction") != std::string::npos);
}
