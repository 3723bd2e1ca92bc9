#include <doctest.h>

#include <nlohmann/json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "quadring/cli.hpp"
#include "quadring/fibapp.hpp"
#include "quadring/report.hpp"
#include "quadring/textio.hpp"

using namespace quadring;
using nlohmann::json;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("signed decimal parsing") {
    CHECK(parse_bigint_text("55") == BigInt(55));
    CHECK(parse_bigint_text("  -7 ") == BigInt(-7));
    CHECK(parse_bigint_text("\xe2\x88\x92" "42") == BigInt(-42));  // U+2212 minus

    CHECK_THROWS_AS(parse_bigint_text(""), ParseError);
    CHECK_THROWS_AS(parse_bigint_text("12a"), ParseError);
    try {
        parse_bigint_text("1 2");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("position") != std::string::npos);
    }
}

TEST_CASE("matrix and pair grammar round-trips") {
    const Mat2<BigInt> m = parse_mat2_text("1, 2; 3, 4");
    CHECK(m == parse_mat2_text(to_text(m)));
    CHECK(to_text(m) == "1,2;3,4");

    const auto pair = parse_pair_text(" 8 , 5 ");
    CHECK(pair.first == BigInt(8));
    CHECK(pair.second == BigInt(5));

    CHECK_THROWS_AS(parse_mat2_text("1,2;3"), ParseError);
    CHECK_THROWS_AS(parse_mat2_text("1,2;3,4;5,6"), ParseError);
    CHECK_THROWS_AS(parse_pair_text("8"), ParseError);
}

TEST_CASE("report serialization is well-formed JSON") {
    Report report;
    report.add_equal("halves agree", "3", "3");
    report.add_equal("mismatch", "1", "2");
    const json j = json::parse(to_json_text(report, true));
    REQUIRE(j.at("checks").is_array());
    REQUIRE(j.at("checks").size() == 2);
    CHECK(j.at("checks")[0].at("pass") == true);
    CHECK(j.at("checks")[1].at("pass") == false);
    CHECK(j.at("pass") == false);
}

TEST_CASE("pm subcommand, all engines and rings") {
    for (const std::string engine : {"iterative", "binomial", "doubling"}) {
        const auto r = run_cli({"pm", "--t", "1", "--d", "-1", "--m", "10", "--engine", engine});
        CHECK(r.code == 0);
        CHECK(r.out == "55\n");
    }
    const auto mod = run_cli({"pm", "--t", "1", "--d", "-1", "--m", "10", "--mod", "97"});
    CHECK(mod.code == 0);
    CHECK(mod.out == "55\n");

    // U+2212 accepted in option values
    const auto neg = run_cli({"pm", "--t", "2", "--d", "3", "--m", "5"});
    CHECK(neg.out == "-11\n");
    const auto u2212 = run_cli({"pm", "--t", "\xe2\x88\x92" "1", "--d", "\xe2\x88\x92" "1", "--m", "10"});
    CHECK(u2212.code == 0);
    CHECK(u2212.out == "-55\n");
}

TEST_CASE("pm json payload") {
    const auto r = run_cli({"pm", "--t", "1", "--d", "-1", "--m", "10", "--json"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j.at("subcommand") == "pm");
    CHECK(j.at("ring") == "bigint");
    CHECK(j.at("m") == "10");
    CHECK(j.at("value") == "55");
    CHECK(j.at("value").is_string());  // numbers ride as strings end to end
}

TEST_CASE("xpow and matpow") {
    const auto x = run_cli({"xpow", "--t", "1", "--d", "-1", "--m", "6"});
    CHECK(x.code == 0);
    CHECK(x.out == "8,5\n");

    const auto m = run_cli({"matpow", "--matrix", "1,1;1,0", "--m", "5"});
    CHECK(m.code == 0);
    CHECK(m.out == "8,5;5,3\n");

    // plain output re-parses through the input grammar
    const auto again = run_cli({"matpow", "--matrix", m.out.substr(0, m.out.size() - 1), "--m", "1"});
    CHECK(again.out == m.out);
}

TEST_CASE("fib, lucas, fibnm") {
    CHECK(run_cli({"fib", "--n", "20"}).out == "6765\n");
    CHECK(run_cli({"lucas", "--n", "10"}).out == "123\n");

    const auto big = run_cli({"fib", "--n", "300", "--json"});
    const json j = json::parse(big.out);
    REQUIRE(j.at("value").is_string());
    CHECK(j.at("value").get<std::string>() == fibonacci(300).to_decimal());

    const auto fnm = run_cli({"fibnm", "--n", "3", "--m", "4", "--json"});
    REQUIRE(fnm.code == 0);
    const json f = json::parse(fnm.out);
    CHECK(f.at("fnm") == "144");
    CHECK(f.at("check") == "144");
    CHECK(f.at("pass") == true);
    CHECK(f.size() == 3);
}

TEST_CASE("symbolic output") {
    const auto r = run_cli({"symbolic", "--m", "5"});
    CHECK(r.code == 0);
    CHECK(r.out == "T^4 - 3*T^2*D + D^2\n");
    CHECK(run_cli({"symbolic", "--m", "0"}).out == "0\n");
}

TEST_CASE("verify subcommand, fast scope") {
    const auto r = run_cli({"verify", "--scope", "symbolic"});
    CHECK(r.code == 0);
    CHECK(r.out.find("[PASS]") != std::string::npos);
    CHECK(r.out.find("ok:") != std::string::npos);

    const auto j = run_cli({"verify", "--scope", "symbolic", "--json"});
    CHECK(json::parse(j.out).at("pass") == true);
}

TEST_CASE("bench subcommand emits operation counts") {
    const auto r = run_cli({"bench", "--ms", "1", "--json"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    REQUIRE(j.at("records").is_array());
    CHECK(j.at("records").size() == 3);  // one per engine
    for (const auto& rec : j.at("records")) {
        CHECK(rec.at("m") == "1");
        CHECK(rec.at("multiplications") == "0");  // x^1 needs no multiplies
    }
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli({"nosuchcommand"}).code == 2);
    CHECK(run_cli({"pm", "--t", "1", "--d", "1"}).code == 2);  // --m missing
    CHECK(run_cli({"pm", "--t", "1", "--d", "1", "--m", "3", "--engine", "fast"}).code == 2);
    CHECK(run_cli({"pm", "--t", "1", "--d", "1", "--m", "3", "--mod", "1"}).code == 2);
    CHECK(run_cli({"fibnm", "--n", "0", "--m", "4"}).code == 2);
    CHECK(run_cli({"verify", "--scope", "everything"}).code == 2);
    CHECK(run_cli({"bench", "--ring", "float"}).code == 2);

    const auto bad = run_cli({"matpow", "--matrix", "1,2;3", "--m", "2"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("position") != std::string::npos);
}

TEST_CASE("help requests succeed") {
    const auto top = run_cli({"--help"});
    CHECK(top.code == 0);
    CHECK(top.out.find("pm") != std::string::npos);

    const auto sub = run_cli({"pm", "--help"});
    CHECK(sub.code == 0);
    CHECK(sub.out.find("--engine") != std::string::npos);
}
