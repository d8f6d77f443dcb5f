#include <doctest.h>

#include <json.hpp>

#include "ivp/cli.hpp"
#include "ivp/error.hpp"

using namespace ivp;
using json = nlohmann::json;

namespace {

cli::CommandResult run(std::vector<std::string> args) { return cli::run(args, cli::Options{}); }

} // namespace

TEST_CASE("factorial command") {
    auto r = run({"factorial", "--set", "squares", "--k", "3"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("360") != std::string::npos);

    auto j = json::parse(run({"factorial", "--set", "squares", "--k", "3", "--json"}).out);
    CHECK(j["schema"] == 1);
    CHECK(j["value"] == "360");
    CHECK(j["truncation_relative"] == false);
}

TEST_CASE("membership command exit codes") {
    auto r = run({"check-iv", "--set", "Z", "--poly", "(x^2+1)/2", "--json"});
    CHECK(r.exit_code == 1);
    auto j = json::parse(r.out);
    CHECK(j["member"] == false);
    CHECK(j["failing_node"] == "0");
    CHECK(run({"check-iv", "--set", "Z", "--poly", "(x^2-x)/2"}).exit_code == 0);
}

TEST_CASE("primitivity command") {
    CHECK(run({"check-primitive", "--set", "Z", "--poly", "(x^2+x)/2"}).exit_code == 0);
    auto r = run({"check-primitive", "--set", "Z", "--poly", "x^2+x", "--json"});
    CHECK(r.exit_code == 1);
    CHECK(json::parse(r.out)["offending_prime"] == "2");
}

TEST_CASE("irreducible command") {
    auto r = run({"irreducible", "--set", "Z", "--poly", "(x^2-x)/2", "--json", "--oracle"});
    CHECK(r.exit_code == 0);
    auto j = json::parse(r.out);
    CHECK(j["verdict"] == "irreducible");
    CHECK(j["splits"][0]["witness"]["p"] == "2");
    CHECK(j["splits"][0]["witness"]["r"] == 1);
    CHECK(j["oracle"]["agrees"] == true);

    CHECK(run({"irreducible", "--set", "Z", "--poly", "x^2(x-1)/2"}).exit_code == 1);

    auto strict = run({"irreducible", "--set", "Z", "--poly", "(18x^6-48x^5+47x^4-29x^2+41x+6)/6"});
    CHECK(strict.exit_code == 2);
    CHECK(strict.err.find("not integer-valued") != std::string::npos);

    auto formal = run({"irreducible", "--set", "Z", "--formal", "--json", "--poly", "(18x^6-48x^5+47x^4-29x^2+41x+6)/6"});
    CHECK(formal.exit_code == 0);
    auto fj = json::parse(formal.out);
    CHECK(fj["preconditions"]["integer_valued"] == false);
    const auto& w = fj["splits"][0]["witness"];
    CHECK(w["p"] == "3");
    CHECK(w["r"] == 0);
    CHECK(w["s"] == 1);
    CHECK(formal.err.find("not integer-valued") != std::string::npos);
}

TEST_CASE("finite sets are flagged") {
    auto r = run({"p-ordering", "--set", "{1,2,4,8}", "--p", "2", "--k", "3", "--json"});
    CHECK(r.exit_code == 0);
    auto j = json::parse(r.out);
    CHECK(j["truncation_relative"] == true);
    CHECK(j["p_sequence"] == json::array({0, 0, 1, 3}));
    CHECK(r.err.find("warning") != std::string::npos);
}

TEST_CASE("remaining commands") {
    auto dk = json::parse(run({"dk-ordering", "--set", "Z", "--d", "6", "--k", "2", "--json"}).out);
    CHECK(dk["nodes"] == json::array({"0", "1", "2"}));
    auto m = json::parse(run({"mu", "--set", "3Z", "--d", "6", "--p", "3", "--i", "1", "--json"}).out);
    CHECK(m["value"] == "1");
    auto fd = json::parse(run({"fixed-divisor", "--set", "Z", "--poly", "x^3-x", "--json"}).out);
    CHECK(fd["value"] == "6");
    auto nw = json::parse(run({"newton", "--poly", "2x^3+x+2", "--nodes", "0,1,2", "--json"}).out);
    CHECK(nw["coefficients"] == json::array({"2", "3", "6", "2"}));
    auto fc = json::parse(run({"factor", "--poly", "x^2-1", "--json"}).out);
    CHECK(fc["factors"].size() == 2);
}

TEST_CASE("usage and input errors") {
    CHECK(run({}).exit_code == 2);
    CHECK(run({"bogus"}).exit_code == 2);
    CHECK(run({"factorial", "--set", "Z"}).exit_code == 2);
    CHECK(run({"factorial", "--set", "Q", "--k", "2"}).exit_code == 2);
    CHECK(run({"mu", "--set", "Z", "--d", "2", "--p", "2", "--i", "4"}).exit_code == 2);
    auto help = run({"--help"});
    CHECK(help.exit_code == 0);
    CHECK(help.out.find("irreducible") != std::string::npos);
    auto parse = run({"check-iv", "--set", "Z", "--poly", "x^2+/"});
    CHECK(parse.exit_code == 2);
    CHECK(parse.err.find("position") != std::string::npos);
}

TEST_CASE("exception classification") {
    CHECK(cli::exit_code_for(std::make_exception_ptr(Error("bad input"))) == 2);
    CHECK(cli::exit_code_for(std::make_exception_ptr(std::logic_error("bug"))) == 3);
}

TEST_CASE("json output is byte-stable") {
    const std::vector<std::string> args{"irreducible", "--set", "3Z+1", "--poly", "x^2(x-1)/2", "--json"};
    const auto first = run(args), second = run(args);
    CHECK(first.out == second.out);
    CHECK_FALSE(first.out.empty());
}
