#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(LEGDEF_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("newton subcommand emits the diagram") {
    RunResult r = run("newton --equation \"y^2-x^5\" --format json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("schema") == 1);
    REQUIRE(j.at("faces").size() == 1);
    CHECK(j.at("faces")[0].at("u") == 2);
    CHECK(j.at("faces")[0].at("v") == 5);
    CHECK(j.at("faces")[0].at("d") == 10);
}

TEST_CASE("json output is byte-deterministic") {
    for (const char* cmd :
         {"newton --equation \"(y^3+x^7)*(y^3+x^10)\" --format json",
          "semigroup --equation \"y^3-x^10\" --conormal --format json",
          "classify --equation \"y^2-x^5\" --format json"}) {
        RunResult a = run(cmd), b = run(cmd);
        CHECK(a.exit_code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("classify subcommand") {
    RunResult r = run("classify --equation \"(y^3+x^7)*(y^3+x^10)\" --format json");
    REQUIRE(r.exit_code == 0);
    CHECK(nlohmann::json::parse(r.out).at("class") == "NND");
}

TEST_CASE("conormal semigroup values") {
    RunResult r = run("semigroup --equation \"y^3-x^10\" --conormal --format json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("branches")[0].at("conductor") == 12);
    std::vector<int> gaps = j.at("branches")[0].at("gaps");
    CHECK(gaps == std::vector<int>{1, 2, 4, 5, 8, 11});
}

TEST_CASE("parse failures exit with 2") {
    CHECK(run("newton --equation \"y^2-+x^5\"").exit_code == 2);
    CHECK(run("newton").exit_code == 2);  // missing required input
    CHECK(run("contact-act --equation \"y^2-x^5\" --transform \"not json\"").exit_code == 2);
}

TEST_CASE("precondition failures exit with 3") {
    // not in generic position: the tangent cone is the vertical line
    CHECK(run("conormal --equation \"x^2-y^5\"").exit_code == 3);
}

TEST_CASE("singular format for the relative conormal routine") {
    RunResult r = run(
        "conormal --equation \"z^2+y^3+s*x^4\" --space-vars x,y,z --params s "
        "--format singular");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.rfind("ring r=0,(", 0) == 0);
    CHECK(r.out.find("poly F=") != std::string::npos);
    CHECK(r.out.find("ideal J=") != std::string::npos);
}

TEST_CASE("truncation flag is honoured") {
    RunResult a = run("conormal --equation \"y^2-x^5\" --truncation 9 --format json");
    REQUIRE(a.exit_code == 0);
    auto j = nlohmann::json::parse(a.out);
    std::string x = j.at("branches")[0].at("x");
    CHECK(x.find("t^2") != std::string::npos);
}

TEST_CASE("equisingular comparison") {
    RunResult same = run(
        "equisingular --equation \"y^2-x^5\" --equation2 \"y^2-4*x^5\" --format json");
    REQUIRE(same.exit_code == 0);
    CHECK(nlohmann::json::parse(same.out).at("equal") == true);
    RunResult diff = run(
        "equisingular --equation \"y^2-x^5\" --equation2 \"y^2-x^7\" --format json");
    REQUIRE(diff.exit_code == 0);
    CHECK(nlohmann::json::parse(diff.out).at("equal") == false);
}

TEST_CASE("semiuniversal display") {
    RunResult r = run("semiuniversal --equation \"y^2-x^5\" --format json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.contains("dimension"));
    CHECK(j.contains("G"));
}
