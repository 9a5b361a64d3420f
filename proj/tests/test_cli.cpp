#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "json.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

// Runs the CLI with stderr folded into stdout.
RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    const std::string cmd = env_prefix + std::string(VIETA_CLI_PATH) + " " + args + " 2>&1";
    RunResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 512> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) result.out.append(buf.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("trisect prints the third of the angle") {
    auto res = run_cli("trisect --deg 60");
    CHECK(res.exit_code == 0);
    CHECK(contains(res.out, "third: 20"));

    auto jres = run_cli("trisect --deg 90 --json");
    REQUIRE(jres.exit_code == 0);
    auto j = nlohmann::json::parse(jres.out);
    CHECK(j["third_deg"].get<double>() == Catch::Approx(30.0).margin(1e-9));
    CHECK(j["trace"]["verified"].get<bool>());
}

TEST_CASE("trisect rejects out-of-range angles with exit 1") {
    for (const char* bad : {"trisect --deg 0", "trisect --deg 180", "trisect --deg -5"}) {
        auto res = run_cli(bad);
        CHECK(res.exit_code == 1);
        CHECK(contains(res.out, "error"));
    }
}

TEST_CASE("usage errors exit 2 and name the problem") {
    CHECK(run_cli("trisect").exit_code == 2);          // missing --deg
    CHECK(run_cli("frobnicate").exit_code == 2);       // unknown subcommand
    CHECK(run_cli("").exit_code == 2);                 // nothing to do
    auto res = run_cli("trisect --deg 50 --banana 1");
    CHECK(res.exit_code == 2);
    CHECK(contains(res.out, "--banana"));
    CHECK(run_cli("pi").exit_code == 2);               // pi needs a subcommand
}

TEST_CASE("roots mode expands the monic polynomial exactly") {
    auto res = run_cli("--roots 1,2,3");
    CHECK(res.exit_code == 0);
    CHECK(contains(res.out, "x^3 - 6x^2 + 11x - 6 = 0"));
    CHECK(contains(res.out, "s_1: 6"));
    CHECK(contains(res.out, "s_2: 11"));
    CHECK(contains(res.out, "s_3: 6"));
    CHECK(contains(res.out, "vieta check: exact"));

    auto half = run_cli("--roots 1/2,1/3 --json");
    REQUIRE(half.exit_code == 0);
    auto j = nlohmann::json::parse(half.out);
    CHECK(j["exact"].get<bool>());
    CHECK(j["coefficients"][0].get<std::string>() == "1/6");
}

TEST_CASE("species subcommands parse and transliterate") {
    auto parsed = run_cli("species parse \"A cubus + B quad in A aequatur B quad in Z\"");
    CHECK(parsed.exit_code == 0);
    CHECK(contains(parsed.out, "dimension: 3"));

    auto modern = run_cli("species modern \"A cubus + B quad in A aequatur B quad in Z\"");
    CHECK(modern.exit_code == 0);
    CHECK(contains(modern.out, "a³ + b²a = b²z"));

    auto rejected = run_cli("species parse \"A quad + B aequatur C\"");
    CHECK(rejected.exit_code == 1);
    CHECK(contains(rejected.out, "heterogeneous"));
    CHECK(contains(rejected.out, "A quadratum (2)"));
    CHECK(contains(rejected.out, "B (1)"));
}

TEST_CASE("pi polygon prints the 393216-gon with ten good decimals") {
    auto res = run_cli("pi polygon --doublings 16");
    CHECK(res.exit_code == 0);
    CHECK(contains(res.out, "n=393216"));
    CHECK(contains(res.out, "3.1415926536"));

    auto csv = run_cli("pi polygon --doublings 3 --csv");
    CHECK(csv.exit_code == 0);
    CHECK(contains(csv.out, "k,sides,lower,upper,midpoint"));
    CHECK(contains(csv.out, "3,48,"));

    auto viete = run_cli("pi viete --terms 18");
    CHECK(viete.exit_code == 0);
    CHECK(contains(viete.out, "3.1415926535"));
}

TEST_CASE("json output round-trips at full precision") {
    auto res = run_cli("pi viete --terms 10 --json");
    REQUIRE(res.exit_code == 0);
    auto j = nlohmann::json::parse(res.out);
    REQUIRE(j["entries"].size() == 10);
    const double value = j["entries"][9]["value"].get<double>();
    // Serialize the parsed document again: doubles must survive unchanged.
    auto j2 = nlohmann::json::parse(j.dump());
    CHECK(j2["entries"][9]["value"].get<double>() == value);
    CHECK(j["pi"].get<double>() == Catch::Approx(3.14159265358979).margin(2e-6));
}

TEST_CASE("vanroomen reports the positive chord roots") {
    auto res = run_cli("vanroomen --c 1.4142135623730951");
    CHECK(res.exit_code == 0);
    CHECK(contains(res.out, "positive roots: 23"));
    CHECK(contains(res.out, "angle_deg=1 "));

    auto bad = run_cli("vanroomen --c 3.5");
    CHECK(bad.exit_code == 1);
}

TEST_CASE("cubic subcommand solves and reports the method") {
    auto res = run_cli("cubic --coeffs 0,-3,-1");
    CHECK(res.exit_code == 0);
    CHECK(contains(res.out, "method: trisection"));
    CHECK(contains(res.out, "1.87938524157"));

    auto rad = run_cli("cubic --coeffs 0,6,-20");
    CHECK(rad.exit_code == 0);
    CHECK(contains(rad.out, "method: radical"));
    CHECK(contains(rad.out, "root: 2\n"));
}

TEST_CASE("heptagon subcommand constructs and draws") {
    auto res = run_cli("heptagon");
    CHECK(res.exit_code == 0);
    CHECK(contains(res.out, "side: 0.867767478235"));
    CHECK(contains(res.out, "verified"));

    const std::string svg_path = "/tmp/vieta_cli_heptagon.svg";
    std::remove(svg_path.c_str());
    auto svg = run_cli("heptagon --svg " + svg_path);
    CHECK(svg.exit_code == 0);
    std::ifstream in(svg_path);
    REQUIRE(in.good());
    std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(contains(body, "<svg"));
    CHECK(contains(body, "viewBox"));
    CHECK(contains(body, ">V3<"));
    std::remove(svg_path.c_str());
}

TEST_CASE("apollonius subcommand reads json and writes solutions") {
    const std::string in_path = "/tmp/vieta_cli_apollonius.json";
    {
        std::ofstream out(in_path);
        out << R"({"circles":[{"cx":0,"cy":0,"r":1},{"cx":4,"cy":0,"r":1},{"cx":2,"cy":3,"r":1}]})";
    }
    auto res = run_cli("apollonius --input " + in_path);
    CHECK(res.exit_code == 0);
    CHECK(contains(res.out, "solutions: 8"));
    CHECK(contains(res.out, "similitude (1,2)"));

    auto jres = run_cli("apollonius --input " + in_path + " --json");
    REQUIRE(jres.exit_code == 0);
    auto j = nlohmann::json::parse(jres.out);
    REQUIRE(j["solutions"].size() == 8);
    CHECK(j["solutions"][0].contains("orientations"));

    auto missing = run_cli("apollonius --input /tmp/does_not_exist_vieta.json");
    CHECK(missing.exit_code == 1);

    {
        std::ofstream out(in_path);
        out << R"({"circles":[{"cx":0,"cy":0,"r":1},{"cx":0,"cy":0,"r":2},{"cx":4,"cy":0,"r":1}]})";
    }
    auto concentric = run_cli("apollonius --input " + in_path);
    CHECK(concentric.exit_code == 1);
    CHECK(contains(concentric.out, "concentric"));
    std::remove(in_path.c_str());
}

TEST_CASE("solve runs the full pipeline") {
    auto res = run_cli(
        "solve --species \"A quadratum + A in B aequatur C plano\" --given B=6,C=16");
    CHECK(res.exit_code == 0);
    CHECK(contains(res.out, "zetetic:"));
    CHECK(contains(res.out, "poristic:"));
    CHECK(contains(res.out, "exegetic:"));
    CHECK(contains(res.out, "root: 2\n"));

    auto cubic = run_cli(
        "solve --species \"A cubus + B quad in A aequatur B quad in Z\" --given B=1,Z=20");
    CHECK(cubic.exit_code == 0);
    CHECK(contains(cubic.out, "degree: 3"));
    CHECK(contains(cubic.out, "root: 2.59170412419"));

    auto linear = run_cli("solve --species \"A aequatur B\" --given B=7");
    CHECK(linear.exit_code == 0);
    CHECK(contains(linear.out, "exact root: 7"));

    auto quartic = run_cli(
        "solve --species \"A quadrato-quadratum aequatur B quadrato-quadratum\" --given B=2");
    CHECK(quartic.exit_code == 1);
    CHECK(contains(quartic.out, "poristic"));

    auto missing = run_cli("solve --species \"A aequatur B\"");
    CHECK(missing.exit_code == 1);
    CHECK(contains(missing.out, "no value bound"));
}

TEST_CASE("precision variable reshapes numeric output") {
    auto four = run_cli("trisect --deg 50", "VIETA_PRECISION=4 ");
    CHECK(four.exit_code == 0);
    CHECK(contains(four.out, "third: 16.67"));

    auto seventeen = run_cli("pi polygon --doublings 16", "VIETA_PRECISION=17 ");
    CHECK(seventeen.exit_code == 0);
    CHECK(contains(seventeen.out, "3.141592653"));

    auto bad = run_cli("trisect --deg 50", "VIETA_PRECISION=99 ");
    CHECK(bad.exit_code == 2);
    CHECK(contains(bad.out, "VIETA_PRECISION"));
}
