#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

// Runs the CLI binary with the given arguments, capturing stdout.
RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(CHANCOMP_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) res.output.append(buf, n);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string write_temp(const std::string& name, const std::string& content) {
    const std::string path = std::string("/tmp/") + name;
    std::ofstream out(path);
    out << content;
    return path;
}

}  // namespace

TEST_CASE("cli exit codes") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("purity --help").exit_code == 0);
    CHECK(run_cli("no-such-command").exit_code == 1);
    CHECK(run_cli("purity --family nope").exit_code == 1);
    CHECK(run_cli("violation-scan --d 3 --grid 4-6-5").exit_code == 2);
    // Matrix-form complement is restricted to p <= 1.
    CHECK(run_cli("complement --family dep --d 2 --p 1.2 --form matrix").exit_code == 2);
    CHECK(run_cli("complement --family dep --d 2 --p 9").exit_code == 2);
    CHECK(run_cli("purity --family wh --d 3 --pnorm 0.5").exit_code == 2);
}

TEST_CASE("complement report with spectrum clustering") {
    const std::string state = write_temp(
        "chancomp_cli_state.json", "[[[1,0],[0,0]],[[0,0],[0,0]]]");
    const RunResult res = run_cli(
        "complement --family dep --d 2 --p 0.5 --state " + state + " --spectrum");
    REQUIRE(res.exit_code == 0);
    const json j = json::parse(res.output);
    CHECK(j["version"].is_string());
    CHECK(j["command"] == "complement");
    CHECK(j["choi_rank"] == 4);
    CHECK(j["residuals"]["trace_preserving"].get<double>() < 1e-12);
    const json& spec = j["spectrum"];
    REQUIRE(spec.size() == 3);
    CHECK(spec[0][0].get<double>() == doctest::Approx(0.75).epsilon(1e-10));
    CHECK(spec[0][1] == 1);
    CHECK(spec[1][0].get<double>() == doctest::Approx(0.25).epsilon(1e-10));
    CHECK(spec[1][1] == 1);
    CHECK(spec[2][0].get<double>() == doctest::Approx(0.0));
    CHECK(spec[2][1] == 3);
}

TEST_CASE("wh complement metadata includes choi rank") {
    const RunResult res = run_cli("complement --family wh --d 3");
    REQUIRE(res.exit_code == 0);
    const json j = json::parse(res.output);
    CHECK(j["choi_rank"] == 3);
    CHECK(!j.contains("complement_output"));
}

TEST_CASE("purity report values") {
    const RunResult res =
        run_cli("purity --family wh --d 3 --pnorm 2 --restarts 8 --seed 5");
    REQUIRE(res.exit_code == 0);
    const json j = json::parse(res.output);
    CHECK(j["result"]["nu_p"].get<double>() ==
          doctest::Approx(0.707107).epsilon(1e-5));
    CHECK(j["seed"] == 5);
    CHECK(j["result"]["restarts"].size() == 8);
}

TEST_CASE("seeded runs are byte-identical") {
    const std::string cmd =
        "purity --family dep --d 3 --p 0.75 --pnorm 2 --restarts 6 --seed 99";
    const RunResult a = run_cli(cmd);
    const RunResult b = run_cli(cmd);
    REQUIRE(a.exit_code == 0);
    CHECK(a.output == b.output);

    const std::string scan = "violation-scan --d 3 --grid 2:8:13 --format csv";
    CHECK(run_cli(scan).output == run_cli(scan).output);
}

TEST_CASE("environment seed fallback") {
    setenv("CHANCOMP_SEED", "321", 1);
    const RunResult res = run_cli("purity --family wh --d 3 --pnorm 2 --restarts 2");
    unsetenv("CHANCOMP_SEED");
    REQUIRE(res.exit_code == 0);
    CHECK(json::parse(res.output)["seed"] == 321);
}

TEST_CASE("violation scan csv") {
    const RunResult res = run_cli("violation-scan --d 3 --grid 4:6:21 --format csv");
    REQUIRE(res.exit_code == 0);
    CHECK(res.output.rfind("p,ratio_lower_bound,log_ratio\n", 0) == 0);
    const auto pos = res.output.find("crossing,");
    REQUIRE(pos != std::string::npos);
    const double crossing = std::stod(res.output.substr(pos + 9));
    CHECK(crossing > 4.76);
    CHECK(crossing < 4.81);

    // No crossing row when the grid stays below the threshold.
    const RunResult low = run_cli("violation-scan --d 3 --grid 1:2:5 --format csv");
    REQUIRE(low.exit_code == 0);
    CHECK(low.output.find("crossing") == std::string::npos);

    const RunResult d4 = run_cli("violation-scan --d 4 --grid 1:10:19 --format csv");
    REQUIRE(d4.exit_code == 0);
    CHECK(d4.output.find("crossing") == std::string::npos);
}

TEST_CASE("me-spectrum json report") {
    const RunResult res = run_cli("me-spectrum --d 3");
    REQUIRE(res.exit_code == 0);
    const json j = json::parse(res.output);
    REQUIRE(j["spectrum"].size() == 3);
    CHECK(j["spectrum"][0][0].get<double>() == doctest::Approx(1.0 / 3).epsilon(1e-10));
    CHECK(j["spectrum"][1][1] == 8);
}

TEST_CASE("output file flag") {
    const std::string path = "/tmp/chancomp_cli_out.json";
    std::remove(path.c_str());
    const RunResult res = run_cli("me-spectrum --d 2 --out " + path);
    REQUIRE(res.exit_code == 0);
    CHECK(res.output.empty());
    std::ifstream in(path);
    REQUIRE(in.good());
    const json j = json::parse(in);
    CHECK(j["command"] == "me-spectrum");
}
