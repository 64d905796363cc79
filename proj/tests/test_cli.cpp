// End-to-end tests of the command-line binary: exit codes, JSON/CSV output
// shapes, and a forward/inverse round trip through files on disk.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

#include "hardy/clark.hpp"
#include "hardy/inner.hpp"

using json = nlohmann::json;
using hardy::Complex;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(HARDY_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string write_temp(const std::string& name, const std::string& text) {
    const std::string path = "/tmp/hardy_cli_test_" + name;
    std::ofstream(path) << text;
    return path;
}

} // namespace

TEST_CASE("usage errors exit 64, help exits 0") {
    CHECK(run_cli("no-such-subcommand").exit_code == 64);
    CHECK(run_cli("mif eval --mif missing-required-z.json").exit_code == 64);
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("malformed input exits 65") {
    const std::string bad = write_temp("bad.json", "{\"zeros\": \"oops\"}");
    CHECK(run_cli("mif eval --mif " + bad + " --z 0 1").exit_code == 65);
    CHECK(run_cli("mif eval --mif /nonexistent.json --z 0 1").exit_code == 65);
}

TEST_CASE("level-set measure of a pure exponential: unit atoms on the integers") {
    const std::string mif = write_temp(
        "s2pi.json", "{\"zeros\": [], \"exp_mass\": 6.283185307179586}");
    RunResult r = run_cli("clark forward --mif " + mif + " --window -5.5 5.5");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["config"]["subcommand"] == "clark forward");
    const auto& atoms = j["result"]["atoms"];
    REQUIRE(atoms.size() == 11);
    for (int k = 0; k < 11; ++k) {
        CHECK(atoms[k]["x"].get<double>() == doctest::Approx(k - 5).epsilon(1e-9));
        CHECK(atoms[k]["mass"].get<double>() == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("order verdict on nested rational inputs: dominated, exit 0") {
    const std::string I = write_temp("deg2.json", "{\"zeros\": [[0,1],[1,2]]}");
    const std::string J = write_temp(
        "deg5.json", "{\"zeros\": [[0,1],[1,2],[-1,0.5],[2,1.5],[0.5,3]]}");
    RunResult r = run_cli("order verdict --I " + I + " --J " + J);
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["result"]["relation"] == "dominated");
    CHECK(j["result"]["exact"] == true);
}

TEST_CASE("forward then inverse reproduces the inner function at interior points") {
    hardy::MifDescriptor d;
    d.zeros = {Complex{0.0, 1.0}, Complex{-1.5, 0.5}, Complex{2.0, 2.0}};
    const std::string mif = write_temp("rt.json", hardy::mif_to_json(d));
    RunResult fwd = run_cli("clark forward --mif " + mif + " --window -300 300");
    REQUIRE(fwd.exit_code == 0);
    const std::string measure =
        write_temp("rt_measure.json", json::parse(fwd.out)["result"].dump());
    const std::vector<Complex> probes = {{0.0, 1.0}, {0.5, 2.0}, {-2.0, 0.7},
                                         {3.0, 1.2}, {0.0, 5.0}};
    std::string zargs;
    for (Complex z : probes)
        zargs += " " + std::to_string(z.real()) + " " + std::to_string(z.imag());
    RunResult inv = run_cli("clark inverse --measure " + measure + " --z" + zargs);
    REQUIRE(inv.exit_code == 0);
    const json jinv = json::parse(inv.out);
    const auto& vals = jinv["result"]["values"];
    REQUIRE(vals.size() == probes.size());
    for (size_t i = 0; i < probes.size(); ++i) {
        const Complex got{vals[i][0].get<double>(), vals[i][1].get<double>()};
        const Complex want = hardy::eval_mif(d, probes[i]);
        CHECK(std::abs(got - want) < 1e-5);
    }
}

TEST_CASE("example 1 prints the full degree table with exact dimensions") {
    RunResult r = run_cli("example 1");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    const auto& table = j["result"]["table"];
    REQUIRE(table.size() == 36);
    for (const auto& row : table) {
        const int n = row["deg_I"].get<int>(), k = row["deg_J"].get<int>();
        CHECK(row["kernel_dim_IJ"].get<int>() == std::max(0, n - k));
        CHECK(row["kernel_dim_JI"].get<int>() == std::max(0, k - n));
        const std::string rel = row["relation"].get<std::string>();
        if (n < k) CHECK(rel == "dominated");
        if (n > k) CHECK(rel == "dominates");
        if (n == k) CHECK(rel == "equivalent");
    }
}

TEST_CASE("csv output starts with a header row and keeps config off stdout") {
    const std::string mif = write_temp(
        "s2pi_csv.json", "{\"zeros\": [], \"exp_mass\": 6.283185307179586}");
    RunResult r =
        run_cli("--format csv clark forward --mif " + mif + " --window -2.5 2.5");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.rfind("x,mass\n", 0) == 0);
    // five atoms -> header + five data rows
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 6);
}

TEST_CASE("inconclusive verdicts exit 2") {
    // Pure exponential against a rational factor: the argument difference
    // grows linearly, the drift never settles, and no exact path applies.
    const std::string I = write_temp("s1.json", "{\"zeros\": [], \"exp_mass\": 1.0}");
    const std::string J = write_temp("onez.json", "{\"zeros\": [[0,1]]}");
    RunResult r = run_cli("order verdict --I " + I + " --J " + J);
    CHECK(r.exit_code == 2);
    CHECK(json::parse(r.out)["result"]["relation"] == "inconclusive");
}
