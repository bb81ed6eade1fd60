#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "wradius/io.hpp"
#include "wradius/radius.hpp"

using namespace wradius;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

std::string temp_path(const char* stem) {
    static int counter = 0;
    std::ostringstream os;
    os << "/tmp/wradius_cli_" << ::getpid() << "_" << counter++ << "_" << stem;
    return os.str();
}

// Runs a full shell command, capturing the exit code and combined output.
RunResult run_command(const std::string& command) {
    const std::string out_path = temp_path("out.txt");
    const int status = std::system((command + " > " + out_path + " 2>&1").c_str());
    RunResult r;
    if (WIFEXITED(status)) {
        r.exit_code = WEXITSTATUS(status);
    }
    std::ifstream in(out_path);
    std::ostringstream content;
    content << in.rdbuf();
    r.output = content.str();
    std::remove(out_path.c_str());
    return r;
}

RunResult run_cli(const std::string& args) {
    return run_command("\"" WRADIUS_CLI_PATH "\" " + args);
}

std::string fixture(const char* name) {
    return std::string(WRADIUS_FIXTURE_DIR) + "/" + name;
}

std::string write_temp_file(const char* stem, const std::string& text) {
    const std::string path = temp_path(stem);
    std::ofstream out(path);
    out << text;
    return path;
}

bool parse_interval(const std::string& output, double& lo, double& hi) {
    return std::sscanf(output.c_str(), "radius in [%lf, %lf]", &lo, &hi) == 2;
}

}  // namespace

TEST_CASE("radius subcommand certifies a fixture and matches the library") {
    const RunResult r = run_cli("radius " + fixture("shift23.json"));
    CHECK(r.exit_code == 0);
    REQUIRE(r.output.rfind("radius in [", 0) == 0);

    double lo = 0.0;
    double hi = 0.0;
    REQUIRE(parse_interval(r.output, lo, hi));
    const double expected = std::sqrt(13.0) / 2.0;
    CHECK(lo <= expected);
    CHECK(hi >= expected);

    const MatrixFile file = load_matrix_file(fixture("shift23.json"));
    const Enclosure direct = numerical_radius(file.flattened(), 1e-10);
    CHECK(lo <= direct.hi);
    CHECK(hi >= direct.lo);
    CHECK(hi - lo <= 1e-6);
}

TEST_CASE("radius subcommand honours a tight tolerance request") {
    const RunResult r = run_cli("radius --tol 1e-10 " + fixture("nilpotent_2x2.json"));
    CHECK(r.exit_code == 0);
    double lo = 0.0;
    double hi = 0.0;
    REQUIRE(parse_interval(r.output, lo, hi));
    CHECK(lo <= 0.5);
    CHECK(hi >= 0.5);
    CHECK(hi - lo <= 1e-10);
}

TEST_CASE("radius subcommand rejects bad inputs with distinct exit codes") {
    CHECK(run_cli("radius /nonexistent/missing.json").exit_code == 2);

    const std::string broken = write_temp_file("broken.json", "{\"schema_version\":");
    CHECK(run_cli("radius " + broken).exit_code == 2);
    std::remove(broken.c_str());

    CHECK(run_cli("radius --tol 0 " + fixture("identity.json")).exit_code == 1);
}

TEST_CASE("bounds subcommand renders the requested rows") {
    const RunResult r = run_cli("bounds --bounds prop4 " + fixture("cross_block_2x2.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("prop4") != std::string::npos);
    CHECK(r.output.find("| bound |") != std::string::npos);
    CHECK(r.output.find("0.70710") != std::string::npos);
}

TEST_CASE("bounds subcommand emits machine-readable json on request") {
    const RunResult r =
        run_cli("bounds --bounds aok,hou_du --format json " + fixture("cross_block_2x2.json"));
    CHECK(r.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.output);
    REQUIRE(j.at("rows").size() == 2);
    CHECK(j.at("true_w").at("lo").get<double>() <= 0.5);
    CHECK(j.at("true_w").at("hi").get<double>() >= 0.5);
}

TEST_CASE("bounds subcommand maps error classes to exit codes") {
    CHECK(run_cli("bounds --bounds prop4 " + fixture("nilpotent_2x2.json")).exit_code == 3);
    CHECK(run_cli("bounds --bounds nope " + fixture("cross_block_2x2.json")).exit_code == 4);
    CHECK(run_cli("bounds --t 0.5 --min-t " + fixture("cross_block_2x2.json")).exit_code == 64);
    CHECK(run_cli("bounds --t 1.5 --bounds rem2_i " + fixture("cross_block_2x2.json")).exit_code ==
          1);
}

TEST_CASE("verify subcommand runs the property catalogue") {
    const RunResult r = run_cli("verify --count 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("all properties hold") != std::string::npos);

    const RunResult shifted = run_cli("verify --count 2 --ensemble shift --n 3 --d 1");
    CHECK(shifted.exit_code == 0);
    CHECK(shifted.output.find("ensemble=shift") != std::string::npos);
}

TEST_CASE("verify subcommand reads the seed override from the environment") {
    const RunResult good = run_command("WRADIUS_SEED=7 \"" WRADIUS_CLI_PATH "\" verify --count 2");
    CHECK(good.exit_code == 0);
    CHECK(good.output.find("seed=7") != std::string::npos);

    const RunResult bad = run_command("WRADIUS_SEED=abc \"" WRADIUS_CLI_PATH "\" verify --count 2");
    CHECK(bad.exit_code == 64);
}

TEST_CASE("reproduce subcommand replays the built-in reference values") {
    const RunResult r = run_cli("reproduce");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("all fixtures reproduced") != std::string::npos);
}

TEST_CASE("usage errors exit with code 64 and help exits cleanly") {
    CHECK(run_cli("").exit_code == 64);
    CHECK(run_cli("frobnicate").exit_code == 64);
    CHECK(run_cli("radius").exit_code == 64);

    const RunResult help = run_cli("--help");
    CHECK(help.exit_code == 0);
    CHECK(help.output.find("radius") != std::string::npos);
    CHECK(help.output.find("bounds") != std::string::npos);
}
