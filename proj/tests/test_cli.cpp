// Exercises the installed CLI binary end to end. The binary path comes from
// the QPORTRAIT_BIN environment variable, set by CTest.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "qportrait/json_io.hpp"

using namespace qportrait;
using nlohmann::json;

namespace {

std::string binary() {
    const char* p = std::getenv("QPORTRAIT_BIN");
    REQUIRE(p != nullptr);
    return p;
}

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = binary() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

struct Fixture {
    Fixture() {
        Rng rng(0xC0FFEE);
        save_matrix("cli_r3.json", random_mixed_hs(3, rng).matrix());
        save_matrix("cli_s3.json", random_mixed_hs(3, rng).matrix());
        save_matrix("cli_r4.json", random_mixed_hs(4, rng).matrix());
        save_matrix("cli_s4.json", random_mixed_hs(4, rng).matrix());
        save_matrix("cli_bad_trace.json", ComplexMatrix::diagonal({1.0, 0.1}));
        std::ofstream("cli_w.json") << "[0.5, 0.3, 0.2]\n";
        std::ofstream("cli_b.json") << "[0.1, -0.4, 1.2]\n";
        std::ofstream("cli_broken.json") << "{not json";
    }
    ~Fixture() {
        for (const char* f : {"cli_r3.json", "cli_s3.json", "cli_r4.json", "cli_s4.json",
                              "cli_bad_trace.json", "cli_w.json", "cli_b.json",
                              "cli_broken.json", "cli_gaps.csv", "cli_portrait.json"})
            std::remove(f);
    }
};

}  // namespace

TEST_CASE_FIXTURE(Fixture, "validate") {
    CHECK(run("validate --rho cli_r3.json").exit_code == 0);
    const RunResult bad = run("validate --rho cli_bad_trace.json");
    CHECK(bad.exit_code == 1);
    const json j = json::parse(bad.out);
    CHECK(j["valid"] == false);
    CHECK(j["defect"] == "trace-not-one");
}

TEST_CASE_FIXTURE(Fixture, "usage and input errors exit 2") {
    CHECK(run("validate --rho does_not_exist.json").exit_code == 2);
    CHECK(run("validate --rho cli_broken.json").exit_code == 2);
    CHECK(run("entropy --rho cli_r3.json --sigma cli_r4.json").exit_code == 2);
    CHECK(run("no-such-command").exit_code == 2);
}

TEST_CASE_FIXTURE(Fixture, "portrait output re-parses to the same matrix") {
    const RunResult r = run("portrait --rho cli_r3.json --fold m=1");
    CHECK(r.exit_code == 0);
    const ComplexMatrix m = matrix_from_json(json::parse(r.out));
    const DensityMatrix rho = DensityMatrix::validated(load_matrix("cli_r3.json"));
    CHECK(m == fold_map(rho, BlockPartition::for_dim(3, 1)).matrix());
}

TEST_CASE_FIXTURE(Fixture, "entropy command") {
    const RunResult r = run("entropy --rho cli_r3.json --sigma cli_s3.json");
    CHECK(r.exit_code == 0);
    const json j = json::parse(r.out);
    const DensityMatrix rho = DensityMatrix::validated(load_matrix("cli_r3.json"));
    const DensityMatrix sigma = DensityMatrix::validated(load_matrix("cli_s3.json"));
    CHECK(j["relative_entropy"].get<double>() ==
          doctest::Approx(relative_entropy(rho, sigma)).epsilon(1e-12));
}

TEST_CASE_FIXTURE(Fixture, "inequality monotonicity") {
    const RunResult r =
        run("inequality --kind monotonicity --rho cli_r3.json --sigma cli_s3.json --fold m=1");
    CHECK(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["holds"] == true);
    CHECK(j["label"] == "monotonicity");
}

TEST_CASE_FIXTURE(Fixture, "scalar inequalities through the CLI") {
    CHECK(run("inequality --kind tomogram --rho cli_w.json").exit_code == 0);
    CHECK(run("inequality --kind pairwise --rho cli_b.json").exit_code == 0);
    CHECK(run("inequality --kind gibbs --rho cli_b.json --sigma cli_w.json").exit_code == 0);
}

TEST_CASE_FIXTURE(Fixture, "chain is nonincreasing on a 4x4 pair") {
    const RunResult r = run("chain --rho cli_r4.json --sigma cli_s4.json");
    CHECK(r.exit_code == 0);
    const json j = json::parse(r.out);
    const auto gaps = j["chain"].get<std::vector<double>>();
    REQUIRE(gaps.size() == 3);
    CHECK(gaps[0] + 1e-9 >= gaps[1]);
    CHECK(gaps[1] + 1e-9 >= gaps[2]);
    CHECK(j["holds"] == true);
}

TEST_CASE_FIXTURE(Fixture, "fuzz writes a report and CSV") {
    const RunResult r =
        run("fuzz --target monotonicity --dim 3 --samples 500 --seed 1 --csv cli_gaps.csv");
    CHECK(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["violations"] == 0);
    CHECK(j["samples"] == 500);
    std::ifstream csv("cli_gaps.csv");
    std::string header;
    std::getline(csv, header);
    CHECK(header == "bin_low,bin_high,count");
}

TEST_CASE_FIXTURE(Fixture, "minimize reports a nonnegative minimum") {
    const RunResult r = run("minimize --target klein --dim 2 --restarts 3 --iters 100 --seed 2");
    CHECK(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["violations"] == 0);
}
