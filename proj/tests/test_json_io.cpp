#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <limits>

#include "qportrait/json_io.hpp"

using namespace qportrait;
using nlohmann::json;

TEST_CASE("matrix JSON round-trips bit for bit") {
    for (uint64_t seed = 0; seed < 20; ++seed) {
        Rng rng(seed);
        const ComplexMatrix m = random_hermitian(5, rng);
        const std::string text = matrix_to_json(m).dump();
        const ComplexMatrix back = matrix_from_json(json::parse(text));
        CHECK(back == m);  // exact equality of every double
    }
}

TEST_CASE("matrix file round-trip") {
    Rng rng(404);
    const DensityMatrix rho = random_mixed_hs(3, rng);
    const std::string path = "qportrait_test_matrix.json";
    save_matrix(path, rho.matrix());
    CHECK(load_matrix(path) == rho.matrix());
    std::remove(path.c_str());
}

TEST_CASE("malformed matrix JSON is rejected") {
    CHECK_THROWS(matrix_from_json(json::parse(R"({"dim": 2})")));
    CHECK_THROWS(matrix_from_json(json::parse(R"({"dim": 2, "entries": [[[1,0]],[[0,0]]]})")));
    CHECK_THROWS(matrix_from_json(json::parse(R"({"dim": -1, "entries": []})")));
    CHECK_THROWS(matrix_from_json(json::parse(R"([1,2,3])")));
}

TEST_CASE("infinities serialize as strings") {
    InequalityReport r = make_report("klein", std::numeric_limits<double>::infinity(), 0.0);
    const json j = report_to_json(r);
    CHECK(j["lhs"] == "inf");
    CHECK(j["gap"] == "inf");
    CHECK(j["holds"] == true);
}

TEST_CASE("report JSON carries the expected fields") {
    const json j = report_to_json(make_report("gibbs", 0.25, 0.0));
    for (const char* key : {"label", "lhs", "rhs", "gap", "holds", "tol"}) CHECK(j.contains(key));
    CHECK(j["label"] == "gibbs");
    CHECK(j["holds"] == true);
}

TEST_CASE("histogram CSV format") {
    GapHistogram h;
    h.edges = {0.0, 0.5, 1.0};
    h.counts = {3, 4};
    h.underflow = 1;
    const std::string path = "qportrait_test_hist.csv";
    write_histogram_csv(path, h);
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);
    CHECK(line == "bin_low,bin_high,count");
    std::getline(in, line);
    CHECK(line == "-inf,0,1");
    std::getline(in, line);
    CHECK(line == "0,0.5,3");
    std::remove(path.c_str());
}
