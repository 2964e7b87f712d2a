#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "times23/errors.hpp"
#include "times23/experiments.hpp"
#include "times23/harmonic.hpp"
#include "times23/measure.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

using namespace times23;
using nlohmann::json;

TEST_CASE("measure spec mini-language") {
    CHECK(parse_measure_spec("lebesgue").variant() == MeasureVariant::Lebesgue);
    CHECK(parse_measure_spec("  lebesgue ").variant() == MeasureVariant::Lebesgue);

    auto five = parse_measure_spec("orbit 1/5");
    CHECK(five == uniform_orbit_measure({1, 5}));
    CHECK(parse_measure_spec("orbit  -4/5 ") == five);

    auto point = parse_measure_spec("dirac 1/5");
    CHECK(point.support_size() == 1);
    CHECK_FALSE(is_times_n_invariant(point, 2));

    auto mixed = parse_measure_spec("mix 1/2*orbit 1/5 + 1/2*orbit 1/7");
    CHECK(mixed.support_size() == 10);
    CHECK(is_times_n_invariant(mixed, 2));
    CHECK(parse_measure_spec("mix 2/4 * orbit 1/5 + 1/2 * orbit 1/7") == mixed);
    CHECK(parse_measure_spec("mix 1*dirac 0/1").support_size() == 1);

    CHECK_THROWS_AS(parse_measure_spec(""), ParseError);
    CHECK_THROWS_AS(parse_measure_spec("orbit"), ParseError);
    CHECK_THROWS_AS(parse_measure_spec("orbit 1/5 junk"), ParseError);
    CHECK_THROWS_AS(parse_measure_spec("orbit a/b"), ParseError);
    CHECK_THROWS_AS(parse_measure_spec("orbit 1/0"), ParseError);
    CHECK_THROWS_AS(parse_measure_spec("circle"), ParseError);
    CHECK_THROWS_AS(parse_measure_spec("mix orbit 1/5"), ParseError);
    CHECK_THROWS_AS(parse_measure_spec("mix 1/2*orbit 1/5"), ParseError);        // mass 1/2
    CHECK_THROWS_AS(parse_measure_spec("mix 1/2*lebesgue + 1/2*orbit 1/5"), ParseError);
}

TEST_CASE("equidistribution scan: pinned rows and invariants") {
    ScanConfig config;
    config.prime_min = 5;
    config.prime_max = 23;
    auto rows = run_equidistribution_scan(config);
    REQUIRE(rows.size() == 7); // 5, 7, 11, 13, 17, 19, 23

    CHECK(rows[0].p == 5);
    CHECK(rows[0].orbit_size == 4);
    CHECK(rows[0].maxr == 5);
    CHECK(rows[0].sup_coeff == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(rows[0].cndm_lower == 4);
    CHECK(rows[0].cndm_upper == 5);

    CHECK(rows[1].p == 7);
    CHECK(rows[1].orbit_size == 6);
    CHECK(rows[1].sup_coeff == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
    CHECK(rows[1].cndm_lower == 6);
    CHECK(rows[1].cndm_upper == 7);

    // 2 has order 11 mod 23 and 3 lies in <2>, so the orbit is a proper coset
    auto& r23 = rows.back();
    CHECK(r23.p == 23);
    CHECK(r23.orbit_size == 11);
    CHECK(r23.maxr == 23);
    CHECK(r23.cndm_lower == 11);
    CHECK(r23.cndm_upper == 23);

    for (const auto& row : rows) {
        CHECK(row.sup_coeff >= 0.0);
        CHECK(row.sup_coeff <= 1.0);
        CHECK(row.orbit_size <= row.maxr);
        CHECK(row.cndm_lower <= row.cndm_upper);
        CHECK(row.vague_dist_to_lebesgue > 0.0);
        // cross-check against the harmonic module
        auto mu = uniform_orbit_measure({1, row.p});
        CHECK(row.vague_dist_to_lebesgue ==
              vague_distance(mu, Measure::lebesgue(), config.L));
    }
}

TEST_CASE("equidistribution scan: empty range and config validation") {
    ScanConfig config;
    config.prime_min = 24;
    config.prime_max = 28;
    auto rows = run_equidistribution_scan(config);
    CHECK(rows.empty());
    CHECK(scan_rows_to_csv(rows) == "p,orbit_size,maxr,sup_coeff,vague_dist,cndm_lo,cndm_hi\r\n");

    ScanConfig bad = config;
    bad.prime_min = 10;
    bad.prime_max = 5;
    CHECK_THROWS_AS(run_equidistribution_scan(bad), std::invalid_argument);
    bad = config;
    bad.L = 0;
    CHECK_THROWS_AS(run_equidistribution_scan(bad), std::invalid_argument);
    bad = config;
    bad.parallelism = 0;
    CHECK_THROWS_AS(run_equidistribution_scan(bad), std::invalid_argument);
    bad = config;
    bad.r_ladder = {0.5, 1.5};
    CHECK_THROWS_AS(run_equidistribution_scan(bad), std::invalid_argument);
}

TEST_CASE("equidistribution scan: deterministic across worker counts, csv shape") {
    ScanConfig serial;
    serial.prime_min = 5;
    serial.prime_max = 97;
    auto rows1 = run_equidistribution_scan(serial);
    ScanConfig parallel = serial;
    parallel.parallelism = 4;
    auto rows2 = run_equidistribution_scan(parallel);
    auto csv1 = scan_rows_to_csv(rows1), csv2 = scan_rows_to_csv(rows2);
    CHECK(csv1 == csv2);
    CHECK(run_equidistribution_scan(serial).size() == rows1.size());
    CHECK(scan_rows_to_csv(run_equidistribution_scan(serial)) == csv1);

    CHECK(csv1.rfind("p,orbit_size,maxr,sup_coeff,vague_dist,cndm_lo,cndm_hi\r\n", 0) == 0);
    CHECK(csv1.substr(csv1.size() - 2) == "\r\n");
    std::size_t lines = 0;
    for (std::size_t at = 0; (at = csv1.find("\r\n", at)) != std::string::npos; at += 2) ++lines;
    CHECK(lines == rows1.size() + 1);
    // integer columns are exact; sup_coeff is only pinned to 1e-12
    CHECK(csv1.find("\r\n5,4,5,0.25") != std::string::npos);

    // ordering strictly by p
    for (std::size_t i = 1; i < rows1.size(); ++i) CHECK(rows1[i - 1].p < rows1[i].p);
}

TEST_CASE("equidistribution scan: file output") {
    std::string path = "scan_out_test.csv";
    ScanConfig config;
    config.prime_min = 5;
    config.prime_max = 13;
    config.output_path = path;
    auto rows = run_equidistribution_scan(config);
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == scan_rows_to_csv(rows));
    std::remove(path.c_str());

    config.output_path = "no_such_dir/scan.csv";
    CHECK_THROWS_AS(run_equidistribution_scan(config), std::runtime_error);
}

TEST_CASE("round-trip report: orbit fixture cross-method agreement") {
    auto text = run_roundtrip_report("orbit 1/5", 8, {0.9, 0.99});
    CHECK(text == run_roundtrip_report("orbit 1/5", 8, {0.9, 0.99}));
    auto report = json::parse(text);
    CHECK(report["measure_spec"] == "orbit 1/5");
    CHECK(report["L"] == 8);
    REQUIRE(report["rows"].size() == 8);

    auto row1 = report["rows"][0];
    CHECK(row1["l"] == 1);
    CHECK(row1["exact"][0].get<double>() == doctest::Approx(-0.25).epsilon(1e-15));
    auto row5 = report["rows"][4];
    CHECK(row5["l"] == 5);
    CHECK(row5["exact"][0].get<double>() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(row5["taylor"][0].get<double>() == doctest::Approx(1.0).epsilon(1e-15));

    auto disc = report["max_abs_discrepancy"];
    CHECK(disc["taylor"].get<double>() < 1e-12);
    CHECK(disc["cauchy"].get<double>() < 1e-9);
    REQUIRE(disc["radial"].size() == 2);
    CHECK(disc["radial"][0].get<double>() < 1e-6);
    CHECK(disc["radial"][1].get<double>() < 1e-6);
}

TEST_CASE("round-trip report: point mass and lebesgue fixtures") {
    auto report = json::parse(run_roundtrip_report("dirac 0/1", 4, {0.999}));
    for (const auto& row : report["rows"]) {
        CHECK(row["exact"][0].get<double>() == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(row["taylor"][0].get<double>() == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(row["cauchy"][0].get<double>() == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(row["radial"][0][0].get<double>() == doctest::Approx(1.0).epsilon(1e-6));
        CHECK(std::abs(row["radial"][0][1].get<double>()) < 1e-6);
    }

    auto flat = json::parse(run_roundtrip_report("lebesgue", 4, {0.9}));
    for (const auto& row : flat["rows"]) {
        CHECK(row["exact"][0].get<double>() == 0.0);
        CHECK(row["exact"][1].get<double>() == 0.0);
        CHECK(std::abs(row["taylor"][0].get<double>()) == 0.0);
        CHECK(std::abs(row["cauchy"][0].get<double>()) < 1e-12);
        CHECK(std::abs(row["radial"][0][0].get<double>()) < 1e-7);
    }
    CHECK(flat["max_abs_discrepancy"]["taylor"].get<double>() == 0.0);

    CHECK_THROWS_AS(run_roundtrip_report("dirac 1/5", 4, {0.9}), NotInvariantError);
    CHECK_THROWS_AS(run_roundtrip_report("nonsense", 4, {0.9}), ParseError);
    CHECK_THROWS_AS(run_roundtrip_report("orbit 1/5", 0, {0.9}), std::invalid_argument);
    CHECK_THROWS_AS(run_roundtrip_report("orbit 1/5", 4, {1.0}), std::invalid_argument);
}

TEST_CASE("character audit: verdicts and determinism") {
    auto text = run_character_audit("orbit 1/5", 12, 7);
    CHECK(text == run_character_audit("orbit 1/5", 12, 7));
    auto report = json::parse(text);
    CHECK(report["gram_size"] == 12);
    CHECK(report["seed"] == 7);
    CHECK(report["gram_min_eig"].get<double>() >= -1e-10);
    CHECK(report["conj_violations"] == 0);
    CHECK(report["recoverable"] == true);
    REQUIRE(report["cndm"].is_array());
    CHECK(report["cndm"][0] == 4);
    CHECK(report["cndm"][1] == 5);

    auto flat = json::parse(run_character_audit("lebesgue", 6, 1));
    CHECK(flat["gram_min_eig"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(flat["conj_violations"] == 0);
    CHECK(flat["recoverable"] == true);
    CHECK(flat["cndm"].is_null());

    CHECK_THROWS_AS(run_character_audit("dirac 1/5", 8, 1), NotInvariantError);
    CHECK_THROWS_AS(run_character_audit("orbit 1/5", 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(run_character_audit("orbit 1/5", 8, 1, 0.0), std::invalid_argument);
}
