#pragma once

// Batch front end: equidistribution scans over prime orbits, round-trip
// coefficient reports, character audits.  All emission is deterministic:
// identical inputs give byte-identical CSV/JSON at any worker count.

#include "times23/exact.hpp"
#include "times23/measure.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace times23 {

// Mini-language: "lebesgue" | "orbit m/r" | "dirac m/r"
//              | "mix w1*orbit m1/r1 + w2*orbit m2/r2 + ..."
// Weights are exact rationals ("1/3" or "2") and must sum to 1; any primary
// form may appear inside a mix.  Failures throw ParseError.
Measure parse_measure_spec(const std::string& text);

struct ScanConfig {
    std::int64_t prime_min = 5;
    std::int64_t prime_max = 100;
    int L = 16;                    // coefficient window radius
    std::vector<double> r_ladder;  // optional, each in (0,1)
    std::string output_path;       // empty: no file written
    int parallelism = 1;
};

struct ScanRow {
    std::int64_t p = 0;
    std::int64_t orbit_size = 0;
    std::int64_t maxr = 0;
    double sup_coeff = 0.0;             // max |mu-hat(l)|, 1 <= l <= L, p not dividing l
    double vague_dist_to_lebesgue = 0.0;
    Int cndm_lower;
    Int cndm_upper;
};

// One row per prime p in [prime_min, prime_max] with gcd(p, 6) = 1, built
// from the uniform measure on the orbit of 1/p, sorted by p.  Writes the CSV
// to config.output_path when set.  Workers share nothing; rows are emitted
// in sorted order regardless of parallelism.
std::vector<ScanRow> run_equidistribution_scan(const ScanConfig& config);

// Header "p,orbit_size,maxr,sup_coeff,vague_dist,cndm_lo,cndm_hi", CRLF rows.
std::string scan_rows_to_csv(const std::vector<ScanRow>& rows);

// Per-l comparison (1 <= l <= L) of the exact coefficient mu-hat(l) against
// half the Taylor coefficient, half the contour-extracted coefficient, and
// the radial coefficient at each ladder radius divided by r^l.  Returns a
// JSON document including the max absolute discrepancy of each method.
std::string run_roundtrip_report(const std::string& measure_spec, int L,
                                 const std::vector<double>& r_ladder);

// Gram minimum eigenvalue on a seeded random element set, conjugation
// violation count over 1000 seeded pairs, recoverability verdict, and the
// fiber-dimension interval (null for Lebesgue, where no interval applies).
std::string run_character_audit(const std::string& measure_spec, int gram_size,
                                std::uint64_t seed, double tol = 1e-10);

} // namespace times23
