#include "times23/experiments.hpp"

#include "times23/csvnum.hpp"
#include "times23/errors.hpp"
#include "times23/group.hpp"
#include "times23/harmonic.hpp"
#include "times23/herglotz.hpp"
#include "times23/prng.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>
#include <string_view>
#include <thread>
#include <utility>

namespace times23 {

namespace {

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t");
    return std::string(s.substr(b, e - b + 1));
}

CyclotomicPoint parse_point_token(const std::string& token) {
    long long m = 0, r = 0;
    int consumed = 0;
    if (std::sscanf(token.c_str(), "%lld/%lld%n", &m, &r, &consumed) != 2 ||
        consumed != static_cast<int>(token.size()))
        throw ParseError("expected root of unity as m/r, got \"" + token + "\"");
    if (r < 1) throw ParseError("root-of-unity order must be >= 1 in \"" + token + "\"");
    return cyclotomic_normalize(m, r);
}

Measure parse_primary(const std::string& text) {
    if (text == "lebesgue") return Measure::lebesgue();
    if (text.rfind("orbit ", 0) == 0) return uniform_orbit_measure(parse_point_token(trim(text.substr(6))));
    if (text.rfind("dirac ", 0) == 0) return Measure::dirac(parse_point_token(trim(text.substr(6))));
    throw ParseError("unknown measure form \"" + text + "\"");
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

ScanRow scan_one_prime(std::int64_t p, int L) {
    Measure mu = uniform_orbit_measure({1, p});
    ScanRow row;
    row.p = p;
    row.orbit_size = mu.support_size();
    row.maxr = maxr(mu);
    double sup = 0.0;
    for (int l = 1; l <= L; ++l) {
        if (l % p == 0) continue; // periodicity lines carry full mass, not decay
        sup = std::max(sup, std::abs(fourier_coefficient(mu, l)));
    }
    row.sup_coeff = sup;
    row.vague_dist_to_lebesgue = vague_distance(mu, Measure::lebesgue(), L);
    auto bounds = cndm_bounds(mu);
    row.cndm_lower = bounds.first;
    row.cndm_upper = bounds.second;
    return row;
}

void validate_ladder(const std::vector<double>& r_ladder) {
    for (double r : r_ladder)
        if (!(r > 0.0 && r < 1.0))
            throw std::invalid_argument("ladder radius must lie in (0,1), got " + csv_double(r));
}

nlohmann::ordered_json complex_pair(std::complex<double> z) {
    return nlohmann::ordered_json::array({z.real(), z.imag()});
}

nlohmann::ordered_json int_or_string(const Int& n) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (n >= lo && n <= hi) return n.convert_to<std::int64_t>();
    return n.str();
}

GroupElement seeded_element(SplitMix64& rng) {
    return {rng.range(-5, 5), rng.range(-5, 5),
            sixadic_make(Int(rng.range(-30, 30)), static_cast<int>(rng.below(4)),
                         static_cast<int>(rng.below(4)))};
}

} // namespace

Measure parse_measure_spec(const std::string& text) {
    std::string body = trim(text);
    if (body.rfind("mix ", 0) != 0) return parse_primary(body);
    std::vector<std::pair<RationalWeight, Measure>> parts;
    std::string_view rest = std::string_view(body).substr(4);
    while (true) {
        auto plus = rest.find('+');
        std::string part = trim(rest.substr(0, plus));
        auto star = part.find('*');
        if (star == std::string::npos)
            throw ParseError("mix part needs weight*measure, got \"" + part + "\"");
        RationalWeight w = parse_weight(trim(std::string_view(part).substr(0, star)));
        parts.push_back({w, parse_primary(trim(std::string_view(part).substr(star + 1)))});
        if (plus == std::string_view::npos) break;
        rest = rest.substr(plus + 1);
    }
    try {
        return Measure::mix(parts);
    } catch (const std::exception& e) {
        throw ParseError(std::string("mix: ") + e.what());
    }
}

std::vector<ScanRow> run_equidistribution_scan(const ScanConfig& config) {
    if (config.prime_min > config.prime_max)
        throw std::invalid_argument("prime_min must not exceed prime_max");
    if (config.prime_min < 1) throw std::invalid_argument("prime range must be positive");
    if (config.L < 1) throw std::invalid_argument("window radius must be >= 1");
    if (config.parallelism < 1) throw std::invalid_argument("parallelism must be >= 1");
    validate_ladder(config.r_ladder);

    std::vector<std::int64_t> primes;
    for (std::int64_t p = config.prime_min; p <= config.prime_max; ++p)
        if (p % 2 != 0 && p % 3 != 0 && is_prime(p)) primes.push_back(p);

    std::vector<ScanRow> rows(primes.size());
    const int L = config.L;
    auto compute = [&rows, &primes, L](std::atomic<std::size_t>& next) {
        for (std::size_t i; (i = next.fetch_add(1)) < primes.size();)
            rows[i] = scan_one_prime(primes[i], L);
    };
    std::atomic<std::size_t> next{0};
    std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(config.parallelism), primes.size());
    if (workers <= 1) {
        compute(next);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back([&] { compute(next); });
        for (auto& t : pool) t.join();
    }

    if (!config.output_path.empty()) {
        std::ofstream out(config.output_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open output path: " + config.output_path);
        out << scan_rows_to_csv(rows);
        if (!out) throw std::runtime_error("write failed: " + config.output_path);
    }
    return rows;
}

std::string scan_rows_to_csv(const std::vector<ScanRow>& rows) {
    std::string out = "p,orbit_size,maxr,sup_coeff,vague_dist,cndm_lo,cndm_hi\r\n";
    for (const auto& row : rows) {
        out += std::to_string(row.p);
        out += ',';
        out += std::to_string(row.orbit_size);
        out += ',';
        out += std::to_string(row.maxr);
        out += ',';
        out += csv_double(row.sup_coeff);
        out += ',';
        out += csv_double(row.vague_dist_to_lebesgue);
        out += ',';
        out += row.cndm_lower.str();
        out += ',';
        out += row.cndm_upper.str();
        out += "\r\n";
    }
    return out;
}

std::string run_roundtrip_report(const std::string& measure_spec, int L,
                                 const std::vector<double>& r_ladder) {
    if (L < 1) throw std::invalid_argument("window radius must be >= 1");
    validate_ladder(r_ladder);
    Measure mu = parse_measure_spec(measure_spec);
    if (!is_times_n_invariant(mu, 2) || !is_times_n_invariant(mu, 3))
        throw NotInvariantError("round trip requires a times-2,3 invariant measure");

    auto psi = CaratheodoryFunction::of_measure(mu);
    ComplexEvaluator eval = [&psi](std::complex<double> z) { return psi(z); };
    TaylorTruncation taylor = taylor_of_measure(mu, L);
    std::vector<CoefficientWindow> radial;
    radial.reserve(r_ladder.size());
    for (double r : r_ladder)
        radial.push_back(radial_measure_coefficients(eval, r, L, suggested_radial_nodes(r, L, 1e-8)));

    double max_taylor = 0.0, max_cauchy = 0.0;
    std::vector<double> max_radial(r_ladder.size(), 0.0);
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int l = 1; l <= L; ++l) {
        std::complex<double> exact = fourier_coefficient(mu, static_cast<std::int64_t>(l));
        std::complex<double> from_taylor = 0.5 * taylor.coeffs[static_cast<std::size_t>(l)];
        std::complex<double> from_cauchy =
            0.5 * cauchy_extract_taylor(eval, l, suggested_contour_nodes(l, 1e-12));
        max_taylor = std::max(max_taylor, std::abs(from_taylor - exact));
        max_cauchy = std::max(max_cauchy, std::abs(from_cauchy - exact));
        nlohmann::ordered_json row{{"l", l},
                                   {"exact", complex_pair(exact)},
                                   {"taylor", complex_pair(from_taylor)},
                                   {"cauchy", complex_pair(from_cauchy)}};
        nlohmann::ordered_json per_radius = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < r_ladder.size(); ++i) {
            std::complex<double> value = radial[i].at(l) / std::pow(r_ladder[i], l);
            max_radial[i] = std::max(max_radial[i], std::abs(value - exact));
            per_radius.push_back(complex_pair(value));
        }
        row["radial"] = std::move(per_radius);
        rows.push_back(std::move(row));
    }

    nlohmann::ordered_json report{{"measure_spec", trim(measure_spec)},
                                  {"L", L},
                                  {"r_ladder", r_ladder},
                                  {"rows", std::move(rows)},
                                  {"max_abs_discrepancy",
                                   {{"taylor", max_taylor}, {"cauchy", max_cauchy}, {"radial", max_radial}}}};
    return report.dump(2);
}

std::string run_character_audit(const std::string& measure_spec, int gram_size,
                                std::uint64_t seed, double tol) {
    if (gram_size < 1) throw std::invalid_argument("gram_size must be >= 1");
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    Measure mu = parse_measure_spec(measure_spec);
    Character chi = Character::from_measure(mu);

    SplitMix64 rng(seed);
    std::vector<GroupElement> set;
    int attempts = 0;
    while (static_cast<int>(set.size()) < gram_size) {
        if (++attempts > 1000000) throw std::invalid_argument("gram_size exceeds the sample space");
        GroupElement g = seeded_element(rng);
        if (std::find(set.begin(), set.end(), g) == set.end()) set.push_back(g);
    }
    double gram_min = gram_min_eigenvalue(chi, set);

    int violations = 0;
    for (int i = 0; i < 1000; ++i) {
        GroupElement g = seeded_element(rng), h = seeded_element(rng);
        if (!conjugation_invariance_check(chi, {{g, h}}, tol)) ++violations;
    }

    bool recoverable = recoverability_check(chi, 3, tol);

    nlohmann::ordered_json report{{"measure_spec", trim(measure_spec)},
                                  {"gram_size", gram_size},
                                  {"seed", seed},
                                  {"gram_min_eig", gram_min},
                                  {"conj_violations", violations},
                                  {"recoverable", recoverable}};
    if (mu.is_atomic()) {
        auto bounds = cndm_bounds(mu);
        report["cndm"] = nlohmann::ordered_json::array({int_or_string(bounds.first), int_or_string(bounds.second)});
    } else {
        report["cndm"] = nullptr;
    }
    return report.dump(2);
}

} // namespace times23
