// Batch CLI over the times23 library.
//
//   times23 scan      --prime-min 5 --prime-max 2000 --window 16 --jobs 4 --out scan.csv
//   times23 roundtrip "orbit 1/5" --window 8 --r-ladder 0.9,0.99,0.999
//   times23 audit     "orbit 1/5" --gram-size 12 --seed 7 --tol 1e-10
//
// Every flag also reads TIMES23_<FLAG> from the environment, and --config
// FILE supplies JSON defaults (explicit flags and env win).  Exit codes:
// 0 success, 2 configuration or parse error, 3 computation error.

#include "times23/errors.hpp"
#include "times23/experiments.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

using times23::ScanConfig;

std::vector<double> parse_ladder(const std::string& text) {
    std::vector<double> out;
    std::size_t at = 0;
    while (at <= text.size() && !text.empty()) {
        auto comma = text.find(',', at);
        std::string token = text.substr(at, comma == std::string::npos ? std::string::npos : comma - at);
        std::size_t used = 0;
        double value = 0.0;
        try {
            value = std::stod(token, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad ladder entry \"" + token + "\"");
        }
        if (used != token.size()) throw std::invalid_argument("bad ladder entry \"" + token + "\"");
        out.push_back(value);
        if (comma == std::string::npos) break;
        at = comma + 1;
    }
    return out;
}

nlohmann::json load_config(const std::string& path) {
    if (path.empty()) return nlohmann::json::object();
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read config file: " + path);
    return nlohmann::json::parse(in);
}

// config value applies only when the flag was neither passed nor env-supplied
template <typename T>
void take(const nlohmann::json& cfg, const char* key, const CLI::Option* opt, T& var) {
    if (opt->count() == 0 && cfg.contains(key)) var = cfg.at(key).get<T>();
}

void emit(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload;
        if (!payload.empty() && payload.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output path: " + out_path);
    out << payload;
    if (!payload.empty() && payload.back() != '\n') out << '\n';
    if (!out) throw std::runtime_error("write failed: " + out_path);
}

int run_app(int argc, char** argv) {
    CLI::App app{"invariant-measure toolkit: equidistribution scans, coefficient "
                 "round trips, character audits"};
    app.require_subcommand(1);

    std::int64_t prime_min = 5, prime_max = 100;
    int scan_window = 16, jobs = 1;
    std::string scan_ladder, scan_out, scan_config;
    auto* scan = app.add_subcommand("scan", "orbit statistics for every prime in a range");
    auto* o_pmin = scan->add_option("--prime-min", prime_min, "smallest prime considered")
                       ->envname("TIMES23_PRIME_MIN");
    auto* o_pmax = scan->add_option("--prime-max", prime_max, "largest prime considered")
                       ->envname("TIMES23_PRIME_MAX");
    auto* o_swin = scan->add_option("--window", scan_window, "coefficient window radius")
                       ->envname("TIMES23_WINDOW");
    auto* o_jobs = scan->add_option("--jobs", jobs, "worker thread count")->envname("TIMES23_JOBS");
    auto* o_slad = scan->add_option("--r-ladder", scan_ladder, "comma-separated radii in (0,1)")
                       ->envname("TIMES23_R_LADDER");
    auto* o_sout = scan->add_option("--out", scan_out, "CSV path (default: stdout)")
                       ->envname("TIMES23_OUT");
    scan->add_option("--config", scan_config, "JSON config file mirroring the flags")
        ->envname("TIMES23_CONFIG");

    std::string rt_spec, rt_ladder = "0.9,0.99,0.999", rt_out, rt_config;
    int rt_window = 8;
    auto* roundtrip =
        app.add_subcommand("roundtrip", "compare exact coefficients against the analytic extractors");
    roundtrip->add_option("spec", rt_spec, "measure spec, e.g. \"orbit 1/5\"")->required();
    auto* o_rwin = roundtrip->add_option("--window", rt_window, "coefficient window radius")
                       ->envname("TIMES23_WINDOW");
    auto* o_rlad = roundtrip->add_option("--r-ladder", rt_ladder, "comma-separated radii in (0,1)")
                       ->envname("TIMES23_R_LADDER");
    auto* o_rout = roundtrip->add_option("--out", rt_out, "JSON path (default: stdout)")
                       ->envname("TIMES23_OUT");
    roundtrip->add_option("--config", rt_config, "JSON config file mirroring the flags")
        ->envname("TIMES23_CONFIG");

    std::string au_spec, au_out, au_config;
    int gram_size = 12;
    std::uint64_t seed = 1;
    double tol = 1e-10;
    auto* audit = app.add_subcommand("audit", "character health report for a measure spec");
    audit->add_option("spec", au_spec, "measure spec, e.g. \"orbit 1/5\"")->required();
    auto* o_gram = audit->add_option("--gram-size", gram_size, "random element-set size")
                       ->envname("TIMES23_GRAM_SIZE");
    auto* o_seed = audit->add_option("--seed", seed, "random seed")->envname("TIMES23_SEED");
    auto* o_tol = audit->add_option("--tol", tol, "comparison tolerance")->envname("TIMES23_TOL");
    auto* o_aout = audit->add_option("--out", au_out, "JSON path (default: stdout)")
                       ->envname("TIMES23_OUT");
    audit->add_option("--config", au_config, "JSON config file mirroring the flags")
        ->envname("TIMES23_CONFIG");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    if (app.got_subcommand(scan)) {
        auto cfg = load_config(scan_config);
        take(cfg, "prime_min", o_pmin, prime_min);
        take(cfg, "prime_max", o_pmax, prime_max);
        take(cfg, "window", o_swin, scan_window);
        take(cfg, "jobs", o_jobs, jobs);
        take(cfg, "out", o_sout, scan_out);
        ScanConfig config;
        config.prime_min = prime_min;
        config.prime_max = prime_max;
        config.L = scan_window;
        config.parallelism = jobs;
        config.output_path = scan_out;
        if (o_slad->count() > 0 || !cfg.contains("r_ladder"))
            config.r_ladder = parse_ladder(scan_ladder);
        else if (cfg.at("r_ladder").is_string())
            config.r_ladder = parse_ladder(cfg.at("r_ladder").get<std::string>());
        else
            config.r_ladder = cfg.at("r_ladder").get<std::vector<double>>();
        auto rows = times23::run_equidistribution_scan(config);
        if (rows.empty()) std::cerr << "warning: no primes coprime to 6 in range\n";
        if (config.output_path.empty()) emit(times23::scan_rows_to_csv(rows), "");
        return 0;
    }

    if (app.got_subcommand(roundtrip)) {
        auto cfg = load_config(rt_config);
        take(cfg, "window", o_rwin, rt_window);
        take(cfg, "r_ladder", o_rlad, rt_ladder);
        take(cfg, "out", o_rout, rt_out);
        emit(times23::run_roundtrip_report(rt_spec, rt_window, parse_ladder(rt_ladder)), rt_out);
        return 0;
    }

    auto cfg = load_config(au_config);
    take(cfg, "gram_size", o_gram, gram_size);
    take(cfg, "seed", o_seed, seed);
    take(cfg, "tol", o_tol, tol);
    take(cfg, "out", o_aout, au_out);
    emit(times23::run_character_audit(au_spec, gram_size, seed, tol), au_out);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run_app(argc, argv);
    } catch (const times23::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
