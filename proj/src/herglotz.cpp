#include "times23/herglotz.hpp"
#include "times23/csvnum.hpp"
#include "times23/errors.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <istream>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace times23 {

namespace {

constexpr double kPi = std::numbers::pi;

void require_in_disk(std::complex<double> z) {
    if (std::norm(z) >= 1.0) throw std::domain_error("herglotz evaluation needs |z| < 1");
}

int next_pow2_at_least(double x) {
    int n = 1;
    while (static_cast<double>(n) < x) n *= 2;
    return n;
}

// (w + z) / (w - z) with one real division; avoids the slow checked
// complex-division runtime in the innermost loops.
inline std::complex<double> kernel_at(std::complex<double> w, std::complex<double> z) {
    const std::complex<double> den = w - z;
    return (w + z) * std::conj(den) / std::norm(den);
}

} // namespace

CaratheodoryFunction CaratheodoryFunction::constant_one() {
    return CaratheodoryFunction{};
}

CaratheodoryFunction CaratheodoryFunction::of_measure(const Measure& mu) {
    CaratheodoryFunction f;
    f.measure_ = mu;
    if (!mu.is_atomic()) return f;
    f.variant_ = CaratheodoryVariant::KernelSum;
    for (const auto& at : mu.atoms()) {
        f.points_.push_back(to_complex(at.point));
        f.weights_.push_back(to_double(at.weight));
    }
    return f;
}

CaratheodoryFunction CaratheodoryFunction::kernel_sum(std::vector<Atom> atoms) {
    return of_measure(Measure::atomic(std::move(atoms)));
}

CaratheodoryFunction CaratheodoryFunction::taylor_form(TaylorTruncation series) {
    if (series.coeffs.empty() || std::abs(series.coeffs[0] - std::complex<double>(1.0)) > 1e-9)
        throw std::invalid_argument("taylor form needs a(0) = 1");
    series.coeffs[0] = 1.0;
    for (const auto& a : series.coeffs)
        if (std::abs(a) > 2.0 + 1e-9)
            throw std::invalid_argument("taylor form needs |a(l)| <= 2");
    CaratheodoryFunction f;
    f.variant_ = CaratheodoryVariant::TaylorForm;
    f.series_ = std::move(series);
    return f;
}

const Measure& CaratheodoryFunction::measure() const {
    if (!has_measure()) throw UnsupportedVariantError("taylor form carries no measure");
    return measure_;
}

const TaylorTruncation& CaratheodoryFunction::series() const {
    if (variant_ != CaratheodoryVariant::TaylorForm)
        throw UnsupportedVariantError("series storage only for taylor forms");
    return series_;
}

std::complex<double> CaratheodoryFunction::operator()(std::complex<double> z) const {
    require_in_disk(z);
    switch (variant_) {
        case CaratheodoryVariant::Constant1:
            return 1.0;
        case CaratheodoryVariant::KernelSum: {
            std::complex<double> sum = 0.0;
            for (std::size_t i = 0; i < points_.size(); ++i)
                sum += weights_[i] * kernel_at(points_[i], z);
            return sum;
        }
        case CaratheodoryVariant::TaylorForm: {
            std::complex<double> acc = 0.0;
            for (auto it = series_.coeffs.rbegin(); it != series_.coeffs.rend(); ++it)
                acc = acc * z + *it;
            return acc;
        }
    }
    return 1.0;
}

std::complex<double> herglotz_kernel(const CyclotomicPoint& omega, std::complex<double> z) {
    require_in_disk(z);
    return kernel_at(to_complex(omega), z);
}

std::complex<double> psi_of_measure(const Measure& mu, std::complex<double> z) {
    require_in_disk(z);
    if (!mu.is_atomic()) return 1.0;
    std::complex<double> sum = 0.0;
    for (const auto& at : mu.atoms())
        sum += to_double(at.weight) * kernel_at(to_complex(at.point), z);
    return sum;
}

TaylorTruncation taylor_of_measure(const Measure& mu, int N) {
    if (N < 1) throw std::invalid_argument("truncation order must be positive");
    TaylorTruncation t;
    t.coeffs.resize(static_cast<std::size_t>(N) + 1);
    t.coeffs[0] = 1.0;
    for (int l = 1; l <= N; ++l)
        t.coeffs[static_cast<std::size_t>(l)] = 2.0 * fourier_coefficient(mu, static_cast<std::int64_t>(l));
    return t;
}

std::complex<double> cauchy_extract_taylor(const ComplexEvaluator& f, int l, int nodes) {
    if (l < 1) throw std::invalid_argument("coefficient index must be positive");
    if (nodes < 8 * l) throw InsufficientNodesError("contour rule needs at least 8 l nodes");
    const double rho = std::exp2(-1.0 / l);
    std::complex<double> acc = 0.0;
    for (int j = 0; j < nodes; ++j) {
        const double theta = 2.0 * kPi * j / nodes;
        // phase l*theta reduced mod 2 pi through integer arithmetic
        const std::int64_t k = static_cast<std::int64_t>(l) * j % nodes;
        acc += f(std::polar(rho, theta)) * std::polar(1.0, -2.0 * kPi * k / nodes);
    }
    // rho^{-l} = 2 exactly for the chosen contour radius
    return 2.0 * acc / static_cast<double>(nodes);
}

int suggested_contour_nodes(int l, double eps) {
    if (l < 1 || eps <= 0.0) throw std::invalid_argument("need l >= 1 and eps > 0");
    const double need = l * std::log2(2.0 / eps);
    return next_pow2_at_least(std::max(8.0 * l, need));
}

CoefficientWindow radial_measure_coefficients(const ComplexEvaluator& f, double r, int L, int nodes) {
    if (!(r > 0.0 && r < 1.0)) throw std::domain_error("radial evaluation needs r in (0,1)");
    if (L < 1) throw std::invalid_argument("window radius must be positive");
    if (nodes < 8 * L) throw InsufficientNodesError("radial rule needs at least 8 L nodes");
    std::vector<double> g(static_cast<std::size_t>(nodes));
    std::vector<std::complex<double>> root(static_cast<std::size_t>(nodes));
    for (int j = 0; j < nodes; ++j) {
        const double theta = 2.0 * kPi * j / nodes;
        root[static_cast<std::size_t>(j)] = std::polar(1.0, -theta);
        g[static_cast<std::size_t>(j)] = f(std::polar(r, theta)).real();
    }
    CoefficientWindow w(L);
    for (int l = 0; l <= L; ++l) {
        std::complex<double> acc = 0.0;
        std::size_t idx = 0;
        for (int j = 0; j < nodes; ++j) {
            acc += g[static_cast<std::size_t>(j)] * root[idx];
            idx += static_cast<std::size_t>(l);
            if (idx >= static_cast<std::size_t>(nodes)) idx -= static_cast<std::size_t>(nodes);
        }
        acc /= static_cast<double>(nodes);
        w.set(l, acc);
        if (l > 0) w.set(-l, std::conj(acc)); // integrand is real
    }
    return w;
}

int suggested_radial_nodes(double r, int L, double eps) {
    if (!(r > 0.0 && r < 1.0) || L < 1 || eps <= 0.0)
        throw std::invalid_argument("need r in (0,1), L >= 1, eps > 0");
    const double need = L + std::log(2.0 / eps) / -std::log(r);
    return next_pow2_at_least(std::max(8.0 * L, need));
}

namespace {

// coefficient sequence of a kernel sum is periodic with period R = lcm of
// the atom denominators; comparing mu-hat(l) with mu-hat(nl) over one full
// period decides circularity for every l
bool kernel_sum_coefficients_circular(const Measure& mu, int n, double tol) {
    const Int period = clearing_modulus(mu);
    if (period <= 1) return true;
    if (period <= 1000000) {
        const auto R = period.convert_to<std::int64_t>();
        std::vector<std::complex<double>> root(static_cast<std::size_t>(R));
        for (std::int64_t k = 0; k < R; ++k)
            root[static_cast<std::size_t>(k)] = std::polar(1.0, -2.0 * kPi * static_cast<double>(k) / static_cast<double>(R));
        struct Stride { std::int64_t step, idx_l, idx_nl; double w; };
        std::vector<Stride> st;
        for (const auto& at : mu.atoms()) {
            std::int64_t s = at.point.m % at.point.r * (R / at.point.r) % R;
            st.push_back({s, 0, 0, to_double(at.weight)});
        }
        for (std::int64_t l = 1; l <= R; ++l) {
            std::complex<double> a = 0.0, b = 0.0;
            for (auto& s : st) {
                s.idx_l += s.step;
                if (s.idx_l >= R) s.idx_l -= R;
                s.idx_nl += n * s.step % R;
                if (s.idx_nl >= R) s.idx_nl -= R;
                a += s.w * root[static_cast<std::size_t>(s.idx_l)];
                b += s.w * root[static_cast<std::size_t>(s.idx_nl)];
            }
            if (std::abs(a - b) > tol) return false;
        }
        return true;
    }
    // period too large to sweep; probe a fixed prefix of indices instead
    for (std::int64_t l = 1; l <= 4096; ++l) {
        auto a = fourier_coefficient(mu, l);
        auto b = fourier_coefficient(mu, Int(l) * n);
        if (std::abs(a - b) > tol) return false;
    }
    return true;
}

} // namespace

bool is_times_n_circular(const CaratheodoryFunction& psi, int n, int samples, double tol) {
    if (n < 1 || samples < 1 || tol <= 0.0)
        throw std::invalid_argument("need n >= 1, samples >= 1, tol > 0");
    if (n == 1) return true;

    // golden-angle spiral: deterministic, well spread over the 0.9-disk
    constexpr double kGolden = 0.6180339887498949;
    std::vector<std::complex<double>> rot(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        rot[static_cast<std::size_t>(k)] = std::polar(1.0, 2.0 * kPi * k / n);
    for (int s = 0; s < samples; ++s) {
        const double rad = 0.9 * std::sqrt((s + 0.5) / samples);
        const std::complex<double> z = std::polar(rad, 2.0 * kPi * kGolden * s);
        std::complex<double> avg = 0.0;
        for (int k = 0; k < n; ++k) avg += psi(rot[static_cast<std::size_t>(k)] * z);
        avg /= static_cast<double>(n);
        if (std::abs(psi(std::pow(z, n)) - avg) > tol) return false;
    }

    switch (psi.variant()) {
        case CaratheodoryVariant::Constant1:
            return true;
        case CaratheodoryVariant::KernelSum:
            return kernel_sum_coefficients_circular(psi.measure(), n, tol);
        case CaratheodoryVariant::TaylorForm: {
            const auto& a = psi.series().coeffs;
            const int N = psi.series().order();
            for (int l = 1; static_cast<std::int64_t>(l) * n <= N; ++l)
                if (std::abs(a[static_cast<std::size_t>(l)] - a[static_cast<std::size_t>(l * n)]) > tol)
                    return false;
            return true;
        }
    }
    return true;
}

double tail_sup_bound(const std::vector<std::complex<double>>& coeffs, double r) {
    if (!(r > 0.0 && r < 1.0)) throw std::domain_error("tail bound needs r in (0,1)");
    double sum = 0.0;
    for (const auto& a : coeffs) {
        const double m = std::abs(a);
        if (m > 4.0 + 1e-9) throw BoundInapplicableError("tail bound needs |a(l)| <= 4");
        sum += m;
    }
    const int N = static_cast<int>(coeffs.size()) - 1;
    return sum + 4.0 * std::pow(r, N + 1) / (1.0 - r);
}

double tail_sup_bound(const TaylorTruncation& series, double r) {
    return tail_sup_bound(series.coeffs, r);
}

namespace {

// coefficients a(0..N) of a Caratheodory value; TaylorForm is a polynomial,
// so indices past its order are exactly zero
std::vector<std::complex<double>> coefficients_up_to(const CaratheodoryFunction& psi, int N) {
    std::vector<std::complex<double>> a(static_cast<std::size_t>(N) + 1, 0.0);
    if (psi.variant() == CaratheodoryVariant::TaylorForm) {
        const auto& c = psi.series().coeffs;
        for (std::size_t i = 0; i < c.size() && i <= static_cast<std::size_t>(N); ++i) a[i] = c[i];
    } else {
        auto t = taylor_of_measure(psi.measure(), N);
        a = std::move(t.coeffs);
    }
    return a;
}

} // namespace

double compact_uniform_distance(const CaratheodoryFunction& psi1, const CaratheodoryFunction& psi2,
                                double r, int grid, double* tail_bound_out) {
    if (!(r > 0.0 && r < 1.0)) throw std::domain_error("compact distance needs r in (0,1)");
    if (grid < 1) throw std::invalid_argument("grid must be positive");
    double best = 0.0;
    for (int i = 0; i < grid; ++i) {
        const double rad = r * (i + 1) / grid; // outermost ring is |z| = r exactly
        for (int j = 0; j < grid; ++j) {
            const std::complex<double> z = std::polar(rad, 2.0 * kPi * j / grid);
            best = std::max(best, std::abs(psi1(z) - psi2(z)));
        }
    }
    if (tail_bound_out) {
        constexpr int kTailOrder = 64;
        auto a = coefficients_up_to(psi1, kTailOrder);
        auto b = coefficients_up_to(psi2, kTailOrder);
        for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
        *tail_bound_out = tail_sup_bound(a, r);
    }
    return best;
}

void taylor_to_csv(std::ostream& out, const TaylorTruncation& series) {
    out << "l,re,im\r\n";
    for (std::size_t l = 0; l < series.coeffs.size(); ++l) {
        const auto& v = series.coeffs[l];
        out << l << ',' << csv_double(v.real()) << ',' << csv_double(v.imag()) << "\r\n";
    }
}

TaylorTruncation taylor_from_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty taylor CSV");
    TaylorTruncation t;
    int expected = 0;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        int l;
        double re, im;
        if (std::sscanf(line.c_str(), "%d,%lf,%lf", &l, &re, &im) != 3)
            throw ParseError("bad taylor CSV row: '" + line + "'");
        if (l != expected) throw ParseError("taylor CSV rows must cover 0..N in order");
        ++expected;
        t.coeffs.emplace_back(re, im);
    }
    if (t.coeffs.empty()) throw ParseError("taylor CSV has no rows");
    return t;
}

std::string evaluation_trace_json(const ComplexEvaluator& f,
                                  const std::vector<std::complex<double>>& points) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& z : points) {
        const auto v = f(z);
        arr.push_back({{"z", {z.real(), z.imag()}}, {"value", {v.real(), v.imag()}}});
    }
    return arr.dump();
}

} // namespace times23
