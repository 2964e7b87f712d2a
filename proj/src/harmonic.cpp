#include "times23/harmonic.hpp"
#include "times23/csvnum.hpp"
#include "times23/errors.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <cstdio>
#include <istream>
#include <numbers>
#include <ostream>
#include <string>

namespace times23 {

namespace {

// w * e^{-2 pi i k / r} for an exactly reduced phase numerator k in [0, r).
std::complex<double> phase_term(double w, std::int64_t k, std::int64_t r) {
    return std::polar(w, -2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(r));
}

} // namespace

std::complex<double> fourier_coefficient(const Measure& mu, std::int64_t l) {
    if (!mu.is_atomic()) return l == 0 ? 1.0 : 0.0;
    std::complex<double> sum = 0.0;
    for (const auto& at : mu.atoms()) {
        std::int64_t lr = l % at.point.r;
        if (lr < 0) lr += at.point.r;
        auto k = static_cast<std::int64_t>(static_cast<__int128>(at.point.m) * lr % at.point.r);
        sum += phase_term(to_double(at.weight), k, at.point.r);
    }
    return sum;
}

std::complex<double> fourier_coefficient(const Measure& mu, const Int& l) {
    if (!mu.is_atomic()) return l == 0 ? 1.0 : 0.0;
    std::complex<double> sum = 0.0;
    for (const auto& at : mu.atoms()) {
        Int lr = l % at.point.r;
        if (lr < 0) lr += at.point.r;
        auto k = static_cast<std::int64_t>(static_cast<__int128>(at.point.m) *
                                           lr.convert_to<std::int64_t>() % at.point.r);
        sum += phase_term(to_double(at.weight), k, at.point.r);
    }
    return sum;
}

CoefficientWindow::CoefficientWindow(int L) : L_(L), values_(2 * static_cast<std::size_t>(L) + 1) {
    if (L < 0) throw std::invalid_argument("window radius must be nonnegative");
}

CoefficientWindow CoefficientWindow::of_measure(const Measure& mu, int L) {
    CoefficientWindow w(L);
    for (int l = -L; l <= L; ++l)
        w.set(l, fourier_coefficient(mu, static_cast<std::int64_t>(l)));
    w.set(0, 1.0); // total mass is exactly 1
    return w;
}

std::complex<double> CoefficientWindow::at(int l) const {
    if (l < -L_ || l > L_) throw std::out_of_range("coefficient index outside window");
    return values_[static_cast<std::size_t>(l + L_)];
}

void CoefficientWindow::set(int l, std::complex<double> value) {
    if (l < -L_ || l > L_) throw std::out_of_range("coefficient index outside window");
    values_[static_cast<std::size_t>(l + L_)] = value;
}

bool invariance_window_check(const Measure& mu, std::int64_t n, int L, double tol) {
    for (int l = -L; l <= L; ++l) {
        auto diff = fourier_coefficient(mu, static_cast<std::int64_t>(l)) -
                    fourier_coefficient(mu, static_cast<std::int64_t>(l) * n);
        if (std::abs(diff) > tol) return false;
    }
    return true;
}

double vague_distance(const Measure& mu, const Measure& nu, int L) {
    double sum = 0.0;
    for (int l = -L; l <= L; ++l)
        sum += std::ldexp(1.0, -std::abs(l)) *
               std::abs(fourier_coefficient(mu, static_cast<std::int64_t>(l)) -
                        fourier_coefficient(nu, static_cast<std::int64_t>(l)));
    return sum;
}

std::optional<int> toeplitz_support_rank(const CoefficientWindow& window, double rel_tol) {
    if (std::abs(window.at(0) - 1.0) > 1e-9)
        throw InvalidWindowError("coefficient window must carry value 1 at index 0");
    for (int d = 1; d <= window.radius(); ++d) {
        Eigen::MatrixXcd t(d + 1, d + 1);
        for (int i = 0; i <= d; ++i)
            for (int j = 0; j <= d; ++j) t(i, j) = window.at(i - j);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(t, Eigen::EigenvaluesOnly);
        double lo = es.eigenvalues()(0);
        double hi = es.eigenvalues()(d);
        if (lo <= rel_tol * std::abs(hi)) return d;
    }
    return std::nullopt;
}

void window_to_csv(std::ostream& out, const CoefficientWindow& window) {
    out << "l,re,im\r\n";
    for (int l = -window.radius(); l <= window.radius(); ++l) {
        auto v = window.at(l);
        out << l << ',' << csv_double(v.real()) << ',' << csv_double(v.imag()) << "\r\n";
    }
}

CoefficientWindow window_from_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty coefficient CSV");
    std::vector<std::pair<int, std::complex<double>>> rows;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        int l;
        double re, im;
        if (std::sscanf(line.c_str(), "%d,%lf,%lf", &l, &re, &im) != 3)
            throw ParseError("bad coefficient CSV row: '" + line + "'");
        rows.push_back({l, {re, im}});
    }
    if (rows.empty()) throw ParseError("coefficient CSV has no rows");
    int L = (static_cast<int>(rows.size()) - 1) / 2;
    if (static_cast<int>(rows.size()) != 2 * L + 1)
        throw ParseError("coefficient CSV must cover -L..L");
    CoefficientWindow w(L);
    for (auto& [l, v] : rows) w.set(l, v);
    return w;
}

} // namespace times23
