#pragma once

// Fourier side: coefficients mu-hat(l) = integral of e^{-i l theta} d mu,
// finite symmetric coefficient windows, the weighted vague distance, and
// support detection through Toeplitz moment matrices.

#include "times23/exact.hpp"
#include "times23/measure.hpp"

#include <complex>
#include <iosfwd>
#include <optional>
#include <vector>

namespace times23 {

// Atomic measures: sum of w * e^{-2 pi i (m*l mod r)/r} with the phase reduced
// in exact integer arithmetic before any trigonometry.  Lebesgue: 1 at l = 0.
std::complex<double> fourier_coefficient(const Measure& mu, std::int64_t l);

// Same, for indices too large for int64 (used by character evaluation).
std::complex<double> fourier_coefficient(const Measure& mu, const Int& l);

// Coefficients mu-hat(l) for |l| <= L.  Index 0 holds exactly 1 when sourced
// from a measure (total mass is exact).
class CoefficientWindow {
public:
    explicit CoefficientWindow(int L);

    static CoefficientWindow of_measure(const Measure& mu, int L);

    int radius() const { return L_; }
    std::complex<double> at(int l) const;
    void set(int l, std::complex<double> value);

private:
    int L_;
    std::vector<std::complex<double>> values_; // index l + L_
};

// max over |l| <= L of |mu-hat(l) - mu-hat(n l)| <= tol.
bool invariance_window_check(const Measure& mu, std::int64_t n, int L, double tol);

// sum over |l| <= L of 2^{-|l|} |mu-hat(l) - nu-hat(l)|.
double vague_distance(const Measure& mu, const Measure& nu, int L);

// Smallest d >= 1 such that the (d+1)x(d+1) moment matrix [mu-hat(l - m)] is
// singular (smallest eigenvalue <= rel_tol * largest); nullopt when every
// d <= L is nonsingular ("exceeds window").  The window must satisfy the
// normalization value-at-0 = 1.
std::optional<int> toeplitz_support_rank(const CoefficientWindow& window, double rel_tol = 1e-8);

void window_to_csv(std::ostream& out, const CoefficientWindow& window);
CoefficientWindow window_from_csv(std::istream& in);

} // namespace times23
