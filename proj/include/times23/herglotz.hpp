#pragma once

// Caratheodory side of the correspondence: Herglotz kernel sums, Taylor
// coefficient machinery, contour and radial quadrature, circularity tests
// and certified sup-norm bounds on compact sub-disks.

#include "times23/exact.hpp"
#include "times23/harmonic.hpp"
#include "times23/measure.hpp"

#include <complex>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace times23 {

// Truncated Taylor series a(0..N).  Caratheodory data has a(0) = 1 and
// |a(l)| <= 2 for every l.
struct TaylorTruncation {
    std::vector<std::complex<double>> coeffs;
    int order() const { return static_cast<int>(coeffs.size()) - 1; }
};

enum class CaratheodoryVariant { Constant1, KernelSum, TaylorForm };

// Holomorphic on the open unit disk, positive real part, value 1 at 0.
// KernelSum keeps the exact atoms (weights sum to 1) and evaluates the
// kernel sum directly; TaylorForm evaluates a stored truncation and is
// meant for black-box series.
class CaratheodoryFunction {
public:
    static CaratheodoryFunction constant_one();
    static CaratheodoryFunction of_measure(const Measure& mu);
    static CaratheodoryFunction kernel_sum(std::vector<Atom> atoms);
    static CaratheodoryFunction taylor_form(TaylorTruncation series);

    CaratheodoryVariant variant() const { return variant_; }

    // Constant1 and KernelSum carry the exact measure they came from.
    bool has_measure() const { return variant_ != CaratheodoryVariant::TaylorForm; }
    const Measure& measure() const;
    const TaylorTruncation& series() const; // TaylorForm only

    std::complex<double> operator()(std::complex<double> z) const; // |z| < 1

private:
    CaratheodoryFunction() = default;
    CaratheodoryVariant variant_ = CaratheodoryVariant::Constant1;
    Measure measure_ = Measure::lebesgue();
    TaylorTruncation series_;
    std::vector<std::complex<double>> points_; // unit-circle atom positions
    std::vector<double> weights_;
};

// (omega + z)/(omega - z); real part (1 - |z|^2)/|omega - z|^2 > 0.
std::complex<double> herglotz_kernel(const CyclotomicPoint& omega, std::complex<double> z);

// Integral of the kernel: Lebesgue gives the constant 1, atomic gives the
// weighted kernel sum.
std::complex<double> psi_of_measure(const Measure& mu, std::complex<double> z);

// a(0) = 1 and a(l) = 2 mu-hat(l) for 1 <= l <= N.
TaylorTruncation taylor_of_measure(const Measure& mu, int N);

using ComplexEvaluator = std::function<std::complex<double>(std::complex<double>)>;

// Trapezoid rule for the Cauchy coefficient integral on the circle of
// radius 2^{-1/l}.  With N nodes the computed value is
//   sum over t >= 0 of a(l + tN) * 2^{-tN/l},
// so for coefficients bounded by 2 the aliasing error is at most
// 2 * 2^{-N/l} / (1 - 2^{-N/l}); exact to roundoff when f is a polynomial
// of degree below l + N.  Requires nodes >= 8 l.
std::complex<double> cauchy_extract_taylor(const ComplexEvaluator& f, int l, int nodes);

// Smallest power of two N >= 8 l with aliasing bound 2 * 2^{-N/l} <= eps.
int suggested_contour_nodes(int l, double eps);

// Fourier window of the positive measure Re(f(r e^{i theta})) d lambda by
// the same trapezoid rule; entry l equals (1/2) r^|l| a(|l|) up to aliasing
// of order 2 r^{N - L}.  Entry 0 comes out of the quadrature (close to 1,
// never forced).  Requires nodes >= 8 L.
CoefficientWindow radial_measure_coefficients(const ComplexEvaluator& f, double r, int L, int nodes);

// Smallest power of two N >= 8 L with aliasing bound 2 r^{N-L} <= eps.
int suggested_radial_nodes(double r, int L, double eps);

// Decides psi(z^n) = (1/n) sum of psi over the n rotates of z.  Checks the
// functional identity on a deterministic golden-angle spiral of `samples`
// points inside radius 0.9, and the coefficient criterion a(l) = a(nl):
// over a full period of the coefficient sequence for KernelSum (exact
// decision), up to the truncation order for TaylorForm.  Both must pass.
bool is_times_n_circular(const CaratheodoryFunction& psi, int n, int samples, double tol);

// Certified bound for sup |f| on the closed disk of radius r when all
// |a(l)| <= 4:  sum of |a(l)| + 4 r^{N+1} / (1 - r).  Works on arbitrary
// coefficient vectors so difference series can be certified too.
double tail_sup_bound(const std::vector<std::complex<double>>& coeffs, double r);
double tail_sup_bound(const TaylorTruncation& series, double r);

// Max of |psi1 - psi2| over the polar grid {r (i+1)/grid} x {2 pi j/grid};
// the grid contains z = r itself.  When both sides carry coefficient data
// and tail_bound_out is non-null, writes the certified sup bound for the
// difference series (grid max <= true sup <= that bound).
double compact_uniform_distance(const CaratheodoryFunction& psi1, const CaratheodoryFunction& psi2,
                                double r, int grid, double* tail_bound_out = nullptr);

// Rows "l,re,im" for l = 0..N, CRLF line ends.
void taylor_to_csv(std::ostream& out, const TaylorTruncation& series);
TaylorTruncation taylor_from_csv(std::istream& in);

// Debug trace: JSON array of {"z":[re,im],"value":[re,im]}.
std::string evaluation_trace_json(const ComplexEvaluator& f,
                                  const std::vector<std::complex<double>>& points);

} // namespace times23
