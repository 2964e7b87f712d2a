#pragma once

// Exact scalar types: points on the unit circle that are roots of unity,
// elements of Z[1/6], and rational weights in [0,1].

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>
#include <string>

namespace times23 {

using Int = boost::multiprecision::cpp_int;

// --------------------------------------------------------------------------
// CyclotomicPoint: e^{2 pi i m / r} in lowest terms, 0 <= m < r, gcd(m,r) = 1.
// The identity of the circle group is (0, 1).

struct CyclotomicPoint {
    std::int64_t m = 0;
    std::int64_t r = 1;

    friend bool operator==(const CyclotomicPoint&, const CyclotomicPoint&) = default;
};

// Reduce an arbitrary pair to the canonical representative; r must be >= 1.
CyclotomicPoint cyclotomic_normalize(std::int64_t m, std::int64_t r);

// x^n for any integer n (negative n uses x^r = 1).
CyclotomicPoint cyclotomic_power(const CyclotomicPoint& x, std::int64_t n);

// Angle order on [0, 2 pi): m1/r1 < m2/r2 compared exactly.
bool angle_less(const CyclotomicPoint& a, const CyclotomicPoint& b);

double angle_of(const CyclotomicPoint& x); // 2 pi m / r
std::complex<double> to_complex(const CyclotomicPoint& x);

std::string to_string(const CyclotomicPoint& x); // "m/r"
CyclotomicPoint parse_cyclotomic(const std::string& text);

// --------------------------------------------------------------------------
// SixAdic: num / (2^e2 * 3^e3), reduced so that e2 > 0 implies num odd and
// e3 > 0 implies 3 does not divide num.  Zero is (0, 0, 0).

struct SixAdic {
    Int num = 0;
    std::int32_t e2 = 0;
    std::int32_t e3 = 0;

    friend bool operator==(const SixAdic&, const SixAdic&) = default;
};

SixAdic sixadic_make(Int num, std::int64_t e2, std::int64_t e3);
SixAdic sixadic_add(const SixAdic& a, const SixAdic& b);
SixAdic sixadic_neg(const SixAdic& a);
SixAdic sixadic_sub(const SixAdic& a, const SixAdic& b);

// a * 2^j * 3^k for any integers j, k.
SixAdic sixadic_scale23(const SixAdic& a, std::int64_t j, std::int64_t k);

bool sixadic_is_zero(const SixAdic& a);
bool sixadic_is_integer(const SixAdic& a);

// The integer 6^n * a for the minimal n clearing both denominators.
Int sixadic_clear_denominator(const SixAdic& a);

std::string to_string(const SixAdic& a); // "num/2^e2·3^e3"
SixAdic parse_sixadic(const std::string& text);

// --------------------------------------------------------------------------
// RationalWeight: exact rational in [0,1], lowest terms, positive denominator.

struct RationalWeight {
    Int num = 0;
    Int den = 1;

    friend bool operator==(const RationalWeight&, const RationalWeight&) = default;
};

RationalWeight rational_weight(Int num, Int den);
RationalWeight unit_fraction(const Int& k); // 1/k

RationalWeight weight_add(const RationalWeight& a, const RationalWeight& b);
RationalWeight weight_mul(const RationalWeight& a, const RationalWeight& b);

bool weight_is_zero(const RationalWeight& w);
bool weight_is_one(const RationalWeight& w);
double to_double(const RationalWeight& w);

std::string to_string(const RationalWeight& w); // "num/den"
RationalWeight parse_weight(const std::string& text);

} // namespace times23
