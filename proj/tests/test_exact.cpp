#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "times23/errors.hpp"
#include "times23/exact.hpp"
#include "times23/prng.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <numeric>

using namespace times23;
using boost::multiprecision::cpp_rational;
using boost::multiprecision::pow;

// Oracle: the value of a six-adic triple as an exact rational.  Everything the
// SixAdic type does must agree with plain rational arithmetic on these values.
static cpp_rational rational_value(const SixAdic& a) {
    cpp_rational den = cpp_rational(Int(1) << a.e2) * cpp_rational(pow(Int(3), static_cast<unsigned>(a.e3)));
    return cpp_rational(a.num) / den;
}

static cpp_rational scale_oracle(const cpp_rational& v, std::int64_t j, std::int64_t k) {
    cpp_rational out = v;
    for (std::int64_t t = 0; t < std::llabs(j); ++t) {
        if (j > 0) out *= 2; else out /= 2;
    }
    for (std::int64_t t = 0; t < std::llabs(k); ++t) {
        if (k > 0) out *= 3; else out /= 3;
    }
    return out;
}

static SixAdic random_sixadic(SplitMix64& rng) {
    return sixadic_make(Int(rng.range(-1000, 1000)), rng.range(0, 6), rng.range(0, 6));
}

TEST_CASE("cyclotomic normalization") {
    CHECK(cyclotomic_normalize(2, 4) == CyclotomicPoint{1, 2});
    CHECK(cyclotomic_normalize(5, 5) == CyclotomicPoint{0, 1});
    CHECK(cyclotomic_normalize(7, 5) == CyclotomicPoint{2, 5});
    CHECK(cyclotomic_normalize(-1, 5) == CyclotomicPoint{4, 5});
    CHECK(cyclotomic_normalize(0, 17) == CyclotomicPoint{0, 1});
    CHECK_THROWS_AS(cyclotomic_normalize(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(cyclotomic_normalize(1, -3), std::invalid_argument);
}

TEST_CASE("cyclotomic normalization is idempotent and class-invariant") {
    SplitMix64 rng(11);
    for (int i = 0; i < 2000; ++i) {
        std::int64_t r = rng.range(1, 500);
        std::int64_t m = rng.range(-2000, 2000);
        auto x = cyclotomic_normalize(m, r);
        CHECK(x.r >= 1);
        CHECK(x.m >= 0);
        CHECK(x.m < x.r);
        CHECK(std::gcd(x.m, x.r) == 1);
        CHECK(cyclotomic_normalize(x.m, x.r) == x);
        // representatives of the same angle class reduce identically
        std::int64_t c = rng.range(1, 7);
        CHECK(cyclotomic_normalize(m * c, r * c) == x);
        CHECK(cyclotomic_normalize(m + r, r) == x);
    }
}

TEST_CASE("cyclotomic powers") {
    CHECK(cyclotomic_power({1, 5}, 2) == CyclotomicPoint{2, 5});
    CHECK(cyclotomic_power({2, 5}, 3) == CyclotomicPoint{1, 5});
    CHECK(cyclotomic_power({0, 1}, 12345) == CyclotomicPoint{0, 1});
    CHECK(cyclotomic_power({1, 5}, 5) == CyclotomicPoint{0, 1});
    CHECK(cyclotomic_power({1, 5}, -1) == CyclotomicPoint{4, 5});

    // exponent semigroup: (x^a)^b = x^{ab}, x^a * ... checked via exponent sums
    SplitMix64 rng(12);
    for (int i = 0; i < 2000; ++i) {
        auto x = cyclotomic_normalize(rng.range(0, 999), rng.range(1, 400));
        std::int64_t a = rng.range(-50, 50), b = rng.range(-50, 50);
        CHECK(cyclotomic_power(cyclotomic_power(x, a), b) == cyclotomic_power(x, a * b));
    }
}

TEST_CASE("angle order matches floating angles") {
    SplitMix64 rng(13);
    for (int i = 0; i < 1000; ++i) {
        auto a = cyclotomic_normalize(rng.range(0, 999), rng.range(1, 97));
        auto b = cyclotomic_normalize(rng.range(0, 999), rng.range(1, 97));
        if (angle_less(a, b)) CHECK(angle_of(a) < angle_of(b));
        if (a == b) CHECK_FALSE(angle_less(a, b));
    }
}

TEST_CASE("six-adic normal forms") {
    CHECK(sixadic_make(6, 1, 1) == SixAdic{1, 0, 0});
    CHECK(sixadic_make(4, 1, 0) == SixAdic{2, 0, 0});
    CHECK(sixadic_make(0, 3, 5) == SixAdic{0, 0, 0});
    CHECK(sixadic_make(9, 2, 1) == SixAdic{3, 2, 0});
    SplitMix64 rng(14);
    for (int i = 0; i < 3000; ++i) {
        auto a = random_sixadic(rng);
        if (a.e2 > 0) CHECK(a.num % 2 != 0);
        if (a.e3 > 0) CHECK(a.num % 3 != 0);
        if (a.num == 0) CHECK(a == SixAdic{0, 0, 0});
        // normal form is unique: equal values have equal fields
        std::int64_t t = rng.range(0, 4), s = rng.range(0, 4);
        auto blown = sixadic_make(a.num * (Int(1) << t) * pow(Int(3), static_cast<unsigned>(s)),
                                  a.e2 + t, a.e3 + s);
        CHECK(blown == a);
    }
}

TEST_CASE("six-adic addition examples") {
    auto half = sixadic_make(1, 1, 0);
    CHECK(sixadic_add(half, half) == SixAdic{1, 0, 0});
    CHECK(sixadic_add(sixadic_make(1, 0, 1), sixadic_make(1, 0, 1)) == SixAdic{2, 0, 1});
    CHECK(sixadic_add(sixadic_make(1, 1, 1), sixadic_make(-1, 1, 1)) == SixAdic{0, 0, 0});
}

TEST_CASE("six-adic scaling examples") {
    CHECK(sixadic_scale23(sixadic_make(1, 0, 0), 1, 0) == SixAdic{2, 0, 0});
    CHECK(sixadic_scale23(sixadic_make(1, 1, 0), -1, 0) == SixAdic{1, 2, 0});
    CHECK(sixadic_scale23(sixadic_make(1, 1, 1), 1, 1) == SixAdic{1, 0, 0});
    CHECK(sixadic_scale23(SixAdic{0, 0, 0}, -5, 7) == SixAdic{0, 0, 0});
}

TEST_CASE("six-adic arithmetic agrees with the rational oracle") {
    SplitMix64 rng(15);
    for (int i = 0; i < 10000; ++i) {
        auto a = random_sixadic(rng);
        auto b = random_sixadic(rng);
        CHECK(rational_value(sixadic_add(a, b)) == rational_value(a) + rational_value(b));
        CHECK(rational_value(sixadic_sub(a, b)) == rational_value(a) - rational_value(b));
        std::int64_t j = rng.range(-5, 5), k = rng.range(-5, 5);
        CHECK(rational_value(sixadic_scale23(a, j, k)) == scale_oracle(rational_value(a), j, k));
        // scaling is invertible
        CHECK(sixadic_scale23(sixadic_scale23(a, j, k), -j, -k) == a);
    }
}

TEST_CASE("six-adic clear-denominator uses the minimal power of six") {
    CHECK(sixadic_clear_denominator(sixadic_make(1, 1, 0)) == 3);  // (1/2)*6 = 3
    CHECK(sixadic_clear_denominator(sixadic_make(1, 0, 1)) == 2);  // (1/3)*6 = 2
    CHECK(sixadic_clear_denominator(sixadic_make(1, 1, 1)) == 1);  // (1/6)*6 = 1
    CHECK(sixadic_clear_denominator(sixadic_make(5, 0, 0)) == 5);
    SplitMix64 rng(16);
    for (int i = 0; i < 2000; ++i) {
        auto a = random_sixadic(rng);
        std::int64_t n = std::max(a.e2, a.e3);
        cpp_rational scaled = rational_value(a) * cpp_rational(pow(Int(6), static_cast<unsigned>(n)));
        CHECK(cpp_rational(sixadic_clear_denominator(a)) == scaled);
    }
}

TEST_CASE("rational weights") {
    CHECK(rational_weight(2, 4) == RationalWeight{1, 2});
    CHECK(rational_weight(0, 7) == RationalWeight{0, 1});
    CHECK(rational_weight(5, 5) == RationalWeight{1, 1});
    CHECK_THROWS_AS(rational_weight(3, 2), std::invalid_argument);
    CHECK_THROWS_AS(rational_weight(-1, 2), std::invalid_argument);
    CHECK_THROWS_AS(rational_weight(1, 0), std::invalid_argument);
    CHECK(weight_add(rational_weight(1, 2), rational_weight(1, 2)) == RationalWeight{1, 1});
    CHECK(weight_add(rational_weight(1, 6), rational_weight(1, 3)) == RationalWeight{1, 2});
    CHECK_THROWS_AS(weight_add(rational_weight(2, 3), rational_weight(2, 3)), std::invalid_argument);
    CHECK(weight_mul(rational_weight(2, 3), rational_weight(3, 4)) == RationalWeight{1, 2});
    CHECK(to_double(rational_weight(1, 4)) == 0.25);
    CHECK(unit_fraction(4) == RationalWeight{1, 4});
}

TEST_CASE("serialization round trips exactly") {
    SplitMix64 rng(17);
    for (int i = 0; i < 2000; ++i) {
        auto x = cyclotomic_normalize(rng.range(0, 10000), rng.range(1, 10000));
        CHECK(parse_cyclotomic(to_string(x)) == x);
        auto a = random_sixadic(rng);
        CHECK(parse_sixadic(to_string(a)) == a);
        auto d = Int(rng.range(1, 1000));
        auto w = rational_weight(Int(rng.range(0, 1000)) % (d + 1), d);
        CHECK(parse_weight(to_string(w)) == w);
    }
    CHECK(to_string(sixadic_make(-1, 0, 2)) == "-1/2^0\xc2\xb7"
                                               "3^2");
    CHECK(parse_sixadic("-1/2^0*3^2") == sixadic_make(-1, 0, 2));
    CHECK(parse_sixadic("7") == sixadic_make(7, 0, 0));
    CHECK_THROWS_AS(parse_sixadic("1/5"), ParseError);
    CHECK_THROWS_AS(parse_cyclotomic("x/y"), ParseError);
    CHECK_THROWS_AS(parse_cyclotomic("3"), ParseError);
    CHECK_THROWS_AS(parse_weight("4/3"), ParseError);
}
