#include "times23/exact.hpp"
#include "times23/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <numbers>
#include <numeric>

namespace times23 {

namespace {

namespace mp = boost::multiprecision;

// Exponents this large indicate a logic error upstream, not a real value.
constexpr std::int64_t kMaxExponent = std::int64_t{1} << 20;

void check_exponent(std::int64_t e, const char* what) {
    if (e < 0 || e > kMaxExponent)
        throw std::invalid_argument(std::string(what) + " exponent out of range");
}

Int pow3(std::int64_t k) {
    return mp::pow(Int(3), static_cast<unsigned>(k));
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    if (b == std::string::npos) return "";
    return s.substr(b, e - b + 1);
}

Int parse_int(const std::string& s) {
    try {
        if (s.empty()) throw std::runtime_error("empty");
        return Int(s);
    } catch (const std::exception&) {
        throw ParseError("not an integer: '" + s + "'");
    }
}

std::int64_t parse_i64(const std::string& s) {
    Int v = parse_int(s);
    if (v < std::numeric_limits<std::int64_t>::min() || v > std::numeric_limits<std::int64_t>::max())
        throw ParseError("integer out of range: '" + s + "'");
    return v.convert_to<std::int64_t>();
}

} // namespace

// ---------------------------------------------------------------- cyclotomic

CyclotomicPoint cyclotomic_normalize(std::int64_t m, std::int64_t r) {
    if (r <= 0) throw std::invalid_argument("cyclotomic denominator must be positive");
    std::int64_t mm = m % r;
    if (mm < 0) mm += r;
    std::int64_t g = std::gcd(mm, r); // gcd(0, r) = r collapses 0/r to 0/1
    return CyclotomicPoint{mm / g, r / g};
}

CyclotomicPoint cyclotomic_power(const CyclotomicPoint& x, std::int64_t n) {
    std::int64_t e = n % x.r;
    if (e < 0) e += x.r;
    auto prod = static_cast<__int128>(e) * x.m % x.r;
    return cyclotomic_normalize(static_cast<std::int64_t>(prod), x.r);
}

bool angle_less(const CyclotomicPoint& a, const CyclotomicPoint& b) {
    return static_cast<__int128>(a.m) * b.r < static_cast<__int128>(b.m) * a.r;
}

double angle_of(const CyclotomicPoint& x) {
    return 2.0 * std::numbers::pi * static_cast<double>(x.m) / static_cast<double>(x.r);
}

std::complex<double> to_complex(const CyclotomicPoint& x) {
    return std::polar(1.0, angle_of(x));
}

std::string to_string(const CyclotomicPoint& x) {
    return std::to_string(x.m) + "/" + std::to_string(x.r);
}

CyclotomicPoint parse_cyclotomic(const std::string& text) {
    auto s = trim(text);
    auto slash = s.find('/');
    if (slash == std::string::npos) throw ParseError("expected m/r: '" + text + "'");
    std::int64_t m = parse_i64(trim(s.substr(0, slash)));
    std::int64_t r = parse_i64(trim(s.substr(slash + 1)));
    if (r <= 0) throw ParseError("denominator must be positive: '" + text + "'");
    return cyclotomic_normalize(m, r);
}

// ------------------------------------------------------------------ six-adic

SixAdic sixadic_make(Int num, std::int64_t e2, std::int64_t e3) {
    check_exponent(e2, "2-adic");
    check_exponent(e3, "3-adic");
    if (num == 0) return SixAdic{};
    while (e2 > 0 && num % 2 == 0) { num /= 2; --e2; }
    while (e3 > 0 && num % 3 == 0) { num /= 3; --e3; }
    return SixAdic{std::move(num), static_cast<std::int32_t>(e2), static_cast<std::int32_t>(e3)};
}

SixAdic sixadic_add(const SixAdic& a, const SixAdic& b) {
    std::int64_t e2 = std::max(a.e2, b.e2);
    std::int64_t e3 = std::max(a.e3, b.e3);
    Int na = a.num * (Int(1) << (e2 - a.e2)) * pow3(e3 - a.e3);
    Int nb = b.num * (Int(1) << (e2 - b.e2)) * pow3(e3 - b.e3);
    return sixadic_make(na + nb, e2, e3);
}

SixAdic sixadic_neg(const SixAdic& a) {
    return SixAdic{-a.num, a.e2, a.e3};
}

SixAdic sixadic_sub(const SixAdic& a, const SixAdic& b) {
    return sixadic_add(a, sixadic_neg(b));
}

SixAdic sixadic_scale23(const SixAdic& a, std::int64_t j, std::int64_t k) {
    if (a.num == 0) return SixAdic{};
    if (std::llabs(j) > kMaxExponent || std::llabs(k) > kMaxExponent)
        throw std::invalid_argument("scaling exponent out of range");
    Int num = a.num;
    std::int64_t e2 = a.e2 - j; // value is num * 2^{-e2} * 3^{-e3}
    std::int64_t e3 = a.e3 - k;
    if (e2 < 0) { num <<= static_cast<unsigned>(-e2); e2 = 0; }
    if (e3 < 0) { num *= pow3(-e3); e3 = 0; }
    return sixadic_make(std::move(num), e2, e3);
}

bool sixadic_is_zero(const SixAdic& a) { return a.num == 0; }

bool sixadic_is_integer(const SixAdic& a) { return a.e2 == 0 && a.e3 == 0; }

Int sixadic_clear_denominator(const SixAdic& a) {
    std::int64_t n = std::max(a.e2, a.e3);
    return a.num * (Int(1) << (n - a.e2)) * pow3(n - a.e3);
}

std::string to_string(const SixAdic& a) {
    return a.num.str() + "/2^" + std::to_string(a.e2) + "\xc2\xb7" + "3^" + std::to_string(a.e3);
}

SixAdic parse_sixadic(const std::string& text) {
    auto s = trim(text);
    auto slash = s.find('/');
    if (slash == std::string::npos) return sixadic_make(parse_int(s), 0, 0);
    Int num = parse_int(trim(s.substr(0, slash)));
    auto den = trim(s.substr(slash + 1));
    if (den.rfind("2^", 0) != 0) throw ParseError("expected 2^e2 in '" + text + "'");
    auto sep = den.find("\xc2\xb7");
    std::size_t seplen = 2;
    if (sep == std::string::npos) { sep = den.find('*'); seplen = 1; }
    if (sep == std::string::npos) throw ParseError("expected 2^e2·3^e3 in '" + text + "'");
    std::int64_t e2 = parse_i64(trim(den.substr(2, sep - 2)));
    auto rest = trim(den.substr(sep + seplen));
    if (rest.rfind("3^", 0) != 0) throw ParseError("expected 3^e3 in '" + text + "'");
    std::int64_t e3 = parse_i64(trim(rest.substr(2)));
    if (e2 < 0 || e3 < 0) throw ParseError("denominator exponents must be nonnegative");
    return sixadic_make(std::move(num), e2, e3);
}

// ------------------------------------------------------------------- weights

RationalWeight rational_weight(Int num, Int den) {
    if (den == 0) throw std::invalid_argument("weight denominator must be nonzero");
    if (den < 0) { den = -den; num = -num; }
    if (num < 0 || num > den) throw std::invalid_argument("weight must lie in [0, 1]");
    Int g = mp::gcd(num, den);
    if (g > 1) { num /= g; den /= g; }
    return RationalWeight{std::move(num), std::move(den)};
}

RationalWeight unit_fraction(const Int& k) {
    if (k <= 0) throw std::invalid_argument("unit fraction needs a positive denominator");
    return RationalWeight{1, k};
}

RationalWeight weight_add(const RationalWeight& a, const RationalWeight& b) {
    return rational_weight(a.num * b.den + b.num * a.den, a.den * b.den);
}

RationalWeight weight_mul(const RationalWeight& a, const RationalWeight& b) {
    return rational_weight(a.num * b.num, a.den * b.den);
}

bool weight_is_zero(const RationalWeight& w) { return w.num == 0; }

bool weight_is_one(const RationalWeight& w) { return w.num == w.den; }

double to_double(const RationalWeight& w) {
    return boost::multiprecision::cpp_rational(w.num, w.den).convert_to<double>();
}

std::string to_string(const RationalWeight& w) {
    return w.num.str() + "/" + w.den.str();
}

RationalWeight parse_weight(const std::string& text) {
    auto s = trim(text);
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return rational_weight(parse_int(s), 1);
        return rational_weight(parse_int(trim(s.substr(0, slash))),
                               parse_int(trim(s.substr(slash + 1))));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("bad weight '") + text + "': " + e.what());
    }
}

} // namespace times23
