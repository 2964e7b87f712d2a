#pragma once

// Probability measures on the circle for the multiplication dynamics
// x -> x^a, x -> x^b (defaults a = 2, b = 3): either Lebesgue or a finite
// atomic measure supported on roots of unity with exact rational weights.

#include "times23/exact.hpp"

#include "json.hpp"

#include <cstdint>
#include <vector>

namespace times23 {

enum class MeasureVariant { Lebesgue, Atomic };

struct Atom {
    CyclotomicPoint point;
    RationalWeight weight;

    friend bool operator==(const Atom&, const Atom&) = default;
};

class Measure {
public:
    static Measure lebesgue();

    // Validates: weights strictly positive, points pairwise distinct, total
    // mass exactly 1.  Atoms are stored sorted by angle.
    static Measure atomic(std::vector<Atom> atoms);

    static Measure dirac(const CyclotomicPoint& point);

    // Convex combination of atomic measures with exact weights summing to 1.
    // Coinciding atoms merge.
    static Measure mix(const std::vector<std::pair<RationalWeight, Measure>>& parts);

    MeasureVariant variant() const { return variant_; }
    bool is_atomic() const { return variant_ == MeasureVariant::Atomic; }
    const std::vector<Atom>& atoms() const { return atoms_; }
    std::int64_t support_size() const { return static_cast<std::int64_t>(atoms_.size()); }

    friend bool operator==(const Measure&, const Measure&) = default;

    // Sorts and merges coinciding points; used by pushforward and mix where
    // collisions are legitimate.
    static Measure from_atoms_merging(std::vector<Atom> atoms);

private:
    Measure(MeasureVariant v, std::vector<Atom> atoms) : variant_(v), atoms_(std::move(atoms)) {}

    MeasureVariant variant_;
    std::vector<Atom> atoms_;
};

// Forward orbit of a root of unity under x -> x^a, x -> x^b, sorted by angle.
std::vector<CyclotomicPoint> orbit(const CyclotomicPoint& seed, int a = 2, int b = 3);

// Equal weights 1/|orbit| on every orbit point.  The result is invariant
// exactly when the seed denominator is coprime to a*b; seeds sharing a factor
// with a*b still yield the uniform measure, which then fails invariance.
Measure uniform_orbit_measure(const CyclotomicPoint& seed, int a = 2, int b = 3);

// Image of mu under x -> x^n; coinciding images merge.  Requires n >= 1.
Measure pushforward_power(const Measure& mu, std::int64_t n);

// Exact test: pushforward under x -> x^n equals mu.
bool is_times_n_invariant(const Measure& mu, std::int64_t n);

struct ErgodicComponent {
    Measure component;
    RationalWeight weight;
};

// Splits an invariant atomic measure into uniform orbit measures, ordered by
// the smallest atom angle of each component.
std::vector<ErgodicComponent> ergodic_decompose(const Measure& mu, int a = 2, int b = 3);

bool is_ergodic(const Measure& mu, int a = 2, int b = 3);

// Largest d such that the support contains a primitive d-th root of unity;
// atoms are reduced fractions, so this is the largest atom denominator.
std::int64_t maxr(const Measure& mu);

// Least R with x^R = 1 for every support point (lcm of atom denominators).
Int clearing_modulus(const Measure& mu);

struct MaxrBoundsReport {
    std::int64_t support_size = 0;
    std::int64_t max_root_order = 0;
    bool lower_ok = false; // |supp| <= maxr
    bool upper_ok = false; // maxr <= (a*b)^{|supp|}
};

// Requires an ergodic invariant atomic measure.
MaxrBoundsReport check_maxr_bounds(const Measure& mu, int a = 2, int b = 3);

nlohmann::ordered_json measure_to_json(const Measure& mu);
Measure measure_from_json(const nlohmann::json& j);

} // namespace times23
