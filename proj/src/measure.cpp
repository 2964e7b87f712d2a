#include "times23/measure.hpp"
#include "times23/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace times23 {

namespace {

bool atom_angle_less(const Atom& x, const Atom& y) { return angle_less(x.point, y.point); }

void validate_multipliers(int a, int b) {
    if (a < 2 || b < 2 || std::gcd(a, b) != 1)
        throw std::invalid_argument("multipliers must be >= 2 and coprime");
}

RationalWeight total_mass(const std::vector<Atom>& atoms) {
    RationalWeight sum = rational_weight(0, 1);
    for (const auto& at : atoms) sum = weight_add(sum, at.weight); // throws if a prefix exceeds 1
    return sum;
}

} // namespace

Measure Measure::lebesgue() { return Measure(MeasureVariant::Lebesgue, {}); }

Measure Measure::atomic(std::vector<Atom> atoms) {
    if (atoms.empty()) throw std::invalid_argument("atomic measure needs at least one atom");
    std::sort(atoms.begin(), atoms.end(), atom_angle_less);
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (weight_is_zero(atoms[i].weight))
            throw std::invalid_argument("atom weights must be strictly positive");
        if (i > 0 && atoms[i].point == atoms[i - 1].point)
            throw std::invalid_argument("atom points must be pairwise distinct");
    }
    if (!weight_is_one(total_mass(atoms)))
        throw std::invalid_argument("atom weights must sum to exactly 1");
    return Measure(MeasureVariant::Atomic, std::move(atoms));
}

Measure Measure::dirac(const CyclotomicPoint& point) {
    return atomic({Atom{cyclotomic_normalize(point.m, point.r), rational_weight(1, 1)}});
}

Measure Measure::from_atoms_merging(std::vector<Atom> atoms) {
    std::sort(atoms.begin(), atoms.end(), atom_angle_less);
    std::vector<Atom> merged;
    for (auto& at : atoms) {
        if (weight_is_zero(at.weight)) continue;
        if (!merged.empty() && merged.back().point == at.point)
            merged.back().weight = weight_add(merged.back().weight, at.weight);
        else
            merged.push_back(std::move(at));
    }
    if (merged.empty() || !weight_is_one(total_mass(merged)))
        throw std::invalid_argument("merged atoms must carry total mass exactly 1");
    return Measure(MeasureVariant::Atomic, std::move(merged));
}

Measure Measure::mix(const std::vector<std::pair<RationalWeight, Measure>>& parts) {
    std::vector<Atom> pool;
    for (const auto& [w, part] : parts) {
        if (weight_is_zero(w)) continue;
        if (!part.is_atomic())
            throw UnsupportedVariantError("mix supports atomic components only");
        for (const auto& at : part.atoms())
            pool.push_back(Atom{at.point, weight_mul(w, at.weight)});
    }
    if (pool.empty()) throw std::invalid_argument("mix needs positive total weight");
    return from_atoms_merging(std::move(pool));
}

std::vector<CyclotomicPoint> orbit(const CyclotomicPoint& seed, int a, int b) {
    validate_multipliers(a, b);
    CyclotomicPoint start = cyclotomic_normalize(seed.m, seed.r);
    std::set<std::pair<std::int64_t, std::int64_t>> seen{{start.r, start.m}};
    std::vector<CyclotomicPoint> stack{start}, out;
    while (!stack.empty()) {
        CyclotomicPoint x = stack.back();
        stack.pop_back();
        out.push_back(x);
        for (int n : {a, b}) {
            CyclotomicPoint y = cyclotomic_power(x, n);
            if (seen.insert({y.r, y.m}).second) stack.push_back(y);
        }
    }
    std::sort(out.begin(), out.end(), angle_less);
    return out;
}

Measure uniform_orbit_measure(const CyclotomicPoint& seed, int a, int b) {
    auto points = orbit(seed, a, b);
    RationalWeight w = unit_fraction(Int(points.size()));
    std::vector<Atom> atoms;
    atoms.reserve(points.size());
    for (const auto& p : points) atoms.push_back(Atom{p, w});
    return Measure::atomic(std::move(atoms));
}

Measure pushforward_power(const Measure& mu, std::int64_t n) {
    if (n < 1) throw std::invalid_argument("pushforward exponent must be >= 1");
    if (!mu.is_atomic()) return Measure::lebesgue(); // rotation-invariance survives x -> x^n
    std::vector<Atom> images;
    images.reserve(mu.atoms().size());
    for (const auto& at : mu.atoms())
        images.push_back(Atom{cyclotomic_power(at.point, n), at.weight});
    return Measure::from_atoms_merging(std::move(images));
}

bool is_times_n_invariant(const Measure& mu, std::int64_t n) {
    return pushforward_power(mu, n) == mu;
}

std::vector<ErgodicComponent> ergodic_decompose(const Measure& mu, int a, int b) {
    validate_multipliers(a, b);
    if (!mu.is_atomic())
        throw UnsupportedVariantError("ergodic decomposition is implemented for atomic measures");
    if (!is_times_n_invariant(mu, a) || !is_times_n_invariant(mu, b))
        throw NotInvariantError("measure is not invariant under the multiplication pair");

    const auto& atoms = mu.atoms();
    std::vector<bool> used(atoms.size(), false);
    auto locate = [&](const CyclotomicPoint& p) {
        auto it = std::lower_bound(atoms.begin(), atoms.end(), p, [](const Atom& at, const CyclotomicPoint& q) {
            return angle_less(at.point, q);
        });
        return static_cast<std::size_t>(it - atoms.begin());
    };

    std::vector<ErgodicComponent> out;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (used[i]) continue;
        auto pts = orbit(atoms[i].point, a, b);
        // Invariance forces the support to be orbit-closed with one weight per
        // orbit, so every orbit point indexes an atom of the same weight.
        std::vector<Atom> comp;
        comp.reserve(pts.size());
        RationalWeight each = unit_fraction(Int(pts.size()));
        for (const auto& p : pts) {
            std::size_t idx = locate(p);
            used[idx] = true;
            comp.push_back(Atom{p, each});
        }
        RationalWeight mass = rational_weight(atoms[i].weight.num * Int(pts.size()), atoms[i].weight.den);
        out.push_back(ErgodicComponent{Measure::atomic(std::move(comp)), mass});
    }
    return out; // atoms are angle-sorted, so components appear by smallest atom angle
}

bool is_ergodic(const Measure& mu, int a, int b) {
    return ergodic_decompose(mu, a, b).size() == 1;
}

std::int64_t maxr(const Measure& mu) {
    if (!mu.is_atomic())
        throw UnsupportedVariantError("maxr is defined for atomic measures");
    std::int64_t best = 1;
    for (const auto& at : mu.atoms()) best = std::max(best, at.point.r);
    return best;
}

Int clearing_modulus(const Measure& mu) {
    if (!mu.is_atomic())
        throw UnsupportedVariantError("clearing modulus is defined for atomic measures");
    Int acc = 1;
    for (const auto& at : mu.atoms()) acc = boost::multiprecision::lcm(acc, Int(at.point.r));
    return acc;
}

MaxrBoundsReport check_maxr_bounds(const Measure& mu, int a, int b) {
    validate_multipliers(a, b);
    if (!mu.is_atomic())
        throw UnsupportedVariantError("maxr bounds apply to atomic measures");
    if (!is_times_n_invariant(mu, a) || !is_times_n_invariant(mu, b))
        throw NotInvariantError("maxr bounds require an invariant measure");
    if (orbit(mu.atoms().front().point, a, b).size() != mu.atoms().size())
        throw NotErgodicError("maxr bounds require an ergodic measure");

    MaxrBoundsReport rep;
    rep.support_size = mu.support_size();
    rep.max_root_order = maxr(mu);
    rep.lower_ok = rep.support_size <= rep.max_root_order;
    // (ab)^25 >= 6^25 > 2^63 > any int64 maxr, so large supports pass outright.
    if (rep.support_size >= 25) {
        rep.upper_ok = true;
    } else {
        Int bound = boost::multiprecision::pow(Int(a) * b, static_cast<unsigned>(rep.support_size));
        rep.upper_ok = Int(rep.max_root_order) <= bound;
    }
    return rep;
}

nlohmann::ordered_json measure_to_json(const Measure& mu) {
    nlohmann::ordered_json j;
    if (!mu.is_atomic()) {
        j["variant"] = "lebesgue";
        return j;
    }
    j["variant"] = "atomic";
    auto& arr = j["atoms"] = nlohmann::ordered_json::array();
    for (const auto& at : mu.atoms())
        arr.push_back({to_string(at.point), to_string(at.weight)});
    return j;
}

Measure measure_from_json(const nlohmann::json& j) {
    try {
        const auto variant = j.at("variant").get<std::string>();
        if (variant == "lebesgue") return Measure::lebesgue();
        if (variant != "atomic") throw ParseError("unknown measure variant '" + variant + "'");
        std::vector<Atom> atoms;
        for (const auto& entry : j.at("atoms")) {
            atoms.push_back(Atom{parse_cyclotomic(entry.at(0).get<std::string>()),
                                 parse_weight(entry.at(1).get<std::string>())});
        }
        return Measure::atomic(std::move(atoms));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad measure JSON: ") + e.what());
    }
}

} // namespace times23
