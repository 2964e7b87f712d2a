#include "times23/group.hpp"
#include "times23/errors.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace times23 {

GroupElement gmul(const GroupElement& a, const GroupElement& b) {
    return {a.j + b.j, a.k + b.k, sixadic_add(a.p, sixadic_scale23(b.p, a.j, a.k))};
}

GroupElement ginv(const GroupElement& a) {
    return {-a.j, -a.k, sixadic_scale23(sixadic_neg(a.p), -a.j, -a.k)};
}

std::string to_string(const GroupElement& g) {
    return "(" + std::to_string(g.j) + "," + std::to_string(g.k) + "; " + to_string(g.p) + ")";
}

GroupElement parse_group_element(const std::string& text) {
    if (text.size() < 2 || text.front() != '(' || text.back() != ')')
        throw ParseError("group element must look like '(j,k; p)': '" + text + "'");
    const std::string body = text.substr(1, text.size() - 2);
    const auto comma = body.find(',');
    const auto semi = body.find(';');
    if (comma == std::string::npos || semi == std::string::npos || semi < comma)
        throw ParseError("group element must look like '(j,k; p)': '" + text + "'");
    GroupElement g;
    try {
        g.j = std::stoll(body.substr(0, comma));
        g.k = std::stoll(body.substr(comma + 1, semi - comma - 1));
    } catch (const std::exception&) {
        throw ParseError("bad integer coordinates in group element: '" + text + "'");
    }
    g.p = parse_sixadic(body.substr(semi + 1));
    return g;
}

Lattice::Lattice(std::int64_t d1, std::int64_t e, std::int64_t d2) : d1_(d1), e_(e), d2_(d2) {}

Lattice Lattice::full() { return diagonal(1, 1); }

Lattice Lattice::diagonal(std::int64_t d1, std::int64_t d2) {
    if (d1 < 1 || d2 < 1) throw std::invalid_argument("lattice diagonal entries must be >= 1");
    return Lattice(d1, 0, d2);
}

Lattice Lattice::from_basis(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    const __int128 det = static_cast<__int128>(a) * d - static_cast<__int128>(b) * c;
    if (det == 0) throw std::invalid_argument("lattice basis must be nonsingular");
    // unimodular row reduction to Hermite form (d1, e), (0, d2):
    // extended gcd gives x0 a + y0 c = d1, the new first row is that
    // combination of the input rows
    std::int64_t x0 = 1, y0 = 0, x1 = 0, y1 = 1, r0 = a, r1 = c;
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        r0 -= q * r1; std::swap(r0, r1);
        x0 -= q * x1; std::swap(x0, x1);
        y0 -= q * y1; std::swap(y0, y1);
    }
    if (r0 < 0) { r0 = -r0; x0 = -x0; y0 = -y0; }
    const std::int64_t d1 = r0;
    std::int64_t e = x0 * b + y0 * d;
    auto d2 = static_cast<std::int64_t>(det / d1);
    if (d2 < 0) d2 = -d2;
    e %= d2;
    if (e < 0) e += d2;
    return Lattice(d1, e, d2);
}

bool Lattice::contains(std::int64_t j, std::int64_t k) const {
    if (j % d1_ != 0) return false;
    const std::int64_t s = j / d1_;
    return (k - s * e_) % d2_ == 0;
}

std::vector<GroupElement> Lattice::transversal() const {
    std::vector<GroupElement> t;
    t.reserve(static_cast<std::size_t>(index()));
    for (std::int64_t i = 0; i < d1_; ++i)
        for (std::int64_t jj = 0; jj < d2_; ++jj) t.push_back({i, jj, {}});
    return t;
}

std::vector<GroupElement> Lattice::shifted_transversal() const {
    std::vector<GroupElement> t;
    t.reserve(static_cast<std::size_t>(index()));
    for (std::int64_t i = 0; i < d1_; ++i)
        for (std::int64_t jj = 0; jj < d2_; ++jj) t.push_back({i + d1_, jj + e_, {}});
    return t;
}

namespace {

Character::Rule measure_rule(Measure mu) {
    return [mu = std::move(mu)](const GroupElement& g) -> std::complex<double> {
        if (g.j != 0 || g.k != 0) return 0.0;
        return fourier_coefficient(mu, sixadic_clear_denominator(g.p));
    };
}

} // namespace

Character Character::from_measure(const Measure& mu) {
    if (!is_times_n_invariant(mu, 2) || !is_times_n_invariant(mu, 3))
        throw NotInvariantError("measure characters need an x(2,3)-invariant measure");
    return Character(measure_rule(mu));
}

Character Character::from_measure_unchecked(const Measure& mu) {
    return Character(measure_rule(mu));
}

Character Character::regular() {
    return Character([](const GroupElement& g) -> std::complex<double> {
        return delta_eval(g) ? 1.0 : 0.0;
    });
}

Character Character::trivial_extension(const Lattice& lattice, Character inner) {
    return Character([lattice, inner = std::move(inner)](const GroupElement& g) -> std::complex<double> {
        return lattice.contains(g.j, g.k) ? inner(g) : 0.0;
    });
}

Character Character::induced(const Lattice& lattice, Character inner, bool verify) {
    auto ext = trivial_extension(lattice, std::move(inner));
    auto average = [ext](const std::vector<GroupElement>& reps, const GroupElement& g) {
        std::complex<double> acc = 0.0;
        for (const auto& t : reps) acc += ext(gmul(gmul(t, g), ginv(t)));
        return acc / static_cast<double>(reps.size());
    };
    auto canonical = lattice.transversal();
    auto shifted = lattice.shifted_transversal();
    return Character([average, verify, canonical = std::move(canonical),
                      shifted = std::move(shifted)](const GroupElement& g) -> std::complex<double> {
        auto value = average(canonical, g);
        if (verify) {
            auto check = average(shifted, g);
            if (std::abs(value - check) > 1e-12)
                throw TransversalDependenceError("induced value changed with the coset transversal at " +
                                                 to_string(g));
        }
        return value;
    });
}

Character Character::from_rule(Rule rule) { return Character(std::move(rule)); }

std::complex<double> chi_of_measure_eval(const Measure& mu, const GroupElement& g) {
    return Character::from_measure(mu)(g);
}

int delta_eval(const GroupElement& g) {
    return g == GroupElement{} ? 1 : 0;
}

std::complex<double> trivial_extension_eval(const Lattice& lattice, const Character& inner,
                                            const GroupElement& g) {
    return Character::trivial_extension(lattice, inner)(g);
}

std::complex<double> induce_character_eval(const Lattice& lattice, const Character& inner,
                                           const GroupElement& g) {
    return Character::induced(lattice, inner)(g);
}

double gram_min_eigenvalue(const Character& chi, const std::vector<GroupElement>& F) {
    if (F.empty()) throw std::invalid_argument("gram matrix needs a nonempty element set");
    for (std::size_t a = 0; a < F.size(); ++a)
        for (std::size_t b = a + 1; b < F.size(); ++b)
            if (F[a] == F[b]) throw std::invalid_argument("gram element set has a duplicate");
    const auto n = static_cast<Eigen::Index>(F.size());
    Eigen::MatrixXcd G(n, n);
    for (Eigen::Index a = 0; a < n; ++a)
        for (Eigen::Index b = 0; b < n; ++b)
            G(a, b) = chi(gmul(ginv(F[static_cast<std::size_t>(b)]), F[static_cast<std::size_t>(a)]));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(G, Eigen::EigenvaluesOnly);
    return es.eigenvalues()(0);
}

bool conjugation_invariance_check(const Character& chi,
                                  const std::vector<std::pair<GroupElement, GroupElement>>& pairs,
                                  double tol) {
    if (tol <= 0.0) throw std::invalid_argument("tolerance must be positive");
    for (const auto& [g, h] : pairs) {
        const auto conj = gmul(gmul(ginv(h), g), h);
        if (std::abs(chi(conj) - chi(g)) > tol) return false;
    }
    return true;
}

std::pair<Int, Int> cndm_bounds(const Measure& mu) {
    if (!mu.is_atomic())
        throw UnsupportedVariantError("conditional dimension of the Lebesgue character is infinite");
    if (!is_times_n_invariant(mu, 2) || !is_times_n_invariant(mu, 3))
        throw NotInvariantError("conditional-dimension bounds need an invariant measure");
    const Int lower = mu.support_size();
    Int upper = boost::multiprecision::pow(Int(6), static_cast<unsigned>(mu.support_size()));
    const Int period = clearing_modulus(mu);
    if (period < upper) upper = period;
    return {lower, upper};
}

bool recoverability_check(const Character& chi, int window, double tol) {
    if (window < 1 || tol <= 0.0) throw std::invalid_argument("need window >= 1 and tol > 0");
    std::vector<SixAdic> probes = {SixAdic{}};
    for (int n = 1; n <= 3; ++n) {
        probes.push_back(sixadic_make(Int(n), 0, 0));
        probes.push_back(sixadic_make(Int(-n), 0, 0));
    }
    for (auto [e2, e3] : {std::pair{1, 0}, {0, 1}, {1, 1}}) {
        probes.push_back(sixadic_make(Int(1), e2, e3));
        probes.push_back(sixadic_make(Int(-1), e2, e3));
    }
    for (std::int64_t j = -window; j <= window; ++j)
        for (std::int64_t k = -window; k <= window; ++k) {
            if (j == 0 && k == 0) continue;
            for (const auto& q : probes)
                if (std::abs(chi({j, k, q})) > tol) return false;
        }
    return true;
}

} // namespace times23
