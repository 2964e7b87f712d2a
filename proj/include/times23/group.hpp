#pragma once

// The Furstenberg group Z^2 acting on Z[1/6] by multiplication by 2 and 3:
// exact element arithmetic, characters (normalized conjugation-invariant
// positive definite functions), finite-index lattice induction, and the
// conditional-dimension interval of a measure character.

#include "times23/exact.hpp"
#include "times23/harmonic.hpp"
#include "times23/measure.hpp"

#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace times23 {

// (j, k; p) with product (j,k;p)(l,m;q) = (j+l, k+m; p + 2^j 3^k q).
struct GroupElement {
    std::int64_t j = 0;
    std::int64_t k = 0;
    SixAdic p;

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

GroupElement gmul(const GroupElement& a, const GroupElement& b);
GroupElement ginv(const GroupElement& a);

std::string to_string(const GroupElement& g); // "(j,k; num/2^e2·3^e3)"
GroupElement parse_group_element(const std::string& text);

// Finite-index subgroup of Z^2 stored as a Hermite-form basis
// (d1, e), (0, d2) with d1, d2 >= 1 and 0 <= e < d2; unique per subgroup.
class Lattice {
public:
    static Lattice full();                                     // Z^2 itself
    static Lattice diagonal(std::int64_t d1, std::int64_t d2); // d1 Z x d2 Z
    static Lattice from_basis(std::int64_t a, std::int64_t b,
                              std::int64_t c, std::int64_t d); // rows (a,b),(c,d)

    std::int64_t d1() const { return d1_; }
    std::int64_t e() const { return e_; }
    std::int64_t d2() const { return d2_; }
    std::int64_t index() const { return d1_ * d2_; }

    bool contains(std::int64_t j, std::int64_t k) const;

    // canonical coset representatives (i, jj; 0), 0 <= i < d1, 0 <= jj < d2;
    // the alternate transversal shifts every representative by the basis
    // vector (d1, e), staying in the same cosets
    std::vector<GroupElement> transversal() const;
    std::vector<GroupElement> shifted_transversal() const;

private:
    Lattice(std::int64_t d1, std::int64_t e, std::int64_t d2);
    std::int64_t d1_ = 1, e_ = 0, d2_ = 1;
};

// Characters are evaluation rules; the group is infinite and only finite
// probe sets are ever materialized.
class Character {
public:
    using Rule = std::function<std::complex<double>(const GroupElement&)>;

    // chi^mu: mu-hat at the cleared fiber value on (0,0;p), zero elsewhere.
    // Checks x(2,3)-invariance once (the extension through denominators is
    // well defined only then).
    static Character from_measure(const Measure& mu);

    // Same rule without the invariance check; for audits that need a broken
    // functional on purpose.
    static Character from_measure_unchecked(const Measure& mu);

    static Character regular(); // the identity indicator Delta

    // inner(g) on lattice cosets, 0 off them.
    static Character trivial_extension(const Lattice& lattice, Character inner);

    // Average of the trivial extension over conjugation by the canonical
    // transversal.  verify recomputes with the shifted transversal and
    // throws TransversalDependenceError when the two differ by > 1e-12.
    static Character induced(const Lattice& lattice, Character inner, bool verify = true);

    static Character from_rule(Rule rule);

    std::complex<double> operator()(const GroupElement& g) const { return rule_(g); }

private:
    explicit Character(Rule rule) : rule_(std::move(rule)) {}
    Rule rule_;
};

std::complex<double> chi_of_measure_eval(const Measure& mu, const GroupElement& g);
int delta_eval(const GroupElement& g);

std::complex<double> trivial_extension_eval(const Lattice& lattice, const Character& inner,
                                            const GroupElement& g);
std::complex<double> induce_character_eval(const Lattice& lattice, const Character& inner,
                                           const GroupElement& g);

// Smallest eigenvalue of the Hermitian matrix G[a,b] = chi(F[b]^{-1} F[a]);
// >= -tol certifies positive-definiteness on F.
double gram_min_eigenvalue(const Character& chi, const std::vector<GroupElement>& F);

// true iff |chi(h^{-1} g h) - chi(g)| <= tol for every supplied pair (g, h).
bool conjugation_invariance_check(const Character& chi,
                                  const std::vector<std::pair<GroupElement, GroupElement>>& pairs,
                                  double tol);

// Interval for the conditional dimension of chi^mu: [ |supp|,
// min(6^|supp|, clearing modulus) ].  The clearing modulus R works as the
// upper bound because mu-hat(R l) = 1 for every l; it equals maxr exactly
// when all atoms share the maximal denominator (every ergodic case).
std::pair<Int, Int> cndm_bounds(const Measure& mu);

// Probes chi on (j,k;q), 0 < max(|j|,|k|) <= window, q over the fixed set
// {0, +-1, +-2, +-3, +-1/2, +-1/3, +-1/6}; true iff all moduli <= tol.
bool recoverability_check(const Character& chi, int window, double tol);

} // namespace times23
