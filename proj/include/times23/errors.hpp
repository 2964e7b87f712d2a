#pragma once

#include <stdexcept>

namespace times23 {

// A measure operation required x(2,3)-invariance and the input is not invariant.
struct NotInvariantError : std::domain_error {
    using std::domain_error::domain_error;
};

// A bound or decomposition step required ergodicity and the input splits.
struct NotErgodicError : std::domain_error {
    using std::domain_error::domain_error;
};

// Operation is undefined for this measure variant (e.g. maxr of Lebesgue).
struct UnsupportedVariantError : std::domain_error {
    using std::domain_error::domain_error;
};

// Coefficient window fails its normalization invariant (value 1 at index 0).
struct InvalidWindowError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Contour / circle quadrature was asked to run with too few nodes.
struct InsufficientNodesError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The geometric tail bound needs |a(l)| <= 4 and a coefficient violates it.
struct BoundInapplicableError : std::domain_error {
    using std::domain_error::domain_error;
};

// Induced-character value changed when the coset transversal was swapped.
struct TransversalDependenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Textual input (serialized value or measure spec) failed to parse.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace times23
