#pragma once

#include <stdexcept>

namespace chvar {

// Shape violations: mismatched variable lists, bindings for absent
// variables, malformed exponent data.
struct structural_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A computed value violated an identity the theory guarantees
// (non-integral coefficient, failed divisibility, wrong degree).
// Always a bug signal, never a user error.
struct consistency_error : std::logic_error {
    using std::logic_error::logic_error;
};

// Requested brute-force enumeration beyond the documented caps.
struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace chvar
