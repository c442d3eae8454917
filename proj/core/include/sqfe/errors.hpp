#pragma once

#include <stdexcept>
#include <string>

namespace sqfe {

/// Numeric iteration failed to reach its tolerance (root finder, quadrature).
class convergence_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal consistency check failed; indicates a bug, not bad input.
class invariant_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace sqfe
