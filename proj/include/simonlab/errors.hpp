#pragma once

#include <stdexcept>
#include <string>

namespace simonlab {

// Width mismatches, bad indices, violated preconditions.
struct ContractError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Malformed or inconsistent input data (manifests, CSV, impossible requests).
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Iterative solver failed to reach its tolerance.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace simonlab
