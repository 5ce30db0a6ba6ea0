#pragma once

#include <stdexcept>

namespace entdj {

// A function (or family) does not satisfy the constant-or-balanced promise.
struct PromiseViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed noise configuration, or a noise model that does not cover the
// circuit it is applied to.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A decisive outcome probability landed strictly between the zero and one
// thresholds. The algorithms are deterministic under the promise, so this
// indicates a bug or an undetected promise violation.
struct ConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace entdj
