#pragma once

#include <stdexcept>
#include <string>

namespace tlfnoise {

// Thrown by parameter records and factory functions on invalid input
// (non-finite values, violated sign constraints, coupling out of range).
class InvalidParameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Dense eigensolver did not converge; distinct from parameter errors so
// callers may perturb inputs and retry.
class EigensolverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Slope-window detection found no usable plateau in a sampled curve.
class WindowDetectionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace tlfnoise
