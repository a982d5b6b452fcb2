#pragma once

#include <stdexcept>
#include <string>

namespace torspect {

// Shape mismatch between matrix/vector operands.
struct DimensionError : std::invalid_argument {
    explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed or out-of-contract input (inhomogeneous generators, bad ranges, ...).
struct InputError : std::invalid_argument {
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// Contraction of a form by an element of larger degree.
struct DegreeError : std::invalid_argument {
    explicit DegreeError(const std::string& what) : std::invalid_argument(what) {}
};

// A randomized construction exhausted its retry budget.
struct GenericityError : std::runtime_error {
    GenericityError(const std::string& what, int attempts)
        : std::runtime_error(what + " (after " + std::to_string(attempts) + " attempts)"),
          attempts(attempts)
    {
    }
    int attempts;
};

}  // namespace torspect
