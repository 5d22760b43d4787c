#pragma once

#include <stdexcept>
#include <string>

namespace windwave {

/// Bad or inconsistent user input (config file, flags). CLI exit code 4.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A prescribed-quantity or bifurcation condition is violated; the requested
/// object does not exist for this configuration. CLI exit code 2.
struct InfeasibleError : std::runtime_error {
    explicit InfeasibleError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A solver failed: non-convergence, stagnation, eigensolver breakdown.
/// CLI exit code 3.
struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace windwave
