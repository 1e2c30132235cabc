// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace dirac {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr cplx kI{0.0, 1.0};

/// Two-component value of a vector function at a point.
using Value2 = std::array<cplx, 2>;

/// Failure category; the CLI maps these onto its exit codes.
enum class ErrorKind { Config = 1, Numerical = 2, Property = 3 };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& w) : Error(ErrorKind::Config, w) {}
};
struct NumericalError : Error {
    explicit NumericalError(const std::string& w) : Error(ErrorKind::Numerical, w) {}
};
struct PropertyViolation : Error {
    explicit PropertyViolation(const std::string& w) : Error(ErrorKind::Property, w) {}
};

/// Index of an even frequency k in a table covering -K..K in steps of 2.
inline int even_index(int k, int K) { return (k + K) / 2; }

}  // namespace dirac
