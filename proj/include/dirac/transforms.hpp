// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <functional>
#include <vector>

#include "dirac/bc.hpp"
#include "dirac/function.hpp"
#include "dirac/potential.hpp"
#include "dirac/quadrature.hpp"

namespace dirac {

using Matrix2Fn = std::array<std::array<ScalarFn, 2>, 2>;

/// (1/rho) [ i diag(1,-1) y' + T y ] on [x1, x2] with bc in normal form.
struct WeightedProblem {
    double x1 = 0.0, x2 = kPi;
    std::function<double(double)> rho = [](double) { return 1.0; };
    Matrix2Fn T;
    BoundaryCondition bc;
    std::vector<double> breakpoints;  // jumps of rho or T inside (x1, x2)
};

/// t(x) = K int_{x1}^x rho, K = pi / int rho, and its inverse.
class VariableMap {
public:
    VariableMap() = default;
    VariableMap(std::function<double(double)> rho, double x1, double x2,
                const std::vector<double>& breakpoints, int nodes = kDefaultNodes);

    double K() const { return K_; }
    double x1() const { return x1_; }
    double x2() const { return x2_; }
    double t_of_x(double x) const;
    double x_of_t(double t) const;

private:
    std::function<double(double)> rho_;
    CumulativeIntegral cum_;
    double K_ = 1.0, x1_ = 0.0, x2_ = kPi;
    std::vector<double> xs_, ts_;  // monotone table for bracketing
};

/// Canonical problem L_bc(S) on [0, pi].
struct CanonicalProblem {
    VariableMap map;
    Matrix2Fn S;
    std::vector<double> breakpoints;  // in t
    BoundaryCondition bc;
};

/// Throws ConfigError on a nonpositive rho sample.
CanonicalProblem change_of_variable(const WeightedProblem& prob, int nodes = kDefaultNodes);

/// Gauge diag(e^{-i s1}, e^{i s2}) data removing the diagonal of S.
struct GaugeData {
    CumulativeIntegral s1, s2;
    cplx s1_pi{}, s2_pi{};
    PotentialSpec v;
    BoundaryCondition bc_raw, bc_tilde;
    BcClassification class_raw, class_tilde;

    /// Gauged function A u at t.
    Value2 forward(double t, Value2 u) const;
    Value2 inverse(double t, Value2 u) const;
};

GaugeData gauge_reduce(const Matrix2Fn& S, const BoundaryCondition& bc,
                       const std::vector<double>& breakpoints = {}, int panels = 256);

/// Standard form of the adjoint boundary conditions. Throws NumericalError if not regular.
BoundaryCondition adjoint_bc(const BoundaryCondition& bc);

/// Adjoint-invariance of bc to tol and T = T^* on `samples` points of [x1, x2].
bool is_selfadjoint(const BoundaryCondition& bc, const Matrix2Fn& T, double x1, double x2,
                    double tol = 1e-10, int samples = 257);

struct EndpointLimits {
    Value2 at_x1{};
    Value2 at_x2{};
};

/// Direct endpoint formulas from sides (f1(x1+0), f1(x2-0), f2(x1+0), f2(x2-0)).
EndpointLimits endpoint_limits_general(const BoundaryCondition& bc, const Eigen::Vector4cd& sides);

/// Same limits through the gauge: transition matrix of the transformed bc, conjugated back.
EndpointLimits endpoint_limits_conjugated(const BoundaryCondition& bc, cplx s1_pi, cplx s2_pi,
                                          const Eigen::Vector4cd& sides);

/// (s1(pi), s2(pi)) = (int T11, int T22) over [x1, x2].
std::pair<cplx, cplx> gauge_phases(const WeightedProblem& prob, int nodes = kDefaultNodes);

/// Spectrum of the weighted problem through reduction and Galerkin truncation (K * eigenvalues).
std::vector<cplx> weighted_spectrum(const WeightedProblem& prob, int M, int nodes = kDefaultNodes);

}  // namespace dirac
