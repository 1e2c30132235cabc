// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string_view>
#include <utility>

#include <Eigen/Dense>

#include "dirac/common.hpp"

namespace dirac {

/// Boundary conditions in normal form:
///   y1(0) + b y1(pi) + a y2(0) = 0,
///   d y1(pi) + c y2(0) + y2(pi) = 0.
struct BoundaryCondition {
    cplx a{}, b{}, c{}, d{};

    cplx det() const { return b * c - a * d; }
    cplx discriminant() const { return (b - c) * (b - c) + 4.0 * a * d; }
    /// max(1, |a|, |b|, |c|, |d|)^2, the scale for zero tests.
    double scale() const;

    static BoundaryCondition periodic() { return {0.0, -1.0, -1.0, 0.0}; }
    static BoundaryCondition antiperiodic() { return {0.0, 1.0, 1.0, 0.0}; }
};

enum class BcClass { NotRegular, StrictlyRegular, PeriodicType, RegularDegenerate };

std::string_view to_string(BcClass c);

inline constexpr double kDefaultBcTol = 1e-10;

/// Classification with the near-degenerate warning.
struct BcClassification {
    BcClass cls = BcClass::NotRegular;
    /// Discriminant is below tol but not at rounding level; treated as strictly regular.
    bool near_degenerate = false;
};

/// Relative tolerance; the absolute threshold is tol * bc.scale().
BcClassification classify_bc_detailed(const BoundaryCondition& bc, double tol = kDefaultBcTol);
BcClass classify_bc(const BoundaryCondition& bc, double tol = kDefaultBcTol);

/// Roots z1, z2 of z^2 + (b + c) z + (bc - ad) = 0. Throws NumericalError if not regular.
std::pair<cplx, cplx> char_roots(const BoundaryCondition& bc, double tol = kDefaultBcTol);

/// tau with exp(i pi tau) = z, Re tau in (-1, 1]; a hint shifts Re tau by the even
/// integer bringing it closest to the hint.
cplx tau_from_root(cplx z, std::optional<double> branch_hint = std::nullopt);

/// Derived data fixing the free basis.
struct SpectralParams {
    BcClass cls = BcClass::NotRegular;
    bool near_degenerate = false;
    cplx z1{}, z2{};
    cplx tau1{}, tau2{};  // equal in the non-strictly-regular cases
    Eigen::Vector2cd alpha, beta;
    // Strictly regular: rows of the inverse of [[alpha1, beta1], [alpha2, beta2]].
    Eigen::Vector2cd alpha_prime, beta_prime;
    // RegularDegenerate: alpha1 beta2 - alpha2 beta1 + pi alpha1 alpha2.
    cplx delta{};

    bool strictly_regular() const { return cls == BcClass::StrictlyRegular; }
    bool degenerate() const { return cls == BcClass::RegularDegenerate; }
    cplx tau(int nu) const { return nu == 1 ? tau1 : tau2; }
};

SpectralParams spectral_params(const BoundaryCondition& bc, double tol = kDefaultBcTol);

/// Residual of the normal-form conditions for boundary values (y1(0), y1(pi), y2(0), y2(pi)).
Eigen::Vector2cd bc_residual(const BoundaryCondition& bc, cplx y10, cplx y1pi, cplx y20, cplx y2pi);

}  // namespace dirac
