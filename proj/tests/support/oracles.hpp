// SPDX-License-Identifier: Apache-2.0
// Test-side reference computations. Nothing here calls the library's numerical kernels.
#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "dirac/bc.hpp"

namespace oracle {

using cplx = std::complex<double>;
using Fn = std::function<cplx(double)>;

/// y' = -i diag(1,-1) (lambda rho - T) y on [x1, x2]: fundamental matrix at x2 by classical RK4.
Eigen::Matrix2cd fundamental_rk4(cplx lambda, const std::function<double(double)>& rho, const Fn T[2][2], double x1,
                                 double x2, int steps);

struct ShootingProblem {
    double x1 = 0.0, x2 = M_PI;
    std::function<double(double)> rho = [](double) { return 1.0; };
    Fn T[2][2];
    dirac::BoundaryCondition bc;
    int steps_per_unit = 0;  // 0: chosen from |lambda|
};

/// E(lambda) = B0 + B1 Y(x2) with the normal-form rows.
Eigen::Matrix2cd boundary_matrix(const ShootingProblem& p, cplx lambda);

/// Eigenvalue of E(lambda) with the smaller modulus.
cplx small_eigenvalue(const Eigen::Matrix2cd& E);

/// Secant iteration on the small eigenvalue of E, started at guess. Empty on failure.
std::optional<cplx> shoot(const ShootingProblem& p, cplx guess, double tol = 1e-12, int max_iter = 60);

/// sum over all even k of 1 / |lambda - k|^2 in closed form.
double lattice_sum_closed(cplx lambda);

/// Roots of z^2 + p z + q by Eigen's companion-matrix eigenvalues.
std::pair<cplx, cplx> quadratic_roots_companion(cplx p, cplx q);

/// Random complex number with re, im uniform in [-s, s].
cplx rand_c(std::mt19937_64& rng, double s = 1.0);

/// Random strictly regular bc with |bc-ad| and |(b-c)^2+4ad| bounded away from 0.
dirac::BoundaryCondition random_strict_bc(std::mt19937_64& rng, double margin = 0.2);

/// Three regular degenerate bc covering both prescriptions.
std::vector<dirac::BoundaryCondition> degenerate_bcs();

/// Composite Simpson integral of f on [lo, hi], split at breakpoints.
cplx simpson(const Fn& f, double lo, double hi, const std::vector<double>& breaks, int n_per_piece);

}  // namespace oracle
