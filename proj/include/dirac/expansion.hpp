// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include <Eigen/Dense>

#include "dirac/basis.hpp"
#include "dirac/galerkin.hpp"

namespace dirac {

/// 4x4 endpoint transition matrix over (f(0), f(pi), g(0), g(pi)); unit diagonal.
Eigen::Matrix4cd transition_matrix(const BoundaryCondition& bc);

/// (f(0+0), f(pi-0), g(0+0), g(pi-0)).
Eigen::Vector4cd boundary_vector(const VectorFunction& F);

/// Endpoint limit (1/2) M b at x = 0 (at_zero) or x = pi.
Value2 endpoint_limit(const BoundaryCondition& bc, const Eigen::Vector4cd& b, bool at_zero);

/// Limit of the symmetric partial sums at x: averaged one-sided values inside, the
/// transition-matrix formula at the endpoints. Throws ConfigError outside [0, pi].
Value2 pointwise_limit(const BoundaryCondition& bc, const VectorFunction& F, double x);

/// sum_{|k|<=N, nu} c_k^nu phi_k^nu(x) from a coefficient table with M >= N.
std::vector<Value2> free_partial_sum(const SpectralBasis& basis, const CoefficientTable& c, int N,
                                     const std::vector<double>& xs);

/// Same sum computed as A applied to Fourier partial sums of A^{-1} F.
std::vector<Value2> free_partial_sum_dual(const SpectralBasis& basis, const VectorFunction& F, int N,
                                          const std::vector<double>& xs, int nodes = kDefaultNodes);

/// Coefficient vector in Galerkin index order from a table with the same M.
Eigen::VectorXcd to_galerkin_vector(const CoefficientTable& c);
CoefficientTable from_galerkin_vector(const Eigen::VectorXcd& v, int M);

/// Spectral partial sum S_N F of the truncated operator: projection onto the eigenvalues in
/// R_NT, synthesized in the free basis. Throws NumericalError if R_NT does not hold 2N+2
/// eigenvalues.
std::vector<Value2> perturbed_partial_sum(const SpectralBasis& basis, const TruncatedOperator& op,
                                          const SchurForm& sf, const CoefficientTable& c, int N,
                                          double T, const std::vector<double>& xs);

struct DeficitPoint {
    int N = 0;
    double deficit = 0.0;
};

struct ExpansionReport {
    std::vector<DeficitPoint> deficits;
    bool trend_pass = false;   // d(N_max) < d(N_min) / factor
    bool tail_decreasing = false;
    bool pass = false;
};

struct EquiconvOptions {
    double trend_factor = 4.0;
    double noise = 1e-9;
    double T = -1.0;  // rectangle height; negative selects default_T
};

/// d(N) = max over the grid and both components of |S_N F - S_N^0 F|.
ExpansionReport equiconv_deficit(const SpectralBasis& basis, const TruncatedOperator& op,
                                 const CoefficientTable& c, double v_norm,
                                 const std::vector<int>& N_schedule, const std::vector<double>& grid,
                                 const EquiconvOptions& opt = {});

struct PointwiseEntry {
    double x = 0.0;
    int M = 0;
    Value2 sum{};
    Value2 limit{};
    double error = 0.0;  // max over components
};

struct PointwiseReport {
    std::vector<PointwiseEntry> entries;
    std::vector<double> x_set;
    std::vector<bool> decreasing;      // per x over the M schedule
    std::vector<double> uniform_error;  // per M: sup away from jumps and endpoints
    bool all_decreasing = false;
};

/// Partial sums via the A^{-1}-then-Fourier path against the limit formula.
PointwiseReport verify_pointwise(const SpectralBasis& basis, const VectorFunction& F,
                                 const std::vector<double>& x_set, const std::vector<int>& M_schedule,
                                 int grid_points = 512, int nodes = kDefaultNodes);

}  // namespace dirac
