// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "dirac/galerkin.hpp"
#include "dirac/linalg.hpp"
#include "dirac/transforms.hpp"

namespace dirac {

/// e^{-i a1} y1(x1) + e^{i a1} y2(x1) = 0, e^{-i a2} y1(x2) + e^{i a2} y2(x2) = 0.
struct SeparatedSelfAdjointBC {
    double alpha1 = 0.0;
    double alpha2 = 0.0;
    /// Normal form: a = e^{2i a1}, d = e^{-2i a2}, b = c = 0.
    BoundaryCondition bc() const;
};

/// (1/rho) [ J d/dx + T ] with J = [[0, -1], [1, 0]] and real T.
struct RealDiracProblem {
    double x1 = 0.0, x2 = kPi;
    std::function<double(double)> rho = [](double) { return 1.0; };
    Matrix2Fn T;
    std::vector<double> breakpoints;
};

/// D = [[A1 + i A2, P1 + i P2], [P1 - i P2, A1 - i A2]] with
/// A1 = (T11+T22)/2, P1 = (T11-T22)/2, A2 = (T21-T12)/2, P2 = (T21+T12)/2.
Matrix2Fn real_to_complex(const Matrix2Fn& T);

/// Complex problem L_bc(D) equivalent to the real one.
WeightedProblem complex_form(const SeparatedSelfAdjointBC& bc, const RealDiracProblem& prob);

struct SaSpectrum {
    std::vector<double> eigenvalues;  // sorted, non-edge only
    std::vector<double> all_eigenvalues;
    double max_imag = 0.0;            // over all computed eigenvalues
    double tau = 0.0;
    double K = 1.0;                    // pi / ell
    double ell = kPi;
    int M = 0;
    int n_lo = 0, n_hi = 0;            // intervals inside the non-edge window
    int N_found = -1;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty() && N_found >= 0; }
};

struct SaPoint {
    double x = 0.0;
    int M = 0;
    double f_sum = 0.0, g_sum = 0.0;
    double f_limit = 0.0, g_limit = 0.0;
    double error = 0.0;
};

struct SaExpandReport {
    std::vector<SaPoint> entries;
    std::vector<bool> decreasing;        // per x over the schedule
    bool all_decreasing = false;
    double max_coeff_imag = 0.0;         // relative to the largest |C_n|
    double max_structure_residual = 0.0; // (phi, conj phi) form defect after rotation
    double max_conj_defect = 0.0;        // |second component - conj first| of partial sums
    int coefficients_checked = 0;
};

/// Galerkin model of the mapped problem, reusable across spectrum and expansion queries.
class SelfAdjointModel {
public:
    SelfAdjointModel(const SeparatedSelfAdjointBC& bc, const RealDiracProblem& prob, int M,
                     int nodes = kDefaultNodes);

    SaSpectrum spectrum() const;
    SaExpandReport expand(const ScalarFn& f, const ScalarFn& g, const std::vector<double>& x_set,
                          const std::vector<int>& M_schedule, int grid_points = 256) const;

    double tau() const { return tau_; }
    double K() const { return canon_.map.K(); }
    const std::vector<cplx>& canonical_eigenvalues() const { return eigs_; }

private:
    std::vector<Value2> partial_sums(const CoefficientTable& c, int n, const std::vector<double>& xs) const;
    Value2 back_transform(double x, Value2 y) const;

    SeparatedSelfAdjointBC sbc_;
    RealDiracProblem prob_;
    int M_ = 0;
    int nodes_ = kDefaultNodes;
    CanonicalProblem canon_;
    GaugeData gauge_;
    SpectralBasis basis_;
    TruncatedOperator op_;
    SchurForm schur_;
    std::vector<cplx> eigs_;
    double tau_ = 0.0;
};

SaSpectrum sa_spectrum(const SeparatedSelfAdjointBC& bc, const RealDiracProblem& prob, int M,
                       int nodes = kDefaultNodes);

SaExpandReport sa_expand(const SeparatedSelfAdjointBC& bc, const RealDiracProblem& prob,
                         const ScalarFn& f, const ScalarFn& g, const std::vector<double>& x_set,
                         const std::vector<int>& M_schedule, int nodes = kDefaultNodes);

/// Limit of the real expansion at an endpoint from the one-sided values there.
std::pair<double, double> sa_endpoint_limit(double alpha, double f, double g);

/// Limit at any x in [x1, x2].
std::pair<double, double> sa_pointwise_limit(const SeparatedSelfAdjointBC& bc, const RealDiracProblem& prob,
                                             const ScalarFn& f, const ScalarFn& g, double x);

}  // namespace dirac
