// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "dirac/basis.hpp"
#include "dirac/linalg.hpp"
#include "dirac/potential.hpp"

namespace dirac {

/// Galerkin matrix of L_bc(v) in the free basis, |k| <= M.
/// Row/column of (k, nu) is 2*even_index(k, M) + (nu - 1).
struct TruncatedOperator {
    int M = 0;
    Eigen::MatrixXcd matrix;

    Eigen::Index size() const { return matrix.rows(); }
    static Eigen::Index index(int k, int nu, int M) { return 2 * even_index(k, M) + (nu - 1); }
    Eigen::Index index(int k, int nu) const { return index(k, nu, M); }
    std::pair<int, int> label(Eigen::Index row) const {
        return {-M + 2 * static_cast<int>(row / 2), static_cast<int>(row % 2) + 1};
    }
};

inline int default_Mw(int M) { return 2 * M + 8; }

TruncatedOperator build_truncated(const SpectralBasis& basis, const MatrixRep& rep, int M);
TruncatedOperator build_truncated(const SpectralBasis& basis, const PotentialSpec& v, int M,
                                  int nodes = kDefaultNodes);

/// Eigenvalues sorted by real then imaginary part.
std::vector<cplx> spectrum(const TruncatedOperator& op);

/// Eigenvalues excluded as truncation artifacts lie beyond this distance from the centre.
int edge_margin(int M);

enum class Region { Central, Disk, Edge, Violation };

struct EigenAssignment {
    cplx lambda;
    Region region = Region::Violation;
    int m = 0;   // lattice index of the disk
    int mu = 0;  // 1 or 2 for strictly regular disks, 0 for double disks
};

struct LocalizationReport {
    int N = 0;
    double T = 0.0;
    double rho = 0.0;
    double center = 0.0;
    int M = 0;
    int central_count = 0;
    int expected_central = 0;
    std::vector<EigenAssignment> assignments;
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
    /// Number of eigenvalues assigned to disk (m, mu).
    int disk_count(int m, int mu) const;
};

/// Disk radius: (1/2) min(1 - |Re(tau1-tau2)|/2, |tau1-tau2|/2) or 1/4.
double disk_radius(const SpectralParams& sp);
/// Re of the rectangle centre: Re (tau1 + tau2)/2.
double localization_center(const SpectralParams& sp);

LocalizationReport localize(const SpectralBasis& basis, const std::vector<cplx>& eigs, int M, int N,
                            double T);

/// Smallest even N in [0, N_max] with a clean report for every spectrum in `runs`; -1 if none.
int find_localization_N(const SpectralBasis& basis, const std::vector<std::vector<cplx>>& runs,
                        int M, double T, int N_max);

/// Default rectangle height 1 + 2|tau1| + 2|tau2| + 2||v|| + 1.
double default_T(const SpectralParams& sp, double v_norm);

/// Gap between the computed invariant subspace for lattice index n and the free coordinate span.
/// Throws NumericalError("disk not resolved") when the group is not isolated.
double riesz_projection_diag(const SpectralBasis& basis, const TruncatedOperator& op,
                             const SchurForm& schur_form, const LocalizationReport& loc, int n);

/// a(lambda) = sum over even |k| <= kmax of |lambda - k|^{-2}.
double resolvent_size(cplx lambda, long kmax = 1000000);
/// 1/(xi^2 + t^2) + 8/(1 + 2|t|), lambda = m + xi + i t with m even, |xi| <= 1.
double resolvent_size_bound(cplx lambda);

}  // namespace dirac
