// SPDX-License-Identifier: Apache-2.0
#include "dirac/galerkin.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dirac/kernels/kernels.hpp"

namespace dirac {

TruncatedOperator build_truncated(const SpectralBasis& basis, const MatrixRep& rep, int M) {
    if (M < 0 || (M & 1)) throw NumericalError("build_truncated: M must be even and non-negative");
    if (rep.Mw() < 2 * M)
        throw NumericalError("build_truncated: matrix representation covers |m| <= " +
                             std::to_string(rep.Mw()) + " but 2M = " + std::to_string(2 * M));
    TruncatedOperator op;
    op.M = M;
    const Eigen::Index n = 2 * (M + 1);
    op.matrix.resize(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
        const auto [j, eta] = op.label(r);
        for (Eigen::Index c = 0; c < n; ++c) {
            const auto [k, nu] = op.label(c);
            op.matrix(r, c) = rep.w(eta, nu, j + k);
        }
    }
    const auto& sp = basis.params();
    for (int k = -M; k <= M; k += 2) {
        for (int nu = 1; nu <= 2; ++nu) op.matrix(op.index(k, nu), op.index(k, nu)) += double(k) + sp.tau(nu);
        if (sp.degenerate()) op.matrix(op.index(k, 1), op.index(k, 2)) += -kI;
    }
    return op;
}

TruncatedOperator build_truncated(const SpectralBasis& basis, const PotentialSpec& v, int M, int nodes) {
    return build_truncated(basis, matrix_rep(basis, v, default_Mw(M), nodes), M);
}

std::vector<cplx> spectrum(const TruncatedOperator& op) {
    return sorted_eigenvalues(schur(op.matrix).eigenvalues());
}

int edge_margin(int M) { return std::max(8, M / 8); }

int LocalizationReport::disk_count(int m, int mu) const {
    int c = 0;
    for (const auto& a : assignments)
        if (a.region == Region::Disk && a.m == m && a.mu == mu) ++c;
    return c;
}

double disk_radius(const SpectralParams& sp) {
    if (!sp.strictly_regular()) return 0.25;
    const cplx d = sp.tau1 - sp.tau2;
    return 0.5 * std::min(1.0 - std::abs(d.real()) / 2.0, std::abs(d) / 2.0);
}

double localization_center(const SpectralParams& sp) { return 0.5 * (sp.tau1 + sp.tau2).real(); }

double default_T(const SpectralParams& sp, double v_norm) {
    return 2.0 + 2.0 * std::abs(sp.tau1) + 2.0 * std::abs(sp.tau2) + 2.0 * v_norm;
}

LocalizationReport localize(const SpectralBasis& basis, const std::vector<cplx>& eigs, int M, int N,
                            double T) {
    const auto& sp = basis.params();
    LocalizationReport rep;
    rep.N = N;
    rep.T = T;
    rep.M = M;
    rep.rho = disk_radius(sp);
    rep.center = localization_center(sp);
    rep.expected_central = 2 * N + 2;
    const bool sr = sp.strictly_regular();
    const double window = M - edge_margin(M);
    auto fail = [&](std::string s) { rep.violations.push_back(std::move(s)); };
    if (N < 0 || (N & 1)) fail("N must be even and non-negative");
    if (N + 1 > window) fail("rectangle extends into the truncation edge (N + 1 > M - margin)");

    for (const cplx& z : eigs) {
        EigenAssignment a;
        a.lambda = z;
        const double x = z.real() - rep.center;
        if (std::abs(x) > window) {
            a.region = Region::Edge;
        } else if (std::abs(x) < N + 1 && std::abs(z.imag()) < T) {
            a.region = Region::Central;
            ++rep.central_count;
        } else {
            // Nearest lattice point k + tau_nu with |k| > N; ties toward smaller |k|, then nu = 1.
            double best = 1e300;
            int bk = 0, bnu = 0;
            for (int nu = 1; nu <= (sr ? 2 : 1); ++nu) {
                const cplx t = sp.tau(nu);
                const int k0 = 2 * static_cast<int>(std::floor((z.real() - t.real()) / 2.0));
                for (int k = k0 - 2; k <= k0 + 4; k += 2) {
                    const double d = std::abs(z - (double(k) + t));
                    const bool better = d < best - 1e-14 ||
                                        (std::abs(d - best) <= 1e-14 &&
                                         (std::abs(k) < std::abs(bk) || (std::abs(k) == std::abs(bk) && nu < bnu)));
                    if (better) {
                        best = d;
                        bk = k;
                        bnu = nu;
                    }
                }
            }
            if (best < rep.rho && std::abs(bk) > N) {
                a.region = Region::Disk;
                a.m = bk;
                a.mu = sr ? bnu : 0;
            } else {
                a.region = Region::Violation;
                std::ostringstream os;
                os.precision(10);
                os << "eigenvalue " << z.real() << (z.imag() < 0 ? "" : "+") << z.imag()
                   << "i lies outside R_NT and every disk";
                fail(os.str());
            }
        }
        rep.assignments.push_back(a);
    }
    if (rep.central_count != rep.expected_central)
        fail("R_NT holds " + std::to_string(rep.central_count) + " eigenvalues, expected " +
             std::to_string(rep.expected_central));
    // Disks fully inside the non-edge window must hold exactly their free multiplicity.
    for (int m = -M; m <= M; m += 2) {
        if (std::abs(m) <= N) continue;
        for (int nu = 1; nu <= (sr ? 2 : 1); ++nu) {
            const double c = m + sp.tau(nu).real() - rep.center;
            if (std::abs(c) + rep.rho > window) continue;
            const int expect = sr ? 1 : 2;
            const int got = rep.disk_count(m, sr ? nu : 0);
            if (got != expect)
                fail("disk m=" + std::to_string(m) + (sr ? " mu=" + std::to_string(nu) : "") + " holds " +
                     std::to_string(got) + " eigenvalues, expected " + std::to_string(expect));
        }
    }
    return rep;
}

int find_localization_N(const SpectralBasis& basis, const std::vector<std::vector<cplx>>& runs, int M,
                        double T, int N_max) {
    for (int N = 0; N <= N_max; N += 2) {
        bool all = true;
        for (const auto& e : runs)
            if (!localize(basis, e, M, N, T).ok()) {
                all = false;
                break;
            }
        if (all) return N;
    }
    return -1;
}

double riesz_projection_diag(const SpectralBasis& basis, const TruncatedOperator& op,
                             const SchurForm& schur_form, const LocalizationReport& loc, int n) {
    const auto& sp = basis.params();
    if (std::abs(n) <= loc.N) throw NumericalError("disk not resolved: n lies inside R_NT");
    if ((n & 1) || std::abs(n) > op.M) throw NumericalError("disk not resolved: n outside the lattice window");
    const bool sr = sp.strictly_regular();
    int count = 0;
    for (const auto& a : loc.assignments)
        if (a.region == Region::Disk && a.m == n) ++count;
    if (count != 2) throw NumericalError("disk not resolved: index " + std::to_string(n));
    auto in_group = [&](cplx z) {
        for (int nu = 1; nu <= (sr ? 2 : 1); ++nu)
            if (std::abs(z - (double(n) + sp.tau(nu))) < loc.rho) return true;
        return false;
    };
    SpectralProjector P(schur_form, in_group);
    if (P.rank() != 2) throw NumericalError("disk not resolved: group rank " + std::to_string(P.rank()));
    Eigen::MatrixXcd E = Eigen::MatrixXcd::Zero(op.size(), 2);
    E(op.index(n, 1), 0) = 1.0;
    E(op.index(n, 2), 1) = 1.0;
    return max_principal_sine(P.subspace(), E);
}

double resolvent_size(cplx lambda, long kmax) { return kernels::lattice_inverse_square(lambda, kmax); }

double resolvent_size_bound(cplx lambda) {
    const double m = 2.0 * std::round(lambda.real() / 2.0);
    const double xi = lambda.real() - m, t = lambda.imag();
    return 1.0 / (xi * xi + t * t) + 8.0 / (1.0 + 2.0 * std::abs(t));
}

}  // namespace dirac
