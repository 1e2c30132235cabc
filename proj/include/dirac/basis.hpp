// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include <Eigen/Dense>

#include "dirac/bc.hpp"
#include "dirac/function.hpp"
#include "dirac/quadrature.hpp"

namespace dirac {

/// Coefficients c_k^nu for even |k| <= M, nu in {1, 2}.
struct CoefficientTable {
    int M = 0;
    std::vector<cplx> c1, c2;

    CoefficientTable() = default;
    explicit CoefficientTable(int m) : M(m), c1(m + 1), c2(m + 1) {}

    cplx& at(int k, int nu) { return (nu == 1 ? c1 : c2)[even_index(k, M)]; }
    cplx at(int k, int nu) const { return (nu == 1 ? c1 : c2)[even_index(k, M)]; }
    /// Copy restricted to |k| <= N.
    CoefficientTable truncated(int N) const;
};

/// Free eigenfunction basis of the unperturbed operator and its biorthogonal system.
///
/// Every element factors as phi_k^nu = (u_nu(x) e^{-ikx}, v_nu(x) e^{ikx}) and
/// similarly for the dual system, so all k-dependence is a plain exponential.
class SpectralBasis {
public:
    explicit SpectralBasis(const BoundaryCondition& bc, double tol = kDefaultBcTol);

    const BoundaryCondition& bc() const { return bc_; }
    const SpectralParams& params() const { return sp_; }
    BcClass cls() const { return sp_.cls; }

    /// (u_nu(x), v_nu(x)).
    Value2 factors(int nu, double x) const;
    /// Factors of the biorthogonal system.
    Value2 dual_factors(int nu, double x) const;

    Value2 phi(int k, int nu, double x) const;
    Value2 phi_tilde(int k, int nu, double x) const;
    /// Eigenvalue k + tau_nu of the unperturbed operator.
    cplx free_eigenvalue(int k, int nu) const { return double(k) + sp_.tau(nu); }

    /// Isomorphism mapping the standard exponential basis onto the free basis.
    Value2 apply_A(double x, Value2 at_reflected, Value2 at_x) const;
    Value2 apply_A_inv(double x, Value2 at_reflected, Value2 at_x) const;
    VectorFunction apply_A(const VectorFunction& u) const;
    VectorFunction apply_A_inv(const VectorFunction& F) const;

private:
    BoundaryCondition bc_;
    SpectralParams sp_;
};

/// Expansion coefficients <F, phi~_k^nu> for |k| <= M by direct quadrature.
CoefficientTable expand_direct(const SpectralBasis& basis, const VectorFunction& F, int M,
                               int nodes = kDefaultNodes,
                               QuadratureKind kind = QuadratureKind::GaussLegendre);

/// Same coefficients as Fourier coefficients of A^{-1} F.
CoefficientTable expand_via_A_inverse(const SpectralBasis& basis, const VectorFunction& F, int M,
                                      int nodes = kDefaultNodes,
                                      QuadratureKind kind = QuadratureKind::GaussLegendre);

/// Gram matrix G[(j,eta),(k,nu)] = <phi_k^nu, phi~_j^eta>, |j|,|k| <= M.
/// Row/column index is 2*even_index(k, M) + (nu - 1).
Eigen::MatrixXcd biorthogonality_gram(const SpectralBasis& basis, int M,
                                      int nodes = kDefaultNodes,
                                      QuadratureKind kind = QuadratureKind::GaussLegendre);

/// sum_{k,nu} c_k^nu phi_k^nu(x) at every x.
std::vector<Value2> synthesize(const SpectralBasis& basis, const CoefficientTable& c,
                               const std::vector<double>& xs);

/// Generic pointwise operator on vector functions whose value at x depends on the
/// input at pi - x and at x. Jump metadata is carried over, reflected as needed.
VectorFunction reflect_mix(const VectorFunction& in,
                           std::function<Value2(double, Value2, Value2)> op);

}  // namespace dirac
