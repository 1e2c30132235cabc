// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "dirac/common.hpp"

namespace dirac {

/// Complex Schur form A = Q T Q^H.
struct SchurForm {
    Eigen::MatrixXcd T;
    Eigen::MatrixXcd Q;

    Eigen::VectorXcd eigenvalues() const { return T.diagonal(); }
};

/// Throws NumericalError on non-convergence.
SchurForm schur(const Eigen::MatrixXcd& A);

/// Swaps adjacent diagonal entries i, i+1 of T with a unitary rotation, updating Q.
void schur_swap(SchurForm& s, Eigen::Index i);

/// Moves every diagonal entry for which select(lambda) holds to the leading block,
/// preserving relative order. Returns the size of the leading block.
Eigen::Index schur_reorder(SchurForm& s, const std::function<bool(cplx)>& select);

/// Spectral (Riesz) projector onto the invariant subspace of a selected eigenvalue group.
class SpectralProjector {
public:
    SpectralProjector(SchurForm s, const std::function<bool(cplx)>& select);

    Eigen::Index rank() const { return p_; }
    /// Orthonormal basis of the invariant subspace.
    Eigen::MatrixXcd subspace() const { return s_.Q.leftCols(p_); }
    Eigen::VectorXcd apply(const Eigen::VectorXcd& v) const;
    Eigen::MatrixXcd matrix() const;
    /// Eigenvalues of the selected group.
    Eigen::VectorXcd group_eigenvalues() const { return s_.T.diagonal().head(p_); }

private:
    SchurForm s_;
    Eigen::Index p_ = 0;
    Eigen::MatrixXcd X_;  // T11 X - X T22 = -T12
};

/// Sine of the largest principal angle between span(U) and span(V); both orthonormal.
double max_principal_sine(const Eigen::MatrixXcd& U, const Eigen::MatrixXcd& V);

/// Eigenvalues sorted by real part, then imaginary part.
std::vector<cplx> sorted_eigenvalues(const Eigen::VectorXcd& ev);

}  // namespace dirac
