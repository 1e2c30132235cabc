// SPDX-License-Identifier: Apache-2.0
#include "dirac/linalg.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace dirac {

SchurForm schur(const Eigen::MatrixXcd& A) {
    Eigen::ComplexSchur<Eigen::MatrixXcd> cs;
    cs.setMaxIterations(60 * std::max<Eigen::Index>(1, A.rows()));
    cs.compute(A, true);
    if (cs.info() != Eigen::Success)
        throw NumericalError("schur: QR iteration did not converge (n=" + std::to_string(A.rows()) + ")");
    return {cs.matrixT().triangularView<Eigen::Upper>(), cs.matrixU()};
}

void schur_swap(SchurForm& s, Eigen::Index i) {
    auto& T = s.T;
    const Eigen::Index n = T.rows();
    const cplx t11 = T(i, i), t22 = T(i + 1, i + 1), t12 = T(i, i + 1);
    // Eigenvector of the 2x2 block for t22 becomes the first column of G.
    cplx g1 = t12, g2 = t22 - t11;
    const double nr = std::hypot(std::abs(g1), std::abs(g2));
    if (nr == 0.0) {
        // Equal eigenvalues with zero coupling: a permutation suffices.
        g1 = 0.0;
        g2 = 1.0;
    } else {
        g1 /= nr;
        g2 /= nr;
    }
    Eigen::Matrix2cd G;
    G << g1, -std::conj(g2), g2, std::conj(g1);
    T.middleRows(i, 2).rightCols(n - i) = G.adjoint() * T.middleRows(i, 2).rightCols(n - i);
    T.middleCols(i, 2).topRows(i + 2) = T.middleCols(i, 2).topRows(i + 2) * G;
    s.Q.middleCols(i, 2) = s.Q.middleCols(i, 2) * G;
    T(i + 1, i) = 0.0;
    T(i, i) = t22;
    T(i + 1, i + 1) = t11;
}

Eigen::Index schur_reorder(SchurForm& s, const std::function<bool(cplx)>& select) {
    const Eigen::Index n = s.T.rows();
    Eigen::Index head = 0;
    for (Eigen::Index j = 0; j < n; ++j) {
        if (!select(s.T(j, j))) continue;
        for (Eigen::Index i = j; i > head; --i) schur_swap(s, i - 1);
        ++head;
    }
    return head;
}

SpectralProjector::SpectralProjector(SchurForm s, const std::function<bool(cplx)>& select)
    : s_(std::move(s)) {
    p_ = schur_reorder(s_, select);
    const Eigen::Index n = s_.T.rows(), q = n - p_;
    X_.resize(p_, q);
    if (p_ == 0 || q == 0) return;
    const auto T11 = s_.T.topLeftCorner(p_, p_);
    const auto T12 = s_.T.topRightCorner(p_, q);
    const auto T22 = s_.T.bottomRightCorner(q, q);
    // Column-wise triangular solves of T11 X - X T22 = -T12.
    for (Eigen::Index j = 0; j < q; ++j) {
        Eigen::VectorXcd rhs = -T12.col(j);
        if (j > 0) rhs += X_.leftCols(j) * T22.col(j).head(j);
        Eigen::MatrixXcd A = T11;
        A.diagonal().array() -= T22(j, j);
        X_.col(j) = A.triangularView<Eigen::Upper>().solve(rhs);
    }
    if (!X_.allFinite()) throw NumericalError("SpectralProjector: Sylvester solve failed (groups not separated)");
}

Eigen::VectorXcd SpectralProjector::apply(const Eigen::VectorXcd& v) const {
    const Eigen::VectorXcd y = s_.Q.adjoint() * v;
    const Eigen::Index q = y.size() - p_;
    Eigen::VectorXcd top = y.head(p_);
    if (q > 0 && p_ > 0) top -= X_ * y.tail(q);
    return s_.Q.leftCols(p_) * top;
}

Eigen::MatrixXcd SpectralProjector::matrix() const {
    const Eigen::Index n = s_.T.rows(), q = n - p_;
    Eigen::MatrixXcd PT = Eigen::MatrixXcd::Zero(n, n);
    PT.topLeftCorner(p_, p_).setIdentity();
    if (q > 0 && p_ > 0) PT.topRightCorner(p_, q) = -X_;
    return s_.Q * PT * s_.Q.adjoint();
}

double max_principal_sine(const Eigen::MatrixXcd& U, const Eigen::MatrixXcd& V) {
    if (U.cols() != V.cols()) return 1.0;
    // sin(theta_max) = ||(I - V V^H) U||_2 for equal dimensions.
    const Eigen::MatrixXcd R = U - V * (V.adjoint() * U);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(R);
    return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
}

std::vector<cplx> sorted_eigenvalues(const Eigen::VectorXcd& ev) {
    std::vector<cplx> v(ev.data(), ev.data() + ev.size());
    std::sort(v.begin(), v.end(), [](cplx a, cplx b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return v;
}

}  // namespace dirac
