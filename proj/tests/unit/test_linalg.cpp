// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <random>

#include "dirac/linalg.hpp"

using namespace dirac;

namespace {

Eigen::MatrixXcd random_matrix(int n, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> d;
    Eigen::MatrixXcd A(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) A(i, j) = cplx(d(rng), d(rng));
    return A;
}

double lower_part(const Eigen::MatrixXcd& T) {
    double m = 0.0;
    for (int i = 0; i < T.rows(); ++i)
        for (int j = 0; j < i; ++j) m = std::max(m, std::abs(T(i, j)));
    return m;
}

void check_schur(const SchurForm& s, const Eigen::MatrixXcd& A) {
    const auto n = A.rows();
    CHECK((s.Q * s.T * s.Q.adjoint() - A).norm() < 1e-11 * A.norm());
    CHECK((s.Q.adjoint() * s.Q - Eigen::MatrixXcd::Identity(n, n)).norm() < 1e-12);
    CHECK(lower_part(s.T) < 1e-12 * A.norm());
}

}  // namespace

TEST_CASE("Schur decomposition") {
    const Eigen::MatrixXcd A = random_matrix(30, 1);
    const SchurForm s = schur(A);
    check_schur(s, A);
}

TEST_CASE("swapping and reordering keep a valid Schur form") {
    const Eigen::MatrixXcd A = random_matrix(20, 2);
    SchurForm s = schur(A);
    const cplx l0 = s.T(3, 3), l1 = s.T(4, 4);
    schur_swap(s, 3);
    check_schur(s, A);
    CHECK(std::abs(s.T(3, 3) - l1) < 1e-12);
    CHECK(std::abs(s.T(4, 4) - l0) < 1e-12);

    auto sel = [](cplx l) { return l.real() > 0.5; };
    const auto before = sorted_eigenvalues(s.eigenvalues());
    const auto p = schur_reorder(s, sel);
    check_schur(s, A);
    for (Eigen::Index i = 0; i < s.T.rows(); ++i) CHECK(sel(s.T(i, i)) == (i < p));
    const auto after = sorted_eigenvalues(s.eigenvalues());
    for (std::size_t i = 0; i < before.size(); ++i) CHECK(std::abs(before[i] - after[i]) < 1e-10);
}

TEST_CASE("spectral projector") {
    const Eigen::MatrixXcd A = random_matrix(24, 3);
    auto sel = [](cplx l) { return std::abs(l) < 3.0; };
    const SpectralProjector P(schur(A), sel);
    const Eigen::MatrixXcd Pm = P.matrix();
    CHECK((Pm * Pm - Pm).norm() < 1e-9 * Pm.norm());
    CHECK((Pm * A - A * Pm).norm() < 1e-9 * A.norm() * Pm.norm());
    CHECK(std::abs(Pm.trace() - cplx(double(P.rank()))) < 1e-9);
    // the projector kills eigenvectors outside the group and fixes those inside
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(A);
    for (Eigen::Index i = 0; i < A.rows(); ++i) {
        const Eigen::VectorXcd v = es.eigenvectors().col(i);
        const Eigen::VectorXcd Pv = P.apply(v);
        CHECK((Pv - (sel(es.eigenvalues()(i)) ? v : Eigen::VectorXcd::Zero(v.size()).eval())).norm() < 1e-8);
    }
}

TEST_CASE("principal sine") {
    Eigen::MatrixXcd U = Eigen::MatrixXcd::Zero(4, 1), V = Eigen::MatrixXcd::Zero(4, 1);
    U(0, 0) = 1.0;
    V(0, 0) = std::cos(0.3);
    V(1, 0) = std::sin(0.3);
    CHECK(std::abs(max_principal_sine(U, V) - std::sin(0.3)) < 1e-14);
    CHECK(max_principal_sine(U, U) < 1e-14);
    Eigen::MatrixXcd W = Eigen::MatrixXcd::Zero(4, 1);
    W(2, 0) = 1.0;
    CHECK(std::abs(max_principal_sine(U, W) - 1.0) < 1e-14);
}

TEST_CASE("eigenvalue ordering") {
    Eigen::VectorXcd ev(4);
    ev << cplx(1, 2), cplx(-1, 0), cplx(1, -2), cplx(0, 5);
    const auto s = sorted_eigenvalues(ev);
    CHECK(s[0] == cplx(-1, 0));
    CHECK(s[1] == cplx(0, 5));
    CHECK(s[2] == cplx(1, -2));
    CHECK(s[3] == cplx(1, 2));
}
