// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <random>

#include "dirac/bc.hpp"
#include "oracles.hpp"

using namespace dirac;

namespace {

double poly_residual(const BoundaryCondition& bc, cplx z) {
    return std::abs(z * z + (bc.b + bc.c) * z + bc.det()) / (1.0 + std::norm(z));
}

}  // namespace

TEST_CASE("classification of the reference boundary conditions") {
    CHECK(classify_bc({0.0, -1.0, -1.0, 0.0}) == BcClass::PeriodicType);
    CHECK(classify_bc({0.0, 1.0, 1.0, 0.0}) == BcClass::PeriodicType);
    CHECK(classify_bc({0.0, 0.0, 0.0, 0.0}) == BcClass::NotRegular);
    CHECK(classify_bc({1.0, 0.0, 0.0, 1.0}) == BcClass::StrictlyRegular);
    for (const auto& bc : oracle::degenerate_bcs()) CHECK(classify_bc(bc) == BcClass::RegularDegenerate);
    CHECK(to_string(BcClass::PeriodicType) == "PeriodicType");
}

TEST_CASE("near-degenerate discriminant is flagged but stays strictly regular") {
    // (b - c)^2 + 4ad = 1e-12 with O(1) coefficients
    const BoundaryCondition bc{1.0, 1.0, 0.2, -0.16 + 0.25e-12};
    const auto c = classify_bc_detailed(bc);
    CHECK(c.cls == BcClass::StrictlyRegular);
    CHECK(c.near_degenerate);
    CHECK_FALSE(classify_bc_detailed({1.0, 0.0, 0.0, 1.0}).near_degenerate);
}

TEST_CASE("characteristic roots") {
    auto [z1, z2] = char_roots(BoundaryCondition::periodic());
    CHECK(std::abs(z1 - 1.0) < 1e-15);
    CHECK(std::abs(z2 - 1.0) < 1e-15);

    const BoundaryCondition sep{1.0, 0.0, 0.0, 1.0};
    std::tie(z1, z2) = char_roots(sep);
    CHECK(poly_residual(sep, z1) < 1e-12);
    CHECK(poly_residual(sep, z2) < 1e-12);
    CHECK(std::abs(z1 * z2 + 1.0) < 1e-14);  // {1, -1}
    CHECK(std::abs(z1 + z2) < 1e-14);

    for (const auto& bc : oracle::degenerate_bcs()) {
        std::tie(z1, z2) = char_roots(bc);
        CHECK(std::abs(z1 - z2) < 1e-14);
        CHECK(std::abs(z1 + 0.5 * (bc.b + bc.c)) < 1e-14);
    }

    CHECK_THROWS_WITH_AS(char_roots({0.0, 0.0, 0.0, 0.0}),
                         doctest::Contains("characteristic roots undefined"), NumericalError);
}

TEST_CASE("random regular bc: root residuals and companion-matrix agreement") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        const BoundaryCondition bc{oracle::rand_c(rng, 2), oracle::rand_c(rng, 2), oracle::rand_c(rng, 2),
                                   oracle::rand_c(rng, 2)};
        if (classify_bc(bc) == BcClass::NotRegular) continue;
        const auto [z1, z2] = char_roots(bc);
        CHECK(poly_residual(bc, z1) < 1e-12);
        CHECK(poly_residual(bc, z2) < 1e-12);
        const auto [w1, w2] = oracle::quadratic_roots_companion(bc.b + bc.c, bc.det());
        const double d = std::min(std::abs(z1 - w1) + std::abs(z2 - w2), std::abs(z1 - w2) + std::abs(z2 - w1));
        CHECK(d < 1e-9 * (1.0 + std::abs(z1) + std::abs(z2)));
        // algebraic identity of the two discriminant forms
        const cplx lhs = (bc.b + bc.c) * (bc.b + bc.c) - 4.0 * bc.det();
        CHECK(std::abs(lhs - bc.discriminant()) < 1e-14 * 64.0);
    }
}

TEST_CASE("tau from root") {
    CHECK(std::abs(tau_from_root(1.0)) < 1e-15);
    CHECK(std::abs(tau_from_root(kI) - 0.5) < 1e-15);
    CHECK(std::abs(tau_from_root(-1.0) - 1.0) < 1e-15);
    CHECK_THROWS_AS(tau_from_root(0.0), NumericalError);
    std::mt19937_64 rng(5);
    for (int t = 0; t < 100; ++t) {
        const cplx z = oracle::rand_c(rng, 3.0);
        const cplx tau = tau_from_root(z);
        CHECK(tau.real() > -1.0);
        CHECK(tau.real() <= 1.0);
        CHECK(std::abs(std::exp(kI * kPi * tau) - z) < 1e-12 * std::abs(z));
        const cplx shifted = tau_from_root(z, 7.3);
        CHECK(std::abs(std::exp(kI * kPi * shifted) - z) < 1e-12 * std::abs(z));
        CHECK(std::abs(shifted.real() - 7.3) <= 1.0);
    }
}

TEST_CASE("spectral parameters: periodic type uses the identity pair") {
    const auto sp = spectral_params(BoundaryCondition::periodic());
    CHECK(sp.cls == BcClass::PeriodicType);
    CHECK(std::abs(sp.tau1) < 1e-15);
    CHECK(std::abs(sp.alpha(0) - 1.0) < 1e-15);
    CHECK(std::abs(sp.alpha(1)) < 1e-15);
    CHECK(std::abs(sp.beta(0)) < 1e-15);
    CHECK(std::abs(sp.beta(1) - 1.0) < 1e-15);
    CHECK(std::abs(sp.alpha_prime(0) - 1.0) < 1e-15);
    CHECK(std::abs(sp.beta_prime(1) - 1.0) < 1e-15);
    const auto am = spectral_params(BoundaryCondition::antiperiodic());
    CHECK(std::abs(std::abs(am.tau1.real()) - 1.0) < 1e-15);
}

TEST_CASE("spectral parameters: degenerate prescriptions") {
    const BoundaryCondition c1{0.0, 0.5, 0.5, 0.7};
    auto sp = spectral_params(c1);
    CHECK(sp.cls == BcClass::RegularDegenerate);
    CHECK(std::abs(sp.alpha(0)) < 1e-15);
    CHECK(std::abs(sp.alpha(1) - 0.7) < 1e-15);
    CHECK(std::abs(sp.beta(0) - kPi * 0.5) < 1e-15);
    CHECK(std::abs(sp.beta(1)) < 1e-15);

    for (const auto& bc : {oracle::degenerate_bcs()[1], oracle::degenerate_bcs()[2]}) {
        sp = spectral_params(bc);
        CHECK(std::abs(sp.alpha(0) - bc.a) < 1e-15);
        CHECK(std::abs(sp.alpha(1) - 0.5 * (bc.c - bc.b)) < 1e-15);
        CHECK(std::abs(sp.beta(0)) < 1e-15);
        CHECK(std::abs(sp.beta(1) - kPi * bc.b) < 1e-14);
        const cplx delta = sp.alpha(0) * sp.beta(1) - sp.alpha(1) * sp.beta(0) + kPi * sp.alpha(0) * sp.alpha(1);
        CHECK(std::abs(sp.delta - delta) < 1e-13);
        CHECK(std::abs(sp.delta) > 0.0);
        CHECK(std::abs(std::exp(kI * kPi * sp.tau1) - sp.z1) < 1e-12 * std::abs(sp.z1));
    }
}

TEST_CASE("spectral parameters: strictly regular eigenvector pairs") {
    std::mt19937_64 rng(17);
    std::vector<BoundaryCondition> bcs{{1.0, 0.0, 0.0, 1.0}};
    for (int t = 0; t < 50; ++t) bcs.push_back(oracle::random_strict_bc(rng));
    for (const auto& bc : bcs) {
        const auto sp = spectral_params(bc);
        REQUIRE(sp.cls == BcClass::StrictlyRegular);
        Eigen::Matrix2cd B;
        B << bc.b, bc.a, bc.d, bc.c;
        CHECK((B * sp.alpha + sp.z1 * sp.alpha).norm() < 1e-12);
        CHECK((B * sp.beta + sp.z2 * sp.beta).norm() < 1e-12);
        CHECK(std::abs(sp.alpha.cwiseAbs().maxCoeff() - 1.0) < 1e-15);
        CHECK(std::abs(sp.beta.cwiseAbs().maxCoeff() - 1.0) < 1e-15);
        Eigen::Matrix2cd E, Ei;
        E << sp.alpha(0), sp.beta(0), sp.alpha(1), sp.beta(1);
        Ei << sp.alpha_prime(0), sp.alpha_prime(1), sp.beta_prime(0), sp.beta_prime(1);
        CHECK((E * Ei - Eigen::Matrix2cd::Identity()).norm() < 1e-12);
        CHECK(std::abs(sp.tau1.real() - sp.tau2.real()) <= 1.0 + 1e-15);
        CHECK(std::abs(std::exp(kI * kPi * sp.tau1) - sp.z1) < 1e-12 * std::abs(sp.z1));
        CHECK(std::abs(std::exp(kI * kPi * sp.tau2) - sp.z2) < 1e-12 * std::abs(sp.z2));
    }
}

TEST_CASE("classification is a pure function of the tuple") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 20; ++t) {
        const BoundaryCondition bc = oracle::random_strict_bc(rng);
        CHECK(classify_bc(bc) == classify_bc(bc));
        const auto a = spectral_params(bc), b = spectral_params(bc);
        CHECK(a.tau1 == b.tau1);
        CHECK(a.alpha == b.alpha);
    }
}
