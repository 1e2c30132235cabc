// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <random>

#include "dirac/basis.hpp"
#include "oracles.hpp"

using namespace dirac;

namespace {

std::vector<BoundaryCondition> sample_bcs() {
    std::mt19937_64 rng(101);
    std::vector<BoundaryCondition> v{BoundaryCondition::periodic(), BoundaryCondition::antiperiodic(),
                                     {1.0, 0.0, 0.0, 1.0}};
    for (const auto& d : oracle::degenerate_bcs()) v.push_back(d);
    for (int i = 0; i < 3; ++i) v.push_back(oracle::random_strict_bc(rng));
    return v;
}

ScalarFn trig_poly(std::mt19937_64& rng, int K) {
    ScalarFn f = ScalarFn::constant(0.0);
    for (int k = -K; k <= K; k += 2) f = f + ScalarFn::exponential(oracle::rand_c(rng), k);
    return f;
}

double dist(Value2 a, Value2 b) { return std::max(std::abs(a[0] - b[0]), std::abs(a[1] - b[1])); }

}  // namespace

TEST_CASE("periodic basis is the exponential system") {
    const SpectralBasis b(BoundaryCondition::periodic());
    for (int k = -6; k <= 6; k += 2)
        for (double x : {0.0, 0.4, 1.7, kPi}) {
            const cplx e = std::exp(kI * (k * x));
            CHECK(dist(b.phi(k, 1, x), {1.0 / e, 0.0}) < 1e-15);
            CHECK(dist(b.phi(k, 2, x), {0.0, e}) < 1e-15);
            CHECK(dist(b.phi_tilde(k, 1, x), b.phi(k, 1, x)) < 1e-15);
            CHECK(dist(b.phi_tilde(k, 2, x), b.phi(k, 2, x)) < 1e-15);
        }
    CHECK_THROWS_AS(b.phi(3, 1, 0.0), ConfigError);
}

TEST_CASE("strictly regular basis at x = pi") {
    std::mt19937_64 rng(7);
    const SpectralBasis b(oracle::random_strict_bc(rng));
    const auto& sp = b.params();
    for (int k = -4; k <= 4; k += 2) {
        CHECK(dist(b.phi(k, 1, kPi), {sp.alpha(0), sp.alpha(1) * sp.z1}) < 1e-12);
        CHECK(dist(b.phi(k, 2, kPi), {sp.beta(0), sp.beta(1) * sp.z2}) < 1e-12);
    }
}

TEST_CASE("degenerate basis with a = 0, b = c") {
    const BoundaryCondition bc{0.0, 0.5, 0.5, 0.7};
    const SpectralBasis b(bc);
    const cplx tau = b.params().tau1;
    for (int k = -4; k <= 4; k += 2)
        for (double x : {0.0, 0.9, 2.2}) {
            const Value2 expect{0.0, bc.d * std::exp(kI * tau * x) * std::exp(kI * double(k) * x)};
            CHECK(dist(b.phi(k, 1, x), expect) < 1e-14);
        }
}

TEST_CASE("basis satisfies the boundary conditions") {
    for (const auto& bc : sample_bcs()) {
        const SpectralBasis b(bc);
        for (int k = -4; k <= 4; k += 2)
            for (int nu = 1; nu <= 2; ++nu) {
                const Value2 y0 = b.phi(k, nu, 0.0), yp = b.phi(k, nu, kPi);
                CHECK(bc_residual(bc, y0[0], yp[0], y0[1], yp[1]).norm() < 1e-12);
            }
    }
}

TEST_CASE("biorthogonality on |k| <= 20") {
    for (const auto& bc : sample_bcs()) {
        const SpectralBasis b(bc);
        const Eigen::MatrixXcd G = biorthogonality_gram(b, 20, 4096);
        CHECK((G - Eigen::MatrixXcd::Identity(G.rows(), G.cols())).cwiseAbs().maxCoeff() < 1e-8);
    }
}

TEST_CASE("A maps exponentials onto the basis and A^{-1} inverts it") {
    std::mt19937_64 rng(23);
    for (const auto& bc : sample_bcs()) {
        const SpectralBasis b(bc);
        for (int k = -6; k <= 6; k += 2)
            for (int i = 0; i < 50; ++i) {
                const double x = kPi * i / 49.0;
                const cplx e = std::exp(kI * (k * x)), er = std::exp(kI * (k * (kPi - x)));
                CHECK(dist(b.apply_A(x, {er, 0.0}, {e, 0.0}), b.phi(k, 1, x)) < 1e-12);
                CHECK(dist(b.apply_A(x, {0.0, er}, {0.0, e}), b.phi(k, 2, x)) < 1e-12);
            }
        const VectorFunction u{trig_poly(rng, 6), trig_poly(rng, 6)};
        const VectorFunction F = b.apply_A(u);
        const VectorFunction back = b.apply_A_inv(F);
        for (int i = 0; i < 40; ++i) {
            const double x = kPi * i / 39.0;
            CHECK(dist(back(x), u(x)) < 1e-10);
        }
        // periodic u is carried to a function satisfying bc
        CHECK(bc_residual(bc, F.f(0.0), F.f(kPi), F.g(0.0), F.g(kPi)).norm() < 1e-10);
        // and a bc-satisfying combination of basis functions comes back periodic
        const VectorFunction G{ScalarFn([&](double x) { return b.phi(2, 1, x)[0] + 0.3 * b.phi(-4, 2, x)[0]; }),
                               ScalarFn([&](double x) { return b.phi(2, 1, x)[1] + 0.3 * b.phi(-4, 2, x)[1]; })};
        const VectorFunction g = b.apply_A_inv(G);
        CHECK(dist(g(0.0), g(kPi)) < 1e-10);
    }
}

TEST_CASE("basis functions are bounded uniformly in k") {
    for (const auto& bc : sample_bcs()) {
        const SpectralBasis b(bc);
        double base = 0.0, all = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const double x = kPi * i / 999.0;
            for (int nu = 1; nu <= 2; ++nu) {
                const Value2 f = b.factors(nu, x);
                base = std::max({base, std::abs(f[0]), std::abs(f[1])});
                for (int k = -200; k <= 200; k += 40) {
                    const Value2 p = b.phi(k, nu, x);
                    all = std::max({all, std::abs(p[0]), std::abs(p[1])});
                }
            }
        }
        CHECK(all <= base * (1.0 + 1e-12));
    }
}

TEST_CASE("expansion coefficients by both paths") {
    SUBCASE("a basis element expands to a delta") {
        for (const auto& bc : sample_bcs()) {
            const SpectralBasis b(bc);
            const VectorFunction F{ScalarFn([&](double x) { return b.phi(2, 1, x)[0]; }),
                                   ScalarFn([&](double x) { return b.phi(2, 1, x)[1]; })};
            for (const auto& c : {expand_direct(b, F, 8), expand_via_A_inverse(b, F, 8)})
                for (int k = -8; k <= 8; k += 2)
                    for (int nu = 1; nu <= 2; ++nu)
                        CHECK(std::abs(c.at(k, nu) - ((k == 2 && nu == 1) ? 1.0 : 0.0)) < 1e-10);
        }
    }
    SUBCASE("periodic exponential") {
        const SpectralBasis b(BoundaryCondition::periodic());
        const VectorFunction F{ScalarFn::exponential(1.0, 2.0), ScalarFn::constant(0.0)};
        CHECK(std::abs(expand_direct(b, F, 4).at(-2, 1) - 1.0) < 1e-13);
        CHECK(std::abs(expand_via_A_inverse(b, F, 4).at(-2, 1) - 1.0) < 1e-13);
    }
    SUBCASE("step functions") {
        std::mt19937_64 rng(31);
        for (const auto& bc : sample_bcs()) {
            const SpectralBasis b(bc);
            const VectorFunction F{ScalarFn::step(1.2, oracle::rand_c(rng), oracle::rand_c(rng)),
                                   ScalarFn::step(2.1, oracle::rand_c(rng), oracle::rand_c(rng))};
            const auto c1 = expand_direct(b, F, 24), c2 = expand_via_A_inverse(b, F, 24);
            for (int k = -24; k <= 24; k += 2)
                for (int nu = 1; nu <= 2; ++nu) CHECK(std::abs(c1.at(k, nu) - c2.at(k, nu)) < 1e-8);
        }
    }
}
