// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <random>
#include <vector>

#include "dirac/kernels/kernels.hpp"

using namespace dirac;
using namespace dirac::kernels;

namespace {

struct Data {
    std::vector<double> x, yre, yim;
    std::vector<cplx> coeff;
};

Data make_data(std::size_t n, std::size_t count, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Data d;
    for (std::size_t i = 0; i < n; ++i) {
        d.x.push_back(kPi * (0.5 + 0.5 * u(rng)));
        d.yre.push_back(u(rng));
        d.yim.push_back(u(rng));
    }
    for (std::size_t j = 0; j < count; ++j) d.coeff.emplace_back(u(rng), u(rng));
    return d;
}

std::vector<Isa> isas() {
    std::vector<Isa> v{Isa::Scalar};
    if (avx2_available()) v.push_back(Isa::Avx2);
    return v;
}

double max_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

}  // namespace

TEST_CASE("phase analysis against the naive sum") {
    // odd sizes exercise the vector tails
    for (std::size_t n : {1u, 7u, 64u, 1001u}) {
        const Data d = make_data(n, 0, 1 + n);
        const int m0 = -20, step = 2;
        const std::size_t count = 21;
        std::vector<cplx> ref(count);
        for (std::size_t j = 0; j < count; ++j)
            for (std::size_t i = 0; i < n; ++i)
                ref[j] += cplx(d.yre[i], d.yim[i]) * std::exp(-kI * double(m0 + int(j) * step) * d.x[i]);
        for (Isa isa : isas()) {
            std::vector<cplx> out(count);
            table(isa).phase_analysis(d.x.data(), d.yre.data(), d.yim.data(), n, m0, step, count, out.data());
            CHECK(max_diff(out, ref) < 1e-11 * double(n));
        }
    }
}

TEST_CASE("phase synthesis against the naive sum") {
    for (std::size_t n : {3u, 16u, 333u}) {
        const std::size_t count = 17;
        const Data d = make_data(n, count, 100 + n);
        const int m0 = -16, step = 2;
        std::vector<cplx> ref(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < count; ++j)
                ref[i] += d.coeff[j] * std::exp(kI * double(m0 + int(j) * step) * d.x[i]);
        for (Isa isa : isas()) {
            std::vector<cplx> out(n);
            table(isa).phase_synthesis(d.x.data(), n, d.coeff.data(), count, m0, step, out.data());
            CHECK(max_diff(out, ref) < 1e-12 * double(count));
        }
    }
}

TEST_CASE("lattice inverse square sum") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    for (int i = 0; i < 20; ++i) {
        const double re = u(rng), im = 0.1 * u(rng) + 0.05;
        double ref = 0.0;
        for (long k = -1000; k <= 1000; k += 2) ref += 1.0 / ((re - k) * (re - k) + im * im);
        for (Isa isa : isas()) CHECK(std::abs(table(isa).lattice_inverse_square(re, im, 1000) - ref) < 1e-12 * ref);
    }
}

TEST_CASE("discrete Hilbert kernel") {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const std::size_t n = 37, count = 45;
    std::vector<cplx> xi(n);
    for (auto& z : xi) z = {u(rng), u(rng)};
    const long k0 = -36, n0 = -44;
    std::vector<cplx> ref(count);
    for (std::size_t j = 0; j < count; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            const long k = k0 + 2 * long(i), m = n0 + 2 * long(j);
            if (k != m) ref[j] += xi[i] / double(m - k);
        }
    for (Isa isa : isas()) {
        std::vector<cplx> out(count);
        table(isa).hilbert_even(xi.data(), k0, n, n0, count, out.data());
        CHECK(max_diff(out, ref) < 1e-13);
    }
}

TEST_CASE("runtime selection") {
    const Isa saved = active_isa();
    set_active_isa(Isa::Scalar);
    CHECK(active_isa() == Isa::Scalar);
    CHECK(isa_name(Isa::Scalar) == "scalar");
    const double a = lattice_inverse_square(cplx(0.3, 0.2), 5000);
    if (avx2_available()) {
        set_active_isa(Isa::Avx2);
        CHECK(active_isa() == Isa::Avx2);
        CHECK(std::abs(lattice_inverse_square(cplx(0.3, 0.2), 5000) - a) < 1e-13 * a);
    }
    set_active_isa(saved);
}
