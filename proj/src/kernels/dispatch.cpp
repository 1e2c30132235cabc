// SPDX-License-Identifier: Apache-2.0
#include <atomic>
#include <cstdlib>
#include <string>

#include "kernels_impl.hpp"

namespace dirac::kernels {
namespace {

Isa detect() {
    if (const char* env = std::getenv("DIRAC_SPECTRA_SIMD")) {
        const std::string v = env;
        if (v == "scalar") return Isa::Scalar;
        if (v == "avx2" && avx2_available()) return Isa::Avx2;
    }
    return avx2_available() ? Isa::Avx2 : Isa::Scalar;
}

std::atomic<int>& current() {
    static std::atomic<int> isa{static_cast<int>(detect())};
    return isa;
}

}  // namespace

bool avx2_available() {
#if defined(DIRAC_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    static const bool ok = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    return ok;
#else
    return false;
#endif
}

const KernelTable& table(Isa isa) {
#ifdef DIRAC_HAVE_AVX2
    if (isa == Isa::Avx2 && avx2_available()) return detail::avx2_table();
#endif
    (void)isa;
    return detail::scalar_table();
}

Isa active_isa() { return static_cast<Isa>(current().load()); }

void set_active_isa(Isa isa) {
    if (isa == Isa::Avx2 && !avx2_available()) isa = Isa::Scalar;
    current().store(static_cast<int>(isa));
}

std::string_view isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

void phase_analysis(std::span<const double> x, std::span<const double> yre,
                    std::span<const double> yim, int m0, int step, std::span<cplx> out) {
    table(active_isa()).phase_analysis(x.data(), yre.data(), yim.data(), x.size(), m0, step,
                                       out.size(), out.data());
}

void phase_synthesis(std::span<const double> x, std::span<const cplx> coeff, int m0, int step,
                     std::span<cplx> out) {
    table(active_isa()).phase_synthesis(x.data(), x.size(), coeff.data(), coeff.size(), m0, step,
                                        out.data());
}

double lattice_inverse_square(cplx lambda, long kmax) {
    return table(active_isa()).lattice_inverse_square(lambda.real(), lambda.imag(), kmax);
}

void hilbert_even(std::span<const cplx> xi, long k0, long n0, std::span<cplx> out) {
    table(active_isa()).hilbert_even(xi.data(), k0, xi.size(), n0, out.size(), out.data());
}

}  // namespace dirac::kernels
