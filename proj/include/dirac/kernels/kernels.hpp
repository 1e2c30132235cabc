// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>
#include <string_view>

#include "dirac/common.hpp"

namespace dirac::kernels {

enum class Isa { Scalar, Avx2 };

/// Raw kernel entry points. Every ISA provides the same set.
struct KernelTable {
    // out[j] = sum_i (yre[i] + i*yim[i]) * exp(-i (m0 + j*step) x[i]),  j < count
    void (*phase_analysis)(const double* x, const double* yre, const double* yim, std::size_t n,
                           int m0, int step, std::size_t count, cplx* out);
    // out[i] = sum_j coeff[j] * exp(i (m0 + j*step) x[i]),  i < n
    void (*phase_synthesis)(const double* x, std::size_t n, const cplx* coeff, std::size_t count,
                            int m0, int step, cplx* out);
    // sum over even k with |k| <= kmax of 1 / |lambda - k|^2
    double (*lattice_inverse_square)(double re, double im, long kmax);
    // out[j] = sum_{i, k_i != n_j} xi[i] / (n_j - k_i), k_i = k0 + 2i, n_j = n0 + 2j
    void (*hilbert_even)(const cplx* xi, long k0, std::size_t n, long n0, std::size_t count,
                         cplx* out);
};

const KernelTable& table(Isa isa);

/// True when the AVX2 variant is compiled in and the CPU supports it.
bool avx2_available();

/// ISA chosen at first use. DIRAC_SPECTRA_SIMD=scalar|avx2|auto overrides detection.
Isa active_isa();
void set_active_isa(Isa isa);
std::string_view isa_name(Isa isa);

// Convenience wrappers using the active table.

void phase_analysis(std::span<const double> x, std::span<const double> yre,
                    std::span<const double> yim, int m0, int step, std::span<cplx> out);
void phase_synthesis(std::span<const double> x, std::span<const cplx> coeff, int m0, int step,
                     std::span<cplx> out);
double lattice_inverse_square(cplx lambda, long kmax);
void hilbert_even(std::span<const cplx> xi, long k0, long n0, std::span<cplx> out);

}  // namespace dirac::kernels
