// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <vector>

#include "kernels_impl.hpp"

namespace dirac::kernels::detail {
namespace {

void analysis(const double* x, const double* yre, const double* yim, std::size_t n, int m0,
              int step, std::size_t count, cplx* out) {
    std::vector<double> tr(n), ti(n), rr(n), ri(n);
    for (std::size_t i = 0; i < n; ++i) {
        rr[i] = std::cos(step * x[i]);
        ri[i] = -std::sin(step * x[i]);
    }
    for (std::size_t j = 0; j < count; ++j) {
        if (j % kReseed == 0) {
            const double m = m0 + static_cast<double>(j) * step;
            for (std::size_t i = 0; i < n; ++i) {
                tr[i] = std::cos(m * x[i]);
                ti[i] = -std::sin(m * x[i]);
            }
        }
        double sr = 0.0, si = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            sr += yre[i] * tr[i] - yim[i] * ti[i];
            si += yre[i] * ti[i] + yim[i] * tr[i];
            const double a = tr[i] * rr[i] - ti[i] * ri[i];
            ti[i] = tr[i] * ri[i] + ti[i] * rr[i];
            tr[i] = a;
        }
        out[j] = {sr, si};
    }
}

void synthesis(const double* x, std::size_t n, const cplx* coeff, std::size_t count, int m0,
               int step, cplx* out) {
    for (std::size_t i = 0; i < n; ++i) {
        const double rr = std::cos(step * x[i]), ri = std::sin(step * x[i]);
        double tr = 0.0, ti = 0.0, sr = 0.0, si = 0.0;
        for (std::size_t j = 0; j < count; ++j) {
            if (j % kReseed == 0) {
                const double m = m0 + static_cast<double>(j) * step;
                tr = std::cos(m * x[i]);
                ti = std::sin(m * x[i]);
            }
            sr += coeff[j].real() * tr - coeff[j].imag() * ti;
            si += coeff[j].real() * ti + coeff[j].imag() * tr;
            const double a = tr * rr - ti * ri;
            ti = tr * ri + ti * rr;
            tr = a;
        }
        out[i] = {sr, si};
    }
}

double lattice(double re, double im, long kmax) {
    const long kstart = -(kmax - (kmax & 1L));
    double s = 0.0;
    const double im2 = im * im;
    for (long k = kstart; k <= kmax; k += 2) {
        const double d = re - static_cast<double>(k);
        s += 1.0 / (d * d + im2);
    }
    return s;
}

void hilbert(const cplx* xi, long k0, std::size_t n, long n0, std::size_t count, cplx* out) {
    for (std::size_t j = 0; j < count; ++j) {
        const long nj = n0 + 2 * static_cast<long>(j);
        double sr = 0.0, si = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const long ki = k0 + 2 * static_cast<long>(i);
            if (ki == nj) continue;
            const double inv = 1.0 / static_cast<double>(nj - ki);
            sr += xi[i].real() * inv;
            si += xi[i].imag() * inv;
        }
        out[j] = {sr, si};
    }
}

}  // namespace

const KernelTable& scalar_table() {
    static const KernelTable t{analysis, synthesis, lattice, hilbert};
    return t;
}

}  // namespace dirac::kernels::detail
