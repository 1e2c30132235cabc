// SPDX-License-Identifier: Apache-2.0
// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.
#include <immintrin.h>

#include <cmath>
#include <vector>

#include "kernels_impl.hpp"

namespace dirac::kernels::detail {
namespace {

inline double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

void analysis(const double* x, const double* yre, const double* yim, std::size_t n, int m0,
              int step, std::size_t count, cplx* out) {
    const std::size_t nv = n & ~std::size_t{3};
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
        __m256d sr = _mm256_setzero_pd(), si = _mm256_setzero_pd();
        for (std::size_t i = 0; i < nv; i += 4) {
            const __m256d a = _mm256_loadu_pd(yre + i), b = _mm256_loadu_pd(yim + i);
            const __m256d c = _mm256_loadu_pd(tr.data() + i), d = _mm256_loadu_pd(ti.data() + i);
            sr = _mm256_fmadd_pd(a, c, sr);
            sr = _mm256_fnmadd_pd(b, d, sr);
            si = _mm256_fmadd_pd(a, d, si);
            si = _mm256_fmadd_pd(b, c, si);
            const __m256d e = _mm256_loadu_pd(rr.data() + i), f = _mm256_loadu_pd(ri.data() + i);
            const __m256d nr = _mm256_fmsub_pd(c, e, _mm256_mul_pd(d, f));
            const __m256d ni = _mm256_fmadd_pd(c, f, _mm256_mul_pd(d, e));
            _mm256_storeu_pd(tr.data() + i, nr);
            _mm256_storeu_pd(ti.data() + i, ni);
        }
        double r = hsum(sr), im = hsum(si);
        for (std::size_t i = nv; i < n; ++i) {
            r += yre[i] * tr[i] - yim[i] * ti[i];
            im += yre[i] * ti[i] + yim[i] * tr[i];
            const double a = tr[i] * rr[i] - ti[i] * ri[i];
            ti[i] = tr[i] * ri[i] + ti[i] * rr[i];
            tr[i] = a;
        }
        out[j] = {r, im};
    }
}

void synthesis(const double* x, std::size_t n, const cplx* coeff, std::size_t count, int m0,
               int step, cplx* out) {
    const std::size_t nv = n & ~std::size_t{3};
    alignas(32) double buf[4][4];
    for (std::size_t i = 0; i < nv; i += 4) {
        for (int l = 0; l < 4; ++l) {
            buf[0][l] = std::cos(step * x[i + l]);
            buf[1][l] = std::sin(step * x[i + l]);
        }
        const __m256d rr = _mm256_load_pd(buf[0]), ri = _mm256_load_pd(buf[1]);
        __m256d tr = _mm256_setzero_pd(), ti = _mm256_setzero_pd();
        __m256d sr = _mm256_setzero_pd(), si = _mm256_setzero_pd();
        for (std::size_t j = 0; j < count; ++j) {
            if (j % kReseed == 0) {
                const double m = m0 + static_cast<double>(j) * step;
                for (int l = 0; l < 4; ++l) {
                    buf[2][l] = std::cos(m * x[i + l]);
                    buf[3][l] = std::sin(m * x[i + l]);
                }
                tr = _mm256_load_pd(buf[2]);
                ti = _mm256_load_pd(buf[3]);
            }
            const __m256d cr = _mm256_set1_pd(coeff[j].real());
            const __m256d ci = _mm256_set1_pd(coeff[j].imag());
            sr = _mm256_fmadd_pd(cr, tr, sr);
            sr = _mm256_fnmadd_pd(ci, ti, sr);
            si = _mm256_fmadd_pd(cr, ti, si);
            si = _mm256_fmadd_pd(ci, tr, si);
            const __m256d nr = _mm256_fmsub_pd(tr, rr, _mm256_mul_pd(ti, ri));
            ti = _mm256_fmadd_pd(tr, ri, _mm256_mul_pd(ti, rr));
            tr = nr;
        }
        _mm256_store_pd(buf[0], sr);
        _mm256_store_pd(buf[1], si);
        for (int l = 0; l < 4; ++l) out[i + l] = {buf[0][l], buf[1][l]};
    }
    if (nv < n) scalar_table().phase_synthesis(x + nv, n - nv, coeff, count, m0, step, out + nv);
}

double lattice(double re, double im, long kmax) {
    const long kstart = -(kmax - (kmax & 1L));
    const long nterms = (kmax - (kmax & 1L)) + 1;  // even k in [-kmax, kmax]
    const long nv = nterms & ~3L;
    const __m256d vre = _mm256_set1_pd(re);
    const __m256d vim2 = _mm256_set1_pd(im * im);
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d eight = _mm256_set1_pd(8.0);
    __m256d k = _mm256_set_pd(kstart + 6.0, kstart + 4.0, kstart + 2.0, static_cast<double>(kstart));
    __m256d acc = _mm256_setzero_pd();
    for (long t = 0; t < nv; t += 4) {
        const __m256d d = _mm256_sub_pd(vre, k);
        acc = _mm256_add_pd(acc, _mm256_div_pd(one, _mm256_fmadd_pd(d, d, vim2)));
        k = _mm256_add_pd(k, eight);
    }
    double s = hsum(acc);
    for (long t = nv; t < nterms; ++t) {
        const double d = re - static_cast<double>(kstart + 2 * t);
        s += 1.0 / (d * d + im * im);
    }
    return s;
}

void hilbert(const cplx* xi, long k0, std::size_t n, long n0, std::size_t count, cplx* out) {
    // xi is interleaved (re, im); process two complex entries per vector.
    const double* p = reinterpret_cast<const double*>(xi);
    for (std::size_t j = 0; j < count; ++j) {
        const long nj = n0 + 2 * static_cast<long>(j);
        __m256d acc = _mm256_setzero_pd();
        std::size_t i = 0;
        for (; i + 1 < n; i += 2) {
            const long k1 = k0 + 2 * static_cast<long>(i);
            const long k2 = k1 + 2;
            const double w1 = (k1 == nj) ? 0.0 : 1.0 / static_cast<double>(nj - k1);
            const double w2 = (k2 == nj) ? 0.0 : 1.0 / static_cast<double>(nj - k2);
            const __m256d w = _mm256_set_pd(w2, w2, w1, w1);
            acc = _mm256_fmadd_pd(_mm256_loadu_pd(p + 2 * i), w, acc);
        }
        alignas(32) double b[4];
        _mm256_store_pd(b, acc);
        double sr = b[0] + b[2], si = b[1] + b[3];
        for (; i < n; ++i) {
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

const KernelTable& avx2_table() {
    static const KernelTable t{analysis, synthesis, lattice, hilbert};
    return t;
}

}  // namespace dirac::kernels::detail
