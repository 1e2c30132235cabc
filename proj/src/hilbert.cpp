// SPDX-License-Identifier: Apache-2.0
#include "dirac/hilbert.hpp"

#include <algorithm>
#include <cmath>

#include "dirac/kernels/kernels.hpp"

namespace dirac {

double WeightSeq::operator()(long k) const {
    const double a = std::abs(static_cast<double>(k));
    switch (kind) {
        case WeightKind::Sobolev: return std::pow(1.0 + a, param);
        case WeightKind::Log: return std::pow(std::log(std::exp(1.0) + a), param);
        case WeightKind::Custom: return custom(k);
    }
    return 1.0;
}

std::string WeightSeq::name() const {
    switch (kind) {
        case WeightKind::Sobolev: return "sobolev";
        case WeightKind::Log: return "log";
        case WeightKind::Custom: return "custom";
    }
    return "custom";
}

WeightAxioms check_weight_axioms(const WeightSeq& w, long kmax) {
    WeightAxioms r;
    r.kmax = kmax;
    r.normalized = w(0) >= 1.0;
    r.symmetric = true;
    r.monotone = true;
    for (long k = 0; k <= kmax; k += 2) {
        const double o = w(k);
        if (w(-k) != o) r.symmetric = false;
        if (k + 2 <= kmax && w(k + 2) < o) r.monotone = false;
        if (k > 0) r.doubling_C = std::max(r.doubling_C, w(2 * k) / o);
        r.growth_C = std::max(r.growth_C, o / std::sqrt(1.0 + k));
    }
    return r;
}

EvenSequence hilbert(const EvenSequence& xi, int K_out) {
    if (K_out < 0) K_out = xi.K;
    EvenSequence out(K_out);
    kernels::hilbert_even(xi.v, -xi.K, -K_out, out.v);
    return out;
}

double weighted_norm(const EvenSequence& xi, const WeightSeq& w) {
    double s = 0.0;
    for (int k = -xi.K; k <= xi.K; k += 2) {
        const double o = w(k);
        s += std::norm(xi.at(k)) * o * o;
    }
    return std::sqrt(s);
}

MuckenhouptReport muckenhoupt_sup(const WeightSeq& w, long k_lo, long k_hi, long n_max) {
    MuckenhouptReport r;
    r.k_lo = k_lo;
    r.k_hi = k_hi;
    r.n_max = n_max;
    const long lo = k_lo, hi = k_hi + n_max;
    // Prefix sums over m in [lo, hi].
    std::vector<double> S(hi - lo + 2, 0.0), s(hi - lo + 2, 0.0);
    for (long m = lo; m <= hi; ++m) {
        const double o2 = w(m) * w(m);
        S[m - lo + 1] = S[m - lo] + o2;
        s[m - lo + 1] = s[m - lo] + 1.0 / o2;
    }
    std::vector<double> per_n(n_max + 1, 0.0);
    for (long n = 0; n <= n_max; ++n) {
        const double inv = 1.0 / ((n + 1.0) * (n + 1.0));
        double best = 0.0;
        for (long k = k_lo; k <= k_hi; ++k) {
            const long i = k - lo, j = k + n - lo + 1;
            const double p = (S[j] - S[i]) * (s[j] - s[i]) * inv;
            if (p > best) {
                best = p;
                if (p > r.sup) {
                    r.sup = p;
                    r.arg_k = k;
                    r.arg_n = n;
                }
            }
            if (k >= -2 * n && k <= n) r.case_b_max = std::max(r.case_b_max, p);
        }
        per_n[n] = best;
    }
    double run = 0.0, half = 0.0;
    for (long n = 0; n <= n_max; ++n) {
        run = std::max(run, per_n[n]);
        if (n == n_max / 2) half = run;
        if (n == 0 || (n & (n - 1)) == 0 || n == n_max) r.running.emplace_back(n, run);
    }
    // Growth over the last doubling of the window length.
    if (n_max >= 2) {
        r.last_ratio = half > 0 ? run / half : 0.0;
        r.stabilizes = r.last_ratio <= 1.10;
        r.grows = r.last_ratio >= 1.25;
    }
    if (w.kind == WeightKind::Sobolev && w.param < 0.5) r.case_b_bound = 8.0 / (1.0 - 2.0 * w.param);
    return r;
}

MuckenhouptReport muckenhoupt_sup(const WeightSeq& w, long n_max) { return muckenhoupt_sup(w, -2 * n_max, n_max, n_max); }

EvenSequence x_convolution(const EvenSequence& fhat, int K_out) {
    EvenSequence h = hilbert(fhat, K_out);
    for (int k = -K_out; k <= K_out; k += 2) h.at(k) = 0.5 * kPi * fhat.at(k) + kI * h.at(k);
    return h;
}

MultiplierReport multiply_in_weighted_space(const EvenSequence& fhat, const ScalarFn& g, const WeightSeq& w,
                                            int K_out, int K_g, int nodes) {
    if (K_out < 0) K_out = fhat.K + K_g;
    if (K_g % 2 != 0 || K_out % 2 != 0) throw ConfigError("multiply_in_weighted_space: K_g and K_out must be even");
    MultiplierReport r;
    r.slope = ((g(kPi) - g(0.0)) / kPi).real();
    const cplx m = (g(kPi) - g(0.0)) / kPi;
    const ScalarFn g1 = g + (-m) * ScalarFn::affine(0.0, 1.0);
    const std::vector<cplx> gh = fourier_coeffs([&](double x) { return g1(x); }, K_g, g.breakpoints(), nodes);
    r.product = x_convolution(fhat, K_out);
    for (auto& z : r.product.v) z *= m;
    for (int k = -K_out; k <= K_out; k += 2) {
        cplx acc{};
        for (int j = std::max(-fhat.K, k - K_g); j <= std::min(fhat.K, k + K_g); j += 2)
            acc += fhat.at(j) * gh[even_index(k - j, K_g)];
        r.product.at(k) += acc;
    }
    r.norm_in = weighted_norm(fhat, w);
    r.norm_out = weighted_norm(r.product, w);
    r.ratio = r.norm_in > 0 ? r.norm_out / r.norm_in : 0.0;
    return r;
}

}  // namespace dirac
