// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "dirac/function.hpp"
#include "dirac/quadrature.hpp"

namespace dirac {

/// Finite sequence on the even lattice k = -K, -K+2, ..., K.
struct EvenSequence {
    int K = 0;
    std::vector<cplx> v;

    EvenSequence() = default;
    explicit EvenSequence(int k) : K(k), v(static_cast<std::size_t>(k + 1)) {}
    cplx& at(int k) { return v[even_index(k, K)]; }
    cplx at(int k) const { return (k < -K || k > K) ? cplx{} : v[even_index(k, K)]; }
};

enum class WeightKind { Sobolev, Log, Custom };

/// Weight Omega(k), defined on all integers.
struct WeightSeq {
    WeightKind kind = WeightKind::Sobolev;
    double param = 0.0;  // alpha for Sobolev, delta for Log
    std::function<double(long)> custom;

    static WeightSeq sobolev(double alpha) { return {WeightKind::Sobolev, alpha, {}}; }
    static WeightSeq log(double delta) { return {WeightKind::Log, delta, {}}; }
    static WeightSeq from(std::function<double(long)> f) { return {WeightKind::Custom, 0.0, std::move(f)}; }

    double operator()(long k) const;
    std::string name() const;
};

struct WeightAxioms {
    bool normalized = false;   // Omega(0) >= 1
    bool symmetric = false;
    bool monotone = false;
    double doubling_C = 0.0;   // max Omega(2k) / Omega(k) on the range
    double growth_C = 0.0;     // max Omega(k) / sqrt(1 + |k|)
    long kmax = 0;
};

/// Checks symmetry, monotonicity and fits the doubling/growth constants on even |k| <= kmax.
WeightAxioms check_weight_axioms(const WeightSeq& w, long kmax);

/// (H xi)_n = sum_{k != n} xi_k / (n - k) over even k, for even |n| <= K_out (K_out < 0: xi.K).
EvenSequence hilbert(const EvenSequence& xi, int K_out = -1);

/// ||xi||_Omega.
double weighted_norm(const EvenSequence& xi, const WeightSeq& w);

struct MuckenhouptReport {
    double sup = 0.0;
    long arg_k = 0, arg_n = 0;
    long k_lo = 0, k_hi = 0, n_max = 0;
    std::vector<std::pair<long, double>> running;  // (n bound, sup over n <= bound), doubling bounds
    double last_ratio = 0.0;   // sup(n_max) / sup(n_max / 2)
    bool stabilizes = false;   // last_ratio <= 1.10
    bool grows = false;        // last_ratio >= 1.25
    double case_b_max = 0.0;   // over -2n <= k <= n
    double case_b_bound = 0.0; // 8 / (1 - 2 alpha) for Sobolev alpha < 1/2, else 0
};

/// Max over k in [k_lo, k_hi], 0 <= n <= n_max of
///   (1/(n+1)) sum_{m=k}^{k+n} Omega^2(m) * (1/(n+1)) sum_{m=k}^{k+n} Omega^{-2}(m).
MuckenhouptReport muckenhoupt_sup(const WeightSeq& w, long k_lo, long k_hi, long n_max);
/// Default range k in [-2 n_max, n_max].
MuckenhouptReport muckenhoupt_sup(const WeightSeq& w, long n_max);

struct MultiplierReport {
    EvenSequence product;   // coefficients of f * g on |k| <= K_out
    double slope = 0.0;     // m = (g(pi) - g(0)) / pi
    double norm_in = 0.0;   // ||f^||_Omega
    double norm_out = 0.0;  // ||(f g)^||_Omega on the output range
    double ratio = 0.0;
};

/// Coefficients of f * g from f^: g = m x + g1 with g1 periodic; the linear part uses
/// c * f^ with c(0) = pi/2, c(k) = i/k, the rest a plain convolution with g1^.
MultiplierReport multiply_in_weighted_space(const EvenSequence& fhat, const ScalarFn& g, const WeightSeq& w,
                                            int K_out = -1, int K_g = 64, int nodes = kDefaultNodes);

/// (c * f^)(k) for |k| <= K_out, c the coefficients of x.
EvenSequence x_convolution(const EvenSequence& fhat, int K_out);

}  // namespace dirac
