// SPDX-License-Identifier: Apache-2.0
#include "dirac/basis.hpp"

#include "dirac/kernels/kernels.hpp"

namespace dirac {

CoefficientTable CoefficientTable::truncated(int N) const {
    if (N > M) N = M;
    CoefficientTable t(N);
    for (int k = -N; k <= N; k += 2) {
        t.at(k, 1) = at(k, 1);
        t.at(k, 2) = at(k, 2);
    }
    return t;
}

SpectralBasis::SpectralBasis(const BoundaryCondition& bc, double tol)
    : bc_(bc), sp_(spectral_params(bc, tol)) {}

Value2 SpectralBasis::factors(int nu, double x) const {
    const cplx t = sp_.tau(nu);
    const cplx e1 = std::exp(kI * t * (kPi - x)), e2 = std::exp(kI * t * x);
    const auto& al = sp_.alpha;
    if (nu == 1) return {al(0) * e1, al(1) * e2};
    const auto& be = sp_.beta;
    if (sp_.degenerate()) return {(be(0) - al(0) * x) * e1, (be(1) + al(1) * x) * e2};
    return {be(0) * e1, be(1) * e2};
}

Value2 SpectralBasis::dual_factors(int nu, double x) const {
    const cplx t = std::conj(sp_.tau(nu));
    const cplx e1 = std::exp(kI * t * (kPi - x)), e2 = std::exp(kI * t * x);
    if (sp_.degenerate()) {
        const cplx inv = 1.0 / std::conj(sp_.delta);
        const auto al = sp_.alpha.conjugate().eval();
        const auto be = sp_.beta.conjugate().eval();
        // (A^{-1})^* applied to the exponential basis.
        if (nu == 1) return {inv * (be(1) + al(1) * (kPi - x)) * e1, inv * (al(0) * (kPi - x) - be(0)) * e2};
        return {-inv * al(1) * e1, inv * al(0) * e2};
    }
    const Eigen::Vector2cd p = (nu == 1 ? sp_.alpha_prime : sp_.beta_prime).conjugate();
    return {p(0) * e1, p(1) * e2};
}

Value2 SpectralBasis::phi(int k, int nu, double x) const {
    if (k & 1) throw ConfigError("phi: k must be even");
    const Value2 f = factors(nu, x);
    const cplx e = std::exp(kI * (double(k) * x));
    return {f[0] / e, f[1] * e};
}

Value2 SpectralBasis::phi_tilde(int k, int nu, double x) const {
    if (k & 1) throw ConfigError("phi_tilde: k must be even");
    const Value2 f = dual_factors(nu, x);
    const cplx e = std::exp(kI * (double(k) * x));
    return {f[0] / e, f[1] * e};
}

Value2 SpectralBasis::apply_A(double x, Value2 r, Value2 u) const {
    const Value2 p1 = factors(1, x), p2 = factors(2, x);
    return {p1[0] * r[0] + p2[0] * r[1], p1[1] * u[0] + p2[1] * u[1]};
}

Value2 SpectralBasis::apply_A_inv(double x, Value2 r, Value2 u) const {
    const cplx Fr = r[0], G = u[1];
    if (sp_.degenerate()) {
        const auto& al = sp_.alpha;
        const auto& be = sp_.beta;
        const cplx e = std::exp(-kI * sp_.tau1 * x) / sp_.delta;
        return {((be(1) + al(1) * x) * Fr - (be(0) - kPi * al(0) + al(0) * x) * G) * e,
                (-al(1) * Fr + al(0) * G) * e};
    }
    const auto& ap = sp_.alpha_prime;
    const auto& bp = sp_.beta_prime;
    return {std::exp(-kI * sp_.tau1 * x) * (ap(0) * Fr + ap(1) * G),
            std::exp(-kI * sp_.tau2 * x) * (bp(0) * Fr + bp(1) * G)};
}

VectorFunction reflect_mix(const VectorFunction& in,
                           std::function<Value2(double, Value2, Value2)> op) {
    std::vector<double> bps = in.breakpoints();
    std::vector<double> refl;
    for (double b : bps) refl.push_back(kPi - b);
    const auto pts = merge_breakpoints({bps, refl}, 0.0, kPi);
    std::vector<Jump> j1, j2;
    for (double b : pts) {
        const Value2 left = op(b, in.limit(kPi - b, 1), in.limit(b, -1));
        const Value2 right = op(b, in.limit(kPi - b, -1), in.limit(b, 1));
        j1.push_back({b, left[0], right[0]});
        j2.push_back({b, left[1], right[1]});
    }
    auto eval = [in, op](double x) { return op(x, in(kPi - x), in(x)); };
    return {ScalarFn([eval](double x) { return eval(x)[0]; }, std::move(j1)),
            ScalarFn([eval](double x) { return eval(x)[1]; }, std::move(j2))};
}

VectorFunction SpectralBasis::apply_A(const VectorFunction& u) const {
    return reflect_mix(u, [self = *this](double x, Value2 r, Value2 v) { return self.apply_A(x, r, v); });
}

VectorFunction SpectralBasis::apply_A_inv(const VectorFunction& F) const {
    return reflect_mix(F, [self = *this](double x, Value2 r, Value2 v) { return self.apply_A_inv(x, r, v); });
}

CoefficientTable expand_direct(const SpectralBasis& basis, const VectorFunction& F, int M,
                               int nodes, QuadratureKind kind) {
    nodes = nodes_for(M, nodes);
    const auto bps = F.breakpoints();
    CoefficientTable t(M);
    for (int nu = 1; nu <= 2; ++nu) {
        // <F, phi~_k> = hat(F1 conj(u~))(-k) + hat(F2 conj(v~))(k)
        auto h1 = [&](double x) { return F.f(x) * std::conj(basis.dual_factors(nu, x)[0]); };
        auto h2 = [&](double x) { return F.g(x) * std::conj(basis.dual_factors(nu, x)[1]); };
        const auto a = fourier_coeffs(h1, M, bps, nodes, kind);
        const auto b = fourier_coeffs(h2, M, bps, nodes, kind);
        for (int k = -M; k <= M; k += 2)
            t.at(k, nu) = a[even_index(-k, M)] + b[even_index(k, M)];
    }
    return t;
}

CoefficientTable expand_via_A_inverse(const SpectralBasis& basis, const VectorFunction& F, int M,
                                      int nodes, QuadratureKind kind) {
    nodes = nodes_for(M, nodes);
    const VectorFunction u = basis.apply_A_inv(F);
    const auto bps = u.breakpoints();
    const auto a = fourier_coeffs([&](double x) { return u.f(x); }, M, bps, nodes, kind);
    const auto b = fourier_coeffs([&](double x) { return u.g(x); }, M, bps, nodes, kind);
    CoefficientTable t(M);
    t.c1 = a;
    t.c2 = b;
    return t;
}

Eigen::MatrixXcd biorthogonality_gram(const SpectralBasis& basis, int M, int nodes,
                                      QuadratureKind kind) {
    const int K = 2 * M;
    nodes = nodes_for(K, nodes);
    const int n = M + 1;
    Eigen::MatrixXcd G(2 * n, 2 * n);
    for (int eta = 1; eta <= 2; ++eta)
        for (int nu = 1; nu <= 2; ++nu) {
            // <phi_k^nu, phi~_j^eta> = hat(u conj(u~))(k - j) + hat(v conj(v~))(j - k)
            auto h1 = [&](double x) {
                return basis.factors(nu, x)[0] * std::conj(basis.dual_factors(eta, x)[0]);
            };
            auto h2 = [&](double x) {
                return basis.factors(nu, x)[1] * std::conj(basis.dual_factors(eta, x)[1]);
            };
            const auto a = fourier_coeffs(h1, K, {}, nodes, kind);
            const auto b = fourier_coeffs(h2, K, {}, nodes, kind);
            for (int j = -M; j <= M; j += 2)
                for (int k = -M; k <= M; k += 2)
                    G(2 * even_index(j, M) + eta - 1, 2 * even_index(k, M) + nu - 1) =
                        a[even_index(k - j, K)] + b[even_index(j - k, K)];
        }
    return G;
}

std::vector<Value2> synthesize(const SpectralBasis& basis, const CoefficientTable& c,
                               const std::vector<double>& xs) {
    const int M = c.M;
    std::vector<Value2> out(xs.size(), Value2{});
    std::vector<cplx> s1(xs.size()), s2(xs.size());
    for (int nu = 1; nu <= 2; ++nu) {
        const auto& coef = nu == 1 ? c.c1 : c.c2;
        // sum_k c_k e^{-ikx}: exponent M, M-2, ..., -M with coefficients in k order.
        kernels::phase_synthesis(xs, coef, M, -2, s1);
        kernels::phase_synthesis(xs, coef, -M, 2, s2);
        for (std::size_t i = 0; i < xs.size(); ++i) {
            const Value2 f = basis.factors(nu, xs[i]);
            out[i][0] += f[0] * s1[i];
            out[i][1] += f[1] * s2[i];
        }
    }
    return out;
}

}  // namespace dirac
