// SPDX-License-Identifier: Apache-2.0
#include "dirac/potential.hpp"

#include <algorithm>
#include <cmath>

namespace dirac {

std::vector<double> PotentialSpec::breakpoints() const {
    return merge_breakpoints({P.breakpoints(), Q.breakpoints()}, 0.0, kPi);
}

double potential_norm(const PotentialSpec& v, int nodes) {
    const cplx s = mean_integral([&](double x) { return std::norm(v.P(x)) + std::norm(v.Q(x)); },
                                 v.breakpoints(), nodes);
    return std::sqrt(s.real());
}

cplx MatrixRep::w(int eta, int nu, int m) const {
    if (m < -Mw_ || m > Mw_ || (m & 1)) throw NumericalError("MatrixRep::w: index out of range");
    return w_[2 * (eta - 1) + (nu - 1)][even_index(m, Mw_)];
}

double MatrixRep::r(int m) const {
    double best = 0.0;
    for (const auto& t : w_) best = std::max(best, std::abs(t[even_index(m, Mw_)]));
    return best;
}

double MatrixRep::r_tail(int m0) const {
    double s = 0.0;
    for (int m = -Mw_; m <= Mw_; m += 2)
        if (std::abs(m) >= m0) s += r(m) * r(m);
    return std::sqrt(s);
}

MatrixRep matrix_rep(const SpectralBasis& basis, const PotentialSpec& v, int Mw, int nodes) {
    if (Mw < 0 || (Mw & 1)) throw NumericalError("matrix_rep: Mw must be even and non-negative");
    nodes = nodes_for(Mw, nodes);
    const auto bps = v.breakpoints();
    std::array<std::vector<cplx>, 4> w;
    for (int eta = 1; eta <= 2; ++eta)
        for (int nu = 1; nu <= 2; ++nu) {
            auto gP = [&](double x) {
                return basis.factors(nu, x)[1] * std::conj(basis.dual_factors(eta, x)[0]) * v.P(x);
            };
            auto hQ = [&](double x) {
                return basis.factors(nu, x)[0] * std::conj(basis.dual_factors(eta, x)[1]) * v.Q(x);
            };
            const auto p = fourier_coeffs(gP, Mw, bps, nodes);
            const auto q = fourier_coeffs(hQ, Mw, bps, nodes);
            auto& out = w[2 * (eta - 1) + (nu - 1)];
            out.resize(Mw + 1);
            for (int m = -Mw; m <= Mw; m += 2)
                out[even_index(m, Mw)] = p[even_index(-m, Mw)] + q[even_index(m, Mw)];
        }
    return MatrixRep(Mw, std::move(w));
}

cplx matrix_entry_direct(const SpectralBasis& basis, const PotentialSpec& v, int j, int eta, int k,
                         int nu, int nodes) {
    auto integrand = [&](double x) {
        const Value2 ph = basis.phi(k, nu, x);
        const Value2 du = basis.phi_tilde(j, eta, x);
        // (V phi)_1 = P phi_2, (V phi)_2 = Q phi_1
        return v.P(x) * ph[1] * std::conj(du[0]) + v.Q(x) * ph[0] * std::conj(du[1]);
    };
    return mean_integral(integrand, v.breakpoints(), nodes_for(std::abs(j) + std::abs(k), nodes));
}

PotentialSpec operator+(const PotentialSpec& a, const PotentialSpec& b) {
    return {a.P + b.P, a.Q + b.Q, std::min(a.smoothness, b.smoothness)};
}

PotentialSpec operator*(cplx s, const PotentialSpec& a) {
    return {s * a.P, s * a.Q, a.smoothness};
}

}  // namespace dirac
