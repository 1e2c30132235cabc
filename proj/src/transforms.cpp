// SPDX-License-Identifier: Apache-2.0
#include "dirac/transforms.hpp"

#include <algorithm>
#include <cmath>

#include "dirac/basis.hpp"
#include "dirac/expansion.hpp"
#include "dirac/galerkin.hpp"

namespace dirac {

VariableMap::VariableMap(std::function<double(double)> rho, double x1, double x2,
                         const std::vector<double>& breakpoints, int nodes)
    : rho_(std::move(rho)), x1_(x1), x2_(x2) {
    if (!(x2 > x1)) throw ConfigError("weighted problem: x2 must exceed x1");
    const int panels = std::max(16, nodes / kPanelOrder);
    for (int i = 0; i <= 4 * panels; ++i) {
        const double x = x1 + (x2 - x1) * i / (4.0 * panels);
        const double r = rho_(x);
        if (!(r > 0.0) || !std::isfinite(r)) throw ConfigError("weighted problem: rho must be positive and finite");
    }
    auto f = [r = rho_](double x) { return cplx(r(x), 0.0); };
    cum_ = CumulativeIntegral(f, x1, x2, breakpoints, panels);
    K_ = kPi / cum_.total().real();
    const int n = 4 * panels;
    for (int i = 0; i <= n; ++i) {
        const double x = x1 + (x2 - x1) * i / n;
        xs_.push_back(x);
        ts_.push_back(t_of_x(x));
    }
    ts_.front() = 0.0;
    ts_.back() = kPi;
}

double VariableMap::t_of_x(double x) const { return K_ * cum_(x).real(); }

double VariableMap::x_of_t(double t) const {
    if (t <= 0.0) return x1_;
    if (t >= kPi) return x2_;
    const auto it = std::upper_bound(ts_.begin(), ts_.end(), t);
    std::size_t i = static_cast<std::size_t>(it - ts_.begin());
    i = std::clamp<std::size_t>(i, 1, ts_.size() - 1);
    double lo = xs_[i - 1], hi = xs_[i];
    double x = lo + (hi - lo) * (t - ts_[i - 1]) / (ts_[i] - ts_[i - 1]);
    // Safeguarded Newton: t'(x) = K rho(x).
    for (int iter = 0; iter < 60; ++iter) {
        const double g = t_of_x(x) - t;
        if (g > 0) hi = x; else lo = x;
        const double d = K_ * rho_(x);
        double xn = x - g / d;
        if (!(xn > lo && xn < hi)) xn = 0.5 * (lo + hi);
        if (std::abs(xn - x) <= 1e-15 * (1.0 + std::abs(x))) return xn;
        x = xn;
    }
    return x;
}

CanonicalProblem change_of_variable(const WeightedProblem& prob, int nodes) {
    CanonicalProblem c;
    c.map = VariableMap(prob.rho, prob.x1, prob.x2, prob.breakpoints, nodes);
    c.bc = prob.bc;
    for (double b : prob.breakpoints)
        if (b > prob.x1 && b < prob.x2) c.breakpoints.push_back(c.map.t_of_x(b));
    const VariableMap map = c.map;
    const auto rho = prob.rho;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            const ScalarFn Tij = prob.T[i][j];
            std::vector<Jump> jumps;
            for (const auto& jp : Tij.jumps())
                if (jp.x > prob.x1 && jp.x < prob.x2) {
                    const double s = map.K() * rho(jp.x);
                    jumps.push_back({map.t_of_x(jp.x), jp.left / s, jp.right / s});
                }
            c.S[i][j] = ScalarFn(
                [map, rho, Tij](double t) {
                    const double x = map.x_of_t(t);
                    return Tij(x) / (map.K() * rho(x));
                },
                std::move(jumps));
        }
    return c;
}

Value2 GaugeData::forward(double t, Value2 u) const {
    return {std::exp(-kI * s1(t)) * u[0], std::exp(kI * s2(t)) * u[1]};
}

Value2 GaugeData::inverse(double t, Value2 u) const {
    return {std::exp(kI * s1(t)) * u[0], std::exp(-kI * s2(t)) * u[1]};
}

GaugeData gauge_reduce(const Matrix2Fn& S, const BoundaryCondition& bc,
                       const std::vector<double>& breakpoints, int panels) {
    GaugeData g;
    const ScalarFn S11 = S[0][0], S22 = S[1][1], S12 = S[0][1], S21 = S[1][0];
    g.s1 = CumulativeIntegral([S11](double t) { return S11(t); }, 0.0, kPi, breakpoints, panels);
    g.s2 = CumulativeIntegral([S22](double t) { return S22(t); }, 0.0, kPi, breakpoints, panels);
    g.s1_pi = g.s1.total();
    g.s2_pi = g.s2.total();
    const CumulativeIntegral s1 = g.s1, s2 = g.s2;
    auto phase = [s1, s2](double t) { return std::exp(-kI * (s1(t) + s2(t))); };
    std::vector<Jump> jp, jq;
    for (const auto& j : S12.jumps()) jp.push_back({j.x, j.left * phase(j.x), j.right * phase(j.x)});
    for (const auto& j : S21.jumps()) jq.push_back({j.x, j.left / phase(j.x), j.right / phase(j.x)});
    g.v.P = ScalarFn([S12, phase](double t) { return S12(t) * phase(t); }, std::move(jp));
    g.v.Q = ScalarFn([S21, phase](double t) { return S21(t) / phase(t); }, std::move(jq));
    g.v.smoothness = Smoothness::L2;
    g.bc_raw = bc;
    g.bc_tilde = {bc.a, bc.b * std::exp(kI * g.s1_pi), bc.c * std::exp(kI * g.s2_pi),
                  bc.d * std::exp(kI * (g.s1_pi + g.s2_pi))};
    g.class_raw = classify_bc_detailed(bc);
    g.class_tilde = classify_bc_detailed(g.bc_tilde);
    return g;
}

BoundaryCondition adjoint_bc(const BoundaryCondition& bc) {
    if (classify_bc(bc) == BcClass::NotRegular)
        throw NumericalError("adjoint_bc: boundary conditions are not regular");
    const cplx D = std::conj(bc.det());
    return {-std::conj(bc.d) / D, std::conj(bc.c) / D, std::conj(bc.b) / D, -std::conj(bc.a) / D};
}

bool is_selfadjoint(const BoundaryCondition& bc, const Matrix2Fn& T, double x1, double x2, double tol,
                    int samples) {
    if (classify_bc(bc) == BcClass::NotRegular) return false;
    const BoundaryCondition adj = adjoint_bc(bc);
    const double s = std::sqrt(bc.scale());
    if (std::abs(adj.a - bc.a) > tol * s || std::abs(adj.b - bc.b) > tol * s ||
        std::abs(adj.c - bc.c) > tol * s || std::abs(adj.d - bc.d) > tol * s)
        return false;
    for (int i = 0; i < samples; ++i) {
        const double x = x1 + (x2 - x1) * (i + 0.5) / samples;
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c)
                if (std::abs(T[r][c](x) - std::conj(T[c][r](x))) > tol * (1.0 + std::abs(T[r][c](x))))
                    return false;
    }
    return true;
}

EndpointLimits endpoint_limits_general(const BoundaryCondition& bc, const Eigen::Vector4cd& s) {
    const cplx D = bc.det();
    if (std::abs(D) == 0.0) throw NumericalError("endpoint_limits_general: bc - ad = 0");
    const cplx f1a = s(0), f1b = s(1), f2a = s(2), f2b = s(3);
    EndpointLimits r;
    r.at_x1 = {0.5 * (f1a - bc.b * f1b - bc.a * f2a), 0.5 * (bc.d / D * f1a + f2a - bc.b / D * f2b)};
    r.at_x2 = {0.5 * (-bc.c / D * f1a + f1b + bc.a / D * f2b), 0.5 * (-bc.d * f1b - bc.c * f2a + f2b)};
    return r;
}

EndpointLimits endpoint_limits_conjugated(const BoundaryCondition& bc, cplx s1_pi, cplx s2_pi,
                                          const Eigen::Vector4cd& s) {
    const cplx e1 = std::exp(kI * s1_pi), e2 = std::exp(kI * s2_pi);
    const BoundaryCondition bt{bc.a, bc.b * e1, bc.c * e2, bc.d * e1 * e2};
    const Eigen::Vector4cd u(s(0), s(1) / e1, s(2), s(3) * e2);
    const Eigen::Vector4cd r = 0.5 * (transition_matrix(bt) * u);
    EndpointLimits out;
    out.at_x1 = {r(0), r(2)};
    out.at_x2 = {r(1) * e1, r(3) / e2};
    return out;
}

std::pair<cplx, cplx> gauge_phases(const WeightedProblem& prob, int nodes) {
    const QuadRule q = make_rule(prob.x1, prob.x2, prob.breakpoints, nodes);
    cplx a{}, b{};
    for (std::size_t i = 0; i < q.x.size(); ++i) {
        a += q.w[i] * prob.T[0][0](q.x[i]);
        b += q.w[i] * prob.T[1][1](q.x[i]);
    }
    return {a, b};
}

std::vector<cplx> weighted_spectrum(const WeightedProblem& prob, int M, int nodes) {
    const CanonicalProblem c = change_of_variable(prob, nodes);
    const GaugeData g = gauge_reduce(c.S, c.bc, c.breakpoints);
    if (g.class_tilde.cls == BcClass::NotRegular)
        throw NumericalError("weighted_spectrum: transformed boundary conditions are not regular");
    const SpectralBasis basis(g.bc_tilde);
    auto eig = spectrum(build_truncated(basis, g.v, M, nodes));
    for (auto& z : eig) z *= c.map.K();
    return eig;
}

}  // namespace dirac
