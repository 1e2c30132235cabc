// SPDX-License-Identifier: Apache-2.0
#include "dirac/expansion.hpp"

#include <algorithm>
#include <cmath>

#include "dirac/kernels/kernels.hpp"
#include "dirac/parallel.hpp"

namespace dirac {

Eigen::Matrix4cd transition_matrix(const BoundaryCondition& bc) {
    if (classify_bc(bc) == BcClass::NotRegular)
        throw NumericalError("transition_matrix: boundary conditions are not regular");
    const cplx D = bc.det();
    Eigen::Matrix4cd m;
    m << 1.0, -bc.b, -bc.a, 0.0,
         -bc.c / D, 1.0, 0.0, bc.a / D,
         bc.d / D, 0.0, 1.0, -bc.b / D,
         0.0, -bc.d, -bc.c, 1.0;
    return m;
}

Eigen::Vector4cd boundary_vector(const VectorFunction& F) {
    return {F.f.limit(0.0, 1), F.f.limit(kPi, -1), F.g.limit(0.0, 1), F.g.limit(kPi, -1)};
}

Value2 endpoint_limit(const BoundaryCondition& bc, const Eigen::Vector4cd& b, bool at_zero) {
    const Eigen::Vector4cd r = 0.5 * (transition_matrix(bc) * b);
    return at_zero ? Value2{r(0), r(2)} : Value2{r(1), r(3)};
}

Value2 pointwise_limit(const BoundaryCondition& bc, const VectorFunction& F, double x) {
    if (x < 0.0 || x > kPi) throw ConfigError("pointwise_limit: x outside [0, pi]");
    if (x == 0.0 || x == kPi) return endpoint_limit(bc, boundary_vector(F), x == 0.0);
    const Value2 l = F.limit(x, -1), r = F.limit(x, 1);
    return {0.5 * (l[0] + r[0]), 0.5 * (l[1] + r[1])};
}

std::vector<Value2> free_partial_sum(const SpectralBasis& basis, const CoefficientTable& c, int N,
                                     const std::vector<double>& xs) {
    if (N > c.M) throw NumericalError("free_partial_sum: coefficients only cover |k| <= " + std::to_string(c.M));
    return synthesize(basis, c.truncated(N), xs);
}

std::vector<Value2> free_partial_sum_dual(const SpectralBasis& basis, const VectorFunction& F, int N,
                                          const std::vector<double>& xs, int nodes) {
    nodes = nodes_for(N, nodes);
    const VectorFunction u = basis.apply_A_inv(F);
    const auto bps = u.breakpoints();
    const auto a = fourier_coeffs([&](double x) { return u.f(x); }, N, bps, nodes);
    const auto b = fourier_coeffs([&](double x) { return u.g(x); }, N, bps, nodes);
    std::vector<double> pts(xs);
    for (double x : xs) pts.push_back(kPi - x);
    std::vector<cplx> sa(pts.size()), sb(pts.size());
    kernels::phase_synthesis(pts, a, -N, 2, sa);
    kernels::phase_synthesis(pts, b, -N, 2, sb);
    const std::size_t n = xs.size();
    std::vector<Value2> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = basis.apply_A(xs[i], Value2{sa[n + i], sb[n + i]}, Value2{sa[i], sb[i]});
    return out;
}

Eigen::VectorXcd to_galerkin_vector(const CoefficientTable& c) {
    Eigen::VectorXcd v(2 * (c.M + 1));
    for (int k = -c.M; k <= c.M; k += 2)
        for (int nu = 1; nu <= 2; ++nu) v(TruncatedOperator::index(k, nu, c.M)) = c.at(k, nu);
    return v;
}

CoefficientTable from_galerkin_vector(const Eigen::VectorXcd& v, int M) {
    CoefficientTable c(M);
    for (int k = -M; k <= M; k += 2)
        for (int nu = 1; nu <= 2; ++nu) c.at(k, nu) = v(TruncatedOperator::index(k, nu, M));
    return c;
}

namespace {

CoefficientTable project_central(const SpectralBasis& basis, const TruncatedOperator& op,
                                 const SchurForm& sf, const CoefficientTable& c, int N, double T) {
    if (c.M != op.M) throw NumericalError("perturbed_partial_sum: coefficient table and operator differ in M");
    const double center = localization_center(basis.params());
    auto central = [&](cplx z) { return std::abs(z.real() - center) < N + 1 && std::abs(z.imag()) < T; };
    SpectralProjector P(sf, central);
    if (P.rank() != 2 * N + 2)
        throw NumericalError("perturbed_partial_sum: localization unresolved, R_NT holds " +
                             std::to_string(P.rank()) + " eigenvalues, expected " + std::to_string(2 * N + 2));
    return from_galerkin_vector(P.apply(to_galerkin_vector(c)), op.M);
}

}  // namespace

std::vector<Value2> perturbed_partial_sum(const SpectralBasis& basis, const TruncatedOperator& op,
                                          const SchurForm& sf, const CoefficientTable& c, int N,
                                          double T, const std::vector<double>& xs) {
    return synthesize(basis, project_central(basis, op, sf, c, N, T), xs);
}

ExpansionReport equiconv_deficit(const SpectralBasis& basis, const TruncatedOperator& op,
                                 const CoefficientTable& c, double v_norm,
                                 const std::vector<int>& N_schedule, const std::vector<double>& grid,
                                 const EquiconvOptions& opt) {
    const double T = opt.T > 0 ? opt.T : default_T(basis.params(), v_norm);
    const SchurForm sf = schur(op.matrix);
    ExpansionReport rep;
    rep.deficits.resize(N_schedule.size());
    parallel_for(N_schedule.size(), [&](std::size_t i) {
        const int N = N_schedule[i];
        const auto s = perturbed_partial_sum(basis, op, sf, c, N, T, grid);
        const auto s0 = free_partial_sum(basis, c, N, grid);
        double d = 0.0;
        for (std::size_t j = 0; j < grid.size(); ++j)
            d = std::max({d, std::abs(s[j][0] - s0[j][0]), std::abs(s[j][1] - s0[j][1])});
        rep.deficits[i] = {N, d};
    });
    if (rep.deficits.size() >= 2) {
        rep.trend_pass = rep.deficits.back().deficit < rep.deficits.front().deficit / opt.trend_factor;
        rep.tail_decreasing = true;
        const std::size_t n = rep.deficits.size();
        for (std::size_t i = n >= 3 ? n - 2 : 1; i < n; ++i)
            if (!(rep.deficits[i].deficit < rep.deficits[i - 1].deficit + opt.noise)) rep.tail_decreasing = false;
    }
    rep.pass = rep.trend_pass && rep.tail_decreasing;
    return rep;
}

PointwiseReport verify_pointwise(const SpectralBasis& basis, const VectorFunction& F,
                                 const std::vector<double>& x_set, const std::vector<int>& M_schedule,
                                 int grid_points, int nodes) {
    PointwiseReport rep;
    rep.x_set = x_set;
    if (M_schedule.empty()) return rep;
    const int Mmax = *std::max_element(M_schedule.begin(), M_schedule.end());
    const CoefficientTable c = expand_via_A_inverse(basis, F, Mmax, nodes);

    std::vector<double> excl = F.breakpoints();
    for (double b : F.breakpoints()) excl.push_back(kPi - b);
    excl.push_back(0.0);
    excl.push_back(kPi);
    std::vector<double> grid;
    for (int i = 1; i < grid_points; ++i) grid.push_back(kPi * i / grid_points);

    std::vector<Value2> limits;
    for (double x : x_set) limits.push_back(pointwise_limit(basis.bc(), F, x));

    std::vector<std::vector<double>> err(x_set.size());
    for (int M : M_schedule) {
        const auto s = free_partial_sum(basis, c, M, x_set);
        for (std::size_t i = 0; i < x_set.size(); ++i) {
            PointwiseEntry e{x_set[i], M, s[i], limits[i], 0.0};
            e.error = std::max(std::abs(s[i][0] - limits[i][0]), std::abs(s[i][1] - limits[i][1]));
            err[i].push_back(e.error);
            rep.entries.push_back(e);
        }
        const double delta = 4.0 * kPi / M;
        std::vector<double> g;
        for (double x : grid)
            if (std::none_of(excl.begin(), excl.end(), [&](double b) { return std::abs(x - b) < delta; }))
                g.push_back(x);
        const auto sg = free_partial_sum(basis, c, M, g);
        double u = 0.0;
        for (std::size_t j = 0; j < g.size(); ++j) {
            const Value2 f = F(g[j]);
            u = std::max({u, std::abs(sg[j][0] - f[0]), std::abs(sg[j][1] - f[1])});
        }
        rep.uniform_error.push_back(u);
    }
    rep.all_decreasing = true;
    for (const auto& e : err) {
        bool dec = true;
        for (std::size_t j = 1; j < e.size(); ++j)
            if (!(e[j] < e[j - 1] || e[j] < 1e-12)) dec = false;
        rep.decreasing.push_back(dec);
        rep.all_decreasing = rep.all_decreasing && dec;
    }
    return rep;
}

}  // namespace dirac
