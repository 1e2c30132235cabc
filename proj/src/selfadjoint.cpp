// SPDX-License-Identifier: Apache-2.0
#include "dirac/selfadjoint.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "dirac/expansion.hpp"

namespace dirac {

BoundaryCondition SeparatedSelfAdjointBC::bc() const {
    return {std::exp(2.0 * kI * alpha1), 0.0, 0.0, std::exp(-2.0 * kI * alpha2)};
}

Matrix2Fn real_to_complex(const Matrix2Fn& T) {
    const cplx h(0.5, 0.0), ih(0.0, 0.5);
    Matrix2Fn D;
    D[0][0] = h * T[0][0] + h * T[1][1] + ih * T[1][0] + (-ih) * T[0][1];
    D[0][1] = h * T[0][0] + (-h) * T[1][1] + ih * T[1][0] + ih * T[0][1];
    D[1][0] = h * T[0][0] + (-h) * T[1][1] + (-ih) * T[1][0] + (-ih) * T[0][1];
    D[1][1] = h * T[0][0] + h * T[1][1] + (-ih) * T[1][0] + ih * T[0][1];
    return D;
}

WeightedProblem complex_form(const SeparatedSelfAdjointBC& bc, const RealDiracProblem& prob) {
    WeightedProblem w;
    w.x1 = prob.x1;
    w.x2 = prob.x2;
    w.rho = prob.rho;
    w.T = real_to_complex(prob.T);
    w.bc = bc.bc();
    w.breakpoints = prob.breakpoints;
    return w;
}

SelfAdjointModel::SelfAdjointModel(const SeparatedSelfAdjointBC& bc, const RealDiracProblem& prob, int M,
                                   int nodes)
    : sbc_(bc),
      prob_(prob),
      M_(M),
      nodes_(nodes),
      canon_(change_of_variable(complex_form(bc, prob), nodes)),
      gauge_(gauge_reduce(canon_.S, canon_.bc, canon_.breakpoints)),
      basis_(gauge_.bc_tilde) {
    if (M <= 0 || M % 2 != 0) throw ConfigError("self-adjoint model: M must be a positive even integer");
    op_ = build_truncated(basis_, gauge_.v, M, nodes);
    schur_ = schur(op_.matrix);
    const Eigen::VectorXcd ev = schur_.eigenvalues();
    eigs_.assign(ev.data(), ev.data() + ev.size());
    std::sort(eigs_.begin(), eigs_.end(), [](cplx a, cplx b) { return a.real() < b.real(); });
    tau_ = (2.0 * bc.alpha1 - 2.0 * bc.alpha2 + (gauge_.s1_pi + gauge_.s2_pi).real()) / (2.0 * kPi);
}

SaSpectrum SelfAdjointModel::spectrum() const {
    SaSpectrum r;
    r.M = M_;
    r.tau = tau_;
    r.K = K();
    r.ell = kPi / r.K;
    const double center = localization_center(basis_.params());
    const double lim = M_ - edge_margin(M_);
    std::vector<double> mu;
    for (cplx z : eigs_) {
        r.max_imag = std::max(r.max_imag, r.K * std::abs(z.imag()));
        r.all_eigenvalues.push_back(r.K * z.real());
        if (std::abs(z.real() - center) <= lim) {
            mu.push_back(z.real());
            r.eigenvalues.push_back(r.K * z.real());
        }
    }
    if (r.max_imag >= 1e-8)
        r.violations.push_back("non-real eigenvalue, max |Im| = " + std::to_string(r.max_imag));

    r.n_lo = static_cast<int>(std::ceil(center - lim - tau_ + 0.5));
    r.n_hi = static_cast<int>(std::floor(center + lim - tau_ - 0.5));
    auto count = [&](double lo, double hi) {
        return static_cast<int>(std::count_if(mu.begin(), mu.end(), [&](double m) { return m > lo && m < hi; }));
    };
    const int window = count(tau_ + r.n_lo - 0.5, tau_ + r.n_hi + 0.5);
    std::vector<int> bad;
    for (int N = 0; -N >= r.n_lo && N <= r.n_hi; ++N) {
        bad.clear();
        int outer = 0;
        for (int n = r.n_lo; n <= r.n_hi; ++n) {
            if (std::abs(n) <= N) continue;
            ++outer;
            if (count(tau_ + n - 0.25, tau_ + n + 0.25) != 1) bad.push_back(n);
        }
        const bool central_ok = count(tau_ - N - 0.25, tau_ + N + 0.25) == 2 * N + 1;
        if (bad.empty() && central_ok && window == 2 * N + 1 + outer) {
            r.N_found = N;
            break;
        }
    }
    if (r.N_found < 0) {
        std::string s = "no N with clean interval counts in the window; offending n:";
        for (int n : bad) s += " " + std::to_string(n);
        r.violations.push_back(s);
    }
    return r;
}

Value2 SelfAdjointModel::back_transform(double t, Value2 y) const { return gauge_.inverse(t, y); }

std::vector<Value2> SelfAdjointModel::partial_sums(const CoefficientTable& c, int n,
                                                   const std::vector<double>& ts) const {
    SpectralProjector P(schur_, [&](cplx z) { return std::abs(z.real() - tau_) < n + 0.5; });
    const auto y = synthesize(basis_, from_galerkin_vector(P.apply(to_galerkin_vector(c)), M_), ts);
    std::vector<Value2> out(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) out[i] = back_transform(ts[i], y[i]);
    return out;
}

SaExpandReport SelfAdjointModel::expand(const ScalarFn& f, const ScalarFn& g, const std::vector<double>& x_set,
                                        const std::vector<int>& M_schedule, int grid_points) const {
    SaExpandReport rep;
    if (M_schedule.empty()) return rep;
    const SaSpectrum sp = spectrum();
    const int Mmax = *std::max_element(M_schedule.begin(), M_schedule.end());
    if (Mmax > sp.n_hi || -Mmax < sp.n_lo)
        throw ConfigError("sa_expand: M schedule exceeds the Galerkin window, raise the truncation");

    // F = (f + i g, f - i g), moved to [0, pi] and gauged.
    const VariableMap map = canon_.map;
    const GaugeData& gd = gauge_;
    auto F = [f, g](double x, int side) -> Value2 {
        const cplx a = side == 0 ? f(x) : f.limit(x, side);
        const cplx b = side == 0 ? g(x) : g.limit(x, side);
        return {a + kI * b, a - kI * b};
    };
    std::vector<double> xb = merge_breakpoints({f.breakpoints(), g.breakpoints()}, prob_.x1, prob_.x2);
    std::vector<Jump> j1, j2;
    for (double x : xb) {
        const double t = map.t_of_x(x);
        const Value2 l = gd.forward(t, F(x, -1)), r = gd.forward(t, F(x, +1));
        j1.push_back({t, l[0], r[0]});
        j2.push_back({t, l[1], r[1]});
    }
    const GaugeData* gp = &gauge_;
    VectorFunction Ft{ScalarFn([=](double t) { return gp->forward(t, F(map.x_of_t(t), 0))[0]; }, j1),
                      ScalarFn([=](double t) { return gp->forward(t, F(map.x_of_t(t), 0))[1]; }, j2)};
    const CoefficientTable c = expand_via_A_inverse(basis_, Ft, M_, nodes_);

    std::vector<double> ts;
    for (double x : x_set) ts.push_back(x <= prob_.x1 ? 0.0 : x >= prob_.x2 ? kPi : map.t_of_x(x));
    std::vector<std::pair<double, double>> limits;
    for (double x : x_set) limits.push_back(sa_pointwise_limit(sbc_, prob_, f, g, x));

    std::vector<std::vector<double>> err(x_set.size());
    for (int M : M_schedule) {
        const auto s = partial_sums(c, M, ts);
        for (std::size_t i = 0; i < x_set.size(); ++i) {
            SaPoint p{x_set[i], M, s[i][0].real(), s[i][0].imag(), limits[i].first, limits[i].second, 0.0};
            p.error = std::max(std::abs(p.f_sum - p.f_limit), std::abs(p.g_sum - p.g_limit));
            rep.max_conj_defect = std::max(rep.max_conj_defect, std::abs(s[i][1] - std::conj(s[i][0])));
            err[i].push_back(p.error);
            rep.entries.push_back(p);
        }
    }
    rep.all_decreasing = true;
    for (const auto& e : err) {
        bool dec = true;
        for (std::size_t j = 1; j < e.size(); ++j)
            if (!(e[j] < e[j - 1] || e[j] < 1e-12)) dec = false;
        rep.decreasing.push_back(dec);
        rep.all_decreasing = rep.all_decreasing && dec;
    }

    // Per-eigenvector structure and coefficient realness for simple eigenvalues.
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(op_.matrix, true);
    if (es.info() != Eigen::Success) throw NumericalError("sa_expand: eigenvector computation failed");
    const Eigen::MatrixXcd V = es.eigenvectors();
    const Eigen::VectorXcd a = V.partialPivLu().solve(to_galerkin_vector(c));
    std::vector<double> grid;
    for (int i = 0; i < grid_points; ++i) grid.push_back(kPi * (i + 0.5) / grid_points);
    double cmax = 0.0;
    std::vector<cplx> C;
    for (Eigen::Index n = 0; n < V.cols(); ++n) {
        const cplx mu = es.eigenvalues()(n);
        if (std::abs(mu.real() - tau_) >= Mmax + 0.5) continue;
        bool simple = true;
        for (Eigen::Index m = 0; m < V.cols(); ++m)
            if (m != n && std::abs(es.eigenvalues()(m) - mu) < 1e-6) simple = false;
        if (!simple) continue;
        const auto y = synthesize(basis_, from_galerkin_vector(V.col(n), M_), grid);
        cplx s{};
        double ymax = 0.0;
        std::vector<Value2> Y(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i) {
            Y[i] = back_transform(grid[i], y[i]);
            s += Y[i][0] * Y[i][1];
            ymax = std::max({ymax, std::abs(Y[i][0]), std::abs(Y[i][1])});
        }
        const cplx rot = std::abs(s) > 0 ? std::sqrt(std::conj(s) / std::abs(s)) : cplx(1.0);
        double res = 0.0;
        for (const auto& v : Y) res = std::max(res, std::abs(rot * v[0] - std::conj(rot * v[1])));
        rep.max_structure_residual = std::max(rep.max_structure_residual, res / ymax);
        // Scale C_n to a unit-sup eigenfunction before comparing magnitudes.
        C.push_back(a(n) / rot * ymax);
        cmax = std::max(cmax, std::abs(C.back()));
    }
    for (cplx z : C)
        if (cmax > 0) rep.max_coeff_imag = std::max(rep.max_coeff_imag, std::abs(z.imag()) / cmax);
    rep.coefficients_checked = static_cast<int>(C.size());
    return rep;
}

SaSpectrum sa_spectrum(const SeparatedSelfAdjointBC& bc, const RealDiracProblem& prob, int M, int nodes) {
    return SelfAdjointModel(bc, prob, M, nodes).spectrum();
}

SaExpandReport sa_expand(const SeparatedSelfAdjointBC& bc, const RealDiracProblem& prob, const ScalarFn& f,
                         const ScalarFn& g, const std::vector<double>& x_set, const std::vector<int>& M_schedule,
                         int nodes) {
    const int Mmax = M_schedule.empty() ? 0 : *std::max_element(M_schedule.begin(), M_schedule.end());
    int M = 2 * Mmax + 16;
    M += M % 2;
    return SelfAdjointModel(bc, prob, M, nodes).expand(f, g, x_set, M_schedule);
}

std::pair<double, double> sa_endpoint_limit(double alpha, double f, double g) {
    const double c = std::cos(2.0 * alpha), s = std::sin(2.0 * alpha);
    return {0.5 * (f * (1.0 - c) - g * s), 0.5 * (-f * s + g * (1.0 + c))};
}

std::pair<double, double> sa_pointwise_limit(const SeparatedSelfAdjointBC& bc, const RealDiracProblem& prob,
                                             const ScalarFn& f, const ScalarFn& g, double x) {
    if (x < prob.x1 || x > prob.x2) throw ConfigError("sa_pointwise_limit: x outside the interval");
    if (x == prob.x1) return sa_endpoint_limit(bc.alpha1, f.limit(x, +1).real(), g.limit(x, +1).real());
    if (x == prob.x2) return sa_endpoint_limit(bc.alpha2, f.limit(x, -1).real(), g.limit(x, -1).real());
    return {0.5 * (f.limit(x, -1) + f.limit(x, +1)).real(), 0.5 * (g.limit(x, -1) + g.limit(x, +1)).real()};
}

}  // namespace dirac
