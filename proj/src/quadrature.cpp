// SPDX-License-Identifier: Apache-2.0
#include "dirac/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "dirac/function.hpp"
#include "dirac/kernels/kernels.hpp"

namespace dirac {
namespace {

QuadRule compute_gauss_legendre(int n) {
    QuadRule r;
    r.x.resize(n);
    r.w.resize(n);
    for (int i = 0; i < n; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        r.x[n - 1 - i] = x;
        r.w[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return r;
}

std::vector<std::pair<double, double>> pieces(double lo, double hi,
                                              const std::vector<double>& breakpoints) {
    std::vector<std::pair<double, double>> out;
    double a = lo;
    for (double b : merge_breakpoints({breakpoints}, lo, hi)) {
        out.emplace_back(a, b);
        a = b;
    }
    out.emplace_back(a, hi);
    return out;
}

}  // namespace

const QuadRule& gauss_legendre(int order) {
    static std::mutex mu;
    static std::map<int, QuadRule> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, compute_gauss_legendre(order)).first;
    return it->second;
}

QuadRule make_rule(double lo, double hi, const std::vector<double>& breakpoints, int nodes,
                   QuadratureKind kind) {
    if (!(hi > lo)) throw NumericalError("make_rule: empty interval");
    if (nodes < kPanelOrder) nodes = kPanelOrder;
    const auto parts = pieces(lo, hi, breakpoints);
    const double total = hi - lo;
    QuadRule r;
    if (kind == QuadratureKind::GaussLegendre) {
        const QuadRule& g = gauss_legendre(kPanelOrder);
        const int panels = (nodes + kPanelOrder - 1) / kPanelOrder;
        r.x.reserve(static_cast<std::size_t>(panels + parts.size()) * kPanelOrder);
        r.w.reserve(r.x.capacity());
        for (auto [a, b] : parts) {
            const int np = std::max(1, static_cast<int>(std::lround(panels * (b - a) / total)));
            const double h = (b - a) / np;
            for (int p = 0; p < np; ++p) {
                const double c = a + (p + 0.5) * h;
                for (int q = 0; q < kPanelOrder; ++q) {
                    r.x.push_back(c + 0.5 * h * g.x[q]);
                    r.w.push_back(0.5 * h * g.w[q]);
                }
            }
        }
    } else {
        for (auto [a, b] : parts) {
            const int np = std::max(1, static_cast<int>(std::lround(nodes * (b - a) / total)));
            const double h = (b - a) / np;
            // Piece endpoints are nudged inward so one-sided values are sampled.
            const double eps = 1e-13 * total;
            for (int p = 0; p <= np; ++p) {
                double x = a + p * h;
                if (p == 0) x += eps;
                if (p == np) x -= eps;
                r.x.push_back(x);
                r.w.push_back((p == 0 || p == np) ? 0.5 * h : h);
            }
        }
    }
    return r;
}

cplx mean_integral(const std::function<cplx(double)>& f, const std::vector<double>& breakpoints,
                   int nodes, QuadratureKind kind) {
    const QuadRule r = make_rule(0.0, kPi, breakpoints, nodes, kind);
    cplx s{};
    for (std::size_t i = 0; i < r.x.size(); ++i) s += r.w[i] * f(r.x[i]);
    return s / kPi;
}

int nodes_for(int K, int requested) {
    int n = std::max(requested, 8 * K);
    return (n + kPanelOrder - 1) / kPanelOrder * kPanelOrder;
}

std::vector<cplx> fourier_coeffs(const std::function<cplx(double)>& f, int K,
                                 const std::vector<double>& breakpoints, int nodes,
                                 QuadratureKind kind) {
    if (K < 0 || K % 2 != 0) throw NumericalError("fourier_coeffs: K must be a non-negative even integer");
    if (nodes < 4 * K)
        throw NumericalError("fourier_coeffs: aliasing guard requires nodes >= 4K (nodes=" +
                             std::to_string(nodes) + ", K=" + std::to_string(K) + ")");
    const QuadRule r = make_rule(0.0, kPi, breakpoints, nodes, kind);
    std::vector<double> yre(r.x.size()), yim(r.x.size());
    for (std::size_t i = 0; i < r.x.size(); ++i) {
        const cplx v = r.w[i] * f(r.x[i]) / kPi;
        yre[i] = v.real();
        yim[i] = v.imag();
    }
    std::vector<cplx> out(static_cast<std::size_t>(K) + 1);
    kernels::phase_analysis(r.x, yre, yim, -K, 2, out);
    return out;
}

CumulativeIntegral::CumulativeIntegral(std::function<cplx(double)> f, double lo, double hi,
                                       const std::vector<double>& breakpoints, int panels)
    : f_(std::move(f)), lo_(lo), hi_(hi) {
    const auto parts = pieces(lo, hi, breakpoints);
    const QuadRule& g = gauss_legendre(kPanelOrder);
    grid_.push_back(lo);
    table_.push_back(0.0);
    for (auto [a, b] : parts) {
        const int np = std::max(1, static_cast<int>(std::lround(panels * (b - a) / (hi - lo))));
        const double h = (b - a) / np;
        for (int p = 0; p < np; ++p) {
            const double x0 = a + p * h, c = x0 + 0.5 * h;
            cplx s{};
            for (int q = 0; q < kPanelOrder; ++q) s += g.w[q] * f_(c + 0.5 * h * g.x[q]);
            grid_.push_back(p + 1 == np ? b : x0 + h);
            table_.push_back(table_.back() + 0.5 * h * s);
        }
    }
}

cplx CumulativeIntegral::operator()(double x) const {
    if (table_.empty()) return 0.0;
    if (x <= lo_) return 0.0;
    if (x >= hi_) return table_.back();
    const auto it = std::upper_bound(grid_.begin(), grid_.end(), x);
    const std::size_t i = static_cast<std::size_t>(it - grid_.begin()) - 1;
    const double a = grid_[i], h = x - a;
    if (h <= 0.0) return table_[i];
    const QuadRule& g = gauss_legendre(kPanelOrder);
    cplx s{};
    for (int q = 0; q < kPanelOrder; ++q) s += g.w[q] * f_(a + 0.5 * h * (g.x[q] + 1.0));
    return table_[i] + 0.5 * h * s;
}

}  // namespace dirac
