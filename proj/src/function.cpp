// SPDX-License-Identifier: Apache-2.0
#include "dirac/function.hpp"

#include <algorithm>
#include <cmath>

namespace dirac {
namespace {
constexpr double kJumpTol = 1e-12;
}

cplx ScalarFn::limit(double x, int side) const {
    for (const auto& j : jumps_)
        if (std::abs(j.x - x) < kJumpTol) return side < 0 ? j.left : j.right;
    return eval_(x);
}

std::vector<double> ScalarFn::breakpoints() const {
    std::vector<double> b;
    b.reserve(jumps_.size());
    for (const auto& j : jumps_) b.push_back(j.x);
    return b;
}

ScalarFn ScalarFn::constant(cplx c) {
    return ScalarFn([c](double) { return c; });
}

ScalarFn ScalarFn::exponential(cplx amp, double freq) {
    return ScalarFn([amp, freq](double x) { return amp * std::exp(kI * (freq * x)); });
}

ScalarFn ScalarFn::step(double x0, cplx left, cplx right) {
    return ScalarFn([=](double x) { return x < x0 ? left : right; }, {{x0, left, right}});
}

ScalarFn ScalarFn::affine(cplx c0, cplx c1) {
    return ScalarFn([=](double x) { return c0 + c1 * x; });
}

ScalarFn ScalarFn::sawtooth(cplx amp) {
    return ScalarFn([amp](double x) { return amp * (x - kPi / 2); });
}

ScalarFn ScalarFn::samples(std::vector<double> xs, std::vector<cplx> ys) {
    if (xs.size() != ys.size() || xs.size() < 2)
        throw ConfigError("samples: need at least two (x, value) pairs of equal length");
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (!(xs[i] > xs[i - 1])) throw ConfigError("samples: x must be strictly increasing");
    // Kinks become breakpoints so composite rules stay exact per piece.
    std::vector<Jump> kinks;
    if (xs.size() <= 514)
        for (std::size_t i = 1; i + 1 < xs.size(); ++i) kinks.push_back({xs[i], ys[i], ys[i]});
    auto f = [xs = std::move(xs), ys = std::move(ys)](double x) {
        if (x <= xs.front()) return ys.front();
        if (x >= xs.back()) return ys.back();
        const auto it = std::upper_bound(xs.begin(), xs.end(), x);
        const std::size_t i = static_cast<std::size_t>(it - xs.begin()) - 1;
        const double t = (x - xs[i]) / (xs[i + 1] - xs[i]);
        return ys[i] + t * (ys[i + 1] - ys[i]);
    };
    return ScalarFn(std::move(f), std::move(kinks));
}

ScalarFn operator+(const ScalarFn& f, const ScalarFn& g) {
    std::vector<Jump> jumps;
    auto pts = merge_breakpoints({f.breakpoints(), g.breakpoints()}, -1e300, 1e300);
    for (double x : pts) jumps.push_back({x, f.limit(x, -1) + g.limit(x, -1), f.limit(x, 1) + g.limit(x, 1)});
    return ScalarFn([f, g](double x) { return f(x) + g(x); }, std::move(jumps));
}

ScalarFn operator*(cplx s, const ScalarFn& f) {
    std::vector<Jump> jumps = f.jumps();
    for (auto& j : jumps) {
        j.left *= s;
        j.right *= s;
    }
    return ScalarFn([s, f](double x) { return s * f(x); }, std::move(jumps));
}

std::vector<double> VectorFunction::breakpoints() const {
    return merge_breakpoints({f.breakpoints(), g.breakpoints()}, -1e300, 1e300);
}

std::vector<double> merge_breakpoints(const std::vector<std::vector<double>>& sets, double lo,
                                      double hi) {
    std::vector<double> all;
    for (const auto& s : sets)
        for (double x : s)
            if (x > lo + kJumpTol && x < hi - kJumpTol) all.push_back(x);
    std::sort(all.begin(), all.end());
    std::vector<double> out;
    for (double x : all)
        if (out.empty() || x - out.back() > kJumpTol) out.push_back(x);
    return out;
}

}  // namespace dirac
