// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <vector>

#include "dirac/common.hpp"

namespace dirac {

/// A declared discontinuity with one-sided limits.
struct Jump {
    double x;
    cplx left;
    cplx right;
};

/// Scalar function on an interval with optional jump metadata.
///
/// Evaluation at a declared jump returns whatever the closure returns; use
/// limit() for one-sided values.
class ScalarFn {
public:
    ScalarFn() : eval_([](double) { return cplx{}; }) {}
    explicit ScalarFn(std::function<cplx(double)> f, std::vector<Jump> jumps = {})
        : eval_(std::move(f)), jumps_(std::move(jumps)) {}

    cplx operator()(double x) const { return eval_(x); }

    /// One-sided limit; side < 0 means x-0, side > 0 means x+0.
    cplx limit(double x, int side) const;

    const std::vector<Jump>& jumps() const { return jumps_; }
    std::vector<double> breakpoints() const;

    static ScalarFn constant(cplx c);
    static ScalarFn exponential(cplx amp, double freq);  // amp * exp(i freq x)
    static ScalarFn step(double x0, cplx left, cplx right);
    static ScalarFn affine(cplx c0, cplx c1);  // c0 + c1 x
    static ScalarFn sawtooth(cplx amp);        // amp * (x - pi/2) on [0, pi)
    /// Piecewise-linear interpolation through (xs, ys); xs strictly increasing.
    static ScalarFn samples(std::vector<double> xs, std::vector<cplx> ys);

private:
    std::function<cplx(double)> eval_;
    std::vector<Jump> jumps_;
};

ScalarFn operator+(const ScalarFn& f, const ScalarFn& g);
ScalarFn operator*(cplx s, const ScalarFn& f);

/// Pair (f, g) of scalar functions.
struct VectorFunction {
    ScalarFn f;
    ScalarFn g;

    Value2 operator()(double x) const { return {f(x), g(x)}; }
    Value2 limit(double x, int side) const { return {f.limit(x, side), g.limit(x, side)}; }
    std::vector<double> breakpoints() const;
};

/// Sorted union of breakpoint sets, deduplicated, restricted to (lo, hi).
std::vector<double> merge_breakpoints(const std::vector<std::vector<double>>& sets, double lo,
                                      double hi);

}  // namespace dirac
