// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <vector>

#include "dirac/common.hpp"

namespace dirac {

enum class QuadratureKind { GaussLegendre, Trapezoid };

inline constexpr int kDefaultNodes = 4096;
inline constexpr int kPanelOrder = 16;

/// Nodes and weights of a composite rule.
struct QuadRule {
    std::vector<double> x;
    std::vector<double> w;
};

/// Gauss-Legendre nodes/weights of the given order on [-1, 1].
const QuadRule& gauss_legendre(int order);

/// Composite rule on [lo, hi] split at the breakpoints, about `nodes` points in total.
/// Panels never straddle a breakpoint.
QuadRule make_rule(double lo, double hi, const std::vector<double>& breakpoints, int nodes,
                   QuadratureKind kind = QuadratureKind::GaussLegendre);

/// Normalized integral (1/pi) * int_0^pi f.
cplx mean_integral(const std::function<cplx(double)>& f, const std::vector<double>& breakpoints,
                   int nodes = kDefaultNodes, QuadratureKind kind = QuadratureKind::GaussLegendre);

/// Fourier coefficients (1/pi) int_0^pi f e^{-ikx} for k = -K, -K+2, ..., K.
/// Requires nodes >= 4K; the result has K+1 entries.
std::vector<cplx> fourier_coeffs(const std::function<cplx(double)>& f, int K,
                                 const std::vector<double>& breakpoints,
                                 int nodes = kDefaultNodes,
                                 QuadratureKind kind = QuadratureKind::GaussLegendre);

/// Node count large enough for frequencies up to K.
int nodes_for(int K, int requested = kDefaultNodes);

/// Cumulative integral F(x) = int_lo^x f, tabulated on panels and refined by a
/// local Gauss rule on evaluation.
class CumulativeIntegral {
public:
    CumulativeIntegral() = default;
    CumulativeIntegral(std::function<cplx(double)> f, double lo, double hi,
                       const std::vector<double>& breakpoints, int panels = 256);

    cplx operator()(double x) const;
    cplx total() const { return table_.empty() ? cplx{} : table_.back(); }
    double lo() const { return lo_; }
    double hi() const { return hi_; }

private:
    std::function<cplx(double)> f_;
    double lo_ = 0.0, hi_ = 0.0;
    std::vector<double> grid_;
    std::vector<cplx> table_;
};

}  // namespace dirac
