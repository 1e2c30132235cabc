// SPDX-License-Identifier: Apache-2.0
#include "dirac/bc.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>

namespace dirac {
namespace {

// Below this relative size a discriminant is rounding noise, i.e. exactly zero.
constexpr double kRoundoff = 64.0 * DBL_EPSILON;

Eigen::Vector2cd unit_max(Eigen::Vector2cd v) {
    const int i = std::abs(v(0)) >= std::abs(v(1)) ? 0 : 1;
    const cplx p = v(i);
    v /= p;
    v(i) = 1.0;
    return v;
}

// Null vector of [[b + z, a], [d, c + z]], i.e. eigenvector of [[b, a], [d, c]] for -z.
Eigen::Vector2cd eigvec(const BoundaryCondition& bc, cplx z) {
    const Eigen::Vector2cd r1(bc.b + z, bc.a), r2(bc.d, bc.c + z);
    const Eigen::Vector2cd& r = r1.norm() >= r2.norm() ? r1 : r2;
    return unit_max(Eigen::Vector2cd(r(1), -r(0)));
}

}  // namespace

double BoundaryCondition::scale() const {
    const double m = std::max({1.0, std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
    return m * m;
}

std::string_view to_string(BcClass c) {
    switch (c) {
        case BcClass::NotRegular: return "NotRegular";
        case BcClass::StrictlyRegular: return "StrictlyRegular";
        case BcClass::PeriodicType: return "PeriodicType";
        case BcClass::RegularDegenerate: return "RegularDegenerate";
    }
    return "?";
}

BcClassification classify_bc_detailed(const BoundaryCondition& bc, double tol) {
    const double s = bc.scale();
    BcClassification r;
    if (std::abs(bc.det()) <= tol * s) return r;
    const double disc = std::abs(bc.discriminant());
    if (disc > tol * s) {
        r.cls = BcClass::StrictlyRegular;
        return r;
    }
    if (disc > kRoundoff * s) {
        r.cls = BcClass::StrictlyRegular;
        r.near_degenerate = true;
        return r;
    }
    const double m = std::sqrt(s);
    const bool periodic = std::abs(bc.a) <= kRoundoff * m && std::abs(bc.d) <= kRoundoff * m &&
                          std::abs(bc.b - bc.c) <= kRoundoff * m;
    r.cls = periodic ? BcClass::PeriodicType : BcClass::RegularDegenerate;
    return r;
}

BcClass classify_bc(const BoundaryCondition& bc, double tol) {
    return classify_bc_detailed(bc, tol).cls;
}

std::pair<cplx, cplx> char_roots(const BoundaryCondition& bc, double tol) {
    const BcClass cls = classify_bc(bc, tol);
    if (cls == BcClass::NotRegular)
        throw NumericalError("characteristic roots undefined for non-regular bc (bc - ad = 0)");
    const cplx p = bc.b + bc.c, q = bc.det();
    // A discriminant at rounding level would otherwise split the double root by sqrt(eps).
    if (cls != BcClass::StrictlyRegular) return {-0.5 * p, -0.5 * p};
    const cplx sq = std::sqrt(bc.discriminant());
    // Choose the sign avoiding cancellation, recover the other root from the product.
    const cplx s = std::real(std::conj(p) * sq) >= 0.0 ? sq : -sq;
    const cplx z1 = -0.5 * (p + s);
    const cplx z2 = q / z1;
    return {z1, z2};
}

cplx tau_from_root(cplx z, std::optional<double> branch_hint) {
    if (z == cplx{}) throw NumericalError("tau_from_root: zero root");
    double re = std::arg(z) / kPi;
    const double im = -std::log(std::abs(z)) / kPi;
    if (branch_hint) re += 2.0 * std::round((*branch_hint - re) / 2.0);
    return {re, im};
}

SpectralParams spectral_params(const BoundaryCondition& bc, double tol) {
    const BcClassification cl = classify_bc_detailed(bc, tol);
    if (cl.cls == BcClass::NotRegular)
        throw NumericalError("spectral_params: boundary conditions are not regular");
    SpectralParams sp;
    sp.cls = cl.cls;
    sp.near_degenerate = cl.near_degenerate;
    if (cl.cls == BcClass::StrictlyRegular) {
        auto [z1, z2] = char_roots(bc, tol);
        cplx t1 = tau_from_root(z1), t2 = tau_from_root(z2);
        // Order by real part, then pair so the real parts differ by at most 1.
        if (t2.real() < t1.real()) {
            std::swap(t1, t2);
            std::swap(z1, z2);
        }
        if (t2.real() - t1.real() > 1.0) t2 -= 2.0;
        if (t2.real() < t1.real()) {
            std::swap(t1, t2);
            std::swap(z1, z2);
        }
        sp.z1 = z1;
        sp.z2 = z2;
        sp.tau1 = t1;
        sp.tau2 = t2;
        sp.alpha = eigvec(bc, z1);
        sp.beta = eigvec(bc, z2);
        Eigen::Matrix2cd m;
        m << sp.alpha(0), sp.beta(0), sp.alpha(1), sp.beta(1);
        const Eigen::Matrix2cd inv = m.inverse();
        sp.alpha_prime = inv.row(0).transpose();
        sp.beta_prime = inv.row(1).transpose();
        return sp;
    }
    const cplx zs = -0.5 * (bc.b + bc.c);
    sp.z1 = sp.z2 = zs;
    sp.tau1 = sp.tau2 = tau_from_root(zs);
    if (cl.cls == BcClass::PeriodicType) {
        sp.alpha = Eigen::Vector2cd(1.0, 0.0);
        sp.beta = Eigen::Vector2cd(0.0, 1.0);
        sp.alpha_prime = sp.alpha;
        sp.beta_prime = sp.beta;
        return sp;
    }
    // Degenerate but not periodic: a = 0 (then d != 0), or a != 0.
    const double m = std::sqrt(bc.scale());
    if (std::abs(bc.a) <= kRoundoff * m) {
        sp.alpha = Eigen::Vector2cd(0.0, bc.d);
        sp.beta = Eigen::Vector2cd(kPi * bc.b, 0.0);
    } else {
        sp.alpha = Eigen::Vector2cd(bc.a, 0.5 * (bc.c - bc.b));
        sp.beta = Eigen::Vector2cd(0.0, kPi * bc.b);
    }
    sp.delta = sp.alpha(0) * sp.beta(1) - sp.alpha(1) * sp.beta(0) + kPi * sp.alpha(0) * sp.alpha(1);
    if (std::abs(sp.delta) == 0.0) throw NumericalError("spectral_params: degenerate Delta vanishes");
    return sp;
}

Eigen::Vector2cd bc_residual(const BoundaryCondition& bc, cplx y10, cplx y1pi, cplx y20, cplx y2pi) {
    return {y10 + bc.b * y1pi + bc.a * y20, bc.d * y1pi + bc.c * y20 + y2pi};
}

}  // namespace dirac
