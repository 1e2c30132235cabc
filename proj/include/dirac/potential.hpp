// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <string>
#include <vector>

#include "dirac/basis.hpp"
#include "dirac/function.hpp"

namespace dirac {

enum class Smoothness { L2, BV, Smooth };

/// Off-diagonal potential v = [[0, P], [Q, 0]].
struct PotentialSpec {
    ScalarFn P;
    ScalarFn Q;
    Smoothness smoothness = Smoothness::L2;

    static PotentialSpec zero() { return {ScalarFn::constant(0.0), ScalarFn::constant(0.0), Smoothness::Smooth}; }
    std::vector<double> breakpoints() const;
};

/// ||v||^2 = ||P||^2 + ||Q||^2 with the normalized L2 norm.
double potential_norm(const PotentialSpec& v, int nodes = kDefaultNodes);

/// Entries w^{eta nu}(m) of the matrix of V in the free basis, even |m| <= Mw:
///   <V phi_k^nu, phi~_j^eta> = w^{eta nu}(j + k).
class MatrixRep {
public:
    MatrixRep() = default;
    MatrixRep(int Mw, std::array<std::vector<cplx>, 4> w) : Mw_(Mw), w_(std::move(w)) {}

    int Mw() const { return Mw_; }
    cplx w(int eta, int nu, int m) const;
    /// r(m) = max over eta, nu of |w^{eta nu}(m)|.
    double r(int m) const;
    /// (sum_{|m| >= m0} r(m)^2)^{1/2} within the stored range.
    double r_tail(int m0) const;

private:
    int Mw_ = 0;
    std::array<std::vector<cplx>, 4> w_;  // index 2*(eta-1) + (nu-1)
};

/// Computes the entries from Fourier coefficients of g^{eta nu} P and h^{eta nu} Q, where
/// g^{eta nu} = v_nu conj(u~_eta) and h^{eta nu} = u_nu conj(v~_eta) in factor notation.
MatrixRep matrix_rep(const SpectralBasis& basis, const PotentialSpec& v, int Mw,
                     int nodes = kDefaultNodes);

/// Direct quadrature of <V phi_k^nu, phi~_j^eta> for a single entry.
cplx matrix_entry_direct(const SpectralBasis& basis, const PotentialSpec& v, int j, int eta, int k,
                         int nu, int nodes = kDefaultNodes);

PotentialSpec operator+(const PotentialSpec& a, const PotentialSpec& b);
PotentialSpec operator*(cplx s, const PotentialSpec& a);

}  // namespace dirac
