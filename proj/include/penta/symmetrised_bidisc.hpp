#pragma once

#include <utility>

#include "penta/automorphisms.hpp"
#include "penta/types.hpp"

namespace penta {

/// Open symmetrised bidisc: |s - conj(s) p| < 1 - |p|^2 - tol.
bool in_G(const SymPoint& q, double tol = 0.0);

/// Closure: both roots of z^2 - s z + p in the closed unit disc (within tol).
bool in_Gamma(const SymPoint& q, double tol = kTol);

/// Test oracle for in_Gamma: existence of beta with |beta| <= 1 and s = beta + conj(beta) p.
bool in_Gamma_beta(const SymPoint& q, double tol = kTol);

/// beta = (s - conj(s) p) / (1 - |p|^2) for |p| < 1; the canonical beta = s/2 when
/// |p| = 1 within tol. Rejects points outside the closure.
Complex beta_of(const SymPoint& q, double tol = kTol);

/// Roots of z^2 - s z + p in the deterministic eigenvalue order.
std::pair<Complex, Complex> roots_of(const SymPoint& q);

/// Distinguished boundary of Gamma: |s| <= 2, |p| = 1 and s = conj(s) p, within tol.
bool in_bGamma(const SymPoint& q, double tol = kTol);

/// Symmetrised action of a disc automorphism: (v(l1)+v(l2), v(l1)v(l2)).
SymPoint tau_apply(const MobiusParams& m, const SymPoint& q, double tol = kTol);

}  // namespace penta
