#pragma once

#include "penta/types.hpp"

namespace penta {

/// Parameters (eta, alpha) of the disc automorphism z -> eta (z - alpha) / (1 - conj(alpha) z).
struct MobiusParams {
    Complex eta{1.0};
    Complex alpha{0.0};

    /// Renormalizes eta to the unit circle (rejecting drift beyond 1e-6)
    /// and validates |alpha| < 1.
    static MobiusParams make(Complex eta, Complex alpha);
    static MobiusParams identity() { return {}; }
};

/// Parameters of the pentablock automorphism f_{omega,upsilon}.
struct AutoParams {
    Complex omega{1.0};
    MobiusParams mobius{};

    static AutoParams make(Complex omega, MobiusParams mobius);
    static AutoParams identity() { return {}; }
};

Complex mobius_apply(const MobiusParams& m, Complex z);

/// Parameters of the composition m1 after m2, i.e. z -> m1(m2(z)).
MobiusParams mobius_compose(const MobiusParams& m1, const MobiusParams& m2);

MobiusParams mobius_inverse(const MobiusParams& m);

/// Action on the pentablock:
///   f(a, s, p) = eta / (1 - conj(alpha) s + conj(alpha)^2 p) *
///     (omega (1-|alpha|^2) a,  -2 alpha + (1+|alpha|^2) s - 2 conj(alpha) p,  eta (alpha^2 - alpha s + p)).
PentaPoint f_apply(const AutoParams& g, const PentaPoint& x);

/// Action on the matrix ball: U_omega eta (A - alpha I)(I - conj(alpha) A)^{-1} U_omega^*
/// with U_omega = diag(1, omega), resolvent in closed form.
ComplexMatrix2 F_apply(const AutoParams& g, const ComplexMatrix2& a);

AutoParams group_compose(const AutoParams& g1, const AutoParams& g2);
AutoParams group_inverse(const AutoParams& g);

}  // namespace penta
