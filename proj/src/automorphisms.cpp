#include "penta/automorphisms.hpp"

#include <cmath>

namespace penta {

MobiusParams MobiusParams::make(Complex eta, Complex alpha) {
    const double r = std::abs(eta);
    if (std::abs(r - 1.0) > 1e-6) {
        throw std::invalid_argument("MobiusParams: |eta| drifts too far from 1");
    }
    if (std::abs(alpha) >= 1.0) {
        throw std::invalid_argument("MobiusParams: |alpha| must be < 1");
    }
    return {eta / r, alpha};
}

AutoParams AutoParams::make(Complex omega, MobiusParams mobius) {
    const double r = std::abs(omega);
    if (std::abs(r - 1.0) > 1e-6) {
        throw std::invalid_argument("AutoParams: |omega| drifts too far from 1");
    }
    return {omega / r, mobius};
}

Complex mobius_apply(const MobiusParams& m, Complex z) {
    const Complex den = 1.0 - std::conj(m.alpha) * z;
    if (std::abs(den) < 1e-14) {
        throw std::domain_error("mobius_apply: conj(alpha) z = 1");
    }
    return m.eta * (z - m.alpha) / den;
}

MobiusParams mobius_compose(const MobiusParams& m1, const MobiusParams& m2) {
    // Each map acts projectively through [[eta, -eta alpha], [-conj(alpha), 1]];
    // composition is the matrix product, renormalized back to (eta, alpha) form.
    const Complex a1 = m1.eta, b1 = -m1.eta * m1.alpha, c1 = -std::conj(m1.alpha), d1 = 1.0;
    const Complex a2 = m2.eta, b2 = -m2.eta * m2.alpha, c2 = -std::conj(m2.alpha), d2 = 1.0;
    const Complex a = a1 * a2 + b1 * c2;
    const Complex b = a1 * b2 + b1 * d2;
    const Complex d = c1 * b2 + d1 * d2;
    return MobiusParams::make(a / d, -b / a);
}

MobiusParams mobius_inverse(const MobiusParams& m) {
    return MobiusParams::make(std::conj(m.eta), -m.eta * m.alpha);
}

PentaPoint f_apply(const AutoParams& g, const PentaPoint& x) {
    const Complex eta = g.mobius.eta;
    const Complex al = g.mobius.alpha;
    const Complex alc = std::conj(al);
    const Complex den = 1.0 - alc * x.s + alc * alc * x.p;
    if (std::abs(den) < 1e-14) {
        throw std::domain_error("f_apply: vanishing denominator 1 - conj(alpha) s + conj(alpha)^2 p");
    }
    const double one_minus = 1.0 - std::norm(al);
    const Complex pre = eta / den;
    return {pre * g.omega * one_minus * x.a,
            pre * (-2.0 * al + (1.0 + std::norm(al)) * x.s - 2.0 * alc * x.p),
            pre * eta * (al * al - al * x.s + x.p)};
}

ComplexMatrix2 F_apply(const AutoParams& g, const ComplexMatrix2& a) {
    const Complex eta = g.mobius.eta;
    const Complex al = g.mobius.alpha;
    const Complex alc = std::conj(al);
    const Complex s = a.a11 + a.a22;
    const Complex p = a.a11 * a.a22 - a.a12 * a.a21;
    const Complex den = 1.0 - alc * s + alc * alc * p;
    if (std::abs(den) < 1e-14) {
        throw std::domain_error("F_apply: I - conj(alpha) A is singular");
    }
    // (I - conj(alpha) A)^{-1} in closed form, then eta (A - alpha I) times it.
    const ComplexMatrix2 res{1.0 - alc * a.a22, alc * a.a12, alc * a.a21, 1.0 - alc * a.a11};
    const ComplexMatrix2 shifted{a.a11 - al, a.a12, a.a21, a.a22 - al};
    ComplexMatrix2 ups = (eta / den) * (shifted * res);
    // Conjugation by U_omega = diag(1, omega) only rotates the off-diagonal entries.
    ups.a12 *= std::conj(g.omega);
    ups.a21 *= g.omega;
    return ups;
}

AutoParams group_compose(const AutoParams& g1, const AutoParams& g2) {
    return AutoParams::make(g1.omega * g2.omega, mobius_compose(g1.mobius, g2.mobius));
}

AutoParams group_inverse(const AutoParams& g) {
    return AutoParams::make(std::conj(g.omega), mobius_inverse(g.mobius));
}

}  // namespace penta
