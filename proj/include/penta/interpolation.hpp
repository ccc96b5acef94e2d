#pragma once

#include "penta/types.hpp"

namespace penta {

struct SchwarzCheck {
    bool satisfied{};
    double base_lhs{};   // (2 |s - conj(s) p| + |s^2 - 4p|) / (4 - |s|^2)
    double fiber_lhs{};  // |a| / |1 - s conj(beta)/2 / (1 + sqrt(1 - |beta|^2))|
};

/// Necessary conditions for an analytic disc map h with h(0) = 0 and
/// h(lambda0) = x: both left-hand sides must not exceed |lambda0|.
SchwarzCheck schwarz_necessary(Complex lambda0, const PentaPoint& x);

/// Infinitesimal version at the origin: |A| <= 1 and |S|/2 + |P| <= 1.
bool infinitesimal_necessary(Complex a, Complex s, Complex p, double tol = 0.0);

/// A flat interpolant F(l) = (l / lambda0) W through 0 and W exists with
/// mu_E(F) < 1 on the disc iff mu_value(W) <= |lambda0|.
bool flat_interpolant_feasible(Complex lambda0, const ComplexMatrix2& w, double tol = 1e-10);

struct CounterexampleTrace {
    Complex derivative_a, derivative_s, derivative_p;  // (1, 2(1-P), P)
    bool infinitesimal_ok{};
    double equality_defect{};  // | |S|/2 + |P| - 1 |
    double xi{};               // (1 - P) / (1 + P)
    PentaPoint h_at_one;       // (1, 2 xi, 1)
    double fiber_bound{};      // sqrt(1 - xi^2)
    bool boundary_violated{};  // h(1) escapes the closed pentablock
};

/// Desk verification that the tight infinitesimal data (1, 2(1-P), P) admits
/// no closed-pentablock-valued interpolant: the induced curve reaches
/// (1, 2 xi, 1) whose fiber bound sqrt(1 - xi^2) falls below 1.
CounterexampleTrace counterexample_trace(double p);

}  // namespace penta
