#pragma once

#include "penta/types.hpp"

namespace penta {

/// K1 = pi of the unitary group: (s, p) on the distinguished boundary of
/// Gamma and |a| <= sqrt(1 - |s|^2/4).
bool in_K1(const PentaPoint& x, double tol = kTol);

/// The distinguished boundary of the pentablock: as K1 but with equality in
/// the |a| bound.
bool in_bP(const PentaPoint& x, double tol = kTol);

/// (sqrt(1-x^2) omega, 2 x e^{i theta/2}, e^{i theta}) for x in [-1, 1],
/// theta in [0, 2 pi], |omega| = 1.
PentaPoint bP_parametrize(double x, double theta, Complex omega);

struct BoundaryCoordinates {
    double x{};
    double theta{};
    Complex omega{1.0};
    bool omega_degenerate{};  // |s| = 2 leaves omega free; 1 is returned
};

/// Inverse of bP_parametrize up to the (x, 0) ~ (-x, 2 pi) identification.
BoundaryCoordinates bP_coordinates(const PentaPoint& x, double tol = kTol);

}  // namespace penta
