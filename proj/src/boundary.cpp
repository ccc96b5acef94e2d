#include "penta/boundary.hpp"

#include <algorithm>
#include <cmath>

#include "penta/symmetrised_bidisc.hpp"

namespace penta {

bool in_K1(const PentaPoint& x, double tol) {
    if (!in_bGamma(x.base(), tol)) return false;
    return std::abs(x.a) <= std::sqrt(std::max(0.0, 1.0 - 0.25 * std::norm(x.s))) + tol;
}

bool in_bP(const PentaPoint& x, double tol) {
    if (!in_bGamma(x.base(), tol)) return false;
    return std::abs(std::abs(x.a) - std::sqrt(std::max(0.0, 1.0 - 0.25 * std::norm(x.s)))) <= tol;
}

PentaPoint bP_parametrize(double x, double theta, Complex omega) {
    if (!(x >= -1.0 && x <= 1.0)) {
        throw std::invalid_argument("bP_parametrize: x must lie in [-1, 1]");
    }
    if (!(theta >= 0.0 && theta <= 2.0 * M_PI)) {
        throw std::invalid_argument("bP_parametrize: theta must lie in [0, 2 pi]");
    }
    if (std::abs(std::abs(omega) - 1.0) > 1e-12) {
        throw std::invalid_argument("bP_parametrize: omega must be unimodular");
    }
    const Complex half_turn = std::polar(1.0, 0.5 * theta);
    return {std::sqrt(std::max(0.0, 1.0 - x * x)) * omega, 2.0 * x * half_turn,
            half_turn * half_turn};
}

BoundaryCoordinates bP_coordinates(const PentaPoint& x, double tol) {
    if (!in_bP(x, tol)) {
        throw std::domain_error("bP_coordinates: point not on the distinguished boundary");
    }
    BoundaryCoordinates out;
    double theta = std::arg(x.p);
    if (theta < 0.0) theta += 2.0 * M_PI;
    out.theta = theta;
    // s e^{-i theta/2} is real on the boundary since s = conj(s) p.
    out.x = std::clamp(0.5 * (x.s * std::polar(1.0, -0.5 * theta)).real(), -1.0, 1.0);
    const double r = std::sqrt(std::max(0.0, 1.0 - out.x * out.x));
    if (r <= tol) {
        out.omega = 1.0;
        out.omega_degenerate = true;
    } else {
        out.omega = x.a / r;
        const double m = std::abs(out.omega);
        out.omega = m > 0.0 ? out.omega / m : Complex{1.0};
    }
    return out;
}

}  // namespace penta
