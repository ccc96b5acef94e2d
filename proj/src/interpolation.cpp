#include "penta/interpolation.hpp"

#include <cmath>

#include "penta/mu.hpp"
#include "penta/pentablock.hpp"
#include "penta/symmetrised_bidisc.hpp"

namespace penta {

SchwarzCheck schwarz_necessary(Complex lambda0, const PentaPoint& x) {
    if (std::abs(lambda0) == 0.0 || std::abs(lambda0) >= 1.0) {
        throw std::invalid_argument("schwarz_necessary: lambda0 must lie in the punctured disc");
    }
    if (!in_pentablock(x)) {
        throw std::domain_error("schwarz_necessary: target point not in the pentablock");
    }
    if (std::abs(x.s) >= 2.0 - 1e-12) {
        throw std::domain_error("schwarz_necessary: |s| = 2 degenerates the base inequality");
    }
    SchwarzCheck out;
    out.base_lhs = (2.0 * std::abs(x.s - std::conj(x.s) * x.p) + std::abs(x.s * x.s - 4.0 * x.p)) /
                   (4.0 - std::norm(x.s));
    out.fiber_lhs = std::abs(x.a) / fiber_radius_beta(x.base());
    const double mod = std::abs(lambda0);
    out.satisfied = out.base_lhs <= mod && out.fiber_lhs <= mod;
    return out;
}

bool infinitesimal_necessary(Complex a, Complex s, Complex p, double tol) {
    return std::abs(a) <= 1.0 + tol && 0.5 * std::abs(s) + std::abs(p) <= 1.0 + tol;
}

bool flat_interpolant_feasible(Complex lambda0, const ComplexMatrix2& w, double tol) {
    if (std::abs(lambda0) == 0.0) {
        throw std::invalid_argument("flat_interpolant_feasible: lambda0 must be nonzero");
    }
    return mu_value(w) <= std::abs(lambda0) + tol;
}

CounterexampleTrace counterexample_trace(double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw std::invalid_argument("counterexample_trace: P must lie in (0, 1)");
    }
    CounterexampleTrace out;
    out.derivative_a = 1.0;
    out.derivative_s = 2.0 * (1.0 - p);
    out.derivative_p = p;
    out.infinitesimal_ok =
        infinitesimal_necessary(out.derivative_a, out.derivative_s, out.derivative_p, 1e-12);
    out.equality_defect =
        std::abs(0.5 * std::abs(out.derivative_s) + std::abs(out.derivative_p) - 1.0);
    out.xi = (1.0 - p) / (1.0 + p);
    out.h_at_one = {1.0, 2.0 * out.xi, 1.0};
    out.fiber_bound = std::sqrt(1.0 - out.xi * out.xi);
    out.boundary_violated = out.fiber_bound < 1.0 && !in_closed_pentablock(out.h_at_one);
    return out;
}

}  // namespace penta
