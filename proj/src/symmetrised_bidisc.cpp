#include "penta/symmetrised_bidisc.hpp"

#include <cmath>

#include "penta/matrix_core.hpp"

namespace penta {

bool in_G(const SymPoint& q, double tol) {
    return std::abs(q.s - std::conj(q.s) * q.p) < 1.0 - std::norm(q.p) - tol;
}

bool in_Gamma(const SymPoint& q, double tol) {
    const auto [r1, r2] = quadratic_roots(q.s, q.p);
    return std::abs(r1) <= 1.0 + tol && std::abs(r2) <= 1.0 + tol;
}

bool in_Gamma_beta(const SymPoint& q, double tol) {
    const double pa = std::abs(q.p);
    if (pa > 1.0 + tol) return false;
    if (1.0 - pa > tol) {
        const Complex beta = (q.s - std::conj(q.s) * q.p) / (1.0 - std::norm(q.p));
        return std::abs(beta) <= 1.0 + tol &&
               std::abs(q.s - beta - std::conj(beta) * q.p) <= tol;
    }
    // |p| = 1: solvable only when s = conj(s) p, and then beta = s/2 works.
    const Complex beta = 0.5 * q.s;
    return std::abs(beta) <= 1.0 + tol &&
           std::abs(q.s - beta - std::conj(beta) * q.p) <= tol;
}

Complex beta_of(const SymPoint& q, double tol) {
    if (!in_Gamma(q, tol)) {
        throw std::domain_error("beta_of: point not in the closed symmetrised bidisc");
    }
    const double pa = std::abs(q.p);
    if (std::abs(pa - 1.0) <= tol) return 0.5 * q.s;
    return (q.s - std::conj(q.s) * q.p) / (1.0 - std::norm(q.p));
}

std::pair<Complex, Complex> roots_of(const SymPoint& q) { return quadratic_roots(q.s, q.p); }

bool in_bGamma(const SymPoint& q, double tol) {
    return std::abs(q.s) <= 2.0 + tol && std::abs(std::abs(q.p) - 1.0) <= tol &&
           std::abs(q.s - std::conj(q.s) * q.p) <= tol;
}

SymPoint tau_apply(const MobiusParams& m, const SymPoint& q, double tol) {
    if (!in_Gamma(q, tol)) {
        throw std::domain_error("tau_apply: point not in the closed symmetrised bidisc");
    }
    const auto [l1, l2] = roots_of(q);
    const Complex v1 = mobius_apply(m, l1);
    const Complex v2 = mobius_apply(m, l2);
    return {v1 + v2, v1 * v2};
}

}  // namespace penta
