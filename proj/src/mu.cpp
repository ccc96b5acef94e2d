#include "penta/mu.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "penta/detail/optimize.hpp"
#include "penta/matrix_core.hpp"
#include "penta/pentablock.hpp"
#include "penta/symmetrised_bidisc.hpp"

namespace penta {

double EPerturbation::norm() const {
    const double wa = std::abs(w);
    return 0.5 * (wa + std::sqrt(wa * wa + 4.0 * std::norm(z)));
}

bool EPerturbation::is_contraction(double tol) const {
    return std::abs(w) <= 1.0 - std::norm(z) + tol;
}

bool mu_lt_one(const ComplexMatrix2& a) {
    return in_pentablock(pi_map(a), Criterion::beta_form);
}

bool mu_le_one(const ComplexMatrix2& a, double tol) {
    return in_closed_pentablock(pi_map(a), tol);
}

double mu_value(const ComplexMatrix2& a) {
    const double hi0 = operator_norm(a);
    if (hi0 < 1e-300) return 0.0;
    double lo = spectral_radius(a);
    auto below = [&](double t) { return mu_lt_one((1.0 / t) * a); };

    // mu lies in [spectral radius, operator norm]; if the strict criterion
    // already fails at the norm, the value is the norm itself.
    double hi = hi0;
    if (!below(hi)) {
        hi = hi0 * (1.0 + 1e-9);
        if (!below(hi)) return hi0;
    }
    while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        if (below(mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return 0.5 * (lo + hi);
}

MuOracle mu_oracle(const ComplexMatrix2& a, double grid) {
    if (!(grid > 0.0)) throw std::invalid_argument("mu_oracle: grid pitch must be positive");
    const Complex s = trace(a);
    const Complex p = determinant(a);

    if (std::abs(a.a21) < 1e-300) {
        const auto [l1, l2] = eigenvalues(a);
        MuOracle out;
        double best = 0.0;
        for (Complex l : {l1, l2}) {
            if (std::abs(l) > best) {
                best = std::abs(l);
                out.minimizer = {1.0 / l, 0.0};
            }
        }
        out.value = best;
        out.min_norm = best > 0.0 ? 1.0 / best : std::numeric_limits<double>::infinity();
        return out;
    }

    auto norm_at = [&](Complex z) -> double {
        const Complex w = (1.0 - s * z + p * z * z) / a.a21;
        return EPerturbation{z, w}.norm();
    };

    // ||X(z)|| >= |z| and mu >= max(spectral radius, |a21|) bound the search box.
    const double mu_lower = std::max(spectral_radius(a), std::abs(a.a21));
    const double extent = std::min(1.05 / mu_lower, norm_at(0.0) * 1.05);

    double best = norm_at(0.0);
    Complex best_z = 0.0;
    // Widen the pitch on extreme boxes to cap the node count; the local
    // refinement restores accuracy from whichever basin the scan lands in.
    const double pitch = std::max(grid, extent / 2500.0);
    const int half = static_cast<int>(std::ceil(extent / pitch));
    for (int i = -half; i <= half; ++i) {
        for (int j = -half; j <= half; ++j) {
            const Complex z{i * pitch, j * pitch};
            const double v = norm_at(z);
            if (v < best) {
                best = v;
                best_z = z;
            }
        }
    }

    // Refine from the best grid point and from the reciprocal eigenvalues,
    // where w vanishes and the objective has kink-type local minima.
    std::vector<Complex> starts{best_z};
    const auto [l1, l2] = eigenvalues(a);
    for (Complex l : {l1, l2}) {
        if (std::abs(l) > 1e-9) starts.push_back(1.0 / l);
    }
    for (Complex s0 : starts) {
        const double raw = norm_at(s0);
        if (raw < best) {
            best = raw;
            best_z = s0;
        }
        const auto refined = detail::nelder_mead_2d(
            [&](double x, double y) { return norm_at(Complex{x, y}); },
            {s0.real(), s0.imag()}, pitch);
        if (refined.value < best) {
            best = refined.value;
            best_z = {refined.point.x, refined.point.y};
        }
    }

    MuOracle out;
    out.min_norm = best;
    out.value = 1.0 / best;
    out.minimizer = {best_z, (1.0 - s * best_z + p * best_z * best_z) / a.a21};
    return out;
}

}  // namespace penta
