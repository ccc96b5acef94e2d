#pragma once

#include <cstdint>
#include <vector>

#include "penta/symmetrised_bidisc.hpp"
#include "penta/types.hpp"

namespace penta {

/// Psi_z(a, s, p) = a (1 - |z|^2) / (1 - s z + p z^2).
Complex psi(Complex z, const PentaPoint& x);

/// Fiber radius over (s, p) in root form:
///   (1/2) |1 - conj(l2) l1| + (1/2) (1 - |l1|^2)^{1/2} (1 - |l2|^2)^{1/2}.
double fiber_radius_roots(Complex l1, Complex l2);

/// The same radius in beta form: |1 - (1/2) s conj(beta) / (1 + sqrt(1 - |beta|^2))|.
double fiber_radius_beta(const SymPoint& q, double tol = kTol);

/// Fiber radius over a point of the closed symmetrised bidisc.
double fiber_radius(const SymPoint& q, double tol = kTol);

/// kappa(s, p) = sup over the disc of (1 - |z|^2) / |1 - s z + p z^2|,
/// in closed form; equals 1 for s = 0 and exceeds 1 otherwise.
double kappa_closed(const SymPoint& q);

/// The unique interior maximizer z = conj(beta) / (1 + sqrt(1 - |beta|^2)).
Complex kappa_maximizer(const SymPoint& q);

struct KappaOracle {
    double value{};
    Complex maximizer{};
};

/// Grid/refinement lower bound for kappa: polar grid of the disc with radial
/// spacing `step` (and matching angular count), then local refinement from
/// the best grid point. 0 < step <= 1e-2.
KappaOracle kappa_oracle(const SymPoint& q, double step);

enum class Criterion { beta_form, root_form, sup_form };

/// Open-pentablock membership under one of the three equivalent criteria.
bool in_pentablock(const PentaPoint& x, Criterion c = Criterion::root_form, double tol = 0.0);

bool in_closed_pentablock(const PentaPoint& x, double tol = kTol);

/// A polynomial in the three coordinates (a, s, p), kept as a sparse term list.
struct TriPoly {
    struct Term {
        int da{}, ds{}, dp{};
        Complex c{};
    };
    std::vector<Term> terms;

    Complex eval(Complex a, Complex s, Complex p) const;
    Complex eval(const PentaPoint& x) const { return eval(x.a, x.s, x.p); }
};

struct SeparatingPolynomial {
    TriPoly poly;
    int truncation_degree{};  // N in the tail bound 4 |z0|^{N+1} / (1 - |z0|)
    Complex z0{};
    double scale{};  // (1 - |z0|^2) / (1 + eps)
    double psi_abs_at_x{};
    double abs_at_x{};
    double max_abs_on_samples{};
    bool trivial{};  // |a| > 1 case: the coordinate polynomial a itself

    /// Evaluates the same polynomial through the bounded power-sum
    /// recurrence. The monomial coefficient list carries binomially large
    /// entries and cancels catastrophically at high truncation degree.
    Complex eval(Complex a, Complex s, Complex p) const;
    Complex eval(const PentaPoint& x) const { return eval(x.a, x.s, x.p); }
};

/// Builds a polynomial separating an exterior point x (with (s, p) in the
/// closed symmetrised bidisc) from the closed pentablock, by symmetrized
/// truncation of Psi_{z0}. Requires eps < (|Psi_{z0}(x)| - 1) / 3. The
/// |f| <= 1 side is certified on a seeded 10^4-point sample of the closure.
SeparatingPolynomial separating_polynomial(const PentaPoint& x, double eps,
                                           std::uint64_t seed = 1);

}  // namespace penta
