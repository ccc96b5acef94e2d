#pragma once

#include "penta/types.hpp"

namespace penta {

/// A perturbation [[z, w], [0, z]] from E = span{I, upper Jordan cell}.
struct EPerturbation {
    Complex z{}, w{};

    ComplexMatrix2 matrix() const { return {z, w, 0.0, z}; }

    /// Operator norm in closed form: (|w| + sqrt(|w|^2 + 4 |z|^2)) / 2.
    double norm() const;

    /// Contraction iff |w| <= 1 - |z|^2.
    bool is_contraction(double tol = 0.0) const;
};

/// mu_E(A) < 1 iff (tr A, det A) lies in the symmetrised bidisc and
/// |a21| kappa(tr A, det A) < 1.
bool mu_lt_one(const ComplexMatrix2& a);

/// Weak form: (tr A, det A) in the closure and |a21| <= fiber radius.
bool mu_le_one(const ComplexMatrix2& a, double tol = kTol);

/// The value of mu_E by bisection of the strict criterion over the bracket
/// [spectral radius, operator norm], to absolute tolerance 1e-10.
double mu_value(const ComplexMatrix2& a);

struct MuOracle {
    double value{};
    EPerturbation minimizer{};
    double min_norm{};  // 1 / value when value > 0
};

/// Definition-level oracle: minimizes ||X|| over the solution family of
/// det(1 - AX) = 0. For a21 != 0 the family is parametrized by z with
/// w(z) = (1 - s z + p z^2) / a21, scanned on a plane grid of pitch `grid`
/// and refined locally; for a21 = 0 the minimum reduces to the spectral
/// radius (w free, optimal at 0). Returns 0 when no X solves the equation.
MuOracle mu_oracle(const ComplexMatrix2& a, double grid);

}  // namespace penta
