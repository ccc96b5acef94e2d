#pragma once

#include <array>
#include <string>
#include <vector>

#include "penta/polynomial.hpp"
#include "penta/types.hpp"

namespace penta {

/// A contraction A with pi(A) = x, for x in the open pentablock.
/// Case |a| <= |w| (w^2 = s^2/4 - p) gets the phase construction
/// [[s/2 + sqrt(|w|^2-|a|^2) zeta, zeta^2 conj(a)], [a, s/2 - sqrt(|w|^2-|a|^2) zeta]];
/// otherwise [[s/2, w^2/a], [a, s/2]].
ComplexMatrix2 construct_matrix(const PentaPoint& x);

/// Closed-ball variant: operator norm <= 1 and pi round-trip, for x in the
/// closure. Boundary points over the distinguished boundary of Gamma go
/// through the unitary construction.
ComplexMatrix2 construct_matrix_closed(const PentaPoint& x, double tol = kTol);

/// A unitary U with pi(U) = x, for x in K1 (both roots unimodular and
/// |a| <= sqrt(1 - |s|^2/4)).
ComplexMatrix2 construct_unitary(const PentaPoint& x, double tol = kTol);

/// Polynomial map of the disc into C^3, coefficient lists low-to-high.
struct PolyTriple {
    Polynomial a, s, p;

    /// q = s^2/4 - p, the discriminant-like polynomial driving the lifting decision.
    Polynomial q() const;
};

struct LiftWitness {
    Complex alpha{};
    int q_multiplicity{};
    int a_multiplicity{};
    bool near_unit_circle{};
    bool obstruction{};  // odd q-multiplicity and a-multiplicity exceeding it
};

struct LiftDecision {
    bool exists{};
    std::vector<LiftWitness> witnesses;  // zeros of q in the disc, with both multiplicities
    std::string note;
};

/// Decides existence of an analytic lifting for polynomial data: a lift fails
/// exactly when some zero of q in the open disc has odd multiplicity n while
/// a vanishes there to order greater than n.
LiftDecision analytic_lift_exists(const PolyTriple& h);

struct PolynomialLift {
    bool polynomial{};       // false: a lift exists but no polynomial one was found
    Polynomial eta, g;       // eta^2 = q - g a when polynomial
    std::array<Polynomial, 4> H{};  // [[s/2 - eta, g], [a, s/2 + eta]] row-major
    std::string note;
};

/// Searches for a polynomial lifting H with pi(H) = h, by choosing g so that
/// q - g a is a perfect square. Rejects data failing analytic_lift_exists.
PolynomialLift polynomial_lift(const PolyTriple& h);

}  // namespace penta
