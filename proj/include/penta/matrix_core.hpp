#pragma once

#include <utility>

#include "penta/types.hpp"

namespace penta {

Complex trace(const ComplexMatrix2& m);
Complex determinant(const ComplexMatrix2& m);

/// Roots of the characteristic polynomial, ordered lexicographically
/// by real part then imaginary part.
std::pair<Complex, Complex> eigenvalues(const ComplexMatrix2& m);

double spectral_radius(const ComplexMatrix2& m);

/// Largest singular value, in closed form from tr(A*A) and |det A|.
double operator_norm(const ComplexMatrix2& m);

std::pair<double, double> singular_values(const ComplexMatrix2& m);

/// det(1 - A*A) = 1 - tr(A*A) + |det A|^2.
double gram_determinant(const ComplexMatrix2& m);

/// The projection A -> (a21, tr A, det A).
PentaPoint pi_map(const ComplexMatrix2& m);

/// operator_norm(m) < 1 - tol.
bool in_open_ball(const ComplexMatrix2& m, double tol = 0.0);

/// Alternative route: for a matrix with spectrum in the closed disc,
/// membership in the open ball is equivalent to det(1 - A*A) > 0.
/// Rejects matrices whose spectral radius exceeds 1.
bool in_open_ball_gram(const ComplexMatrix2& m, double tol = 0.0);

/// Orders a root pair lexicographically by (re, im). Shared by every
/// routine that must list eigenvalues deterministically.
std::pair<Complex, Complex> sort_root_pair(Complex r1, Complex r2);

/// Stable roots of z^2 - s z + p.
std::pair<Complex, Complex> quadratic_roots(Complex s, Complex p);

}  // namespace penta
