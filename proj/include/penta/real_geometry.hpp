#pragma once

#include <string>
#include <vector>

#include "penta/types.hpp"

namespace penta {

/// Whether (s, p) lies in the open real triangle |p| < 1, |s| < 1 + p
/// (the real slice of the symmetrised bidisc), with margin.
bool in_real_triangle(double s, double p, double margin = 0.0);

/// Radius of the real fiber: K(s, p) = 1 - (1 + p - sqrt((1+p)^2 - s^2)) / 2.
double K_real(double s, double p);

struct SymMatrix2 {
    double ss{}, sp{}, pp{};
    std::pair<double, double> eigenvalues() const;
};

/// Hessian of K, the rank-one matrix
///   [[-(1+p)^2, s(1+p)], [s(1+p), -s^2]] / (2 ((1+p)^2 - s^2)^{3/2});
/// negative semidefinite on the interior.
SymMatrix2 hessian_K(double s, double p);

bool in_real_pentablock(double a, double s, double p);

enum class Face { TrianglePlus, TriangleMinus, Ellipse, SurfacePlus, SurfaceMinus };

std::string face_label(Face f);

struct FaceClassification {
    std::vector<Face> faces;  // every face within tol; singleton for a facial point
    bool vertex{};
    std::string label() const;  // T+, T-, E, S+, S-, edge, vertex
};

/// Classifies a boundary point of the real pentablock; rejects points
/// farther than tol from the boundary.
FaceClassification classify_face(double a, double s, double p, double tol = 1e-9);

/// (z a, z s, z^2 p), the quasi-balanced scaling action.
PentaPoint scale_point(const PentaPoint& x, Complex z);

/// The decreasing radial profile f(r) = (1 + sqrt(1-|beta_r|^2)(1 - r^2 |p|^2)) / r^2
/// with beta_r = (r s - r^2 conj(s) p) / (1 - r^2 |p|^2).
double starlike_profile(double r, const SymPoint& q);

/// Closed-form derivative of the profile; strictly negative on (0, 1).
double starlike_derivative(double r, const SymPoint& q);

}  // namespace penta
