#include "penta/real_geometry.hpp"

#include <algorithm>
#include <cmath>

#include "penta/symmetrised_bidisc.hpp"

namespace penta {

bool in_real_triangle(double s, double p, double margin) {
    return std::abs(p) < 1.0 - margin && std::abs(s) < 1.0 + p - margin;
}

namespace {

// K extended to the closed triangle (radicand clamped at zero).
double K_closed(double s, double p) {
    const double rad = std::max(0.0, (1.0 + p) * (1.0 + p) - s * s);
    return 1.0 - 0.5 * (1.0 + p - std::sqrt(rad));
}

}  // namespace

double K_real(double s, double p) {
    if (!in_real_triangle(s, p)) {
        throw std::domain_error("K_real: (s, p) outside the open real triangle");
    }
    return K_closed(s, p);
}

std::pair<double, double> SymMatrix2::eigenvalues() const {
    const double mean = 0.5 * (ss + pp);
    const double rad = std::hypot(0.5 * (ss - pp), sp);
    return {mean - rad, mean + rad};
}

SymMatrix2 hessian_K(double s, double p) {
    if (!in_real_triangle(s, p)) {
        throw std::domain_error("hessian_K: (s, p) outside the open real triangle");
    }
    const double d = (1.0 + p) * (1.0 + p) - s * s;
    const double f = 0.5 / (d * std::sqrt(d));
    return {-f * (1.0 + p) * (1.0 + p), f * s * (1.0 + p), -f * s * s};
}

bool in_real_pentablock(double a, double s, double p) {
    return in_real_triangle(s, p) && std::abs(a) < K_closed(s, p);
}

std::string face_label(Face f) {
    switch (f) {
        case Face::TrianglePlus: return "T+";
        case Face::TriangleMinus: return "T-";
        case Face::Ellipse: return "E";
        case Face::SurfacePlus: return "S+";
        case Face::SurfaceMinus: return "S-";
    }
    return "?";
}

std::string FaceClassification::label() const {
    if (vertex) return "vertex";
    if (faces.size() == 1) return face_label(faces.front());
    return "edge";
}

FaceClassification classify_face(double a, double s, double p, double tol) {
    const bool in_closed_triangle = std::abs(p) <= 1.0 + tol && std::abs(s) <= 1.0 + p + tol;
    if (!in_closed_triangle || std::abs(a) > K_closed(s, p) + tol) {
        throw std::domain_error("classify_face: point lies outside the closed real pentablock");
    }
    if (in_real_triangle(s, p, tol) && std::abs(a) < K_closed(s, p) - tol) {
        throw std::domain_error("classify_face: point lies in the interior");
    }

    FaceClassification out;
    auto near = [&](double u, double v) { return std::abs(u - v) <= tol; };

    struct VertexSpec {
        double a, s, p;
        std::vector<Face> faces;
    };
    static const std::vector<VertexSpec> vertices = {
        {0.0, 2.0, 1.0, {Face::TrianglePlus, Face::Ellipse, Face::SurfacePlus, Face::SurfaceMinus}},
        {0.0, -2.0, 1.0, {Face::TriangleMinus, Face::Ellipse, Face::SurfacePlus, Face::SurfaceMinus}},
        {1.0, 0.0, -1.0, {Face::TrianglePlus, Face::TriangleMinus, Face::SurfacePlus}},
        {-1.0, 0.0, -1.0, {Face::TrianglePlus, Face::TriangleMinus, Face::SurfaceMinus}},
    };
    for (const auto& v : vertices) {
        if (near(a, v.a) && near(s, v.s) && near(p, v.p)) {
            out.vertex = true;
            out.faces = v.faces;
            return out;
        }
    }

    // The p = -1 segment collapses the triangle to s = 0; the four non-ellipse
    // faces are taken to share it as an edge.
    if (near(p, -1.0) && std::abs(s) <= tol && std::abs(a) <= 1.0 + tol) {
        out.faces = {Face::TrianglePlus, Face::TriangleMinus, Face::SurfacePlus, Face::SurfaceMinus};
        return out;
    }

    if (near(s, 1.0 + p) && std::abs(a) <= std::abs(1.0 - 0.5 * s) + tol) {
        out.faces.push_back(Face::TrianglePlus);
    }
    if (near(-s, 1.0 + p) && std::abs(a) <= std::abs(1.0 + 0.5 * s) + tol) {
        out.faces.push_back(Face::TriangleMinus);
    }
    if (near(p, 1.0) && a * a + 0.25 * s * s <= 1.0 + tol) {
        out.faces.push_back(Face::Ellipse);
    }
    const double k = K_closed(s, p);
    if (near(a, k)) out.faces.push_back(Face::SurfacePlus);
    if (near(a, -k)) out.faces.push_back(Face::SurfaceMinus);

    if (out.faces.empty()) {
        throw std::domain_error("classify_face: boundary point matched no face");
    }
    return out;
}

PentaPoint scale_point(const PentaPoint& x, Complex z) {
    return {z * x.a, z * x.s, z * z * x.p};
}

namespace {

Complex beta_scaled(double r, const SymPoint& q) {
    return (r * q.s - r * r * std::conj(q.s) * q.p) / (1.0 - r * r * std::norm(q.p));
}

}  // namespace

double starlike_profile(double r, const SymPoint& q) {
    if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("starlike_profile: r must lie in (0, 1)");
    if (!in_G(q)) throw std::domain_error("starlike_profile: point not in the symmetrised bidisc");
    const Complex br = beta_scaled(r, q);
    const double rt = std::sqrt(std::max(0.0, 1.0 - std::norm(br)));
    return (1.0 + rt * (1.0 - r * r * std::norm(q.p))) / (r * r);
}

double starlike_derivative(double r, const SymPoint& q) {
    if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("starlike_derivative: r must lie in (0, 1)");
    if (!in_G(q)) throw std::domain_error("starlike_derivative: point not in the symmetrised bidisc");
    const Complex br = beta_scaled(r, q);
    const double b2 = std::norm(br);
    const double rt = std::sqrt(std::max(1e-300, 1.0 - b2));
    const double r2 = r * r, r3 = r2 * r;
    return -2.0 / r3 - (2.0 - b2) / (r3 * rt) +
           (q.p * std::conj(br) * std::conj(br)).real() / (r2 * rt);
}

}  // namespace penta
