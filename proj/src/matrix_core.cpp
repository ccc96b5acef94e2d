#include "penta/matrix_core.hpp"

#include <algorithm>
#include <cmath>

namespace penta {

Complex trace(const ComplexMatrix2& m) { return m.a11 + m.a22; }

Complex determinant(const ComplexMatrix2& m) { return m.a11 * m.a22 - m.a12 * m.a21; }

std::pair<Complex, Complex> sort_root_pair(Complex r1, Complex r2) {
    if (r1.real() > r2.real() ||
        (r1.real() == r2.real() && r1.imag() > r2.imag())) {
        std::swap(r1, r2);
    }
    return {r1, r2};
}

std::pair<Complex, Complex> quadratic_roots(Complex s, Complex p) {
    const Complex sq = std::sqrt(s * s - 4.0 * p);
    // Pick the larger-magnitude branch first to avoid cancellation,
    // then recover the mate from the product of roots.
    const Complex big = (std::abs(s + sq) >= std::abs(s - sq)) ? s + sq : s - sq;
    if (std::abs(big) == 0.0) return sort_root_pair(0.0, 0.0);
    const Complex r1 = 0.5 * big;
    const Complex r2 = p / r1;
    return sort_root_pair(r1, r2);
}

std::pair<Complex, Complex> eigenvalues(const ComplexMatrix2& m) {
    return quadratic_roots(trace(m), determinant(m));
}

double spectral_radius(const ComplexMatrix2& m) {
    const auto [l1, l2] = eigenvalues(m);
    return std::max(std::abs(l1), std::abs(l2));
}

std::pair<double, double> singular_values(const ComplexMatrix2& m) {
    const double t = std::norm(m.a11) + std::norm(m.a12) + std::norm(m.a21) + std::norm(m.a22);
    const double d = std::abs(determinant(m));
    const double disc = std::max(0.0, t * t - 4.0 * d * d);
    const double smax = std::sqrt(0.5 * (t + std::sqrt(disc)));
    const double smin = smax > 0.0 ? d / smax : 0.0;
    return {smax, smin};
}

double operator_norm(const ComplexMatrix2& m) { return singular_values(m).first; }

double gram_determinant(const ComplexMatrix2& m) {
    const double t = std::norm(m.a11) + std::norm(m.a12) + std::norm(m.a21) + std::norm(m.a22);
    return 1.0 - t + std::norm(determinant(m));
}

PentaPoint pi_map(const ComplexMatrix2& m) { return {m.a21, trace(m), determinant(m)}; }

bool in_open_ball(const ComplexMatrix2& m, double tol) {
    return operator_norm(m) < 1.0 - tol;
}

bool in_open_ball_gram(const ComplexMatrix2& m, double tol) {
    if (spectral_radius(m) > 1.0 + 1e-9) {
        throw std::domain_error("in_open_ball_gram: spectrum not in the closed disc");
    }
    return gram_determinant(m) > tol;
}

}  // namespace penta
