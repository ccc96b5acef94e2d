#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

namespace penta {

using Complex = std::complex<double>;

// Default tolerance for weak (closed-set) membership inequalities.
inline constexpr double kTol = 1e-10;

inline bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// A 2x2 complex matrix, the ambient object of the matrix ball.
struct ComplexMatrix2 {
    Complex a11{}, a12{}, a21{}, a22{};

    static ComplexMatrix2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static ComplexMatrix2 zero() { return {}; }
    static ComplexMatrix2 diagonal(Complex l1, Complex l2) { return {l1, 0.0, 0.0, l2}; }

    ComplexMatrix2 adjoint() const {
        return {std::conj(a11), std::conj(a21), std::conj(a12), std::conj(a22)};
    }

    bool finite() const {
        return is_finite(a11) && is_finite(a12) && is_finite(a21) && is_finite(a22);
    }

    friend ComplexMatrix2 operator*(const ComplexMatrix2& x, const ComplexMatrix2& y) {
        return {x.a11 * y.a11 + x.a12 * y.a21, x.a11 * y.a12 + x.a12 * y.a22,
                x.a21 * y.a11 + x.a22 * y.a21, x.a21 * y.a12 + x.a22 * y.a22};
    }
    friend ComplexMatrix2 operator*(Complex c, const ComplexMatrix2& x) {
        return {c * x.a11, c * x.a12, c * x.a21, c * x.a22};
    }
    friend ComplexMatrix2 operator+(const ComplexMatrix2& x, const ComplexMatrix2& y) {
        return {x.a11 + y.a11, x.a12 + y.a12, x.a21 + y.a21, x.a22 + y.a22};
    }
    friend ComplexMatrix2 operator-(const ComplexMatrix2& x, const ComplexMatrix2& y) {
        return {x.a11 - y.a11, x.a12 - y.a12, x.a21 - y.a21, x.a22 - y.a22};
    }
};

/// A candidate point (s, p) of the symmetrised bidisc or its closure.
struct SymPoint {
    Complex s{}, p{};
};

/// A candidate point (a, s, p) of the pentablock.
struct PentaPoint {
    Complex a{}, s{}, p{};

    SymPoint base() const { return {s, p}; }
};

}  // namespace penta
