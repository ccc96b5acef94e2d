#pragma once

#include <vector>

#include "penta/types.hpp"

namespace penta {

/// Univariate complex polynomial, coefficients low-to-high degree,
/// normalized so the leading stored coefficient is nonzero.
/// Construction goes through an explicit coefficient vector; a braced pair of
/// raw doubles would otherwise collapse into a single complex coefficient.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Complex> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial zero() { return {}; }
    static Polynomial constant(Complex v) { return Polynomial(std::vector<Complex>{v}); }
    /// c * x^k
    static Polynomial monomial(Complex coeff, int k);

    bool is_zero(double tol = 0.0) const;
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for the zero polynomial
    Complex coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : 0.0; }
    const std::vector<Complex>& coeffs() const { return c_; }
    Complex leading() const { return c_.empty() ? Complex{} : c_.back(); }
    double max_coeff_abs() const;

    Complex eval(Complex x) const;
    Polynomial derivative() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(Complex v) const;
    Polynomial operator-() const { return *this * Complex{-1.0}; }

    /// Quotient and remainder by a nonzero divisor.
    std::pair<Polynomial, Polynomial> divrem(const Polynomial& divisor) const;

    /// Drops trailing coefficients of magnitude <= tol * max |coeff|.
    void trim(double tol = 0.0);

    /// All complex roots by the Aberth-Ehrlich iteration.
    std::vector<Complex> roots() const;

  private:
    std::vector<Complex> c_;
};

struct RootCluster {
    Complex center{};
    int multiplicity{};
    bool near_unit_circle{};  // within 1e-9 of the circle, classification ambiguous
};

/// Groups numerically computed roots into clusters of the given radius;
/// cluster size stands in for multiplicity.
std::vector<RootCluster> cluster_roots(const std::vector<Complex>& roots,
                                       double radius = 1e-7);

/// Multiplicity of alpha as a zero of f, counted by root clustering.
int multiplicity_at(const Polynomial& f, Complex alpha, double radius = 1e-7);

}  // namespace penta
