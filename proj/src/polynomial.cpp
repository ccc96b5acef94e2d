#include "penta/polynomial.hpp"

#include <algorithm>
#include <cmath>

namespace penta {

Polynomial Polynomial::monomial(Complex coeff, int k) {
    std::vector<Complex> c(k + 1, Complex{});
    c[k] = coeff;
    return Polynomial(std::move(c));
}

bool Polynomial::is_zero(double tol) const {
    for (Complex v : c_) {
        if (std::abs(v) > tol) return false;
    }
    return true;
}

double Polynomial::max_coeff_abs() const {
    double m = 0.0;
    for (Complex v : c_) m = std::max(m, std::abs(v));
    return m;
}

Complex Polynomial::eval(Complex x) const {
    Complex acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Complex> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = static_cast<double>(i) * c_[i];
    return Polynomial(std::move(d));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<Complex> r(std::max(c_.size(), o.c_.size()), Complex{});
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return Polynomial(std::move(r));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + o * Complex{-1.0}; }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (c_.empty() || o.c_.empty()) return {};
    std::vector<Complex> r(c_.size() + o.c_.size() - 1, Complex{});
    for (std::size_t i = 0; i < c_.size(); ++i) {
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return Polynomial(std::move(r));
}

Polynomial Polynomial::operator*(Complex v) const {
    std::vector<Complex> r = c_;
    for (Complex& x : r) x *= v;
    return Polynomial(std::move(r));
}

std::pair<Polynomial, Polynomial> Polynomial::divrem(const Polynomial& divisor) const {
    if (divisor.c_.empty()) throw std::invalid_argument("Polynomial::divrem: division by zero");
    std::vector<Complex> rem = c_;
    const int dd = divisor.degree();
    const Complex lead = divisor.c_.back();
    if (static_cast<int>(rem.size()) - 1 < dd) return {Polynomial{}, Polynomial(std::move(rem))};
    std::vector<Complex> quo(rem.size() - dd, Complex{});
    for (int k = static_cast<int>(rem.size()) - 1; k >= dd; --k) {
        const Complex q = rem[k] / lead;
        quo[k - dd] = q;
        for (int j = 0; j <= dd; ++j) rem[k - dd + j] -= q * divisor.c_[j];
        rem[k] = 0.0;
    }
    rem.resize(dd > 0 ? dd : 1);
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

void Polynomial::trim(double tol) {
    const double cut = tol * max_coeff_abs();
    while (!c_.empty() && std::abs(c_.back()) <= cut) c_.pop_back();
}

std::vector<Complex> Polynomial::roots() const {
    const int n = degree();
    if (n <= 0) return {};
    if (n == 1) return {-c_[0] / c_[1]};

    // Aberth-Ehrlich from staggered points on a Cauchy-bound circle.
    const Complex lead = c_.back();
    double radius = 0.0;
    for (int i = 0; i < n; ++i) radius = std::max(radius, std::abs(c_[i] / lead));
    radius = 1.0 + radius;

    std::vector<Complex> z(n);
    for (int k = 0; k < n; ++k) {
        z[k] = std::polar(0.5 * radius, 2.0 * M_PI * k / n + 0.7);
    }

    const double scale = max_coeff_abs();
    const Polynomial deriv = derivative();
    for (int iter = 0; iter < 400; ++iter) {
        double worst = 0.0;
        for (int k = 0; k < n; ++k) {
            const Complex fv = eval(z[k]);
            const Complex dv = deriv.eval(z[k]);
            Complex ratio;
            if (std::abs(dv) > 0.0) {
                ratio = fv / dv;
            } else {
                ratio = fv / (scale * 1e-16);
            }
            Complex sum = 0.0;
            for (int j = 0; j < n; ++j) {
                if (j != k) sum += 1.0 / (z[k] - z[j]);
            }
            const Complex denom = 1.0 - ratio * sum;
            const Complex step = std::abs(denom) > 1e-300 ? ratio / denom : ratio;
            z[k] -= step;
            worst = std::max(worst, std::abs(step));
        }
        if (worst < 1e-14 * radius) break;
    }
    return z;
}

std::vector<RootCluster> cluster_roots(const std::vector<Complex>& roots, double radius) {
    std::vector<RootCluster> clusters;
    std::vector<Complex> sums;
    for (Complex r : roots) {
        bool placed = false;
        for (std::size_t i = 0; i < clusters.size(); ++i) {
            if (std::abs(r - clusters[i].center) <= radius * std::max(1.0, std::abs(clusters[i].center))) {
                sums[i] += r;
                clusters[i].multiplicity += 1;
                clusters[i].center = sums[i] / static_cast<double>(clusters[i].multiplicity);
                placed = true;
                break;
            }
        }
        if (!placed) {
            clusters.push_back({r, 1, false});
            sums.push_back(r);
        }
    }
    for (RootCluster& c : clusters) {
        c.near_unit_circle = std::abs(std::abs(c.center) - 1.0) <= 1e-9;
    }
    return clusters;
}

int multiplicity_at(const Polynomial& f, Complex alpha, double radius) {
    if (f.is_zero()) return -1;  // callers treat the zero polynomial separately
    int count = 0;
    for (Complex r : f.roots()) {
        if (std::abs(r - alpha) <= radius * std::max(1.0, std::abs(alpha))) ++count;
    }
    return count;
}

}  // namespace penta
