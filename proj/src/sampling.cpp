#include "penta/sampling.hpp"

#include <cmath>

#include "penta/boundary.hpp"
#include "penta/matrix_core.hpp"
#include "penta/pentablock.hpp"

namespace penta {

double Sampler::uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(gen_);
}

double Sampler::gaussian() { return std::normal_distribution<double>(0.0, 1.0)(gen_); }

Complex Sampler::unit_complex() { return std::polar(1.0, uniform(0.0, 2.0 * M_PI)); }

Complex Sampler::in_disc(double radius) {
    return std::polar(radius * std::sqrt(uniform()), uniform(0.0, 2.0 * M_PI));
}

ComplexMatrix2 Sampler::matrix_entries(double radius) {
    return {in_disc(radius), in_disc(radius), in_disc(radius), in_disc(radius)};
}

ComplexMatrix2 Sampler::matrix_in_ball(double margin) {
    while (true) {
        const ComplexMatrix2 m = matrix_entries(1.0);
        if (operator_norm(m) < 1.0 - margin) return m;
    }
}

ComplexMatrix2 Sampler::matrix_with_disc_spectrum() {
    const ComplexMatrix2 upper{in_disc(1.0), in_disc(2.0), 0.0, in_disc(1.0)};
    const ComplexMatrix2 u = unitary();
    return u * upper * u.adjoint();
}

ComplexMatrix2 Sampler::unitary() {
    Complex g11{gaussian(), gaussian()}, g21{gaussian(), gaussian()};
    const double n1 = std::sqrt(std::norm(g11) + std::norm(g21));
    g11 /= n1;
    g21 /= n1;
    // Second column: orthogonal unit vector, randomized by a phase.
    const Complex phase = unit_complex();
    return {g11, -std::conj(g21) * phase, g21, std::conj(g11) * phase};
}

SymPoint Sampler::sym_in_G(double root_margin) {
    const Complex l1 = in_disc(1.0 - root_margin);
    const Complex l2 = in_disc(1.0 - root_margin);
    return {l1 + l2, l1 * l2};
}

SymPoint Sampler::sym_in_bGamma() {
    const Complex z1 = unit_complex();
    const Complex z2 = unit_complex();
    return {z1 + z2, z1 * z2};
}

PentaPoint Sampler::penta_inside(double margin) {
    const SymPoint q = sym_in_G();
    const double radius = fiber_radius(q);
    return {std::polar(uniform(0.0, 1.0 - margin) * radius, uniform(0.0, 2.0 * M_PI)), q.s, q.p};
}

PentaPoint Sampler::penta_outside(double push) {
    // Mix of failure modes: |a| beyond the fiber radius over a good base,
    // or a base outside the bidisc entirely.
    if (uniform() < 0.7) return penta_outside_over_G(push);
    const Complex l1 = std::polar(uniform(1.0 + 1e-6, 1.5), uniform(0.0, 2.0 * M_PI));
    const Complex l2 = in_disc(1.4);
    return {in_disc(1.2), l1 + l2, l1 * l2};
}

PentaPoint Sampler::penta_outside_over_G(double push) {
    const SymPoint q = sym_in_G();
    const double radius = fiber_radius(q);
    return {std::polar(radius * (1.0 + uniform(1e-6, push)), uniform(0.0, 2.0 * M_PI)), q.s, q.p};
}

PentaPoint Sampler::k1_point() {
    const SymPoint q = sym_in_bGamma();
    const double bound = std::sqrt(std::max(0.0, 1.0 - 0.25 * std::norm(q.s)));
    return {std::polar(uniform() * bound, uniform(0.0, 2.0 * M_PI)), q.s, q.p};
}

PentaPoint Sampler::bp_point() {
    return bP_parametrize(uniform(-1.0, 1.0), uniform(0.0, 2.0 * M_PI), unit_complex());
}

}  // namespace penta
