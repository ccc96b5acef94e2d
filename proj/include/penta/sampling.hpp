#pragma once

#include <cstdint>
#include <random>

#include "penta/types.hpp"

namespace penta {

/// Seeded generators for the random objects the property suites draw:
/// disc points, ball matrices, bidisc points, interior pentablock points,
/// unitaries and boundary samples.
class Sampler {
  public:
    explicit Sampler(std::uint64_t seed) : gen_(seed) {}

    double uniform(double lo = 0.0, double hi = 1.0);
    double gaussian();
    Complex unit_complex();
    /// Uniform w.r.t. area on the disc of the given radius.
    Complex in_disc(double radius = 1.0);

    /// Entries i.i.d. uniform on the disc of the given radius.
    ComplexMatrix2 matrix_entries(double radius);
    /// Operator norm < 1 - margin, by rejection from unit-disc entries.
    ComplexMatrix2 matrix_in_ball(double margin = 0.0);
    /// Prescribed spectrum in the closed disc, conjugated by a random unitary.
    ComplexMatrix2 matrix_with_disc_spectrum();
    /// Haar-ish unitary via Gram-Schmidt on Gaussian columns.
    ComplexMatrix2 unitary();

    /// (l1 + l2, l1 l2) for independent disc roots; root moduli < 1 - margin.
    SymPoint sym_in_G(double root_margin = 0.0);
    /// Point of the closed bidisc boundary shell excluded by the margin.
    SymPoint sym_in_bGamma();

    /// Interior point with |a| <= (1 - margin) * fiber radius.
    PentaPoint penta_inside(double margin = 1e-6);
    /// Exterior point: |a| beyond the fiber radius, or a base outside Gamma.
    PentaPoint penta_outside(double push = 0.5);
    /// Exterior point whose base stays in the open bidisc.
    PentaPoint penta_outside_over_G(double push = 0.5);
    /// K1 sample: distinguished-boundary base, |a| within the unitary bound.
    PentaPoint k1_point();
    /// Distinguished-boundary sample of the pentablock.
    PentaPoint bp_point();

    std::mt19937_64& engine() { return gen_; }

  private:
    std::mt19937_64 gen_;
};

}  // namespace penta
