#include <doctest.h>

#include <cmath>

#include "penta/automorphisms.hpp"
#include "penta/matrix_core.hpp"
#include "penta/pentablock.hpp"
#include "penta/sampling.hpp"
#include "penta/symmetrised_bidisc.hpp"

using namespace penta;

namespace {

AutoParams random_params(Sampler& rng, double alpha_radius = 0.9) {
    return AutoParams::make(rng.unit_complex(),
                            MobiusParams::make(rng.unit_complex(), rng.in_disc(alpha_radius)));
}

double point_distance(const PentaPoint& x, const PentaPoint& y) {
    return std::max({std::abs(x.a - y.a), std::abs(x.s - y.s), std::abs(x.p - y.p)});
}

}  // namespace

TEST_CASE("mobius basics") {
    const MobiusParams id = MobiusParams::identity();
    CHECK(std::abs(mobius_apply(id, Complex{0.3, 0.4}) - Complex{0.3, 0.4}) < 1e-15);

    const MobiusParams m = MobiusParams::make(std::polar(1.0, 0.7), Complex{0.3, -0.2});
    CHECK(std::abs(mobius_apply(m, m.alpha)) < 1e-15);
}

TEST_CASE("mobius maps the circle to the circle") {
    Sampler rng(61);
    for (int i = 0; i < 1000; ++i) {
        const MobiusParams m = MobiusParams::make(rng.unit_complex(), rng.in_disc(0.95));
        CHECK(std::abs(std::abs(mobius_apply(m, rng.unit_complex())) - 1.0) < 1e-12);
        CHECK(std::abs(mobius_apply(m, rng.in_disc())) < 1.0 + 1e-12);
    }
}

TEST_CASE("mobius composition matches pointwise composition") {
    Sampler rng(62);
    for (int i = 0; i < 200; ++i) {
        const MobiusParams m1 = MobiusParams::make(rng.unit_complex(), rng.in_disc(0.9));
        const MobiusParams m2 = MobiusParams::make(rng.unit_complex(), rng.in_disc(0.9));
        const MobiusParams mc = mobius_compose(m1, m2);
        for (int k = 0; k < 100; ++k) {
            const Complex z = rng.in_disc();
            CHECK(std::abs(mobius_apply(mc, z) - mobius_apply(m1, mobius_apply(m2, z))) < 1e-12);
        }
    }
}

TEST_CASE("mobius identity and inverse laws") {
    Sampler rng(63);
    for (int i = 0; i < 500; ++i) {
        const MobiusParams m = MobiusParams::make(rng.unit_complex(), rng.in_disc(0.9));
        const MobiusParams same = mobius_compose(m, MobiusParams::identity());
        CHECK(std::abs(same.eta - m.eta) < 1e-12);
        CHECK(std::abs(same.alpha - m.alpha) < 1e-12);
        const MobiusParams id = mobius_compose(m, mobius_inverse(m));
        CHECK(std::abs(id.eta - Complex{1.0}) < 1e-10);
        CHECK(std::abs(id.alpha) < 1e-10);
    }
}

TEST_CASE("pentablock action basics") {
    Sampler rng(64);
    const PentaPoint x{0.3, Complex{0.4, 0.1}, Complex{-0.2, 0.05}};
    const PentaPoint same = f_apply(AutoParams::identity(), x);
    CHECK(point_distance(same, x) < 1e-15);

    // alpha = 0 reduces to coordinatewise rotation (eta omega a, eta s, eta^2 p).
    for (int i = 0; i < 100; ++i) {
        const Complex eta = rng.unit_complex(), omega = rng.unit_complex();
        const AutoParams g = AutoParams::make(omega, MobiusParams::make(eta, 0.0));
        const PentaPoint y = f_apply(g, x);
        CHECK(std::abs(y.a - eta * omega * x.a) < 1e-14);
        CHECK(std::abs(y.s - eta * x.s) < 1e-14);
        CHECK(std::abs(y.p - eta * eta * x.p) < 1e-14);
    }
}

TEST_CASE("pentablock action symmetrizes the disc action on roots") {
    Sampler rng(65);
    for (int i = 0; i < 1000; ++i) {
        const AutoParams g = random_params(rng);
        const Complex l1 = rng.in_disc(), l2 = rng.in_disc();
        const PentaPoint x{rng.in_disc(), l1 + l2, l1 * l2};
        const PentaPoint y = f_apply(g, x);
        const Complex v1 = mobius_apply(g.mobius, l1);
        const Complex v2 = mobius_apply(g.mobius, l2);
        CHECK(std::abs(y.s - (v1 + v2)) < 1e-12);
        CHECK(std::abs(y.p - v1 * v2) < 1e-12);
    }
}

TEST_CASE("ball action basics") {
    Sampler rng(66);
    const ComplexMatrix2 a = rng.matrix_in_ball();
    const ComplexMatrix2 same = F_apply(AutoParams::identity(), a);
    CHECK(std::abs(same.a11 - a.a11) + std::abs(same.a12 - a.a12) + std::abs(same.a21 - a.a21) +
              std::abs(same.a22 - a.a22) <
          1e-14);

    // A = 0: the action sends 0 to -eta alpha I (conjugation leaves scalars fixed).
    const double alpha = 0.37;
    const Complex eta = rng.unit_complex();
    const AutoParams g = AutoParams::make(rng.unit_complex(), MobiusParams::make(eta, alpha));
    const ComplexMatrix2 img = F_apply(g, ComplexMatrix2::zero());
    CHECK(std::abs(img.a11 + eta * alpha) < 1e-14);
    CHECK(std::abs(img.a22 + eta * alpha) < 1e-14);
    CHECK(std::abs(img.a12) + std::abs(img.a21) < 1e-14);

    for (int i = 0; i < 500; ++i) {
        CHECK(operator_norm(F_apply(random_params(rng), rng.matrix_in_ball())) < 1.0);
    }
}

TEST_CASE("group laws") {
    Sampler rng(67);
    for (int i = 0; i < 500; ++i) {
        const AutoParams g = random_params(rng);
        const AutoParams id = group_compose(g, group_inverse(g));
        CHECK(std::abs(id.omega - Complex{1.0}) < 1e-10);
        CHECK(std::abs(id.mobius.eta - Complex{1.0}) < 1e-10);
        CHECK(std::abs(id.mobius.alpha) < 1e-10);

        const AutoParams g2 = random_params(rng);
        CHECK(std::abs(group_compose(g, g2).omega - g.omega * g2.omega) < 1e-12);
    }
}

TEST_CASE("associativity acts pointwise") {
    Sampler rng(68);
    for (int i = 0; i < 200; ++i) {
        const AutoParams g1 = random_params(rng), g2 = random_params(rng),
                         g3 = random_params(rng);
        const PentaPoint x = pi_map(rng.matrix_in_ball());
        const PentaPoint left = f_apply(group_compose(group_compose(g1, g2), g3), x);
        const PentaPoint right = f_apply(group_compose(g1, group_compose(g2, g3)), x);
        CHECK(point_distance(left, right) < 1e-10);
    }
}

TEST_CASE("intertwining with the projection") {
    Sampler rng(69);
    for (int i = 0; i < 2000; ++i) {
        const AutoParams g = random_params(rng);
        const ComplexMatrix2 a = rng.matrix_in_ball();
        CHECK(point_distance(f_apply(g, pi_map(a)), pi_map(F_apply(g, a))) < 1e-10);
    }
}

TEST_CASE("spectral mapping") {
    Sampler rng(70);
    for (int i = 0; i < 1000; ++i) {
        const AutoParams g = random_params(rng);
        const ComplexMatrix2 a = rng.matrix_in_ball();
        const auto [l1, l2] = eigenvalues(a);
        const auto [w1, w2] =
            sort_root_pair(mobius_apply(g.mobius, l1), mobius_apply(g.mobius, l2));
        const auto [f1, f2] = eigenvalues(F_apply(g, a));
        CHECK(std::abs(w1 - f1) < 1e-9);
        CHECK(std::abs(w2 - f2) < 1e-9);
    }
}

TEST_CASE("membership preservation in both directions") {
    Sampler rng(71);
    for (int i = 0; i < 2000; ++i) {
        const AutoParams g = random_params(rng);
        const PentaPoint inside = rng.penta_inside(1e-6);
        const PentaPoint im = f_apply(g, inside);
        if (in_G(im.base()) && std::abs(fiber_radius(im.base()) - std::abs(im.a)) > 1e-12) {
            CHECK(in_pentablock(im));
        }
        const PentaPoint outside = rng.penta_outside_over_G();
        const PentaPoint om = f_apply(g, outside);
        if (!in_G(om.base()) || std::abs(fiber_radius(om.base()) - std::abs(om.a)) > 1e-12) {
            CHECK_FALSE(in_pentablock(om));
        }
    }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(MobiusParams::make(Complex{0.5, 0.0}, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(MobiusParams::make(Complex{1.0, 0.0}, Complex{1.2, 0.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(AutoParams::make(Complex{0.0, 0.0}, MobiusParams::identity()),
                    std::invalid_argument);
}
