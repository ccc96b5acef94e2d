#include <doctest.h>

#include <cmath>

#include "penta/sampling.hpp"
#include "penta/symmetrised_bidisc.hpp"

using namespace penta;

TEST_CASE("open bidisc membership") {
    CHECK(in_G({0.0, 0.0}));
    CHECK_FALSE(in_G({Complex{1.0, 1.0}, 0.0}));
    CHECK(in_G({1.0, 0.25}));  // double root 1/2
}

TEST_CASE("closed bidisc membership") {
    CHECK(in_Gamma({2.0, 1.0}));
    CHECK_FALSE(in_Gamma({Complex{1.0, 1.0}, 0.0}));
    CHECK(in_Gamma({0.0, -1.0}));
}

TEST_CASE("beta parameter") {
    CHECK(std::abs(beta_of({0.0, 0.7})) == 0.0);
    CHECK(std::abs(beta_of({0.0, Complex{0.3, -0.4}})) == 0.0);
    // |p| = 1 takes the canonical beta = s/2.
    CHECK(std::abs(beta_of({2.0 / 3.0, 1.0}) - Complex{1.0 / 3.0}) < 1e-15);
    // (1, 0): roots {0, 1}, beta = 1 from the direct formula.
    const Complex b = beta_of({1.0, 0.0});
    CHECK(std::abs(b - Complex{1.0}) < 1e-15);
    CHECK(std::abs(Complex{1.0} - b - std::conj(b) * 0.0) < 1e-15);
    CHECK_THROWS_AS(beta_of({Complex{1.0, 1.0}, 0.0}), std::domain_error);
}

TEST_CASE("beta parametrizes the open bidisc") {
    Sampler rng(21);
    for (int i = 0; i < 10000; ++i) {
        const SymPoint q = rng.sym_in_G();
        CHECK(in_G(q));
        const Complex b = beta_of(q);
        CHECK(std::abs(b) < 1.0);
        CHECK(std::abs(q.s - b - std::conj(b) * q.p) < 1e-10);
    }
}

TEST_CASE("roots") {
    const auto [r1, r2] = roots_of({0.0, -1.0});
    CHECK(std::abs(r1 - Complex{-1.0}) < 1e-14);
    CHECK(std::abs(r2 - Complex{1.0}) < 1e-14);

    const auto [d1, d2] = roots_of({2.0, 1.0});
    CHECK(std::abs(d1 - Complex{1.0}) < 1e-14);
    CHECK(std::abs(d2 - Complex{1.0}) < 1e-14);

    const auto [z1, z2] = roots_of({0.0, 0.0});
    CHECK(std::abs(z1) + std::abs(z2) == 0.0);
}

TEST_CASE("distinguished boundary of Gamma") {
    CHECK(in_bGamma({2.0, 1.0}));
    CHECK(in_bGamma({0.0, -1.0}));
    CHECK_FALSE(in_bGamma({0.0, 0.0}));
}

TEST_CASE("membership implications") {
    Sampler rng(24);
    for (int i = 0; i < 5000; ++i) {
        const SymPoint q = rng.sym_in_G();
        CHECK(in_Gamma(q));
        const SymPoint b = rng.sym_in_bGamma();
        CHECK(in_bGamma(b, 1e-9));
        CHECK(in_Gamma(b, 1e-9));
        // Exactly-generated boundary points sit in the roundoff shell of the
        // strict test; assert exclusion from the shrunken domain instead.
        CHECK_FALSE(in_G(b, 1e-9));
    }
}

TEST_CASE("membership criteria agree away from the boundary shell") {
    Sampler rng(22);
    for (int i = 0; i < 10000; ++i) {
        const Complex s{rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)};
        const Complex p{rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5)};
        const SymPoint q{s, p};
        // Exclude a shell around the boundary where the two routes may
        // legitimately differ at roundoff scale.
        const auto [r1, r2] = roots_of(q);
        const double gap = std::max(std::abs(r1), std::abs(r2)) - 1.0;
        if (std::abs(gap) < 1e-8) continue;
        CHECK(in_Gamma(q) == in_Gamma_beta(q));
    }
}

TEST_CASE("tau action") {
    const SymPoint q{2.0, 1.0};
    const SymPoint same = tau_apply(MobiusParams::identity(), q);
    CHECK(std::abs(same.s - q.s) < 1e-14);
    CHECK(std::abs(same.p - q.p) < 1e-14);

    // v(z) = -iz sends the roots +-i of (0, 1) to +-1.
    const SymPoint moved = tau_apply(MobiusParams::make(Complex{0.0, -1.0}, 0.0), {0.0, 1.0});
    CHECK(std::abs(moved.s) < 1e-14);
    CHECK(std::abs(moved.p - Complex{-1.0}) < 1e-14);

    const SymPoint flipped = tau_apply(MobiusParams::make(-1.0, 0.0), {2.0, 1.0});
    CHECK(std::abs(flipped.s - Complex{-2.0}) < 1e-14);
    CHECK(std::abs(flipped.p - Complex{1.0}) < 1e-14);
}

TEST_CASE("tau respects composition and stays in Gamma") {
    Sampler rng(23);
    for (int i = 0; i < 2000; ++i) {
        const MobiusParams m1 = MobiusParams::make(rng.unit_complex(), rng.in_disc(0.9));
        const MobiusParams m2 = MobiusParams::make(rng.unit_complex(), rng.in_disc(0.9));
        const SymPoint q = rng.sym_in_G();
        const SymPoint once = tau_apply(mobius_compose(m1, m2), q);
        const SymPoint twice = tau_apply(m1, tau_apply(m2, q));
        CHECK(std::abs(once.s - twice.s) < 1e-10);
        CHECK(std::abs(once.p - twice.p) < 1e-10);
        CHECK(in_Gamma(once, 1e-9));
    }
}
