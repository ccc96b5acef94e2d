#include <doctest.h>

#include <cmath>

#include "penta/matrix_core.hpp"
#include "penta/sampling.hpp"

using namespace penta;

namespace {
const ComplexMatrix2 kCompanion{0.0, -1.0, 0.25, 0.0};  // [[0, -1], [l, 0]] at l = 1/4
}

TEST_CASE("trace") {
    CHECK(trace(ComplexMatrix2::identity()) == Complex{2.0});
    CHECK(trace(ComplexMatrix2::zero()) == Complex{0.0});
    CHECK(trace(kCompanion) == Complex{0.0});
}

TEST_CASE("determinant") {
    CHECK(determinant(ComplexMatrix2::identity()) == Complex{1.0});
    CHECK(determinant(kCompanion) == Complex{0.25});
    CHECK(std::abs(determinant(ComplexMatrix2::diagonal({0.3, 0.1}, {-0.2, 0.7})) -
                   Complex{0.3, 0.1} * Complex{-0.2, 0.7}) < 1e-15);
}

TEST_CASE("eigenvalues closed form") {
    const auto [d1, d2] = eigenvalues(ComplexMatrix2::diagonal(0.5, -0.25));
    CHECK(std::abs(d1 - Complex{-0.25}) < 1e-14);
    CHECK(std::abs(d2 - Complex{0.5}) < 1e-14);

    const auto [c1, c2] = eigenvalues(kCompanion);  // roots of z^2 + 1/4
    CHECK(std::abs(c1 - Complex{0.0, -0.5}) < 1e-14);
    CHECK(std::abs(c2 - Complex{0.0, 0.5}) < 1e-14);

    const auto [z1, z2] = eigenvalues(ComplexMatrix2::zero());
    CHECK(std::abs(z1) == 0.0);
    CHECK(std::abs(z2) == 0.0);
}

TEST_CASE("eigenvalues satisfy trace and determinant relations") {
    Sampler rng(11);
    for (int i = 0; i < 2000; ++i) {
        const ComplexMatrix2 m = rng.matrix_entries(2.0);
        const auto [l1, l2] = eigenvalues(m);
        const double scale = std::max(1.0, std::abs(trace(m)));
        CHECK(std::abs(l1 + l2 - trace(m)) < 1e-12 * scale);
        CHECK(std::abs(l1 * l2 - determinant(m)) < 1e-12 * std::max(1.0, std::abs(determinant(m))));
    }
}

TEST_CASE("operator norm closed form") {
    CHECK(operator_norm(ComplexMatrix2::identity()) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(operator_norm({0.0, -1.0, 0.5, 0.0}) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(operator_norm(ComplexMatrix2::zero()) == 0.0);
}

TEST_CASE("singular value identities") {
    Sampler rng(12);
    for (int i = 0; i < 2000; ++i) {
        const ComplexMatrix2 m = rng.matrix_entries(2.0);
        const auto [smax, smin] = singular_values(m);
        CHECK(std::abs(determinant(m)) <= smax * smax + 1e-12);
        const double t =
            std::norm(m.a11) + std::norm(m.a12) + std::norm(m.a21) + std::norm(m.a22);
        CHECK(std::abs(smax * smax + smin * smin - t) < 1e-12 * std::max(1.0, t));
    }
}

TEST_CASE("pi map") {
    const PentaPoint x = pi_map({0.0, -1.0, 0.25, 0.0});
    CHECK(x.a == Complex{0.25});
    CHECK(x.s == Complex{0.0});
    CHECK(x.p == Complex{0.25});

    const PentaPoint id = pi_map(ComplexMatrix2::identity());
    CHECK(id.a == Complex{0.0});
    CHECK(id.s == Complex{2.0});
    CHECK(id.p == Complex{1.0});

    const PentaPoint zero = pi_map(ComplexMatrix2::zero());
    CHECK(std::abs(zero.a) + std::abs(zero.s) + std::abs(zero.p) == 0.0);
}

TEST_CASE("pi map quasi-homogeneity") {
    Sampler rng(13);
    for (int i = 0; i < 1000; ++i) {
        const ComplexMatrix2 m = rng.matrix_entries(1.5);
        const Complex z = rng.in_disc(2.0);
        const PentaPoint lhs = pi_map(z * m);
        const PentaPoint rhs = pi_map(m);
        CHECK(std::abs(lhs.a - z * rhs.a) < 1e-12);
        CHECK(std::abs(lhs.s - z * rhs.s) < 1e-12);
        CHECK(std::abs(lhs.p - z * z * rhs.p) < 1e-11);
    }
}

TEST_CASE("open ball membership") {
    CHECK(in_open_ball(0.5 * ComplexMatrix2::identity()));
    CHECK_FALSE(in_open_ball(ComplexMatrix2::identity()));
    CHECK_FALSE(in_open_ball({0.0, -1.0, 0.5, 0.0}));
}

TEST_CASE("gram route agrees with the singular-value route") {
    Sampler rng(14);
    int compared = 0;
    for (int i = 0; i < 10000; ++i) {
        const ComplexMatrix2 m = rng.matrix_with_disc_spectrum();
        if (std::abs(operator_norm(m) - 1.0) < 1e-10) continue;  // boundary shell
        CHECK(in_open_ball(m) == in_open_ball_gram(m));
        ++compared;
    }
    CHECK(compared > 9000);
}

TEST_CASE("gram route rejects spectrum outside the closed disc") {
    CHECK_THROWS_AS(in_open_ball_gram(ComplexMatrix2::diagonal(1.5, 0.0)), std::domain_error);
}
