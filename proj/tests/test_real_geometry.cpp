#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "penta/pentablock.hpp"
#include "penta/real_geometry.hpp"
#include "penta/sampling.hpp"

using namespace penta;

namespace {

std::pair<double, double> random_triangle_point(Sampler& rng, double margin) {
    while (true) {
        const double p = rng.uniform(-1.0 + margin, 1.0 - margin);
        const double smax = 1.0 + p - margin;
        if (smax <= 0.0) continue;
        return {rng.uniform(-smax, smax), p};
    }
}

}  // namespace

TEST_CASE("K at reference points") {
    CHECK(K_real(0.0, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
    // s -> (1+p)^- collapses the square root.
    const double p = 0.3;
    CHECK(K_real((1.0 + p) * (1.0 - 1e-12), p) ==
          doctest::Approx(1.0 - 0.5 * (1.0 + p)).epsilon(1e-4));
    CHECK_THROWS_AS(K_real(2.0, 0.5), std::domain_error);
}

TEST_CASE("K matches the complex fiber radius on the real slice") {
    Sampler rng(91);
    for (int i = 0; i < 1000; ++i) {
        const auto [s, p] = random_triangle_point(rng, 1e-6);
        CHECK(std::abs(K_real(s, p) - fiber_radius({s, p})) < 1e-12);
    }
}

TEST_CASE("Hessian at the origin and its rank-one structure") {
    const SymMatrix2 h = hessian_K(0.0, 0.0);
    CHECK(h.ss == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(h.sp == doctest::Approx(0.0));
    CHECK(h.pp == doctest::Approx(0.0));

    Sampler rng(92);
    for (int i = 0; i < 1000; ++i) {
        const auto [s, p] = random_triangle_point(rng, 0.05);
        const SymMatrix2 m = hessian_K(s, p);
        CHECK(std::abs(m.ss * m.pp - m.sp * m.sp) < 1e-12);  // rank one
        const auto [e1, e2] = m.eigenvalues();
        CHECK(e1 <= 1e-12);
        CHECK(e2 <= 1e-12);
    }
}

TEST_CASE("Hessian matches finite differences") {
    Sampler rng(93);
    const double h = 5e-4;
    // Fourth-order stencils keep the roundoff floor well under the tolerance.
    auto second = [&](auto f) {
        return (-f(2) + 16.0 * f(1) - 30.0 * f(0) + 16.0 * f(-1) - f(-2)) / (12.0 * h * h);
    };
    auto weight = [](int i) { return i == 1 ? 8.0 : i == -1 ? -8.0 : i == 2 ? -1.0 : 1.0; };
    for (int i = 0; i < 200; ++i) {
        double s, p;
        while (true) {
            std::tie(s, p) = random_triangle_point(rng, 0.1);
            if ((1.0 + p) * (1.0 + p) - s * s >= 0.1) break;
        }
        const SymMatrix2 m = hessian_K(s, p);
        const double fss = second([&](int k) { return K_real(s + k * h, p); });
        const double fpp = second([&](int k) { return K_real(s, p + k * h); });
        double fsp = 0.0;
        for (int a : {-2, -1, 1, 2}) {
            for (int b : {-2, -1, 1, 2}) {
                fsp += weight(a) * weight(b) * K_real(s + a * h, p + b * h);
            }
        }
        fsp /= 144.0 * h * h;
        CHECK(std::abs(fss - m.ss) < 1e-6);
        CHECK(std::abs(fpp - m.pp) < 1e-6);
        CHECK(std::abs(fsp - m.sp) < 1e-6);
    }
}

TEST_CASE("real membership") {
    CHECK(in_real_pentablock(0.0, 0.0, 0.0));
    CHECK_FALSE(in_real_pentablock(0.0, 2.0, 1.0));
    CHECK_FALSE(in_real_pentablock(0.0, -2.0, 1.0));
    CHECK_FALSE(in_real_pentablock(1.0, 0.0, -1.0));
    CHECK_FALSE(in_real_pentablock(-1.0, 0.0, -1.0));
}

TEST_CASE("real membership equals the complex criterion") {
    Sampler rng(94);
    for (int i = 0; i < 5000; ++i) {
        const double a = rng.uniform(-1.2, 1.2);
        const double s = rng.uniform(-2.2, 2.2);
        const double p = rng.uniform(-1.2, 1.2);
        CHECK(in_real_pentablock(a, s, p) == in_pentablock({a, s, p}));
    }
}

TEST_CASE("midpoint convexity and concavity") {
    Sampler rng(95);
    auto member = [&] {
        while (true) {
            const double p = rng.uniform(-1.0, 1.0);
            const double s = rng.uniform(-2.0, 2.0);
            if (!in_real_triangle(s, p)) continue;
            const double a = rng.uniform(-1.0, 1.0) * K_real(s, p);
            if (in_real_pentablock(a, s, p)) return std::array<double, 3>{a, s, p};
        }
    };
    for (int i = 0; i < 2000; ++i) {
        const auto u = member(), v = member();
        const double t = rng.uniform(0.0, 1.0);
        CHECK(in_real_pentablock(t * u[0] + (1 - t) * v[0], t * u[1] + (1 - t) * v[1],
                                 t * u[2] + (1 - t) * v[2]));
        CHECK(K_real(0.5 * (u[1] + v[1]), 0.5 * (u[2] + v[2])) >=
              0.5 * (K_real(u[1], u[2]) + K_real(v[1], v[2])) - 1e-12);
    }
}

TEST_CASE("non-convexity witness of the complex body") {
    const PentaPoint x{0.0, 2.0, 1.0};
    const PentaPoint y{0.0, Complex{0.0, 2.0}, -1.0};
    CHECK(in_closed_pentablock(x));
    CHECK(in_closed_pentablock(y));
    CHECK_FALSE(in_closed_pentablock({0.0, 0.5 * (x.s + y.s), 0.5 * (x.p + y.p)}));
}

TEST_CASE("not circled") {
    const PentaPoint x{0.0, 2.0, 1.0};
    CHECK(in_closed_pentablock(x));
    // Coordinatewise rotation by i escapes the closure ...
    const Complex i{0.0, 1.0};
    CHECK_FALSE(in_closed_pentablock({i * x.a, i * x.s, i * x.p}));
    // ... while the quasi-balanced action (za, zs, z^2 p) stays inside.
    CHECK(in_closed_pentablock(scale_point(x, i)));
}

TEST_CASE("face classification on catalogued points") {
    CHECK(classify_face(0.0, 1.0, 0.0).label() == "T+");
    CHECK(classify_face(0.0, -1.0, 0.0).label() == "T-");
    CHECK(classify_face(0.6, 0.0, 1.0).label() == "E");
    CHECK(classify_face(K_real(0.5, 0.2), 0.5, 0.2).label() == "S+");
    CHECK(classify_face(-K_real(0.5, 0.2), 0.5, 0.2).label() == "S-");
    CHECK(classify_face(0.0, 2.0, 1.0).label() == "vertex");
    CHECK(classify_face(1.0, 0.0, -1.0).label() == "vertex");

    // The p = -1 segment is the shared edge of the four non-ellipse faces.
    const FaceClassification edge = classify_face(0.5, 0.0, -1.0);
    CHECK(edge.label() == "edge");
    CHECK(edge.faces.size() == 4);
    CHECK(std::count(edge.faces.begin(), edge.faces.end(), Face::Ellipse) == 0);

    CHECK_THROWS_AS(classify_face(0.0, 0.0, 0.0), std::domain_error);   // interior
    CHECK_THROWS_AS(classify_face(0.0, 3.0, 1.0), std::domain_error);   // exterior
}

TEST_CASE("face samples classify back to their face") {
    Sampler rng(96);
    auto contains = [](const FaceClassification& c, Face f) {
        return std::find(c.faces.begin(), c.faces.end(), f) != c.faces.end();
    };
    for (int i = 0; i < 500; ++i) {
        {
            const double p = rng.uniform(-0.9, 0.9);
            const double a = rng.uniform(-0.95, 0.95) * (1.0 - 0.5 * (1.0 + p));
            CHECK(contains(classify_face(a, 1.0 + p, p), Face::TrianglePlus));
        }
        {
            const double t = 0.95 * std::sqrt(rng.uniform());
            const double phi = rng.uniform(0.0, 2.0 * M_PI);
            CHECK(contains(classify_face(t * std::cos(phi), 2.0 * t * std::sin(phi), 1.0),
                           Face::Ellipse));
        }
        {
            const auto [s, p] = random_triangle_point(rng, 0.05);
            CHECK(contains(classify_face(K_real(s, p), s, p), Face::SurfacePlus));
            CHECK(contains(classify_face(-K_real(s, p), s, p), Face::SurfaceMinus));
        }
    }
}

TEST_CASE("scaling basics") {
    const PentaPoint x{0.2, 0.5, -0.3};
    const PentaPoint same = scale_point(x, 1.0);
    CHECK(std::abs(same.a - x.a) + std::abs(same.s - x.s) + std::abs(same.p - x.p) < 1e-15);
    const PentaPoint origin = scale_point(x, 0.0);
    CHECK(std::abs(origin.a) + std::abs(origin.s) + std::abs(origin.p) == 0.0);
}

TEST_CASE("starlike profile at the origin base point") {
    const SymPoint q{0.0, 0.0};
    for (double r : {0.25, 0.5, 0.75}) {
        CHECK(starlike_profile(r, q) == doctest::Approx(2.0 / (r * r)).epsilon(1e-14));
        CHECK(starlike_derivative(r, q) == doctest::Approx(-4.0 / (r * r * r)).epsilon(1e-14));
    }
}

TEST_CASE("starlike derivative is negative and matches finite differences") {
    Sampler rng(97);
    for (int i = 0; i < 500; ++i) {
        const double r = rng.uniform(0.2, 0.95);
        const SymPoint q = rng.sym_in_G(0.05);
        const double der = starlike_derivative(r, q);
        CHECK(der < 0.0);
        const double h = 1e-6;
        const double fd = (starlike_profile(r + h, q) - starlike_profile(r - h, q)) / (2.0 * h);
        CHECK(std::abs(fd - der) < 1e-6);
    }
}
