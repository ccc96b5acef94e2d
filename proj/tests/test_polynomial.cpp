#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "penta/polynomial.hpp"
#include "penta/sampling.hpp"

using namespace penta;

TEST_CASE("evaluation and arithmetic") {
    const Polynomial f({1.0, Complex{0.0, 2.0}, 3.0});  // 1 + 2i x + 3 x^2
    CHECK(std::abs(f.eval(0.0) - Complex{1.0}) < 1e-15);
    CHECK(std::abs(f.eval(1.0) - Complex{4.0, 2.0}) < 1e-15);
    CHECK(f.degree() == 2);
    CHECK(f.derivative().degree() == 1);

    Sampler rng(121);
    for (int i = 0; i < 200; ++i) {
        const Polynomial g({rng.in_disc(), rng.in_disc(), rng.in_disc()});
        const Complex x = rng.in_disc(2.0);
        CHECK(std::abs((f * g).eval(x) - f.eval(x) * g.eval(x)) < 1e-10);
        CHECK(std::abs((f + g).eval(x) - f.eval(x) - g.eval(x)) < 1e-12);
    }
}

TEST_CASE("division round-trip") {
    Sampler rng(122);
    for (int i = 0; i < 200; ++i) {
        std::vector<Complex> nc(4 + i % 3), dc(1 + i % 3);
        for (auto& c : nc) c = rng.in_disc(2.0);
        for (auto& c : dc) c = rng.in_disc(2.0);
        dc.back() += Complex{1.0};  // keep the divisor nonzero
        const Polynomial n(nc), d(dc);
        const auto [q, r] = n.divrem(d);
        CHECK((q * d + r - n).max_coeff_abs() < 1e-10);
        CHECK(r.degree() < d.degree());
    }
}

TEST_CASE("roots of factored polynomials") {
    Sampler rng(123);
    for (int i = 0; i < 100; ++i) {
        std::vector<Complex> want = {rng.in_disc(2.0), rng.in_disc(2.0), rng.in_disc(2.0)};
        Polynomial f = Polynomial::constant(1.0);
        for (Complex r : want) f = f * Polynomial({-r, 1.0});
        std::vector<Complex> got = f.roots();
        REQUIRE(got.size() == want.size());
        for (Complex r : want) {
            const double d = std::min({std::abs(got[0] - r), std::abs(got[1] - r),
                                       std::abs(got[2] - r)});
            CHECK(d < 1e-8);
        }
    }
}

TEST_CASE("clustering recovers multiplicities") {
    const Polynomial f = Polynomial({-0.3, 1.0}) * Polynomial({-0.3, 1.0}) *
                         Polynomial({Complex{0.0, -0.5}, 1.0});
    const auto clusters = cluster_roots(f.roots());
    REQUIRE(clusters.size() == 2);
    bool found_double = false, found_simple = false;
    for (const auto& c : clusters) {
        if (c.multiplicity == 2) {
            found_double = true;
            CHECK(std::abs(c.center - Complex{0.3}) < 1e-6);
        }
        if (c.multiplicity == 1) {
            found_simple = true;
            CHECK(std::abs(c.center - Complex{0.0, 0.5}) < 1e-8);
        }
    }
    CHECK(found_double);
    CHECK(found_simple);

    CHECK(multiplicity_at(f, Complex{0.3}, 1e-6) == 2);
    CHECK(multiplicity_at(f, Complex{0.0, 0.5}) == 1);
    CHECK(multiplicity_at(f, Complex{0.9}) == 0);
}

TEST_CASE("near-circle roots are flagged") {
    const Polynomial f({-1.0, 1.0});  // root exactly at 1
    const auto clusters = cluster_roots(f.roots());
    REQUIRE(clusters.size() == 1);
    CHECK(clusters[0].near_unit_circle);
}
