#include "penta/selftest.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "penta/boundary.hpp"
#include "penta/interpolation.hpp"
#include "penta/lifting.hpp"
#include "penta/matrix_core.hpp"
#include "penta/mu.hpp"
#include "penta/pentablock.hpp"
#include "penta/real_geometry.hpp"
#include "penta/sampling.hpp"
#include "penta/symmetrised_bidisc.hpp"

namespace penta::selftest {

namespace {

std::string show(Complex z) {
    std::ostringstream os;
    os.precision(17);
    os << "(" << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i)";
    return os.str();
}

std::string show(const PentaPoint& x) {
    return "a=" + show(x.a) + " s=" + show(x.s) + " p=" + show(x.p);
}

std::string show(const ComplexMatrix2& m) {
    return "[[" + show(m.a11) + ", " + show(m.a12) + "], [" + show(m.a21) + ", " + show(m.a22) +
           "]]";
}

double max_entry_abs(const ComplexMatrix2& m) {
    return std::max({std::abs(m.a11), std::abs(m.a12), std::abs(m.a21), std::abs(m.a22)});
}

double point_distance(const PentaPoint& x, const PentaPoint& y) {
    return std::max({std::abs(x.a - y.a), std::abs(x.s - y.s), std::abs(x.p - y.p)});
}

struct Recorder {
    SuiteResult result;

    explicit Recorder(std::string name) { result.name = std::move(name); }

    bool check(bool ok, const std::string& detail_on_fail) {
        ++result.checks;
        if (!ok && result.detail.empty()) {
            result.detail = detail_on_fail;
        }
        return ok;
    }

    SuiteResult finish() {
        result.passed = result.detail.empty();
        return result;
    }
};

}  // namespace

SuiteResult criteria_agreement(std::size_t n_triples, std::size_t n_ball, std::uint64_t seed) {
    Recorder rec("criteria-agreement");
    Sampler rng(seed);
    for (std::size_t i = 0; i < n_triples; ++i) {
        const PentaPoint x = (i % 2 == 0) ? rng.penta_inside() : rng.penta_outside();
        const SymPoint q = x.base();
        if (in_G(q) && std::abs(std::abs(x.a) - fiber_radius(q)) < 1e-9) continue;  // boundary shell
        const bool b1 = in_pentablock(x, Criterion::beta_form);
        const bool b2 = in_pentablock(x, Criterion::root_form);
        const bool b3 = in_pentablock(x, Criterion::sup_form);
        if (!rec.check(b1 == b2 && b2 == b3, "criteria disagree at " + show(x))) break;
    }
    for (std::size_t i = 0; i < n_ball && rec.result.detail.empty(); ++i) {
        const ComplexMatrix2 a = rng.matrix_in_ball();
        const PentaPoint x = pi_map(a);
        if (in_G(x.base()) && std::abs(std::abs(x.a) - fiber_radius(x.base())) < 1e-9) continue;
        rec.check(in_pentablock(x), "pi of a ball matrix not in the pentablock: " + show(a));
    }
    return rec.finish();
}

SuiteResult kappa_agreement(std::size_t n, std::uint64_t seed, double step) {
    Recorder rec("kappa-agreement");
    Sampler rng(seed);
    for (std::size_t i = 0; i < n; ++i) {
        const SymPoint q = rng.sym_in_G();
        const double closed = kappa_closed(q);
        const KappaOracle oracle = kappa_oracle(q, step);
        if (!rec.check(std::abs(closed - oracle.value) <= 1e-4,
                       "kappa mismatch at s=" + show(q.s) + " p=" + show(q.p))) {
            break;
        }
        const Complex zstar = kappa_maximizer(q);
        if (!rec.check(std::abs(zstar - oracle.maximizer) <= 1e-6,
                       "maximizer mismatch at s=" + show(q.s) + " p=" + show(q.p))) {
            break;
        }
        rec.check(oracle.value <= closed + 1e-9,
                  "oracle exceeds the supremum at s=" + show(q.s) + " p=" + show(q.p));
    }
    return rec.finish();
}

SuiteResult radius_identity(std::size_t n, std::uint64_t seed) {
    Recorder rec("radius-identity");
    Sampler rng(seed);
    for (std::size_t i = 0; i < n; ++i) {
        const Complex l1 = rng.in_disc();
        const Complex l2 = rng.in_disc();
        const double lhs = fiber_radius_roots(l1, l2);
        const double rhs = fiber_radius_beta({l1 + l2, l1 * l2});
        if (!rec.check(std::abs(lhs - rhs) <= 1e-12,
                       "radius identity fails at l1=" + show(l1) + " l2=" + show(l2))) {
            break;
        }
    }
    return rec.finish();
}

SuiteResult lifting_roundtrip(std::size_t n, std::uint64_t seed) {
    Recorder rec("lifting-roundtrip");
    Sampler rng(seed);
    for (std::size_t i = 0; i < n; ++i) {
        const PentaPoint x = rng.penta_inside(1e-6);
        const ComplexMatrix2 a = construct_matrix(x);
        if (!rec.check(point_distance(pi_map(a), x) <= 1e-12, "pi round-trip fails at " + show(x)))
            break;
        if (!rec.check(operator_norm(a) < 1.0, "lift is not a strict contraction at " + show(x)))
            break;

        const auto [l1, l2] = roots_of(x.base());
        const Complex w = 0.5 * (l1 - l2);
        const double det_gram = gram_determinant(a);
        if (std::abs(x.a) <= std::abs(w)) {
            const double expected = (1.0 - std::norm(l1)) * (1.0 - std::norm(l2));
            if (!rec.check(std::abs(det_gram - expected) <= 1e-10,
                           "phase-branch determinant identity fails at " + show(x))) {
                break;
            }
        } else {
            const double lam = std::sqrt((1.0 - std::norm(l1)) * (1.0 - std::norm(l2)));
            const double cm = 0.5 * std::abs(1.0 - std::conj(l2) * l1) - 0.5 * lam;
            const double cp = 0.5 * std::abs(1.0 - std::conj(l2) * l1) + 0.5 * lam;
            const double a2 = std::norm(x.a);
            const double expected = -(a2 - cm * cm) * (a2 - cp * cp);
            if (!rec.check(std::abs(a2 * det_gram - expected) <= 1e-10,
                           "quartic determinant identity fails at " + show(x))) {
                break;
            }
        }
    }
    return rec.finish();
}

SuiteResult mu_consistency(std::size_t n, std::uint64_t seed, double grid) {
    Recorder rec("mu-consistency");
    Sampler rng(seed);
    for (std::size_t i = 0; i < n; ++i) {
        const ComplexMatrix2 a = rng.matrix_entries(2.0);
        const double value = mu_value(a);
        const double oracle = mu_oracle(a, grid).value;
        if (!rec.check(std::abs(value - oracle) <= 1e-4, "mu oracle mismatch at " + show(a))) break;

        const Complex c = std::polar(rng.uniform(0.1, 3.0), rng.uniform(0.0, 2.0 * M_PI));
        if (!rec.check(std::abs(mu_value(c * a) - std::abs(c) * value) <= 1e-9,
                       "mu homogeneity fails at " + show(a) + " c=" + show(c))) {
            break;
        }
        if (!rec.check(value <= operator_norm(a) + 1e-9 && value >= spectral_radius(a) - 1e-9,
                       "mu sandwich fails at " + show(a))) {
            break;
        }
        if (std::abs(a.a21) > 1e-6) {
            // Same pi data, different matrix: trace-preserving diagonal shift with
            // the 12 entry adjusted to keep the determinant.
            const Complex delta = rng.in_disc(0.5);
            const ComplexMatrix2 b{a.a11 + delta,
                                   ((a.a11 + delta) * (a.a22 - delta) - determinant(a)) / a.a21,
                                   a.a21, a.a22 - delta};
            if (!rec.check(std::abs(mu_value(b) - value) <= 1e-9,
                           "mu quotient invariance fails at " + show(a))) {
                break;
            }
        }
    }
    return rec.finish();
}

SuiteResult automorphism_laws(std::size_t n, std::uint64_t seed) {
    Recorder rec("automorphism-laws");
    Sampler rng(seed);
    auto random_params = [&] {
        return AutoParams::make(rng.unit_complex(),
                                MobiusParams::make(rng.unit_complex(), rng.in_disc(0.95)));
    };
    for (std::size_t i = 0; i < n; ++i) {
        const AutoParams g1 = random_params();
        const AutoParams g2 = random_params();
        const ComplexMatrix2 a = rng.matrix_in_ball();
        const PentaPoint x = pi_map(a);

        const PentaPoint composed = f_apply(group_compose(g1, g2), x);
        const PentaPoint chained = f_apply(g1, f_apply(g2, x));
        if (!rec.check(point_distance(composed, chained) <= 1e-10,
                       "composition law fails at " + show(x))) {
            break;
        }
        const PentaPoint back = f_apply(group_inverse(g1), f_apply(g1, x));
        if (!rec.check(point_distance(back, x) <= 1e-10, "inverse law fails at " + show(x))) break;
        if (!rec.check(point_distance(f_apply(g1, pi_map(a)), pi_map(F_apply(g1, a))) <= 1e-10,
                       "intertwining pi o F = f o pi fails at " + show(a))) {
            break;
        }

        // Spectral mapping: eigenvalues of F(A) are the Mobius images as a set.
        const auto [l1, l2] = eigenvalues(a);
        const auto [m1, m2] =
            sort_root_pair(mobius_apply(g1.mobius, l1), mobius_apply(g1.mobius, l2));
        const auto [f1, f2] = eigenvalues(F_apply(g1, a));
        if (!rec.check(std::abs(m1 - f1) <= 1e-9 && std::abs(m2 - f2) <= 1e-9,
                       "spectral mapping fails at " + show(a))) {
            break;
        }

        // Membership preservation, both directions, outside a thin shell.
        const PentaPoint inside = rng.penta_inside(1e-6);
        const PentaPoint im_in = f_apply(g1, inside);
        if (in_G(im_in.base()) &&
            std::abs(fiber_radius(im_in.base()) - std::abs(im_in.a)) > 1e-12) {
            if (!rec.check(in_pentablock(im_in),
                           "automorphism maps an interior point outside: " + show(inside))) {
                break;
            }
        }
        const PentaPoint outside = rng.penta_outside_over_G(0.5);
        const PentaPoint im_out = f_apply(g1, outside);
        if (!in_G(im_out.base()) ||
            std::abs(fiber_radius(im_out.base()) - std::abs(im_out.a)) > 1e-12) {
            if (!rec.check(!in_pentablock(im_out),
                           "automorphism maps an exterior point inside: " + show(outside))) {
                break;
            }
        }
    }
    return rec.finish();
}

SuiteResult boundary_roundtrip(std::size_t n, std::uint64_t seed) {
    Recorder rec("boundary-roundtrip");
    Sampler rng(seed);
    for (std::size_t i = 0; i < n; ++i) {
        const ComplexMatrix2 u = rng.unitary();
        if (!rec.check(in_K1(pi_map(u), 1e-9), "pi of a unitary escapes K1: " + show(u))) break;

        const PentaPoint x = rng.k1_point();
        ComplexMatrix2 v;
        try {
            v = construct_unitary(x, 1e-9);
        } catch (const std::exception& e) {
            rec.check(false, std::string("construct_unitary rejects a K1 point: ") + show(x) +
                                 " (" + e.what() + ")");
            break;
        }
        const ComplexMatrix2 defect = v.adjoint() * v - ComplexMatrix2::identity();
        if (!rec.check(max_entry_abs(defect) <= 1e-12, "unitarity defect at " + show(x))) break;
        if (!rec.check(point_distance(pi_map(v), x) <= 1e-10,
                       "unitary pi round-trip fails at " + show(x))) {
            break;
        }

        const PentaPoint b = rng.bp_point();
        if (!rec.check(in_bP(b, 1e-9), "parametrized point escapes bP: " + show(b))) break;
        const BoundaryCoordinates co = bP_coordinates(b, 1e-9);
        const PentaPoint back = bP_parametrize(co.x, co.theta, co.omega);
        if (!rec.check(point_distance(back, b) <= 1e-10,
                       "bP coordinate round-trip fails at " + show(b))) {
            break;
        }

        const double xc = rng.uniform(-1.0, 1.0);
        const Complex om = rng.unit_complex();
        if (!rec.check(point_distance(bP_parametrize(xc, 0.0, om),
                                      bP_parametrize(-xc, 2.0 * M_PI, om)) <= 1e-12,
                       "identification pair mismatch at x=" + std::to_string(xc))) {
            break;
        }
    }
    return rec.finish();
}

SuiteResult real_convexity(std::size_t n_hessian, std::size_t n_pairs, std::uint64_t seed) {
    Recorder rec("convexity-real");
    Sampler rng(seed);

    auto triangle_interior = [&](double margin, double min_gap) {
        while (true) {
            const double p = rng.uniform(-1.0 + margin, 1.0 - margin);
            const double smax = 1.0 + p - margin;
            if (smax <= 0.0) continue;
            const double s = rng.uniform(-smax, smax);
            if ((1.0 + p) * (1.0 + p) - s * s >= min_gap) return std::pair<double, double>{s, p};
        }
    };

    // Fourth-order stencils: the 1e-6 budget leaves no room for the
    // roundoff floor of three-point second differences.
    const double dh = 5e-4;
    auto fd_second = [&](auto f) {
        return (-f(2) + 16.0 * f(1) - 30.0 * f(0) + 16.0 * f(-1) - f(-2)) / (12.0 * dh * dh);
    };
    auto fd_cross = [&](double s, double p) {
        auto w = [](int i) { return i == 1 ? 8.0 : i == -1 ? -8.0 : i == 2 ? -1.0 : 1.0; };
        double acc = 0.0;
        for (int i : {-2, -1, 1, 2}) {
            for (int j : {-2, -1, 1, 2}) {
                acc += w(i) * w(j) * K_real(s + i * dh, p + j * dh);
            }
        }
        return acc / (144.0 * dh * dh);
    };
    for (std::size_t i = 0; i < n_hessian; ++i) {
        const auto [s, p] = triangle_interior(0.1, 0.1);
        const SymMatrix2 h = hessian_K(s, p);
        const auto [e1, e2] = h.eigenvalues();
        if (!rec.check(e1 <= 1e-12 && e2 <= 1e-12,
                       "Hessian not negative semidefinite at s=" + std::to_string(s) +
                           " p=" + std::to_string(p))) {
            break;
        }
        const double fd_ss = fd_second([&](int k) { return K_real(s + k * dh, p); });
        const double fd_pp = fd_second([&](int k) { return K_real(s, p + k * dh); });
        const double fd_sp = fd_cross(s, p);
        if (!rec.check(std::abs(fd_ss - h.ss) <= 1e-6 && std::abs(fd_pp - h.pp) <= 1e-6 &&
                           std::abs(fd_sp - h.sp) <= 1e-6,
                       "Hessian finite-difference mismatch at s=" + std::to_string(s) +
                           " p=" + std::to_string(p))) {
            break;
        }
    }

    auto random_member = [&]() {
        while (true) {
            const double p = rng.uniform(-1.0, 1.0);
            const double s = rng.uniform(-2.0, 2.0);
            if (!in_real_triangle(s, p)) continue;
            const double a = rng.uniform(-1.0, 1.0) * K_real(s, p);
            if (in_real_pentablock(a, s, p)) return std::array<double, 3>{a, s, p};
        }
    };
    for (std::size_t i = 0; i < n_pairs && rec.result.detail.empty(); ++i) {
        const auto u = random_member();
        const auto v = random_member();
        const double t = rng.uniform(0.0, 1.0);
        const double a = t * u[0] + (1.0 - t) * v[0];
        const double s = t * u[1] + (1.0 - t) * v[1];
        const double p = t * u[2] + (1.0 - t) * v[2];
        rec.check(in_real_pentablock(a, s, p), "convex combination escapes at t=" +
                                                   std::to_string(t));
        const double km = K_real(0.5 * (u[1] + v[1]), 0.5 * (u[2] + v[2]));
        rec.check(km >= 0.5 * (K_real(u[1], u[2]) + K_real(v[1], v[2])) - 1e-12,
                  "midpoint concavity of K fails");
    }

    // Each face's parametrized samples classify back to the generating face.
    const std::size_t n_face = std::max<std::size_t>(1, n_hessian / 5);
    auto expect_face = [&](Face f, double a, double s, double p) {
        try {
            const FaceClassification cls = classify_face(a, s, p, 1e-9);
            for (Face got : cls.faces) {
                if (got == f) return true;
            }
            return rec.check(false, "face sample classifies away from " + face_label(f) +
                                        " at a=" + std::to_string(a) + " s=" + std::to_string(s) +
                                        " p=" + std::to_string(p));
        } catch (const std::exception& e) {
            return rec.check(false, "face sample rejected: " + std::string(e.what()));
        }
    };
    for (std::size_t i = 0; i < n_face && rec.result.detail.empty(); ++i) {
        {
            const double p = rng.uniform(-0.9, 0.9);
            const double s = 1.0 + p;
            const double a = rng.uniform(-0.95, 0.95) * (1.0 - 0.5 * s);
            expect_face(Face::TrianglePlus, a, s, p);
        }
        {
            const double p = rng.uniform(-0.9, 0.9);
            const double s = -(1.0 + p);
            const double a = rng.uniform(-0.95, 0.95) * (1.0 + 0.5 * s);
            expect_face(Face::TriangleMinus, a, s, p);
        }
        {
            const double t = 0.95 * std::sqrt(rng.uniform());
            const double phi = rng.uniform(0.0, 2.0 * M_PI);
            expect_face(Face::Ellipse, t * std::cos(phi), 2.0 * t * std::sin(phi), 1.0);
        }
        {
            const auto [s, p] = triangle_interior(0.05, 1e-4);
            expect_face(Face::SurfacePlus, K_real(s, p), s, p);
            expect_face(Face::SurfaceMinus, -K_real(s, p), s, p);
        }
    }
    return rec.finish();
}

SuiteResult fixed_regressions() {
    Recorder rec("regressions");

    rec.check(!in_closed_pentablock({0.0, Complex{1.0, 1.0}, 0.0}),
              "(0, 1+i, 0) should escape the closed pentablock");
    rec.check(in_closed_pentablock({0.0, 2.0, 1.0}), "(0, 2, 1) should lie in the closure");
    rec.check(in_closed_pentablock({0.0, Complex{0.0, 2.0}, -1.0}),
              "(0, 2i, -1) should lie in the closure");
    rec.check(!in_closed_pentablock({0.0, Complex{0.0, 2.0}, Complex{0.0, 1.0}}),
              "(0, 2i, i) should escape the closed pentablock");

    {
        const Polynomial lambda = Polynomial::monomial(1.0, 1);
        const PolyTriple h{lambda, Polynomial{}, lambda};
        const LiftDecision dec = analytic_lift_exists(h);
        rec.check(dec.exists, "(l, 0, l) should admit an analytic lifting");
        const PolynomialLift lift = polynomial_lift(h);
        rec.check(lift.polynomial, "(l, 0, l) should admit a polynomial lifting");
        const std::array<Polynomial, 4> want = {Polynomial{}, Polynomial::constant(-1.0),
                                                lambda, Polynomial{}};
        bool match = true;
        for (int k = 0; k < 4; ++k) {
            match = match && (lift.H[k] - want[k]).max_coeff_abs() <= 1e-10;
        }
        rec.check(match, "(l, 0, l) lift should be [[0, -1], [l, 0]]");
    }
    {
        const PolyTriple h{Polynomial::monomial(1.0, 2), Polynomial{},
                           Polynomial::monomial(1.0, 1)};
        rec.check(!analytic_lift_exists(h).exists, "(l^2, 0, l) should admit no analytic lifting");
    }
    {
        const CounterexampleTrace tr = counterexample_trace(0.5);
        rec.check(tr.infinitesimal_ok && tr.equality_defect <= 1e-12,
                  "P=1/2 derivative data should pass the infinitesimal check with equality");
        rec.check(std::abs(tr.xi - 1.0 / 3.0) <= 1e-15, "xi should equal 1/3 at P=1/2");
        rec.check(std::abs(tr.fiber_bound - std::sqrt(1.0 - 1.0 / 9.0)) <= 1e-12 &&
                      tr.fiber_bound < 1.0,
                  "fiber bound should be sqrt(1 - 1/9) < 1");
        rec.check(tr.boundary_violated, "the induced curve should escape the closure at 1");
    }
    return rec.finish();
}

SuiteResult starlike(std::size_t n_derivative, std::size_t n_members, std::size_t n_scales,
                     std::uint64_t seed) {
    Recorder rec("starlike");
    Sampler rng(seed);
    for (std::size_t i = 0; i < n_derivative; ++i) {
        const double r = rng.uniform(0.2, 0.95);
        const SymPoint q = rng.sym_in_G(0.05);
        const double d = starlike_derivative(r, q);
        if (!rec.check(d < 0.0, "starlike derivative not negative at r=" + std::to_string(r) +
                                    " s=" + show(q.s) + " p=" + show(q.p))) {
            break;
        }
        const double h = 1e-6;
        const double fd = (starlike_profile(r + h, q) - starlike_profile(r - h, q)) / (2.0 * h);
        if (!rec.check(std::abs(fd - d) <= 1e-6,
                       "starlike finite-difference mismatch at r=" + std::to_string(r) +
                           " s=" + show(q.s) + " p=" + show(q.p))) {
            break;
        }
    }
    for (std::size_t i = 0; i < n_members && rec.result.detail.empty(); ++i) {
        const PentaPoint x = rng.penta_inside(1e-6);
        for (std::size_t k = 0; k < n_scales; ++k) {
            const Complex z = rng.in_disc(1.0);
            if (!rec.check(in_closed_pentablock(scale_point(x, z)),
                           "scaled member escapes the closure: " + show(x) + " z=" + show(z))) {
                break;
            }
        }
    }
    return rec.finish();
}

SuiteResult separation(std::size_t n_points, std::uint64_t seed) {
    Recorder rec("separation");
    Sampler rng(seed);
    for (std::size_t i = 0; i < n_points; ++i) {
        // Exterior points with (s, p) in Gamma, |a| <= 1, kept away from the
        // degenerate regimes so the truncation degree stays moderate.
        SymPoint q;
        double radius = 0.0;
        while (true) {
            q = rng.sym_in_G();
            radius = fiber_radius(q);
            if (radius < 0.3 || radius > 0.8) continue;
            if (std::abs(kappa_maximizer(q)) > 0.9) continue;
            break;
        }
        const double mod = rng.uniform(1.2 * radius, 1.0);
        const PentaPoint x{std::polar(mod, rng.uniform(0.0, 2.0 * M_PI)), q.s, q.p};
        try {
            const SeparatingPolynomial sep = separating_polynomial(x, 0.05, seed + i);
            if (!rec.check(sep.abs_at_x > 1.0 && sep.max_abs_on_samples <= 1.0 + 1e-12,
                           "separating polynomial fails its guarantee at " + show(x))) {
                break;
            }
        } catch (const std::exception& e) {
            rec.check(false, "separating polynomial construction failed at " + show(x) + " (" +
                                 e.what() + ")");
            break;
        }
    }
    return rec.finish();
}

std::vector<std::string> suite_names() {
    return {"criteria",  "kappa",      "identity",  "lifting", "mu",        "automorphisms",
            "boundary",  "convexity-real", "regressions", "starlike", "separation"};
}

SuiteResult run_suite(const std::string& name, std::size_t n, std::uint64_t seed) {
    if (name == "criteria" || name == "criteria-agreement")
        return criteria_agreement(n, n / 10 + 1, seed);
    if (name == "kappa" || name == "oracle-agreement")
        return kappa_agreement(std::max<std::size_t>(1, n / 100), seed);
    if (name == "identity") return radius_identity(n, seed);
    if (name == "lifting") return lifting_roundtrip(n, seed);
    if (name == "mu") return mu_consistency(std::max<std::size_t>(1, n / 100), seed);
    if (name == "automorphisms" || name == "automorphism-laws") return automorphism_laws(n, seed);
    if (name == "boundary" || name == "boundary-roundtrip") return boundary_roundtrip(n, seed);
    if (name == "convexity-real" || name == "convexity")
        return real_convexity(std::max<std::size_t>(1, n / 10), n, seed);
    if (name == "regressions") return fixed_regressions();
    if (name == "starlike")
        return starlike(std::max<std::size_t>(1, n / 10), n, std::max<std::size_t>(1, n / 100),
                        seed);
    if (name == "separation") return separation(std::max<std::size_t>(1, n / 1000), seed);
    throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace penta::selftest
