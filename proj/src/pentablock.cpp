#include "penta/pentablock.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>

#include "penta/detail/optimize.hpp"
#include "penta/matrix_core.hpp"

namespace penta {

Complex psi(Complex z, const PentaPoint& x) {
    const Complex den = 1.0 - x.s * z + x.p * z * z;
    if (std::abs(den) < 1e-14) {
        throw std::domain_error("psi: 1 - s z + p z^2 vanishes (z is a reciprocal root of (s, p))");
    }
    return x.a * (1.0 - std::norm(z)) / den;
}

double fiber_radius_roots(Complex l1, Complex l2) {
    const double v1 = std::max(0.0, 1.0 - std::norm(l1));
    const double v2 = std::max(0.0, 1.0 - std::norm(l2));
    return 0.5 * std::abs(1.0 - std::conj(l2) * l1) + 0.5 * std::sqrt(v1) * std::sqrt(v2);
}

double fiber_radius_beta(const SymPoint& q, double tol) {
    const Complex beta = beta_of(q, tol);
    const double root = std::sqrt(std::max(0.0, 1.0 - std::norm(beta)));
    return std::abs(1.0 - 0.5 * q.s * std::conj(beta) / (1.0 + root));
}

double fiber_radius(const SymPoint& q, double tol) {
    if (!in_Gamma(q, tol)) {
        throw std::domain_error("fiber_radius: point not in the closed symmetrised bidisc");
    }
    const auto [l1, l2] = roots_of(q);
    return fiber_radius_roots(l1, l2);
}

double kappa_closed(const SymPoint& q) {
    if (!in_G(q)) {
        throw std::domain_error("kappa_closed: point not in the symmetrised bidisc");
    }
    return 1.0 / fiber_radius_beta(q);
}

Complex kappa_maximizer(const SymPoint& q) {
    if (!in_G(q)) {
        throw std::domain_error("kappa_maximizer: point not in the symmetrised bidisc");
    }
    const Complex beta = beta_of(q);
    return std::conj(beta) / (1.0 + std::sqrt(std::max(0.0, 1.0 - std::norm(beta))));
}

KappaOracle kappa_oracle(const SymPoint& q, double step) {
    if (!(step > 0.0 && step <= 1e-2)) {
        throw std::invalid_argument("kappa_oracle: step must lie in (0, 1e-2]");
    }
    if (!in_G(q)) {
        throw std::domain_error("kappa_oracle: point not in the symmetrised bidisc");
    }
    const Complex s = q.s, p = q.p;

    // Squared objective; cheaper to compare and monotone in the true value.
    auto g2 = [&](Complex z) -> double {
        const double one = 1.0 - std::norm(z);
        if (one <= 0.0) return -1.0;
        const double d2 = std::norm(1.0 - s * z + p * z * z);
        return one * one / d2;
    };

    const int n_r = static_cast<int>(std::ceil(1.0 / step));
    const int n_t = std::max(1, static_cast<int>(std::llround(1.0 / step)));
    const Complex rot = std::polar(1.0, 2.0 * M_PI / n_t);
    const Complex rot2 = rot * rot;

    double best = g2(Complex{0.0});
    Complex best_z = 0.0;
    for (int i = 1; i < n_r; ++i) {
        const double r = i * step;
        const double one = 1.0 - r * r;
        const double one2 = one * one;
        Complex u = r;      // z on the ring
        Complex v = r * r;  // z^2
        double ring_best = -1.0;
        Complex ring_z = 0.0;
        for (int j = 0; j < n_t; ++j) {
            const double d2 = std::norm(1.0 - s * u + p * v);
            const double val = one2 / d2;
            if (val > ring_best) {
                ring_best = val;
                ring_z = u;
            }
            u *= rot;
            v *= rot2;
        }
        if (ring_best > best ||
            (ring_best == best && (ring_z.real() < best_z.real() ||
                                   (ring_z.real() == best_z.real() && ring_z.imag() < best_z.imag())))) {
            best = ring_best;
            best_z = ring_z;
        }
    }

    const auto refined = detail::nelder_mead_2d(
        [&](double x, double y) {
            const double v = g2(Complex{x, y});
            return v < 0.0 ? std::numeric_limits<double>::infinity() : -v;
        },
        {best_z.real(), best_z.imag()}, step);

    if (-refined.value > best) {
        best = -refined.value;
        best_z = {refined.point.x, refined.point.y};
    }
    return {std::sqrt(best), best_z};
}

bool in_pentablock(const PentaPoint& x, Criterion c, double tol) {
    const SymPoint q = x.base();
    if (!in_G(q, tol)) return false;
    switch (c) {
        case Criterion::beta_form:
            return std::abs(x.a) < fiber_radius_beta(q) - tol;
        case Criterion::root_form: {
            const auto [l1, l2] = roots_of(q);
            return std::abs(x.a) < fiber_radius_roots(l1, l2) - tol;
        }
        case Criterion::sup_form:
            return std::abs(x.a) * kappa_closed(q) < 1.0 - tol;
    }
    return false;
}

bool in_closed_pentablock(const PentaPoint& x, double tol) {
    const SymPoint q = x.base();
    if (!in_Gamma(q, tol)) return false;
    return std::abs(x.a) <= fiber_radius(q, tol) + tol;
}

Complex TriPoly::eval(Complex a, Complex s, Complex p) const {
    int ma = 0, ms = 0, mp = 0;
    for (const Term& t : terms) {
        ma = std::max(ma, t.da);
        ms = std::max(ms, t.ds);
        mp = std::max(mp, t.dp);
    }
    std::vector<Complex> pa(ma + 1, 1.0), ps(ms + 1, 1.0), pp(mp + 1, 1.0);
    for (int i = 1; i <= ma; ++i) pa[i] = pa[i - 1] * a;
    for (int i = 1; i <= ms; ++i) ps[i] = ps[i - 1] * s;
    for (int i = 1; i <= mp; ++i) pp[i] = pp[i - 1] * p;
    Complex acc = 0.0;
    for (const Term& t : terms) acc += t.c * pa[t.da] * ps[t.ds] * pp[t.dp];
    return acc;
}

namespace {

// Symmetrized truncation of Psi_{z0}: the double geometric sum in the two
// roots, rewritten over (s, p) through the power sums P_d = l1^d + l2^d.
TriPoly symmetrized_truncation(Complex z0, int n, double scale) {
    // power_sum[d][t] = coefficient of s^{d-2t} p^t in P_d.
    std::vector<std::vector<double>> power_sum(n + 1);
    if (n >= 1) power_sum[1] = {1.0};
    for (int d = 2; d <= n; ++d) {
        power_sum[d].assign(d / 2 + 1, 0.0);
        for (std::size_t t = 0; t < power_sum[d - 1].size(); ++t) {
            power_sum[d][t] += power_sum[d - 1][t];
        }
        if (d == 2) {
            power_sum[d][1] -= 2.0;  // P_2 = s^2 - 2p
        } else {
            for (std::size_t t = 0; t < power_sum[d - 2].size(); ++t) {
                power_sum[d][t + 1] -= power_sum[d - 2][t];
            }
        }
    }

    std::map<std::pair<int, int>, Complex> acc;  // (ds, dp) -> coefficient
    std::vector<Complex> z0pow(2 * n + 1, 1.0);
    for (int i = 1; i <= 2 * n; ++i) z0pow[i] = z0pow[i - 1] * z0;

    for (int j = 0; j <= n; ++j) acc[{0, j}] += z0pow[2 * j];
    for (int d = 1; d <= n; ++d) {
        for (int j = 0; j + d <= n; ++j) {
            const Complex w = z0pow[d + 2 * j];
            for (std::size_t t = 0; t < power_sum[d].size(); ++t) {
                acc[{d - 2 * static_cast<int>(t), static_cast<int>(t) + j}] += w * power_sum[d][t];
            }
        }
    }

    TriPoly f;
    f.terms.reserve(acc.size());
    for (const auto& [key, c] : acc) {
        f.terms.push_back({1, key.first, key.second, scale * c});
    }
    return f;
}

}  // namespace

Complex SeparatingPolynomial::eval(Complex a, Complex s, Complex p) const {
    if (trivial) return a;
    const int n = truncation_degree;
    // Partial geometric sums in y = z0^2 p, ascending.
    const Complex y = z0 * z0 * p;
    std::vector<Complex> geo(n + 1);
    Complex ypow = 1.0, acc = 0.0;
    for (int m = 0; m <= n; ++m) {
        acc += ypow;
        geo[m] = acc;
        ypow *= y;
    }
    // Power sums stay bounded on the closed bidisc, so the forward
    // recurrence P_d = s P_{d-1} - p P_{d-2} does not amplify.
    Complex total = geo[n];
    Complex pm2 = 2.0, pm1 = s, zpow = z0;
    for (int d = 1; d <= n; ++d) {
        const Complex pd = (d == 1) ? s : s * pm1 - p * pm2;
        if (d > 1) {
            pm2 = pm1;
            pm1 = pd;
        }
        total += zpow * pd * geo[n - d];
        zpow *= z0;
    }
    return scale * a * total;
}

SeparatingPolynomial separating_polynomial(const PentaPoint& x, double eps, std::uint64_t seed) {
    const SymPoint q = x.base();
    if (!in_Gamma(q)) {
        throw std::domain_error(
            "separating_polynomial: (s, p) outside the closed symmetrised bidisc is out of scope");
    }
    if (in_closed_pentablock(x)) {
        throw std::domain_error("separating_polynomial: point lies in the closed pentablock");
    }

    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    auto sample_closure = [&]() -> PentaPoint {
        const Complex l1 = std::polar(std::sqrt(unif(gen)), 2.0 * M_PI * unif(gen));
        const Complex l2 = std::polar(std::sqrt(unif(gen)), 2.0 * M_PI * unif(gen));
        const double radius = fiber_radius_roots(l1, l2);
        // Half the samples sit on the fiber boundary circle.
        const double t = unif(gen) < 0.5 ? 1.0 : unif(gen);
        const Complex a = std::polar(t * radius, 2.0 * M_PI * unif(gen));
        return {a, l1 + l2, l1 * l2};
    };
    constexpr int kCertSamples = 10000;

    SeparatingPolynomial out;
    if (std::abs(x.a) > 1.0) {
        out.trivial = true;
        out.poly.terms = {{1, 0, 0, Complex{1.0}}};
        out.abs_at_x = std::abs(x.a);
        out.psi_abs_at_x = 0.0;
        double worst = 0.0;
        for (int i = 0; i < kCertSamples; ++i) worst = std::max(worst, std::abs(out.eval(sample_closure())));
        out.max_abs_on_samples = worst;
        return out;
    }

    const Complex beta = beta_of(q);
    Complex z0 = std::conj(beta) / (1.0 + std::sqrt(std::max(0.0, 1.0 - std::norm(beta))));
    double psi_abs = std::abs(z0) < 1.0 ? std::abs(psi(z0, x)) : 0.0;
    if (std::abs(z0) > 1.0 - 1e-9 || psi_abs <= 1.0) {
        // The formula point can degenerate toward the circle when (s, p) is on
        // the boundary of Gamma; fall back to a radial search along its direction.
        const Complex dir = std::abs(z0) > 0.0 ? z0 / std::abs(z0) : Complex{1.0};
        for (int k = 1; k <= 4000; ++k) {
            const Complex zt = dir * (k / 4001.0);
            const double v = std::abs(psi(zt, x));
            if (v > psi_abs) {
                psi_abs = v;
                z0 = zt;
            }
        }
    }
    if (psi_abs <= 1.0) {
        throw std::runtime_error("separating_polynomial: no interior point with |Psi_z(x)| > 1 found");
    }
    if (!(eps > 0.0 && eps < (psi_abs - 1.0) / 3.0)) {
        throw std::invalid_argument("separating_polynomial: eps must lie in (0, (|Psi_z0(x)| - 1)/3)");
    }

    const double z0a = std::abs(z0);
    int n = 1;
    while (4.0 * std::pow(z0a, n + 1) / (1.0 - z0a) >= eps) {
        ++n;
        if (n > 2000) {
            throw std::runtime_error("separating_polynomial: truncation degree exceeds 2000");
        }
    }

    out.z0 = z0;
    out.psi_abs_at_x = psi_abs;
    out.truncation_degree = n;
    out.scale = (1.0 - std::norm(z0)) / (1.0 + eps);
    out.poly = symmetrized_truncation(z0, n, out.scale);
    out.abs_at_x = std::abs(out.eval(x));

    double worst = 0.0;
    for (int i = 0; i < kCertSamples; ++i) {
        worst = std::max(worst, std::abs(out.eval(sample_closure())));
    }
    out.max_abs_on_samples = worst;
    if (out.max_abs_on_samples > 1.0 + 1e-12 || out.abs_at_x <= 1.0) {
        throw std::runtime_error("separating_polynomial: certificate failed");
    }
    return out;
}

}  // namespace penta
