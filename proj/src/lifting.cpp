#include "penta/lifting.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>

#include "penta/matrix_core.hpp"
#include "penta/pentablock.hpp"
#include "penta/symmetrised_bidisc.hpp"

namespace penta {

namespace {

ComplexMatrix2 lift_from_cases(const PentaPoint& x) {
    const auto [l1, l2] = roots_of(x.base());
    const Complex w = 0.5 * (l1 - l2);
    const double aw = std::abs(w);
    const double aa = std::abs(x.a);
    if (aa <= aw) {
        const Complex zeta = aw > 0.0 ? w / aw : Complex{1.0};
        const double t = std::sqrt(std::max(0.0, aw * aw - aa * aa));
        return {0.5 * x.s + t * zeta, zeta * zeta * std::conj(x.a), x.a, 0.5 * x.s - t * zeta};
    }
    return {0.5 * x.s, w * w / x.a, x.a, 0.5 * x.s};
}

}  // namespace

ComplexMatrix2 construct_matrix(const PentaPoint& x) {
    if (!in_pentablock(x)) {
        throw std::domain_error("construct_matrix: point not in the open pentablock");
    }
    return lift_from_cases(x);
}

ComplexMatrix2 construct_unitary(const PentaPoint& x, double tol) {
    const SymPoint q = x.base();
    if (!in_bGamma(q, tol)) {
        throw std::domain_error("construct_unitary: (s, p) not on the distinguished boundary of Gamma");
    }
    const double bound = std::sqrt(std::max(0.0, 1.0 - 0.25 * std::norm(x.s)));
    if (std::abs(x.a) > bound + tol) {
        throw std::domain_error("construct_unitary: |a| exceeds sqrt(1 - |s|^2/4)");
    }
    auto [l1, l2] = roots_of(q);
    l1 /= std::abs(l1);
    l2 /= std::abs(l2);
    const Complex w = 0.5 * (l1 - l2);
    if (std::abs(w) < 1e-12) {
        return ComplexMatrix2::diagonal(l1, l2);
    }
    const Complex ratio = x.a / w;
    const Complex eta = std::abs(ratio) > 0.0 ? std::conj(ratio) / std::abs(ratio) : Complex{1.0};
    const double sin2t = std::min(1.0, std::abs(ratio));
    const double theta = 0.5 * std::asin(sin2t);
    const double c = std::cos(theta), sn = std::sin(theta);
    return {l1 * c * c + l2 * sn * sn, (l1 - l2) * eta * sn * c,
            (l1 - l2) * std::conj(eta) * sn * c, l1 * sn * sn + l2 * c * c};
}

ComplexMatrix2 construct_matrix_closed(const PentaPoint& x, double tol) {
    if (!in_closed_pentablock(x, tol)) {
        throw std::domain_error("construct_matrix_closed: point not in the closed pentablock");
    }
    if (in_pentablock(x)) return construct_matrix(x);
    if (in_bGamma(x.base(), std::max(tol, 1e-9))) {
        return construct_unitary(x, std::max(tol, 1e-9));
    }
    const ComplexMatrix2 m = lift_from_cases(x);
    // Contraction certificate through det(1 - A*A) >= 0 and |det A| <= 1;
    // the closed-form norm itself loses half precision at coincident
    // singular values near the boundary.
    if (gram_determinant(m) < -1e-10 || std::abs(determinant(m)) > 1.0 + 1e-10) {
        throw std::runtime_error("construct_matrix_closed: constructed matrix is not a contraction");
    }
    return m;
}

Polynomial PolyTriple::q() const { return s * s * Complex{0.25} - p; }

LiftDecision analytic_lift_exists(const PolyTriple& h) {
    LiftDecision out;
    const Polynomial q = h.q();
    const double in_scale =
        std::max({1.0, h.s.max_coeff_abs() * h.s.max_coeff_abs(), h.p.max_coeff_abs()});
    if (q.is_zero(1e-14 * in_scale)) {
        out.exists = true;
        out.note = "q = s^2/4 - p vanishes identically; every zero has even (infinite) multiplicity";
        return out;
    }
    const bool a_zero = h.a.is_zero();

    const auto clusters = cluster_roots(q.roots());
    out.exists = true;
    for (const RootCluster& c : clusters) {
        if (c.near_unit_circle) {
            out.witnesses.push_back({c.center, c.multiplicity,
                                     a_zero ? -1 : multiplicity_at(h.a, c.center), true, false});
            continue;
        }
        if (std::abs(c.center) >= 1.0) continue;
        LiftWitness w;
        w.alpha = c.center;
        w.q_multiplicity = c.multiplicity;
        w.a_multiplicity = a_zero ? -1 : multiplicity_at(h.a, c.center);
        const bool odd = c.multiplicity % 2 == 1;
        w.obstruction = odd && (a_zero || w.a_multiplicity > c.multiplicity);
        if (w.obstruction) out.exists = false;
        out.witnesses.push_back(w);
    }
    if (a_zero) {
        out.note = "a vanishes identically; its vanishing order dominates every q-zero (-1 marks infinite multiplicity)";
    }
    return out;
}

namespace {

// Top-down square root by coefficient matching: cancels the coefficients of
// degree m..2m, leaving a defect of degree < m. Exact when r is a square.
std::optional<Polynomial> poly_sqrt(const Polynomial& r, bool require_exact, double rel_tol = 1e-9) {
    if (r.is_zero()) return Polynomial{};
    if (r.degree() % 2 != 0) return std::nullopt;
    const int m = r.degree() / 2;
    std::vector<Complex> e(m + 1, Complex{});
    e[m] = std::sqrt(r.coeff(2 * m));
    for (int i = m - 1; i >= 0; --i) {
        Complex inner = 0.0;
        for (int j = i + 1; j <= m - 1; ++j) {
            const int k = m + i - j;
            if (k >= i + 1 && k <= m - 1) inner += e[j] * e[k];
        }
        e[i] = (r.coeff(m + i) - inner) / (2.0 * e[m]);
    }
    Polynomial eta{std::vector<Complex>(e)};
    if (require_exact) {
        const Polynomial defect = eta * eta - r;
        if (defect.max_coeff_abs() > rel_tol * std::max(1.0, r.max_coeff_abs())) return std::nullopt;
    }
    return eta;
}

// Gaussian elimination with partial pivoting for small complex systems.
std::optional<std::vector<Complex>> solve_dense(std::vector<std::vector<Complex>> m,
                                                std::vector<Complex> rhs) {
    const int n = static_cast<int>(rhs.size());
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int row = col + 1; row < n; ++row) {
            if (std::abs(m[row][col]) > std::abs(m[piv][col])) piv = row;
        }
        if (std::abs(m[piv][col]) < 1e-300) return std::nullopt;
        std::swap(m[piv], m[col]);
        std::swap(rhs[piv], rhs[col]);
        for (int row = col + 1; row < n; ++row) {
            const Complex f = m[row][col] / m[col][col];
            for (int k = col; k < n; ++k) m[row][k] -= f * m[col][k];
            rhs[row] -= f * rhs[col];
        }
    }
    std::vector<Complex> x(n);
    for (int row = n - 1; row >= 0; --row) {
        Complex acc = rhs[row];
        for (int k = row + 1; k < n; ++k) acc -= m[row][k] * x[k];
        x[row] = acc / m[row][row];
    }
    return x;
}

// Joint Gauss-Newton on the coefficient system q - eta^2 - g a = 0 with
// deg eta <= m and deg g <= dg. Linear in g, quadratic in eta.
std::optional<std::pair<Polynomial, Polynomial>> solve_decomposition(
    const Polynomial& q, const Polynomial& a, int m, int dg, std::vector<Complex> start_eta,
    double scale) {
    const int da = a.degree();
    const int rlen = std::max({q.degree(), 2 * m, dg + da}) + 1;
    const int ne = m + 1, nu = ne + dg + 1;
    std::vector<Complex> u(nu, Complex{});
    for (int i = 0; i < ne && i < static_cast<int>(start_eta.size()); ++i) u[i] = start_eta[i];

    auto residual = [&](const std::vector<Complex>& v) {
        const Polynomial eta{std::vector<Complex>(v.begin(), v.begin() + ne)};
        const Polynomial g{std::vector<Complex>(v.begin() + ne, v.end())};
        const Polynomial d = q - eta * eta - g * a;
        std::vector<Complex> r(rlen, Complex{});
        for (int i = 0; i < rlen; ++i) r[i] = d.coeff(i);
        return r;
    };
    auto max_abs = [](const std::vector<Complex>& r) {
        double v = 0.0;
        for (Complex c : r) v = std::max(v, std::abs(c));
        return v;
    };

    for (int iter = 0; iter < 100; ++iter) {
        const std::vector<Complex> r = residual(u);
        if (max_abs(r) <= 1e-13 * scale) break;

        const Polynomial eta{std::vector<Complex>(u.begin(), u.begin() + ne)};
        std::vector<std::vector<Complex>> jac(rlen, std::vector<Complex>(nu, Complex{}));
        for (int i = 0; i < ne; ++i) {
            const Polynomial col = eta * Polynomial::monomial(-2.0, i);
            for (int row = 0; row < rlen; ++row) jac[row][i] = col.coeff(row);
        }
        for (int j = 0; j <= dg; ++j) {
            for (int k = 0; k <= da; ++k) {
                if (j + k < rlen) jac[j + k][ne + j] = -a.coeff(k);
            }
        }
        std::vector<std::vector<Complex>> jtj(nu, std::vector<Complex>(nu, Complex{}));
        std::vector<Complex> jtr(nu, Complex{});
        for (int i = 0; i < nu; ++i) {
            for (int j = 0; j < nu; ++j) {
                for (int row = 0; row < rlen; ++row) {
                    jtj[i][j] += std::conj(jac[row][i]) * jac[row][j];
                }
            }
            jtj[i][i] += 1e-12 * std::max(1.0, scale);
            for (int row = 0; row < rlen; ++row) jtr[i] += std::conj(jac[row][i]) * r[row];
        }
        const auto step = solve_dense(std::move(jtj), std::move(jtr));
        if (!step) return std::nullopt;
        double sn = 0.0;
        for (int i = 0; i < nu; ++i) {
            u[i] -= (*step)[i];
            sn = std::max(sn, std::abs((*step)[i]));
        }
        if (sn < 1e-15 * std::max(1.0, scale)) break;
    }
    if (max_abs(residual(u)) > 1e-11 * scale) return std::nullopt;
    return std::make_pair(Polynomial{std::vector<Complex>(u.begin(), u.begin() + ne)},
                          Polynomial{std::vector<Complex>(u.begin() + ne, u.end())});
}

Polynomial canonical_sign(Polynomial eta) {
    eta.trim(1e-13);
    const Complex lead = eta.leading();
    if (lead.real() < 0.0 || (lead.real() == 0.0 && lead.imag() < 0.0)) return eta * Complex{-1.0};
    return eta;
}

}  // namespace

PolynomialLift polynomial_lift(const PolyTriple& h) {
    const LiftDecision dec = analytic_lift_exists(h);
    if (!dec.exists) {
        throw std::domain_error("polynomial_lift: no analytic lifting exists for this data");
    }

    const Polynomial q = h.q();
    const Polynomial& a = h.a;
    const double scale = std::max({1.0, q.max_coeff_abs(), a.max_coeff_abs()});
    const Polynomial half_s = h.s * Complex{0.5};

    PolynomialLift out;
    auto assemble = [&](Polynomial eta, Polynomial g) {
        eta = canonical_sign(std::move(eta));
        g.trim(1e-13);
        out.polynomial = true;
        out.eta = eta;
        out.g = g;
        out.H = {half_s - eta, g, a, half_s + eta};
    };

    if (q.is_zero(1e-14 * scale)) {
        assemble(Polynomial{}, Polynomial{});
        return out;
    }
    if (a.is_zero(1e-14 * scale)) {
        if (auto eta = poly_sqrt(q, /*require_exact=*/true)) {
            assemble(*eta, Polynomial{});
        } else {
            out.note = "lifting exists but q is not a polynomial square and a vanishes identically";
        }
        return out;
    }
    // Scan target degrees of g ascending, eta degrees ascending inside, so the
    // first decomposition found has minimal g degree with a deterministic
    // tie-break. The verified residual keeps the search sound regardless of
    // where the multistart iteration converges.
    std::mt19937_64 gen(2718281828ull);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    for (int dg = 0; dg <= q.degree(); ++dg) {
        const int m_cap = std::max(q.degree(), dg + a.degree()) / 2;
        for (int m = 0; m <= m_cap; ++m) {
            std::vector<std::vector<Complex>> starts;
            starts.emplace_back(m + 1, Complex{});
            if (q.degree() == 2 * m) {
                if (auto guess = poly_sqrt(q, /*require_exact=*/false)) {
                    starts.push_back(guess->coeffs());
                }
            }
            for (int k = 0; k < 24; ++k) {
                std::vector<Complex> s0(m + 1);
                for (auto& v : s0) v = Complex{unif(gen), unif(gen)} * std::sqrt(scale);
                starts.push_back(std::move(s0));
            }
            for (auto& s0 : starts) {
                if (auto sol = solve_decomposition(q, a, m, dg, s0, scale)) {
                    const Polynomial defect = q - sol->first * sol->first - sol->second * a;
                    if (defect.max_coeff_abs() > 1e-10 * scale) continue;
                    assemble(sol->first, sol->second);
                    return out;
                }
            }
        }
    }

    out.note = "lifting exists but no polynomial square decomposition was found within the degree bound";
    return out;
}

}  // namespace penta
