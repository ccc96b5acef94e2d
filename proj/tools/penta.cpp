// Command-line front end: point queries, mu computation, liftings,
// automorphism application, boundary classification, cross-section data
// emission and the property suites.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "penta/automorphisms.hpp"
#include "penta/boundary.hpp"
#include "penta/lifting.hpp"
#include "penta/matrix_core.hpp"
#include "penta/mu.hpp"
#include "penta/pentablock.hpp"
#include "penta/polynomial.hpp"
#include "penta/real_geometry.hpp"
#include "penta/selftest.hpp"
#include "penta/symmetrised_bidisc.hpp"

using json = nlohmann::ordered_json;
using penta::Complex;

namespace {

Complex parse_complex(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
        throw CLI::ValidationError("complex", "expected re,im but got '" + text + "'");
    }
    try {
        return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
    } catch (const std::exception&) {
        throw CLI::ValidationError("complex", "could not parse '" + text + "'");
    }
}

json to_json(Complex z) { return json::array({z.real(), z.imag()}); }

json to_json(const penta::ComplexMatrix2& m) {
    return json::array({json::array({to_json(m.a11), to_json(m.a12)}),
                        json::array({to_json(m.a21), to_json(m.a22)})});
}

json to_json(const penta::Polynomial& f) {
    json coeffs = json::array();
    for (Complex c : f.coeffs()) coeffs.push_back(to_json(c));
    return coeffs;
}

penta::PentaPoint point_from(const std::vector<std::string>& raw) {
    return {parse_complex(raw[0]), parse_complex(raw[1]), parse_complex(raw[2])};
}

penta::ComplexMatrix2 matrix_from(const std::vector<std::string>& raw) {
    return {parse_complex(raw[0]), parse_complex(raw[1]), parse_complex(raw[2]),
            parse_complex(raw[3])};
}

penta::Polynomial poly_from(const std::vector<std::string>& raw) {
    std::vector<Complex> coeffs;
    coeffs.reserve(raw.size());
    for (const auto& t : raw) coeffs.push_back(parse_complex(t));
    return penta::Polynomial(coeffs);
}

void write_report(const json& report, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << report.dump(2) << "\n";
    } else {
        std::ofstream os(out_path);
        if (!os) throw std::runtime_error("cannot open output file: " + out_path);
        os << report.dump(2) << "\n";
    }
}

json query_report(const penta::PentaPoint& x, double tol) {
    using namespace penta;
    json rep;
    rep["point"] = {{"a", to_json(x.a)}, {"s", to_json(x.s)}, {"p", to_json(x.p)}};
    const SymPoint q = x.base();
    const bool g = in_G(q);
    const bool gamma = in_Gamma(q, tol);
    rep["in_G"] = g;
    rep["in_Gamma"] = gamma;
    rep["in_bGamma"] = in_bGamma(q, tol);
    rep["open"] = {{"beta_form", in_pentablock(x, Criterion::beta_form)},
                   {"root_form", in_pentablock(x, Criterion::root_form)},
                   {"sup_form", in_pentablock(x, Criterion::sup_form)}};
    rep["closed"] = in_closed_pentablock(x, tol);
    if (gamma) {
        rep["beta"] = to_json(beta_of(q, tol));
        const double radius = fiber_radius(q, tol);
        rep["fiber_radius"] = radius;
        rep["margin"] = radius - std::abs(x.a);
    } else {
        rep["beta"] = nullptr;
        rep["fiber_radius"] = nullptr;
        rep["margin"] = nullptr;
    }
    rep["kappa"] = g ? json(kappa_closed(q)) : json(nullptr);
    rep["in_K1"] = in_K1(x, std::max(tol, 1e-9));
    rep["in_bP"] = in_bP(x, std::max(tol, 1e-9));
    return rep;
}

void emit_real3d(std::ostream& os, int n) {
    using namespace penta;
    os << "a,s,p,face\n";
    auto row = [&](double a, double s, double p) {
        std::string face;
        try {
            face = classify_face(a, s, p, 1e-9).label();
        } catch (const std::exception&) {
            face = "?";
        }
        os << a << "," << s << "," << p << "," << face << "\n";
    };
    for (int i = 0; i <= n; ++i) {
        const double p = -1.0 + 2.0 * i / n;
        // Triangle walls s = +-(1 + p).
        for (int j = 0; j <= n; ++j) {
            const double span = 1.0 - 0.5 * (1.0 + p);
            const double a = (-1.0 + 2.0 * j / n) * span;
            row(a, 1.0 + p, p);
            row(a, -(1.0 + p), p);
        }
        // Curved sheets a = +-K over the triangle.
        for (int j = 0; j <= n; ++j) {
            const double s = (-1.0 + 2.0 * j / n) * (1.0 + p);
            const double rad = std::max(0.0, (1.0 + p) * (1.0 + p) - s * s);
            const double k = 1.0 - 0.5 * (1.0 + p - std::sqrt(rad));
            row(k, s, p);
            row(-k, s, p);
        }
    }
    // Ellipse face p = 1.
    for (int i = 0; i <= n; ++i) {
        const double t = static_cast<double>(i) / n;
        for (int j = 0; j < n; ++j) {
            const double phi = 2.0 * M_PI * j / n;
            row(t * std::cos(phi), 2.0 * t * std::sin(phi), 1.0);
        }
    }
}

void emit_fiber(std::ostream& os, int n, const penta::SymPoint& q) {
    const double radius = penta::fiber_radius(q);
    os << "a_re,a_im,s_re,s_im,p_re,p_im\n";
    for (int k = 0; k < n; ++k) {
        const Complex a = std::polar(radius, 2.0 * M_PI * k / n);
        os << a.real() << "," << a.imag() << "," << q.s.real() << "," << q.s.imag() << ","
           << q.p.real() << "," << q.p.imag() << "\n";
    }
}

void emit_ellipse(std::ostream& os, int n) {
    os << "a,s,p\n";
    for (int k = 0; k < n; ++k) {
        const double t = 2.0 * M_PI * k / n;
        os << std::cos(t) << "," << 2.0 * std::sin(t) << ",1\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pentablock geometry toolkit"};
    app.require_subcommand(1);
    // Global flags may follow the subcommand name.
    app.fallthrough();

    double tol = 1e-10;
    std::uint64_t seed = 7;
    double oracle_grid = 1e-2;
    std::string out_path;
    std::string format;  // reports default to json, emit-slice to csv
    app.add_option("--tol", tol, "tolerance for weak membership inequalities");
    app.add_option("--seed", seed, "seed for randomized suites");
    app.add_option("--oracle-grid", oracle_grid, "grid pitch for the definition-level oracles");
    app.add_option("--out", out_path, "output file (default: stdout)");
    app.add_option("--format", format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    // query
    auto* query = app.add_subcommand("query", "membership report for a point (a, s, p)");
    std::vector<std::string> query_point;
    query->add_option("--point", query_point, "three complex numbers re,im")
        ->expected(3)
        ->required();

    // mu
    auto* mu_cmd = app.add_subcommand("mu", "structured singular value of a 2x2 matrix");
    std::vector<std::string> mu_entries;
    bool mu_skip_oracle = false;
    mu_cmd->add_option("--matrix", mu_entries, "entries a11 a12 a21 a22 as re,im")
        ->expected(4)
        ->required();
    mu_cmd->add_flag("--no-oracle", mu_skip_oracle, "skip the definition-level oracle");

    // lift
    auto* lift = app.add_subcommand("lift", "construct liftings through the projection");
    std::vector<std::string> lift_point, poly_a, poly_s, poly_p;
    bool lift_closed = false, lift_unitary = false;
    lift->add_option("--point", lift_point, "three complex numbers re,im")->expected(3);
    lift->add_flag("--closed", lift_closed, "allow closed-ball liftings");
    lift->add_flag("--unitary", lift_unitary, "construct a unitary lifting (K1 points)");
    lift->add_option("--poly-a", poly_a, "coefficients of a(l), low to high, re,im each");
    lift->add_option("--poly-s", poly_s, "coefficients of s(l)");
    lift->add_option("--poly-p", poly_p, "coefficients of p(l)");

    // auto
    auto* aut = app.add_subcommand("auto", "apply an automorphism");
    std::string aut_omega = "1,0", aut_eta = "1,0", aut_alpha = "0,0";
    std::vector<std::string> aut_point, aut_matrix;
    bool aut_inverse = false;
    aut->add_option("--omega", aut_omega, "unimodular omega as re,im");
    aut->add_option("--eta", aut_eta, "unimodular eta as re,im");
    aut->add_option("--alpha", aut_alpha, "alpha in the open disc as re,im");
    aut->add_flag("--inverse", aut_inverse, "apply the inverse automorphism");
    aut->add_option("--point", aut_point, "pentablock point to transform")->expected(3);
    aut->add_option("--matrix", aut_matrix, "ball matrix to transform")->expected(4);

    // boundary
    auto* bnd = app.add_subcommand("boundary", "distinguished-boundary classification");
    std::vector<std::string> bnd_point;
    std::vector<double> bnd_param;
    std::string bnd_omega = "1,0";
    bnd->add_option("--point", bnd_point, "point to classify")->expected(3);
    bnd->add_option("--param", bnd_param, "x in [-1,1] and theta in [0, 2pi]")->expected(2);
    bnd->add_option("--omega", bnd_omega, "unimodular omega for --param");

    // emit-slice
    auto* emit = app.add_subcommand("emit-slice", "emit CSV samples of cross sections");
    std::string emit_kind;
    int resolution = 100;
    std::string fiber_s = "0,0", fiber_p = "0,0";
    emit->add_option("--kind", emit_kind, "real3d, fiber or ellipse")
        ->check(CLI::IsMember({"real3d", "fiber", "ellipse"}))
        ->required();
    emit->add_option("--resolution", resolution, "sampling resolution");
    emit->add_option("--s", fiber_s, "base s for fiber slices, re,im");
    emit->add_option("--p", fiber_p, "base p for fiber slices, re,im");

    // selftest
    auto* st = app.add_subcommand("selftest", "run a property suite");
    std::string suite_name = "all";
    std::size_t suite_n = 10000;
    st->add_option("suite", suite_name, "suite name or 'all'");
    st->add_option("-n,--samples", suite_n, "sample count knob");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    // Reports are JSON; slice emission is CSV.
    if (format == "csv" && !*emit) {
        std::cerr << "error: csv output is only available for emit-slice\n";
        return 1;
    }
    if (format == "json" && *emit) {
        std::cerr << "error: emit-slice writes csv\n";
        return 1;
    }

    try {
        using namespace penta;
        if (*query) {
            write_report(query_report(point_from(query_point), tol), out_path);
        } else if (*mu_cmd) {
            const ComplexMatrix2 a = matrix_from(mu_entries);
            json rep;
            rep["matrix"] = to_json(a);
            const double value = mu_value(a);
            rep["mu"] = value;
            rep["mu_lt_one"] = mu_lt_one(a);
            rep["mu_le_one"] = mu_le_one(a, tol);
            rep["spectral_radius"] = spectral_radius(a);
            rep["operator_norm"] = operator_norm(a);
            if (!mu_skip_oracle) {
                const MuOracle o = mu_oracle(a, oracle_grid);
                rep["oracle"] = {{"grid", oracle_grid},
                                 {"value", o.value},
                                 {"gap", std::abs(o.value - value)},
                                 {"minimizer_z", to_json(o.minimizer.z)},
                                 {"minimizer_w", to_json(o.minimizer.w)}};
            }
            write_report(rep, out_path);
        } else if (*lift) {
            json rep;
            if (!lift_point.empty()) {
                const PentaPoint x = point_from(lift_point);
                ComplexMatrix2 m;
                if (lift_unitary) {
                    m = construct_unitary(x, std::max(tol, 1e-9));
                } else if (lift_closed) {
                    m = construct_matrix_closed(x, tol);
                } else {
                    m = construct_matrix(x);
                }
                const PentaPoint back = pi_map(m);
                rep["matrix"] = to_json(m);
                rep["operator_norm"] = operator_norm(m);
                rep["pi_roundtrip_error"] =
                    std::max({std::abs(back.a - x.a), std::abs(back.s - x.s),
                              std::abs(back.p - x.p)});
            } else if (!poly_a.empty() || !poly_s.empty() || !poly_p.empty()) {
                const PolyTriple h{poly_from(poly_a), poly_from(poly_s), poly_from(poly_p)};
                const LiftDecision dec = analytic_lift_exists(h);
                rep["exists"] = dec.exists;
                if (!dec.note.empty()) rep["note"] = dec.note;
                json ws = json::array();
                for (const auto& w : dec.witnesses) {
                    ws.push_back({{"alpha", to_json(w.alpha)},
                                  {"q_multiplicity", w.q_multiplicity},
                                  {"a_multiplicity", w.a_multiplicity},
                                  {"near_unit_circle", w.near_unit_circle},
                                  {"obstruction", w.obstruction}});
                }
                rep["witnesses"] = ws;
                if (dec.exists) {
                    const PolynomialLift pl = polynomial_lift(h);
                    rep["polynomial"] = pl.polynomial;
                    if (pl.polynomial) {
                        rep["eta"] = to_json(pl.eta);
                        rep["g"] = to_json(pl.g);
                        rep["H"] = {to_json(pl.H[0]), to_json(pl.H[1]), to_json(pl.H[2]),
                                    to_json(pl.H[3])};
                    } else if (!pl.note.empty()) {
                        rep["note"] = pl.note;
                    }
                }
            } else {
                std::cerr << "lift: provide --point or --poly-a/--poly-s/--poly-p\n";
                return 1;
            }
            write_report(rep, out_path);
        } else if (*aut) {
            AutoParams g = AutoParams::make(
                parse_complex(aut_omega),
                MobiusParams::make(parse_complex(aut_eta), parse_complex(aut_alpha)));
            if (aut_inverse) g = group_inverse(g);
            json rep;
            rep["params"] = {{"omega", to_json(g.omega)},
                             {"eta", to_json(g.mobius.eta)},
                             {"alpha", to_json(g.mobius.alpha)}};
            if (!aut_point.empty()) {
                const PentaPoint y = f_apply(g, point_from(aut_point));
                rep["point"] = {{"a", to_json(y.a)}, {"s", to_json(y.s)}, {"p", to_json(y.p)}};
            }
            if (!aut_matrix.empty()) {
                rep["matrix"] = to_json(F_apply(g, matrix_from(aut_matrix)));
            }
            if (aut_point.empty() && aut_matrix.empty()) {
                std::cerr << "auto: provide --point and/or --matrix\n";
                return 1;
            }
            write_report(rep, out_path);
        } else if (*bnd) {
            json rep;
            if (!bnd_point.empty()) {
                const PentaPoint x = point_from(bnd_point);
                const double t = std::max(tol, 1e-9);
                rep["in_K1"] = in_K1(x, t);
                rep["in_bP"] = in_bP(x, t);
                if (in_bP(x, t)) {
                    const BoundaryCoordinates c = bP_coordinates(x, t);
                    rep["coordinates"] = {{"x", c.x},
                                          {"theta", c.theta},
                                          {"omega", to_json(c.omega)},
                                          {"omega_degenerate", c.omega_degenerate}};
                }
            } else if (bnd_param.size() == 2) {
                const PentaPoint x =
                    bP_parametrize(bnd_param[0], bnd_param[1], parse_complex(bnd_omega));
                rep["point"] = {{"a", to_json(x.a)}, {"s", to_json(x.s)}, {"p", to_json(x.p)}};
            } else {
                std::cerr << "boundary: provide --point or --param\n";
                return 1;
            }
            write_report(rep, out_path);
        } else if (*emit) {
            std::ostream* os = &std::cout;
            std::ofstream file;
            if (!out_path.empty()) {
                file.open(out_path);
                if (!file) throw std::runtime_error("cannot open output file: " + out_path);
                os = &file;
            }
            if (emit_kind == "real3d") {
                emit_real3d(*os, resolution);
            } else if (emit_kind == "fiber") {
                emit_fiber(*os, resolution, {parse_complex(fiber_s), parse_complex(fiber_p)});
            } else {
                emit_ellipse(*os, resolution);
            }
        } else if (*st) {
            std::vector<std::string> names;
            if (suite_name == "all") {
                names = selftest::suite_names();
            } else {
                names.push_back(suite_name);
            }
            bool ok = true;
            for (const auto& name : names) {
                const selftest::SuiteResult r = selftest::run_suite(name, suite_n, seed);
                std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " [" << r.checks
                          << " checks]";
                if (!r.passed) std::cout << " -- " << r.detail;
                std::cout << "\n";
                ok = ok && r.passed;
            }
            if (!ok) return 2;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
