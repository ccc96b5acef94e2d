#include "penta/detail/optimize.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace penta::detail {

namespace {
struct Vertex {
    Point2 p;
    double f;
};
}  // namespace

RefineResult nelder_mead_2d(const std::function<double(double, double)>& f, Point2 start,
                            double scale, int max_iter, double value_tol, double size_tol) {
    std::array<Vertex, 3> v{
        Vertex{start, f(start.x, start.y)},
        Vertex{{start.x + scale, start.y}, f(start.x + scale, start.y)},
        Vertex{{start.x, start.y + scale}, f(start.x, start.y + scale)},
    };
    auto order = [&] { std::sort(v.begin(), v.end(), [](const Vertex& a, const Vertex& b) { return a.f < b.f; }); };
    order();

    for (int it = 0; it < max_iter; ++it) {
        const double spread = std::abs(v[2].f - v[0].f);
        const double size = std::max({std::abs(v[1].p.x - v[0].p.x), std::abs(v[1].p.y - v[0].p.y),
                                      std::abs(v[2].p.x - v[0].p.x), std::abs(v[2].p.y - v[0].p.y)});
        if (spread < value_tol && size < size_tol) break;

        const Point2 c{0.5 * (v[0].p.x + v[1].p.x), 0.5 * (v[0].p.y + v[1].p.y)};
        const Point2 refl{c.x + (c.x - v[2].p.x), c.y + (c.y - v[2].p.y)};
        const double fr = f(refl.x, refl.y);

        if (fr < v[0].f) {
            const Point2 exp{c.x + 2.0 * (c.x - v[2].p.x), c.y + 2.0 * (c.y - v[2].p.y)};
            const double fe = f(exp.x, exp.y);
            v[2] = fe < fr ? Vertex{exp, fe} : Vertex{refl, fr};
        } else if (fr < v[1].f) {
            v[2] = {refl, fr};
        } else {
            const Point2 con{c.x + 0.5 * (v[2].p.x - c.x), c.y + 0.5 * (v[2].p.y - c.y)};
            const double fc = f(con.x, con.y);
            if (fc < v[2].f) {
                v[2] = {con, fc};
            } else {
                for (int i = 1; i < 3; ++i) {
                    v[i].p = {0.5 * (v[i].p.x + v[0].p.x), 0.5 * (v[i].p.y + v[0].p.y)};
                    v[i].f = f(v[i].p.x, v[i].p.y);
                }
            }
        }
        order();
    }
    return {v[0].p, v[0].f};
}

}  // namespace penta::detail
