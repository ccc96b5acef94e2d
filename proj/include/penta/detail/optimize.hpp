#pragma once

#include <functional>

namespace penta::detail {

struct Point2 {
    double x{}, y{};
};

struct RefineResult {
    Point2 point;
    double value;
};

/// Nelder-Mead minimization in the plane from a simplex of the given scale
/// around the start point. Objectives may return +inf outside their domain.
RefineResult nelder_mead_2d(const std::function<double(double, double)>& f, Point2 start,
                            double scale, int max_iter = 600, double value_tol = 1e-15,
                            double size_tol = 1e-10);

}  // namespace penta::detail
