#pragma once

#include <functional>
#include <span>
#include <vector>

namespace tlfnoise {

struct QuadResult {
    double value = 0.0;
    double error = 0.0;  // estimate, same units as value
    int cells = 0;
    long evals = 0;
    bool converged = false;
};

// Adaptive Gauss-Kronrod 15(7) on [a, b]. The interval is first partitioned
// at the seed points, then the cell with the largest error estimate is
// bisected until the summed estimate drops below max(rtol*|value|, atol) or
// the cell budget is exhausted. Seeds outside (a, b) are ignored.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double rtol, double atol = 0.0,
                     std::span<const double> seeds = {}, int max_cells = 20000);

// Integral over the whole real line via the map w = t/(1-t^2), t in (-1, 1).
QuadResult integrate_real_line(const std::function<double(double)>& f, double rtol,
                               double atol = 0.0, int max_cells = 20000);

}  // namespace tlfnoise
