#ifndef HARDY_GRID_HPP
#define HARDY_GRID_HPP

#include <string>
#include <vector>

namespace hardy {

// Samples of a real function on a finite grid of real abscissae.
struct GridFunction {
    std::vector<double> xs;
    std::vector<double> ys;
    std::string tag;
};

// Uniform grid on [a, b] with n points (n >= 2).
std::vector<double> linear_grid(double a, double b, int n);

// Logarithmic grid covering [a, b], 0 < a < b, n points.
std::vector<double> log_grid(double a, double b, int n);

// Symmetric two-sided logarithmic grid: +/- log_grid(a, b, n), sorted.
std::vector<double> symmetric_log_grid(double a, double b, int n);

// Piecewise-linear interpolation with constant extension outside the grid.
double interp_linear(const GridFunction& f, double x);

} // namespace hardy

#endif
