#include "hardy/grid.hpp"

#include <algorithm>
#include <cmath>

namespace hardy {

std::vector<double> linear_grid(double a, double b, int n) {
    std::vector<double> xs;
    if (n < 2) n = 2;
    xs.reserve(n);
    for (int i = 0; i < n; ++i)
        xs.push_back(a + (b - a) * i / double(n - 1));
    return xs;
}

std::vector<double> log_grid(double a, double b, int n) {
    std::vector<double> xs;
    if (n < 2) n = 2;
    xs.reserve(n);
    const double la = std::log(a), lb = std::log(b);
    for (int i = 0; i < n; ++i)
        xs.push_back(std::exp(la + (lb - la) * i / double(n - 1)));
    return xs;
}

std::vector<double> symmetric_log_grid(double a, double b, int n) {
    std::vector<double> pos = log_grid(a, b, n);
    std::vector<double> xs;
    xs.reserve(2 * pos.size());
    for (auto it = pos.rbegin(); it != pos.rend(); ++it) xs.push_back(-*it);
    for (double x : pos) xs.push_back(x);
    return xs;
}

double interp_linear(const GridFunction& f, double x) {
    if (f.xs.empty()) return 0.0;
    if (x <= f.xs.front()) return f.ys.front();
    if (x >= f.xs.back()) return f.ys.back();
    auto it = std::upper_bound(f.xs.begin(), f.xs.end(), x);
    const size_t i = size_t(it - f.xs.begin());
    const double x0 = f.xs[i - 1], x1 = f.xs[i];
    const double t = (x - x0) / (x1 - x0);
    return (1.0 - t) * f.ys[i - 1] + t * f.ys[i];
}

} // namespace hardy
