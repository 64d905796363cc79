#include "hardy/numerics.hpp"
#include "hardy/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hardy {

namespace {

template <class T>
double vnorm(const T& v) {
    if constexpr (std::is_same_v<T, double>)
        return std::fabs(v);
    else
        return std::abs(v);
}

// Recursive adaptive Simpson with a depth cap.
template <class T>
T adaptive_simpson(const std::function<T(double)>& f, double a, double b,
                   T fa, T fm, T fb, T whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const T flm = f(lm), frm = f(rm);
    const T left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const T right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const T delta = left + right - whole;
    if (depth <= 0 || vnorm(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

template <class T>
T integrate_impl(const std::function<T(double)>& f, double a, double b, double tol) {
    if (a == b) return T{};
    // Seed with several panels of irrationally proportioned widths: uniform
    // panels can alias a periodic integrand (all Simpson nodes hitting the
    // same phase), which silences the refinement test.
    const int panels = 12;
    double cuts[panels + 1];
    cuts[0] = 0.0;
    const double golden = 0.6180339887498949;
    double acc = 0.0;
    for (int i = 0; i < panels; ++i) {
        const double frac = std::fmod((i + 1) * golden, 1.0);
        acc += 0.75 + 0.5 * frac;
        cuts[i + 1] = acc;
    }
    T total{};
    for (int i = 0; i < panels; ++i) {
        const double x0 = a + (b - a) * cuts[i] / acc;
        const double x1 = a + (b - a) * cuts[i + 1] / acc;
        const T f0 = f(x0), f1 = f(0.5 * (x0 + x1)), f2 = f(x1);
        const T whole = (x1 - x0) / 6.0 * (f0 + 4.0 * f1 + f2);
        total += adaptive_simpson<T>(f, x0, x1, f0, f1, f2, whole, tol / panels, 48);
    }
    return total;
}

// Shared tail machinery: given window increments A_j, extrapolate the series
// sum_{j>J} A_j assuming A_{j+1} ~ rho * A_j.
template <class T>
void extrapolate_tail(const std::vector<T>& increments, double scale, double tol,
                      T& remainder, double& tail_exponent, bool& certified) {
    remainder = T{};
    tail_exponent = 0.0;
    certified = false;
    const size_t n = increments.size();
    if (n == 0) { certified = true; tail_exponent = -99.0; return; }
    // If the last increments are negligible the tail is already resolved.
    double last = vnorm(increments[n - 1]);
    double prev = n >= 2 ? vnorm(increments[n - 2]) : last;
    if (last <= 0.05 * tol * std::max(1.0, scale) && prev <= 0.05 * tol * std::max(1.0, scale)) {
        certified = true;
        tail_exponent = -99.0;
        return;
    }
    if (n < 3) return;
    // Fit a geometric ratio to the last few increments (signed, so an
    // oscillating tail extrapolates too).
    std::vector<double> ratios;
    for (size_t j = n - std::min<size_t>(n, 5); j + 1 < n; ++j) {
        const double d = vnorm(increments[j]);
        if (d < 1e-300) continue;
        const double r = vnorm(increments[j + 1]) / d;
        if (r > 0.0) ratios.push_back(r);
    }
    if (ratios.size() < 2) { certified = true; tail_exponent = -99.0; return; }
    double lg = 0.0;
    for (double r : ratios) lg += std::log(r);
    const double rho = std::exp(lg / ratios.size());
    double spread = 0.0;
    for (double r : ratios) spread = std::max(spread, std::fabs(std::log(r) - std::log(rho)));
    tail_exponent = std::log2(rho);
    if (rho >= 0.97) return; // divergent or too slow to certify
    // Signed/phased ratio from the last two increments for the geometric sum
    // (projection of A_{n-1} onto A_{n-2} handles alternating tails).
    double srho = rho;
    if (prev > 1e-300) {
        double proj;
        if constexpr (std::is_same_v<T, double>)
            proj = increments[n - 1] * increments[n - 2];
        else
            proj = std::real(increments[n - 1] * std::conj(increments[n - 2]));
        if (proj < 0.0) srho = -rho;
    }
    remainder = increments[n - 1] * (srho / (1.0 - srho));
    certified = spread < 0.25;
}

template <class T, class R>
R integrate_line_impl(const std::function<T(double)>& f, double tol, double x0, int doublings) {
    R out;
    T total = integrate_impl<T>(f, -x0, x0, tol);
    std::vector<T> inc;
    double X = x0;
    for (int j = 0; j < doublings; ++j) {
        const double X2 = 2.0 * X;
        T a = integrate_impl<T>(f, X, X2, tol);
        T b = integrate_impl<T>(f, -X2, -X, tol);
        inc.push_back(a + b);
        total += a + b;
        X = X2;
        // Stop early once several consecutive increments are negligible.
        if (j >= 2) {
            bool tiny = true;
            for (int k = 0; k < 3; ++k)
                if (vnorm(inc[inc.size() - 1 - k]) > 0.05 * tol * std::max(1.0, vnorm(total)))
                    { tiny = false; break; }
            if (tiny) break;
        }
    }
    T rem{};
    extrapolate_tail<T>(inc, vnorm(total), tol, rem, out.tail_exponent, out.certified);
    out.value = total + rem;
    return out;
}

} // namespace

double integrate(const RealFn& f, double a, double b, double tol) {
    return integrate_impl<double>(f, a, b, tol);
}

Complex integrate_c(const ComplexFn& f, double a, double b, double tol) {
    return integrate_impl<Complex>(f, a, b, tol);
}

QuadratureResult integrate_line(const RealFn& f, double tol, double x0, int doublings) {
    return integrate_line_impl<double, QuadratureResult>(f, tol, x0, doublings);
}

ComplexQuadratureResult integrate_line_c(const ComplexFn& f, double tol, double x0, int doublings) {
    return integrate_line_impl<Complex, ComplexQuadratureResult>(f, tol, x0, doublings);
}

QuadratureResult integrate_halfline(const RealFn& f, double a, int sign,
                                    double tol, double w0, int doublings) {
    QuadratureResult out;
    const double s = sign >= 0 ? 1.0 : -1.0;
    // Fold orientation into the substitution u >= 0, t = a + s*u, so the
    // result is the integral of f over the half line in the direction of `sign`.
    double total = integrate_impl<double>([&](double u) { return f(a + s * u); }, 0.0, w0, tol);
    std::vector<double> inc;
    double W = w0;
    for (int j = 0; j < doublings; ++j) {
        double piece = integrate_impl<double>([&](double u) { return f(a + s * u); }, W, 2.0 * W, tol);
        inc.push_back(piece);
        total += piece;
        W *= 2.0;
        if (j >= 2 && std::fabs(inc[inc.size() - 1]) < 0.05 * tol * std::max(1.0, std::fabs(total)) &&
            std::fabs(inc[inc.size() - 2]) < 0.05 * tol * std::max(1.0, std::fabs(total)))
            break;
    }
    double rem = 0.0;
    extrapolate_tail<double>(inc, std::fabs(total), tol, rem, out.tail_exponent, out.certified);
    out.value = total + rem;
    return out;
}

QuadratureResult poisson_integral(const RealFn& f, double tol) {
    return integrate_line([&](double x) { return f(x) / (1.0 + x * x); }, tol);
}

namespace {

// One excision radius; the caller Richardson-extrapolates over two radii.
double hilbert_once(const RealFn& f, double x, double delta, double tol, bool& tails_ok) {
    // Symmetric part across the singularity: PV of f(t)/(x-t) near t = x.
    const double eps = 1e-9 * (1.0 + std::fabs(x));
    auto sym = [&](double s) { return (f(x - s) - f(x + s)) / s; };
    double p1 = integrate(sym, eps, delta, tol);
    // Regular part of the normalizing kernel over the excised window.
    auto reg = [&](double t) { return f(t) * t / (1.0 + t * t); };
    double p2 = integrate(reg, x - delta, x + delta, tol);
    // Far field, both sides, with the full convergent kernel.
    auto far = [&](double t) { return f(t) * (1.0 / (x - t) + t / (1.0 + t * t)); };
    QuadratureResult right = integrate_halfline(far, x + delta, +1, tol, 8.0 * (1.0 + std::fabs(x)));
    QuadratureResult left = integrate_halfline(far, x - delta, -1, tol, 8.0 * (1.0 + std::fabs(x)));
    tails_ok = right.certified && left.certified;
    return (p1 + p2 + right.value + left.value) / M_PI;
}

} // namespace

double hilbert_transform(const RealFn& f, double x, double tol) {
    const double d1 = 0.5, d2 = 0.25;
    bool ok1 = false, ok2 = false;
    const double h1 = hilbert_once(f, x, d1, tol, ok1);
    const double h2 = hilbert_once(f, x, d2, tol, ok2);
    if (!ok1 || !ok2)
        throw TailNotSettled("hilbert_transform tail windows did not certify");
    // The excision pieces are exact for the PV; the two radii mostly check
    // quadrature consistency.  Use the finer radius, flag disagreement.
    if (std::fabs(h1 - h2) > std::max(1e3 * tol, 1e-6 * (1.0 + std::fabs(h2))) * 50.0)
        throw TailNotSettled("hilbert_transform excision radii disagree");
    return h2 + (h2 - h1) / 3.0; // Richardson (error ~ delta^2 from interpolation bias)
}

std::vector<double> monotone_roots(const RealFn& phi, const std::vector<double>& targets,
                                   double a, double b) {
    if (!(a < b)) throw NotMonotone("empty bracket");
    const double fa = phi(a), fb = phi(b);
    if (!(fa < fb)) throw NotMonotone("function not increasing on bracket");
    // Spot check monotonicity on a coarse grid.
    double prev = fa;
    for (int i = 1; i <= 16; ++i) {
        const double x = a + (b - a) * i / 16.0;
        const double v = phi(x);
        if (v < prev - 1e-12 * (1.0 + std::fabs(prev)))
            throw NotMonotone("function decreases inside bracket");
        prev = v;
    }
    std::vector<double> roots;
    for (double t : targets) {
        if (t < fa || t > fb) continue;
        double lo = a, hi = b;
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (phi(mid) < t) lo = mid; else hi = mid;
            if (hi - lo <= 1e-13 * std::max(1.0, std::fabs(mid))) break;
        }
        roots.push_back(0.5 * (lo + hi));
    }
    return roots;
}

TailFit fit_power_tail(const std::vector<double>& xs, const std::vector<double>& ys) {
    TailFit fit;
    std::vector<double> lx, ly;
    for (size_t i = 0; i < xs.size() && i < ys.size(); ++i) {
        const double x = std::fabs(xs[i]), y = std::fabs(ys[i]);
        if (x > 0.0 && y > 1e-300) {
            lx.push_back(std::log(x));
            ly.push_back(std::log(y));
        }
    }
    if (lx.size() < 4) return fit;
    const size_t n = lx.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    for (size_t i = 0; i < n; ++i) {
        sx += lx[i]; sy += ly[i];
        sxx += lx[i] * lx[i]; sxy += lx[i] * ly[i]; syy += ly[i] * ly[i];
    }
    const double den = n * sxx - sx * sx;
    if (std::fabs(den) < 1e-14) return fit;
    fit.exponent = (n * sxy - sx * sy) / den;
    fit.log_c = (sy - fit.exponent * sx) / n;
    double ss_res = 0.0, ss_tot = 0.0;
    const double ybar = sy / n;
    for (size_t i = 0; i < n; ++i) {
        const double pred = fit.log_c + fit.exponent * lx[i];
        ss_res += (ly[i] - pred) * (ly[i] - pred);
        ss_tot += (ly[i] - ybar) * (ly[i] - ybar);
    }
    fit.r2 = ss_tot > 1e-300 ? 1.0 - ss_res / ss_tot : 1.0;
    fit.ok = fit.r2 >= 0.99;
    return fit;
}

double loglog_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    TailFit f = fit_power_tail(xs, ys);
    return f.exponent;
}

} // namespace hardy
