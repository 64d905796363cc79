#ifndef HARDY_NUMERICS_HPP
#define HARDY_NUMERICS_HPP

#include <complex>
#include <functional>
#include <vector>

namespace hardy {

using Complex = std::complex<double>;
using RealFn = std::function<double(double)>;
using ComplexFn = std::function<Complex(double)>;

// Result of an improper integral over the line (or a half line).
//   value         : extrapolated value of the integral
//   tail_exponent : growth exponent q of the dyadic window increments A_j ~ X_j^q
//                   (q < 0 means the increments decay; q >= 0 means divergence)
//   certified     : increments settled into a clean geometric pattern and the
//                   extrapolated remainder is below the requested tolerance
struct QuadratureResult {
    double value = 0.0;
    double tail_exponent = 0.0;
    bool certified = false;
};

struct ComplexQuadratureResult {
    Complex value{0.0, 0.0};
    double tail_exponent = 0.0;
    bool certified = false;
};

// Adaptive Simpson on a finite interval.
double integrate(const RealFn& f, double a, double b, double tol = 1e-10);
Complex integrate_c(const ComplexFn& f, double a, double b, double tol = 1e-10);

// Integral over the whole line: dyadic windows [-x0*2^j, x0*2^j] with
// geometric extrapolation of the window increments (Aitken).
QuadratureResult integrate_line(const RealFn& f, double tol = 1e-9,
                                double x0 = 16.0, int doublings = 16);
ComplexQuadratureResult integrate_line_c(const ComplexFn& f, double tol = 1e-9,
                                         double x0 = 16.0, int doublings = 16);

// One-sided improper integral over [a, +inf) (sign = +1) or (-inf, a] (sign = -1).
QuadratureResult integrate_halfline(const RealFn& f, double a, int sign,
                                    double tol = 1e-9, double w0 = 16.0,
                                    int doublings = 16);

// Integral of f against the Poisson weight d\Pi = dx/(1+x^2).
QuadratureResult poisson_integral(const RealFn& f, double tol = 1e-9);

// Harmonic-conjugate (Hilbert) transform normalized to vanish at z = i:
//   Hf(x) = (1/pi) PV \int f(t) [ 1/(x-t) + t/(1+t^2) ] dt.
// Symmetric excision around the singularity plus Richardson extrapolation in
// the excision radius.  Throws TailNotSettled if the tail windows do not settle.
double hilbert_transform(const RealFn& f, double x, double tol = 1e-8);

// Preimages of `targets` under a strictly increasing function on [a, b].
// Targets outside [phi(a), phi(b)] are skipped.  Bisection to ~1e-12 relative.
std::vector<double> monotone_roots(const RealFn& phi, const std::vector<double>& targets,
                                   double a, double b);

// Least-squares power-law fit |y| ~ C x^exponent on (log x, log|y|).
struct TailFit {
    double exponent = 0.0;
    double log_c = 0.0;
    double r2 = 0.0;   // coefficient of determination of the log-log fit
    bool ok = false;   // enough usable points and r2 >= 0.99
};
TailFit fit_power_tail(const std::vector<double>& xs, const std::vector<double>& ys);

// Slope of log|y| against log x by least squares (no model-quality gate).
double loglog_slope(const std::vector<double>& xs, const std::vector<double>& ys);

} // namespace hardy

#endif
