#ifndef HARDY_CLARK_HPP
#define HARDY_CLARK_HPP

#include <span>
#include <string>
#include <vector>

#include "hardy/inner.hpp"

namespace hardy {

// Discrete measure on the line, possibly with a point mass at infinity.
struct AtomicMeasure {
    struct Atom {
        double x;
        double mass;
    };
    std::vector<Atom> atoms;           // sorted by x
    double infinity_mass = 0.0;        // coefficient p of the linear term
    bool infinity_mass_certified = true;
};

// Solutions of theta(x) = alpha on [xmin, xmax] (alpha unimodular), found as
// the preimages of arg(alpha) mod 2*pi under the increasing branch arg_mif.
std::vector<double> level_set(const MifDescriptor& desc, Complex alpha,
                              double xmin, double xmax);

// Clark measure sigma_alpha restricted to [xmin, xmax]: one atom of mass
// 2*pi/|theta'(x)| at each point of the level set.  The point mass at
// infinity is certified only for pure exponentials (where it is 0); for other
// descriptors it is reported as 0 with infinity_mass_certified = false.
AtomicMeasure clark_measure(const MifDescriptor& desc, Complex alpha,
                            double xmin, double xmax);

// Herglotz function m with Re m = Poisson extension of the measure (plus the
// linear term p*Im z), normalized so that m(i) is real.
Complex herglotz_from_measure(const AtomicMeasure& mu, Complex z);

// Inner function with sigma_1 = mu, via theta = (m - 1)/(m + 1).
Complex mif_from_measure(const AtomicMeasure& mu, Complex z);

// Normalized Cauchy integral  (1/(2 pi i)) * sum_n f(x_n) mass_n / (x_n - z).
Complex cauchy_integral(std::span<const Complex> values, const AtomicMeasure& mu,
                        Complex z);

// Recover f in the model space from its samples on the atoms of sigma_1:
//   f(z) = (1 - theta(z)) * K(f sigma_1)(z).
// `samples` must align with `sigma1.atoms`.
Complex clark_recover(const MifDescriptor& desc, const AtomicMeasure& sigma1,
                      std::span<const Complex> samples, Complex z);

// JSON record {"atoms":[{"x":..,"mass":..},...], "infinity_mass": p}.
std::string measure_to_json(const AtomicMeasure& mu);
AtomicMeasure measure_from_json(const std::string& text);

// CSV with a header row: x,mass
std::string measure_to_csv(const AtomicMeasure& mu);

} // namespace hardy

#endif
