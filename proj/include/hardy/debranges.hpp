#ifndef HARDY_DEBRANGES_HPP
#define HARDY_DEBRANGES_HPP

#include <functional>
#include <string>
#include <vector>

#include "hardy/clark.hpp"
#include "hardy/inner.hpp"
#include "hardy/toeplitz_order.hpp"

namespace hardy {

// Structure function E(z) = scalar * exp(-i a z) * prod_k (z - w_k) with all
// roots w_k strictly in the lower half-plane, so |E(z)| > |E(conj z)| on the
// upper half-plane (Hermite-Biehler condition).
struct HBFunction {
    std::vector<Complex> roots;   // lower half-plane
    double exp_mass = 0.0;        // a >= 0 in exp(-i a z)
    Complex scalar{1.0, 0.0};     // nonzero

    void validate() const;
    Complex eval(Complex z) const;
    // E#(z) = conj(E(conj z)).
    Complex eval_sharp(Complex z) const;
};

// Inner function theta_E = E#/E as a descriptor: zeros conj(w_k), exponential
// mass 2a, rotation chosen so that eval_mif(desc, z) = E#(z)/E(z) exactly.
MifDescriptor theta_of_E(const HBFunction& E);

// Reproducing kernel of the de Branges space:
//   k_lambda(z) = ( E(z) conj(E(lambda)) - E#(z) E(conj lambda) )
//                 / (2 pi i (conj(lambda) - z) ),
// with the diagonal-limit case z -> conj(lambda) handled by a centered
// difference in the removable direction.
Complex reproducing_kernel(const HBFunction& E, Complex lambda, Complex z);

// Phase function psi(x) = -arg E(x), the continuous increasing branch; its
// derivative equals darg(theta_E)/2.
double phase_function(const HBFunction& E, double x);

// Spectral measure for the level alpha: atoms at {theta_E = alpha} with mass
// |E(x)|^2 * 2 pi / |theta_E'(x)|.
AtomicMeasure spectral_measure(const HBFunction& E, Complex alpha,
                               double xmin, double xmax);

// Gram matrix of the reproducing kernels at the alpha level points (the Clark
// basis); for a de Branges space this is diagonal with the spectral masses.
std::vector<std::vector<Complex>> clark_basis_gram(const HBFunction& E, Complex alpha,
                                                   double xmin, double xmax);

// Membership diagnostic for an entire function F given as an evaluator:
// F/E and F#/E square integrable on the axis (by quadrature with certified
// tails) and pointwise growth controlled in the upper half-plane.
struct MembershipReport {
    bool member = false;
    bool certified = false;
    double norm_f = 0.0;       // \int |F/E|^2 on the axis
    double norm_fsharp = 0.0;  // \int |F#/E|^2
    std::vector<Evidence> evidence;
};
MembershipReport db_membership(const std::function<Complex(Complex)>& F,
                               const HBFunction& E, double tol = 1e-7);

// JSON record {"zeros": [[re,im],...], "exp_mass": a, "scalar": [re,im]}.
std::string hb_to_json(const HBFunction& E);
HBFunction hb_from_json(const std::string& text);

} // namespace hardy

#endif
