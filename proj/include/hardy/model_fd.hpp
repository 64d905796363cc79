#ifndef HARDY_MODEL_FD_HPP
#define HARDY_MODEL_FD_HPP

#include <vector>

#include "hardy/inner.hpp"
#include "hardy/poly.hpp"

namespace hardy {

// Finite Blaschke product for the half-plane (a rational inner function).
struct RationalInner {
    std::vector<Complex> zeros;   // upper half-plane, nonempty unless constant
    Complex rotation{1.0, 0.0};

    void validate() const;
    int degree() const { return int(zeros.size()); }
    Complex eval(Complex z) const;
    MifDescriptor to_mif() const { return {zeros, 0.0, rotation}; }

    Polynomial numerator() const;   // N(z) = prod (z - lambda)
    Polynomial denominator() const; // D(z) = prod (z - conj(lambda)) = N#(z)
};

// Orthonormal rational basis of the model space K_I:
//   e_k(z) = sqrt(Im lambda_k / pi) * (prod_{j<k} b_j(z)) / (z - conj(lambda_k)).
std::vector<RationalFunction> tm_basis(const RationalInner& I);

// Kernel of the Toeplitz operator with symbol conj(I) * J, as rational
// functions r(z) * D_J(z) / D_I(z) with deg r < deg I - deg J.  Each basis
// element is certified against the conjugate-analyticity condition by a
// polynomial identity check at interpolation nodes.
struct ToeplitzKernel {
    int dim = 0;
    std::vector<RationalFunction> basis;
    double max_certification_residual = 0.0;
};
ToeplitzKernel toeplitz_kernel_rational(const RationalInner& I, const RationalInner& J);

// Matrix of multiplication by h(I,J) = E_I/E_J = D_I/D_J from K_I to K_J in
// the orthonormal bases, entries by quadrature on the line.
struct MultiplierReport {
    std::vector<std::vector<Complex>> matrix; // rows: K_J basis, cols: K_I basis
    std::vector<double> singular_values;
    bool quadrature_ok = true;   // false when an entry's tail failed to certify
    bool invertible = false;     // square, smallest singular value bounded away from 0
};
MultiplierReport multiplier_operator(const RationalInner& I, const RationalInner& J,
                                     double tol = 1e-9);

// Whether I lies in the dominance set of theta, i.e. ker T_{conj(theta) I} != 0.
bool dominance_rational(const RationalInner& I, const RationalInner& theta);

// Remove zeros shared by both factors (exact matches up to 1e-12); the
// Toeplitz kernel of the reduced pair equals that of the original.
void cancel_common_zeros(RationalInner& I, RationalInner& J);

} // namespace hardy

#endif
