#ifndef HARDY_POLY_HPP
#define HARDY_POLY_HPP

#include <complex>
#include <vector>

namespace hardy {

using Complex = std::complex<double>;

// Dense polynomial with complex coefficients, ascending powers.
class Polynomial {
public:
    Polynomial() : c_{Complex{0.0, 0.0}} {}
    explicit Polynomial(std::vector<Complex> coeffs);
    static Polynomial constant(Complex v) { return Polynomial({v}); }
    static Polynomial from_roots(const std::vector<Complex>& roots,
                                 Complex leading = {1.0, 0.0});

    int degree() const; // -1 for the zero polynomial
    const std::vector<Complex>& coeffs() const { return c_; }
    Complex eval(Complex z) const;

    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator*(Complex s) const;
    // p#(z) = conj(p(conj z)): conjugate the coefficients.
    Polynomial conj_reflect() const;

private:
    std::vector<Complex> c_;
    void trim();
};

// Quotient of polynomials.  No implicit normalization; callers keep the
// representation they constructed.
struct RationalFunction {
    Polynomial num;
    Polynomial den;
    Complex eval(Complex z) const;
};

} // namespace hardy

#endif
