#include "hardy/model_fd.hpp"
#include "hardy/errors.hpp"
#include "hardy/numerics.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>
#include <Eigen/SVD>

namespace hardy {

void RationalInner::validate() const {
    for (const Complex& z : zeros)
        if (!(z.imag() > 0.0))
            throw NonUpperHalfZero("RationalInner zero");
    if (std::fabs(std::abs(rotation) - 1.0) > 1e-9)
        throw NonUnimodularRotation("RationalInner rotation");
}

Complex RationalInner::eval(Complex z) const {
    return eval_mif(to_mif(), z);
}

Polynomial RationalInner::numerator() const {
    return Polynomial::from_roots(zeros);
}

Polynomial RationalInner::denominator() const {
    std::vector<Complex> conj_zeros;
    conj_zeros.reserve(zeros.size());
    for (const Complex& z : zeros) conj_zeros.push_back(std::conj(z));
    return Polynomial::from_roots(conj_zeros);
}

std::vector<RationalFunction> tm_basis(const RationalInner& I) {
    I.validate();
    if (I.degree() == 0)
        throw ZeroDegree("tm_basis of a constant inner function");
    std::vector<RationalFunction> basis;
    Polynomial num_prod = Polynomial::constant({1.0, 0.0});
    Polynomial den_prod = Polynomial::constant({1.0, 0.0});
    Complex eps_prod{1.0, 0.0};
    for (size_t k = 0; k < I.zeros.size(); ++k) {
        const Complex lam = I.zeros[k];
        RationalFunction e;
        e.num = num_prod * (eps_prod * std::sqrt(lam.imag() / M_PI));
        e.den = den_prod * Polynomial({-std::conj(lam), {1.0, 0.0}});
        basis.push_back(e);
        num_prod = num_prod * Polynomial({-lam, {1.0, 0.0}});
        den_prod = den_prod * Polynomial({-std::conj(lam), {1.0, 0.0}});
        eps_prod *= blaschke_normalizer(lam);
    }
    return basis;
}

namespace {

void require_disjoint(const RationalInner& I, const RationalInner& J) {
    for (const Complex& a : I.zeros)
        for (const Complex& b : J.zeros)
            if (std::abs(a - b) < 1e-12 * (1.0 + std::abs(a)))
                throw SharedZero("rational pair shares a zero; cancel first");
}

} // namespace

ToeplitzKernel toeplitz_kernel_rational(const RationalInner& I, const RationalInner& J) {
    I.validate();
    J.validate();
    require_disjoint(I, J);
    ToeplitzKernel out;
    const int nI = I.degree(), nJ = J.degree();
    out.dim = std::max(0, nI - nJ);
    if (out.dim == 0) return out;

    const Polynomial DI = I.denominator();
    const Polynomial DJ = J.denominator();
    const Polynomial NI = I.numerator();
    const Polynomial NJ = J.numerator();

    // Basis r(z) = z^q, q = 0..dim-1: f = z^q D_J / D_I lies in H^2 and the
    // symbol maps it into conj(H^2):
    //   conj(I) J f = u * z^q N_J / N_I  on the axis, u unimodular.
    for (int q = 0; q < out.dim; ++q) {
        std::vector<Complex> mono(size_t(q) + 1, Complex{0.0, 0.0});
        mono.back() = Complex{1.0, 0.0};
        RationalFunction f;
        f.num = Polynomial(mono) * DJ;
        f.den = DI;
        out.basis.push_back(f);
    }

    // Certify each element: conj(I(x)) J(x) f(x) must equal conj(g(x)) for the
    // explicit H^2 function g = conj(u) r# D_J / D_I.  With
    // u = conj(rot_I eps_I) rot_J eps_J this is an identity of rational
    // functions; checking it at > deg many nodes pins it exactly.
    Complex epsI{1.0, 0.0}, epsJ{1.0, 0.0};
    for (const Complex& z : I.zeros) epsI *= blaschke_normalizer(z);
    for (const Complex& z : J.zeros) epsJ *= blaschke_normalizer(z);
    const Complex u = std::conj(I.rotation * epsI) * J.rotation * epsJ;

    double worst = 0.0;
    for (int q = 0; q < out.dim; ++q) {
        std::vector<Complex> mono(size_t(q) + 1, Complex{0.0, 0.0});
        mono.back() = Complex{1.0, 0.0};
        RationalFunction g;
        g.num = Polynomial(mono).conj_reflect() * DJ * std::conj(u);
        g.den = DI;
        const int nodes = nI + nJ + q + 3;
        for (int i = 0; i < nodes; ++i) {
            // Irrational spacing keeps nodes away from structured points.
            const double x = -7.31 + 14.62 * (i + 0.5) / nodes + 0.1234 * std::sin(3.7 * i);
            const Complex lhs = std::conj(I.eval(Complex{x, 0.0})) * J.eval(Complex{x, 0.0}) *
                                out.basis[size_t(q)].eval(Complex{x, 0.0});
            const Complex rhs = std::conj(g.eval(Complex{x, 0.0}));
            worst = std::max(worst, std::abs(lhs - rhs) / (1.0 + std::abs(rhs)));
        }
    }
    out.max_certification_residual = worst;
    return out;
}

MultiplierReport multiplier_operator(const RationalInner& I, const RationalInner& J,
                                     double tol) {
    I.validate();
    J.validate();
    if (I.degree() == 0 || J.degree() == 0)
        throw ZeroDegree("multiplier_operator needs non-constant factors");
    const auto eI = tm_basis(I);
    const auto eJ = tm_basis(J);
    const Polynomial DI = I.denominator();
    const Polynomial DJ = J.denominator();

    MultiplierReport rep;
    rep.matrix.assign(eJ.size(), std::vector<Complex>(eI.size()));
    for (size_t m = 0; m < eJ.size(); ++m) {
        for (size_t k = 0; k < eI.size(); ++k) {
            auto integrand = [&](double x) -> Complex {
                const Complex z{x, 0.0};
                const Complex h = DI.eval(z) / DJ.eval(z);
                return h * eI[k].eval(z) * std::conj(eJ[m].eval(z));
            };
            ComplexQuadratureResult r = integrate_line_c(integrand, tol, 32.0, 20);
            rep.matrix[m][k] = r.value;
            if (!r.certified) rep.quadrature_ok = false;
        }
    }

    Eigen::MatrixXcd M(eJ.size(), eI.size());
    for (size_t m = 0; m < eJ.size(); ++m)
        for (size_t k = 0; k < eI.size(); ++k)
            M(long(m), long(k)) = rep.matrix[m][k];
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M);
    for (long i = 0; i < svd.singularValues().size(); ++i)
        rep.singular_values.push_back(svd.singularValues()(i));
    rep.invertible = (eI.size() == eJ.size()) && rep.quadrature_ok &&
                     !rep.singular_values.empty() &&
                     rep.singular_values.back() > 1e-8 * rep.singular_values.front();
    return rep;
}

bool dominance_rational(const RationalInner& I, const RationalInner& theta) {
    I.validate();
    theta.validate();
    // ker T_{conj(theta) I} is nontrivial iff deg theta > deg I.
    return theta.degree() > I.degree();
}

void cancel_common_zeros(RationalInner& I, RationalInner& J) {
    for (size_t i = 0; i < I.zeros.size();) {
        bool cancelled = false;
        for (size_t j = 0; j < J.zeros.size(); ++j) {
            if (std::abs(I.zeros[i] - J.zeros[j]) < 1e-12 * (1.0 + std::abs(I.zeros[i]))) {
                I.zeros.erase(I.zeros.begin() + long(i));
                J.zeros.erase(J.zeros.begin() + long(j));
                cancelled = true;
                break;
            }
        }
        if (!cancelled) ++i;
    }
}

} // namespace hardy
