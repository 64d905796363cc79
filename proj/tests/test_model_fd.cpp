#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "hardy/errors.hpp"
#include "hardy/model_fd.hpp"
#include "hardy/numerics.hpp"

using namespace hardy;
using namespace std::complex_literals;

namespace {

Complex inner_product(const RationalFunction& f, const RationalFunction& g) {
    auto integrand = [&](double x) -> Complex {
        const Complex z{x, 0.0};
        return f.eval(z) * std::conj(g.eval(z));
    };
    return integrate_line_c(integrand, 1e-10, 32.0, 20).value;
}

} // namespace

TEST_CASE("tm basis: orthonormal by quadrature on the axis") {
    RationalInner I;
    I.zeros = {1.0i, Complex{1.0, 2.0}, Complex{-0.5, 0.3}};
    const auto e = tm_basis(I);
    REQUIRE(e.size() == 3);
    for (size_t a = 0; a < e.size(); ++a)
        for (size_t b = 0; b < e.size(); ++b) {
            const Complex ip = inner_product(e[a], e[b]);
            CHECK(std::abs(ip - (a == b ? 1.0 : 0.0)) < 1e-7);
        }
}

TEST_CASE("tm basis: first element is the normalized Cauchy kernel") {
    RationalInner I;
    I.zeros = {Complex{0.0, 2.0}};
    const auto e = tm_basis(I);
    const Complex z{1.0, 1.0};
    const Complex expected = std::sqrt(2.0 / M_PI) / (z + 2.0i);
    CHECK(std::abs(e[0].eval(z) - expected) < 1e-13);
}

TEST_CASE("tm basis rejects a constant inner function") {
    CHECK_THROWS_AS(tm_basis(RationalInner{}), ZeroDegree);
}

TEST_CASE("kernel dimension is the degree gap") {
    RationalInner I, J;
    I.zeros = {1.0i, Complex{2.0, 1.0}, Complex{-1.0, 0.5}};
    J.zeros = {Complex{0.5, 0.25}};
    const ToeplitzKernel K = toeplitz_kernel_rational(I, J);
    CHECK(K.dim == 2);
    REQUIRE(K.basis.size() == 2);
    CHECK(K.max_certification_residual < 1e-9);
    // Basis elements are genuinely in the kernel direction D_J/D_I times a
    // polynomial; spot-check the pole/zero structure at a point.
    const Complex z{0.3, 0.8};
    const Complex ratio = K.basis[1].eval(z) / K.basis[0].eval(z);
    CHECK(std::abs(ratio - z) < 1e-12);
}

TEST_CASE("coburn: at least one of ker T_s, ker T_conj(s) is trivial") {
    std::mt19937 rng(20260826);
    std::uniform_real_distribution<double> re(-4.0, 4.0), im(0.1, 3.0);
    std::uniform_int_distribution<int> deg(0, 4);
    for (int trial = 0; trial < 60; ++trial) {
        RationalInner I, J;
        for (int k = deg(rng); k-- > 0;) I.zeros.push_back({re(rng), im(rng)});
        for (int k = deg(rng); k-- > 0;) J.zeros.push_back({re(rng), im(rng)});
        cancel_common_zeros(I, J);
        const int fwd = toeplitz_kernel_rational(I, J).dim;
        const int bwd = toeplitz_kernel_rational(J, I).dim;
        CHECK(std::min(fwd, bwd) == 0);
    }
}

TEST_CASE("shared zeros are rejected until cancelled") {
    RationalInner I, J;
    I.zeros = {1.0i, Complex{2.0, 1.0}};
    J.zeros = {1.0i};
    CHECK_THROWS_AS(toeplitz_kernel_rational(I, J), SharedZero);
    cancel_common_zeros(I, J);
    CHECK(I.degree() == 1);
    CHECK(J.degree() == 0);
    CHECK(toeplitz_kernel_rational(I, J).dim == 1);
}

TEST_CASE("multiplier between equal-degree spaces is invertible") {
    RationalInner I, J;
    I.zeros = {1.0i, Complex{1.0, 1.5}};
    J.zeros = {Complex{-0.5, 0.5}, Complex{2.0, 2.0}};
    const MultiplierReport rep = multiplier_operator(I, J);
    REQUIRE(rep.matrix.size() == 2);
    CHECK(rep.quadrature_ok);
    CHECK(rep.invertible);
    CHECK(rep.singular_values.front() >= rep.singular_values.back());
    CHECK(rep.singular_values.back() > 0.0);
}

TEST_CASE("multiplier matrix implements multiplication by D_I/D_J") {
    // For f in K_I, h*f lies in L^2 and its projection onto K_J has the
    // computed coefficients; verify the matrix against direct quadrature of
    // <h e_k, e_m> for a fresh pair.
    RationalInner I, J;
    I.zeros = {Complex{0.0, 1.0}};
    J.zeros = {Complex{0.0, 2.0}};
    const MultiplierReport rep = multiplier_operator(I, J);
    const auto eI = tm_basis(I);
    const auto eJ = tm_basis(J);
    auto integrand = [&](double x) -> Complex {
        const Complex z{x, 0.0};
        const Complex h = (z + 1.0i) / (z + 2.0i); // D_I/D_J
        return h * eI[0].eval(z) * std::conj(eJ[0].eval(z));
    };
    const Complex direct = integrate_line_c(integrand, 1e-10, 32.0, 20).value;
    CHECK(std::abs(rep.matrix[0][0] - direct) < 1e-8);
    // Closed form: the integrand collapses to sqrt(2)/pi / (x^2 + 4), whose
    // integral over the line is sqrt(2)/2.
    CHECK(std::abs(rep.matrix[0][0] - Complex{std::sqrt(2.0) / 2.0, 0.0}) < 1e-8);
}

TEST_CASE("degree-gap dominance predicate") {
    RationalInner I, theta;
    I.zeros = {1.0i};
    theta.zeros = {Complex{0.0, 2.0}, Complex{1.0, 1.0}};
    CHECK(dominance_rational(I, theta));
    CHECK_FALSE(dominance_rational(theta, I));
    RationalInner same;
    same.zeros = {Complex{3.0, 0.5}};
    CHECK_FALSE(dominance_rational(I, same));
}

TEST_CASE("multiplier rejects constant factors") {
    RationalInner I, J;
    I.zeros = {1.0i};
    CHECK_THROWS_AS(multiplier_operator(I, J), ZeroDegree);
}
