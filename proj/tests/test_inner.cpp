#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "hardy/errors.hpp"
#include "hardy/inner.hpp"

using namespace hardy;
using namespace std::complex_literals;

TEST_CASE("blaschke sum of a geometric family") {
    // zeros 2^n (1+i): sum of v/(1+|z|^2) = sum 2^n/(1+2*4^n), dominated by
    // a geometric series; value frozen from a direct summation oracle.
    std::vector<Complex> zeros;
    for (int n = 1; n <= 40; ++n)
        zeros.push_back(std::pow(2.0, n) * Complex{1.0, 1.0});
    const double s = blaschke_sum(zeros);
    double expect = 0.0;
    for (int n = 1; n <= 40; ++n) {
        const double t = std::pow(2.0, n);
        expect += t / (1.0 + 2.0 * t * t);
    }
    CHECK(s == doctest::Approx(expect).epsilon(1e-14));
    CHECK(s < 0.5);
}

TEST_CASE("rejects a lower half-plane zero") {
    MifDescriptor bad;
    bad.zeros = {Complex{0.0, -1.0}};
    CHECK_THROWS_AS(bad.validate(), NonUpperHalfZero);
    std::vector<Complex> zs = {Complex{1.0, -0.1}};
    CHECK_THROWS_AS(blaschke_sum(zs), NonUpperHalfZero);
}

TEST_CASE("single factor with zero at i") {
    MifDescriptor d;
    d.zeros = {1.0i};
    // theta(x) = (x-i)/(x+i); at x=0: -1.
    const Complex v = eval_mif(d, Complex{0.0, 0.0});
    CHECK(std::abs(v - Complex{-1.0, 0.0}) < 1e-14);
    // arg branch: 2 atan(0) + pi = pi.
    CHECK(arg_mif(d, 0.0) == doctest::Approx(M_PI));
    // derivative 2v/((x-u)^2+v^2) = 2 at x = 0.
    CHECK(darg_mif(d, 0.0) == doctest::Approx(2.0));
}

TEST_CASE("arg branch is continuous, increasing, and consistent with eval") {
    MifDescriptor d;
    d.zeros = {Complex{0.3, 0.7}, Complex{-2.0, 1.5}, Complex{4.0, 0.2}};
    d.exp_mass = 0.8;
    d.rotation = std::exp(0.77i);
    double prev = -1e300;
    for (double x = -30.0; x <= 30.0; x += 0.37) {
        const double phi = arg_mif(d, x);
        CHECK(phi > prev);
        prev = phi;
        const Complex lhs = std::exp(1.0i * phi);
        const Complex rhs = eval_mif(d, Complex{x, 0.0});
        CHECK(std::abs(lhs - rhs) < 1e-10);
    }
}

TEST_CASE("branch constants: limits at -infinity and total winding") {
    MifDescriptor d;
    d.zeros = {Complex{1.0, 2.0}, Complex{-3.0, 0.5}};
    // Each normalized factor tends to its unimodular normalizer as x -> -inf,
    // so the branch starts at sum(arg eps_n) there...
    double eps_sum = 0.0;
    for (const Complex& z : d.zeros) eps_sum += std::arg(blaschke_normalizer(z));
    CHECK(arg_mif(d, -1e9) == doctest::Approx(eps_sum).epsilon(1e-6));
    // ...and winds by 2*pi per zero across the axis.
    CHECK(arg_mif(d, 1e9) - arg_mif(d, -1e9) ==
          doctest::Approx(4.0 * M_PI).epsilon(1e-6));
}

TEST_CASE("derivative of the argument matches a finite difference") {
    MifDescriptor d;
    d.zeros = {Complex{0.0, 1.0}, Complex{2.0, 3.0}};
    d.exp_mass = 0.25;
    const double h = 1e-6;
    for (double x : {-5.0, -0.3, 1.9, 10.0}) {
        const double fd = (arg_mif(d, x + h) - arg_mif(d, x - h)) / (2.0 * h);
        CHECK(darg_mif(d, x) == doctest::Approx(fd).epsilon(1e-7));
    }
}

TEST_CASE("modulus strictly below 1 in the upper half-plane, 1 on the axis") {
    MifDescriptor d;
    d.zeros = {Complex{1.0, 1.0}};
    d.exp_mass = 0.5;
    CHECK(std::abs(eval_mif(d, Complex{0.7, 0.0})) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(eval_mif(d, Complex{0.7, 2.0})) < 1.0);
}

TEST_CASE("pole hit") {
    MifDescriptor d;
    d.zeros = {Complex{0.0, 1.0}};
    CHECK_THROWS_AS(eval_mif(d, Complex{0.0, -1.0}), PoleHit);
}

TEST_CASE("json round trip") {
    MifDescriptor d;
    d.zeros = {Complex{0.5, 1.25}, Complex{-1.0, 2.0}};
    d.exp_mass = 1.5;
    d.rotation = std::exp(0.3i);
    MifDescriptor back = mif_from_json(mif_to_json(d));
    REQUIRE(back.zeros.size() == 2);
    CHECK(std::abs(back.zeros[1] - d.zeros[1]) < 1e-15);
    CHECK(back.exp_mass == d.exp_mass);
    CHECK(std::abs(back.rotation - d.rotation) < 1e-15);
    CHECK_THROWS_AS(mif_from_json("{"), SchemaError);
    CHECK_THROWS_AS(mif_from_json(R"({"zeros": [[0.0, -2.0]]})"), NonUpperHalfZero);
}

TEST_CASE("generator materialization certifies the truncation") {
    ZeroGenerator gen = ZeroGenerator::geometric(2.0, 60);
    MifDescriptor d = materialize(gen, Complex{0.0, 1.0}, 1e-9);
    CHECK(d.zeros.size() >= 8);
    // Doubling the window must not move the value by more than the tolerance.
    MifDescriptor full;
    full.zeros = gen.window(1, 60);
    const Complex a = eval_mif(d, Complex{0.0, 1.0});
    const Complex b = eval_mif(full, Complex{0.0, 1.0});
    CHECK(std::abs(a - b) < 1e-7);
}

TEST_CASE("generator window range exhaustion throws") {
    // A lattice family's tail bound decays like 1/N, far too slowly for a
    // 1e-12 certificate before the materialization cap.
    ZeroGenerator gen = ZeroGenerator::lattice(0.01, 1L << 40);
    bool threw = false;
    try {
        materialize(gen, Complex{50.0, 1.0}, 1e-12);
    } catch (const TruncationNotConverged&) {
        threw = true;
    }
    CHECK(threw);
}

TEST_CASE("lattice generators produce the advertised patterns") {
    auto I = ZeroGenerator::lattice(10.0, 3).window(-3, 3);
    CHECK(I.size() == 7);
    auto L = ZeroGenerator::lattice_punctured(10.0, 3).window(-3, 3);
    CHECK(L.size() == 6);
    auto J = ZeroGenerator::lattice_half_shift(10.0, 3).window(-3, 3);
    CHECK(J[2] == Complex{-1.0, 10.0});
    CHECK(J[3] == Complex{0.5, 10.0});
}
