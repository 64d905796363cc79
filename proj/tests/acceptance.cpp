// Acceptance gate: twelve end-to-end checks, one line of output each.
// Exits nonzero if any check fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "hardy/bm.hpp"
#include "hardy/clark.hpp"
#include "hardy/debranges.hpp"
#include "hardy/grid.hpp"
#include "hardy/inner.hpp"
#include "hardy/model_fd.hpp"
#include "hardy/numerics.hpp"
#include "hardy/toeplitz_order.hpp"

using namespace hardy;

namespace {

constexpr double kPi = 3.14159265358979323846;

std::mt19937 make_rng(unsigned salt) { return std::mt19937(20260826u + salt); }

RationalInner random_inner(std::mt19937& rng, int degree) {
    std::uniform_real_distribution<double> re(-3.0, 3.0), im(0.2, 2.5);
    RationalInner r;
    for (int t = 0; t < degree; ++t) r.zeros.push_back({re(rng), im(rng)});
    return r;
}

double sinc_pi(double x) {
    return std::abs(x) < 1e-8 ? 1.0 - (kPi * x) * (kPi * x) / 6.0
                              : std::sin(kPi * x) / (kPi * x);
}

Complex sinc_pi_c(Complex z) {
    if (std::abs(z) < 1e-8) return 1.0 - (kPi * z) * (kPi * z) / 6.0;
    return std::sin(kPi * z) / (kPi * z);
}

// ---------------------------------------------------------------- criteria

// 1. Order table for random finite Blaschke products of degrees 0..5:
// kernel dimension max(0, n-k), dominance-set inclusion iff n <= k,
// equivalence iff n = k.  Exact integers.
bool criterion_1(std::string& detail) {
    auto rng = make_rng(1);
    for (int n = 0; n <= 5; ++n) {
        for (int k = 0; k <= 5; ++k) {
            RationalInner I = random_inner(rng, n), J = random_inner(rng, k);
            if (toeplitz_kernel_rational(I, J).dim != std::max(0, n - k) ||
                toeplitz_kernel_rational(J, I).dim != std::max(0, k - n)) {
                detail = "kernel dimension mismatch at (" + std::to_string(n) + "," +
                         std::to_string(k) + ")";
                return false;
            }
            // Inclusion of dominance sets, probed over random witnesses: every
            // witness dominated by the degree-n product must be dominated by
            // the degree-k one exactly when n <= k.
            bool included = true;
            for (int d = 0; d <= 7; ++d) {
                RationalInner w = random_inner(rng, d);
                if (dominance_rational(w, I) && !dominance_rational(w, J))
                    included = false;
            }
            if (included != (n <= k)) {
                detail = "dominance-set inclusion wrong at (" + std::to_string(n) +
                         "," + std::to_string(k) + ")";
                return false;
            }
            if (n > 0 || k > 0) {
                const bool equiv =
                    relation_name(order_verdict(I.to_mif(), J.to_mif()).relation) ==
                    "equivalent";
                if (equiv != (n == k)) {
                    detail = "equivalence wrong at (" + std::to_string(n) + "," +
                             std::to_string(k) + ")";
                    return false;
                }
            }
        }
    }
    return true;
}

// 2. Coburn alternative on 200 random rational pairs of degree <= 6.
bool criterion_2(std::string& detail) {
    auto rng = make_rng(2);
    std::uniform_int_distribution<int> deg(0, 6);
    for (int trial = 0; trial < 200; ++trial) {
        RationalInner I = random_inner(rng, deg(rng)), J = random_inner(rng, deg(rng));
        if (toeplitz_kernel_rational(I, J).dim > 0 &&
            toeplitz_kernel_rational(J, I).dim > 0) {
            detail = "both kernels nontrivial at trial " + std::to_string(trial);
            return false;
        }
    }
    return true;
}

// 3. Level-set masses of pure exponentials: 2*pi/a at every atom.
bool criterion_3(std::string& detail) {
    MifDescriptor s2pi, s4pi;
    s2pi.exp_mass = 2.0 * kPi;
    s4pi.exp_mass = 4.0 * kPi;
    AtomicMeasure m1 = clark_measure(s2pi, Complex{1.0, 0.0}, -50.5, 50.5);
    if (m1.atoms.size() != 101) {
        detail = "expected 101 atoms, got " + std::to_string(m1.atoms.size());
        return false;
    }
    for (size_t i = 0; i < m1.atoms.size(); ++i) {
        if (std::fabs(m1.atoms[i].x - (double(i) - 50.0)) > 1e-9 ||
            std::fabs(m1.atoms[i].mass - 1.0) > 1e-10) {
            detail = "atom off at x = " + std::to_string(m1.atoms[i].x);
            return false;
        }
    }
    AtomicMeasure m2 = clark_measure(s4pi, Complex{1.0, 0.0}, -0.25, 0.25);
    if (m2.atoms.size() != 1 || std::fabs(m2.atoms[0].mass - 0.5) > 1e-10) {
        detail = "half-mass atom check failed";
        return false;
    }
    return true;
}

// 4. Recovery from one boundary sample: theta with zero at i and rotation -1
// has level set {theta = 1} = {0}; the model-space element 1/(z+i) is
// reconstructed at z = 2i from its value at 0 alone.
bool criterion_4(std::string& detail) {
    MifDescriptor d;
    d.zeros = {Complex{0.0, 1.0}};
    d.rotation = Complex{-1.0, 0.0};
    AtomicMeasure sigma = clark_measure(d, Complex{1.0, 0.0}, -10.0, 10.0);
    if (sigma.atoms.size() != 1 || std::fabs(sigma.atoms[0].x) > 1e-9) {
        detail = "level set is not the single point 0";
        return false;
    }
    const std::vector<Complex> samples = {1.0 / Complex{0.0, 1.0}};
    const Complex got = clark_recover(d, sigma, samples, Complex{0.0, 2.0});
    const Complex want = 1.0 / Complex{0.0, 3.0};
    if (std::abs(got - want) > 1e-8) {
        detail = "recovered value off by " + std::to_string(std::abs(got - want));
        return false;
    }
    return true;
}

// 5. Sampling Parseval identity.  Rational part: random combinations of the
// degree-3 orthonormal basis have line-integral norm equal to the weighted
// sum of squared samples on the level set.  Entire part: 50 random sinc
// combinations, where the sample sum is exact and the line integral is
// certified quadrature.
bool criterion_5(std::string& detail) {
    RationalInner I;
    I.zeros = {Complex{0.0, 1.0}, Complex{1.0, 2.0}, Complex{-1.0, 1.5}};
    MifDescriptor d = I.to_mif();
    // Point the rotation so theta at infinity != 1 and the level set stays finite.
    Complex prod{1.0, 0.0};
    for (const Complex& lam : I.zeros) prod *= blaschke_normalizer(lam);
    d.rotation = -std::conj(prod);
    AtomicMeasure sigma = clark_measure(d, Complex{1.0, 0.0}, -500.0, 500.0);
    if (sigma.atoms.size() != 3) {
        detail = "expected 3 level-set atoms, got " + std::to_string(sigma.atoms.size());
        return false;
    }
    std::vector<RationalFunction> basis = tm_basis(I);
    auto rng = make_rng(5);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<Complex> c;
        for (int j = 0; j < 3; ++j) c.push_back({coef(rng), coef(rng)});
        auto f = [&](Complex z) {
            Complex v{0.0, 0.0};
            for (int j = 0; j < 3; ++j) v += c[j] * basis[j].eval(z);
            return v;
        };
        QuadratureResult lhs =
            integrate_line([&](double x) { return std::norm(f(x)); }, 1e-9);
        double rhs = 0.0;
        for (const auto& atom : sigma.atoms) rhs += std::norm(f(atom.x)) * atom.mass;
        if (!lhs.certified || std::fabs(lhs.value - rhs) > 1e-6) {
            detail = "rational Parseval off by " + std::to_string(lhs.value - rhs);
            return false;
        }
    }
    std::uniform_int_distribution<int> node(-20, 20), nterms(3, 6);
    for (int trial = 0; trial < 50; ++trial) {
        const int m = nterms(rng);
        std::vector<int> nodes;
        while (int(nodes.size()) < m) {
            const int n = node(rng);
            if (std::find(nodes.begin(), nodes.end(), n) == nodes.end())
                nodes.push_back(n);
        }
        std::vector<Complex> c;
        double rhs = 0.0;
        for (int j = 0; j < m; ++j) {
            c.push_back({coef(rng), coef(rng)});
            rhs += std::norm(c[j]); // samples at integers hit one term each
        }
        auto f = [&](double x) {
            Complex v{0.0, 0.0};
            for (int j = 0; j < m; ++j) v += c[j] * sinc_pi(x - nodes[j]);
            return std::norm(v);
        };
        QuadratureResult lhs = integrate_line(f, 1e-9, 32.0, 16);
        if (!lhs.certified || std::fabs(lhs.value - rhs) > 1e-4) {
            detail = "sinc Parseval off by " + std::to_string(lhs.value - rhs) +
                     " at trial " + std::to_string(trial);
            return false;
        }
    }
    return true;
}

// 6. Reproducing kernel of the exponential structure function: closed-form
// cardinal-sine values at 20 points, then the reproducing identity by
// certified quadrature at an interior point.
bool criterion_6(std::string& detail) {
    HBFunction E;
    E.exp_mass = kPi;
    for (int t = 0; t < 20; ++t) {
        const double x = -4.75 + 0.5 * t;
        const Complex got = reproducing_kernel(E, Complex{0.0, 0.0}, Complex{x, 0.0});
        if (std::abs(got - Complex{sinc_pi(x), 0.0}) > 1e-12) {
            detail = "kernel value off at x = " + std::to_string(x);
            return false;
        }
    }
    const Complex lam{0.3, 0.4};
    auto f = [](Complex z) {
        return 0.7 * sinc_pi_c(z) - Complex{0.0, 0.4} * sinc_pi_c(z - 2.0) +
               0.2 * sinc_pi_c(z + 3.0);
    };
    ComplexQuadratureResult ip = integrate_line_c(
        [&](double x) {
            return f(Complex{x, 0.0}) * std::conj(reproducing_kernel(E, lam, Complex{x, 0.0}));
        },
        1e-10, 32.0, 16);
    if (!ip.certified || std::abs(ip.value - f(lam)) > 1e-6) {
        detail = "reproducing identity off by " + std::to_string(std::abs(ip.value - f(lam)));
        return false;
    }
    return true;
}

// 7. Non-transitivity at C = 10: the lattice, its half-shift, and its
// punctured variant.  Drift says both kernels trivial for the two adjacent
// pairs, while the outer pair has an exactly certified one-dimensional
// kernel after cancelling the shared zeros.
bool criterion_7(std::string& detail) {
    const double C = 10.0;
    const long n = 300;
    MifDescriptor I, J, L;
    I.zeros = ZeroGenerator::lattice(C, n).window(-n, n);
    J.zeros = ZeroGenerator::lattice_half_shift(C, n).window(-n, n);
    L.zeros = ZeroGenerator::lattice_punctured(C, n).window(-n, n);
    // Keep the probe window well inside the truncated lattice: edge effects
    // creep into the spread beyond about a third of the zero count.
    const double xmax = 100.0;
    if (drift_test(I, J, xmax).outcome != DriftOutcome::BothTrivialEvidence) {
        detail = "(I,J) drift not both-trivial";
        return false;
    }
    if (drift_test(J, L, xmax).outcome != DriftOutcome::BothTrivialEvidence) {
        detail = "(J,L) drift not both-trivial";
        return false;
    }
    RationalInner RI, RL;
    RI.zeros = I.zeros;
    RL.zeros = L.zeros;
    cancel_common_zeros(RI, RL);
    if (RI.degree() != 1 || RL.degree() != 0) {
        detail = "cancellation did not reduce to a single factor";
        return false;
    }
    ToeplitzKernel K = toeplitz_kernel_rational(RI, RL);
    if (K.dim != 1 || K.max_certification_residual > 1e-12) {
        detail = "kernel not certified one-dimensional";
        return false;
    }
    // The surviving element is a multiple of 1/(z + iC).
    const Complex v1 = K.basis[0].eval(Complex{0.0, 1.0});
    const Complex v2 = K.basis[0].eval(Complex{3.0, 2.0});
    const Complex w1 = 1.0 / Complex{0.0, 1.0 + C};
    const Complex w2 = 1.0 / Complex{3.0, 2.0 + C};
    if (std::abs(v1 / w1 - v2 / w2) > 1e-12) {
        detail = "kernel element is not proportional to the expected factor";
        return false;
    }
    return true;
}

// 8. Harmonic conjugation: quadrature path matches the closed form on
// [-10, 10] for 10 random rational pairs.
bool criterion_8(std::string& detail) {
    auto rng = make_rng(8);
    std::uniform_int_distribution<int> deg(1, 3);
    std::vector<double> xs;
    for (int t = 0; t <= 20; ++t) xs.push_back(-10.0 + t);
    for (int trial = 0; trial < 10; ++trial) {
        MifDescriptor I = random_inner(rng, deg(rng)).to_mif();
        MifDescriptor J = random_inner(rng, deg(rng)).to_mif();
        GridFunction closed = harmonic_conjugate(I, J, xs, ConjugateMethod::ClosedForm);
        GridFunction quad = harmonic_conjugate(I, J, xs, ConjugateMethod::Quadrature);
        for (size_t i = 0; i < xs.size(); ++i) {
            if (std::fabs(closed.ys[i] - quad.ys[i]) > 1e-3) {
                detail = "paths differ by " +
                         std::to_string(std::fabs(closed.ys[i] - quad.ys[i])) +
                         " at x = " + std::to_string(xs[i]);
                return false;
            }
        }
    }
    return true;
}

// 9. Interior densities of the integers, the even integers, and the squares,
// plus the rescaling law.
bool criterion_9(std::string& detail) {
    std::vector<double> zs, evens, squares, halves;
    for (int k = -4096; k <= 4096; ++k) {
        zs.push_back(k);
        halves.push_back(0.5 * k);
        if (k % 2 == 0) evens.push_back(k);
    }
    for (int m = 1; m * m <= 4096; ++m) squares.push_back(double(m) * m);
    const double dz = bm_density(zs).dstar_counting;
    const double de = bm_density(evens).dstar_counting;
    const double ds = bm_density(squares).dstar_counting;
    const double dh = bm_density(halves).dstar_counting;
    if (std::fabs(dz - 1.0) > 0.02) { detail = "integer density " + std::to_string(dz); return false; }
    if (std::fabs(de - 0.5) > 0.02) { detail = "even density " + std::to_string(de); return false; }
    if (ds > 0.02) { detail = "squares density " + std::to_string(ds); return false; }
    if (std::fabs(dh / (2.0 * dz) - 1.0) > 0.02) {
        detail = "rescaling law off: " + std::to_string(dh) + " vs 2x" + std::to_string(dz);
        return false;
    }
    return true;
}

// 10. Weighted interval families classify short/long/short, and the
// decreasing majorant is idempotent on grids.
bool criterion_10(std::string& detail) {
    IntervalFamily unit;
    unit.intervals.push_back({0.0, 1.0});
    if (family_weight_sum(unit).cls != FamilyClass::Short) {
        detail = "single unit interval not short";
        return false;
    }
    IntervalFamily dyadic;
    for (int n = 1; n <= 20; ++n) {
        const double lo = std::pow(2.0, n);
        dyadic.intervals.push_back({lo, 2.0 * lo});
    }
    if (family_weight_sum(dyadic).cls != FamilyClass::Long) {
        detail = "dyadic family not long";
        return false;
    }
    IntervalFamily sq;
    for (int n = 1; n <= 60; ++n)
        sq.intervals.push_back({double(n) * n, double(n) * n + 1.0});
    if (family_weight_sum(sq).cls != FamilyClass::Short) {
        detail = "unit-at-squares family not short";
        return false;
    }
    GridFunction g;
    for (int t = 0; t <= 800; ++t) {
        const double x = -20.0 + 0.05 * t;
        g.xs.push_back(x);
        g.ys.push_back(std::cos(3.0 * x) - 0.1 * x);
    }
    GridFunction star = gamma_decompose(g).gamma_star;
    GridFunction star2 = gamma_decompose(star).gamma_star;
    for (size_t i = 0; i < star.ys.size(); ++i) {
        if (star.ys[i] != star2.ys[i]) {
            detail = "majorant not idempotent at x = " + std::to_string(star.xs[i]);
            return false;
        }
    }
    return true;
}

// 11. Exponential dominance flips exactly at equal mass, and the type
// estimate of truncated unit-mass integer measures climbs monotonically to
// 2*pi.
bool criterion_11(std::string& detail) {
    for (double a : {0.5, 2.0, 7.0}) {
        MifDescriptor d;
        d.exp_mass = a;
        if (exp_dominance_test(d, a - 1e-6).verdict != DominanceVerdict::InD ||
            exp_dominance_test(d, a + 1e-6).verdict != DominanceVerdict::NotInD) {
            detail = "dominance flip not at a = " + std::to_string(a);
            return false;
        }
    }
    // The estimate approaches 2*pi from above as the window grows.
    double prev = 1e300, last = 0.0;
    for (int n : {50, 100, 200, 350, 500}) {
        AtomicMeasure mu;
        for (int k = -n; k <= n; ++k) mu.atoms.push_back({double(k), 1.0});
        last = type_estimate(mu).value;
        if (last > prev + 1e-9) {
            detail = "type estimate not monotone at window " + std::to_string(n);
            return false;
        }
        prev = last;
    }
    if (std::fabs(last / (2.0 * kPi) - 1.0) > 0.05) {
        detail = "type estimate " + std::to_string(last) + " not within 5% of 2*pi";
        return false;
    }
    return true;
}

// 12. Asymptotic slopes of |f(iy)| for three closed forms.
bool criterion_12(std::string& detail) {
    const double ymax = 1e6;
    const double s1 = decay_rate_iy(
        [](double y) { return 1.0 / Complex{0.0, y + 1.0}; }, ymax);
    const double s2 = decay_rate_iy(
        [](double y) { Complex d{0.0, y + 1.0}; return 1.0 / (d * d); }, ymax);
    const double s3 = decay_rate_iy([](double y) { return Complex{0.0, y + 1.0}; }, ymax);
    if (std::fabs(s1 + 1.0) > 0.05 || std::fabs(s2 + 2.0) > 0.05 ||
        std::fabs(s3 - 1.0) > 0.05) {
        detail = "slopes " + std::to_string(s1) + ", " + std::to_string(s2) + ", " +
                 std::to_string(s3);
        return false;
    }
    return true;
}

} // namespace

int main() {
    struct Criterion {
        const char* name;
        bool (*fn)(std::string&);
    };
    const Criterion criteria[] = {
        {"order table degrees 0..5: exact dimensions, inclusion, equivalence", criterion_1},
        {"Coburn alternative over 200 random rational pairs", criterion_2},
        {"level-set masses of pure exponentials (1 and 1/2)", criterion_3},
        {"one-sample recovery of a model-space element", criterion_4},
        {"sampling Parseval: rational basis and 50 sinc combinations", criterion_5},
        {"reproducing kernel closed form and reproducing identity", criterion_6},
        {"non-transitivity triple at C = 10 with certified kernel", criterion_7},
        {"harmonic conjugate: quadrature matches closed form", criterion_8},
        {"interior densities of lattices and squares, rescaling law", criterion_9},
        {"interval family classification and majorant idempotence", criterion_10},
        {"dominance flip at equal mass; type estimate converges to 2*pi", criterion_11},
        {"asymptotic decay slopes -1, -2, +1", criterion_12},
    };
    int failures = 0;
    for (size_t i = 0; i < sizeof(criteria) / sizeof(criteria[0]); ++i) {
        std::string detail;
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = criteria[i].fn(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s %2zu %s [%.1fs]%s%s\n", ok ? "PASS" : "FAIL", i + 1,
                    criteria[i].name, secs, detail.empty() ? "" : " -- ",
                    detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
