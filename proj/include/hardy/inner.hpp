#ifndef HARDY_INNER_HPP
#define HARDY_INNER_HPP

#include <complex>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "hardy/grid.hpp"

namespace hardy {

using Complex = std::complex<double>;

// Data of a meromorphic inner function
//   theta(z) = rotation * exp(i * exp_mass * z) * prod_n b_n(z),
// where b_n is the Blaschke factor for the zero lambda_n, normalized so that
// b_n(i) > 0 (the standard half-plane convergence normalization).
struct MifDescriptor {
    std::vector<Complex> zeros;      // strictly in the upper half-plane
    double exp_mass = 0.0;           // a >= 0 in exp(i a z)
    Complex rotation{1.0, 0.0};      // unimodular scalar

    void validate() const;           // throws on bad data
    bool is_rational() const { return exp_mass == 0.0; }
    bool is_pure_exponential() const { return zeros.empty(); }
    int degree() const { return int(zeros.size()); }
};

// Convergence sum  sum_n Im(lambda_n) / (1 + |lambda_n|^2).
double blaschke_sum(std::span<const Complex> zeros);

// Unimodular normalizer eps for a single Blaschke factor:
//   b(z) = eps * (z - lambda) / (z - conj(lambda)),  b(i) > 0.
// By convention eps = 1 when lambda = i (the factor vanishes at i).
Complex blaschke_normalizer(Complex lambda);

// Single normalized Blaschke factor.
Complex blaschke_factor(Complex lambda, Complex z);

// theta(z) for Im z >= 0.  Throws PoleHit when z is (nearly) a pole.
Complex eval_mif(const MifDescriptor& desc, Complex z);

// Continuous increasing branch of arg theta on the real axis:
//   phi(x) = arg(rotation) + a x + sum_n [ 2 atan((x - u_n)/v_n) + c_n ],
// with per-factor constants c_n = pi + arg(eps_n), so each factor's
// contribution tends to 0 as x -> -inf and exp(i phi(x)) = theta(x).
double arg_mif(const MifDescriptor& desc, double x);

// phi'(x) = a + sum_n 2 v_n / ((x-u_n)^2 + v_n^2)  (= |theta'(x)|).
double darg_mif(const MifDescriptor& desc, double x);

// Lazily indexed zero sequences for families too large to write down.
struct ZeroGenerator {
    std::function<Complex(long)> rule;
    long lo = 0;   // inclusive index range where the rule is defined
    long hi = 0;

    std::vector<Complex> window(long n_lo, long n_hi) const; // clamped to [lo, hi]

    // Named families used throughout the test corpus and the CLI.
    static ZeroGenerator geometric(double ratio, int count);          // ratio^n (1+i), n >= 1
    static ZeroGenerator arithmetic(double beta, double height, long n); // beta k + i h, |k| <= n
    // Sparse geometric family with selected zeros pulled down to height k^{-decay}.
    static ZeroGenerator perturbed_geometric(double ratio, double decay, int count);
    // Lattice families (height C): full lattice, half-shifted lattice, punctured lattice.
    static ZeroGenerator lattice(double C, long n);                   // k + iC, |k| <= n
    static ZeroGenerator lattice_half_shift(double C, long n);        // k+iC (k<0), k+1/2+iC (k>=0)
    static ZeroGenerator lattice_punctured(double C, long n);         // k + iC, k != 0
};

// Materialize a generator into a descriptor whose truncation error at the
// evaluation point z is certified below tol; throws TruncationNotConverged
// when the generator's index range is exhausted first.
MifDescriptor materialize(const ZeroGenerator& gen, Complex z, double tol,
                          double exp_mass = 0.0, Complex rotation = {1.0, 0.0});

// JSON (de)serialization of the descriptor record
//   {"zeros": [[re,im],...], "exp_mass": a, "rotation": [re,im]}.
std::string mif_to_json(const MifDescriptor& desc);
MifDescriptor mif_from_json(const std::string& text);

} // namespace hardy

#endif
