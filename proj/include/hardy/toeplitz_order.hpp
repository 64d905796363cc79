#ifndef HARDY_TOEPLITZ_ORDER_HPP
#define HARDY_TOEPLITZ_ORDER_HPP

#include <functional>
#include <string>
#include <vector>

#include "hardy/grid.hpp"
#include "hardy/inner.hpp"

namespace hardy {

// Half difference of the argument branches, phi = (arg I - arg J)/2, sampled.
GridFunction phi_diff(const MifDescriptor& I, const MifDescriptor& J,
                      const std::vector<double>& xs);

enum class ConjugateMethod { Auto, ClosedForm, Quadrature };

// Harmonic conjugate of phi(I,J), normalized to vanish at z = i.
// Closed form (log |E_I/E_J| on the axis) requires both descriptors rational
// with equal exponential mass; the quadrature path computes the Hilbert
// transform of an interpolated phi and requires phi to be Poisson summable
// (throws TailDivergent otherwise, e.g. for linearly growing phi).
GridFunction harmonic_conjugate(const MifDescriptor& I, const MifDescriptor& J,
                                const std::vector<double>& xs,
                                ConjugateMethod method = ConjugateMethod::Auto);

// Quadrature-only entry point for an externally supplied phi grid.
GridFunction harmonic_conjugate(const GridFunction& phi);

// Tail behaviour of psi = arg J - arg I over the last decade of a symmetric
// logarithmic grid.  The spread in either direction staying below pi - margin
// is evidence that both Toeplitz kernels (symbol conj(I)J and conj(J)I) are
// trivial; a spread exceeding pi + margin is evidence for a nontrivial kernel
// on the corresponding side.
enum class DriftOutcome { BothTrivialEvidence, KernelNontrivialEvidence, Inconclusive };
struct DriftReport {
    DriftOutcome outcome = DriftOutcome::Inconclusive;
    // spread_upper: sup_left(psi) - inf_right(psi);  > pi suggests ker T_{conj(I)J} != 0.
    // spread_lower: sup_right(psi) - inf_left(psi);  > pi suggests ker T_{conj(J)I} != 0.
    double spread_upper = 0.0;
    double spread_lower = 0.0;
    bool i_side = false; // nontrivial kernel indicated for symbol conj(I)J (I dominates)
    bool j_side = false;
};
DriftReport drift_test(const MifDescriptor& I, const MifDescriptor& J,
                       double xmax, double margin = 0.1, int points_per_decade = 64);

// r(x) = (|J'| / |I'|) * exp(2 * conj(phi)) sampled on xs; pass when
// max r / min r <= bound (default 1e3).
struct Lemma3Report {
    GridFunction r;
    double ratio = 0.0;
    bool pass = false;
};
Lemma3Report lemma3_check(const MifDescriptor& I, const MifDescriptor& J,
                          const std::vector<double>& xs, double bound = 1e3,
                          ConjugateMethod method = ConjugateMethod::Auto);

// Sufficient condition for equivalence: |J'|^{1/2} e^{-conj(phi)} and
// |I'|^{1/2} e^{+conj(phi)} both square integrable.
struct SufficiencyReport {
    bool holds = false;
    bool certified = false;  // both tails certified by the quadrature engine
    double integral_j = 0.0; // \int |J'| e^{-2 conj(phi)}
    double integral_i = 0.0; // \int |I'| e^{+2 conj(phi)}
};
SufficiencyReport theorem2_sufficient(const MifDescriptor& I, const MifDescriptor& J,
                                      double tol = 1e-7);

// With |I'| and |J'| comparable on the window, equivalence is governed by the
// boundedness of conj(phi); probe sup |conj(phi)| over doubling windows.
enum class Lemma4Outcome { EquivalentEvidence, NotEquivalentEvidence, Inconclusive,
                           NotApplicableOutcome };
struct Lemma4Report {
    Lemma4Outcome outcome = Lemma4Outcome::Inconclusive;
    double comparability = 0.0;          // max over grid of darg ratio spread
    std::vector<double> sup_by_window;   // sup |conj(phi)| on W, 2W, 4W, 8W
};
Lemma4Report lemma4_equiv_comparable(const MifDescriptor& I, const MifDescriptor& J,
                                     double base_window, double comparability_bound = 100.0,
                                     int grid_points = 65);

// Membership of a real grid function in the boundary log-modulus class of H^2:
// f summable against the Poisson weight and \int_{f>0} e^{2f} dx finite.
struct LogH2Report {
    bool member = false;
    bool model_ok = true;       // tail fits met the quality gate where needed
    double tail_exponent_f = 0.0;
    double tail_exponent_exp = 0.0;
};
LogH2Report logh2_membership(const GridFunction& f);

// Least-squares slope of log |f(iy)| over the top two decades of (0, ymax].
double decay_rate_iy(const std::function<Complex(double)>& f_of_iy, double ymax,
                     int points = 64);

// Aggregated verdict on the ordering of two inner functions.
enum class Relation {
    Equivalent, Dominates, Dominated,
    EquivalentEvidence, DominatesEvidence, DominatedEvidence,
    IncomparableEvidence, Inconclusive
};
struct Evidence {
    std::string test;
    double value = 0.0;
    double threshold = 0.0;
};
struct OrderVerdict {
    Relation relation = Relation::Inconclusive;
    bool exact = false;
    std::vector<Evidence> evidence;
};
OrderVerdict order_verdict(const MifDescriptor& I, const MifDescriptor& J);

std::string relation_name(Relation r);
std::string verdict_to_json(const OrderVerdict& v);

} // namespace hardy

#endif
