#ifndef HARDY_BM_HPP
#define HARDY_BM_HPP

#include <string>
#include <vector>

#include "hardy/clark.hpp"
#include "hardy/grid.hpp"
#include "hardy/inner.hpp"
#include "hardy/toeplitz_order.hpp"

namespace hardy {

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    double length() const { return hi - lo; }
    double dist0() const; // distance from the interval to the origin
};

// Weighted family of intervals with the kappa-weight
//   sum_n (dist(I_n, 0) + 1)^{kappa - 2} |I_n|^2.
struct IntervalFamily {
    std::vector<Interval> intervals;
    double kappa = 0.0;
};

enum class FamilyClass { Short, Long, WindowLimited };

struct WeightSum {
    double sum = 0.0;
    FamilyClass cls = FamilyClass::WindowLimited;
};
// Weight sum plus a divergence classification read off the dyadic-shell
// partial sums (decaying shells: short; shells bounded below: long).
WeightSum family_weight_sum(const IntervalFamily& family);

// Interior density of a real sequence: the largest d such that some long
// family of disjoint intervals satisfies #(points in I) >= d |I|.
// Implementation scans complete dyadic shells [2^m, 2^{m+1}) on both sides
// for the best count/length ratio over intervals of at least half the shell
// width, and takes the minimum over the last `shells` complete shells.
struct BmDensity {
    double dstar_counting = 0.0;  // interval-counting normalization
    double dstar_type = 0.0;      // 2*pi * dstar_counting (exponential type scale)
    IntervalFamily witness;       // one interval per contributing shell
};
BmDensity bm_density(std::vector<double> points, int shells = 3);

// Decreasing majorant gamma*(x) = max_{t >= x} gamma(t) on the grid, and the
// components of {gamma != gamma*} as an interval family.
struct GammaProfile {
    GridFunction gamma;
    GridFunction gamma_star;
    IntervalFamily components;
    bool right_edge_rising = false; // gamma still rising at the window edge
};
GammaProfile gamma_decompose(const GridFunction& gamma);

// kappa-almost-decreasing test: the components of {gamma != gamma*} carry a
// finite kappa-weight sum.  A profile rising at the right window edge cannot
// be almost decreasing (the final component has unbounded weight).
struct KappaVerdict {
    bool almost_decreasing = false;
    double sum = 0.0;
    FamilyClass cls = FamilyClass::WindowLimited;
    bool boundary_uncertain = false;
};
KappaVerdict kappa_almost_decreasing(const GridFunction& gamma, double kappa);

// Does exp(i b x) lie in the dominance set of the inner function described by
// `desc`?  For a pure exponential the answer is exact (compare masses); for a
// Blaschke factor the zeros are projected to the axis (lambda' = 1/Re(1/lambda))
// and the decision threshold is r = 2*pi*D*(projection) + exp_mass.
enum class DominanceVerdict { InD, NotInD, BoundaryInconclusive, Gap, NotApplicableV };
struct DominanceReport {
    DominanceVerdict verdict = DominanceVerdict::BoundaryInconclusive;
    double r = 0.0;     // decision threshold on b
    std::vector<Evidence> evidence;
};
DominanceReport exp_dominance_test(const MifDescriptor& desc, double b, double tol = 1e-9);

// Two-sided almost-decreasing probe of sigma - (1 -+ eps) gamma, where
// gamma = arg U and sigma = arg J on [-window, window]; requires
// darg U ~ |x|^kappa on the window (scaling gate), else NotApplicable.
DominanceReport theorem10_diagnostic(const MifDescriptor& U, const MifDescriptor& J,
                                     double eps, double kappa, double window,
                                     int grid_points = 513);

// Exponential type of the atomic measure: bisection over a for the in-
// dominance predicate of exp(iax) against the support of mu; converges to
// 2*pi*D*(supp mu).  An estimate, never a certificate.
struct TypeEstimate {
    double value = 0.0;
    std::vector<Evidence> evidence;
};
TypeEstimate type_estimate(const AtomicMeasure& mu, double tol = 1e-6);

} // namespace hardy

#endif
