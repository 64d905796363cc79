#include "hardy/bm.hpp"
#include "hardy/errors.hpp"
#include "hardy/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace hardy {

double Interval::dist0() const {
    if (lo > 0.0) return lo;
    if (hi < 0.0) return -hi;
    return 0.0;
}

WeightSum family_weight_sum(const IntervalFamily& family) {
    WeightSum out;
    if (family.intervals.empty()) {
        out.cls = FamilyClass::Short;
        return out;
    }
    // Group terms into dyadic shells by distance from the origin.
    std::map<int, double> shell_sums;
    for (const Interval& iv : family.intervals) {
        if (!(iv.hi >= iv.lo)) throw SchemaError("interval with hi < lo");
        const double d = iv.dist0();
        const double term = std::pow(d + 1.0, family.kappa - 2.0) * iv.length() * iv.length();
        out.sum += term;
        shell_sums[int(std::floor(std::log2(d + 1.0)))] += term;
    }
    if (shell_sums.size() < 3) {
        // Too few shells to read a trend; a finite bunch of intervals is short.
        out.cls = family.intervals.size() <= 8 ? FamilyClass::Short
                                               : FamilyClass::WindowLimited;
        return out;
    }
    std::vector<double> sums;
    for (const auto& [m, s] : shell_sums) sums.push_back(s);
    const size_t n = sums.size();
    const double s0 = sums[n - 3], s1 = sums[n - 2], s2 = sums[n - 1];
    const double top = std::max({s0, s1, s2});
    if (top <= 0.0) { out.cls = FamilyClass::Short; return out; }
    if (std::min({s0, s1, s2}) >= 0.25 * top && top > 1e-6 * out.sum)
        out.cls = FamilyClass::Long;          // shell sums bounded below: divergent
    else if (s2 <= 0.6 * s1 && s1 <= 0.6 * s0)
        out.cls = FamilyClass::Short;         // geometric decay
    else if (s2 < 0.05 * out.sum && s1 < 0.05 * out.sum)
        out.cls = FamilyClass::Short;         // tail already negligible
    else
        out.cls = FamilyClass::WindowLimited;
    return out;
}

namespace {

// Best count/length ratio over intervals [p_i, p_j] inside [lo, hi) of length
// at least min_len; returns the witness via out parameters.
double best_shell_ratio(const std::vector<double>& pts, double lo, double hi,
                        double min_len, Interval& witness) {
    // pts sorted; indices within [lo, hi)
    auto first = std::lower_bound(pts.begin(), pts.end(), lo);
    auto last = std::lower_bound(pts.begin(), pts.end(), hi);
    const long a = first - pts.begin(), b = last - pts.begin();
    double best = 0.0;
    for (long i = a; i < b; ++i) {
        for (long j = i + 1; j < b; ++j) {
            const double len = pts[j] - pts[i];
            if (len < min_len) continue;
            const double ratio = double(j - i + 1) / len;
            if (ratio > best) {
                best = ratio;
                witness = {pts[i], pts[j]};
            }
        }
    }
    return best;
}

} // namespace

BmDensity bm_density(std::vector<double> points, int shells) {
    BmDensity out;
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (points.size() < 2) return out; // a single point has density 0
    const double reach = std::max(std::fabs(points.front()), std::fabs(points.back()));
    const int m_max = int(std::floor(std::log2(std::max(2.0, reach)))) - 1;
    // Complete shells [2^m, 2^{m+1}) fully inside the data window.
    std::vector<std::pair<double, Interval>> per_shell;
    for (int m = m_max; m >= 0 && int(per_shell.size()) < shells; --m) {
        const double lo = std::pow(2.0, m), hi = 2.0 * lo;
        if (hi > reach + 1e-9) continue;
        Interval wr{0, 0}, wl{0, 0};
        const double r_right = best_shell_ratio(points, lo, hi, 0.5 * lo, wr);
        const double r_left = best_shell_ratio(points, -hi, -lo, 0.5 * lo, wl);
        const double r = std::max(r_right, r_left);
        per_shell.push_back({r, r_right >= r_left ? wr : wl});
    }
    if (per_shell.empty()) return out;
    double d = 1e300;
    for (const auto& [r, w] : per_shell) {
        d = std::min(d, r);
        out.witness.intervals.push_back(w);
    }
    out.dstar_counting = d;
    out.dstar_type = 2.0 * M_PI * d;
    return out;
}

GammaProfile gamma_decompose(const GridFunction& gamma) {
    GammaProfile prof;
    const size_t n = gamma.xs.size();
    if (n < 4 || gamma.ys.size() != n)
        throw SchemaError("gamma_decompose: bad grid");
    prof.gamma = gamma;
    prof.gamma_star = gamma;
    // Running maximum from the right is the least decreasing majorant on grid.
    double running = -1e300;
    for (size_t i = n; i-- > 0;) {
        running = std::max(running, gamma.ys[i]);
        prof.gamma_star.ys[i] = running;
    }
    prof.gamma_star.tag = "gamma_star";
    // Components of {gamma < gamma*}.
    const double tol = 1e-12;
    bool open = false;
    double lo = 0.0;
    for (size_t i = 0; i < n; ++i) {
        const bool off = prof.gamma_star.ys[i] > gamma.ys[i] +
                         tol * (1.0 + std::fabs(gamma.ys[i]));
        if (off && !open) { open = true; lo = gamma.xs[i]; }
        if (!off && open) {
            open = false;
            prof.components.intervals.push_back({lo, gamma.xs[i]});
        }
    }
    if (open)
        prof.components.intervals.push_back({lo, gamma.xs.back()});
    // Rising right edge: the global maximum of the tail sits at the boundary.
    size_t tail_start = n - std::max<size_t>(2, n / 20);
    double tail_max = -1e300;
    size_t arg = tail_start;
    for (size_t i = tail_start; i < n; ++i)
        if (gamma.ys[i] > tail_max) { tail_max = gamma.ys[i]; arg = i; }
    prof.right_edge_rising = (arg == n - 1) &&
                             gamma.ys[n - 1] > gamma.ys[tail_start] +
                             1e-9 * (1.0 + std::fabs(gamma.ys[tail_start]));
    return prof;
}

KappaVerdict kappa_almost_decreasing(const GridFunction& gamma, double kappa) {
    KappaVerdict out;
    GammaProfile prof = gamma_decompose(gamma);
    prof.components.kappa = kappa;
    WeightSum ws = family_weight_sum(prof.components);
    out.sum = ws.sum;
    out.cls = ws.cls;
    if (prof.right_edge_rising) {
        // The unresolved final component grows with the window; its weight is
        // unbounded, so the profile cannot be almost decreasing.
        out.almost_decreasing = false;
        out.boundary_uncertain = true;
        out.cls = FamilyClass::Long;
        return out;
    }
    out.almost_decreasing = ws.cls == FamilyClass::Short;
    if (ws.cls == FamilyClass::WindowLimited)
        out.boundary_uncertain = true;
    return out;
}

DominanceReport exp_dominance_test(const MifDescriptor& desc, double b, double tol) {
    desc.validate();
    DominanceReport rep;
    if (desc.is_pure_exponential()) {
        rep.r = desc.exp_mass;
        rep.evidence.push_back({"exact_exponential_divisor", rep.r, b});
        if (b < rep.r) rep.verdict = DominanceVerdict::InD;
        else if (b > rep.r) rep.verdict = DominanceVerdict::NotInD;
        else rep.verdict = DominanceVerdict::BoundaryInconclusive;
        return rep;
    }
    // Project zeros to the axis and estimate the interior density.
    std::vector<double> proj;
    for (const Complex& z : desc.zeros) {
        const double re_inv = std::real(1.0 / z);
        if (std::fabs(re_inv) > 1e-300) proj.push_back(1.0 / re_inv);
    }
    BmDensity dens = bm_density(std::move(proj));
    rep.r = dens.dstar_type + desc.exp_mass;
    rep.evidence.push_back({"dstar_type_plus_mass", rep.r, b});
    if (b < rep.r - tol) rep.verdict = DominanceVerdict::InD;
    else if (b > rep.r + tol) rep.verdict = DominanceVerdict::NotInD;
    else rep.verdict = DominanceVerdict::BoundaryInconclusive;
    return rep;
}

DominanceReport theorem10_diagnostic(const MifDescriptor& U, const MifDescriptor& J,
                                     double eps, double kappa, double window,
                                     int grid_points) {
    DominanceReport rep;
    // Scaling gate: darg U must behave like |x|^kappa across the window.
    double smin = 1e300, smax = 0.0;
    for (double x : log_grid(1.0, window, 64)) {
        for (double s : {x, -x}) {
            const double v = darg_mif(U, s) / std::pow(std::fabs(s), kappa);
            smin = std::min(smin, v);
            smax = std::max(smax, v);
        }
    }
    rep.evidence.push_back({"scaling_spread", smax / smin, 100.0});
    if (!(smax / smin <= 100.0)) {
        rep.verdict = DominanceVerdict::NotApplicableV;
        return rep;
    }
    std::vector<double> xs = linear_grid(-window, window, grid_points);
    GridFunction lowpro, hipro;
    lowpro.xs = hipro.xs = xs;
    for (double x : xs) {
        const double g = arg_mif(U, x), s = arg_mif(J, x);
        lowpro.ys.push_back(s - (1.0 - eps) * g);
        hipro.ys.push_back(s - (1.0 + eps) * g);
    }
    KappaVerdict in_side = kappa_almost_decreasing(lowpro, kappa);
    KappaVerdict out_side = kappa_almost_decreasing(hipro, kappa);
    rep.evidence.push_back({"low_profile_weight", in_side.sum, 0.0});
    rep.evidence.push_back({"high_profile_weight", out_side.sum, 0.0});
    if (in_side.almost_decreasing) rep.verdict = DominanceVerdict::InD;
    else if (!out_side.almost_decreasing) rep.verdict = DominanceVerdict::NotInD;
    else rep.verdict = DominanceVerdict::Gap;
    return rep;
}

TypeEstimate type_estimate(const AtomicMeasure& mu, double tol) {
    TypeEstimate out;
    if (mu.atoms.empty())
        throw EmptyMeasure("type_estimate");
    std::vector<double> supp;
    supp.reserve(mu.atoms.size());
    for (const auto& a : mu.atoms) supp.push_back(a.x);
    BmDensity dens = bm_density(std::move(supp));
    // Bisection over a for "exp(iax) divides the order of the support":
    // the predicate is a < 2*pi*D*, so this converges to dstar_type.
    double lo = 0.0, hi = std::max(1.0, 4.0 * dens.dstar_type);
    if (dens.dstar_type == 0.0) hi = 1.0;
    while (hi - lo > std::max(tol, 1e-12) * std::max(1.0, hi)) {
        const double a = 0.5 * (lo + hi);
        if (a < dens.dstar_type) lo = a; else hi = a;
    }
    out.value = 0.5 * (lo + hi);
    out.evidence.push_back({"dstar_counting_of_support", dens.dstar_counting, 0.0});
    out.evidence.push_back({"dstar_type_of_support", dens.dstar_type, 0.0});
    out.evidence.push_back({"masses_ignored", 1.0, 0.0});
    return out;
}

} // namespace hardy
