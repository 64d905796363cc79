#include "hardy/toeplitz_order.hpp"
#include "hardy/errors.hpp"
#include "hardy/numerics.hpp"
#include "hardy/poly.hpp"

#include <algorithm>
#include <cmath>
#include <nlohmann/json.hpp>

using nlohmann::json;

namespace hardy {

GridFunction phi_diff(const MifDescriptor& I, const MifDescriptor& J,
                      const std::vector<double>& xs) {
    GridFunction g;
    g.tag = "phi";
    g.xs = xs;
    g.ys.reserve(xs.size());
    for (double x : xs)
        g.ys.push_back(0.5 * (arg_mif(I, x) - arg_mif(J, x)));
    return g;
}

namespace {

// log |E_I(z)/E_J(z)| where E = prod (z - conj(lambda)); the exponential
// factors are unimodular on the axis and cancel at z = i when the masses agree.
double log_e_ratio(const MifDescriptor& I, const MifDescriptor& J, Complex z) {
    double v = 0.0;
    for (const Complex& lam : I.zeros) v += std::log(std::abs(z - std::conj(lam)));
    for (const Complex& lam : J.zeros) v -= std::log(std::abs(z - std::conj(lam)));
    return v;
}

bool closed_form_ok(const MifDescriptor& I, const MifDescriptor& J) {
    return I.exp_mass == J.exp_mass;
}

double conj_phi_closed(const MifDescriptor& I, const MifDescriptor& J, double x,
                       double norm_at_i) {
    return log_e_ratio(I, J, Complex{x, 0.0}) - norm_at_i;
}

} // namespace

GridFunction harmonic_conjugate(const MifDescriptor& I, const MifDescriptor& J,
                                const std::vector<double>& xs, ConjugateMethod method) {
    if (method == ConjugateMethod::Auto)
        method = closed_form_ok(I, J) ? ConjugateMethod::ClosedForm
                                      : ConjugateMethod::Quadrature;
    GridFunction out;
    out.tag = "conj_phi";
    out.xs = xs;
    if (method == ConjugateMethod::ClosedForm) {
        if (!closed_form_ok(I, J))
            throw NotApplicable("closed-form conjugate needs equal exponential masses");
        const double c = log_e_ratio(I, J, Complex{0.0, 1.0});
        for (double x : xs)
            out.ys.push_back(conj_phi_closed(I, J, x, c));
        return out;
    }
    if (I.exp_mass != J.exp_mass)
        throw TailDivergent("phi grows linearly; not Poisson summable");
    auto phi = [&](double t) { return 0.5 * (arg_mif(I, t) - arg_mif(J, t)); };
    for (double x : xs)
        out.ys.push_back(hilbert_transform(phi, x, 1e-8));
    return out;
}

GridFunction harmonic_conjugate(const GridFunction& phi) {
    if (phi.xs.size() < 8)
        throw SchemaError("harmonic_conjugate: grid too small");
    // Poisson summability gate: a tail fit of |phi| with exponent near or
    // above 1 (linear growth) is not integrable against dx/(1+x^2).
    std::vector<double> tx, ty;
    const double xmax = std::max(std::fabs(phi.xs.front()), std::fabs(phi.xs.back()));
    for (size_t i = 0; i < phi.xs.size(); ++i)
        if (std::fabs(phi.xs[i]) > 0.1 * xmax) {
            tx.push_back(phi.xs[i]);
            ty.push_back(phi.ys[i]);
        }
    TailFit fit = fit_power_tail(tx, ty);
    double tail_mag = 0.0;
    for (double y : ty) tail_mag = std::max(tail_mag, std::fabs(y));
    if (fit.ok && fit.exponent >= 0.9 && tail_mag > 1.0)
        throw TailDivergent("phi tail exponent " + std::to_string(fit.exponent));
    auto f = [&](double t) { return interp_linear(phi, t); };
    GridFunction out;
    out.tag = "conj_phi";
    out.xs = phi.xs;
    for (double x : phi.xs)
        out.ys.push_back(hilbert_transform(f, x, 1e-7));
    return out;
}

DriftReport drift_test(const MifDescriptor& I, const MifDescriptor& J,
                       double xmax, double margin, int points_per_decade) {
    DriftReport rep;
    auto psi = [&](double x) { return arg_mif(J, x) - arg_mif(I, x); };
    // Last decade of the logarithmic grid on each side.
    std::vector<double> right = log_grid(xmax / 10.0, xmax, points_per_decade);
    double sup_r = -1e300, inf_r = 1e300, sup_l = -1e300, inf_l = 1e300;
    double osc_r = 0.0, osc_l = 0.0;
    {
        double half_max = -1e300, half_min = 1e300;
        for (size_t i = 0; i < right.size(); ++i) {
            const double v = psi(right[i]);
            sup_r = std::max(sup_r, v);
            inf_r = std::min(inf_r, v);
            if (i >= right.size() / 2) {
                half_max = std::max(half_max, v);
                half_min = std::min(half_min, v);
            }
        }
        osc_r = half_max - half_min;
        half_max = -1e300; half_min = 1e300;
        for (size_t i = 0; i < right.size(); ++i) {
            const double v = psi(-right[i]);
            sup_l = std::max(sup_l, v);
            inf_l = std::min(inf_l, v);
            if (i >= right.size() / 2) {
                half_max = std::max(half_max, v);
                half_min = std::min(half_min, v);
            }
        }
        osc_l = half_max - half_min;
    }
    if (osc_r > 0.5 * M_PI || osc_l > 0.5 * M_PI)
        throw TailNotSettled("psi oscillates over the last half decade");
    rep.spread_upper = sup_l - inf_r;
    rep.spread_lower = sup_r - inf_l;
    const double spread = std::max(rep.spread_upper, rep.spread_lower);
    if (spread < M_PI - margin) {
        rep.outcome = DriftOutcome::BothTrivialEvidence;
    } else if (spread > M_PI + margin) {
        rep.outcome = DriftOutcome::KernelNontrivialEvidence;
        rep.i_side = rep.spread_upper > M_PI + margin;
        rep.j_side = rep.spread_lower > M_PI + margin;
    } else {
        rep.outcome = DriftOutcome::Inconclusive;
    }
    return rep;
}

Lemma3Report lemma3_check(const MifDescriptor& I, const MifDescriptor& J,
                          const std::vector<double>& xs, double bound,
                          ConjugateMethod method) {
    Lemma3Report rep;
    GridFunction cp = harmonic_conjugate(I, J, xs, method);
    rep.r.tag = "lemma3_r";
    rep.r.xs = xs;
    double rmin = 1e300, rmax = 0.0;
    for (size_t i = 0; i < xs.size(); ++i) {
        const double ratio = darg_mif(J, xs[i]) / darg_mif(I, xs[i]);
        const double v = ratio * std::exp(2.0 * cp.ys[i]);
        rep.r.ys.push_back(v);
        rmin = std::min(rmin, v);
        rmax = std::max(rmax, v);
    }
    rep.ratio = rmax / rmin;
    rep.pass = rep.ratio <= bound;
    return rep;
}

SufficiencyReport theorem2_sufficient(const MifDescriptor& I, const MifDescriptor& J,
                                      double tol) {
    SufficiencyReport rep;
    if (!closed_form_ok(I, J))
        throw NotApplicable("theorem2_sufficient needs equal exponential masses");
    const double c = log_e_ratio(I, J, Complex{0.0, 1.0});
    auto cphi = [&](double x) { return conj_phi_closed(I, J, x, c); };
    QuadratureResult qj = integrate_line(
        [&](double x) { return darg_mif(J, x) * std::exp(-2.0 * cphi(x)); }, tol, 32.0, 18);
    QuadratureResult qi = integrate_line(
        [&](double x) { return darg_mif(I, x) * std::exp(2.0 * cphi(x)); }, tol, 32.0, 18);
    rep.integral_j = qj.value;
    rep.integral_i = qi.value;
    rep.certified = qj.certified && qi.certified;
    rep.holds = rep.certified && qj.tail_exponent < 0.0 && qi.tail_exponent < 0.0;
    return rep;
}

Lemma4Report lemma4_equiv_comparable(const MifDescriptor& I, const MifDescriptor& J,
                                     double base_window, double comparability_bound,
                                     int grid_points) {
    Lemma4Report rep;
    std::vector<double> sups;
    double comp_min = 1e300, comp_max = 0.0;
    double W = base_window;
    for (int w = 0; w < 4; ++w) {
        std::vector<double> xs = linear_grid(-W, W, grid_points);
        GridFunction cp = harmonic_conjugate(I, J, xs, ConjugateMethod::Auto);
        double sup = 0.0;
        for (size_t i = 0; i < xs.size(); ++i) {
            const double ratio = darg_mif(I, xs[i]) / darg_mif(J, xs[i]);
            comp_min = std::min(comp_min, ratio);
            comp_max = std::max(comp_max, ratio);
            sup = std::max(sup, std::fabs(cp.ys[i]));
        }
        sups.push_back(sup);
        W *= 2.0;
    }
    rep.sup_by_window = sups;
    rep.comparability = comp_max / comp_min;
    if (rep.comparability > comparability_bound) {
        rep.outcome = Lemma4Outcome::NotApplicableOutcome;
        return rep;
    }
    const double growth = sups.back() - sups.front();
    const bool monotone_growth = sups[1] > sups[0] && sups[2] > sups[1] && sups[3] > sups[2];
    if (monotone_growth && growth > 1.0)
        rep.outcome = Lemma4Outcome::NotEquivalentEvidence;
    else if (sups.back() < 20.0 && growth < 0.25 * (1.0 + sups.front()))
        rep.outcome = Lemma4Outcome::EquivalentEvidence;
    else
        rep.outcome = Lemma4Outcome::Inconclusive;
    return rep;
}

LogH2Report logh2_membership(const GridFunction& f) {
    LogH2Report rep;
    if (f.xs.size() < 8)
        throw SchemaError("logh2_membership: grid too small");
    // Interior contributions by the trapezoid rule.
    double int_poisson = 0.0, int_exp = 0.0;
    for (size_t i = 0; i + 1 < f.xs.size(); ++i) {
        const double h = f.xs[i + 1] - f.xs[i];
        auto pw = [](double x, double y) { return std::fabs(y) / (1.0 + x * x); };
        auto ew = [](double y) { return y > 0.0 ? std::exp(2.0 * y) - 1.0 : 0.0; };
        int_poisson += 0.5 * h * (pw(f.xs[i], f.ys[i]) + pw(f.xs[i + 1], f.ys[i + 1]));
        int_exp += 0.5 * h * (ew(f.ys[i]) + ew(f.ys[i + 1]));
    }
    // Tail models from the last decade on each side.
    const double xmax = std::max(std::fabs(f.xs.front()), std::fabs(f.xs.back()));
    std::vector<double> tx, ty;
    double tail_pos_max = -1e300;
    for (size_t i = 0; i < f.xs.size(); ++i)
        if (std::fabs(f.xs[i]) > 0.1 * xmax) {
            tx.push_back(f.xs[i]);
            ty.push_back(f.ys[i]);
            tail_pos_max = std::max(tail_pos_max, f.ys[i]);
        }
    TailFit fit = fit_power_tail(tx, ty);
    rep.tail_exponent_f = fit.exponent;
    double tail_mag = 0.0;
    for (double y : ty) tail_mag = std::max(tail_mag, std::fabs(y));
    bool poisson_ok;
    if (tail_mag < 1e-8) {
        poisson_ok = true; // tail already gone
        rep.tail_exponent_f = -99.0;
    } else {
        if (!fit.ok && tail_mag > 1e-3) rep.model_ok = false;
        poisson_ok = fit.exponent < 0.9; // |f| ~ x^e integrable against dx/x^2 iff e < 1
    }
    // Positive part: only a tail where f stays positive can break integrability.
    bool exp_ok;
    if (tail_pos_max <= 0.0) {
        exp_ok = true;
        rep.tail_exponent_exp = -99.0;
    } else {
        // e^{2f} - 1 with f ~ C x^e > 0: integrable only if f decays (e < 0)
        // or is heading to -inf; probe via the fitted exponent and sign trend.
        rep.tail_exponent_exp = fit.exponent;
        exp_ok = fit.ok ? (fit.exponent < -0.51) : false;
        if (!fit.ok) rep.model_ok = false;
    }
    rep.member = poisson_ok && exp_ok && std::isfinite(int_poisson) && std::isfinite(int_exp);
    return rep;
}

double decay_rate_iy(const std::function<Complex(double)>& f_of_iy, double ymax,
                     int points) {
    std::vector<double> ys = log_grid(ymax / 100.0, ymax, points);
    std::vector<double> mags;
    mags.reserve(ys.size());
    for (double y : ys) {
        const double m = std::abs(f_of_iy(y));
        if (m < 1e-300)
            throw NumericalUnderflow("decay_rate_iy");
        mags.push_back(m);
    }
    return loglog_slope(ys, mags);
}

namespace {

MifDescriptor reduced_copy(const MifDescriptor& d, const std::vector<bool>& keep) {
    MifDescriptor out;
    out.exp_mass = d.exp_mass;
    out.rotation = d.rotation;
    for (size_t i = 0; i < d.zeros.size(); ++i)
        if (keep[i]) out.zeros.push_back(d.zeros[i]);
    return out;
}

void cancel_shared(MifDescriptor& I, MifDescriptor& J) {
    std::vector<bool> keep_i(I.zeros.size(), true), keep_j(J.zeros.size(), true);
    for (size_t i = 0; i < I.zeros.size(); ++i) {
        for (size_t j = 0; j < J.zeros.size(); ++j) {
            if (keep_j[j] && keep_i[i] &&
                std::abs(I.zeros[i] - J.zeros[j]) < 1e-12 * (1.0 + std::abs(I.zeros[i]))) {
                keep_i[i] = false;
                keep_j[j] = false;
                break;
            }
        }
    }
    I = reduced_copy(I, keep_i);
    J = reduced_copy(J, keep_j);
}

} // namespace

OrderVerdict order_verdict(const MifDescriptor& I0, const MifDescriptor& J0) {
    OrderVerdict v;
    MifDescriptor I = I0, J = J0;
    I.validate();
    J.validate();
    cancel_shared(I, J);

    const bool rational = I.is_rational() && J.is_rational();
    const bool pure_exp = I.zeros.empty() && J.zeros.empty();

    if (pure_exp) {
        v.exact = true;
        v.evidence.push_back({"exp_mass_difference", I.exp_mass - J.exp_mass, 0.0});
        if (I.exp_mass > J.exp_mass) v.relation = Relation::Dominates;
        else if (I.exp_mass < J.exp_mass) v.relation = Relation::Dominated;
        else v.relation = Relation::Equivalent;
        return v;
    }

    if (rational) {
        const int nI = I.degree(), nJ = J.degree();
        v.exact = true;
        v.evidence.push_back({"kernel_dim_IJ", double(std::max(0, nI - nJ)), 0.0});
        v.evidence.push_back({"kernel_dim_JI", double(std::max(0, nJ - nI)), 0.0});
        if (nI > nJ) v.relation = Relation::Dominates;
        else if (nI < nJ) v.relation = Relation::Dominated;
        else v.relation = Relation::Equivalent;
        return v;
    }

    if (I.exp_mass == J.exp_mass && I.zeros.size() <= 64 && J.zeros.size() <= 64) {
        // Cofinitely equal zero sets: after cancelling the shared factor the
        // reduced symbol is rational and its kernel certifies the direction.
        const int nI = int(I.zeros.size()), nJ = int(J.zeros.size());
        v.evidence.push_back({"reduced_kernel_dim_IJ", double(std::max(0, nI - nJ)), 0.0});
        v.evidence.push_back({"reduced_kernel_dim_JI", double(std::max(0, nJ - nI)), 0.0});
        if (nI > nJ) v.relation = Relation::DominatesEvidence;
        else if (nI < nJ) v.relation = Relation::DominatedEvidence;
        else v.relation = Relation::EquivalentEvidence;
        return v;
    }

    // Heuristic battery: argument drift over a window scaled to the data.
    double zmax = 10.0;
    for (const Complex& z : I.zeros) zmax = std::max(zmax, std::abs(z));
    for (const Complex& z : J.zeros) zmax = std::max(zmax, std::abs(z));
    const double xmax = std::min(1e5, 4.0 * zmax);
    try {
        DriftReport d = drift_test(I0, J0, xmax);
        v.evidence.push_back({"drift_spread_upper", d.spread_upper, M_PI});
        v.evidence.push_back({"drift_spread_lower", d.spread_lower, M_PI});
        if (d.outcome == DriftOutcome::KernelNontrivialEvidence) {
            if (d.i_side && !d.j_side) v.relation = Relation::DominatesEvidence;
            else if (d.j_side && !d.i_side) v.relation = Relation::DominatedEvidence;
            else v.relation = Relation::IncomparableEvidence;
            return v;
        }
        if (d.outcome == DriftOutcome::BothTrivialEvidence) {
            v.relation = Relation::EquivalentEvidence;
            return v;
        }
    } catch (const TailNotSettled&) {
        v.evidence.push_back({"drift_unsettled", 1.0, 0.0});
    }
    v.relation = Relation::Inconclusive;
    return v;
}

std::string relation_name(Relation r) {
    switch (r) {
        case Relation::Equivalent: return "equivalent";
        case Relation::Dominates: return "dominates";
        case Relation::Dominated: return "dominated";
        case Relation::EquivalentEvidence: return "equivalent-evidence";
        case Relation::DominatesEvidence: return "dominates-evidence";
        case Relation::DominatedEvidence: return "dominated-evidence";
        case Relation::IncomparableEvidence: return "incomparable-evidence";
        case Relation::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

std::string verdict_to_json(const OrderVerdict& v) {
    json j;
    j["relation"] = relation_name(v.relation);
    j["exact"] = v.exact;
    j["evidence"] = json::array();
    for (const auto& e : v.evidence)
        j["evidence"].push_back({{"test", e.test}, {"value", e.value},
                                 {"threshold", e.threshold}});
    return j.dump();
}

} // namespace hardy
