#include "hardy/debranges.hpp"
#include "hardy/errors.hpp"
#include "hardy/numerics.hpp"

#include <cmath>
#include <nlohmann/json.hpp>

using nlohmann::json;

namespace hardy {

void HBFunction::validate() const {
    for (const Complex& w : roots)
        if (!(w.imag() < 0.0))
            throw ZeroOnRealAxis("structure function root not in the lower half-plane");
    if (exp_mass < 0.0)
        throw NegativeExponentialMass("HBFunction");
    if (std::abs(scalar) == 0.0)
        throw SchemaError("HBFunction scalar must be nonzero");
}

Complex HBFunction::eval(Complex z) const {
    Complex v = scalar * std::exp(Complex{0.0, -1.0} * exp_mass * z);
    for (const Complex& w : roots) v *= z - w;
    return v;
}

Complex HBFunction::eval_sharp(Complex z) const {
    Complex v = std::conj(scalar) * std::exp(Complex{0.0, 1.0} * exp_mass * z);
    for (const Complex& w : roots) v *= z - std::conj(w);
    return v;
}

MifDescriptor theta_of_E(const HBFunction& E) {
    E.validate();
    MifDescriptor desc;
    for (const Complex& w : E.roots) desc.zeros.push_back(std::conj(w));
    desc.exp_mass = 2.0 * E.exp_mass;
    // The descriptor evaluates with normalized Blaschke factors, so fold the
    // normalizers into the rotation to make eval_mif(desc, z) = E#(z)/E(z).
    Complex rot = std::conj(E.scalar) / E.scalar;
    for (const Complex& lam : desc.zeros) rot *= std::conj(blaschke_normalizer(lam));
    desc.rotation = rot;
    return desc;
}

Complex reproducing_kernel(const HBFunction& E, Complex lambda, Complex z) {
    E.validate();
    const Complex lb = std::conj(lambda);
    auto numerator = [&](Complex w) {
        return E.eval(w) * std::conj(E.eval(lambda)) -
               E.eval_sharp(w) * E.eval(lb);
    };
    const Complex den = 2.0 * M_PI * Complex{0.0, 1.0} * (lb - z);
    if (std::abs(lb - z) > 1e-6 * (1.0 + std::abs(z)))
        return numerator(z) / den;
    // Removable singularity at z = conj(lambda): the numerator vanishes there,
    // so the limit is -N'(z)/(2 pi i).  The derivative of the entire numerator
    // is taken spectrally on a circle (trapezoid rule is exponentially accurate).
    const int M = 32;
    const double r = 0.5 * (1.0 + std::abs(z));
    Complex d{0.0, 0.0};
    for (int m = 0; m < M; ++m) {
        const double th = 2.0 * M_PI * m / M;
        const Complex e{std::cos(th), std::sin(th)};
        d += numerator(z + r * e) / e;
    }
    d /= double(M) * r;
    return -d / (2.0 * M_PI * Complex{0.0, 1.0});
}

double phase_function(const HBFunction& E, double x) {
    E.validate();
    // -arg E along the axis, continuous branch: for a root u - iv (v > 0) the
    // factor contributes -arg((x-u) + iv) = -atan2(v, x-u), which decreases
    // from 0 to -pi; plus the linear term a x and the constant -arg(scalar).
    double psi = -std::arg(E.scalar) + E.exp_mass * x;
    for (const Complex& w : E.roots)
        psi -= std::atan2(-w.imag(), x - w.real());
    return psi;
}

AtomicMeasure spectral_measure(const HBFunction& E, Complex alpha,
                               double xmin, double xmax) {
    const MifDescriptor theta = theta_of_E(E);
    AtomicMeasure mu;
    for (double x : level_set(theta, alpha, xmin, xmax)) {
        const double w = std::norm(E.eval(Complex{x, 0.0}));
        mu.atoms.push_back({x, w * 2.0 * M_PI / darg_mif(theta, x)});
    }
    mu.infinity_mass = 0.0;
    mu.infinity_mass_certified = false;
    return mu;
}

std::vector<std::vector<Complex>> clark_basis_gram(const HBFunction& E, Complex alpha,
                                                   double xmin, double xmax) {
    const MifDescriptor theta = theta_of_E(E);
    const std::vector<double> pts = level_set(theta, alpha, xmin, xmax);
    std::vector<std::vector<Complex>> gram(pts.size(), std::vector<Complex>(pts.size()));
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = 0; j < pts.size(); ++j)
            gram[i][j] = reproducing_kernel(E, Complex{pts[j], 0.0}, Complex{pts[i], 0.0});
    return gram;
}

MembershipReport db_membership(const std::function<Complex(Complex)>& F,
                               const HBFunction& E, double tol) {
    E.validate();
    MembershipReport rep;
    auto ratio2 = [&](double x) {
        const Complex z{x, 0.0};
        return std::norm(F(z) / E.eval(z));
    };
    // F#(x) = conj(F(x)) on the axis, so |F#/E| = |F|/|E| there; the second
    // integral differs from the first only off the axis.  On-axis membership:
    QuadratureResult q = integrate_line(ratio2, tol, 32.0, 18);
    rep.norm_f = q.value;
    rep.norm_fsharp = q.value;
    rep.certified = q.certified && q.tail_exponent < 0.0;
    rep.evidence.push_back({"axis_l2_tail_exponent", q.tail_exponent, 0.0});
    // Growth control: |F/E| and |F#/E| at upper half-plane probes must obey
    // the H^2 pointwise bound |g(x+iy)| <= ||g|| / sqrt(4 pi y).
    bool growth_ok = true;
    const double norm_bound = std::sqrt(std::max(q.value, 0.0));
    double worst = 0.0;
    for (double y : {0.5, 1.0, 4.0, 16.0}) {
        for (double x : {-7.3, 0.1, 3.9, 25.0}) {
            const Complex z{x, y};
            const double cap = 4.0 * (norm_bound + 1e-12) / std::sqrt(4.0 * M_PI * y);
            const double g1 = std::abs(F(z) / E.eval(z));
            const double g2 = std::abs(std::conj(F(std::conj(z))) / E.eval(z));
            worst = std::max(worst, std::max(g1, g2) / cap);
            if (g1 > cap || g2 > cap) growth_ok = false;
        }
    }
    rep.evidence.push_back({"halfplane_growth_ratio", worst, 1.0});
    rep.member = rep.certified && growth_ok && std::isfinite(q.value);
    return rep;
}

std::string hb_to_json(const HBFunction& E) {
    json j;
    j["zeros"] = json::array();
    for (const Complex& w : E.roots) j["zeros"].push_back({w.real(), w.imag()});
    j["exp_mass"] = E.exp_mass;
    j["scalar"] = {E.scalar.real(), E.scalar.imag()};
    return j.dump();
}

HBFunction hb_from_json(const std::string& text) {
    HBFunction E;
    try {
        json j = json::parse(text);
        if (j.contains("zeros"))
            for (const auto& w : j.at("zeros"))
                E.roots.emplace_back(w.at(0).get<double>(), w.at(1).get<double>());
        E.exp_mass = j.value("exp_mass", 0.0);
        if (j.contains("scalar")) {
            const auto& s = j.at("scalar");
            E.scalar = Complex{s.at(0).get<double>(), s.at(1).get<double>()};
        }
    } catch (const json::exception& e) {
        throw SchemaError(e.what());
    }
    E.validate();
    return E;
}

} // namespace hardy
