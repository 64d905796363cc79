#include "hardy/clark.hpp"
#include "hardy/errors.hpp"
#include "hardy/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <nlohmann/json.hpp>

using nlohmann::json;

namespace hardy {

std::vector<double> level_set(const MifDescriptor& desc, Complex alpha,
                              double xmin, double xmax) {
    desc.validate();
    if (std::fabs(std::abs(alpha) - 1.0) > 1e-9)
        throw NonUnimodularRotation("level_set alpha");
    if (desc.exp_mass == 0.0 && desc.zeros.empty())
        throw ConstantFunction("level_set of a constant inner function");
    const double a0 = std::arg(alpha); // in (-pi, pi]
    const double lo = arg_mif(desc, xmin), hi = arg_mif(desc, xmax);
    std::vector<double> targets;
    const long kmin = long(std::ceil((lo - a0) / (2.0 * M_PI)));
    const long kmax = long(std::floor((hi - a0) / (2.0 * M_PI)));
    for (long k = kmin; k <= kmax; ++k)
        targets.push_back(a0 + 2.0 * M_PI * double(k));
    auto phi = [&](double x) { return arg_mif(desc, x); };
    return monotone_roots(phi, targets, xmin, xmax);
}

AtomicMeasure clark_measure(const MifDescriptor& desc, Complex alpha,
                            double xmin, double xmax) {
    AtomicMeasure mu;
    for (double x : level_set(desc, alpha, xmin, xmax)) {
        const double d = darg_mif(desc, x);
        mu.atoms.push_back({x, 2.0 * M_PI / d});
    }
    // Point mass at infinity: 1 - conj(alpha)*theta must be square integrable.
    // A pure exponential is almost periodic on the axis, so the mass is 0 and
    // that is certain; for anything else we report 0 without a certificate.
    mu.infinity_mass = 0.0;
    mu.infinity_mass_certified = desc.is_pure_exponential();
    return mu;
}

Complex herglotz_from_measure(const AtomicMeasure& mu, Complex z) {
    if (mu.atoms.empty() && mu.infinity_mass == 0.0)
        throw EmptyMeasure("herglotz_from_measure");
    const Complex I{0.0, 1.0};
    auto base = [&](Complex w) {
        Complex m = -I * mu.infinity_mass * w;
        for (const auto& atom : mu.atoms) {
            // (1/(pi i)) [ 1/(x - w) - x/(1+x^2) ] has real part equal to the
            // Poisson kernel (1/pi) Im w / |x - w|^2.
            m += atom.mass / (M_PI * I) *
                 (1.0 / (atom.x - w) - atom.x / (1.0 + atom.x * atom.x));
        }
        return m;
    };
    const double im_at_i = base(I).imag();
    return base(z) - I * im_at_i; // pin m(i) to the real axis
}

Complex mif_from_measure(const AtomicMeasure& mu, Complex z) {
    const Complex m = herglotz_from_measure(mu, z);
    return (m - 1.0) / (m + 1.0);
}

Complex cauchy_integral(std::span<const Complex> values, const AtomicMeasure& mu,
                        Complex z) {
    if (values.size() != mu.atoms.size())
        throw SchemaError("cauchy_integral: samples do not align with atoms");
    const Complex I{0.0, 1.0};
    Complex s{0.0, 0.0};
    for (size_t n = 0; n < mu.atoms.size(); ++n) {
        const Complex den = mu.atoms[n].x - z;
        if (std::abs(den) < 1e-12 * (1.0 + std::abs(z)))
            throw OnSupport("cauchy_integral evaluated on an atom");
        s += values[n] * mu.atoms[n].mass / den;
    }
    return s / (2.0 * M_PI * I);
}

Complex clark_recover(const MifDescriptor& desc, const AtomicMeasure& sigma1,
                      std::span<const Complex> samples, Complex z) {
    if (sigma1.infinity_mass > 0.0)
        throw InfiniteMassUnsupported("clark_recover with a point mass at infinity");
    if (sigma1.atoms.empty())
        throw EmptyMeasure("clark_recover");
    return (1.0 - eval_mif(desc, z)) * cauchy_integral(samples, sigma1, z);
}

std::string measure_to_json(const AtomicMeasure& mu) {
    json j;
    j["atoms"] = json::array();
    for (const auto& atom : mu.atoms)
        j["atoms"].push_back({{"x", atom.x}, {"mass", atom.mass}});
    j["infinity_mass"] = mu.infinity_mass;
    return j.dump();
}

AtomicMeasure measure_from_json(const std::string& text) {
    AtomicMeasure mu;
    json j;
    try {
        j = json::parse(text);
        if (j.contains("atoms"))
            for (const auto& a : j.at("atoms"))
                mu.atoms.push_back({a.at("x").get<double>(), a.at("mass").get<double>()});
        mu.infinity_mass = j.value("infinity_mass", 0.0);
    } catch (const json::exception& e) {
        throw SchemaError(e.what());
    }
    for (const auto& a : mu.atoms)
        if (!(a.mass > 0.0))
            throw SchemaError("atom with non-positive mass");
    std::sort(mu.atoms.begin(), mu.atoms.end(),
              [](const auto& a, const auto& b) { return a.x < b.x; });
    return mu;
}

std::string measure_to_csv(const AtomicMeasure& mu) {
    std::ostringstream out;
    out.precision(17);
    out << "x,mass\n";
    for (const auto& atom : mu.atoms)
        out << atom.x << "," << atom.mass << "\n";
    return out.str();
}

} // namespace hardy
