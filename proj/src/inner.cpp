#include "hardy/inner.hpp"
#include "hardy/errors.hpp"

#include <cmath>
#include <nlohmann/json.hpp>

using nlohmann::json;

namespace hardy {

void MifDescriptor::validate() const {
    for (const Complex& z : zeros)
        if (!(z.imag() > 0.0))
            throw NonUpperHalfZero("zero at (" + std::to_string(z.real()) + ", " +
                                   std::to_string(z.imag()) + ")");
    if (exp_mass < 0.0)
        throw NegativeExponentialMass(std::to_string(exp_mass));
    if (std::fabs(std::abs(rotation) - 1.0) > 1e-9)
        throw NonUnimodularRotation("|rotation| = " + std::to_string(std::abs(rotation)));
}

double blaschke_sum(std::span<const Complex> zeros) {
    double s = 0.0;
    for (const Complex& z : zeros) {
        if (!(z.imag() > 0.0))
            throw NonUpperHalfZero("in blaschke_sum");
        s += z.imag() / (1.0 + std::norm(z));
    }
    return s;
}

Complex blaschke_normalizer(Complex lambda) {
    const Complex I{0.0, 1.0};
    const Complex w = (I - lambda) / (I - std::conj(lambda));
    const double aw = std::abs(w);
    if (aw < 1e-14) return {1.0, 0.0}; // lambda == i: factor vanishes at i, take eps = 1
    return std::conj(w) / aw;
}

Complex blaschke_factor(Complex lambda, Complex z) {
    return blaschke_normalizer(lambda) * (z - lambda) / (z - std::conj(lambda));
}

Complex eval_mif(const MifDescriptor& desc, Complex z) {
    desc.validate();
    Complex out = desc.rotation * std::exp(Complex{0.0, 1.0} * desc.exp_mass * z);
    for (const Complex& lam : desc.zeros) {
        const Complex den = z - std::conj(lam);
        if (std::abs(den) < 1e-13 * (1.0 + std::abs(z)))
            throw PoleHit("eval_mif at pole of Blaschke factor");
        out *= blaschke_normalizer(lam) * (z - lam) / den;
    }
    return out;
}

double arg_mif(const MifDescriptor& desc, double x) {
    desc.validate();
    double phi = std::arg(desc.rotation) + desc.exp_mass * x;
    for (const Complex& lam : desc.zeros) {
        const double u = lam.real(), v = lam.imag();
        phi += 2.0 * std::atan((x - u) / v) + M_PI + std::arg(blaschke_normalizer(lam));
    }
    return phi;
}

double darg_mif(const MifDescriptor& desc, double x) {
    desc.validate();
    double d = desc.exp_mass;
    for (const Complex& lam : desc.zeros) {
        const double u = lam.real(), v = lam.imag();
        d += 2.0 * v / ((x - u) * (x - u) + v * v);
    }
    return d;
}

std::vector<Complex> ZeroGenerator::window(long n_lo, long n_hi) const {
    std::vector<Complex> zs;
    n_lo = std::max(n_lo, lo);
    n_hi = std::min(n_hi, hi);
    for (long n = n_lo; n <= n_hi; ++n) {
        Complex z = rule(n);
        if (std::isfinite(z.real()) && z.imag() > 0.0)
            zs.push_back(z);
    }
    return zs;
}

ZeroGenerator ZeroGenerator::geometric(double ratio, int count) {
    return {[ratio](long n) { return std::pow(ratio, double(n)) * Complex{1.0, 1.0}; },
            1, long(count)};
}

ZeroGenerator ZeroGenerator::arithmetic(double beta, double height, long n) {
    return {[beta, height](long k) { return Complex{beta * double(k), height}; }, -n, n};
}

ZeroGenerator ZeroGenerator::perturbed_geometric(double ratio, double decay, int count) {
    // Same family as geometric(ratio), except at the sparse indices n = 2^k the
    // zero is pulled down to height k^{-decay} above the real axis.
    return {[ratio, decay](long n) -> Complex {
                const double re = std::pow(ratio, double(n));
                long k = -1;
                for (long j = 0; (1L << j) <= n; ++j)
                    if ((1L << j) == n) { k = j; break; }
                if (k >= 1) return {re, std::pow(double(k), -decay)};
                return re * Complex{1.0, 1.0};
            },
            1, long(count)};
}

ZeroGenerator ZeroGenerator::lattice(double C, long n) {
    return {[C](long k) { return Complex{double(k), C}; }, -n, n};
}

ZeroGenerator ZeroGenerator::lattice_half_shift(double C, long n) {
    return {[C](long k) {
                return Complex{k < 0 ? double(k) : double(k) + 0.5, C};
            },
            -n, n};
}

ZeroGenerator ZeroGenerator::lattice_punctured(double C, long n) {
    return {[C](long k) -> Complex {
                if (k == 0) return {0.0, -1.0}; // filtered out by window()
                return Complex{double(k), C};
            },
            -n, n};
}

MifDescriptor materialize(const ZeroGenerator& gen, Complex z, double tol,
                          double exp_mass, Complex rotation) {
    // Grow the index window symmetrically; certify by bounding the product of
    // the omitted factors: for |lambda| >= 2(1+|z|),
    //   |1 - b_lambda(z)| <= 8 Im(lambda) (1 + |z|) / |lambda|^2.
    const double R = std::abs(z);
    MifDescriptor desc;
    desc.exp_mass = exp_mass;
    desc.rotation = rotation;
    long half = 8;
    const long cap = 1L << 18; // refuse to materialize more than ~half a million zeros
    while (true) {
        const long n_lo = std::max(gen.lo, -half), n_hi = std::min(gen.hi, half);
        desc.zeros = gen.window(n_lo, n_hi);
        if (n_lo == gen.lo && n_hi == gen.hi) return desc; // whole range: exact
        // Bound the omitted factors over a probe block past the window.
        double tail = 0.0;
        bool near = false;
        const long probe = half * 64;
        const long p_lo = std::max(gen.lo, -probe), p_hi = std::min(gen.hi, probe);
        for (long n = p_lo; n <= p_hi && !near; ++n) {
            if (n >= n_lo && n <= n_hi) continue;
            const Complex lam = gen.rule(n);
            if (!(lam.imag() > 0.0)) continue;
            const double al = std::abs(lam);
            if (al < 2.0 * (1.0 + R)) near = true;
            else tail += 8.0 * lam.imag() * (1.0 + R) / (al * al);
        }
        const bool whole_probed = (p_lo == gen.lo && p_hi == gen.hi);
        // Unprobed remainder of a decaying family is dominated by the probed
        // block; keep a factor-2 margin when the probe did not reach the end.
        if (!near && (whole_probed ? tail < tol : 2.0 * tail < tol))
            return desc;
        if (half >= cap)
            throw TruncationNotConverged("window cap reached, tail bound " +
                                         std::to_string(tail));
        half *= 2;
    }
}

std::string mif_to_json(const MifDescriptor& desc) {
    json j;
    j["zeros"] = json::array();
    for (const Complex& z : desc.zeros)
        j["zeros"].push_back({z.real(), z.imag()});
    j["exp_mass"] = desc.exp_mass;
    j["rotation"] = {desc.rotation.real(), desc.rotation.imag()};
    return j.dump();
}

MifDescriptor mif_from_json(const std::string& text) {
    MifDescriptor desc;
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw SchemaError(e.what());
    }
    try {
        if (j.contains("zeros"))
            for (const auto& z : j.at("zeros"))
                desc.zeros.emplace_back(z.at(0).get<double>(), z.at(1).get<double>());
        desc.exp_mass = j.value("exp_mass", 0.0);
        if (j.contains("rotation")) {
            const auto& r = j.at("rotation");
            desc.rotation = Complex{r.at(0).get<double>(), r.at(1).get<double>()};
        }
    } catch (const json::exception& e) {
        throw SchemaError(e.what());
    }
    desc.validate();
    return desc;
}

} // namespace hardy
