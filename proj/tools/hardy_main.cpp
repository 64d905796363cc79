// hardy: command-line surface for the library.  Subcommands construct objects
// from JSON files, run the diagnostics, and emit JSON/CSV.  Every run echoes
// its resolved configuration; pipelines are deterministic.
//
// Exit codes: 0 success, 1 domain error, 2 inconclusive verdict,
//             64 usage error, 65 malformed input.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hardy/bm.hpp"
#include "hardy/clark.hpp"
#include "hardy/debranges.hpp"
#include "hardy/errors.hpp"
#include "hardy/grid.hpp"
#include "hardy/inner.hpp"
#include "hardy/model_fd.hpp"
#include "hardy/numerics.hpp"
#include "hardy/toeplitz_order.hpp"

using json = nlohmann::json;
using namespace hardy;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 64;
constexpr int kExitSchema = 65;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Complex as_complex(const std::vector<double>& v, const char* flag) {
    if (v.size() != 2) throw SchemaError(std::string(flag) + " expects two reals");
    return {v[0], v[1]};
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json poly_json(const Polynomial& p) {
    json arr = json::array();
    for (const Complex& c : p.coeffs()) arr.push_back(complex_json(c));
    return arr;
}

json rational_json(const RationalFunction& r) {
    return {{"num", poly_json(r.num)}, {"den", poly_json(r.den)}};
}

json interval_json(const IntervalFamily& fam) {
    json arr = json::array();
    for (const Interval& iv : fam.intervals) arr.push_back({iv.lo, iv.hi});
    return arr;
}

json evidence_json(const std::vector<Evidence>& ev) {
    json arr = json::array();
    for (const auto& e : ev)
        arr.push_back({{"test", e.test}, {"value", e.value}, {"threshold", e.threshold}});
    return arr;
}

GridFunction grid_from_json(const std::string& text) {
    GridFunction g;
    try {
        json j = json::parse(text);
        for (const auto& v : j.at("xs")) g.xs.push_back(v.get<double>());
        for (const auto& v : j.at("ys")) g.ys.push_back(v.get<double>());
    } catch (const json::exception& e) {
        throw SchemaError(e.what());
    }
    if (g.xs.size() != g.ys.size() || g.xs.empty())
        throw SchemaError("grid needs equal-length nonempty xs/ys");
    for (size_t i = 0; i + 1 < g.xs.size(); ++i)
        if (!(g.xs[i] < g.xs[i + 1])) throw SchemaError("grid xs must increase");
    return g;
}

std::vector<double> reals_from_json(const std::string& text) {
    std::vector<double> out;
    try {
        for (const auto& v : json::parse(text)) out.push_back(v.get<double>());
    } catch (const json::exception& e) {
        throw SchemaError(e.what());
    }
    return out;
}

std::vector<Complex> complexes_from_json(const std::string& text) {
    std::vector<Complex> out;
    try {
        for (const auto& v : json::parse(text))
            out.emplace_back(v.at(0).get<double>(), v.at(1).get<double>());
    } catch (const json::exception& e) {
        throw SchemaError(e.what());
    }
    return out;
}

// Entire-function spec for membership tests: same record as a structure
// function, but the roots may sit anywhere (no Hermite-Biehler validation).
struct EntireSpec {
    std::vector<Complex> roots;
    double exp_mass = 0.0;
    Complex scalar{1.0, 0.0};
    Complex eval(Complex z) const {
        Complex v = scalar * std::exp(Complex{0.0, -1.0} * exp_mass * z);
        for (const Complex& w : roots) v *= z - w;
        return v;
    }
};

EntireSpec entire_from_json(const std::string& text) {
    EntireSpec f;
    try {
        json j = json::parse(text);
        if (j.contains("zeros"))
            for (const auto& w : j.at("zeros"))
                f.roots.emplace_back(w.at(0).get<double>(), w.at(1).get<double>());
        f.exp_mass = j.value("exp_mass", 0.0);
        if (j.contains("scalar")) {
            const auto& s = j.at("scalar");
            f.scalar = Complex{s.at(0).get<double>(), s.at(1).get<double>()};
        }
    } catch (const json::exception& e) {
        throw SchemaError(e.what());
    }
    return f;
}

void emit(const json& config, const json& result, const std::string& format,
          const std::string& csv) {
    if (format == "csv") {
        // Config goes to stderr so stdout stays machine-readable CSV.
        std::cerr << json{{"config", config}}.dump() << "\n";
        std::cout << csv;
    } else {
        std::cout << json{{"config", config}, {"result", result}}.dump(2) << "\n";
    }
}

MifDescriptor load_mif(const std::string& path) { return mif_from_json(slurp(path)); }

RationalInner rational_from_descriptor(const MifDescriptor& d, const char* name) {
    if (!d.is_rational())
        throw NotApplicable(std::string(name) + " must be rational (exp_mass = 0)");
    RationalInner r;
    r.zeros = d.zeros;
    r.rotation = d.rotation;
    return r;
}

// ---------------------------------------------------------------- examples

MifDescriptor from_generator(const ZeroGenerator& gen, long n) {
    MifDescriptor d;
    d.zeros = gen.window(-n, n);
    return d;
}

int run_example_1(const json& cfg, const std::string& format, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> re(-3.0, 3.0), im(0.2, 2.0);
    json table = json::array();
    std::ostringstream csv;
    csv << "deg_I,deg_J,kernel_dim_IJ,kernel_dim_JI,relation\n";
    for (int n = 0; n <= 5; ++n) {
        for (int k = 0; k <= 5; ++k) {
            RationalInner I, J;
            for (int t = 0; t < n; ++t) I.zeros.push_back({re(rng), im(rng)});
            for (int t = 0; t < k; ++t) J.zeros.push_back({re(rng), im(rng)});
            const int dij = toeplitz_kernel_rational(I, J).dim;
            const int dji = toeplitz_kernel_rational(J, I).dim;
            MifDescriptor di, dj;
            di.zeros = I.zeros;
            dj.zeros = J.zeros;
            const std::string rel = (n == 0 && k == 0)
                                        ? "equivalent"
                                        : relation_name(order_verdict(di, dj).relation);
            table.push_back({{"deg_I", n}, {"deg_J", k}, {"kernel_dim_IJ", dij},
                             {"kernel_dim_JI", dji}, {"relation", rel}});
            csv << n << "," << k << "," << dij << "," << dji << "," << rel << "\n";
        }
    }
    emit(cfg, {{"table", table}}, format, csv.str());
    return kExitOk;
}

int run_example_2(const json& cfg, const std::string& format, double decay) {
    // Sparse geometric zero family versus the same family with selected zeros
    // pulled down toward the axis at rate k^{-decay}: the conjugate function
    // is unbounded, yet the derivative-comparability check still passes.
    const int count = 22;
    MifDescriptor I, J;
    I.zeros = ZeroGenerator::geometric(2.0, count).window(1, count);
    J.zeros = ZeroGenerator::perturbed_geometric(2.0, decay, count).window(1, count);
    // Sample at geometric midpoints of the dyadic scale: the pulled-down
    // zeros make the derivative ratio spike in shrinking neighborhoods of
    // x = 2^k, so the grid stays maximally far from every zero abscissa.
    std::vector<double> xs;
    for (int m = 0; m <= 21; ++m) {
        xs.push_back(-1.5 * std::pow(2.0, m));
        xs.push_back(1.5 * std::pow(2.0, m));
    }
    std::sort(xs.begin(), xs.end());
    Lemma3Report rep = lemma3_check(I, J, xs);
    double sup_conj = 0.0;
    GridFunction cp = harmonic_conjugate(I, J, xs);
    for (double y : cp.ys) sup_conj = std::max(sup_conj, std::fabs(y));
    json result = {{"comparability_ratio", rep.ratio},
                   {"comparability_pass", rep.pass},
                   {"sup_abs_conjugate", sup_conj},
                   {"decay", decay},
                   {"grid_points", xs.size()}};
    std::ostringstream csv;
    csv << "x,r\n";
    for (size_t i = 0; i < rep.r.xs.size(); ++i)
        csv << rep.r.xs[i] << "," << rep.r.ys[i] << "\n";
    emit(cfg, result, format, csv.str());
    return kExitOk;
}

int run_example_3(const json& cfg, const std::string& format, double C, long n) {
    MifDescriptor I = from_generator(ZeroGenerator::lattice(C, n), n);
    MifDescriptor J = from_generator(ZeroGenerator::lattice_half_shift(C, n), n);
    MifDescriptor L = from_generator(ZeroGenerator::lattice_punctured(C, n), n);
    const double xmax = double(n) / 3.0; // stay clear of truncation edge effects
    auto report = [&](const MifDescriptor& A, const MifDescriptor& B) {
        DriftReport d = drift_test(A, B, xmax);
        std::string name = d.outcome == DriftOutcome::BothTrivialEvidence
                               ? "both-trivial-evidence"
                               : d.outcome == DriftOutcome::KernelNontrivialEvidence
                                     ? "kernel-nontrivial-evidence"
                                     : "inconclusive";
        return json{{"outcome", name}, {"spread_upper", d.spread_upper},
                    {"spread_lower", d.spread_lower}};
    };
    json result;
    result["I_vs_J"] = report(I, J);
    result["J_vs_L"] = report(J, L);
    result["I_vs_L"] = report(I, L);
    // The (I, L) kernel is exact after cancelling the shared lattice zeros:
    // the symbol reduces to one conjugate Blaschke factor.
    RationalInner RI, RL;
    RI.zeros = I.zeros;
    RL.zeros = L.zeros;
    cancel_common_zeros(RI, RL);
    ToeplitzKernel K = toeplitz_kernel_rational(RI, RL);
    result["I_vs_L_kernel"] = {{"dim", K.dim},
                               {"residual", K.max_certification_residual},
                               {"reduced_deg_I", RI.degree()},
                               {"reduced_deg_L", RL.degree()}};
    std::ostringstream csv;
    csv << "pair,outcome,spread_upper,spread_lower\n";
    for (const char* p : {"I_vs_J", "J_vs_L", "I_vs_L"})
        csv << p << "," << result[p]["outcome"].get<std::string>() << ","
            << result[p]["spread_upper"].get<double>() << ","
            << result[p]["spread_lower"].get<double>() << "\n";
    emit(cfg, result, format, csv.str());
    return kExitOk;
}

int run_example_4(const json& cfg, const std::string& format, double C, long n) {
    // Three lattices stepped by thirds: zeros m + iC on m <= -1 and
    // m - k/3 + iC on m >= 0, k = 0, 1, 2.  Each step moves the argument
    // difference to +pi/3 at +inf and -pi/3 at -inf, so consecutive steps
    // stay inside the drift band while the two-step pair crosses it.
    auto step = [&](int k) {
        MifDescriptor d;
        for (long m = -n; m <= -1; ++m) d.zeros.push_back(Complex{double(m), C});
        for (long m = 0; m <= n; ++m)
            d.zeros.push_back(Complex{double(m) - double(k) / 3.0, C});
        return d;
    };
    MifDescriptor I0 = step(0), I1 = step(1), I2 = step(2);
    const double xmax = double(n) / 3.0; // stay clear of truncation edge effects
    auto spread = [&](const MifDescriptor& A, const MifDescriptor& B) {
        DriftReport d = drift_test(A, B, xmax);
        return json{{"spread_upper", d.spread_upper},
                    {"spread_lower", d.spread_lower},
                    {"crosses_band", d.outcome == DriftOutcome::KernelNontrivialEvidence}};
    };
    json result;
    result["I0_vs_I1"] = spread(I0, I1);
    result["I1_vs_I2"] = spread(I1, I2);
    result["I0_vs_I2"] = spread(I0, I2);
    std::ostringstream csv;
    csv << "pair,spread_upper,spread_lower,crosses_band\n";
    for (const char* p : {"I0_vs_I1", "I1_vs_I2", "I0_vs_I2"})
        csv << p << "," << result[p]["spread_upper"].get<double>() << ","
            << result[p]["spread_lower"].get<double>() << ","
            << (result[p]["crosses_band"].get<bool>() ? 1 : 0) << "\n";
    emit(cfg, result, format, csv.str());
    return kExitOk;
}

// ---------------------------------------------------------------- main

int run(int argc, char** argv) {
    CLI::App app{"hardy: inner functions, Clark measures, Toeplitz kernels, "
                 "and density diagnostics"};
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));

    // ---- mif
    auto* mif = app.add_subcommand("mif", "evaluate an inner function");
    std::string mif_file;
    std::vector<double> mif_z;
    std::vector<double> mif_x;
    auto* mif_eval = mif->add_subcommand("eval", "theta(z) at a point");
    mif_eval->add_option("--mif", mif_file, "descriptor JSON file")->required();
    mif_eval->add_option("--z", mif_z, "point re im")->expected(2)->required();
    auto* mif_arg = mif->add_subcommand("arg", "continuous argument on the axis");
    mif_arg->add_option("--mif", mif_file, "descriptor JSON file")->required();
    mif_arg->add_option("--x", mif_x, "abscissae")->required();
    auto* mif_darg = mif->add_subcommand("darg", "argument derivative on the axis");
    mif_darg->add_option("--mif", mif_file, "descriptor JSON file")->required();
    mif_darg->add_option("--x", mif_x, "abscissae")->required();

    // ---- clark
    auto* clark = app.add_subcommand("clark", "Clark measures and recovery");
    std::string clark_mif, clark_measure_file, clark_samples;
    std::vector<double> clark_alpha{1.0, 0.0};
    std::vector<double> clark_window;
    std::vector<double> clark_z;
    auto* clark_fwd = clark->add_subcommand("forward", "level-set measure of a descriptor");
    clark_fwd->add_option("--mif", clark_mif, "descriptor JSON file")->required();
    clark_fwd->add_option("--alpha", clark_alpha, "level re im")->expected(2);
    clark_fwd->add_option("--window", clark_window, "xmin xmax")->expected(2)->required();
    auto* clark_inv = clark->add_subcommand("inverse", "inner function from a measure");
    clark_inv->add_option("--measure", clark_measure_file, "measure JSON file")->required();
    clark_inv->add_option("--z", clark_z, "points re im re im ...")->required();
    auto* clark_rec = clark->add_subcommand("recover", "model-space element from samples");
    clark_rec->add_option("--mif", clark_mif, "descriptor JSON file")->required();
    clark_rec->add_option("--measure", clark_measure_file, "measure JSON file")->required();
    clark_rec->add_option("--samples", clark_samples, "JSON [[re,im],...]")->required();
    clark_rec->add_option("--z", clark_z, "point re im")->expected(2)->required();

    // ---- kernel
    auto* kernel = app.add_subcommand("kernel", "Toeplitz kernels");
    std::string ker_i, ker_j;
    auto* kernel_rat = kernel->add_subcommand("rational", "exact kernel for rational data");
    kernel_rat->add_option("--I", ker_i, "descriptor JSON file")->required();
    kernel_rat->add_option("--J", ker_j, "descriptor JSON file")->required();

    // ---- order
    auto* order = app.add_subcommand("order", "ordering of inner functions");
    std::string ord_i, ord_j;
    auto* order_v = order->add_subcommand("verdict", "aggregated relation verdict");
    order_v->add_option("--I", ord_i, "descriptor JSON file")->required();
    order_v->add_option("--J", ord_j, "descriptor JSON file")->required();

    // ---- bm
    auto* bm = app.add_subcommand("bm", "interval families and densities");
    std::string bm_points, bm_gamma, bm_measure, bm_u, bm_j;
    double bm_kappa = 0.0, bm_eps = 0.1, bm_window = 50.0;
    int bm_shells = 3;
    auto* bm_density_cmd = bm->add_subcommand("density", "interior density of a sequence");
    bm_density_cmd->add_option("--points", bm_points, "JSON array of reals")->required();
    bm_density_cmd->add_option("--shells", bm_shells, "dyadic shells to scan");
    auto* bm_kappa_cmd = bm->add_subcommand("kappa", "almost-decreasing verdict");
    bm_kappa_cmd->add_option("--gamma", bm_gamma, "grid JSON {xs, ys}")->required();
    bm_kappa_cmd->add_option("--kappa", bm_kappa, "weight exponent")->required();
    auto* bm_t10 = bm->add_subcommand("theorem10", "two-sided profile probe");
    bm_t10->add_option("--U", bm_u, "descriptor JSON file")->required();
    bm_t10->add_option("--J", bm_j, "descriptor JSON file")->required();
    bm_t10->add_option("--eps", bm_eps, "profile margin");
    bm_t10->add_option("--kappa", bm_kappa, "scaling exponent")->required();
    bm_t10->add_option("--window", bm_window, "half-width of the probe window");
    auto* bm_type = bm->add_subcommand("type", "exponential type estimate of a measure");
    bm_type->add_option("--measure", bm_measure, "measure JSON file")->required();

    // ---- db
    auto* db = app.add_subcommand("db", "structure functions and their spaces");
    std::string db_e, db_f;
    std::vector<double> db_lambda, db_z, db_alpha{1.0, 0.0}, db_window;
    auto* db_kernel = db->add_subcommand("kernel", "reproducing kernel value");
    db_kernel->add_option("--E", db_e, "structure function JSON file")->required();
    db_kernel->add_option("--lambda", db_lambda, "kernel node re im")->expected(2)->required();
    db_kernel->add_option("--z", db_z, "evaluation point re im")->expected(2)->required();
    auto* db_basis = db->add_subcommand("basis", "sampling basis at a level");
    db_basis->add_option("--E", db_e, "structure function JSON file")->required();
    db_basis->add_option("--alpha", db_alpha, "level re im")->expected(2);
    db_basis->add_option("--window", db_window, "xmin xmax")->expected(2)->required();
    auto* db_member = db->add_subcommand("member", "membership diagnostic");
    db_member->add_option("--E", db_e, "structure function JSON file")->required();
    db_member->add_option("--F", db_f, "entire function JSON file")->required();

    // ---- example
    auto* example = app.add_subcommand("example", "built-in worked constructions");
    int example_id = 1;
    double ex_c = 10.0, ex_decay = 1.0;
    long ex_n = 300;
    unsigned ex_seed = 1;
    example->add_option("id", example_id, "construction number")
        ->check(CLI::Range(1, 4))
        ->required();
    example->add_option("--C", ex_c, "lattice height");
    example->add_option("--decay", ex_decay, "pull-down rate k^-decay");
    example->add_option("--n", ex_n, "lattice half-width");
    example->add_option("--seed", ex_seed, "rng seed for randomized tables");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    json cfg = {{"format", format}};

    if (mif->parsed()) {
        const MifDescriptor d = load_mif(mif_file);
        cfg["mif"] = mif_file;
        if (mif_eval->parsed()) {
            const Complex z = as_complex(mif_z, "--z");
            cfg["subcommand"] = "mif eval";
            cfg["z"] = complex_json(z);
            emit(cfg, {{"value", complex_json(eval_mif(d, z))}}, format, "");
        } else {
            const bool want_arg = mif_arg->parsed();
            cfg["subcommand"] = want_arg ? "mif arg" : "mif darg";
            cfg["x"] = mif_x;
            json vals = json::array();
            std::ostringstream csv;
            csv << "x,value\n";
            for (double x : mif_x) {
                const double v = want_arg ? arg_mif(d, x) : darg_mif(d, x);
                vals.push_back(v);
                csv << x << "," << v << "\n";
            }
            emit(cfg, {{"values", vals}}, format, csv.str());
        }
        return kExitOk;
    }

    if (clark->parsed()) {
        if (clark_fwd->parsed()) {
            const MifDescriptor d = load_mif(clark_mif);
            const Complex alpha = as_complex(clark_alpha, "--alpha");
            cfg["subcommand"] = "clark forward";
            cfg["mif"] = clark_mif;
            cfg["alpha"] = complex_json(alpha);
            cfg["window"] = clark_window;
            AtomicMeasure mu = clark_measure(d, alpha, clark_window[0], clark_window[1]);
            emit(cfg, json::parse(measure_to_json(mu)), format, measure_to_csv(mu));
            return kExitOk;
        }
        if (clark_inv->parsed()) {
            AtomicMeasure mu = measure_from_json(slurp(clark_measure_file));
            if (clark_z.size() < 2 || clark_z.size() % 2 != 0)
                throw SchemaError("--z expects re/im pairs");
            cfg["subcommand"] = "clark inverse";
            cfg["measure"] = clark_measure_file;
            cfg["z"] = clark_z;
            json vals = json::array();
            std::ostringstream csv;
            csv << "re,im,value_re,value_im\n";
            for (size_t i = 0; i + 1 < clark_z.size(); i += 2) {
                const Complex z{clark_z[i], clark_z[i + 1]};
                const Complex v = mif_from_measure(mu, z);
                vals.push_back(complex_json(v));
                csv << z.real() << "," << z.imag() << "," << v.real() << "," << v.imag()
                    << "\n";
            }
            emit(cfg, {{"values", vals}}, format, csv.str());
            return kExitOk;
        }
        const MifDescriptor d = load_mif(clark_mif);
        AtomicMeasure mu = measure_from_json(slurp(clark_measure_file));
        std::vector<Complex> samples = complexes_from_json(slurp(clark_samples));
        const Complex z = as_complex(clark_z, "--z");
        cfg["subcommand"] = "clark recover";
        cfg["mif"] = clark_mif;
        cfg["measure"] = clark_measure_file;
        cfg["z"] = complex_json(z);
        emit(cfg, {{"value", complex_json(clark_recover(d, mu, samples, z))}}, format, "");
        return kExitOk;
    }

    if (kernel->parsed()) {
        RationalInner I = rational_from_descriptor(load_mif(ker_i), "--I");
        RationalInner J = rational_from_descriptor(load_mif(ker_j), "--J");
        cfg["subcommand"] = "kernel rational";
        cfg["I"] = ker_i;
        cfg["J"] = ker_j;
        cancel_common_zeros(I, J);
        ToeplitzKernel K = toeplitz_kernel_rational(I, J);
        json basis = json::array();
        for (const auto& b : K.basis) basis.push_back(rational_json(b));
        emit(cfg,
             {{"dim", K.dim}, {"residual", K.max_certification_residual},
              {"basis", basis}},
             format, "");
        return kExitOk;
    }

    if (order->parsed()) {
        const MifDescriptor I = load_mif(ord_i), J = load_mif(ord_j);
        cfg["subcommand"] = "order verdict";
        cfg["I"] = ord_i;
        cfg["J"] = ord_j;
        OrderVerdict v = order_verdict(I, J);
        emit(cfg, json::parse(verdict_to_json(v)), format, "");
        return v.relation == Relation::Inconclusive ? kExitInconclusive : kExitOk;
    }

    if (bm->parsed()) {
        if (bm_density_cmd->parsed()) {
            cfg["subcommand"] = "bm density";
            cfg["points"] = bm_points;
            cfg["shells"] = bm_shells;
            BmDensity d = bm_density(reals_from_json(slurp(bm_points)), bm_shells);
            emit(cfg,
                 {{"dstar_counting", d.dstar_counting}, {"dstar_type", d.dstar_type},
                  {"witness", interval_json(d.witness)}},
                 format, "");
            return kExitOk;
        }
        if (bm_kappa_cmd->parsed()) {
            cfg["subcommand"] = "bm kappa";
            cfg["gamma"] = bm_gamma;
            cfg["kappa"] = bm_kappa;
            KappaVerdict v = kappa_almost_decreasing(grid_from_json(slurp(bm_gamma)), bm_kappa);
            const char* cls = v.cls == FamilyClass::Short
                                  ? "short"
                                  : v.cls == FamilyClass::Long ? "long" : "window-limited";
            emit(cfg,
                 {{"almost_decreasing", v.almost_decreasing}, {"sum", v.sum},
                  {"class", cls}, {"boundary_uncertain", v.boundary_uncertain}},
                 format, "");
            return v.boundary_uncertain ? kExitInconclusive : kExitOk;
        }
        if (bm_t10->parsed()) {
            cfg["subcommand"] = "bm theorem10";
            cfg["U"] = bm_u;
            cfg["J"] = bm_j;
            cfg["eps"] = bm_eps;
            cfg["kappa"] = bm_kappa;
            cfg["window"] = bm_window;
            DominanceReport rep = theorem10_diagnostic(load_mif(bm_u), load_mif(bm_j),
                                                       bm_eps, bm_kappa, bm_window);
            const char* name = rep.verdict == DominanceVerdict::InD
                                   ? "in-dominance"
                                   : rep.verdict == DominanceVerdict::NotInD
                                         ? "not-in-dominance"
                                         : rep.verdict == DominanceVerdict::Gap
                                               ? "gap"
                                               : rep.verdict ==
                                                         DominanceVerdict::NotApplicableV
                                                     ? "not-applicable"
                                                     : "boundary-inconclusive";
            emit(cfg, {{"verdict", name}, {"evidence", evidence_json(rep.evidence)}},
                 format, "");
            return (rep.verdict == DominanceVerdict::InD ||
                    rep.verdict == DominanceVerdict::NotInD)
                       ? kExitOk
                       : kExitInconclusive;
        }
        cfg["subcommand"] = "bm type";
        cfg["measure"] = bm_measure;
        TypeEstimate t = type_estimate(measure_from_json(slurp(bm_measure)));
        emit(cfg, {{"value", t.value}, {"evidence", evidence_json(t.evidence)}}, format, "");
        return kExitOk;
    }

    if (db->parsed()) {
        const HBFunction E = hb_from_json(slurp(db_e));
        cfg["E"] = db_e;
        if (db_kernel->parsed()) {
            const Complex lam = as_complex(db_lambda, "--lambda");
            const Complex z = as_complex(db_z, "--z");
            cfg["subcommand"] = "db kernel";
            cfg["lambda"] = complex_json(lam);
            cfg["z"] = complex_json(z);
            emit(cfg, {{"value", complex_json(reproducing_kernel(E, lam, z))}}, format, "");
            return kExitOk;
        }
        if (db_basis->parsed()) {
            const Complex alpha = as_complex(db_alpha, "--alpha");
            cfg["subcommand"] = "db basis";
            cfg["alpha"] = complex_json(alpha);
            cfg["window"] = db_window;
            AtomicMeasure mu = spectral_measure(E, alpha, db_window[0], db_window[1]);
            auto gram = clark_basis_gram(E, alpha, db_window[0], db_window[1]);
            double off = 0.0;
            for (size_t i = 0; i < gram.size(); ++i)
                for (size_t j = 0; j < gram.size(); ++j)
                    if (i != j) off = std::max(off, std::abs(gram[i][j]));
            emit(cfg,
                 {{"measure", json::parse(measure_to_json(mu))},
                  {"max_offdiagonal", off}},
                 format, measure_to_csv(mu));
            return kExitOk;
        }
        const EntireSpec F = entire_from_json(slurp(db_f));
        cfg["subcommand"] = "db member";
        cfg["F"] = db_f;
        MembershipReport rep =
            db_membership([&](Complex z) { return F.eval(z); }, E);
        emit(cfg,
             {{"member", rep.member}, {"certified", rep.certified},
              {"norm_f", rep.norm_f}, {"norm_fsharp", rep.norm_fsharp},
              {"evidence", evidence_json(rep.evidence)}},
             format, "");
        return rep.certified ? kExitOk : kExitInconclusive;
    }

    // example
    cfg["subcommand"] = "example";
    cfg["id"] = example_id;
    cfg["C"] = ex_c;
    cfg["decay"] = ex_decay;
    cfg["n"] = ex_n;
    cfg["seed"] = ex_seed;
    switch (example_id) {
        case 1: return run_example_1(cfg, format, ex_seed);
        case 2: return run_example_2(cfg, format, ex_decay);
        case 3: return run_example_3(cfg, format, ex_c, ex_n);
        default: return run_example_4(cfg, format, ex_c, ex_n);
    }
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const SchemaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSchema;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}
