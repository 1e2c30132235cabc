// SPDX-License-Identifier: Apache-2.0
#include "dirac/cli.hpp"

#include <algorithm>
#include <iostream>
#include <random>

#include <CLI11.hpp>

#include "dirac/basis.hpp"
#include "dirac/expansion.hpp"
#include "dirac/galerkin.hpp"
#include "dirac/hilbert.hpp"
#include "dirac/io.hpp"
#include "dirac/kernels/kernels.hpp"
#include "dirac/selfadjoint.hpp"
#include "dirac/transforms.hpp"

namespace dirac::cli {

using io::fmt;
using io::json;
namespace fs = std::filesystem;

namespace {

int get_even(const json& cfg, const char* key, int def) {
    const int v = cfg.value(key, def);
    if (v <= 0 || v % 2 != 0) throw ConfigError(std::string(key) + " must be a positive even integer");
    return v;
}

void emit(const fs::path& out, const std::string& name, const json& j, std::ostream& log) {
    io::write_atomic(out / (name + ".json"), j.dump(2) + "\n");
    log << (out / (name + ".json")).string() << "\n";
}

void emit(const fs::path& out, const std::string& name, const io::Csv& csv, std::ostream& log) {
    io::write_atomic(out / (name + ".csv"), csv.str());
    log << (out / (name + ".csv")).string() << "\n";
}

json classify_json(const BoundaryCondition& bc) {
    const BcClassification c = classify_bc_detailed(bc);
    json j{{"class", to_string(c.cls)},
           {"near_degenerate", c.near_degenerate},
           {"det", io::to_json(bc.det())},
           {"discriminant", io::to_json(bc.discriminant())}};
    if (c.cls != BcClass::NotRegular) {
        const SpectralParams sp = spectral_params(bc);
        j["tau1"] = io::to_json(sp.tau1);
        j["tau2"] = io::to_json(sp.tau2);
        j["z1"] = io::to_json(sp.z1);
        j["z2"] = io::to_json(sp.z2);
    }
    return j;
}

int cmd_classify(const json& cfg, const fs::path& out, std::ostream& log) {
    json j;
    if (cfg.contains("weighted")) {
        const WeightedProblem p = io::parse_weighted_problem(cfg.at("weighted"));
        const CanonicalProblem c = change_of_variable(p);
        const GaugeData g = gauge_reduce(c.S, c.bc, c.breakpoints);
        j = classify_json(p.bc);
        j["transformed"] = classify_json(g.bc_tilde);
        j["transformed"]["bc"] = {{"a", io::to_json(g.bc_tilde.a)}, {"b", io::to_json(g.bc_tilde.b)},
                                  {"c", io::to_json(g.bc_tilde.c)}, {"d", io::to_json(g.bc_tilde.d)}};
    } else {
        j = classify_json(io::parse_bc(cfg.at("bc")));
    }
    std::cout << j.dump() << "\n";
    emit(out, "classify", j, log);
    return kOk;
}

int cmd_basis(const json& cfg, const fs::path& out, std::ostream& log) {
    const SpectralBasis basis(io::parse_bc(cfg.at("bc")));
    const int M = get_even(cfg, "M", 20);
    const int Ks = cfg.value("K_sample", 4);
    const int grid = cfg.value("grid", 64);
    if (grid < 2) throw ConfigError("grid must be at least 2");
    io::Csv csv({"x", "k", "nu", "phi1_re", "phi1_im", "phi2_re", "phi2_im", "dual1_re", "dual1_im", "dual2_re",
                 "dual2_im"});
    for (int k = -Ks; k <= Ks; k += 2)
        for (int nu = 1; nu <= 2; ++nu)
            for (int i = 0; i < grid; ++i) {
                const double x = kPi * i / (grid - 1);
                const Value2 p = basis.phi(k, nu, x), d = basis.phi_tilde(k, nu, x);
                csv.row({fmt(x), std::to_string(k), std::to_string(nu), fmt(p[0].real()), fmt(p[0].imag()),
                         fmt(p[1].real()), fmt(p[1].imag()), fmt(d[0].real()), fmt(d[0].imag()), fmt(d[1].real()),
                         fmt(d[1].imag())});
            }
    const Eigen::MatrixXcd G = biorthogonality_gram(basis, M);
    const double res = (G - Eigen::MatrixXcd::Identity(G.rows(), G.cols())).cwiseAbs().maxCoeff();
    const double tol = cfg.value("tol", 1e-8);
    const json j{{"class", to_string(basis.cls())}, {"M", M}, {"gram_residual", res}, {"tol", tol},
                 {"pass", res <= tol}};
    emit(out, "basis", csv, log);
    emit(out, "basis", j, log);
    return res <= tol ? kOk : kProperty;
}

const char* region_name(Region r) {
    switch (r) {
        case Region::Central: return "central";
        case Region::Disk: return "disk";
        case Region::Edge: return "edge";
        case Region::Violation: return "violation";
    }
    return "violation";
}

int cmd_spectrum(const json& cfg, const fs::path& out, std::ostream& log) {
    const int M = get_even(cfg, "M", 64);
    if (cfg.contains("weighted")) {
        const WeightedProblem p = io::parse_weighted_problem(cfg.at("weighted"));
        const auto eig = weighted_spectrum(p, M);
        io::Csv csv({"re", "im"});
        for (cplx z : eig) csv.row({fmt(z.real()), fmt(z.imag())});
        const CanonicalProblem c = change_of_variable(p);
        const GaugeData g = gauge_reduce(c.S, c.bc, c.breakpoints);
        const json j{{"M", M}, {"K", c.map.K()}, {"raw", classify_json(p.bc)},
                     {"transformed", classify_json(g.bc_tilde)}, {"count", eig.size()}};
        emit(out, "spectrum", csv, log);
        emit(out, "spectrum", j, log);
        return kOk;
    }
    const SpectralBasis basis(io::parse_bc(cfg.at("bc")));
    const PotentialSpec v = io::parse_potential(cfg.value("potential", json()));
    const double vn = potential_norm(v);
    const TruncatedOperator op = build_truncated(basis, v, M);
    const auto eig = spectrum(op);
    const double T = cfg.value("T", default_T(basis.params(), vn));
    int N = -1;
    if (cfg.contains("N")) {
        N = cfg.at("N").get<int>();
        if (N < 0 || N % 2 != 0) throw ConfigError("N must be a nonnegative even integer");
    } else {
        N = find_localization_N(basis, {eig}, M, T, M);
    }
    json j{{"class", to_string(basis.cls())}, {"M", M}, {"v_norm", vn}, {"T", T}, {"count", eig.size()}};
    io::Csv csv({"re", "im", "region", "m", "mu"});
    bool ok = N >= 0;
    if (N >= 0) {
        const LocalizationReport loc = localize(basis, eig, M, N, T);
        for (const auto& a : loc.assignments)
            csv.row({fmt(a.lambda.real()), fmt(a.lambda.imag()), region_name(a.region), std::to_string(a.m),
                     std::to_string(a.mu)});
        j["localization"] = {{"N", loc.N},
                             {"rho", loc.rho},
                             {"center", loc.center},
                             {"central_count", loc.central_count},
                             {"expected_central", loc.expected_central},
                             {"violations", loc.violations},
                             {"ok", loc.ok()}};
        ok = loc.ok();
    } else {
        for (cplx z : eig) csv.row({fmt(z.real()), fmt(z.imag()), "unassigned", "0", "0"});
        j["localization"] = {{"N", -1}, {"ok", false}, {"violations", {"no clean localization N found"}}};
    }
    emit(out, "spectrum", csv, log);
    emit(out, "spectrum", j, log);
    return ok ? kOk : kProperty;
}

std::vector<double> interior_grid(int n) {
    std::vector<double> g;
    for (int i = 0; i < n; ++i) g.push_back(kPi * (i + 0.5) / n);
    return g;
}

int cmd_expand(const json& cfg, const fs::path& out, std::ostream& log) {
    const SpectralBasis basis(io::parse_bc(cfg.at("bc")));
    const VectorFunction F = io::parse_vector_function(cfg.at("F"));
    const auto xs = io::parse_double_list(cfg.at("x_set"));
    const auto Ms = cfg.contains("M_schedule") ? io::parse_int_list(cfg.at("M_schedule")) : std::vector<int>{64, 128, 256};
    for (int M : Ms)
        if (M <= 0 || M % 2 != 0) throw ConfigError("M_schedule entries must be positive even integers");
    const PointwiseReport rep = verify_pointwise(basis, F, xs, Ms, cfg.value("grid_points", 512));
    io::Csv csv({"x", "M", "sum1_re", "sum1_im", "sum2_re", "sum2_im", "limit1_re", "limit1_im", "limit2_re",
                 "limit2_im", "error"});
    for (const auto& e : rep.entries)
        csv.row({fmt(e.x), std::to_string(e.M), fmt(e.sum[0].real()), fmt(e.sum[0].imag()), fmt(e.sum[1].real()),
                 fmt(e.sum[1].imag()), fmt(e.limit[0].real()), fmt(e.limit[0].imag()), fmt(e.limit[1].real()),
                 fmt(e.limit[1].imag()), fmt(e.error)});
    json dec = json::array();
    for (bool b : rep.decreasing) dec.push_back(b);
    const json j{{"class", to_string(basis.cls())}, {"M_schedule", Ms}, {"x_set", xs}, {"decreasing", dec},
                 {"uniform_error", rep.uniform_error}, {"pass", rep.all_decreasing}};
    emit(out, "expand", csv, log);
    emit(out, "expand", j, log);
    return rep.all_decreasing ? kOk : kProperty;
}

int cmd_equiconv(const json& cfg, const fs::path& out, std::ostream& log) {
    const SpectralBasis basis(io::parse_bc(cfg.at("bc")));
    const PotentialSpec v = io::parse_potential(cfg.value("potential", json()));
    const VectorFunction F = io::parse_vector_function(cfg.at("F"));
    const int M = get_even(cfg, "M", 256);
    const auto Ns = cfg.contains("N_schedule") ? io::parse_int_list(cfg.at("N_schedule"))
                                               : std::vector<int>{8, 16, 32, 64, 128};
    for (int N : Ns)
        if (N < 0 || N % 2 != 0 || N > M) throw ConfigError("N_schedule entries must be even and within [0, M]");
    EquiconvOptions opt;
    opt.trend_factor = cfg.value("trend_factor", 4.0);
    opt.T = cfg.value("T", -1.0);
    const TruncatedOperator op = build_truncated(basis, v, M);
    const CoefficientTable c = expand_via_A_inverse(basis, F, M);
    const ExpansionReport rep =
        equiconv_deficit(basis, op, c, potential_norm(v), Ns, interior_grid(cfg.value("grid_points", 256)), opt);
    io::Csv csv({"N", "deficit"});
    json d = json::array();
    for (const auto& p : rep.deficits) {
        csv.row({std::to_string(p.N), fmt(p.deficit)});
        d.push_back({{"N", p.N}, {"deficit", p.deficit}});
    }
    const json j{{"M", M}, {"deficits", d}, {"trend_factor", opt.trend_factor}, {"trend_pass", rep.trend_pass},
                 {"tail_decreasing", rep.tail_decreasing}, {"pass", rep.pass}};
    emit(out, "equiconv", csv, log);
    emit(out, "equiconv", j, log);
    return rep.pass ? kOk : kProperty;
}

int cmd_selfadjoint(const json& cfg, const fs::path& out, std::ostream& log) {
    const SeparatedSelfAdjointBC bc = io::parse_separated_bc(cfg);
    const RealDiracProblem prob = io::parse_real_problem(cfg);
    const int M = get_even(cfg, "M", 64);
    const SelfAdjointModel model(bc, prob, M);
    const SaSpectrum sp = model.spectrum();
    io::Csv csv({"index", "eigenvalue"});
    for (std::size_t i = 0; i < sp.eigenvalues.size(); ++i) csv.row({std::to_string(i), fmt(sp.eigenvalues[i])});
    json j{{"alpha1", bc.alpha1}, {"alpha2", bc.alpha2}, {"M", M},       {"tau", sp.tau},
           {"K", sp.K},           {"ell", sp.ell},       {"N_found", sp.N_found}, {"max_imag", sp.max_imag},
           {"violations", sp.violations}, {"ok", sp.ok()}};
    bool pass = sp.ok();
    if (cfg.contains("expand")) {
        const json& e = cfg.at("expand");
        const ScalarFn f = io::parse_function(e.at("f")), g = io::parse_function(e.at("g"));
        const auto xs = io::parse_double_list(e.at("x_set"));
        const auto Ms = io::parse_int_list(e.at("M_schedule"));
        const SaExpandReport r = model.expand(f, g, xs, Ms);
        io::Csv ec({"x", "M", "f_sum", "g_sum", "f_limit", "g_limit", "error"});
        for (const auto& p : r.entries)
            ec.row({fmt(p.x), std::to_string(p.M), fmt(p.f_sum), fmt(p.g_sum), fmt(p.f_limit), fmt(p.g_limit),
                    fmt(p.error)});
        emit(out, "selfadjoint_expand", ec, log);
        j["expand"] = {{"all_decreasing", r.all_decreasing},
                       {"max_coeff_imag", r.max_coeff_imag},
                       {"max_structure_residual", r.max_structure_residual},
                       {"max_conj_defect", r.max_conj_defect},
                       {"coefficients_checked", r.coefficients_checked}};
        pass = pass && r.all_decreasing;
    }
    emit(out, "selfadjoint", csv, log);
    emit(out, "selfadjoint", j, log);
    return pass ? kOk : kProperty;
}

EvenSequence parse_sequence(const json& j, std::uint64_t seed) {
    if (j.contains("random")) {
        const int K = j.at("random").value("K", 16);
        if (K < 0 || K % 2 != 0) throw ConfigError("random sequence K must be even and nonnegative");
        std::mt19937_64 rng(seed);
        std::normal_distribution<double> nd;
        EvenSequence s(K);
        for (auto& z : s.v) z = {nd(rng), nd(rng)};
        return s;
    }
    const int K = io::parse_int_list(json::array({j.at("K")})).front();
    if (K < 0 || K % 2 != 0) throw ConfigError("sequence K must be even and nonnegative");
    EvenSequence s(K);
    for (const auto& t : j.at("coeffs")) {
        const int k = t.at(0).get<int>();
        if (k % 2 != 0 || std::abs(k) > K) throw ConfigError("sequence index must be even with |k| <= K");
        s.at(k) = {t.at(1).get<double>(), t.size() > 2 ? t.at(2).get<double>() : 0.0};
    }
    return s;
}

json sequence_json(const EvenSequence& s) {
    json a = json::array();
    for (int k = -s.K; k <= s.K; k += 2) a.push_back({k, s.at(k).real(), s.at(k).imag()});
    return a;
}

int cmd_hilbert(const json& cfg, const fs::path& out, std::uint64_t seed, std::ostream& log) {
    const WeightSeq w = io::parse_weight(cfg.at("weight"));
    const long n_max = cfg.value("n_max", 1024L);
    if (n_max < 1) throw ConfigError("n_max must be positive");
    const WeightAxioms ax = check_weight_axioms(w, cfg.value("axiom_kmax", 100000L));
    const MuckenhouptReport mr = muckenhoupt_sup(w, n_max);
    json running = json::array();
    for (const auto& [n, s] : mr.running) running.push_back({n, s});
    json j{{"weight", {{"kind", w.name()}, {"param", w.param}}},
           {"axioms",
            {{"normalized", ax.normalized}, {"symmetric", ax.symmetric}, {"monotone", ax.monotone},
             {"doubling_C", ax.doubling_C}, {"growth_C", ax.growth_C}, {"kmax", ax.kmax}}},
           {"muckenhoupt",
            {{"sup", mr.sup}, {"arg_k", mr.arg_k}, {"arg_n", mr.arg_n}, {"k_range", {mr.k_lo, mr.k_hi}},
             {"n_max", mr.n_max}, {"running", running}, {"last_ratio", mr.last_ratio},
             {"stabilizes", mr.stabilizes}, {"grows", mr.grows}, {"case_b_max", mr.case_b_max},
             {"case_b_bound", mr.case_b_bound}}}};
    io::Csv csv({"k", "re", "im"});
    if (cfg.contains("sequence")) {
        const EvenSequence xi = parse_sequence(cfg.at("sequence"), seed);
        const int K_out = cfg.at("sequence").value("K_out", xi.K);
        const EvenSequence h = hilbert(xi, K_out);
        for (int k = -h.K; k <= h.K; k += 2) csv.row({std::to_string(k), fmt(h.at(k).real()), fmt(h.at(k).imag())});
        j["hilbert"] = {{"norm_in", weighted_norm(xi, w)}, {"norm_out", weighted_norm(h, w)}};
        if (cfg.contains("multiply")) {
            const json& m = cfg.at("multiply");
            const MultiplierReport r = multiply_in_weighted_space(xi, io::parse_function(m.at("g")), w,
                                                                  m.value("K_out", -1), m.value("K_g", 64));
            j["multiply"] = {{"slope", r.slope}, {"norm_in", r.norm_in}, {"norm_out", r.norm_out},
                             {"ratio", r.ratio}, {"product", sequence_json(r.product)}};
        }
        emit(out, "hilbert", csv, log);
    }
    emit(out, "hilbert", j, log);
    return kOk;
}

}  // namespace

const std::vector<std::string>& commands() {
    static const std::vector<std::string> c{"classify", "basis", "spectrum", "expand", "equiconv", "selfadjoint",
                                            "hilbert"};
    return c;
}

int run_command(const std::string& command, const json& config, const fs::path& out, std::uint64_t seed,
                std::ostream& log) {
    try {
        if (command == "classify") return cmd_classify(config, out, log);
        if (command == "basis") return cmd_basis(config, out, log);
        if (command == "spectrum") return cmd_spectrum(config, out, log);
        if (command == "expand") return cmd_expand(config, out, log);
        if (command == "equiconv") return cmd_equiconv(config, out, log);
        if (command == "selfadjoint") return cmd_selfadjoint(config, out, log);
        if (command == "hilbert") return cmd_hilbert(config, out, seed, log);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    throw ConfigError("unknown command \"" + command + "\"");
}

int main(int argc, char** argv) {
    CLI::App app{"Spectral decompositions of one-dimensional Dirac operators"};
    std::string command, config, out = ".";
    std::uint64_t seed = 0;
    app.add_option("command", command, "command to run")->required()->check(CLI::IsMember(commands()));
    app.add_option("--config", config, "JSON problem configuration")->required();
    app.add_option("--out", out, "output directory");
    app.add_option("--seed", seed, "seed for randomized inputs");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kConfig;
    }
    try {
        std::cerr << "simd: " << kernels::isa_name(kernels::active_isa()) << "\n";
        return run_command(command, io::read_json_file(config), out, seed, std::cerr);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kNumerical;
    }
}

}  // namespace dirac::cli
