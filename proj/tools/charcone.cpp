// charcone: command-line front end.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "charcone/error.hpp"
#include "charcone/evolution.hpp"
#include "charcone/gfn_io.hpp"
#include "charcone/parallel.hpp"
#include "charcone/pauli_jordan.hpp"
#include "charcone/seminorms.hpp"
#include "charcone/testfn_json.hpp"
#include "charcone/transform.hpp"
#include "charcone/verify.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace charcone;

namespace {

constexpr const char* kVersion = "1.0.0";

enum Exit { kOk = 0, kFail = 1, kUsage = 2, kIo = 3 };

struct Flags {
    std::string config;
    std::string out;
    std::string input;
    std::string times;
    std::string direction;
    std::string suite = "all";
    int n = 0;
    double m = 0.0;
    double xplus = 0.0;
    double tol = 0.0;
    int level = 0;
    int threads = 0;
    bool compare = false;
    bool has_xplus = false;
    bool has_times = false;
};

// -- configuration ----------------------------------------------------------------

json load_config(const std::string& path) {
    if (path.empty()) return json::object();
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config '" + path + "'");
    try {
        json j = json::parse(in);
        if (!j.is_object()) throw FormatError("config: top level must be an object");
        return j;
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("config: malformed JSON: ") + e.what());
    }
}

template <class T>
T cfg(const json& c, const std::string& ptr, T fallback) {
    const json::json_pointer jp(ptr);
    if (!c.contains(jp)) return fallback;
    try {
        return c.at(jp).get<T>();
    } catch (const json::exception&) {
        throw FormatError("config" + ptr + ": wrong type");
    }
}

std::vector<double> parse_times(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.find_first_not_of(" \t") == std::string::npos) continue;
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw DomainError("--times: cannot parse '" + item + "'");
        }
    }
    return out;
}

/// Flags override config entries; the merged object is what the manifest records.
json effective_config(const Flags& f) {
    json c = load_config(f.config);
    if (f.n > 0) c["model"]["n"] = f.n;
    if (f.m > 0.0) c["model"]["m"] = f.m;
    if (f.level > 0) c["level"] = f.level;
    if (f.tol > 0.0) c["tol"] = f.tol;
    if (f.threads > 0) c["threads"] = f.threads;
    if (f.has_xplus) c["xplus"] = f.xplus;
    if (f.has_times) c["times"] = parse_times(f.times);
    if (!c.contains("model")) c["model"] = json::object();
    if (!c["model"].contains("n")) c["model"]["n"] = 1;
    if (!c["model"].contains("m")) c["model"]["m"] = 1.0;
    return c;
}

ModelParams model(const json& c) {
    try {
        return ModelParams::make(cfg<double>(c, "/model/m", 1.0), cfg<int>(c, "/model/n", 1));
    } catch (const DomainError& e) {
        throw FormatError(std::string("config/model: ") + e.what());
    }
}

Grid grid_from_config(const json& c, const std::string& key, const ModelParams& P, GridKind kind,
                      std::size_t count, double step) {
    const std::string base = "/" + key;
    std::vector<std::size_t> counts(static_cast<std::size_t>(P.n), count);
    std::vector<double> steps(static_cast<std::size_t>(P.n), step);
    const json::json_pointer jc(base + "/count"), js(base + "/step");
    if (c.contains(jc)) {
        if (c.at(jc).is_number()) counts.assign(counts.size(), cfg<std::size_t>(c, base + "/count", count));
        else counts = cfg<std::vector<std::size_t>>(c, base + "/count", counts);
    }
    if (c.contains(js)) {
        if (c.at(js).is_number()) steps.assign(steps.size(), cfg<double>(c, base + "/step", step));
        else steps = cfg<std::vector<double>>(c, base + "/step", steps);
    }
    if (counts.size() != static_cast<std::size_t>(P.n) || steps.size() != static_cast<std::size_t>(P.n))
        throw FormatError("config" + base + ": need one count and one step per axis (n = " + std::to_string(P.n) + ")");
    std::vector<AxisSpec> axes;
    for (std::size_t d = 0; d < counts.size(); ++d) {
        const bool half = d == 0 && kind == GridKind::lc_momentum;
        axes.push_back(half ? AxisSpec::half_step(steps[d], counts[d]) : AxisSpec::centered(steps[d], counts[d]));
    }
    try {
        return make_grid(P, kind, std::move(axes));
    } catch (const DomainError& e) {
        throw FormatError("config" + base + ": " + e.what());
    }
}

std::size_t default_count(int n) { return n == 1 ? 512 : (n == 2 ? 64 : 24); }
double default_momentum_step(int n) { return n == 1 ? 0.05 : 0.4; }

TestFunctionSpec spec_at(const json& c, const std::string& ptr, TestFunctionSpec fallback) {
    const json::json_pointer jp(ptr);
    if (!c.contains(jp)) return fallback;
    return spec_from_json(c.at(jp), "config" + ptr);
}

std::vector<double> zeros(int n) { return std::vector<double>(static_cast<std::size_t>(n), 0.0); }

CauchyData cauchy_from_config(const json& c, const ModelParams& P, json* used) {
    std::vector<int> poly(static_cast<std::size_t>(P.n), 0);
    poly[0] = 1;
    const auto u0 = spec_at(c, "/cauchy/u0_hat", TestFunctionSpec::gaussian(zeros(P.n), 1.0));
    const auto u1 = spec_at(c, "/cauchy/u1_hat", TestFunctionSpec::gauss_hermite(zeros(P.n), 1.0, poly));
    if (u0.dim() != P.n || u1.dim() != P.n) throw FormatError("config/cauchy: spec dimension must equal n");
    if (used != nullptr) *used = {{"u0_hat", spec_to_json(u0)}, {"u1_hat", spec_to_json(u1)}};
    return {Density::from_spec(u0), Density::from_spec(u1), P};
}

// -- output ---------------------------------------------------------------------

fs::path prepare_out(const std::string& out) {
    if (out.empty()) return {};
    std::error_code ec;
    fs::create_directories(out, ec);
    if (ec) throw IoError("cannot create output directory '" + out + "': " + ec.message());
    return fs::path(out);
}

void write_json(const fs::path& path, const json& j) {
    std::ofstream o(path, std::ios::trunc);
    if (!o) throw IoError("cannot write '" + path.string() + "'");
    o << j.dump(2) << '\n';
    if (!o) throw IoError("write to '" + path.string() + "' failed");
}

/// Tolerances the tool checks against, recorded in every manifest.
json base_tolerances() {
    return {{"squeeze_inverse", 1e-12},      {"cauchy_roundtrip", 1e-13},   {"transform_roundtrip", 1e-8},
            {"pairing_identity_rel", 1e-8},  {"pauli_jordan_n1", 1e-8},     {"pauli_jordan_n3", 1e-6},
            {"kg_residual_order", 1.9},      {"tame_derivative_rel", 1e-6}, {"dft_inversion", 1e-11},
            {"seminorm_bounded_growth", kBoundedGrowth}, {"seminorm_divergent_growth", kDivergentGrowth}};
}

void write_manifest(const fs::path& dir, const std::string& command, const json& config, const json& tolerances,
                    const json& outputs, const json& results) {
    if (dir.empty()) return;
    json tol = base_tolerances();
    tol.update(tolerances);
    if (config.contains("tol")) tol["override"] = config["tol"];
    write_json(dir / "manifest.json", {{"tool", "charcone"},
                                       {"version", kVersion},
                                       {"command", command},
                                       {"config", config},
                                       {"tolerances", tol},
                                       {"outputs", outputs},
                                       {"results", results}});
}

void emit(const fs::path& dir, const std::string& stem, const GridFunction& gf, json& outputs) {
    if (dir.empty()) return;
    write_gfn(gf, dir / (stem + ".gfn"));
    to_csv(gf, dir / (stem + ".csv"));
    outputs.push_back(stem + ".gfn");
    outputs.push_back(stem + ".csv");
}

void apply_threads(const json& c) {
    const int t = cfg<int>(c, "/threads", 0);
    if (t < 0) throw FormatError("config/threads: must be >= 0");
    if (t > 0) set_thread_count(t);
}

// -- subcommands ----------------------------------------------------------------

int cmd_evolve(const Flags& f) {
    json c = effective_config(f);
    apply_threads(c);
    const ModelParams P = model(c);
    const Grid pos = grid_from_config(c, "position_grid", P, GridKind::minkowski_position, default_count(P.n),
                                      P.n == 1 ? 0.125 : 0.5);
    const auto times = cfg<std::vector<double>>(c, "/times", {});
    json used;
    const CauchyData data = cauchy_from_config(c, P, &used);
    c["cauchy"] = used;
    const MassShellDensityM msd = from_cauchy(data);
    const Grid mom = reciprocal_grid(pos, TransformConvention::euclid);
    const fs::path dir = prepare_out(f.out);
    json outputs = json::array();
    json results = json::object();
    for (std::size_t i = 0; i < times.size(); ++i) {
        const EvolvedProfile prof = evolve_profile(msd, times[i], mom);
        const GridFunction slice = dft(prof.profile, TransformConvention::euclid_inverse);
        emit(dir, "profile_t" + std::to_string(i), prof.profile, outputs);
        if (!dir.empty()) {
            to_csv(slice, dir / ("slice_t" + std::to_string(i) + ".csv"));
            outputs.push_back("slice_t" + std::to_string(i) + ".csv");
        }
        std::cout << "t=" << format_double(times[i]) << " max|u|=" << format_double(sup_norm(slice.values())) << '\n';
    }
    if (times.size() >= 5) {
        const KgResidual r = kg_residual(msd, pos, times);
        results["kg_residual"] = {{"relative", r.relative}, {"max_u", r.max_u}, {"degenerate", r.degenerate}};
        std::cout << "kg_residual=" << format_double(r.relative) << '\n';
    } else {
        results["kg_residual"] = nullptr;
    }
    write_manifest(dir, "evolve", c, json::object(), outputs, results);
    return kOk;
}

int cmd_restrict(const Flags& f) {
    json c = effective_config(f);
    apply_threads(c);
    const ModelParams P = model(c);
    const Grid lc = grid_from_config(c, "lc_grid", P, GridKind::lc_momentum, default_count(P.n), default_momentum_step(P.n));
    json used;
    const CauchyData data = cauchy_from_config(c, P, &used);
    c["cauchy"] = used;
    const double xplus = cfg<double>(c, "/xplus", 0.0);
    const MassShellDensityLC msd = lc_from_m(from_cauchy(data), lc);
    const CharacteristicData restricted = tame_restrict(msd);
    const fs::path dir = prepare_out(f.out);
    json outputs = json::array();
    emit(dir, "u0_lc_hat", restricted.u0_lc_hat.grid_function(), outputs);
    const EvolvedProfile prof = tame_profile(msd, xplus);
    emit(dir, "tame_profile", prof.profile, outputs);
    std::cout << "restricted " << lc.size() << " nodes; sup|u0_lc_hat|="
              << format_double(sup_norm(restricted.u0_lc_hat.grid_function().values())) << " xplus=" << format_double(xplus)
              << '\n';
    write_manifest(dir, "restrict", c, json::object(), outputs, json::object());
    return kOk;
}

int cmd_convert(const Flags& f) {
    if (f.direction != "m2lc" && f.direction != "lc2m") throw DomainError("--direction must be m2lc or lc2m");
    json c = effective_config(f);
    apply_threads(c);
    const fs::path dir = prepare_out(f.out);
    json outputs = json::array();
    json results = json::object();

    if (f.direction == "m2lc") {
        const ModelParams P = model(c);
        const Grid mom = grid_from_config(c, "momentum_grid", P, GridKind::minkowski_momentum, default_count(P.n),
                                          default_momentum_step(P.n));
        const Grid lc = grid_from_config(c, "lc_grid", P, GridKind::lc_momentum, default_count(P.n),
                                         default_momentum_step(P.n));
        json used;
        const CauchyData data = cauchy_from_config(c, P, &used);
        c["cauchy"] = used;
        const CharacteristicData ch = convert_m_to_lc(data, lc);
        emit(dir, "input_u0_hat", data.u0_hat.sample(mom), outputs);
        emit(dir, "input_u1_hat", data.u1_hat.sample(mom), outputs);
        emit(dir, "u0_lc_hat", ch.u0_lc_hat.grid_function(), outputs);
        if (!dir.empty()) {
            write_json(dir / "conversion.json", {{"direction", "m2lc"},
                                                 {"model", {{"m", P.m}, {"n", P.n}}},
                                                 {"cauchy", used},
                                                 {"momentum_grid", grid_to_json(mom)},
                                                 {"lc_grid", grid_to_json(lc)}});
            outputs.push_back("conversion.json");
        }
        std::cout << "m2lc: " << lc.size() << " lc nodes, sup|u0_lc_hat|="
                  << format_double(sup_norm(ch.u0_lc_hat.grid_function().values())) << '\n';
    } else {
        CharacteristicData ch;
        Grid mom;
        if (f.input.empty()) {
            const ModelParams P = model(c);
            mom = grid_from_config(c, "momentum_grid", P, GridKind::minkowski_momentum, default_count(P.n),
                                   default_momentum_step(P.n));
            if (!c.contains(json::json_pointer("/characteristic/u0_lc_hat")))
                throw FormatError("config/characteristic/u0_lc_hat: required for lc2m without --input");
            const auto spec = spec_from_json(c.at(json::json_pointer("/characteristic/u0_lc_hat")),
                                             "config/characteristic/u0_lc_hat");
            ch = {Density::from_spec(spec), P};
        } else if (fs::path(f.input).extension() == ".gfn") {
            const GridFunction g = read_gfn(f.input);
            if (g.grid().kind != GridKind::lc_momentum) throw FormatError("--input: expected an lc-momentum grid");
            const ModelParams P = g.grid().params;
            mom = grid_from_config(c, "momentum_grid", P, GridKind::minkowski_momentum, default_count(P.n),
                                   default_momentum_step(P.n));
            ch = {Density::from_grid(g), P};
            c["model"] = {{"m", P.m}, {"n", P.n}};
        } else {
            const json side = load_config(f.input);
            if (cfg<std::string>(side, "/direction", "") != "m2lc")
                throw FormatError("--input: not a conversion sidecar written by m2lc");
            const ModelParams P = model(side);
            mom = grid_from_json(side.at("momentum_grid"));
            const auto u0 = spec_from_json(side.at(json::json_pointer("/cauchy/u0_hat")), "input/cauchy/u0_hat");
            const auto u1 = spec_from_json(side.at(json::json_pointer("/cauchy/u1_hat")), "input/cauchy/u1_hat");
            ch = convert_m_to_lc(CauchyData{Density::from_spec(u0), Density::from_spec(u1), P});
            c["model"] = side.at("model");
            c["input"] = f.input;
        }
        const CauchyData data = convert_lc_to_m(ch, mom);
        emit(dir, "u0_hat", data.u0_hat.grid_function(), outputs);
        emit(dir, "u1_hat", data.u1_hat.grid_function(), outputs);
        std::cout << "lc2m: " << mom.size() << " nodes, sup|u0_hat|="
                  << format_double(sup_norm(data.u0_hat.grid_function().values())) << " sup|u1_hat|="
                  << format_double(sup_norm(data.u1_hat.grid_function().values())) << '\n';
    }
    write_manifest(dir, "convert", c, json::object(), outputs, results);
    return kOk;
}

int cmd_pauli_jordan(const Flags& f) {
    json c = effective_config(f);
    apply_threads(c);
    const ModelParams P = model(c);
    QuadOptions q;
    q.level = cfg<int>(c, "/level", P.n == 1 ? 7 : 4);
    const double tol = cfg<double>(c, "/tol", P.n == 1 ? 1e-8 : 1e-6);
    std::vector<int> poly(static_cast<std::size_t>(P.n), 0);
    poly[0] = 1;
    const auto probe = spec_at(c, "/probe",
                               TestFunctionSpec::scaled(-2.0, TestFunctionSpec::gauss_hermite(zeros(P.n), std::sqrt(0.5), poly)));
    if (probe.dim() != P.n) throw FormatError("config/probe: dimension must equal n");
    c["probe"] = spec_to_json(probe);
    const QuadResult eq = pj_pairing_quadrature(probe, P, q);
    const QuadResult cf = pj_pairing_closed_form(probe, P, q);
    auto show = [](const cplx& v) { return format_double(v.real()) + (v.imag() < 0 ? "-" : "+") + format_double(std::abs(v.imag())) + "i"; };
    std::cout << "momentum_route=" << show(eq.value) << " (richardson " << format_double(eq.error_estimate) << ")\n";
    std::cout << "position_route=" << show(cf.value) << " (richardson " << format_double(cf.error_estimate) << ")\n";
    json results{{"momentum_route", complex_to_json(eq.value)}, {"position_route", complex_to_json(cf.value)}};
    int code = kOk;
    if (f.compare) {
        const double delta = std::abs(eq.value - cf.value);
        const bool pass = delta <= tol;
        std::cout << (pass ? "PASS" : "FAIL") << " |delta|=" << format_double(delta) << " tol=" << format_double(tol) << '\n';
        results["delta"] = delta;
        results["pass"] = pass;
        code = pass ? kOk : kFail;
    }
    write_manifest(prepare_out(f.out), "pauli-jordan", c, {{"compare", tol}}, json::array(), results);
    return code;
}

int cmd_verify(const Flags& f) {
    json c = effective_config(f);
    apply_threads(c);
    const ModelParams P = model(c);
    VerifyOptions o;
    o.n = P.n;
    o.m = P.m;
    o.level = cfg<int>(c, "/level", 0);
    o.tol = cfg<double>(c, "/tol", 0.0);
    const auto checks = run_suite(f.suite, o);
    bool all = true;
    json rows = json::array();
    json tolerances = json::object();
    for (const auto& r : checks) {
        std::cout << format_check(r) << '\n';
        all = all && r.pass;
        tolerances[r.suite + "/" + r.name] = r.tolerance;
        rows.push_back({{"suite", r.suite}, {"name", r.name}, {"measured", r.measured}, {"pass", r.pass}});
    }
    const fs::path dir = prepare_out(f.out);
    json outputs = json::array();
    if (!dir.empty()) {
        std::ofstream csv(dir / "certificates.csv", std::ios::trunc);
        if (!csv) throw IoError("cannot write certificates.csv");
        csv << "suite,check,measured,relation,tolerance,pass\n";
        for (const auto& r : checks)
            csv << r.suite << ',' << r.name << ',' << format_double(r.measured) << ',' << r.relation << ','
                << format_double(r.tolerance) << ',' << (r.pass ? "true" : "false") << '\n';
        outputs.push_back("certificates.csv");
    }
    c["suite"] = f.suite;
    write_manifest(dir, "verify", c, tolerances, outputs, {{"checks", rows}, {"pass", all}});
    return all ? kOk : kFail;
}

int cmd_seminorm(const Flags& f) {
    json c = effective_config(f);
    apply_threads(c);
    const ModelParams P = model(c);
    const auto spec = spec_at(c, "/seminorm/spec",
                              TestFunctionSpec::pullback(Sheet::plus, TestFunctionSpec::gaussian(zeros(P.n), 1.0), P.m));
    if (spec.dim() != P.n) throw FormatError("config/seminorm/spec: dimension must equal n");
    c["seminorm"]["spec"] = spec_to_json(spec);
    const int kmin = cfg<int>(c, "/seminorm/k_min", -8);
    const int kmax = cfg<int>(c, "/seminorm/k_max", 8);
    const int amax = cfg<int>(c, "/seminorm/alpha_max", 2);
    if (kmin > kmax || amax < 0 || amax > 2) throw FormatError("config/seminorm: need k_min <= k_max and 0 <= alpha_max <= 2");
    Grid base;
    if (c.contains("lc_grid")) {
        base = grid_from_config(c, "lc_grid", P, GridKind::lc_momentum, 600, 0.02);
    } else {
        std::vector<AxisSpec> axes{AxisSpec::half_step(0.02, 600)};
        for (int d = 1; d < P.n; ++d) axes.push_back(AxisSpec::centered(1.0, P.n == 2 ? 9 : 5));
        base = make_grid(P, GridKind::lc_momentum, std::move(axes));
    }
    const auto ladder = refinement_ladder(base, 3, 11);
    const std::vector<int> beta0(static_cast<std::size_t>(P.n - 1), 0);
    const fs::path dir = prepare_out(f.out);
    std::ostringstream table;
    table << "k,alpha0,level0,level1,level2,max_growth,certificate\n";
    bool all = true;
    for (int k = kmin; k <= kmax; ++k) {
        for (int a = 0; a <= amax; ++a) {
            std::vector<int> alpha(static_cast<std::size_t>(P.n), 0);
            alpha[0] = a;
            const auto cert = ladder_certificate(ladder, [&](const Grid& g) { return squeezed_seminorm(spec, k, beta0, alpha, g); });
            const char* verdict = cert.bounded ? "bounded" : (cert.divergent ? "divergent" : "inconclusive");
            all = all && cert.bounded;
            table << k << ',' << a;
            for (double v : cert.values) table << ',' << format_double(v);
            table << ',' << format_double(cert.max_growth) << ',' << verdict << '\n';
        }
    }
    std::cout << table.str();
    std::cout << (all ? "squeezed up to order " : "not certified up to order ") << std::max(std::abs(kmin), std::abs(kmax))
              << " at p+ step " << format_double(ladder.back().axes.front().step) << '\n';
    json outputs = json::array();
    if (!dir.empty()) {
        std::ofstream o(dir / "seminorms.csv", std::ios::trunc);
        if (!o) throw IoError("cannot write seminorms.csv");
        o << table.str();
        outputs.push_back("seminorms.csv");
    }
    write_manifest(dir, "seminorm", c, {{"bounded_growth", kBoundedGrowth}, {"divergent_growth", kDivergentGrowth}},
                   outputs, {{"certified", all}});
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Klein-Gordon solutions in Minkowski and light-cone coordinates"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);
    Flags f;

    auto common = [&](CLI::App* s) {
        s->add_option("--config", f.config, "JSON configuration file");
        s->add_option("--out", f.out, "output directory");
        s->add_option("--n", f.n, "spatial dimension")->check(CLI::Range(1, 3));
        s->add_option("--m", f.m, "mass")->check(CLI::PositiveNumber);
        s->add_option("--level", f.level, "quadrature level")->check(CLI::Range(1, 12));
        s->add_option("--tol", f.tol, "tolerance override")->check(CLI::PositiveNumber);
        s->add_option("--threads", f.threads, "worker threads (default: CHARCONE_THREADS or all cores)")
            ->check(CLI::PositiveNumber);
    };
    auto* evolve = app.add_subcommand("evolve", "evolve Cauchy data and write time slices");
    common(evolve);
    evolve->add_option("--times", f.times, "comma-separated x0 values")->each([&](const std::string&) { f.has_times = true; });
    auto* restrict_cmd = app.add_subcommand("restrict", "tame restriction of a solution to x+ = 0");
    common(restrict_cmd);
    restrict_cmd->add_option("--xplus", f.xplus, "x+ of the exported tame profile")->each([&](const std::string&) { f.has_xplus = true; });
    auto* convert = app.add_subcommand("convert", "convert between Cauchy and characteristic data");
    common(convert);
    convert->add_option("--direction", f.direction, "m2lc or lc2m")->required()->check(CLI::IsMember({"m2lc", "lc2m"}));
    convert->add_option("--input", f.input, "lc2m input: conversion.json from m2lc, or a .gfn lc-momentum file");
    auto* pj = app.add_subcommand("pauli-jordan", "pair the restricted Pauli-Jordan function with a probe");
    common(pj);
    pj->add_flag("--compare", f.compare, "compare the momentum and position routes");
    auto* verify = app.add_subcommand("verify", "run invariant suites");
    common(verify);
    verify->add_option("--suite", f.suite, "suite name")
        ->check(CLI::IsMember({"roundtrip", "seminorms", "multiplicators", "transform2", "pauli-jordan", "all"}));
    auto* seminorm = app.add_subcommand("seminorm", "squeezed seminorm certificates for a test function");
    common(seminorm);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*evolve) return cmd_evolve(f);
        if (*restrict_cmd) return cmd_restrict(f);
        if (*convert) return cmd_convert(f);
        if (*pj) return cmd_pauli_jordan(f);
        if (*verify) return cmd_verify(f);
        if (*seminorm) return cmd_seminorm(f);
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const IoError& e) {
        std::cerr << "I/O error: " << e.what() << '\n';
        return kIo;
    } catch (const NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << '\n';
        return kFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFail;
    }
    return kUsage;
}
