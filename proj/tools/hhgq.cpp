// hhgq: config-driven pipeline runner. Subcommands cover the HHG spectrum,
// the conditioned-state observables (Wigner map, fidelity and entropy
// scans, displacements), a built-in invariant suite, and the g0
// calibration. Every run writes CSV artifacts plus a manifest.json with
// the config snapshot, derived quantities, stage timings and output
// hashes.

#include "hhgq/errors.hpp"
#include "hhgq/fock_oracle.hpp"
#include "hhgq/io.hpp"
#include "hhgq/pipeline.hpp"
#include "hhgq/sbe.hpp"
#include "hhgq/units.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <iostream>
#include <random>

using nlohmann::json;
using namespace hhgq;

namespace {

struct CommonOpts {
    std::string config_path;
    std::vector<std::string> overrides;
    std::string out_dir = ".";
    int threads = 0;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--config", opts.config_path, "Config file (key = value)")->required();
    cmd->add_option("--set", opts.overrides, "Override config entries, key=value");
    cmd->add_option("--out", opts.out_dir, "Output directory");
    cmd->add_option("--threads", opts.threads, "Worker threads (0 = hardware)");
}

SimulationConfig load(const CommonOpts& opts) {
    auto cfg = load_config(opts.config_path);
    for (const auto& ov : opts.overrides) apply_override(cfg, ov);
    return cfg;
}

class Manifest {
public:
    explicit Manifest(const SimulationConfig& cfg, const std::string& command) {
        j_["command"] = command;
        j_["config"] = json::parse(config_json(cfg));
        j_["derived"] = derived_json(cfg);
        j_["stages"] = json::array();
        j_["outputs"] = json::array();
    }

    template <class Fn>
    auto stage(const std::string& name, Fn&& fn) {
        const auto start = std::chrono::steady_clock::now();
        if constexpr (std::is_void_v<decltype(fn())>) {
            fn();
            record(name, start);
        } else {
            auto result = fn();
            record(name, start);
            return result;
        }
    }

    void emit(const std::filesystem::path& dir, const std::string& name,
              const std::string& contents) {
        write_file(dir / name, contents);
        j_["outputs"].push_back({{"file", name}, {"sha256", sha256_hex(contents)}});
        std::cout << "wrote " << (dir / name).string() << "\n";
    }

    void add(const std::string& key, const json& value) { j_["derived"][key] = value; }

    void finish(const std::filesystem::path& dir) {
        write_file(dir / "manifest.json", j_.dump(2) + "\n");
        std::cout << "wrote " << (dir / "manifest.json").string() << "\n";
    }

private:
    void record(const std::string& name, std::chrono::steady_clock::time_point start) {
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        j_["stages"].push_back({{"name", name}, {"seconds", secs}});
    }

    static std::string config_json(const SimulationConfig& cfg) {
        json c;
        c["direction"] = to_string(cfg.direction);
        c["e_g_au"] = cfg.e_g_au;
        c["ep_x_au"] = cfg.ep_x_au;
        c["ep_z_au"] = cfg.ep_z_au;
        c["lambda_um"] = cfg.lambda_um;
        c["e0_v_per_angstrom"] = cfg.e0_v_per_angstrom;
        c["n_cycles"] = cfg.n_cycles;
        c["envelope"] = to_string(cfg.envelope);
        c["fwhm_of"] = to_string(cfg.fwhm_of);
        c["cep"] = cfg.cep;
        c["span_fwhm"] = cfg.span_fwhm;
        c["t2_fs"] = cfg.t2_infinite() ? json("inf") : json(cfg.t2_fs);
        c["n_k"] = cfg.n_k;
        c["n_t"] = cfg.n_t;
        c["q_cutoff"] = cfg.q_cutoff;
        c["n_z"] = cfg.n_z;
        c["g0"] = cfg.g0;
        c["window"] = to_string(cfg.window);
        return c.dump();
    }

    static json derived_json(const SimulationConfig& cfg) {
        const auto model = zno_model(cfg);
        const auto ext = bandgap_extrema(model);
        const double wl = cfg.omega_l();
        json d;
        d["omega_l_au"] = wl;
        d["e0_au"] = cfg.e0_au();
        d["fwhm_fs"] = units::au_to_fs(cfg.fwhm_au());
        d["min_gap_au"] = ext.min_gap;
        d["max_gap_au"] = ext.max_gap;
        d["min_gap_order"] = ext.min_gap / wl;
        d["max_gap_order"] = ext.max_gap / wl;
        d["g0"] = cfg.g0;
        return d;
    }

    json j_;
};

CurrentComponent parse_component(const std::string& name) {
    if (name == "total") return CurrentComponent::total;
    if (name == "inter") return CurrentComponent::interband;
    if (name == "intra") return CurrentComponent::intraband;
    throw ConfigError("--component must be total, inter or intra, got '" + name + "'");
}

std::vector<double> linspace(double from, double to, int points) {
    if (points < 2) return {from};
    std::vector<double> xs(points);
    for (int i = 0; i < points; ++i)
        xs[i] = from + (to - from) * static_cast<double>(i) / static_cast<double>(points - 1);
    return xs;
}

int run_spectrum(const CommonOpts& opts, int dump_k) {
    const auto cfg = load(opts);
    Manifest manifest(cfg, "spectrum");
    const auto ctx = manifest.stage("setup", [&] { return make_context(cfg); });
    const auto sweep = manifest.stage("sbe_sweep", [&] { return run_sweep(ctx, opts.threads); });
    const auto trace = manifest.stage("currents", [&] { return currents(ctx, sweep); });
    const auto spec = manifest.stage("spectrum", [&] { return spectrum(ctx, trace); });
    const std::filesystem::path dir(opts.out_dir);
    manifest.emit(dir, "spectrum.csv", spectrum_csv(spec));
    manifest.emit(dir, "current.csv", current_csv(trace, ctx.grids.time));
    if (dump_k >= 0) {
        if (dump_k >= ctx.grids.kspace.n)
            throw ConfigError("--dump-k index out of range (n_k = " +
                              std::to_string(ctx.grids.kspace.n) + ")");
        const auto traj = solve_trajectory(ctx.model, ctx.pulse, ctx.grids.kspace.k(dump_k),
                                           cfg.t2_au(), ctx.grids.time);
        manifest.emit(dir, "trajectory_k" + std::to_string(dump_k) + ".csv",
                      trajectory_csv(traj, ctx.grids.time));
    }
    manifest.finish(dir);
    return 0;
}

int run_wigner(const CommonOpts& opts, const std::string& component, double step,
               double half_size) {
    const auto cfg = load(opts);
    Manifest manifest(cfg, "wigner");
    const auto ctx = manifest.stage("setup", [&] { return make_context(cfg); });
    const auto sweep = manifest.stage("sbe_sweep", [&] { return run_sweep(ctx, opts.threads); });
    const auto disp = displacements(ctx, sweep, parse_component(component));
    const auto state = condition_ir(disp);
    auto grid = default_wigner_grid(state, 1);
    if (step > 0.0) grid.step = step;
    if (half_size > 0.0) grid.half_size = half_size;
    const auto map =
        manifest.stage("wigner_map", [&] { return wigner(state, 1, grid, opts.threads); });
    if (map.undersized)
        std::cerr << "warning: Wigner grid smaller than state support + 4\n";
    manifest.add("chi_1_abs", std::abs(disp.chi_q(1)));
    manifest.add("xi_ir", state.xi_ir);
    manifest.add("xi_uv", state.xi_uv);
    manifest.add("wigner_min", map.min_value());
    manifest.add("wigner_integral", map.integral());
    const std::filesystem::path dir(opts.out_dir);
    manifest.emit(dir, "wigner.csv", wigner_csv(map));
    manifest.finish(dir);
    return 0;
}

int run_fidelity(const CommonOpts& opts, const std::string& axis, double from, double to,
                 int points) {
    const auto base_cfg = load(opts);
    if (axis != "e0" && axis != "t2") throw ConfigError("--axis must be e0 or t2");
    Manifest manifest(base_cfg, "fidelity");
    const auto xs = linspace(from, to, points);
    std::vector<double> f_fock(xs.size()), f_coh(xs.size());
    manifest.stage("scan", [&] {
        for (std::size_t i = 0; i < xs.size(); ++i) {
            auto cfg = base_cfg;
            if (axis == "e0")
                cfg.e0_v_per_angstrom = xs[i];
            else
                cfg.t2_fs = xs[i];
            const auto ctx = make_context(cfg);
            const auto sweep = run_sweep(ctx, opts.threads);
            const auto disp = displacements(ctx, sweep, CurrentComponent::total);
            const auto state = condition_ir(disp);
            f_fock[i] = fidelity_fock1(state);
            f_coh[i] = fidelity_coherent(state, disp.chi_q(1));
        }
    });
    const std::string axis_name = axis == "e0" ? "e0_v_per_angstrom" : "t2_fs";
    const std::filesystem::path dir(opts.out_dir);
    Manifest& m = manifest;
    m.emit(dir, "fidelity_scan.csv", scan_csv(axis_name, {"f_fock", "f_coherent"}, xs,
                                              {f_fock, f_coh}));
    m.finish(dir);
    return 0;
}

int run_entropy(const CommonOpts& opts, const std::string& axis, const std::string& component,
                int mode, double from, double to, int points) {
    const auto base_cfg = load(opts);
    const auto comp = parse_component(component);
    Manifest manifest(base_cfg, "entropy");
    const std::filesystem::path dir(opts.out_dir);
    if (axis == "q") {
        const auto ctx = manifest.stage("setup", [&] { return make_context(base_cfg); });
        const auto sweep =
            manifest.stage("sbe_sweep", [&] { return run_sweep(ctx, opts.threads); });
        const auto disp = displacements(ctx, sweep, comp);
        const auto state = condition_full(disp);
        std::vector<double> qs, s_lin;
        manifest.stage("entropy", [&] {
            for (int q = 1; q <= state.n_modes(); ++q) {
                qs.push_back(static_cast<double>(q));
                s_lin.push_back(linear_entropy(state, q));
            }
        });
        manifest.emit(dir, "entropy_scan.csv", scan_csv("q", {"s_lin"}, qs, {s_lin}));
        manifest.finish(dir);
        return 0;
    }
    if (axis != "e0" && axis != "t2") throw ConfigError("--axis must be q, e0 or t2");
    const auto xs = linspace(from, to, points);
    std::vector<double> s_lin(xs.size());
    manifest.stage("scan", [&] {
        for (std::size_t i = 0; i < xs.size(); ++i) {
            auto cfg = base_cfg;
            if (axis == "e0")
                cfg.e0_v_per_angstrom = xs[i];
            else
                cfg.t2_fs = xs[i];
            const auto ctx = make_context(cfg);
            const auto sweep = run_sweep(ctx, opts.threads);
            const auto state = condition_full(displacements(ctx, sweep, comp));
            s_lin[i] = linear_entropy(state, mode);
        }
    });
    const std::string axis_name = axis == "e0" ? "e0_v_per_angstrom" : "t2_fs";
    manifest.emit(dir, "entropy_scan.csv", scan_csv(axis_name, {"s_lin"}, xs, {s_lin}));
    manifest.finish(dir);
    return 0;
}

int run_displacement(const CommonOpts& opts, const std::string& component) {
    const auto cfg = load(opts);
    Manifest manifest(cfg, "displacement");
    const auto ctx = manifest.stage("setup", [&] { return make_context(cfg); });
    const auto sweep = manifest.stage("sbe_sweep", [&] { return run_sweep(ctx, opts.threads); });
    const auto disp = displacements(ctx, sweep, parse_component(component));
    manifest.add("chi_1_abs", std::abs(disp.chi_q(1)));
    const std::filesystem::path dir(opts.out_dir);
    manifest.emit(dir, "displacements.csv", displacements_csv(disp));
    manifest.finish(dir);
    return 0;
}

int run_calibrate(const CommonOpts& opts, double target) {
    auto cfg = load(opts);
    // Reference operating point for the coupling calibration.
    cfg.e0_v_per_angstrom = 0.5;
    cfg.t2_fs = std::numeric_limits<double>::infinity();
    cfg.direction = Direction::gamma_m;
    cfg.n_z = 6.6e6;
    Manifest manifest(cfg, "calibrate");
    const auto ctx = manifest.stage("setup", [&] { return make_context(cfg); });
    const auto sweep = manifest.stage("sbe_sweep", [&] { return run_sweep(ctx, opts.threads); });
    const double g0_new =
        manifest.stage("calibrate", [&] { return calibrate_g0(ctx, sweep, target); });
    const auto disp = displacements(ctx, sweep, CurrentComponent::total);
    std::printf("reference |chi_1| at g0 = %.6e: %.6f\n", cfg.g0, std::abs(disp.chi_q(1)));
    std::printf("calibrated g0 = %.6e (target |chi_1| = %.3f)\n", g0_new, target);
    manifest.add("g0_calibrated", g0_new);
    manifest.add("target_chi_1", target);
    json cal;
    cal["g0"] = g0_new;
    cal["target_chi_1"] = target;
    cal["reference"] = {{"e0_v_per_angstrom", 0.5}, {"t2_fs", "inf"},
                        {"direction", "gm"}, {"n_z", 6.6e6}};
    const std::filesystem::path dir(opts.out_dir);
    write_file(dir / "calibration.json", cal.dump(2) + "\n");
    std::cout << "wrote " << (dir / "calibration.json").string() << "\n";
    manifest.finish(dir);
    return 0;
}

// Built-in invariant suite: each check is a cheap, self-contained
// cross-validation of one numerical pillar.
int run_validate(const CommonOpts& opts) {
    auto cfg = load(opts);
    struct Row {
        std::string name;
        double value;
        double gate;
        bool pass;
    };
    std::vector<Row> rows;
    auto check = [&](const std::string& name, double value, double gate) {
        rows.push_back({name, value, gate, value <= gate});
    };

    // Small grids keep the suite quick; the acceptance tests cover defaults.
    auto quick = cfg;
    quick.n_t = std::min(cfg.n_t, 4096);
    const auto ctx = make_context(quick);
    const double k_probe = 0.3 * ctx.model.zone_half_width();

    {
        const auto amp = solve_tdse(ctx.model, ctx.pulse, k_probe, ctx.grids.time);
        double worst = 0.0;
        for (std::size_t i = 0; i < amp.b_v.size(); ++i)
            worst = std::max(worst,
                             std::abs(std::norm(amp.b_v[i]) + std::norm(amp.b_c[i]) - 1.0));
        check("tdse_norm_conservation", worst, 1e-8);

        const auto sbe = solve_sbe(ctx.model, ctx.pulse, k_probe,
                                   std::numeric_limits<double>::infinity(), ctx.grids.time);
        const auto ref = to_populations(amp);
        double diff = 0.0;
        for (std::size_t i = 0; i < sbe.n_c.size(); ++i)
            diff = std::max(diff, std::abs(sbe.n_c[i] - ref.n_c[i]));
        check("sbe_vs_tdse_populations", diff, 1e-6);
    }

    {
        std::mt19937_64 rng(7);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        std::vector<std::complex<double>> sig(256);
        for (auto& c : sig) c = {u(rng), u(rng)};
        auto fast = sig;
        fft_inplace(fast);
        const auto slow = dft_reference(sig);
        double diff = 0.0;
        for (std::size_t i = 0; i < sig.size(); ++i) diff = std::max(diff, std::abs(fast[i] - slow[i]));
        check("fft_vs_dft", diff, 1e-10);
    }

    {
        std::mt19937_64 rng(11);
        std::uniform_real_distribution<double> u(-1.5, 1.5);
        double worst = 0.0;
        for (int trial = 0; trial < 5; ++trial) {
            BranchState st;
            st.n_modes = 1;
            st.amps = {{{u(rng), u(rng)}}, {{u(rng), u(rng)}}};
            st.coeffs = {{u(rng), u(rng)}, {u(rng), u(rng)}};
            const auto mode = reduce_mode(st, 1);
            for (int i = -2; i <= 2; ++i)
                for (int j = -2; j <= 2; ++j) {
                    const std::complex<double> beta{0.7 * i, 0.7 * j};
                    worst = std::max(worst, std::abs(wigner_point(mode, beta) -
                                                     wigner_fock_oracle(mode, beta)));
                }
        }
        check("wigner_analytic_vs_fock", worst, 1e-8);
    }

    {
        std::mt19937_64 rng(13);
        std::uniform_real_distribution<double> u(-1.2, 1.2);
        double worst = 0.0;
        for (int trial = 0; trial < 3; ++trial) {
            BranchState st;
            st.n_modes = 3;
            st.amps = {{{u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng), u(rng)}},
                       {{0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}}};
            st.coeffs = {{1.0, 0.0}, {u(rng), u(rng)}};
            for (int q = 1; q <= 3; ++q) {
                const double gram = purity(reduce_mode(st, q));
                const double fock = purity_fock_oracle(st, q, 40);
                worst = std::max(worst, std::abs(gram - fock));
            }
        }
        check("gram_purity_vs_fock", worst, 1e-10);
    }

    bool all_pass = true;
    std::printf("%-28s %14s %10s  %s\n", "check", "value", "gate", "status");
    for (const auto& r : rows) {
        std::printf("%-28s %14.3e %10.0e  %s\n", r.name.c_str(), r.value, r.gate,
                    r.pass ? "pass" : "FAIL");
        all_pass = all_pass && r.pass;
    }
    if (!all_pass) throw NumericError("validation suite failed");
    std::printf("all checks passed\n");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Semiconductor HHG quantum-optics pipeline"};
    app.require_subcommand(1);

    CommonOpts opts;
    int dump_k = -1;
    std::string component = "total";
    std::string axis = "e0";
    double from = 0.2, to = 0.6;
    int points = 9;
    int mode = 1;
    double wigner_step = 0.0, wigner_half = 0.0;
    double target = 1.5;

    auto* spectrum_cmd = app.add_subcommand("spectrum", "HHG spectrum and current traces");
    add_common(spectrum_cmd, opts);
    spectrum_cmd->add_option("--dump-k", dump_k, "Also dump the trajectory at this K index");

    auto* wigner_cmd = app.add_subcommand("wigner", "Wigner map of the conditioned fundamental");
    add_common(wigner_cmd, opts);
    wigner_cmd->add_option("--component", component, "total | inter | intra");
    wigner_cmd->add_option("--step", wigner_step, "Phase-space grid step");
    wigner_cmd->add_option("--half-size", wigner_half, "Phase-space half width");

    auto* fidelity_cmd = app.add_subcommand("fidelity", "Fidelity scan vs E0 or T2");
    add_common(fidelity_cmd, opts);
    fidelity_cmd->add_option("--axis", axis, "e0 | t2");
    fidelity_cmd->add_option("--from", from, "Scan start");
    fidelity_cmd->add_option("--to", to, "Scan end");
    fidelity_cmd->add_option("--points", points, "Scan points");

    auto* entropy_cmd = app.add_subcommand("entropy", "Linear entropy scan vs q, E0 or T2");
    add_common(entropy_cmd, opts);
    entropy_cmd->add_option("--axis", axis, "q | e0 | t2");
    entropy_cmd->add_option("--component", component, "total | inter | intra");
    entropy_cmd->add_option("--mode", mode, "Harmonic mode for e0/t2 scans");
    entropy_cmd->add_option("--from", from, "Scan start");
    entropy_cmd->add_option("--to", to, "Scan end");
    entropy_cmd->add_option("--points", points, "Scan points");

    auto* disp_cmd = app.add_subcommand("displacement", "Aggregated mode displacements");
    add_common(disp_cmd, opts);
    disp_cmd->add_option("--component", component, "total | inter | intra");

    auto* validate_cmd = app.add_subcommand("validate", "Run the built-in invariant suite");
    add_common(validate_cmd, opts);

    auto* calibrate_cmd = app.add_subcommand("calibrate", "Fix g0 at the reference point");
    add_common(calibrate_cmd, opts);
    calibrate_cmd->add_option("--target", target, "Target |chi_1| at the reference point");

    CLI11_PARSE(app, argc, argv);

    try {
        if (spectrum_cmd->parsed()) return run_spectrum(opts, dump_k);
        if (wigner_cmd->parsed()) return run_wigner(opts, component, wigner_step, wigner_half);
        if (fidelity_cmd->parsed()) return run_fidelity(opts, axis, from, to, points);
        if (entropy_cmd->parsed()) {
            if (!entropy_cmd->count("--axis")) axis = "q";
            return run_entropy(opts, axis, component, mode, from, to, points);
        }
        if (disp_cmd->parsed()) return run_displacement(opts, component);
        if (validate_cmd->parsed()) return run_validate(opts);
        if (calibrate_cmd->parsed()) return run_calibrate(opts, target);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const NumericError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 2;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
