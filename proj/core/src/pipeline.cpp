#include "hhgq/pipeline.hpp"

#include "hhgq/errors.hpp"
#include "hhgq/parallel.hpp"
#include "hhgq/sbe.hpp"

#include <cmath>
#include <mutex>

namespace hhgq {

PipelineContext make_context(const SimulationConfig& cfg) {
    PipelineContext ctx;
    ctx.cfg = cfg;
    ctx.model = zno_model(cfg);
    ctx.pulse = make_pulse(cfg);
    ctx.grids = build_grids(cfg, ctx.model, ctx.pulse);
    ctx.modes = make_modes(cfg);
    ctx.envelopes = mode_envelopes(ctx.pulse, ctx.modes, ctx.grids.time);
    return ctx;
}

SweepResult run_sweep(const PipelineContext& ctx, int n_threads) {
    const auto& tgrid = ctx.grids.time;
    const auto& kgrid = ctx.grids.kspace;
    SweepResult sweep;
    sweep.tables.n_k = kgrid.n;
    sweep.tables.n_t = tgrid.n;
    sweep.tables.inter.resize(static_cast<std::size_t>(kgrid.n) * tgrid.n);
    sweep.tables.intra.resize(sweep.tables.inter.size());
    sweep.chi_k.n_k = kgrid.n;
    sweep.chi_k.n_modes = ctx.modes.q_cutoff;
    sweep.chi_k.inter.resize(static_cast<std::size_t>(kgrid.n) * ctx.modes.q_cutoff);
    sweep.chi_k.intra.resize(sweep.chi_k.inter.size());

    const double t2 = ctx.cfg.t2_au();
    std::exception_ptr first_error;
    std::mutex error_mutex;
    parallel_for(kgrid.n, n_threads, [&](int k_index) {
        try {
            const auto traj =
                solve_trajectory(ctx.model, ctx.pulse, kgrid.k(k_index), t2, tgrid);
            matrix_elements_row(traj, ctx.model, ctx.pulse, tgrid, sweep.tables, k_index);
            mode_displacement_row(sweep.tables, k_index, ctx.envelopes, ctx.modes, tgrid,
                                  sweep.chi_k);
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!first_error) first_error = std::current_exception();
        }
    });
    if (first_error) std::rethrow_exception(first_error);
    return sweep;
}

ModeDisplacements displacements(const PipelineContext& ctx, const SweepResult& sweep,
                                CurrentComponent component) {
    DisplacementMeta meta;
    meta.n_z = ctx.cfg.n_z;
    meta.g0 = ctx.cfg.g0;
    meta.t2_fs = ctx.cfg.t2_fs;
    meta.e0_v_per_angstrom = ctx.cfg.e0_v_per_angstrom;
    meta.direction = ctx.cfg.direction;
    return aggregate_displacement(sweep.chi_k, component, ctx.grids.kspace, ctx.cfg.n_z, meta);
}

CurrentTrace currents(const PipelineContext& ctx, const SweepResult& sweep) {
    return macroscopic_currents(sweep.tables, ctx.grids.kspace, ctx.grids.time);
}

SpectrumTrace spectrum(const PipelineContext& ctx, const CurrentTrace& trace,
                       bool derivative_in_freq) {
    return hhg_spectrum(trace, ctx.grids.time, ctx.cfg.omega_l(), ctx.cfg.window,
                        derivative_in_freq);
}

double calibrate_g0(const PipelineContext& ctx, const SweepResult& sweep, double target) {
    const auto disp = displacements(ctx, sweep, CurrentComponent::total);
    const double mag = std::abs(disp.chi_q(1));
    if (!(mag > 0.0))
        throw NumericError("calibrate_g0: |chi_1| vanished at the reference point");
    return ctx.cfg.g0 * target / mag;
}

} // namespace hhgq
