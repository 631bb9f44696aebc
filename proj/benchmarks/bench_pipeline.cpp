#include "hhgq/fock_oracle.hpp"
#include "hhgq/pipeline.hpp"
#include "hhgq/sbe.hpp"
#include "hhgq/spectrum.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace hhgq;

namespace {

PipelineContext default_context() {
    SimulationConfig cfg;
    return make_context(cfg);
}

void BM_SolveTrajectory(benchmark::State& state) {
    const auto ctx = default_context();
    const double K = 0.3 * ctx.model.zone_half_width();
    for (auto _ : state) {
        auto traj = solve_tdse(ctx.model, ctx.pulse, K, ctx.grids.time);
        benchmark::DoNotOptimize(traj.b_c.data());
    }
}
BENCHMARK(BM_SolveTrajectory)->Unit(benchmark::kMillisecond);

void BM_Fft8192(benchmark::State& state) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<std::complex<double>> sig(8192);
    for (auto& c : sig) c = {u(rng), u(rng)};
    for (auto _ : state) {
        auto buf = sig;
        fft_inplace(buf);
        benchmark::DoNotOptimize(buf.data());
    }
}
BENCHMARK(BM_Fft8192)->Unit(benchmark::kMicrosecond);

void BM_DisplacementRow(benchmark::State& state) {
    const auto ctx = default_context();
    const auto traj = solve_trajectory(ctx.model, ctx.pulse, 0.1, ctx.cfg.t2_au(), ctx.grids.time);
    MatrixElementTables tables;
    tables.n_k = 1;
    tables.n_t = ctx.grids.time.n;
    tables.inter.resize(tables.n_t);
    tables.intra.resize(tables.n_t);
    matrix_elements_row(traj, ctx.model, ctx.pulse, ctx.grids.time, tables, 0);
    PerKDisplacements chi;
    chi.n_k = 1;
    chi.n_modes = ctx.modes.q_cutoff;
    chi.inter.resize(chi.n_modes);
    chi.intra.resize(chi.n_modes);
    for (auto _ : state) {
        mode_displacement_row(tables, 0, ctx.envelopes, ctx.modes, ctx.grids.time, chi);
        benchmark::DoNotOptimize(chi.inter.data());
    }
}
BENCHMARK(BM_DisplacementRow)->Unit(benchmark::kMicrosecond);

void BM_WignerMap(benchmark::State& state) {
    ModeDisplacements disp;
    disp.chi = {{1.4, 0.2}, {0.5, -0.1}};
    const auto st = condition_ir(disp);
    WignerGridSpec grid{6.0, 0.125};
    for (auto _ : state) {
        auto map = wigner(st, 1, grid, 1);
        benchmark::DoNotOptimize(map.w.data());
    }
}
BENCHMARK(BM_WignerMap)->Unit(benchmark::kMillisecond);

void BM_WignerFockOracle(benchmark::State& state) {
    ModeDisplacements disp;
    disp.chi = {{1.4, 0.2}};
    const auto st = condition_ir(disp);
    const auto mode = reduce_mode(st.branches, 1);
    for (auto _ : state) {
        const double w = wigner_fock_oracle(mode, {0.7, -0.3});
        benchmark::DoNotOptimize(w);
    }
}
BENCHMARK(BM_WignerFockOracle)->Unit(benchmark::kMicrosecond);

} // namespace

BENCHMARK_MAIN();
