#pragma once

#include "hhgq/bands.hpp"
#include "hhgq/config.hpp"
#include "hhgq/currents.hpp"
#include "hhgq/grids.hpp"
#include "hhgq/pulse.hpp"
#include "hhgq/qoptics.hpp"
#include "hhgq/spectrum.hpp"

namespace hhgq {

/// Everything derived from a config that the per-K sweep shares read-only.
struct PipelineContext {
    SimulationConfig cfg;
    BandModel model;
    PulseSpec pulse;
    Grids grids;
    ModeSet modes;
    EnvelopeTables envelopes;
};

PipelineContext make_context(const SimulationConfig& cfg);

/// Output of the embarrassingly parallel K sweep: matrix-element tables and
/// per-K displacement integrals, stored per K index so results are
/// independent of scheduling.
struct SweepResult {
    MatrixElementTables tables;
    PerKDisplacements chi_k;
};

SweepResult run_sweep(const PipelineContext& ctx, int n_threads);

/// Aggregated displacements for the requested current component.
ModeDisplacements displacements(const PipelineContext& ctx, const SweepResult& sweep,
                                CurrentComponent component);

/// Currents and spectrum from the same sweep.
CurrentTrace currents(const PipelineContext& ctx, const SweepResult& sweep);
SpectrumTrace spectrum(const PipelineContext& ctx, const CurrentTrace& trace,
                       bool derivative_in_freq = false);

/// g0 that puts |chi_1| at `target` for this config (displacements are
/// exactly linear in g0).
double calibrate_g0(const PipelineContext& ctx, const SweepResult& sweep, double target);

} // namespace hhgq
