#pragma once

#include "hhgq/bands.hpp"
#include "hhgq/config.hpp"

namespace hhgq {

/// Uniform samples t_i = t0 + i dt, i = 0..n-1. The nominal span end
/// t0 + n dt is not sampled (FFT convention).
struct TimeGrid {
    double t0 = 0.0;
    double dt = 0.0;
    int n = 0;

    double t(int i) const { return t0 + dt * static_cast<double>(i); }
    double t_end() const { return t0 + dt * static_cast<double>(n); }
    double span() const { return dt * static_cast<double>(n); }
};

/// Uniform K samples covering exactly one Brillouin zone, symmetric about
/// K = 0 (n odd): K_j = (j - (n-1)/2) dK with dK = 2 pi / (a n).
struct KGrid {
    double dk = 0.0;
    int n = 0;

    double k(int j) const { return dk * (static_cast<double>(j) - 0.5 * static_cast<double>(n - 1)); }
    int center_index() const { return (n - 1) / 2; }
    /// Index of -K_j on the symmetric grid.
    int mirror_index(int j) const { return n - 1 - j; }
};

struct Grids {
    TimeGrid time;
    KGrid kspace;
};

struct PulseSpec;

/// Deterministic grid construction. Throws ConfigError when q_cutoff is not
/// resolvable at the requested n_t (Nyquist with a safety factor of 2),
/// naming the minimum power-of-two n_t that would be.
Grids build_grids(const SimulationConfig& cfg, const BandModel& model, const PulseSpec& pulse);

/// Highest harmonic order representable on the grid: pi / (dt * omega_l).
double nyquist_order(const TimeGrid& grid, double omega_l);

} // namespace hhgq
