#include "hhgq/grids.hpp"

#include "hhgq/errors.hpp"
#include "hhgq/pulse.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace hhgq {

double nyquist_order(const TimeGrid& grid, double omega_l) {
    return std::numbers::pi / (grid.dt * omega_l);
}

Grids build_grids(const SimulationConfig& cfg, const BandModel& model, const PulseSpec& pulse) {
    Grids g;
    g.time.t0 = pulse.t_start;
    g.time.n = cfg.n_t;
    g.time.dt = (pulse.t_end - pulse.t_start) / static_cast<double>(cfg.n_t);

    constexpr double nyquist_margin = 2.0;
    const double q_nyq = nyquist_order(g.time, cfg.omega_l());
    if (q_nyq < nyquist_margin * static_cast<double>(cfg.q_cutoff)) {
        const double dt_needed =
            std::numbers::pi / (nyquist_margin * cfg.q_cutoff * cfg.omega_l());
        const double n_needed = (pulse.t_end - pulse.t_start) / dt_needed;
        int n_min = 1;
        while (static_cast<double>(n_min) < n_needed) n_min *= 2;
        throw ConfigError("config key 'q_cutoff': harmonic order " + std::to_string(cfg.q_cutoff) +
                          " not resolvable at n_t = " + std::to_string(cfg.n_t) +
                          " (Nyquist order " + std::to_string(q_nyq) +
                          "); minimum n_t = " + std::to_string(n_min));
    }

    // Grid must cover the full pulse: envelope below 1e-8 of peak at the ends.
    const double tail = std::max(pulse.envelope(g.time.t0), pulse.envelope(g.time.t(g.time.n - 1)));
    if (tail >= 1e-8)
        throw ConfigError("config key 'span_fwhm': envelope at the grid ends is " +
                          std::to_string(tail) + " of peak (must be < 1e-8); widen span_fwhm");

    g.kspace.n = cfg.n_k;
    g.kspace.dk = 2.0 * std::numbers::pi / (model.lattice_a * static_cast<double>(cfg.n_k));
    return g;
}

} // namespace hhgq
