#pragma once

#include "hhgq/config.hpp"

#include <utility>
#include <vector>

namespace hhgq {

enum class Band { valence, conduction };

/// Two-band cosine-expansion dispersion with a k-dependent interband dipole
/// of Kane form. All quantities in atomic units; energies are periodic in k
/// with period 2*pi / lattice_a, so any k is accepted.
struct BandModel {
    double lattice_a = 0.0;
    std::vector<double> alpha_v; // cosine coefficients, j = 0,1,...
    std::vector<double> alpha_c;
    double e_g = 0.0;    // gap at the zone center
    double kane_ep = 0.0;

    double energy(Band band, double k) const;
    double group_velocity(Band band, double k) const; // analytic dE/dk
    double gap(double k) const { return energy(Band::conduction, k) - energy(Band::valence, k); }

    /// Interband dipole d_vc(k) = sqrt(Ep / (2 gap(k)^2)), real and positive.
    double dipole_vc(double k) const;

    double zone_half_width() const; // pi / lattice_a
};

struct GapExtrema {
    double min_gap = 0.0;
    double max_gap = 0.0;
    double argmin_k = 0.0;
    double argmax_k = 0.0;
};

/// Extrema of the direct gap over the Brillouin zone (dense-grid scan,
/// grid includes the zone center and edge exactly).
GapExtrema bandgap_extrema(const BandModel& model, int n_scan = 10000);

/// Band edges (min, max) of one band over the zone, same scan.
std::pair<double, double> band_range(const BandModel& model, Band band, int n_scan = 10000);

/// ZnO preset for the requested axis, with gap and Kane parameter taken
/// from the config (both are exposed there because published values differ).
BandModel zno_model(const SimulationConfig& cfg);
BandModel zno_model(Direction dir, double e_g, double ep_x, double ep_z);

} // namespace hhgq
