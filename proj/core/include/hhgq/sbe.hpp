#pragma once

#include "hhgq/bands.hpp"
#include "hhgq/grids.hpp"
#include "hhgq/pulse.hpp"

#include <complex>
#include <vector>

namespace hhgq {

enum class SolverKind { tdse, sbe };

/// Two-band amplitudes b_v, b_c at fixed canonical momentum K, sampled on
/// the shared time grid. Norm-conserving (checked to 1e-6, drift beyond
/// that throws NumericError naming the n_t that would fix it).
struct AmplitudeTrajectory {
    double K = 0.0;
    std::vector<std::complex<double>> b_v;
    std::vector<std::complex<double>> b_c;
};

/// Populations and interband coherence at fixed K. n_v + n_c = 1 holds
/// structurally in both solvers; dephasing damps only pi.
struct SBETrajectory {
    double K = 0.0;
    std::vector<double> n_v;
    std::vector<double> n_c;
    std::vector<std::complex<double>> pi;
    SolverKind provenance = SolverKind::sbe;
};

/// Internal RK4 substeps per stored grid interval; keeps the local phase
/// step below ~0.01 rad so the stored grid can stay FFT-sized.
int default_substeps(double dt);

/// Schroedinger amplitudes from b_v(t0) = 1, b_c(t0) = 0; coupling is
/// E(t) d_vc evaluated at K + A(t). Used when T2 is infinite and as the
/// cross-validation oracle for solve_sbe. substeps = 0 picks the default.
AmplitudeTrajectory solve_tdse(const BandModel& model, const PulseSpec& pulse, double K,
                               const TimeGrid& grid, int substeps = 0);

/// Bloch equations with phenomenological dephasing of the coherence:
///   d n_v/dt = +2 E d Im(pi)
///   d n_c/dt = -2 E d Im(pi)
///   d pi/dt  = -(i gap(k) + 1/T2) pi - i E d (n_v - n_c),  k = K + A(t).
/// t2_au = +inf skips the damping term exactly.
SBETrajectory solve_sbe(const BandModel& model, const PulseSpec& pulse, double K, double t2_au,
                        const TimeGrid& grid, int substeps = 0);

/// Populations/coherence view of an amplitude trajectory (provenance tdse).
SBETrajectory to_populations(const AmplitudeTrajectory& amp);

/// Dispatch: TDSE when t2 is infinite, SBE otherwise.
SBETrajectory solve_trajectory(const BandModel& model, const PulseSpec& pulse, double K,
                               double t2_au, const TimeGrid& grid, int substeps = 0);

} // namespace hhgq
