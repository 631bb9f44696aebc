#pragma once

#include "hhgq/config.hpp"
#include "hhgq/grids.hpp"

#include <complex>
#include <span>
#include <vector>

namespace hhgq {

/// Linearly polarized driving pulse. The vector potential is the analytic
/// primitive: A(t) = (E0/omega) f(t) sin(omega t + cep), and the field is
/// its exact derivative, so A vanishes at both grid ends and the field
/// integrates to zero over the pulse by construction.
struct PulseSpec {
    double e0 = 0.0;      // peak field, a.u.
    double omega = 0.0;   // carrier, a.u.
    double cep = 0.0;
    EnvelopeKind kind = EnvelopeKind::gaussian;
    double fwhm = 0.0;    // field-envelope FWHM, a.u.
    double t_start = 0.0; // grid span; envelope is negligible outside
    double t_end = 0.0;

    double envelope(double t) const;            // f(t) in [0, 1]
    double envelope_derivative(double t) const; // df/dt
    double vector_potential(double t) const;    // A(t)
    double field(double t) const;               // E(t) = -dA/dt
    double peak_vector_potential() const { return e0 / omega; }
};

PulseSpec make_pulse(const SimulationConfig& cfg);

/// Harmonic mode comb q = 1..q_cutoff at omega_q = q * omega_l with
/// couplings g(omega_q) = g0 sqrt(q) (g grows as sqrt(omega)).
struct ModeSet {
    double omega_l = 0.0;
    int q_cutoff = 0;
    double g0 = 0.0;

    double omega(int q) const { return static_cast<double>(q) * omega_l; }
    double coupling(int q) const { return g0 * std::sqrt(static_cast<double>(q)); }
};

ModeSet make_modes(const SimulationConfig& cfg);

/// Per-mode envelope tables on the shared time grid:
/// f_q(t) = f(t) exp(i omega_q t) and its running integral F_q with
/// F_q(t0) = 0 (cumulative trapezoid).
struct EnvelopeTables {
    int n_modes = 0;
    int n_t = 0;
    std::vector<std::complex<double>> f; // [ (q-1)*n_t + i ]
    std::vector<std::complex<double>> F;

    std::span<const std::complex<double>> f_q(int q) const {
        return {f.data() + static_cast<std::size_t>(q - 1) * n_t, static_cast<std::size_t>(n_t)};
    }
    std::span<const std::complex<double>> F_q(int q) const {
        return {F.data() + static_cast<std::size_t>(q - 1) * n_t, static_cast<std::size_t>(n_t)};
    }
};

EnvelopeTables mode_envelopes(const PulseSpec& pulse, const ModeSet& modes, const TimeGrid& grid);

} // namespace hhgq
