#include "hhgq/pulse.hpp"

#include <cmath>
#include <numbers>

namespace hhgq {

namespace {
constexpr double two_ln2 = 2.0 * std::numbers::ln2;
}

double PulseSpec::envelope(double t) const {
    if (kind == EnvelopeKind::gaussian) {
        const double x = t / fwhm;
        return std::exp(-two_ln2 * x * x);
    }
    // sin2: f = cos^2(pi t / (2 fwhm)) on |t| <= fwhm, zero outside.
    if (std::abs(t) >= fwhm) return 0.0;
    const double c = std::cos(0.5 * std::numbers::pi * t / fwhm);
    return c * c;
}

double PulseSpec::envelope_derivative(double t) const {
    if (kind == EnvelopeKind::gaussian)
        return -2.0 * two_ln2 * t / (fwhm * fwhm) * envelope(t);
    if (std::abs(t) >= fwhm) return 0.0;
    const double u = 0.5 * std::numbers::pi * t / fwhm;
    return -std::numbers::pi / fwhm * std::cos(u) * std::sin(u);
}

double PulseSpec::vector_potential(double t) const {
    return e0 / omega * envelope(t) * std::sin(omega * t + cep);
}

double PulseSpec::field(double t) const {
    // E = -dA/dt, expanded analytically.
    const double phase = omega * t + cep;
    return -e0 / omega * envelope_derivative(t) * std::sin(phase) -
           e0 * envelope(t) * std::cos(phase);
}

PulseSpec make_pulse(const SimulationConfig& cfg) {
    PulseSpec p;
    p.e0 = cfg.e0_au();
    p.omega = cfg.omega_l();
    p.cep = cfg.cep;
    p.kind = cfg.envelope;
    p.fwhm = cfg.fwhm_au();
    const double half_span =
        (p.kind == EnvelopeKind::sin2) ? p.fwhm : cfg.span_fwhm * p.fwhm;
    p.t_start = -half_span;
    p.t_end = half_span;
    return p;
}

ModeSet make_modes(const SimulationConfig& cfg) {
    return ModeSet{cfg.omega_l(), cfg.q_cutoff, cfg.g0};
}

EnvelopeTables mode_envelopes(const PulseSpec& pulse, const ModeSet& modes, const TimeGrid& grid) {
    EnvelopeTables tab;
    tab.n_modes = modes.q_cutoff;
    tab.n_t = grid.n;
    tab.f.resize(static_cast<std::size_t>(tab.n_modes) * grid.n);
    tab.F.resize(tab.f.size());
    for (int q = 1; q <= modes.q_cutoff; ++q) {
        const double wq = modes.omega(q);
        auto* fq = tab.f.data() + static_cast<std::size_t>(q - 1) * grid.n;
        auto* Fq = tab.F.data() + static_cast<std::size_t>(q - 1) * grid.n;
        for (int i = 0; i < grid.n; ++i) {
            const double t = grid.t(i);
            fq[i] = pulse.envelope(t) * std::polar(1.0, wq * t);
        }
        Fq[0] = 0.0;
        for (int i = 1; i < grid.n; ++i)
            Fq[i] = Fq[i - 1] + 0.5 * grid.dt * (fq[i - 1] + fq[i]);
    }
    return tab;
}

} // namespace hhgq
