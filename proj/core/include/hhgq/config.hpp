#pragma once

#include <cmath>
#include <filesystem>
#include <limits>
#include <string>

namespace hhgq {

enum class Direction { gamma_m, gamma_a };
enum class EnvelopeKind { gaussian, sin2 };
enum class WindowKind { hann, none };
enum class FwhmConvention { field, intensity };

std::string to_string(Direction d);
std::string to_string(EnvelopeKind e);
std::string to_string(WindowKind w);
std::string to_string(FwhmConvention f);

/// Run parameters as read from a key = value config file. Lab-unit fields
/// keep their file units; omega_l() / e0_au() / t2_au() hand out the
/// atomic-unit values everything downstream uses.
struct SimulationConfig {
    Direction direction = Direction::gamma_m;
    double e_g_au = 0.1213;
    double ep_x_au = 0.355;
    double ep_z_au = 0.479;
    double lambda_um = 3.25;
    double e0_v_per_angstrom = 0.5;
    double n_cycles = 9.0;
    EnvelopeKind envelope = EnvelopeKind::gaussian;
    FwhmConvention fwhm_of = FwhmConvention::field;
    double cep = 0.0;
    double span_fwhm = 4.5; // half-span of the time grid in units of the field FWHM
    double t2_fs = std::numeric_limits<double>::infinity();
    int n_k = 201;
    int n_t = 8192;
    int q_cutoff = 17;
    double n_z = 6.6e6;
    double g0 = 1.16e-7; // effective fundamental-mode coupling, see `hhgq calibrate`
    WindowKind window = WindowKind::hann;

    bool t2_infinite() const { return !std::isfinite(t2_fs); }

    double omega_l() const;   // carrier angular frequency, a.u.
    double e0_au() const;     // peak field, a.u.
    double t2_au() const;     // dephasing time, a.u. (may be +inf)
    double fwhm_au() const;   // field-envelope FWHM, a.u.

    /// Kane parameter of the active axis, a.u.
    double kane_ep() const { return direction == Direction::gamma_m ? ep_x_au : ep_z_au; }
};

/// Parse a flat key = value document. Unknown keys, malformed values and
/// violated invariants all throw ConfigError naming the offending key.
SimulationConfig parse_config(const std::string& text, const std::string& source_name);

/// parse_config over the contents of `path`; missing file throws ConfigError.
SimulationConfig load_config(const std::filesystem::path& path);

/// Apply a single `key=value` override on top of an existing config.
void apply_override(SimulationConfig& cfg, const std::string& assignment);

/// Re-check all invariants (called by the parser; public for overrides).
void validate_config(const SimulationConfig& cfg);

/// Canonical key = value rendering (used for the run manifest snapshot).
std::string render_config(const SimulationConfig& cfg);

} // namespace hhgq
