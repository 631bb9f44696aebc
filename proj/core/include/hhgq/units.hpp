#pragma once

#include <numbers>

// Atomic-unit conversions. Everything inside the library runs in Hartree
// atomic units (hbar = e = m_e = 1); lab units appear only at the config
// and report boundaries.

namespace hhgq::units {

inline constexpr double hartree_ev = 27.211386245988;
inline constexpr double bohr_angstrom = 0.529177210903;
inline constexpr double au_time_fs = 2.4188843265857e-2;
inline constexpr double au_field_v_per_angstrom = 51.4220674763;
inline constexpr double speed_of_light_au = 137.035999084;

inline constexpr double ev_to_au(double ev) { return ev / hartree_ev; }
inline constexpr double au_to_ev(double au) { return au * hartree_ev; }

inline constexpr double v_per_angstrom_to_au(double f) { return f / au_field_v_per_angstrom; }
inline constexpr double au_to_v_per_angstrom(double f) { return f * au_field_v_per_angstrom; }

inline constexpr double fs_to_au(double t) { return t / au_time_fs; }
inline constexpr double au_to_fs(double t) { return t * au_time_fs; }

inline constexpr double um_to_au(double um) { return um * 1.0e4 / bohr_angstrom; }
inline constexpr double au_to_um(double au) { return au * bohr_angstrom * 1.0e-4; }

/// Angular carrier frequency (a.u.) of light with vacuum wavelength in micrometers.
inline constexpr double omega_from_wavelength_um(double lambda_um) {
    return 2.0 * std::numbers::pi * speed_of_light_au / um_to_au(lambda_um);
}

/// Optical period (a.u.) of a carrier with angular frequency omega (a.u.).
inline constexpr double optical_period(double omega) {
    return 2.0 * std::numbers::pi / omega;
}

} // namespace hhgq::units
