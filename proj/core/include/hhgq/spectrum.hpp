#pragma once

#include "hhgq/config.hpp"
#include "hhgq/currents.hpp"

#include <complex>
#include <span>
#include <vector>

namespace hhgq {

/// In-place radix-2 decimation-in-time FFT; size must be a power of two.
void fft_inplace(std::vector<std::complex<double>>& data);

/// O(n^2) reference DFT, kept as the independent check for fft_inplace.
std::vector<std::complex<double>> dft_reference(std::span<const std::complex<double>> data);

/// Window samples for an n-point grid (periodic Hann, or all-ones).
std::vector<double> window_samples(WindowKind kind, int n);

/// One-sided emission spectrum, axis in harmonic orders omega / omega_l.
/// `total` is the spectrum of the coherent current sum; the component
/// columns share the total's dB reference so they stay comparable.
struct SpectrumTrace {
    double omega_l = 0.0;
    double d_order = 0.0; // order spacing between FFT bins
    std::vector<double> order;
    std::vector<double> total_db;
    std::vector<double> inter_db;
    std::vector<double> intra_db;
};

/// omega^2 |FT[j_ter + j_tra]|^2 with the configured window. When
/// derivative_in_freq is set, j_ter is formed as i*omega * FT[p] instead of
/// the time-domain centered difference (cross-check route).
SpectrumTrace hhg_spectrum(const CurrentTrace& trace, const TimeGrid& tgrid, double omega_l,
                           WindowKind window, bool derivative_in_freq = false);

/// Comb peak level: max dB within +-0.25 order of `order`.
double peak_db(const SpectrumTrace& spec, const std::vector<double>& column, double order);

/// Valley level between comb peaks: max dB within +-0.1 order of the two
/// half-integer midpoints flanking an odd order.
double interharmonic_floor_db(const SpectrumTrace& spec, const std::vector<double>& column,
                              double odd_order);

/// Largest odd order whose peak stays within `drop_db` of the strongest
/// plateau peak at or above `min_order`.
double cutoff_order(const SpectrumTrace& spec, const std::vector<double>& column, double min_order,
                    double drop_db = 20.0);

} // namespace hhgq
