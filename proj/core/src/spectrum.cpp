#include "hhgq/spectrum.hpp"

#include "hhgq/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hhgq {

void fft_inplace(std::vector<std::complex<double>>& data) {
    const std::size_t n = data.size();
    if (n == 0 || (n & (n - 1)) != 0)
        throw NumericError("fft_inplace: size must be a power of two");
    // Bit-reversal permutation.
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(data[i], data[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = -2.0 * std::numbers::pi / static_cast<double>(len);
        const std::complex<double> wlen = std::polar(1.0, ang);
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w{1.0, 0.0};
            for (std::size_t j = 0; j < len / 2; ++j) {
                const auto u = data[i + j];
                const auto v = data[i + j + len / 2] * w;
                data[i + j] = u + v;
                data[i + j + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
}

std::vector<std::complex<double>> dft_reference(std::span<const std::complex<double>> data) {
    const std::size_t n = data.size();
    std::vector<std::complex<double>> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::complex<double> acc{0.0, 0.0};
        for (std::size_t j = 0; j < n; ++j)
            acc += data[j] * std::polar(1.0, -2.0 * std::numbers::pi *
                                                 static_cast<double>(k * j % n) /
                                                 static_cast<double>(n));
        out[k] = acc;
    }
    return out;
}

std::vector<double> window_samples(WindowKind kind, int n) {
    std::vector<double> w(n, 1.0);
    if (kind == WindowKind::hann) {
        for (int i = 0; i < n; ++i)
            w[i] = 0.5 * (1.0 - std::cos(2.0 * std::numbers::pi * i / static_cast<double>(n)));
    }
    return w;
}

namespace {

std::vector<std::complex<double>> windowed_fft(const std::vector<double>& signal,
                                               const std::vector<double>& window) {
    std::vector<std::complex<double>> buf(signal.size());
    for (std::size_t i = 0; i < signal.size(); ++i) buf[i] = signal[i] * window[i];
    fft_inplace(buf);
    return buf;
}

constexpr double db_floor_power = 1e-300;

} // namespace

SpectrumTrace hhg_spectrum(const CurrentTrace& trace, const TimeGrid& tgrid, double omega_l,
                           WindowKind window, bool derivative_in_freq) {
    const int n = tgrid.n;
    if (static_cast<int>(trace.j_tra.size()) != n)
        throw NumericError("hhg_spectrum: trace length does not match the time grid");
    const auto win = window_samples(window, n);

    const auto ft_tra = windowed_fft(trace.j_tra, win);
    std::vector<std::complex<double>> ft_ter;
    if (derivative_in_freq) {
        ft_ter = windowed_fft(trace.p, win);
        const double d_omega = 2.0 * std::numbers::pi / tgrid.span();
        for (int k = 0; k <= n / 2; ++k)
            ft_ter[k] *= std::complex<double>{0.0, d_omega * k};
    } else {
        ft_ter = windowed_fft(trace.j_ter, win);
    }

    SpectrumTrace spec;
    spec.omega_l = omega_l;
    const double d_omega = 2.0 * std::numbers::pi / tgrid.span();
    spec.d_order = d_omega / omega_l;
    const int n_bins = n / 2 + 1;
    spec.order.resize(n_bins);
    std::vector<double> p_total(n_bins), p_inter(n_bins), p_intra(n_bins);
    for (int k = 0; k < n_bins; ++k) {
        const double omega = d_omega * k;
        spec.order[k] = omega / omega_l;
        const double w2 = omega * omega;
        // Total from the coherent sum of the currents, not the sum of spectra.
        p_total[k] = w2 * std::norm(ft_ter[k] + ft_tra[k]);
        p_inter[k] = w2 * std::norm(ft_ter[k]);
        p_intra[k] = w2 * std::norm(ft_tra[k]);
    }
    const double ref = std::max(*std::max_element(p_total.begin(), p_total.end()), db_floor_power);
    auto to_db = [ref](const std::vector<double>& p) {
        std::vector<double> out(p.size());
        for (std::size_t i = 0; i < p.size(); ++i)
            out[i] = 10.0 * std::log10(std::max(p[i], db_floor_power) / ref);
        return out;
    };
    spec.total_db = to_db(p_total);
    spec.inter_db = to_db(p_inter);
    spec.intra_db = to_db(p_intra);
    return spec;
}

namespace {

double max_db_in(const SpectrumTrace& spec, const std::vector<double>& column, double lo,
                 double hi) {
    double best = -std::numeric_limits<double>::infinity();
    const int k_lo = std::max(0, static_cast<int>(std::ceil(lo / spec.d_order)));
    const int k_hi =
        std::min(static_cast<int>(column.size()) - 1, static_cast<int>(std::floor(hi / spec.d_order)));
    for (int k = k_lo; k <= k_hi; ++k) best = std::max(best, column[k]);
    return best;
}

} // namespace

double peak_db(const SpectrumTrace& spec, const std::vector<double>& column, double order) {
    return max_db_in(spec, column, order - 0.25, order + 0.25);
}

double interharmonic_floor_db(const SpectrumTrace& spec, const std::vector<double>& column,
                              double odd_order) {
    const double below = max_db_in(spec, column, odd_order - 0.6, odd_order - 0.4);
    const double above = max_db_in(spec, column, odd_order + 0.4, odd_order + 0.6);
    return std::max(below, above);
}

double cutoff_order(const SpectrumTrace& spec, const std::vector<double>& column, double min_order,
                    double drop_db) {
    const double max_order = spec.order.back();
    double plateau = -std::numeric_limits<double>::infinity();
    for (double h = std::ceil(min_order); h <= max_order - 1.0; h += 1.0) {
        if (static_cast<long long>(h) % 2 == 0) continue;
        plateau = std::max(plateau, peak_db(spec, column, h));
    }
    double cutoff = std::ceil(min_order);
    for (double h = std::ceil(min_order); h <= max_order - 1.0; h += 1.0) {
        if (static_cast<long long>(h) % 2 == 0) continue;
        if (peak_db(spec, column, h) >= plateau - drop_db) cutoff = h;
    }
    return cutoff;
}

} // namespace hhgq
