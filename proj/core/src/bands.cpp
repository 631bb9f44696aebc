#include "hhgq/bands.hpp"

#include "hhgq/errors.hpp"

#include <cmath>
#include <numbers>

namespace hhgq {

namespace {

// Nonlocal-EPM cosine coefficients for crystalline ZnO, x axis (Gamma-M)
// and z axis (Gamma-A). Lattice constants in bohr. Kept as constexpr
// arrays so models built from them never race static initialization.
constexpr double zno_a_x = 5.32;
constexpr double zno_a_z = 9.83;
constexpr std::array<double, 6> zno_valence_x{-0.0928, 0.0705, 0.0200, -0.0012, 0.0029, 0.0006};
constexpr std::array<double, 6> zno_conduction_x{0.0898, -0.0814, -0.0024, -0.0048, -0.0003,
                                                 -0.0009};
constexpr std::array<double, 2> zno_valence_z{-0.0059, 0.0059};
constexpr std::array<double, 2> zno_conduction_z{0.0435, -0.0435};

double cosine_series(const std::vector<double>& alpha, double ka) {
    double e = 0.0;
    for (std::size_t j = 0; j < alpha.size(); ++j)
        e += alpha[j] * std::cos(static_cast<double>(j) * ka);
    return e;
}

double cosine_series_derivative(const std::vector<double>& alpha, double ka, double a) {
    double v = 0.0;
    for (std::size_t j = 1; j < alpha.size(); ++j)
        v -= alpha[j] * static_cast<double>(j) * a * std::sin(static_cast<double>(j) * ka);
    return v;
}

} // namespace

double BandModel::energy(Band band, double k) const {
    const double ka = k * lattice_a;
    if (band == Band::valence) return cosine_series(alpha_v, ka);
    return e_g + cosine_series(alpha_c, ka);
}

double BandModel::group_velocity(Band band, double k) const {
    const double ka = k * lattice_a;
    const auto& alpha = (band == Band::valence) ? alpha_v : alpha_c;
    return cosine_series_derivative(alpha, ka, lattice_a);
}

double BandModel::dipole_vc(double k) const {
    const double eg = gap(k);
    return std::sqrt(kane_ep / (2.0 * eg * eg));
}

double BandModel::zone_half_width() const { return std::numbers::pi / lattice_a; }

GapExtrema bandgap_extrema(const BandModel& model, int n_scan) {
    GapExtrema ext;
    const double kmax = model.zone_half_width();
    ext.min_gap = std::numeric_limits<double>::infinity();
    ext.max_gap = -std::numeric_limits<double>::infinity();
    // Scan [0, pi/a] inclusive; the gap is even in k.
    for (int i = 0; i <= n_scan; ++i) {
        const double k = kmax * static_cast<double>(i) / static_cast<double>(n_scan);
        const double g = model.gap(k);
        if (g < ext.min_gap) { ext.min_gap = g; ext.argmin_k = k; }
        if (g > ext.max_gap) { ext.max_gap = g; ext.argmax_k = k; }
    }
    if (!(ext.min_gap > 0.0))
        throw NumericError("band model gap closes inside the Brillouin zone");
    return ext;
}

std::pair<double, double> band_range(const BandModel& model, Band band, int n_scan) {
    const double kmax = model.zone_half_width();
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (int i = 0; i <= n_scan; ++i) {
        const double k = kmax * static_cast<double>(i) / static_cast<double>(n_scan);
        const double e = model.energy(band, k);
        lo = std::min(lo, e);
        hi = std::max(hi, e);
    }
    return {lo, hi};
}

BandModel zno_model(Direction dir, double e_g, double ep_x, double ep_z) {
    BandModel m;
    if (dir == Direction::gamma_m) {
        m.lattice_a = zno_a_x;
        m.alpha_v.assign(zno_valence_x.begin(), zno_valence_x.end());
        m.alpha_c.assign(zno_conduction_x.begin(), zno_conduction_x.end());
        m.kane_ep = ep_x;
    } else {
        m.lattice_a = zno_a_z;
        m.alpha_v.assign(zno_valence_z.begin(), zno_valence_z.end());
        m.alpha_c.assign(zno_conduction_z.begin(), zno_conduction_z.end());
        m.kane_ep = ep_z;
    }
    m.e_g = e_g;
    return m;
}

BandModel zno_model(const SimulationConfig& cfg) {
    return zno_model(cfg.direction, cfg.e_g_au, cfg.ep_x_au, cfg.ep_z_au);
}

} // namespace hhgq
