#include "hhgq/bands.hpp"
#include "hhgq/units.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace hhgq;

namespace {
const BandModel gm = zno_model(Direction::gamma_m, 0.1213, 0.355, 0.479);
const BandModel ga = zno_model(Direction::gamma_a, 0.1213, 0.355, 0.479);
} // namespace

TEST_CASE("zone-center arithmetic: coefficient sums cancel") {
    CHECK(std::abs(gm.energy(Band::valence, 0.0)) < 1e-12);
    CHECK(std::abs(gm.gap(0.0) - gm.e_g) < 1e-12);
    CHECK(std::abs(ga.energy(Band::valence, 0.0)) < 1e-12);
    CHECK(std::abs(ga.gap(0.0) - ga.e_g) < 1e-12);
}

TEST_CASE("zone-edge valence energy is the alternating coefficient sum") {
    const double k_edge = gm.zone_half_width();
    CHECK(gm.energy(Band::valence, k_edge) == doctest::Approx(-0.1398).epsilon(1e-10));
    const auto [lo, hi] = band_range(gm, Band::valence);
    CHECK(hi - lo == doctest::Approx(0.1398).epsilon(1e-10));
    CHECK(hi == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
}

TEST_CASE("flat valence band along the z axis") {
    const auto [lo, hi] = band_range(ga, Band::valence);
    CHECK(hi - lo == doctest::Approx(0.0118).epsilon(1e-10));
    const auto [lo_m, hi_m] = band_range(gm, Band::valence);
    CHECK(hi_m - lo_m > 10.0 * (hi - lo));
}

TEST_CASE("bands are periodic and even in k") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int i = 0; i < 200; ++i) {
        const double k = u(rng);
        const double period = 2.0 * std::numbers::pi / gm.lattice_a;
        for (Band b : {Band::valence, Band::conduction}) {
            CHECK(gm.energy(b, k + period) == doctest::Approx(gm.energy(b, k)).epsilon(1e-12));
            CHECK(gm.energy(b, -k) == doctest::Approx(gm.energy(b, k)).epsilon(1e-12));
        }
        CHECK(gm.dipole_vc(-k) == doctest::Approx(gm.dipole_vc(k)).epsilon(1e-12));
    }
}

TEST_CASE("gap stays open over the zone") {
    for (int i = 0; i <= 2000; ++i) {
        const double k = gm.zone_half_width() * (2.0 * i / 2000.0 - 1.0);
        CHECK(gm.gap(k) > 0.0);
        CHECK(ga.gap(k * gm.lattice_a / ga.lattice_a) > 0.0);
    }
}

TEST_CASE("group velocity vanishes at the zone center and edge") {
    for (Band b : {Band::valence, Band::conduction}) {
        CHECK(std::abs(gm.group_velocity(b, 0.0)) < 1e-12);
        CHECK(std::abs(gm.group_velocity(b, gm.zone_half_width())) < 1e-12);
    }
}

TEST_CASE("analytic group velocity matches finite differences") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(-gm.zone_half_width(), gm.zone_half_width());
    const double h = 1e-5;
    for (int i = 0; i < 1000; ++i) {
        const double k = u(rng);
        for (Band b : {Band::valence, Band::conduction}) {
            const double fd = (gm.energy(b, k + h) - gm.energy(b, k - h)) / (2.0 * h);
            CHECK(gm.group_velocity(b, k) == doctest::Approx(fd).epsilon(1e-8).scale(1.0));
        }
    }
}

TEST_CASE("Kane dipole at the zone center") {
    // d = sqrt(Ep / (2 gap^2)) with Ep = 0.355 and gap = 0.1213
    const double expected = std::sqrt(0.355 / (2.0 * 0.1213 * 0.1213));
    CHECK(gm.dipole_vc(0.0) == doctest::Approx(expected).epsilon(1e-14));
    CHECK(gm.dipole_vc(0.0) == doctest::Approx(3.473).epsilon(2e-4));
}

TEST_CASE("dipole peaks where the gap is smallest") {
    double argmax_d = 0.0, best_d = 0.0;
    double argmin_g = 0.0, best_g = 1e9;
    for (int i = 0; i <= 5000; ++i) {
        const double k = gm.zone_half_width() * i / 5000.0;
        if (gm.dipole_vc(k) > best_d) { best_d = gm.dipole_vc(k); argmax_d = k; }
        if (gm.gap(k) < best_g) { best_g = gm.gap(k); argmin_g = k; }
    }
    CHECK(argmax_d == doctest::Approx(argmin_g));
    CHECK(argmax_d == doctest::Approx(0.0)); // peak at the zone center, decaying outward
    CHECK(gm.dipole_vc(gm.zone_half_width()) < 0.5 * gm.dipole_vc(0.0));
}

TEST_CASE("gap extrema and their harmonic orders") {
    const auto ext = bandgap_extrema(gm);
    CHECK(ext.min_gap == doctest::Approx(gm.e_g).epsilon(1e-12));
    CHECK(ext.argmin_k == doctest::Approx(0.0));
    // zone-edge value from the alternating sums: E_c - E_v = 0.2955 + 0.1398
    CHECK(ext.max_gap == doctest::Approx(0.1213 + 0.3140).epsilon(1e-10));
    CHECK(ext.argmax_k == doctest::Approx(gm.zone_half_width()));

    const auto ext_a = bandgap_extrema(ga);
    CHECK(ext_a.min_gap == doctest::Approx(ga.e_g).epsilon(1e-12));
    CHECK(ext_a.max_gap == doctest::Approx(0.1213 + 2.0 * 0.0494).epsilon(1e-10));
    CHECK(ext_a.max_gap < ext.max_gap); // narrower plateau along Gamma-A

    const double omega = units::omega_from_wavelength_um(3.25);
    CHECK(ext.min_gap / omega == doctest::Approx(8.65).epsilon(2e-3));
    CHECK(ext.max_gap / omega == doctest::Approx(31.05).epsilon(2e-3));
}
