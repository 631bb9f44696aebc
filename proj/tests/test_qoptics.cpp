#include "hhgq/errors.hpp"
#include "hhgq/fock_oracle.hpp"
#include "hhgq/qoptics.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

using namespace hhgq;

namespace {

using cplx = std::complex<double>;

ModeDisplacements make_disp(std::vector<cplx> chi) {
    ModeDisplacements d;
    d.chi = std::move(chi);
    return d;
}

BranchState random_two_branch(std::mt19937_64& rng, double max_amp, int n_modes = 1) {
    std::uniform_real_distribution<double> amp(-max_amp, max_amp);
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    BranchState st;
    st.n_modes = n_modes;
    st.amps.resize(2);
    for (auto& branch : st.amps) {
        branch.resize(n_modes);
        for (auto& a : branch) a = {amp(rng) / std::numbers::sqrt2, amp(rng) / std::numbers::sqrt2};
    }
    st.coeffs = {{coeff(rng), coeff(rng)}, {coeff(rng), coeff(rng)}};
    if (std::abs(st.coeffs[0]) < 0.1) st.coeffs[0] += 0.5;
    return st;
}

} // namespace

TEST_CASE("coherent overlaps") {
    const auto vac = coherent_overlap({0.0, 0.0}, {1.3, -0.4});
    CHECK(vac.real() == doctest::Approx(std::exp(-0.5 * (1.3 * 1.3 + 0.4 * 0.4))));
    CHECK(vac.imag() == 0.0);
    const cplx a{0.7, 0.2}, b{-0.3, 1.1};
    CHECK(std::norm(coherent_overlap(a, b)) ==
          doctest::Approx(std::exp(-std::norm(a - b))).epsilon(1e-12));
}

TEST_CASE("vacuum overlap factors of a displaced branch") {
    const auto d = make_disp({{1.0, 0.0}, {0.5, 0.5}, {0.0, 0.2}});
    CHECK(xi_ir(d) == doctest::Approx(std::exp(-0.5)));
    CHECK(xi_uv(d) == doctest::Approx(std::exp(-0.5 * (0.5 + 0.04))));
}

TEST_CASE("conditioned-state norm matches the closed form") {
    // single-mode displacement chi = 1: norm^2 = 1 - e^{-1}
    const auto st = condition_ir(make_disp({{1.0, 0.0}}));
    CHECK(st.xi_uv == doctest::Approx(1.0));
    CHECK(st.norm_squared() == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-14));

    // full state: norm^2 = 1 - xi^2 with xi = xi_ir xi_uv
    const auto d = make_disp({{0.8, 0.1}, {0.3, -0.2}, {0.05, 0.0}});
    const auto full = condition_full(d);
    const double xi = xi_ir(d) * xi_uv(d);
    CHECK(full.norm_squared() == doctest::Approx(1.0 - xi * xi).epsilon(1e-14));
}

TEST_CASE("conditioning an all-vacuum state is an error") {
    CHECK_THROWS_AS(condition_ir(make_disp({{0.0, 0.0}, {0.0, 0.0}})), NumericError);
    CHECK_THROWS_AS(condition_full(make_disp({{0.0, 0.0}})), NumericError);
}

TEST_CASE("aggregation is exactly linear in N_z") {
    PerKDisplacements per_k;
    per_k.n_k = 3;
    per_k.n_modes = 2;
    per_k.inter = {{0.1, 0.0}, {0.0, 0.2}, {0.3, 0.1}, {0.1, 0.1}, {-0.2, 0.0}, {0.0, -0.1}};
    per_k.intra = per_k.inter;
    KGrid kg{0.1, 3};
    const auto once = aggregate_displacement(per_k, CurrentComponent::total, kg, 1.0e6, {});
    const auto twice = aggregate_displacement(per_k, CurrentComponent::total, kg, 2.0e6, {});
    for (int q = 1; q <= 2; ++q) CHECK(twice.chi_q(q) == 2.0 * once.chi_q(q));
}

TEST_CASE("fidelity closed forms") {
    SUBCASE("vacuum vs coherent state") {
        BranchState vac{1, {{{0.0, 0.0}}}, {{1.0, 0.0}}};
        for (double a : {0.3, 1.0, 2.2}) {
            BranchState coh{1, {{{a, 0.0}}}, {{1.0, 0.0}}};
            CHECK(state_fidelity(vac, coh) == doctest::Approx(std::exp(-a * a)).epsilon(1e-12));
        }
    }
    SUBCASE("strong displacement limit is a plain coherent state") {
        const auto st = condition_ir(make_disp({{10.0, 0.0}}));
        CHECK(fidelity_coherent(st, {10.0, 0.0}) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(fidelity_fock1(st) < 1e-12);
    }
    SUBCASE("weak uniform displacements leave a photon-subtracted state") {
        // scale every mode to zero together: the vacuum parts cancel and the
        // fundamental is left next to |1>
        const double s = 1e-3;
        const auto st = condition_ir(make_disp({{s, 0.0}, {0.5 * s, 0.0}, {0.3 * s, 0.0}}));
        CHECK(fidelity_fock1(st) > 0.999);
    }
}

TEST_CASE("fidelity is symmetric, bounded, and one only for proportional states") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = random_two_branch(rng, 2.0);
        const auto b = random_two_branch(rng, 2.0);
        const double fab = state_fidelity(a, b);
        const double fba = state_fidelity(b, a);
        CHECK(fab == doctest::Approx(fba).epsilon(1e-10));
        CHECK(fab <= 1.0 + 1e-10);
        CHECK(fab >= 0.0);
        CHECK(state_fidelity(a, a) == doctest::Approx(1.0).epsilon(1e-10));
        auto scaled = a;
        for (auto& c : scaled.coeffs) c *= cplx{0.3, 0.4};
        CHECK(state_fidelity(a, scaled) == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("linear entropy vanishes when only one mode is displaced") {
    const auto st = condition_full(make_disp({{0.0, 0.0}, {1.3, -0.6}, {0.0, 0.0}}));
    for (int q = 1; q <= 3; ++q) CHECK(linear_entropy(st, q) < 1e-13);
}

TEST_CASE("linear entropy is bounded by [0, 1/2] for two-branch states") {
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    for (int trial = 0; trial < 100; ++trial) {
        const auto st = condition_full(
            make_disp({{u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng), u(rng)}}));
        for (int q = 1; q <= 4; ++q) {
            const double s = linear_entropy(st, q);
            CHECK(s >= -1e-12);
            CHECK(s <= 0.5 + 1e-12);
        }
    }
    const auto st = condition_full(make_disp({{1.0, 0.0}, {0.5, 0.0}}));
    CHECK_THROWS_AS(linear_entropy(st, 5), NumericError);
}

TEST_CASE("Gram-matrix purity matches the Fock partial-trace oracle") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(-1.2, 1.2);
    for (int trial = 0; trial < 10; ++trial) {
        BranchState st = random_two_branch(rng, 1.2, 3);
        for (int q = 1; q <= 3; ++q) {
            const double gram = purity(reduce_mode(st, q));
            const double fock = purity_fock_oracle(st, q, 40);
            CHECK(gram == doctest::Approx(fock).epsilon(1e-10).scale(1.0));
        }
    }
}

TEST_CASE("Wigner function of vacuum and coherent states") {
    BranchState vac{1, {{{0.0, 0.0}}}, {{1.0, 0.0}}};
    const auto mode = reduce_mode(vac, 1);
    CHECK(wigner_point(mode, {0.0, 0.0}) == doctest::Approx(2.0 / std::numbers::pi));
    CHECK(wigner_point(mode, {1.0, 0.5}) ==
          doctest::Approx(2.0 / std::numbers::pi * std::exp(-2.0 * (1.0 + 0.25))));

    const cplx alpha{1.2, -0.7};
    BranchState coh{1, {{alpha}}, {{1.0, 0.0}}};
    const auto cmode = reduce_mode(coh, 1);
    CHECK(wigner_point(cmode, alpha) == doctest::Approx(2.0 / std::numbers::pi));
    for (const cplx beta : {cplx{0.0, 0.0}, cplx{1.0, 1.0}, cplx{-0.4, 0.3}})
        CHECK(wigner_point(cmode, beta) ==
              doctest::Approx(2.0 / std::numbers::pi * std::exp(-2.0 * std::norm(beta - alpha)))
                  .epsilon(1e-12)
                  .scale(1e-3));
}

TEST_CASE("odd cat state: parity pins the origin value") {
    const double a = 2.0;
    BranchState cat{1, {{{a, 0.0}}, {{-a, 0.0}}}, {{1.0, 0.0}, {-1.0, 0.0}}};
    const auto mode = reduce_mode(cat, 1);
    CHECK(wigner_point(mode, {0.0, 0.0}) == doctest::Approx(-2.0 / std::numbers::pi).epsilon(1e-12));
    CHECK(wigner_fock_oracle(mode, {0.0, 0.0}) ==
          doctest::Approx(-2.0 / std::numbers::pi).epsilon(1e-8));
    // fringe amplitude at the origin far exceeds the Gaussian lobes' reach
    CHECK(std::abs(wigner_point(mode, {0.0, 0.0})) >
          10.0 * (2.0 / std::numbers::pi) * std::exp(-2.0 * a * a) * std::cosh(a * a));
}

TEST_CASE("analytic Wigner equals the Fock oracle on random two-branch states") {
    std::mt19937_64 rng(37);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int trial = 0; trial < 12; ++trial) {
        const auto st = random_two_branch(rng, 3.0);
        const auto mode = reduce_mode(st, 1);
        for (int i = 0; i < 6; ++i) {
            const cplx beta{u(rng), u(rng)};
            CHECK(wigner_point(mode, beta) ==
                  doctest::Approx(wigner_fock_oracle(mode, beta)).epsilon(1e-8).scale(1.0));
        }
    }
}

TEST_CASE("Wigner maps integrate to one and respect the parity bound") {
    const auto st = condition_ir(make_disp({{1.4, 0.3}, {0.6, 0.0}}));
    const auto map = wigner(st, 1, default_wigner_grid(st, 1), 2);
    CHECK(map.undersized == false);
    CHECK(map.integral() == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(map.min_value() >= -2.0 / std::numbers::pi - 1e-9);

    WignerGridSpec tiny{0.5, 0.25};
    CHECK(wigner(st, 1, tiny, 1).undersized);
}

TEST_CASE("observables ignore a global phase") {
    const auto st = condition_ir(make_disp({{1.1, -0.4}, {0.4, 0.2}}));
    auto rotated = st;
    for (auto& c : rotated.branches.coeffs) c *= std::polar(1.0, 1.234);
    CHECK(st.norm_squared() == doctest::Approx(rotated.norm_squared()).epsilon(1e-14));
    CHECK(fidelity_fock1(st) == doctest::Approx(fidelity_fock1(rotated)).epsilon(1e-12));
    const auto m1 = reduce_mode(st.branches, 1);
    const auto m2 = reduce_mode(rotated.branches, 1);
    for (const cplx beta : {cplx{0.2, 0.1}, cplx{-1.0, 0.6}})
        CHECK(wigner_point(m1, beta) == doctest::Approx(wigner_point(m2, beta)).epsilon(1e-12));
    CHECK(purity(m1) == doctest::Approx(purity(m2)).epsilon(1e-12));
}

TEST_CASE("displacing a state translates its Wigner map") {
    std::mt19937_64 rng(41);
    auto st = random_two_branch(rng, 1.5);
    auto shifted = st;
    const cplx delta{0.8, -0.5};
    for (auto& branch : shifted.amps) branch[0] += delta;
    // D(delta)|a> = exp(i Im(delta a*)) |a + delta>: shift the amplitudes
    // and carry the branch phases so the state is exactly the displaced one.
    for (int b = 0; b < 2; ++b)
        shifted.coeffs[b] *= std::polar(1.0, (delta * std::conj(st.amps[b][0])).imag());
    const auto m0 = reduce_mode(st, 1);
    const auto m1 = reduce_mode(shifted, 1);
    for (const cplx beta : {cplx{0.0, 0.0}, cplx{0.5, 0.2}, cplx{-0.7, 1.0}})
        CHECK(wigner_point(m1, beta + delta) ==
              doctest::Approx(wigner_point(m0, beta)).epsilon(1e-10).scale(1.0));
}
