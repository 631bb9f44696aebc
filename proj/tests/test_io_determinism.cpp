#include "hhgq/io.hpp"
#include "hhgq/pipeline.hpp"

#include "test_helpers.hpp"

#include <doctest.h>

using namespace hhgq;

TEST_CASE("sha256 known vectors") {
    CHECK(sha256_hex("") ==
          "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(sha256_hex("abc") ==
          "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    CHECK(sha256_hex(std::string(1000, 'a')) ==
          "41edece42d63e8d9bf515a9ba6932e1c20cbc9f5a5d134645adb5db1b9737ea3");
}

TEST_CASE("csv files start with a header row") {
    SpectrumTrace spec;
    spec.order = {0.0, 1.0};
    spec.total_db = {0.0, -3.0};
    spec.inter_db = {0.0, -4.0};
    spec.intra_db = {0.0, -9.0};
    CHECK(spectrum_csv(spec).starts_with("harmonic_order,total_db,interband_db,intraband_db\n"));

    ModeDisplacements disp;
    disp.chi = {{0.5, -0.25}};
    const auto csv = displacements_csv(disp);
    CHECK(csv.starts_with("q,re_chi,im_chi\n"));
    CHECK(csv.find("5.000000000000e-01") != std::string::npos);
    CHECK(csv.find("-2.500000000000e-01") != std::string::npos);

    CHECK(scan_csv("e0_v_per_angstrom", {"f_fock"}, {0.2}, {{0.9}})
              .starts_with("e0_v_per_angstrom,f_fock\n"));
}

TEST_CASE("pipeline output is byte-identical across thread counts") {
    auto cfg = test::small();
    cfg.t2_fs = 2.0;
    cfg.n_k = 21;
    const auto ctx = make_context(cfg);

    const auto sweep1 = run_sweep(ctx, 1);
    const auto sweep8 = run_sweep(ctx, 8);
    const auto trace1 = currents(ctx, sweep1);
    const auto trace8 = currents(ctx, sweep8);
    const auto spec1 = spectrum(ctx, trace1);
    const auto spec8 = spectrum(ctx, trace8);

    CHECK(spectrum_csv(spec1) == spectrum_csv(spec8));
    CHECK(current_csv(trace1, ctx.grids.time) == current_csv(trace8, ctx.grids.time));
    CHECK(displacements_csv(displacements(ctx, sweep1, CurrentComponent::total)) ==
          displacements_csv(displacements(ctx, sweep8, CurrentComponent::total)));
}
