#pragma once

#include "hhgq/grids.hpp"
#include "hhgq/pulse.hpp"
#include "hhgq/sbe.hpp"

#include <span>
#include <vector>

namespace hhgq {

/// Valence-diagonal interband / intraband matrix elements on the (K, t)
/// product grid (atomic units, e = 1):
///   inter(K,t) = 2 Re[pi(K,t)] d_vc(K + A(t))
///   intra(K,t) = n_v dE_v/dk + n_c dE_c/dk, evaluated at K + A(t).
struct MatrixElementTables {
    int n_k = 0;
    int n_t = 0;
    std::vector<double> inter; // [k * n_t + i]
    std::vector<double> intra;

    std::span<const double> inter_row(int k) const {
        return {inter.data() + static_cast<std::size_t>(k) * n_t, static_cast<std::size_t>(n_t)};
    }
    std::span<const double> intra_row(int k) const {
        return {intra.data() + static_cast<std::size_t>(k) * n_t, static_cast<std::size_t>(n_t)};
    }
};

/// Fill one K row from a solved trajectory. Throws NumericError if the
/// trajectory is not sampled on `grid`.
void matrix_elements_row(const SBETrajectory& traj, const BandModel& model, const PulseSpec& pulse,
                         const TimeGrid& grid, MatrixElementTables& tables, int k_index);

/// Macroscopic current traces. j_tra is the K-integral (trapezoid) of the
/// intraband elements; p is the K-integral of the interband elements and
/// j_ter its time derivative (centered differences, one-sided at the ends,
/// or exact i*omega differentiation in the frequency domain downstream).
struct CurrentTrace {
    std::vector<double> j_tra;
    std::vector<double> j_ter;
    std::vector<double> p; // interband polarization
};

CurrentTrace macroscopic_currents(const MatrixElementTables& tables, const KGrid& kgrid,
                                  const TimeGrid& tgrid);

} // namespace hhgq
