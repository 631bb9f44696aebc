#include "hhgq/currents.hpp"

#include "hhgq/errors.hpp"

namespace hhgq {

void matrix_elements_row(const SBETrajectory& traj, const BandModel& model, const PulseSpec& pulse,
                         const TimeGrid& grid, MatrixElementTables& tables, int k_index) {
    if (static_cast<int>(traj.n_v.size()) != grid.n || tables.n_t != grid.n)
        throw NumericError("matrix_elements_row: trajectory and tables must share the time grid");
    double* inter = tables.inter.data() + static_cast<std::size_t>(k_index) * grid.n;
    double* intra = tables.intra.data() + static_cast<std::size_t>(k_index) * grid.n;
    for (int i = 0; i < grid.n; ++i) {
        const double k = traj.K + pulse.vector_potential(grid.t(i));
        inter[i] = 2.0 * traj.pi[i].real() * model.dipole_vc(k);
        intra[i] = traj.n_v[i] * model.group_velocity(Band::valence, k) +
                   traj.n_c[i] * model.group_velocity(Band::conduction, k);
    }
}

CurrentTrace macroscopic_currents(const MatrixElementTables& tables, const KGrid& kgrid,
                                  const TimeGrid& tgrid) {
    if (tables.n_k != kgrid.n || tables.n_t != tgrid.n)
        throw NumericError("macroscopic_currents: table dimensions do not match the grids");
    CurrentTrace trace;
    trace.j_tra.assign(tgrid.n, 0.0);
    trace.p.assign(tgrid.n, 0.0);
    // Fixed K order, trapezoid weights: summation order never depends on
    // the thread count, so repeated runs are bit-identical.
    for (int k = 0; k < tables.n_k; ++k) {
        const double w = (k == 0 || k == tables.n_k - 1) ? 0.5 * kgrid.dk : kgrid.dk;
        const auto inter = tables.inter_row(k);
        const auto intra = tables.intra_row(k);
        for (int i = 0; i < tgrid.n; ++i) {
            trace.j_tra[i] += w * intra[i];
            trace.p[i] += w * inter[i];
        }
    }
    trace.j_ter.resize(tgrid.n);
    const double inv2dt = 1.0 / (2.0 * tgrid.dt);
    for (int i = 1; i + 1 < tgrid.n; ++i)
        trace.j_ter[i] = (trace.p[i + 1] - trace.p[i - 1]) * inv2dt;
    if (tgrid.n >= 2) {
        trace.j_ter.front() = (trace.p[1] - trace.p[0]) / tgrid.dt;
        trace.j_ter.back() = (trace.p[tgrid.n - 1] - trace.p[tgrid.n - 2]) / tgrid.dt;
    }
    return trace;
}

} // namespace hhgq
