#pragma once

#include "hhgq/currents.hpp"
#include "hhgq/grids.hpp"
#include "hhgq/pulse.hpp"

#include <complex>
#include <span>
#include <vector>

namespace hhgq {

enum class CurrentComponent { total, interband, intraband };
std::string to_string(CurrentComponent c);

/// Per-K, per-mode displacement integrals, split by source term:
///   inter(K,q) = g_q Integral[-M_inter(K,t) f_q(t) dt]
///   intra(K,q) = g_q Integral[+M_intra(K,t) F_q(t) dt]
/// so components can be toggled downstream; the physical displacement is
/// their sum.
struct PerKDisplacements {
    int n_k = 0;
    int n_modes = 0;
    std::vector<std::complex<double>> inter; // [k * n_modes + (q-1)]
    std::vector<std::complex<double>> intra;

    std::complex<double> chi(int k, int q, CurrentComponent c) const {
        const std::size_t idx = static_cast<std::size_t>(k) * n_modes + (q - 1);
        switch (c) {
        case CurrentComponent::interband: return inter[idx];
        case CurrentComponent::intraband: return intra[idx];
        default: return inter[idx] + intra[idx];
        }
    }
};

/// Displacement integrals for one K row (trapezoid over the full grid).
void mode_displacement_row(const MatrixElementTables& tables, int k_index,
                           const EnvelopeTables& envelopes, const ModeSet& modes,
                           const TimeGrid& grid, PerKDisplacements& out);

struct DisplacementMeta {
    double n_z = 0.0;
    double g0 = 0.0;
    double t2_fs = 0.0;
    double e0_v_per_angstrom = 0.0;
    Direction direction = Direction::gamma_m;
    CurrentComponent component = CurrentComponent::total;
};

/// Brillouin-zone aggregate chi_q = N_z * sum_K chi_q(K) dK, fixed K order.
struct ModeDisplacements {
    std::vector<std::complex<double>> chi; // chi[q-1] for q = 1..n_modes
    DisplacementMeta meta;

    int n_modes() const { return static_cast<int>(chi.size()); }
    std::complex<double> chi_q(int q) const { return chi[static_cast<std::size_t>(q) - 1]; }
};

ModeDisplacements aggregate_displacement(const PerKDisplacements& per_k, CurrentComponent component,
                                         const KGrid& kgrid, double n_z,
                                         const DisplacementMeta& meta);

/// Superposition of a few multimode coherent branches:
/// |psi> = sum_b coeff_b (x) |amps_b[q]>, stored unnormalized.
struct BranchState {
    int n_modes = 0;
    std::vector<std::vector<std::complex<double>>> amps; // [branch][mode]
    std::vector<std::complex<double>> coeffs;

    int n_branches() const { return static_cast<int>(coeffs.size()); }
};

/// <bra|ket> of single-mode coherent states.
std::complex<double> coherent_overlap(std::complex<double> bra, std::complex<double> ket);

/// <B|A> for whole branches (product over modes).
std::complex<double> branch_overlap(std::span<const std::complex<double>> bra,
                                    std::span<const std::complex<double>> ket);

double norm_squared(const BranchState& state);

/// |<a|b>|^2 between two normalized branch states.
double state_fidelity(const BranchState& a, const BranchState& b);

enum class ConditionKind { full, ir };

/// HHG-conditioned state. `full` keeps all modes with a vacuum branch of
/// coefficient -xi_ir * xi_uv; `ir` is the single-mode fundamental-only
/// variant with coefficient -xi_ir * xi_uv^2. The displaced branch always
/// carries coefficient 1 and the state is stored unnormalized.
struct ConditionedState {
    ConditionKind kind = ConditionKind::full;
    BranchState branches;
    double xi_ir = 1.0;
    double xi_uv = 1.0;

    int n_modes() const { return branches.n_modes; }
    double norm_squared() const { return hhgq::norm_squared(branches); }
};

/// Vacuum overlaps of the displaced branch: xi_ir = <0|chi_1>,
/// xi_uv = prod_{q>=2} <0_q|chi_q> (both real positive).
double xi_ir(const ModeDisplacements& disp);
double xi_uv(const ModeDisplacements& disp);

/// Throws NumericError when every displacement vanishes (the conditioning
/// projector annihilates the state).
ConditionedState condition_full(const ModeDisplacements& disp);
ConditionedState condition_ir(const ModeDisplacements& disp);

/// Mode-q reduced density matrix in the non-orthogonal branch basis:
/// rho_q = sum_ij C_ij |amps_i><amps_j| with the partial-trace overlap
/// factors folded into C.
struct ReducedMode {
    int n_branches = 0;
    std::vector<std::complex<double>> amps; // branch amplitudes in mode q
    std::vector<std::complex<double>> C;    // row-major n_b x n_b

    std::complex<double> c(int i, int j) const {
        return C[static_cast<std::size_t>(i) * n_branches + j];
    }
};

ReducedMode reduce_mode(const BranchState& state, int q);

/// tr(rho^2)/tr(rho)^2 via the branch Gram matrix (exact at any amplitude).
double purity(const ReducedMode& mode);

/// S_lin = 1 - purity of the mode-q reduced state; 0 <= S_lin <= 0.5 for
/// two-branch states.
double linear_entropy(const ConditionedState& state, int q);

/// Closed-form overlaps for fidelity references (states normalized first).
double fidelity_fock1(const ConditionedState& state);
double fidelity_coherent(const ConditionedState& state, std::complex<double> alpha);

struct WignerGridSpec {
    double half_size = 0.0;
    double step = 0.125;
};

/// Grid padded 5 units beyond the largest branch amplitude so the map
/// integrates to 1 within 1e-3.
WignerGridSpec default_wigner_grid(const ConditionedState& state, int q);

struct WignerMap {
    double half_size = 0.0;
    double step = 0.0;
    int n = 0;                  // samples per axis
    std::vector<double> w;      // [ip * n + ix]
    bool undersized = false;    // grid smaller than support + 4

    double x(int i) const { return -half_size + step * i; }
    double p(int j) const { return -half_size + step * j; }
    double value(int ix, int ip) const { return w[static_cast<std::size_t>(ip) * n + ix]; }
    double integral() const; // trapezoid over the map
    double min_value() const;
};

/// W(beta) at one point, convention (2/pi) tr[D(beta) Pi D†(beta) rho]
/// (unit-integral normalization).
double wigner_point(const ReducedMode& mode, std::complex<double> beta);

WignerMap wigner(const ConditionedState& state, int q, const WignerGridSpec& grid,
                 int n_threads = 1);

} // namespace hhgq
