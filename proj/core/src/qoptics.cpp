#include "hhgq/qoptics.hpp"

#include "hhgq/errors.hpp"
#include "hhgq/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hhgq {

std::string to_string(CurrentComponent c) {
    switch (c) {
    case CurrentComponent::interband: return "inter";
    case CurrentComponent::intraband: return "intra";
    default: return "total";
    }
}

void mode_displacement_row(const MatrixElementTables& tables, int k_index,
                           const EnvelopeTables& envelopes, const ModeSet& modes,
                           const TimeGrid& grid, PerKDisplacements& out) {
    if (tables.n_t != grid.n || envelopes.n_t != grid.n)
        throw NumericError("mode_displacement_row: tables and grid sizes disagree");
    const auto inter = tables.inter_row(k_index);
    const auto intra = tables.intra_row(k_index);
    for (int q = 1; q <= modes.q_cutoff; ++q) {
        const auto fq = envelopes.f_q(q);
        const auto Fq = envelopes.F_q(q);
        std::complex<double> acc_inter{0.0, 0.0};
        std::complex<double> acc_intra{0.0, 0.0};
        for (int i = 0; i < grid.n; ++i) {
            // Trapezoid weights: half at both ends.
            const double w = (i == 0 || i == grid.n - 1) ? 0.5 : 1.0;
            acc_inter += w * (-inter[i]) * fq[i];
            acc_intra += w * intra[i] * Fq[i];
        }
        const double scale = modes.coupling(q) * grid.dt;
        const std::size_t idx = static_cast<std::size_t>(k_index) * modes.q_cutoff + (q - 1);
        out.inter[idx] = scale * acc_inter;
        out.intra[idx] = scale * acc_intra;
    }
}

ModeDisplacements aggregate_displacement(const PerKDisplacements& per_k, CurrentComponent component,
                                         const KGrid& kgrid, double n_z,
                                         const DisplacementMeta& meta) {
    if (per_k.n_k != kgrid.n)
        throw NumericError("aggregate_displacement: K dimensions disagree");
    ModeDisplacements disp;
    disp.chi.assign(per_k.n_modes, {0.0, 0.0});
    disp.meta = meta;
    disp.meta.component = component;
    for (int k = 0; k < per_k.n_k; ++k)
        for (int q = 1; q <= per_k.n_modes; ++q)
            disp.chi[q - 1] += per_k.chi(k, q, component);
    for (auto& c : disp.chi) c *= n_z * kgrid.dk;
    return disp;
}

std::complex<double> coherent_overlap(std::complex<double> bra, std::complex<double> ket) {
    return std::exp(-0.5 * std::norm(bra) - 0.5 * std::norm(ket) + std::conj(bra) * ket);
}

std::complex<double> branch_overlap(std::span<const std::complex<double>> bra,
                                    std::span<const std::complex<double>> ket) {
    std::complex<double> o{1.0, 0.0};
    for (std::size_t q = 0; q < bra.size(); ++q) o *= coherent_overlap(bra[q], ket[q]);
    return o;
}

double norm_squared(const BranchState& state) {
    std::complex<double> acc{0.0, 0.0};
    for (int i = 0; i < state.n_branches(); ++i)
        for (int j = 0; j < state.n_branches(); ++j)
            acc += state.coeffs[i] * std::conj(state.coeffs[j]) *
                   branch_overlap(state.amps[j], state.amps[i]);
    return acc.real();
}

double state_fidelity(const BranchState& a, const BranchState& b) {
    std::complex<double> o{0.0, 0.0};
    for (int i = 0; i < a.n_branches(); ++i)
        for (int j = 0; j < b.n_branches(); ++j)
            o += a.coeffs[i] * std::conj(b.coeffs[j]) * branch_overlap(b.amps[j], a.amps[i]);
    return std::norm(o) / (norm_squared(a) * norm_squared(b));
}

double xi_ir(const ModeDisplacements& disp) {
    return std::exp(-0.5 * std::norm(disp.chi_q(1)));
}

double xi_uv(const ModeDisplacements& disp) {
    double s = 0.0;
    for (int q = 2; q <= disp.n_modes(); ++q) s += std::norm(disp.chi_q(q));
    return std::exp(-0.5 * s);
}

namespace {

void require_nonzero(const ModeDisplacements& disp) {
    for (const auto& c : disp.chi)
        if (c != std::complex<double>{0.0, 0.0}) return;
    throw NumericError("conditioning annihilates state: all mode displacements are zero");
}

} // namespace

ConditionedState condition_full(const ModeDisplacements& disp) {
    require_nonzero(disp);
    ConditionedState st;
    st.kind = ConditionKind::full;
    st.xi_ir = xi_ir(disp);
    st.xi_uv = xi_uv(disp);
    st.branches.n_modes = disp.n_modes();
    st.branches.amps = {disp.chi,
                        std::vector<std::complex<double>>(disp.chi.size(), {0.0, 0.0})};
    st.branches.coeffs = {{1.0, 0.0}, {-st.xi_ir * st.xi_uv, 0.0}};
    return st;
}

ConditionedState condition_ir(const ModeDisplacements& disp) {
    require_nonzero(disp);
    ConditionedState st;
    st.kind = ConditionKind::ir;
    st.xi_ir = xi_ir(disp);
    st.xi_uv = xi_uv(disp);
    st.branches.n_modes = 1;
    st.branches.amps = {{disp.chi_q(1)}, {std::complex<double>{0.0, 0.0}}};
    st.branches.coeffs = {{1.0, 0.0}, {-st.xi_ir * st.xi_uv * st.xi_uv, 0.0}};
    return st;
}

ReducedMode reduce_mode(const BranchState& state, int q) {
    if (q < 1 || q > state.n_modes)
        throw NumericError("reduce_mode: mode index " + std::to_string(q) + " out of range");
    const int nb = state.n_branches();
    ReducedMode mode;
    mode.n_branches = nb;
    mode.amps.resize(nb);
    mode.C.resize(static_cast<std::size_t>(nb) * nb);
    for (int i = 0; i < nb; ++i) mode.amps[i] = state.amps[i][static_cast<std::size_t>(q) - 1];
    for (int i = 0; i < nb; ++i) {
        for (int j = 0; j < nb; ++j) {
            // Partial trace over every other mode: prod_{q' != q} <a_j^q'|a_i^q'>.
            std::complex<double> t{1.0, 0.0};
            for (int m = 0; m < state.n_modes; ++m) {
                if (m == q - 1) continue;
                t *= coherent_overlap(state.amps[j][m], state.amps[i][m]);
            }
            mode.C[static_cast<std::size_t>(i) * nb + j] =
                state.coeffs[i] * std::conj(state.coeffs[j]) * t;
        }
    }
    return mode;
}

double purity(const ReducedMode& mode) {
    const int nb = mode.n_branches;
    std::vector<std::complex<double>> G(static_cast<std::size_t>(nb) * nb);
    for (int i = 0; i < nb; ++i)
        for (int j = 0; j < nb; ++j)
            G[static_cast<std::size_t>(i) * nb + j] = coherent_overlap(mode.amps[i], mode.amps[j]);
    std::vector<std::complex<double>> CG(static_cast<std::size_t>(nb) * nb, {0.0, 0.0});
    for (int i = 0; i < nb; ++i)
        for (int k = 0; k < nb; ++k)
            for (int j = 0; j < nb; ++j)
                CG[static_cast<std::size_t>(i) * nb + k] +=
                    mode.c(i, j) * G[static_cast<std::size_t>(j) * nb + k];
    std::complex<double> tr{0.0, 0.0}, tr2{0.0, 0.0};
    for (int i = 0; i < nb; ++i) {
        tr += CG[static_cast<std::size_t>(i) * nb + i];
        for (int j = 0; j < nb; ++j)
            tr2 += CG[static_cast<std::size_t>(i) * nb + j] * CG[static_cast<std::size_t>(j) * nb + i];
    }
    return (tr2 / (tr * tr)).real();
}

double linear_entropy(const ConditionedState& state, int q) {
    return 1.0 - purity(reduce_mode(state.branches, q));
}

namespace {

std::complex<double> overlap_with_fock1(const BranchState& state) {
    // <1|alpha> = alpha exp(-|alpha|^2 / 2)
    std::complex<double> o{0.0, 0.0};
    for (int i = 0; i < state.n_branches(); ++i)
        o += state.coeffs[i] * std::conj(state.amps[i][0] * std::exp(-0.5 * std::norm(state.amps[i][0])));
    return o;
}

void require_single_mode(const ConditionedState& state, const char* what) {
    if (state.n_modes() != 1)
        throw NumericError(std::string(what) + ": defined for single-mode states only");
}

} // namespace

double fidelity_fock1(const ConditionedState& state) {
    require_single_mode(state, "fidelity_fock1");
    return std::norm(overlap_with_fock1(state.branches)) / state.norm_squared();
}

double fidelity_coherent(const ConditionedState& state, std::complex<double> alpha) {
    require_single_mode(state, "fidelity_coherent");
    std::complex<double> o{0.0, 0.0};
    for (int i = 0; i < state.branches.n_branches(); ++i)
        o += state.branches.coeffs[i] * coherent_overlap(alpha, state.branches.amps[i][0]);
    return std::norm(o) / state.norm_squared();
}

WignerGridSpec default_wigner_grid(const ConditionedState& state, int q) {
    double max_amp = 0.0;
    for (const auto& branch : state.branches.amps)
        max_amp = std::max(max_amp, std::abs(branch[static_cast<std::size_t>(q) - 1]));
    return {max_amp + 5.0, 0.125};
}

double wigner_point(const ReducedMode& mode, std::complex<double> beta) {
    // D(b) Pi D†(b) |a> = exp(b* a - b a*) |2b - a>, so each branch pair
    // contributes C_ij exp(b* a_i - b a_i*) <a_j|2b - a_i>.
    std::complex<double> acc{0.0, 0.0};
    std::complex<double> tr{0.0, 0.0};
    for (int i = 0; i < mode.n_branches; ++i) {
        const auto a_i = mode.amps[i];
        const std::complex<double> phase =
            std::exp(std::conj(beta) * a_i - beta * std::conj(a_i));
        for (int j = 0; j < mode.n_branches; ++j) {
            const auto a_j = mode.amps[j];
            acc += mode.c(i, j) * phase * coherent_overlap(a_j, 2.0 * beta - a_i);
            tr += mode.c(i, j) * coherent_overlap(a_j, a_i);
        }
    }
    return 2.0 / std::numbers::pi * (acc / tr).real();
}

WignerMap wigner(const ConditionedState& state, int q, const WignerGridSpec& grid, int n_threads) {
    const auto mode = reduce_mode(state.branches, q);
    WignerMap map;
    map.half_size = grid.half_size;
    map.step = grid.step;
    map.n = static_cast<int>(std::round(2.0 * grid.half_size / grid.step)) + 1;
    map.w.resize(static_cast<std::size_t>(map.n) * map.n);
    double max_amp = 0.0;
    for (const auto& a : mode.amps) max_amp = std::max(max_amp, std::abs(a));
    map.undersized = grid.half_size < max_amp + 4.0;
    parallel_for(map.n, n_threads, [&](int jp) {
        const double p = map.p(jp);
        double* row = map.w.data() + static_cast<std::size_t>(jp) * map.n;
        for (int ix = 0; ix < map.n; ++ix)
            row[ix] = wigner_point(mode, {map.x(ix), p});
    });
    return map;
}

double WignerMap::integral() const {
    double acc = 0.0;
    for (int jp = 0; jp < n; ++jp) {
        const double wp = (jp == 0 || jp == n - 1) ? 0.5 : 1.0;
        for (int ix = 0; ix < n; ++ix) {
            const double wx = (ix == 0 || ix == n - 1) ? 0.5 : 1.0;
            acc += wp * wx * value(ix, jp);
        }
    }
    return acc * step * step;
}

double WignerMap::min_value() const { return *std::min_element(w.begin(), w.end()); }

} // namespace hhgq
