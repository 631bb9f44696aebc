#include "hhgq/fock_oracle.hpp"

#include "hhgq/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hhgq {

int fock_truncation_for(double max_amp) {
    return static_cast<int>(std::ceil(max_amp * max_amp + 8.0 * max_amp + 20.0));
}

std::vector<std::complex<double>> coherent_fock_vector(std::complex<double> alpha, int n_max) {
    std::vector<std::complex<double>> v(n_max);
    v[0] = std::exp(-0.5 * std::norm(alpha));
    for (int n = 1; n < n_max; ++n) v[n] = v[n - 1] * alpha / std::sqrt(static_cast<double>(n));
    return v;
}

namespace {

// y = (beta a† - beta* a) x on the truncated ladder.
void apply_generator(std::complex<double> beta, const std::vector<std::complex<double>>& x,
                     std::vector<std::complex<double>>& y) {
    const int n_max = static_cast<int>(x.size());
    const auto bc = std::conj(beta);
    for (int n = 0; n < n_max; ++n) {
        std::complex<double> acc{0.0, 0.0};
        if (n > 0) acc += beta * std::sqrt(static_cast<double>(n)) * x[n - 1];
        if (n + 1 < n_max) acc -= bc * std::sqrt(static_cast<double>(n + 1)) * x[n + 1];
        y[n] = acc;
    }
}

double tail_weight(const std::vector<std::complex<double>>& v) {
    double w = 0.0;
    const std::size_t n = v.size();
    for (std::size_t i = n >= 3 ? n - 3 : 0; i < n; ++i) w += std::norm(v[i]);
    return w;
}

} // namespace

void displace_fock_vector(std::vector<std::complex<double>>& v, std::complex<double> beta) {
    const int n_max = static_cast<int>(v.size());
    // Split the displacement so each sub-exponential has small norm; the
    // generator norm scales like |beta| sqrt(n_max).
    const double gen_norm = std::abs(beta) * 2.0 * std::sqrt(static_cast<double>(n_max));
    const int n_split = std::max(1, static_cast<int>(std::ceil(gen_norm / 0.5)));
    const std::complex<double> b = beta / static_cast<double>(n_split);
    std::vector<std::complex<double>> term(v.size()), next(v.size());
    for (int s = 0; s < n_split; ++s) {
        term = v;
        double ref = 0.0;
        for (const auto& c : v) ref += std::norm(c);
        ref = std::sqrt(ref);
        for (int k = 1; k <= 80; ++k) {
            apply_generator(b, term, next);
            for (auto& c : next) c /= static_cast<double>(k);
            std::swap(term, next);
            double tn = 0.0;
            for (const auto& c : term) tn += std::norm(c);
            for (std::size_t i = 0; i < v.size(); ++i) v[i] += term[i];
            if (std::sqrt(tn) < 1e-18 * ref) break;
        }
    }
}

double wigner_fock_oracle(const ReducedMode& mode, std::complex<double> beta, int n_max) {
    if (n_max <= 0) {
        double max_amp = 0.0;
        for (const auto& a : mode.amps)
            max_amp = std::max({max_amp, std::abs(a), std::abs(a - beta)});
        n_max = fock_truncation_for(max_amp);
    }
    const int nb = mode.n_branches;
    std::vector<std::vector<std::complex<double>>> v(nb), u(nb);
    for (int i = 0; i < nb; ++i) {
        v[i] = coherent_fock_vector(mode.amps[i], n_max);
        u[i] = v[i];
        displace_fock_vector(u[i], -beta); // D†(beta) = D(-beta)
        if (tail_weight(v[i]) > 1e-10 || tail_weight(u[i]) > 1e-10)
            throw NumericError("wigner_fock_oracle: truncation insufficient (tail norm > 1e-10)");
    }
    std::complex<double> parity_sum{0.0, 0.0};
    std::complex<double> trace{0.0, 0.0};
    for (int i = 0; i < nb; ++i) {
        for (int j = 0; j < nb; ++j) {
            std::complex<double> par{0.0, 0.0}, tr{0.0, 0.0};
            for (int n = 0; n < n_max; ++n) {
                const auto prod = u[i][n] * std::conj(u[j][n]);
                par += (n % 2 == 0) ? prod : -prod;
                tr += v[i][n] * std::conj(v[j][n]);
            }
            parity_sum += mode.c(i, j) * par;
            trace += mode.c(i, j) * tr;
        }
    }
    return 2.0 / std::numbers::pi * (parity_sum / trace).real();
}

double wigner_fock_oracle(const ConditionedState& state, int q, std::complex<double> beta) {
    return wigner_fock_oracle(reduce_mode(state.branches, q), beta);
}

double purity_fock_oracle(const BranchState& state, int q, int n_per_mode) {
    const int n_modes = state.n_modes;
    if (q < 1 || q > n_modes) throw NumericError("purity_fock_oracle: mode index out of range");
    if (n_per_mode <= 0) {
        double max_amp = 0.0;
        for (const auto& branch : state.amps)
            for (const auto& a : branch) max_amp = std::max(max_amp, std::abs(a));
        n_per_mode = fock_truncation_for(max_amp);
    }
    double dim_check = 1.0;
    for (int m = 0; m < n_modes; ++m) dim_check *= n_per_mode;
    if (dim_check > 2.0e7)
        throw NumericError("purity_fock_oracle: state too large for a dense Fock expansion");
    const std::size_t dim = static_cast<std::size_t>(dim_check);

    // Full state vector, mode 0 fastest.
    std::vector<std::complex<double>> psi(dim, {0.0, 0.0});
    for (int b = 0; b < state.n_branches(); ++b) {
        std::vector<std::vector<std::complex<double>>> fock(n_modes);
        for (int m = 0; m < n_modes; ++m) fock[m] = coherent_fock_vector(state.amps[b][m], n_per_mode);
        for (std::size_t idx = 0; idx < dim; ++idx) {
            std::complex<double> amp = state.coeffs[b];
            std::size_t rest = idx;
            for (int m = 0; m < n_modes; ++m) {
                amp *= fock[m][rest % n_per_mode];
                rest /= n_per_mode;
            }
            psi[idx] += amp;
        }
    }

    // rho_q[n, n'] = sum over the other modes' joint index.
    std::size_t stride = 1;
    for (int m = 0; m < q - 1; ++m) stride *= n_per_mode;
    const std::size_t outer = dim / (stride * n_per_mode);
    std::vector<std::complex<double>> rho(static_cast<std::size_t>(n_per_mode) * n_per_mode,
                                          {0.0, 0.0});
    for (std::size_t hi = 0; hi < outer; ++hi) {
        for (std::size_t lo = 0; lo < stride; ++lo) {
            const std::size_t base = hi * stride * n_per_mode + lo;
            for (int n = 0; n < n_per_mode; ++n)
                for (int m = 0; m < n_per_mode; ++m)
                    rho[static_cast<std::size_t>(n) * n_per_mode + m] +=
                        psi[base + stride * n] * std::conj(psi[base + stride * m]);
        }
    }
    double tr = 0.0, frob2 = 0.0;
    for (int n = 0; n < n_per_mode; ++n) {
        tr += rho[static_cast<std::size_t>(n) * n_per_mode + n].real();
        for (int m = 0; m < n_per_mode; ++m)
            frob2 += std::norm(rho[static_cast<std::size_t>(n) * n_per_mode + m]);
    }
    return frob2 / (tr * tr);
}

} // namespace hhgq
