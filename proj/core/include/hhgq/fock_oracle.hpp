#pragma once

#include "hhgq/qoptics.hpp"

#include <complex>
#include <vector>

namespace hhgq {

// Truncated number-basis verification tools. These deliberately avoid the
// closed-form coherent-state algebra used by the production paths: states
// are expanded as Fock vectors, displacements act through the series
// exponential of (beta a† - beta* a), and reduced density matrices come
// from explicit partial traces.

/// Truncation that keeps coherent tails below 1e-10 for |alpha| <= max_amp.
int fock_truncation_for(double max_amp);

/// <n|alpha> for n = 0..n_max-1.
std::vector<std::complex<double>> coherent_fock_vector(std::complex<double> alpha, int n_max);

/// v <- exp(beta a† - beta* a) v, evaluated by scaled/split Taylor steps.
void displace_fock_vector(std::vector<std::complex<double>>& v, std::complex<double> beta);

/// W(beta) of a reduced mode through the number basis:
/// (2/pi) sum_n (-1)^n <n| D†(beta) rho D(beta) |n>. Throws NumericError
/// when the truncation tail exceeds 1e-10.
double wigner_fock_oracle(const ReducedMode& mode, std::complex<double> beta, int n_max = 0);
double wigner_fock_oracle(const ConditionedState& state, int q, std::complex<double> beta);

/// Purity of the mode-q reduced state via a full multimode Fock expansion
/// and an explicit partial trace. Feasible for a handful of modes; used to
/// validate the Gram-matrix purity.
double purity_fock_oracle(const BranchState& state, int q, int n_per_mode = 0);

} // namespace hhgq
