#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "csamp/rng.hpp"
#include "csamp/statevector.hpp"
#include "csamp/subset.hpp"

namespace csamp {

/// Ancilla parameters of the zero-error swapper circuit:
/// b = 0, q = 1/(2(1-K/N)) when K < N/2; b = 1, q = N/(2K) when K >= N/2.
/// Both branches give q in [1/2, 1], with q = 1 exactly at K = N/2.
struct ZeroErrorConfig {
    int b = 0;
    double q_w = 1.0;

    static ZeroErrorConfig for_subset(std::uint64_t k, std::uint64_t n_domain);
};

/// Result of one zero-error swap attempt. flag == 0 certifies that
/// post_state is |S-bar| and that `sample` (a computational-basis draw from
/// it) lies outside S. success_probability is the exact pre-measurement
/// flag-0 mass, min{K,N-K}/max{K,N-K}.
struct SwapAttempt {
    int flag = 1;
    std::optional<std::uint64_t> sample;
    StateVector post_state;
    double success_probability = 0.0;
};

struct ComplementSwapResult {
    StateVector state;
    /// Analytic probability that measuring `state` yields a complement
    /// element: 4 (K/N)(1 - K/N) = 1 - 4 beta^2.
    double predicted_complement_mass = 0.0;
};

/// Grover diffusion applied to |S>; perfect swap exactly when K = N/2.
ComplementSwapResult complement_swap(const StateVector& state,
                                     const SubsetSpec& spec);

/// One run of the flagged Las Vegas swapper: ancilla |0>, W(q), diffusion
/// controlled on ancilla = 0, Z^b on ancilla, W(q)^T, ancilla measurement.
/// The ancilla is allocated as the highest-index qubit and projected out,
/// so post_state is again an n-qubit state. Only the public parameters
/// (K, N) enter the circuit, so the subset_size overload is what a game
/// player uses.
SwapAttempt zero_error_swap(const StateVector& state, std::uint64_t subset_size,
                            RandomSource& rng);
SwapAttempt zero_error_swap(const StateVector& state, const SubsetSpec& spec,
                            RandomSource& rng);

/// Runs zero_error_swap on each copy until a flag-0 success or the copies
/// run out; overall success probability 1 - (1-p)^k.
SwapAttempt repeated_zero_error_swap(const std::vector<StateVector>& copies,
                                     std::uint64_t subset_size, RandomSource& rng);
SwapAttempt repeated_zero_error_swap(const std::vector<StateVector>& copies,
                                     const SubsetSpec& spec, RandomSource& rng);

/// Probability that the Deutsch-Jozsa circuit (H^{x n} then a computational
/// measurement) reads the all-zero string, i.e. reports "constant".
double dj_constant_probability(const StateVector& state);

/// Deutsch-Jozsa distinguisher: 0 = constant, 1 = balanced. Deterministic
/// and exact on the promise that the input is |y_con> or |y_bal>.
int dj_distinguish(const StateVector& state);

/// The explicit distinguisher-derived swapper circuit:
/// (Z on qubit 0, H on qubits 1..n-1), NOT on qubit 0 controlled on qubits
/// 1..n-1 all reading 0, (Z on qubit 0, H on qubits 1..n-1).
/// Equals -U with U the Grover diffusion.
StateVector aas_swapper_from_distinguisher(const StateVector& state);

/// Quantum coupon-collector baseline: the two-outcome measurement
/// {|+^n><+^n|, I - |+^n><+^n|} followed by a computational-basis
/// measurement of the post-measurement state.
std::uint64_t coupon_collector_sample(const StateVector& state,
                                      RandomSource& rng);

/// Exact complement-hit probability of the coupon-collector baseline,
/// 2 (K/N)(1 - K/N).
double coupon_collector_hit_probability(std::uint64_t k, std::uint64_t n_domain);

// Analytic single-sample success curves as functions of beta = K/N - 1/2.
double curve_complement_swapper(double beta);                        // 1 - 4 b^2
double curve_zero_error_swapper(double beta);                        // (1-2|b|)/(1+2|b|)
double curve_coupon_collector(double beta);                          // (1 - 4 b^2)/2
double curve_classical_single_sample(double beta, std::uint64_t n_domain);  // (1/2-b)/(1-1/N)

struct SuccessCurveRow {
    double beta = 0.0;
    std::uint64_t k = 0;
    double analytic_cs = 0.0, analytic_ze = 0.0, analytic_cc = 0.0, analytic_cl = 0.0;
    double simulated_cs = 0.0, simulated_ze = 0.0, simulated_cc = 0.0, simulated_cl = 0.0;
    int trials = 0;
    std::uint64_t seed = 0;
};

/// Analytic and Monte Carlo single-sample success rates for every K (one
/// row per beta with K = N(1/2+beta) integral). Simulation draws a fresh
/// random K-subset per trial.
std::vector<SuccessCurveRow> success_curves(int n_qubits, int trials,
                                            std::uint64_t seed);

/// Same, restricted to an explicit beta grid. Throws std::invalid_argument
/// listing admissible beta values when K = N(1/2+beta) is not integral.
std::vector<SuccessCurveRow> success_curves(int n_qubits,
                                            const std::vector<double>& beta_grid,
                                            int trials, std::uint64_t seed);

}  // namespace csamp
