#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "csamp/rng.hpp"

namespace csamp {

using cdouble = std::complex<double>;

/// Dense n-qubit state.
///
/// Qubit ordering convention, used everywhere in this project: qubit 0 is
/// the MOST significant bit of the basis-state index. For n=3 the basis
/// state |q0 q1 q2> = |110> is amplitude index 6.
struct StateVector {
    int n_qubits = 0;
    std::vector<cdouble> amps;

    StateVector() = default;
    StateVector(int n, std::vector<cdouble> a) : n_qubits(n), amps(std::move(a)) {}

    std::uint64_t dim() const { return std::uint64_t{1} << n_qubits; }

    /// Index bit mask for a qubit (qubit 0 = MSB).
    std::uint64_t qubit_mask(int qubit) const {
        return std::uint64_t{1} << (n_qubits - 1 - qubit);
    }
};

/// Outcome of a single- or full-register measurement. `probability` is the
/// exact pre-measurement Born probability of the sampled branch;
/// `post_state` is the renormalized projection.
struct MeasurementOutcome {
    std::uint64_t bits = 0;
    double probability = 0.0;
    StateVector post_state;
};

StateVector make_zero_state(int n_qubits);
StateVector make_basis_state(int n_qubits, std::uint64_t index);
StateVector make_plus_state(int n_qubits);
/// Haar-ish random state for tests (normalized complex gaussians).
StateVector make_random_state(int n_qubits, RandomSource& rng);

double state_norm(const StateVector& state);
cdouble inner_product(const StateVector& a, const StateVector& b);
/// |<a|b>|.
double fidelity(const StateVector& a, const StateVector& b);

// All gate operations are pure: the input is left untouched and a new
// state is returned.

StateVector apply_hadamard(const StateVector& state, int qubit);
StateVector apply_hadamard_all(const StateVector& state);

/// Grover diffusion U = 2|+^n><+^n| - I, computed in O(2^n) as
/// 2*mean(amps) - amp.
StateVector apply_diffusion(const StateVector& state);

/// Real rotation W(q) with matrix (sqrt(q), -sqrt(1-q); sqrt(1-q), sqrt(q))
/// on one qubit; `adjoint` applies the transpose.
StateVector apply_w_gate(const StateVector& state, int qubit, double q_w,
                         bool adjoint = false);

/// Diffusion over all qubits except `control`, applied only on the branch
/// where `control` reads `control_value`.
StateVector apply_controlled_diffusion(const StateVector& state, int control,
                                       int control_value);

/// NOT on `target` for basis states matching every (qubit, required_bit)
/// pair. An empty control list is a plain X.
StateVector apply_multi_controlled_not(
    const StateVector& state, int target,
    const std::vector<std::pair<int, int>>& controls);

StateVector apply_z(const StateVector& state, int qubit);
StateVector apply_global_phase(const StateVector& state, cdouble phase);

MeasurementOutcome measure_qubit(const StateVector& state, int qubit,
                                 RandomSource& rng);
std::uint64_t measure_all(const StateVector& state, RandomSource& rng);
/// All 2^n Born probabilities.
std::vector<double> exact_distribution(const StateVector& state);

}  // namespace csamp
