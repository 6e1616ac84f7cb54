#include "csamp/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace csamp {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

void check_qubit(const StateVector& state, int qubit) {
    if (qubit < 0 || qubit >= state.n_qubits)
        throw std::out_of_range("qubit index out of range");
}

}  // namespace

StateVector make_zero_state(int n_qubits) {
    return make_basis_state(n_qubits, 0);
}

StateVector make_basis_state(int n_qubits, std::uint64_t index) {
    if (n_qubits < 1) throw std::invalid_argument("need at least one qubit");
    StateVector state{n_qubits, std::vector<cdouble>(std::uint64_t{1} << n_qubits)};
    if (index >= state.dim()) throw std::out_of_range("basis index out of range");
    state.amps[index] = 1.0;
    return state;
}

StateVector make_plus_state(int n_qubits) {
    if (n_qubits < 1) throw std::invalid_argument("need at least one qubit");
    const std::uint64_t dim = std::uint64_t{1} << n_qubits;
    const double amp = 1.0 / std::sqrt(static_cast<double>(dim));
    return {n_qubits, std::vector<cdouble>(dim, amp)};
}

StateVector make_random_state(int n_qubits, RandomSource& rng) {
    if (n_qubits < 1) throw std::invalid_argument("need at least one qubit");
    const std::uint64_t dim = std::uint64_t{1} << n_qubits;
    StateVector state{n_qubits, std::vector<cdouble>(dim)};
    // Box-Muller pairs give an isotropic gaussian vector; normalizing it
    // yields a Haar-random pure state.
    for (auto& a : state.amps) {
        double u1 = rng.uniform_real();
        while (u1 == 0.0) u1 = rng.uniform_real();
        const double u2 = rng.uniform_real();
        const double r = std::sqrt(-2.0 * std::log(u1));
        a = {r * std::cos(2.0 * M_PI * u2), r * std::sin(2.0 * M_PI * u2)};
    }
    const double norm = state_norm(state);
    for (auto& a : state.amps) a /= norm;
    return state;
}

double state_norm(const StateVector& state) {
    double sum = 0.0;
    for (const auto& a : state.amps) sum += std::norm(a);
    return std::sqrt(sum);
}

cdouble inner_product(const StateVector& a, const StateVector& b) {
    if (a.n_qubits != b.n_qubits)
        throw std::invalid_argument("inner_product: qubit count mismatch");
    cdouble sum = 0.0;
    for (std::uint64_t i = 0; i < a.dim(); ++i)
        sum += std::conj(a.amps[i]) * b.amps[i];
    return sum;
}

double fidelity(const StateVector& a, const StateVector& b) {
    return std::abs(inner_product(a, b));
}

StateVector apply_hadamard(const StateVector& state, int qubit) {
    check_qubit(state, qubit);
    StateVector out = state;
    const std::uint64_t mask = state.qubit_mask(qubit);
    for (std::uint64_t i = 0; i < state.dim(); ++i) {
        if (i & mask) continue;
        const std::uint64_t j = i | mask;
        const cdouble a = out.amps[i];
        const cdouble b = out.amps[j];
        out.amps[i] = (a + b) * kInvSqrt2;
        out.amps[j] = (a - b) * kInvSqrt2;
    }
    return out;
}

StateVector apply_hadamard_all(const StateVector& state) {
    StateVector out = state;
    for (int q = 0; q < state.n_qubits; ++q) {
        const std::uint64_t mask = out.qubit_mask(q);
        for (std::uint64_t i = 0; i < out.dim(); ++i) {
            if (i & mask) continue;
            const std::uint64_t j = i | mask;
            const cdouble a = out.amps[i];
            const cdouble b = out.amps[j];
            out.amps[i] = (a + b) * kInvSqrt2;
            out.amps[j] = (a - b) * kInvSqrt2;
        }
    }
    return out;
}

StateVector apply_diffusion(const StateVector& state) {
    cdouble mean = 0.0;
    for (const auto& a : state.amps) mean += a;
    mean /= static_cast<double>(state.dim());
    StateVector out = state;
    for (auto& a : out.amps) a = 2.0 * mean - a;
    return out;
}

StateVector apply_w_gate(const StateVector& state, int qubit, double q_w,
                         bool adjoint) {
    check_qubit(state, qubit);
    if (!(q_w >= 0.0 && q_w <= 1.0))
        throw std::invalid_argument("apply_w_gate: q_w must lie in [0, 1]");
    const double c = std::sqrt(q_w);
    const double s = std::sqrt(1.0 - q_w);
    // W(q) = (c, -s; s, c); the adjoint is the transpose.
    const double m01 = adjoint ? s : -s;
    const double m10 = adjoint ? -s : s;
    StateVector out = state;
    const std::uint64_t mask = state.qubit_mask(qubit);
    for (std::uint64_t i = 0; i < state.dim(); ++i) {
        if (i & mask) continue;
        const std::uint64_t j = i | mask;
        const cdouble a = out.amps[i];
        const cdouble b = out.amps[j];
        out.amps[i] = c * a + m01 * b;
        out.amps[j] = m10 * a + c * b;
    }
    return out;
}

StateVector apply_controlled_diffusion(const StateVector& state, int control,
                                       int control_value) {
    check_qubit(state, control);
    if (control_value != 0 && control_value != 1)
        throw std::invalid_argument("control value must be 0 or 1");
    if (state.n_qubits < 2)
        throw std::invalid_argument("controlled diffusion needs a target register");
    const std::uint64_t mask = state.qubit_mask(control);
    const std::uint64_t want = control_value ? mask : 0;
    cdouble mean = 0.0;
    for (std::uint64_t i = 0; i < state.dim(); ++i)
        if ((i & mask) == want) mean += state.amps[i];
    mean /= static_cast<double>(state.dim() / 2);
    StateVector out = state;
    for (std::uint64_t i = 0; i < state.dim(); ++i)
        if ((i & mask) == want) out.amps[i] = 2.0 * mean - out.amps[i];
    return out;
}

StateVector apply_multi_controlled_not(
    const StateVector& state, int target,
    const std::vector<std::pair<int, int>>& controls) {
    check_qubit(state, target);
    std::uint64_t control_mask = 0;
    std::uint64_t control_want = 0;
    std::uint64_t seen = state.qubit_mask(target);
    for (const auto& [qubit, required] : controls) {
        check_qubit(state, qubit);
        if (required != 0 && required != 1)
            throw std::invalid_argument("control bit must be 0 or 1");
        const std::uint64_t mask = state.qubit_mask(qubit);
        if (seen & mask)
            throw std::invalid_argument("duplicate qubit in multi-controlled NOT");
        seen |= mask;
        control_mask |= mask;
        if (required) control_want |= mask;
    }
    StateVector out = state;
    const std::uint64_t target_mask = state.qubit_mask(target);
    for (std::uint64_t i = 0; i < state.dim(); ++i) {
        if ((i & control_mask) != control_want) continue;
        if (i & target_mask) continue;
        std::swap(out.amps[i], out.amps[i | target_mask]);
    }
    return out;
}

StateVector apply_z(const StateVector& state, int qubit) {
    check_qubit(state, qubit);
    StateVector out = state;
    const std::uint64_t mask = state.qubit_mask(qubit);
    for (std::uint64_t i = 0; i < state.dim(); ++i)
        if (i & mask) out.amps[i] = -out.amps[i];
    return out;
}

StateVector apply_global_phase(const StateVector& state, cdouble phase) {
    StateVector out = state;
    for (auto& a : out.amps) a *= phase;
    return out;
}

MeasurementOutcome measure_qubit(const StateVector& state, int qubit,
                                 RandomSource& rng) {
    check_qubit(state, qubit);
    const std::uint64_t mask = state.qubit_mask(qubit);
    double p1 = 0.0;
    for (std::uint64_t i = 0; i < state.dim(); ++i)
        if (i & mask) p1 += std::norm(state.amps[i]);
    const double p0 = 1.0 - p1;

    const int outcome = rng.uniform_real() < p0 ? 0 : 1;
    const double prob = outcome == 0 ? p0 : p1;
    if (prob < 1e-15)
        throw std::runtime_error("measure_qubit: sampled a degenerate branch");

    MeasurementOutcome result;
    result.bits = static_cast<std::uint64_t>(outcome);
    result.probability = prob;
    result.post_state = state;
    const std::uint64_t want = outcome ? mask : 0;
    const double scale = 1.0 / std::sqrt(prob);
    for (std::uint64_t i = 0; i < state.dim(); ++i) {
        if ((i & mask) == want)
            result.post_state.amps[i] *= scale;
        else
            result.post_state.amps[i] = 0.0;
    }
    return result;
}

std::uint64_t measure_all(const StateVector& state, RandomSource& rng) {
    double u = rng.uniform_real();
    for (std::uint64_t i = 0; i < state.dim(); ++i) {
        u -= std::norm(state.amps[i]);
        if (u < 0.0) return i;
    }
    // Round-off pushed the cumulative sum just below 1; return the last
    // outcome with nonzero mass.
    for (std::uint64_t i = state.dim(); i-- > 0;)
        if (std::norm(state.amps[i]) > 0.0) return i;
    throw std::runtime_error("measure_all: state has no probability mass");
}

std::vector<double> exact_distribution(const StateVector& state) {
    std::vector<double> probs(state.dim());
    for (std::uint64_t i = 0; i < state.dim(); ++i)
        probs[i] = std::norm(state.amps[i]);
    return probs;
}

}  // namespace csamp
