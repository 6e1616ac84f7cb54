#include "csamp/swappers.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace csamp {

namespace {

/// |0>-ancilla appended as the highest-index qubit (LSB of the extended
/// basis index, given the qubit-0-is-MSB convention).
StateVector attach_ancilla(const StateVector& state) {
    StateVector out{state.n_qubits + 1, std::vector<cdouble>(state.dim() * 2)};
    for (std::uint64_t x = 0; x < state.dim(); ++x) out.amps[x << 1] = state.amps[x];
    return out;
}

/// Drops the highest-index qubit, keeping the branch where it reads `bit`.
/// The input must already be projected onto that branch.
StateVector detach_ancilla(const StateVector& extended, int bit) {
    StateVector out{extended.n_qubits - 1,
                    std::vector<cdouble>(extended.dim() / 2)};
    for (std::uint64_t x = 0; x < out.dim(); ++x)
        out.amps[x] = extended.amps[(x << 1) | static_cast<std::uint64_t>(bit)];
    return out;
}

}  // namespace

ZeroErrorConfig ZeroErrorConfig::for_subset(std::uint64_t k, std::uint64_t n_domain) {
    if (k < 1 || k >= n_domain)
        throw std::invalid_argument("zero-error config: need 1 <= K <= N-1");
    const double kn = static_cast<double>(k) / static_cast<double>(n_domain);
    if (2 * k < n_domain) return {0, 1.0 / (2.0 * (1.0 - kn))};
    return {1, static_cast<double>(n_domain) / (2.0 * static_cast<double>(k))};
}

ComplementSwapResult complement_swap(const StateVector& state,
                                     const SubsetSpec& spec) {
    spec.validate();
    if (state.n_qubits != spec.n)
        throw std::invalid_argument("complement_swap: state/spec size mismatch");
    const double kn =
        static_cast<double>(spec.size()) / static_cast<double>(spec.domain_size());
    return {apply_diffusion(state), 4.0 * kn * (1.0 - kn)};
}

SwapAttempt zero_error_swap(const StateVector& state, std::uint64_t subset_size,
                            RandomSource& rng) {
    const auto config = ZeroErrorConfig::for_subset(subset_size, state.dim());

    const int ancilla = state.n_qubits;  // highest-index qubit after attach
    StateVector psi = attach_ancilla(state);
    psi = apply_w_gate(psi, ancilla, config.q_w);
    psi = apply_controlled_diffusion(psi, ancilla, 0);
    if (config.b) psi = apply_z(psi, ancilla);
    psi = apply_w_gate(psi, ancilla, config.q_w, /*adjoint=*/true);

    const MeasurementOutcome m = measure_qubit(psi, ancilla, rng);
    SwapAttempt attempt;
    attempt.flag = static_cast<int>(m.bits);
    attempt.success_probability =
        attempt.flag == 0 ? m.probability : 1.0 - m.probability;
    attempt.post_state = detach_ancilla(m.post_state, attempt.flag);
    if (attempt.flag == 0)
        attempt.sample = measure_all(attempt.post_state, rng);
    return attempt;
}

SwapAttempt zero_error_swap(const StateVector& state, const SubsetSpec& spec,
                            RandomSource& rng) {
    spec.validate();
    if (state.n_qubits != spec.n)
        throw std::invalid_argument("zero_error_swap: state/spec size mismatch");
    return zero_error_swap(state, spec.size(), rng);
}

SwapAttempt repeated_zero_error_swap(const std::vector<StateVector>& copies,
                                     std::uint64_t subset_size, RandomSource& rng) {
    if (copies.empty())
        throw std::invalid_argument("repeated_zero_error_swap: need at least one copy");
    SwapAttempt attempt;
    for (const auto& copy : copies) {
        attempt = zero_error_swap(copy, subset_size, rng);
        if (attempt.flag == 0) break;
    }
    return attempt;
}

SwapAttempt repeated_zero_error_swap(const std::vector<StateVector>& copies,
                                     const SubsetSpec& spec, RandomSource& rng) {
    spec.validate();
    return repeated_zero_error_swap(copies, spec.size(), rng);
}

double dj_constant_probability(const StateVector& state) {
    const StateVector rotated = apply_hadamard_all(state);
    return std::norm(rotated.amps[0]);
}

int dj_distinguish(const StateVector& state) {
    // On the promise the all-zero mass is exactly 0 or 1, so thresholding
    // replaces sampling and the answer is deterministic.
    return dj_constant_probability(state) > 0.5 ? 0 : 1;
}

StateVector aas_swapper_from_distinguisher(const StateVector& state) {
    StateVector psi = state;
    std::vector<std::pair<int, int>> controls;
    controls.reserve(state.n_qubits - 1);
    for (int q = 1; q < state.n_qubits; ++q) controls.emplace_back(q, 0);

    for (int q = 1; q < state.n_qubits; ++q) psi = apply_hadamard(psi, q);
    psi = apply_z(psi, 0);
    psi = apply_multi_controlled_not(psi, 0, controls);
    psi = apply_z(psi, 0);
    for (int q = 1; q < state.n_qubits; ++q) psi = apply_hadamard(psi, q);
    return psi;
}

std::uint64_t coupon_collector_sample(const StateVector& state,
                                      RandomSource& rng) {
    const StateVector plus = make_plus_state(state.n_qubits);
    const cdouble overlap = inner_product(plus, state);
    const double p_plus = std::norm(overlap);

    if (rng.uniform_real() < p_plus) return measure_all(plus, rng);

    StateVector residual = state;
    for (std::uint64_t i = 0; i < state.dim(); ++i)
        residual.amps[i] -= overlap * plus.amps[i];
    const double norm = state_norm(residual);
    if (norm < 1e-12)
        throw std::runtime_error("coupon_collector_sample: degenerate branch");
    for (auto& a : residual.amps) a /= norm;
    return measure_all(residual, rng);
}

double coupon_collector_hit_probability(std::uint64_t k, std::uint64_t n_domain) {
    const double kn = static_cast<double>(k) / static_cast<double>(n_domain);
    return 2.0 * kn * (1.0 - kn);
}

double curve_complement_swapper(double beta) { return 1.0 - 4.0 * beta * beta; }

double curve_zero_error_swapper(double beta) {
    const double b = std::abs(beta);
    return (1.0 - 2.0 * b) / (1.0 + 2.0 * b);
}

double curve_coupon_collector(double beta) {
    return 0.5 * (1.0 - 4.0 * beta * beta);
}

double curve_classical_single_sample(double beta, std::uint64_t n_domain) {
    return (0.5 - beta) / (1.0 - 1.0 / static_cast<double>(n_domain));
}

namespace {

SuccessCurveRow simulate_curve_row(int n_qubits, std::uint64_t k, int trials,
                                   std::uint64_t seed) {
    const std::uint64_t domain = std::uint64_t{1} << n_qubits;
    SuccessCurveRow row;
    row.k = k;
    row.beta = static_cast<double>(k) / static_cast<double>(domain) - 0.5;
    row.trials = trials;
    row.seed = seed;
    row.analytic_cs = curve_complement_swapper(row.beta);
    row.analytic_ze = curve_zero_error_swapper(row.beta);
    row.analytic_cc = curve_coupon_collector(row.beta);
    row.analytic_cl = curve_classical_single_sample(row.beta, domain);

    std::uint64_t hits_cs = 0, hits_ze = 0, hits_cc = 0, hits_cl = 0;
    for (int t = 0; t < trials; ++t) {
        RandomSource rng(RandomSource::derive_seed(seed, (k << 40) | static_cast<std::uint64_t>(t)));
        const SubsetSpec spec = random_subset(n_qubits, k, rng);
        const auto member = spec.membership_mask();
        const StateVector sample_state = make_subset_state(spec);

        hits_cs += !member[measure_all(complement_swap(sample_state, spec).state, rng)];
        // Flag 0 is the certified success; the sample is then in the
        // complement by the zero-error guarantee.
        hits_ze += zero_error_swap(sample_state, spec, rng).flag == 0;
        hits_cc += !member[coupon_collector_sample(sample_state, rng)];

        const std::uint64_t seen = spec.elements[rng.uniform_below(spec.size())];
        std::uint64_t guess = rng.uniform_below(domain - 1);
        if (guess >= seen) ++guess;  // uniform over the N-1 strings != seen
        hits_cl += !member[guess];
    }
    const double inv = 1.0 / static_cast<double>(trials);
    row.simulated_cs = static_cast<double>(hits_cs) * inv;
    row.simulated_ze = static_cast<double>(hits_ze) * inv;
    row.simulated_cc = static_cast<double>(hits_cc) * inv;
    row.simulated_cl = static_cast<double>(hits_cl) * inv;
    return row;
}

}  // namespace

std::vector<SuccessCurveRow> success_curves(int n_qubits, int trials,
                                            std::uint64_t seed) {
    if (n_qubits < 1 || n_qubits > 12)
        throw std::invalid_argument("success_curves: simulation sweeps need n <= 12");
    if (trials < 1) throw std::invalid_argument("success_curves: trials must be >= 1");
    const std::uint64_t domain = std::uint64_t{1} << n_qubits;
    std::vector<SuccessCurveRow> rows;
    rows.reserve(domain - 1);
    for (std::uint64_t k = 1; k < domain; ++k)
        rows.push_back(simulate_curve_row(n_qubits, k, trials, seed));
    return rows;
}

std::vector<SuccessCurveRow> success_curves(int n_qubits,
                                            const std::vector<double>& beta_grid,
                                            int trials, std::uint64_t seed) {
    if (n_qubits < 1 || n_qubits > 12)
        throw std::invalid_argument("success_curves: simulation sweeps need n <= 12");
    const std::uint64_t domain = std::uint64_t{1} << n_qubits;
    std::vector<SuccessCurveRow> rows;
    rows.reserve(beta_grid.size());
    for (double beta : beta_grid) {
        const double k_real = static_cast<double>(domain) * (0.5 + beta);
        const double k_rounded = std::round(k_real);
        if (std::abs(k_real - k_rounded) > 1e-9 || k_rounded < 1.0 ||
            k_rounded > static_cast<double>(domain - 1)) {
            char buf[160];
            std::snprintf(buf, sizeof buf,
                          "beta=%.6g does not give an integral subset size; "
                          "admissible values are k/%llu - 1/2 for k in [1, %llu]",
                          beta, static_cast<unsigned long long>(domain),
                          static_cast<unsigned long long>(domain - 1));
            throw std::invalid_argument(buf);
        }
        rows.push_back(simulate_curve_row(
            n_qubits, static_cast<std::uint64_t>(k_rounded), trials, seed));
    }
    return rows;
}

}  // namespace csamp
