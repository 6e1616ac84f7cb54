#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "csamp/rng.hpp"
#include "csamp/statevector.hpp"

namespace csamp {

/// An ordered subset S of {0,1}^n with 1 <= |S| <= 2^n - 1. The element
/// order is fixed at construction (generation order) and defines the index
/// oracle's i-th element; any fixed order is a valid oracle ordering.
struct SubsetSpec {
    int n = 0;
    std::vector<std::uint64_t> elements;

    std::uint64_t domain_size() const { return std::uint64_t{1} << n; }  // N
    std::uint64_t size() const { return elements.size(); }               // K

    /// Deviation from the half ratio: K/N - 1/2. Derived, never stored.
    double beta() const {
        return static_cast<double>(size()) / static_cast<double>(domain_size()) - 0.5;
    }

    bool contains(std::uint64_t x) const;
    /// Characteristic vector over the domain, for O(1) membership in loops.
    std::vector<bool> membership_mask() const;
    /// Complement subset, elements in ascending order.
    SubsetSpec complement() const;

    /// Throws std::invalid_argument on duplicate/out-of-range elements or
    /// empty S / empty complement.
    void validate() const;
};

/// Uniformly random K-subset; element order is the draw order.
SubsetSpec random_subset(int n, std::uint64_t k, RandomSource& rng);

/// JSON round-trip: {"n": int, "elements": ["0x..", ...]}.
std::string subset_to_json(const SubsetSpec& spec);
SubsetSpec subset_from_json(const std::string& text);

/// A balanced boolean function f with f(x) = 0 exactly on `support`
/// (|support| = N/2).
struct BalancedFunctionSpec {
    SubsetSpec support;

    int eval(std::uint64_t x) const { return support.contains(x) ? 0 : 1; }
    void validate() const;
};

/// |S> with amplitude 1/sqrt(K) on each member.
StateVector make_subset_state(const SubsetSpec& spec);
/// |S-bar> supported on the complement.
StateVector make_complement_state(const SubsetSpec& spec);
/// Phase state with amplitudes (-1)^{f(x)} / sqrt(N).
StateVector make_phase_state(const BalancedFunctionSpec& f);
/// Phase state of the constant function: |+^n>.
StateVector make_constant_phase_state(int n_qubits);

/// |<y_f|y_g>| = |2*|{x : f(x)=g(x)}| - N| / N, computed combinatorially.
double phase_state_overlap(const BalancedFunctionSpec& f,
                           const BalancedFunctionSpec& g);

/// |<phi+_1|phi-_2>|^2 for conjugate states of two K-subsets with
/// intersection size x: (1/4) * ((2K-N)(K-x) / (K(N-K)))^2.
double conjugate_pair_overlap(std::uint64_t k, std::uint64_t n_domain,
                              std::uint64_t x_intersection);

/// Maximum of conjugate_pair_overlap over admissible x:
/// (1/4)((N-2K)/(K-N))^2 for K <= N/2, (1/4)(2-N/K)^2 otherwise.
double max_conjugate_overlap(std::uint64_t k, std::uint64_t n_domain);

}  // namespace csamp
