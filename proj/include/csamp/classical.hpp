#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "csamp/rng.hpp"
#include "csamp/subset.hpp"

namespace csamp {

/// Query-counted access to the i-th element of a hidden subset, the
/// classical access model. Indices are 1-based; every call counts.
class IndexOracle {
public:
    virtual ~IndexOracle() = default;

    virtual std::uint64_t domain_size() const = 0;  // N
    virtual std::uint64_t subset_size() const = 0;  // K
    virtual std::uint64_t query(std::uint64_t i) = 0;
    virtual std::uint64_t query_count() const = 0;
};

/// Index oracle over an explicit element list. The domain need not be a
/// power of two; subsets over {0,1}^n pass domain_size = 2^n.
class SubsetIndexOracle final : public IndexOracle {
public:
    SubsetIndexOracle(std::uint64_t domain_size, std::vector<std::uint64_t> elements);
    explicit SubsetIndexOracle(const SubsetSpec& spec);

    std::uint64_t domain_size() const override { return domain_; }
    std::uint64_t subset_size() const override { return elements_.size(); }
    std::uint64_t query(std::uint64_t i) override;
    std::uint64_t query_count() const override { return queries_; }

private:
    std::uint64_t domain_ = 0;
    std::vector<std::uint64_t> elements_;
    std::uint64_t queries_ = 0;
};

/// View of another oracle conjugated by a permutation: query(i) returns
/// sigma(inner.query(i)). Query counting is delegated to the inner oracle.
class PermutedIndexOracle final : public IndexOracle {
public:
    PermutedIndexOracle(IndexOracle& inner, const std::vector<std::uint64_t>& sigma);

    std::uint64_t domain_size() const override { return inner_.domain_size(); }
    std::uint64_t subset_size() const override { return inner_.subset_size(); }
    std::uint64_t query(std::uint64_t i) override { return sigma_[inner_.query(i)]; }
    std::uint64_t query_count() const override { return inner_.query_count(); }

private:
    IndexOracle& inner_;
    const std::vector<std::uint64_t>& sigma_;
};

/// Minimum number of index queries needed to output a complement element
/// with probability >= 1/2 + delta on all inputs: N - 2(N-K)/(2 delta + 1).
/// May be negative, in which case zero queries suffice.
double lower_bound_queries(std::uint64_t n_domain, std::uint64_t k, double delta);

enum class GuessPolicy {
    kExcludeSeen,  // uniform over the N-q unseen strings (optimal)
    kAnyString,    // uniform over all N strings
};

/// The optimal classical baseline: query indices 1..q_budget, then guess
/// uniformly from the unseen strings. Success probability over uniformly
/// random S is exactly (N-K)/(N-q).
std::uint64_t random_guess_player(IndexOracle& oracle, std::uint64_t q_budget,
                                  RandomSource& rng,
                                  GuessPolicy policy = GuessPolicy::kExcludeSeen);

/// Occupancy distribution of distinct elements in d draws from a K-set.
/// probabilities[q] for q in 0..min(d,K); exact[q] is the reduced fraction
/// as "num/den" (exact integer arithmetic; doubles only at the end).
struct UniqueDrawDistribution {
    std::uint64_t k = 0;
    int d = 0;
    std::vector<double> probabilities;
    std::vector<std::string> exact;
};

/// Throws ScaleError for d > 64 or K > 10^6.
UniqueDrawDistribution unique_draw_distribution(std::uint64_t k, int d);

/// Success probability of draw-then-guess with d samples:
/// sum_q P[q distinct] * (N-K)/(N-q).
double sample_complexity_success(std::uint64_t n_domain, std::uint64_t k, int d);
/// Same value as an exact reduced fraction "num/den".
std::string sample_complexity_success_exact(std::uint64_t n_domain, std::uint64_t k,
                                            int d);

/// Exhaustive check of the posterior over complements after observing Q:
/// enumerates every S of size K containing Q (N <= 16) and verifies the
/// conditional distribution of complements is exactly uniform.
struct UniformityReport {
    std::uint64_t num_complements = 0;
    double probability_each = 0.0;
    bool uniform = false;
    bool excludes_queried = false;
};

UniformityReport bayes_uniformity_check(std::uint64_t n_domain, std::uint64_t k,
                                        const std::vector<std::uint64_t>& observed);

using Player = std::function<std::uint64_t(IndexOracle&, RandomSource&)>;

/// Worst-to-average reduction: conjugate the oracle by a fresh uniformly
/// random permutation sigma, run the wrapped player, return
/// sigma^{-1}(candidate). Per-instance success of the returned player
/// equals the wrapped player's average-case success. Domains above 2^20
/// are rejected (explicit permutation tables).
Player average_case_reduction(Player inner);

}  // namespace csamp
