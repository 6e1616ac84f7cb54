#include <doctest.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "csamp/classical.hpp"
#include "csamp/errors.hpp"
#include "csamp/exactmath.hpp"

using namespace csamp;

TEST_CASE("stirling numbers and helpers") {
    CHECK(stirling2(0, 0) == 1);
    CHECK(stirling2(3, 0) == 0);
    CHECK(stirling2(2, 3) == 0);
    CHECK(stirling2(4, 2) == 7);
    CHECK(stirling2(5, 3) == 25);
    CHECK(stirling2(10, 10) == 1);

    CHECK(falling_factorial(5, 0) == 1);
    CHECK(falling_factorial(5, 3) == 60);
    CHECK(binomial(8, 4) == 70);
    CHECK(binomial(3, 5) == 0);
}

TEST_CASE("query lower bound formula") {
    // The headline instance: N=2^16, K=2^15, delta=1/6 needs 2^14 queries.
    CHECK(lower_bound_queries(65536, 32768, 1.0 / 6.0) == 16384.0);

    // delta = 1/2 forces seeing all of S.
    CHECK(lower_bound_queries(65536, 32768, 0.5) == 32768.0);
    CHECK(lower_bound_queries(1024, 100, 0.5) == 100.0);

    // K = N/2 with delta = 0: guessing is already good enough.
    CHECK(lower_bound_queries(65536, 32768, 0.0) == 0.0);

    CHECK_THROWS_AS(lower_bound_queries(16, 0, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(lower_bound_queries(16, 16, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(lower_bound_queries(16, 8, 0.6), std::invalid_argument);
    CHECK_THROWS_AS(lower_bound_queries(16, 8, -0.1), std::invalid_argument);

    // Monotone nondecreasing in delta and in K.
    for (std::uint64_t k = 1; k < 64; ++k) {
        double prev = lower_bound_queries(64, k, 0.0);
        for (double delta = 0.05; delta <= 0.5; delta += 0.05) {
            const double cur = lower_bound_queries(64, k, delta);
            CHECK(cur >= prev - 1e-12);
            prev = cur;
        }
    }
    for (double delta : {0.0, 0.1, 0.3, 0.5}) {
        double prev = lower_bound_queries(64, 1, delta);
        for (std::uint64_t k = 2; k < 64; ++k) {
            const double cur = lower_bound_queries(64, k, delta);
            CHECK(cur >= prev - 1e-12);
            prev = cur;
        }
    }
}

TEST_CASE("random guess player: full budget always wins") {
    RandomSource rng(201);
    const SubsetSpec spec = random_subset(4, 9, rng);
    const auto member = spec.membership_mask();
    for (int trial = 0; trial < 50; ++trial) {
        SubsetIndexOracle oracle(spec);
        const std::uint64_t guess = random_guess_player(oracle, spec.size(), rng);
        CHECK_FALSE(member[guess]);
        CHECK(oracle.query_count() == spec.size());
    }
}

TEST_CASE("random guess player success is (N-K)/(N-q) exactly, N <= 12") {
    // For every subset, every guess: with Q the first q oracle answers
    // (all inside S), exactly N-K of the N-q admissible guesses hit the
    // complement, whatever the element order. Enumerate to confirm.
    for (std::uint64_t domain = 4; domain <= 12; ++domain) {
        for (std::uint64_t k = 1; k < domain; ++k) {
            for (std::uint64_t q = 0; q <= k; ++q) {
                long long favorable_total = 0, possible_total = 0, subsets = 0;
                for (std::uint32_t mask = 0; mask < (1u << domain); ++mask) {
                    if (static_cast<std::uint64_t>(std::popcount(mask)) != k) continue;
                    ++subsets;
                    std::vector<std::uint64_t> elements;
                    for (std::uint64_t x = 0; x < domain; ++x)
                        if (mask & (1u << x)) elements.push_back(x);
                    // Q = first q elements; count correct guesses among
                    // the unseen strings.
                    std::set<std::uint64_t> seen(elements.begin(), elements.begin() + q);
                    long long favorable = 0, possible = 0;
                    for (std::uint64_t y = 0; y < domain; ++y) {
                        if (seen.count(y)) continue;
                        ++possible;
                        if (!(mask & (1u << y))) ++favorable;
                    }
                    CHECK(favorable == static_cast<long long>(domain - k));
                    CHECK(possible == static_cast<long long>(domain - q));
                    favorable_total += favorable;
                    possible_total += possible;
                }
                // Averaged over all subsets the ratio is still exact:
                // favorable_total / possible_total = (N-K)/(N-q).
                CHECK(favorable_total * static_cast<long long>(domain - q) ==
                      possible_total * static_cast<long long>(domain - k));
                CHECK(favorable_total ==
                      subsets * static_cast<long long>(domain - k));
            }
        }
    }
}

TEST_CASE("random guess player sampling is uniform over unseen strings") {
    SubsetSpec spec;
    spec.n = 3;
    spec.elements = {1, 4, 6, 3};
    const auto member = spec.membership_mask();

    constexpr int kTrials = 60000;
    std::map<std::uint64_t, int> counts;
    int wins = 0;
    RandomSource rng(207);
    for (int t = 0; t < kTrials; ++t) {
        SubsetIndexOracle oracle(spec);
        const std::uint64_t guess = random_guess_player(oracle, 2, rng);
        CHECK(guess != 1);  // the two queried elements are excluded
        CHECK(guess != 4);
        ++counts[guess];
        wins += !member[guess];
    }
    const double per_string = 1.0 / 6.0;
    const double sigma_string = std::sqrt(per_string * (1 - per_string) / kTrials);
    for (const auto& [value, count] : counts)
        CHECK(std::abs(static_cast<double>(count) / kTrials - per_string) <=
              5.0 * sigma_string);

    const double expected = 4.0 / 6.0;  // (N-K)/(N-q) = 4/6
    const double sigma = std::sqrt(expected * (1 - expected) / kTrials);
    CHECK(std::abs(static_cast<double>(wins) / kTrials - expected) <= 5.0 * sigma);
}

TEST_CASE("guess policies: excluding seen samples vs guessing anywhere") {
    // Single sample at n=4: exclude-seen wins with 2^3/(2^4-1) = 8/15,
    // guess-anything with 1/2.
    SubsetSpec spec;
    spec.n = 4;
    for (std::uint64_t i = 0; i < 8; ++i) spec.elements.push_back(2 * i);
    const auto member = spec.membership_mask();

    constexpr int kTrials = 60000;
    int wins_exclude = 0, wins_any = 0;
    RandomSource rng(211);
    for (int t = 0; t < kTrials; ++t) {
        SubsetIndexOracle oracle_a(spec);
        wins_exclude += !member[random_guess_player(oracle_a, 1, rng)];
        SubsetIndexOracle oracle_b(spec);
        wins_any += !member[random_guess_player(oracle_b, 1, rng,
                                                GuessPolicy::kAnyString)];
    }
    const double p_exclude = 8.0 / 15.0;
    const double sigma_e = std::sqrt(p_exclude * (1 - p_exclude) / kTrials);
    CHECK(std::abs(wins_exclude / static_cast<double>(kTrials) - p_exclude) <=
          5.0 * sigma_e);
    const double sigma_a = std::sqrt(0.25 / kTrials);
    CHECK(std::abs(wins_any / static_cast<double>(kTrials) - 0.5) <= 5.0 * sigma_a);

    SubsetIndexOracle oracle(spec);
    CHECK_THROWS_AS(random_guess_player(oracle, 9, rng), std::invalid_argument);
}

TEST_CASE("unique draw distribution: pinned small cases") {
    const auto d1 = unique_draw_distribution(5, 1);
    CHECK(d1.probabilities[1] == doctest::Approx(1.0).epsilon(1e-12));

    // K=2, d=3: q=1 with 2/8, q=2 with 6/8.
    const auto d23 = unique_draw_distribution(2, 3);
    CHECK(d23.exact[1] == "1/4");
    CHECK(d23.exact[2] == "3/4");

    // K=3, d=2 discriminates the falling-factorial prefactor from the
    // printed bare K: q=2 must be 6/9, not 3/9.
    const auto d32 = unique_draw_distribution(3, 2);
    CHECK(d32.exact[1] == "1/3");
    CHECK(d32.exact[2] == "2/3");

    CHECK_THROWS_AS(unique_draw_distribution(3, 65), ScaleError);
    CHECK_THROWS_AS(unique_draw_distribution(1000001, 4), ScaleError);
}

TEST_CASE("unique draw distribution equals exhaustive enumeration, K <= 5, d <= 6") {
    for (std::uint64_t k = 1; k <= 5; ++k) {
        for (int d = 1; d <= 6; ++d) {
            // Count distinct-value statistics over all K^d draw sequences.
            std::uint64_t total = 1;
            for (int i = 0; i < d; ++i) total *= k;
            std::vector<std::uint64_t> counts(d + 1, 0);
            for (std::uint64_t code = 0; code < total; ++code) {
                std::uint64_t c = code;
                std::set<std::uint64_t> distinct;
                for (int i = 0; i < d; ++i) {
                    distinct.insert(c % k);
                    c /= k;
                }
                ++counts[distinct.size()];
            }
            for (int q = 0; q <= d; ++q) {
                const BigRational enumerated(counts[q], total);
                CHECK(unique_draw_probability_exact(k, d, q) == enumerated);
            }
        }
    }
}

TEST_CASE("unique draw distribution sums to one exactly, K <= 12, d <= 12") {
    for (std::uint64_t k = 1; k <= 12; ++k) {
        for (int d = 1; d <= 12; ++d) {
            BigRational total = 0;
            const int q_max = static_cast<int>(std::min<std::uint64_t>(k, d));
            for (int q = 0; q <= q_max; ++q)
                total += unique_draw_probability_exact(k, d, q);
            CHECK(total == BigRational(1));
        }
    }
}

TEST_CASE("sample complexity success") {
    // K=2, N=4, d=1: always one distinct sample, then guess: 2/3.
    CHECK(sample_complexity_success(4, 2, 1) ==
          doctest::Approx(2.0 / 3.0).epsilon(1e-12));

    // Large d approaches certainty (all of S seen).
    CHECK(std::abs(sample_complexity_success(8, 4, 64) - 1.0) <= 1e-6);

    // Monotone nondecreasing in d.
    double prev = 0.0;
    for (int d = 1; d <= 30; ++d) {
        const double cur = sample_complexity_success(8, 4, d);
        CHECK(cur >= prev - 1e-12);
        prev = cur;
    }

    // K=4, N=8, d=3 against straight Monte Carlo of draw-then-guess.
    constexpr int kTrials = 200000;
    RandomSource rng(223);
    int wins = 0;
    for (int t = 0; t < kTrials; ++t) {
        std::set<std::uint64_t> seen;
        for (int i = 0; i < 3; ++i) seen.insert(rng.uniform_below(4));  // S = {0..3}
        std::uint64_t guess = rng.uniform_below(8 - seen.size());
        for (std::uint64_t s : seen) {
            if (s > guess) break;
            ++guess;
        }
        wins += guess >= 4;
    }
    const double expected = sample_complexity_success(8, 4, 3);
    const double sigma = std::sqrt(expected * (1.0 - expected) / kTrials);
    CHECK(std::abs(static_cast<double>(wins) / kTrials - expected) <= 5.0 * sigma);
}

TEST_CASE("posterior over complements is exactly uniform") {
    // Q empty: all C(N, N-K) complements, each equally likely.
    const auto empty = bayes_uniformity_check(6, 3, {});
    CHECK(empty.num_complements == 20);
    CHECK(empty.uniform);
    CHECK(empty.excludes_queried);

    // N=6, K=3, Q={2}: complements avoiding 2, each 1/C(5,3).
    const auto one = bayes_uniformity_check(6, 3, {2});
    CHECK(one.num_complements == 10);
    CHECK(one.probability_each == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(one.uniform);
    CHECK(one.excludes_queried);

    CHECK_THROWS_AS(bayes_uniformity_check(17, 8, {}), ScaleError);
    CHECK_THROWS_AS(bayes_uniformity_check(6, 3, {0, 1, 2, 3}), std::invalid_argument);
}

TEST_CASE("random permutations map a fixed subset to every target equally often") {
    // All 6! permutations of a 6-element domain, fixed S: each target of
    // size K is hit exactly K!(N-K)! times.
    for (std::uint64_t k : {1ULL, 2ULL, 3ULL}) {
        std::vector<int> perm{0, 1, 2, 3, 4, 5};
        std::map<std::uint32_t, int> hits;
        do {
            std::uint32_t image = 0;
            for (std::uint64_t i = 0; i < k; ++i) image |= 1u << perm[i];  // S = [K]
            ++hits[image];
        } while (std::next_permutation(perm.begin(), perm.end()));

        std::uint64_t expected = 1;
        for (std::uint64_t i = 2; i <= k; ++i) expected *= i;
        for (std::uint64_t i = 2; i <= 6 - k; ++i) expected *= i;

        CHECK(hits.size() == binomial(6, k).convert_to<std::uint64_t>());
        for (const auto& [image, count] : hits)
            CHECK(count == static_cast<int>(expected));
    }
}

TEST_CASE("average-case reduction preserves the uniform-guess success rate") {
    SubsetSpec spec;
    spec.n = 4;
    spec.elements = {3, 7, 1, 14, 9, 0, 12, 5};
    const auto member = spec.membership_mask();

    const Player direct = [](IndexOracle& oracle, RandomSource& rng) {
        return random_guess_player(oracle, 2, rng);
    };
    const Player reduced = average_case_reduction(direct);

    constexpr int kTrials = 40000;
    int wins = 0;
    RandomSource rng(227);
    for (int t = 0; t < kTrials; ++t) {
        SubsetIndexOracle oracle(spec);
        wins += !member[reduced(oracle, rng)];
    }
    const double expected = 8.0 / 14.0;  // (N-K)/(N-q)
    const double sigma = std::sqrt(expected * (1 - expected) / kTrials);
    CHECK(std::abs(static_cast<double>(wins) / kTrials - expected) <= 5.0 * sigma);
}

TEST_CASE("average-case reduction turns a constant player into a uniform one") {
    // A player hardcoded to output 0 wins on a fixed S exactly when
    // sigma^{-1}(0) falls outside S: probability (N-K)/N over sigma.
    SubsetSpec spec;
    spec.n = 4;
    spec.elements = {0, 1, 2, 3};
    const auto member = spec.membership_mask();

    const Player constant = [](IndexOracle&, RandomSource&) -> std::uint64_t {
        return 0;
    };
    const Player reduced = average_case_reduction(constant);

    constexpr int kTrials = 100000;
    int wins = 0;
    RandomSource rng(229);
    for (int t = 0; t < kTrials; ++t) {
        SubsetIndexOracle oracle(spec);
        wins += !member[reduced(oracle, rng)];
    }
    const double expected = 12.0 / 16.0;
    const double sigma = std::sqrt(expected * (1 - expected) / kTrials);
    CHECK(std::abs(static_cast<double>(wins) / kTrials - expected) <= 5.0 * sigma);
}

TEST_CASE("permuted index oracle composes and counts queries") {
    SubsetSpec spec;
    spec.n = 3;
    spec.elements = {5, 2, 7};
    SubsetIndexOracle inner(spec);

    std::vector<std::uint64_t> sigma{1, 0, 3, 2, 5, 4, 7, 6};  // involution
    std::vector<std::uint64_t> sigma_inv(8);
    for (std::uint64_t i = 0; i < 8; ++i) sigma_inv[sigma[i]] = i;
    for (std::uint64_t i = 0; i < 8; ++i) CHECK(sigma_inv[sigma[i]] == i);

    PermutedIndexOracle outer(inner, sigma);
    CHECK(outer.query(1) == sigma[5]);
    CHECK(outer.query(2) == sigma[2]);
    CHECK(outer.query_count() == 2);
    CHECK(inner.query_count() == 2);
    CHECK(outer.domain_size() == 8);
    CHECK(outer.subset_size() == 3);
}
