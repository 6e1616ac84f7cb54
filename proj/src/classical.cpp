#include "csamp/classical.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "csamp/errors.hpp"
#include "csamp/exactmath.hpp"

namespace csamp {

BigInt stirling2(int d, int q) {
    if (d < 0 || q < 0) throw std::invalid_argument("stirling2: negative argument");
    if (q > d) return 0;
    if (d == 0) return q == 0 ? 1 : 0;
    if (q == 0) return 0;
    // Row-by-row triangular recurrence S(i, j) = j S(i-1, j) + S(i-1, j-1).
    std::vector<BigInt> row(static_cast<std::size_t>(q) + 1, 0);
    row[0] = 1;  // S(0, 0)
    for (int i = 1; i <= d; ++i) {
        for (int j = std::min(i, q); j >= 1; --j)
            row[j] = BigInt(j) * row[j] + row[j - 1];
        row[0] = 0;
    }
    return row[q];
}

BigInt falling_factorial(std::uint64_t k, int q) {
    if (q < 0) throw std::invalid_argument("falling_factorial: negative length");
    BigInt result = 1;
    for (int i = 0; i < q; ++i) result *= BigInt(k - static_cast<std::uint64_t>(i));
    return result;
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigInt result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        result *= BigInt(n - k + i);
        result /= BigInt(i);  // exact at every step
    }
    return result;
}

BigRational unique_draw_probability_exact(std::uint64_t k, int d, int q) {
    if (k < 1 || d < 1) throw std::invalid_argument("unique draws: need K, d >= 1");
    if (q < 0 || static_cast<std::uint64_t>(q) > k || q > d) return 0;
    BigInt den = 1;
    for (int i = 0; i < d; ++i) den *= BigInt(k);
    return BigRational(falling_factorial(k, q) * stirling2(d, q), den);
}

SubsetIndexOracle::SubsetIndexOracle(std::uint64_t domain_size,
                                     std::vector<std::uint64_t> elements)
    : domain_(domain_size), elements_(std::move(elements)) {
    if (elements_.empty() || elements_.size() >= domain_)
        throw std::invalid_argument("index oracle: need 1 <= K <= N-1");
    for (std::uint64_t x : elements_)
        if (x >= domain_)
            throw std::invalid_argument("index oracle: element out of range");
}

SubsetIndexOracle::SubsetIndexOracle(const SubsetSpec& spec)
    : SubsetIndexOracle(spec.domain_size(), spec.elements) {}

std::uint64_t SubsetIndexOracle::query(std::uint64_t i) {
    if (i < 1 || i > elements_.size())
        throw std::out_of_range("index oracle: query index out of range");
    ++queries_;
    return elements_[i - 1];
}

PermutedIndexOracle::PermutedIndexOracle(IndexOracle& inner,
                                         const std::vector<std::uint64_t>& sigma)
    : inner_(inner), sigma_(sigma) {
    if (sigma.size() != inner.domain_size())
        throw std::invalid_argument("permuted oracle: table size mismatch");
}

double lower_bound_queries(std::uint64_t n_domain, std::uint64_t k, double delta) {
    if (k < 1 || k >= n_domain)
        throw std::invalid_argument("lower_bound_queries: need 1 <= K <= N-1");
    if (!(delta >= 0.0 && delta <= 0.5))
        throw std::invalid_argument("lower_bound_queries: delta must lie in [0, 1/2]");
    const double nd = static_cast<double>(n_domain);
    const double kd = static_cast<double>(k);
    return nd - 2.0 * (nd - kd) / (2.0 * delta + 1.0);
}

std::uint64_t random_guess_player(IndexOracle& oracle, std::uint64_t q_budget,
                                  RandomSource& rng, GuessPolicy policy) {
    if (q_budget > oracle.subset_size())
        throw std::invalid_argument("random_guess_player: budget exceeds |S|");
    std::vector<std::uint64_t> seen;
    seen.reserve(q_budget);
    for (std::uint64_t i = 1; i <= q_budget; ++i) seen.push_back(oracle.query(i));

    const std::uint64_t domain = oracle.domain_size();
    if (policy == GuessPolicy::kAnyString) return rng.uniform_below(domain);

    // Uniform over the domain minus the seen strings: draw a rank among
    // the unseen and shift it past every smaller seen value.
    std::sort(seen.begin(), seen.end());
    std::uint64_t guess = rng.uniform_below(domain - q_budget);
    for (std::uint64_t s : seen) {
        if (s > guess) break;
        ++guess;
    }
    return guess;
}

UniqueDrawDistribution unique_draw_distribution(std::uint64_t k, int d) {
    if (k < 1 || d < 1) throw std::invalid_argument("unique draws: need K, d >= 1");
    if (d > 64 || k > 1000000)
        throw ScaleError("unique_draw_distribution: supported range is d <= 64, K <= 10^6");
    const int q_max = static_cast<int>(std::min<std::uint64_t>(k, d));
    UniqueDrawDistribution dist;
    dist.k = k;
    dist.d = d;
    dist.probabilities.resize(q_max + 1, 0.0);
    dist.exact.resize(q_max + 1, "0/1");
    for (int q = 1; q <= q_max; ++q) {
        const BigRational p = unique_draw_probability_exact(k, d, q);
        dist.probabilities[q] = p.convert_to<double>();
        dist.exact[q] = boost::multiprecision::numerator(p).str() + "/" +
                        boost::multiprecision::denominator(p).str();
    }
    return dist;
}

namespace {

BigRational sample_success_rational(std::uint64_t n_domain, std::uint64_t k, int d) {
    if (k < 1 || k >= n_domain)
        throw std::invalid_argument("sample_complexity_success: need 1 <= K <= N-1");
    if (d < 1) throw std::invalid_argument("sample_complexity_success: need d >= 1");
    if (d > 64 || k > 1000000)
        throw ScaleError("sample_complexity_success: supported range is d <= 64, K <= 10^6");
    const int q_max = static_cast<int>(std::min<std::uint64_t>(k, d));
    BigRational total = 0;
    for (int q = 1; q <= q_max; ++q) {
        const BigRational correct(n_domain - k, n_domain - static_cast<std::uint64_t>(q));
        total += unique_draw_probability_exact(k, d, q) * correct;
    }
    return total;
}

}  // namespace

double sample_complexity_success(std::uint64_t n_domain, std::uint64_t k, int d) {
    return sample_success_rational(n_domain, k, d).convert_to<double>();
}

std::string sample_complexity_success_exact(std::uint64_t n_domain, std::uint64_t k,
                                            int d) {
    const BigRational value = sample_success_rational(n_domain, k, d);
    return boost::multiprecision::numerator(value).str() + "/" +
           boost::multiprecision::denominator(value).str();
}

UniformityReport bayes_uniformity_check(std::uint64_t n_domain, std::uint64_t k,
                                        const std::vector<std::uint64_t>& observed) {
    if (n_domain > 16)
        throw ScaleError("bayes_uniformity_check: exhaustive enumeration needs N <= 16");
    if (k < 1 || k >= n_domain)
        throw std::invalid_argument("bayes_uniformity_check: need 1 <= K <= N-1");
    if (observed.size() > k)
        throw std::invalid_argument("bayes_uniformity_check: |Q| must be <= K");

    std::uint32_t q_mask = 0;
    for (std::uint64_t x : observed) {
        if (x >= n_domain)
            throw std::invalid_argument("bayes_uniformity_check: element out of range");
        q_mask |= std::uint32_t{1} << x;
    }

    const std::uint32_t full = (n_domain == 32) ? ~std::uint32_t{0}
                                                : (std::uint32_t{1} << n_domain) - 1;
    std::vector<std::uint32_t> complements;
    for (std::uint32_t s = 0; s <= full; ++s) {
        if (static_cast<std::uint64_t>(std::popcount(s)) != k) continue;
        if ((s & q_mask) != q_mask) continue;  // only S containing Q
        complements.push_back(full & ~s);
    }

    UniformityReport report;
    report.num_complements = complements.size();
    report.probability_each =
        complements.empty() ? 0.0 : 1.0 / static_cast<double>(complements.size());
    // S |-> complement(S) is a bijection and every admissible S carries the
    // same conditional weight, so uniformity fails only if a complement
    // repeats or touches Q.
    std::sort(complements.begin(), complements.end());
    report.uniform =
        std::adjacent_find(complements.begin(), complements.end()) == complements.end();
    report.excludes_queried = std::all_of(
        complements.begin(), complements.end(),
        [q_mask](std::uint32_t c) { return (c & q_mask) == 0; });
    return report;
}

Player average_case_reduction(Player inner) {
    return [inner = std::move(inner)](IndexOracle& oracle,
                                      RandomSource& rng) -> std::uint64_t {
        const std::uint64_t domain = oracle.domain_size();
        if (domain > (std::uint64_t{1} << 20))
            throw ScaleError("average_case_reduction: explicit permutation tables need N <= 2^20");
        std::vector<std::uint64_t> sigma(domain);
        std::iota(sigma.begin(), sigma.end(), 0);
        for (std::uint64_t i = 0; i + 1 < domain; ++i) {
            const std::uint64_t j = i + rng.uniform_below(domain - i);
            std::swap(sigma[i], sigma[j]);
        }
        std::vector<std::uint64_t> sigma_inv(domain);
        for (std::uint64_t i = 0; i < domain; ++i) sigma_inv[sigma[i]] = i;

        PermutedIndexOracle conjugated(oracle, sigma);
        const std::uint64_t candidate = inner(conjugated, rng);
        if (candidate >= domain)
            throw std::out_of_range("average_case_reduction: candidate out of domain");
        return sigma_inv[candidate];
    };
}

}  // namespace csamp
