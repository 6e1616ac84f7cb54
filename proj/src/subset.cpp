#include "csamp/subset.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace csamp {

bool SubsetSpec::contains(std::uint64_t x) const {
    return std::find(elements.begin(), elements.end(), x) != elements.end();
}

std::vector<bool> SubsetSpec::membership_mask() const {
    std::vector<bool> mask(domain_size(), false);
    for (std::uint64_t x : elements) mask[x] = true;
    return mask;
}

SubsetSpec SubsetSpec::complement() const {
    const auto mask = membership_mask();
    SubsetSpec out;
    out.n = n;
    out.elements.reserve(domain_size() - size());
    for (std::uint64_t x = 0; x < domain_size(); ++x)
        if (!mask[x]) out.elements.push_back(x);
    return out;
}

void SubsetSpec::validate() const {
    if (n < 1 || n > 63) throw std::invalid_argument("subset: n out of range");
    if (elements.empty()) throw std::invalid_argument("subset: S must be non-empty");
    if (elements.size() >= domain_size())
        throw std::invalid_argument("subset: complement must be non-empty");
    std::vector<bool> seen(domain_size(), false);
    for (std::uint64_t x : elements) {
        if (x >= domain_size()) throw std::invalid_argument("subset: element out of range");
        if (seen[x]) throw std::invalid_argument("subset: duplicate element");
        seen[x] = true;
    }
}

SubsetSpec random_subset(int n, std::uint64_t k, RandomSource& rng) {
    const std::uint64_t domain = std::uint64_t{1} << n;
    if (k < 1 || k >= domain)
        throw std::invalid_argument("random_subset: need 1 <= K <= N-1");
    // Partial Fisher-Yates over the domain; fine for the n <= 20 sizes
    // this project works at.
    std::vector<std::uint64_t> pool(domain);
    for (std::uint64_t i = 0; i < domain; ++i) pool[i] = i;
    SubsetSpec spec;
    spec.n = n;
    spec.elements.reserve(k);
    for (std::uint64_t i = 0; i < k; ++i) {
        const std::uint64_t j = i + rng.uniform_below(domain - i);
        std::swap(pool[i], pool[j]);
        spec.elements.push_back(pool[i]);
    }
    return spec;
}

std::string subset_to_json(const SubsetSpec& spec) {
    nlohmann::json j;
    j["n"] = spec.n;
    auto& elems = j["elements"] = nlohmann::json::array();
    char buf[32];
    for (std::uint64_t x : spec.elements) {
        std::snprintf(buf, sizeof buf, "0x%llx", static_cast<unsigned long long>(x));
        elems.push_back(buf);
    }
    return j.dump();
}

SubsetSpec subset_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    SubsetSpec spec;
    spec.n = j.at("n").get<int>();
    for (const auto& item : j.at("elements"))
        spec.elements.push_back(std::stoull(item.get<std::string>(), nullptr, 16));
    spec.validate();
    return spec;
}

void BalancedFunctionSpec::validate() const {
    support.validate();
    if (support.size() * 2 != support.domain_size())
        throw std::invalid_argument("balanced function: support must have size N/2");
}

StateVector make_subset_state(const SubsetSpec& spec) {
    spec.validate();
    StateVector state{spec.n, std::vector<cdouble>(spec.domain_size())};
    const double amp = 1.0 / std::sqrt(static_cast<double>(spec.size()));
    for (std::uint64_t x : spec.elements) state.amps[x] = amp;
    return state;
}

StateVector make_complement_state(const SubsetSpec& spec) {
    spec.validate();
    const auto mask = spec.membership_mask();
    StateVector state{spec.n, std::vector<cdouble>(spec.domain_size())};
    const double amp =
        1.0 / std::sqrt(static_cast<double>(spec.domain_size() - spec.size()));
    for (std::uint64_t x = 0; x < spec.domain_size(); ++x)
        if (!mask[x]) state.amps[x] = amp;
    return state;
}

StateVector make_phase_state(const BalancedFunctionSpec& f) {
    f.validate();
    const auto zero_on = f.support.membership_mask();
    const std::uint64_t domain = f.support.domain_size();
    StateVector state{f.support.n, std::vector<cdouble>(domain)};
    const double amp = 1.0 / std::sqrt(static_cast<double>(domain));
    for (std::uint64_t x = 0; x < domain; ++x)
        state.amps[x] = zero_on[x] ? amp : -amp;
    return state;
}

StateVector make_constant_phase_state(int n_qubits) {
    return make_plus_state(n_qubits);
}

double phase_state_overlap(const BalancedFunctionSpec& f,
                           const BalancedFunctionSpec& g) {
    f.validate();
    g.validate();
    if (f.support.n != g.support.n)
        throw std::invalid_argument("phase_state_overlap: mismatched n");
    const auto in_f = f.support.membership_mask();
    std::uint64_t common = 0;
    for (std::uint64_t x : g.support.elements)
        if (in_f[x]) ++common;
    // f(x) = g(x) iff x lies in both supports or in neither.
    const std::uint64_t domain = f.support.domain_size();
    const std::uint64_t agree =
        domain - (f.support.size() + g.support.size() - 2 * common);
    const double diff = 2.0 * static_cast<double>(agree) - static_cast<double>(domain);
    return std::abs(diff) / static_cast<double>(domain);
}

double conjugate_pair_overlap(std::uint64_t k, std::uint64_t n_domain,
                              std::uint64_t x_intersection) {
    if (k < 1 || k >= n_domain)
        throw std::invalid_argument("conjugate_pair_overlap: need 1 <= K <= N-1");
    const std::uint64_t x_min = 2 * k > n_domain ? 2 * k - n_domain : 0;
    if (x_intersection < x_min || x_intersection > k)
        throw std::invalid_argument(
            "conjugate_pair_overlap: intersection size out of range");
    const double num = (2.0 * static_cast<double>(k) - static_cast<double>(n_domain)) *
                       (static_cast<double>(k) - static_cast<double>(x_intersection));
    const double den = static_cast<double>(k) *
                       (static_cast<double>(n_domain) - static_cast<double>(k));
    const double ratio = num / den;
    return 0.25 * ratio * ratio;
}

double max_conjugate_overlap(std::uint64_t k, std::uint64_t n_domain) {
    if (k < 1 || k >= n_domain)
        throw std::invalid_argument("max_conjugate_overlap: need 1 <= K <= N-1");
    const double kd = static_cast<double>(k);
    const double nd = static_cast<double>(n_domain);
    if (2 * k <= n_domain) {
        const double ratio = (nd - 2.0 * kd) / (kd - nd);
        return 0.25 * ratio * ratio;
    }
    const double ratio = 2.0 - nd / kd;
    return 0.25 * ratio * ratio;
}

}  // namespace csamp
