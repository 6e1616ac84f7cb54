#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <vector>

#include "csamp/subset.hpp"

namespace csamp {

struct SaesKey {
    std::uint16_t value = 0;
};

/// Simplified AES: 16-bit block, 16-bit key, 2 rounds (nibble S-box,
/// shift-rows, mix-columns over GF(2^4) mod x^4+x+1, key expansion with
/// round constants 0x80 and 0x30).
std::uint16_t saes_encrypt(std::uint16_t key, std::uint16_t block);
std::uint16_t saes_decrypt(std::uint16_t key, std::uint16_t block);

/// A keyed bijection on n-bit strings with pointwise forward and inverse
/// evaluation. Immutable after construction; safe for concurrent reads.
class PermutationOracle {
public:
    virtual ~PermutationOracle() = default;

    virtual int bits() const = 0;  // n
    virtual std::uint64_t forward(std::uint64_t x) const = 0;
    virtual std::uint64_t inverse(std::uint64_t y) const = 0;
};

/// S-AES as a permutation on 16-bit strings.
class SaesPermutation final : public PermutationOracle {
public:
    explicit SaesPermutation(SaesKey key) : key_(key) {}

    int bits() const override { return 16; }
    std::uint64_t forward(std::uint64_t x) const override;
    std::uint64_t inverse(std::uint64_t y) const override;
    SaesKey key() const { return key_; }

private:
    SaesKey key_;
};

/// Explicit-table permutation from a seeded unbiased Fisher-Yates shuffle,
/// information-theoretically uniform. Supports n <= 20.
class TablePermutation final : public PermutationOracle {
public:
    TablePermutation(int n_bits, std::uint64_t seed);
    TablePermutation(int n_bits, std::vector<std::uint32_t> table);

    int bits() const override { return n_; }
    std::uint64_t forward(std::uint64_t x) const override { return table_[x]; }
    std::uint64_t inverse(std::uint64_t y) const override { return inverse_[y]; }

    /// Binary serialization: 2^n little-endian 32-bit entries.
    void save(std::ostream& out) const;
    static TablePermutation load(int n_bits, std::istream& in);

private:
    void build_inverse();

    int n_ = 0;
    std::vector<std::uint32_t> table_;
    std::vector<std::uint32_t> inverse_;
};

std::unique_ptr<PermutationOracle> make_prp_oracle(SaesKey key);
std::unique_ptr<PermutationOracle> make_random_oracle(int n_bits, std::uint64_t seed);

/// S = { P(0||i) : i in {0,1}^{n-1} }, in i-order, so the element list
/// already realizes the index oracle O_index(i) = P(0||i). K = N/2 always.
SubsetSpec subset_from_permutation(const PermutationOracle& oracle);

/// 1 iff the candidate lies in the complement: leading bit of P^{-1}(y).
int verify_complement(const PermutationOracle& oracle, std::uint64_t candidate);

}  // namespace csamp
