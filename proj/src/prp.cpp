#include "csamp/prp.hpp"

#include <array>
#include <istream>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "csamp/errors.hpp"
#include "csamp/rng.hpp"

namespace csamp {

namespace {

constexpr std::array<std::uint8_t, 16> kSbox = {
    0x9, 0x4, 0xA, 0xB, 0xD, 0x1, 0x8, 0x5,
    0x6, 0x2, 0x0, 0x3, 0xC, 0xE, 0xF, 0x7};
constexpr std::array<std::uint8_t, 16> kInvSbox = {
    0xA, 0x5, 0x9, 0xB, 0x1, 0x7, 0x8, 0xF,
    0x6, 0x0, 0x2, 0x3, 0xC, 0x4, 0xD, 0xE};

/// GF(2^4) product modulo x^4 + x + 1.
std::uint8_t gf16_mul(std::uint8_t a, std::uint8_t b) {
    std::uint8_t p = 0;
    for (int i = 0; i < 4; ++i) {
        if (b & 1) p ^= a;
        b >>= 1;
        a <<= 1;
        if (a & 0x10) a ^= 0x13;
    }
    return p & 0xF;
}

struct Nibbles {
    // Block n0 n1 n2 n3, most significant nibble first; the cipher state
    // matrix is [[n0, n2], [n1, n3]].
    std::uint8_t n[4];

    static Nibbles split(std::uint16_t block) {
        return {{static_cast<std::uint8_t>((block >> 12) & 0xF),
                 static_cast<std::uint8_t>((block >> 8) & 0xF),
                 static_cast<std::uint8_t>((block >> 4) & 0xF),
                 static_cast<std::uint8_t>(block & 0xF)}};
    }
    std::uint16_t join() const {
        return static_cast<std::uint16_t>((n[0] << 12) | (n[1] << 8) | (n[2] << 4) | n[3]);
    }

    void sub(const std::array<std::uint8_t, 16>& box) {
        for (auto& x : n) x = box[x];
    }
    void shift_rows() { std::swap(n[1], n[3]); }  // rotate the second row
    void add_key(std::uint16_t k) {
        const Nibbles kn = split(k);
        for (int i = 0; i < 4; ++i) n[i] ^= kn.n[i];
    }
    void mix_columns() {  // [[1, 4], [4, 1]]
        const std::uint8_t a = n[0], b = n[1], c = n[2], d = n[3];
        n[0] = a ^ gf16_mul(4, b);
        n[1] = gf16_mul(4, a) ^ b;
        n[2] = c ^ gf16_mul(4, d);
        n[3] = gf16_mul(4, c) ^ d;
    }
    void inv_mix_columns() {  // [[9, 2], [2, 9]]
        const std::uint8_t a = n[0], b = n[1], c = n[2], d = n[3];
        n[0] = gf16_mul(9, a) ^ gf16_mul(2, b);
        n[1] = gf16_mul(2, a) ^ gf16_mul(9, b);
        n[2] = gf16_mul(9, c) ^ gf16_mul(2, d);
        n[3] = gf16_mul(2, c) ^ gf16_mul(9, d);
    }
};

std::array<std::uint16_t, 3> expand_key(std::uint16_t key) {
    const auto rot = [](std::uint8_t b) -> std::uint8_t {
        return static_cast<std::uint8_t>((b << 4) | (b >> 4));
    };
    const auto sub = [](std::uint8_t b) -> std::uint8_t {
        return static_cast<std::uint8_t>((kSbox[(b >> 4) & 0xF] << 4) | kSbox[b & 0xF]);
    };
    std::uint8_t w[6];
    w[0] = static_cast<std::uint8_t>(key >> 8);
    w[1] = static_cast<std::uint8_t>(key & 0xFF);
    w[2] = w[0] ^ 0x80 ^ sub(rot(w[1]));
    w[3] = w[2] ^ w[1];
    w[4] = w[2] ^ 0x30 ^ sub(rot(w[3]));
    w[5] = w[4] ^ w[3];
    return {static_cast<std::uint16_t>((w[0] << 8) | w[1]),
            static_cast<std::uint16_t>((w[2] << 8) | w[3]),
            static_cast<std::uint16_t>((w[4] << 8) | w[5])};
}

}  // namespace

std::uint16_t saes_encrypt(std::uint16_t key, std::uint16_t block) {
    const auto rk = expand_key(key);
    Nibbles s = Nibbles::split(block);
    s.add_key(rk[0]);
    s.sub(kSbox);
    s.shift_rows();
    s.mix_columns();
    s.add_key(rk[1]);
    s.sub(kSbox);
    s.shift_rows();
    s.add_key(rk[2]);
    return s.join();
}

std::uint16_t saes_decrypt(std::uint16_t key, std::uint16_t block) {
    const auto rk = expand_key(key);
    Nibbles s = Nibbles::split(block);
    s.add_key(rk[2]);
    s.shift_rows();
    s.sub(kInvSbox);
    s.add_key(rk[1]);
    s.inv_mix_columns();
    s.shift_rows();
    s.sub(kInvSbox);
    s.add_key(rk[0]);
    return s.join();
}

std::uint64_t SaesPermutation::forward(std::uint64_t x) const {
    return saes_encrypt(key_.value, static_cast<std::uint16_t>(x));
}

std::uint64_t SaesPermutation::inverse(std::uint64_t y) const {
    return saes_decrypt(key_.value, static_cast<std::uint16_t>(y));
}

TablePermutation::TablePermutation(int n_bits, std::uint64_t seed) : n_(n_bits) {
    if (n_bits < 1 || n_bits > 20)
        throw ScaleError("table permutation: explicit tables support n <= 20");
    const std::uint64_t domain = std::uint64_t{1} << n_bits;
    table_.resize(domain);
    std::iota(table_.begin(), table_.end(), 0);
    RandomSource rng(seed);
    for (std::uint64_t i = 0; i + 1 < domain; ++i) {
        const std::uint64_t j = i + rng.uniform_below(domain - i);
        std::swap(table_[i], table_[j]);
    }
    build_inverse();
}

TablePermutation::TablePermutation(int n_bits, std::vector<std::uint32_t> table)
    : n_(n_bits), table_(std::move(table)) {
    if (n_bits < 1 || n_bits > 20)
        throw ScaleError("table permutation: explicit tables support n <= 20");
    if (table_.size() != (std::uint64_t{1} << n_bits))
        throw std::invalid_argument("table permutation: wrong table size");
    build_inverse();
}

void TablePermutation::build_inverse() {
    const std::uint64_t domain = table_.size();
    inverse_.assign(domain, 0);
    std::vector<bool> seen(domain, false);
    for (std::uint64_t x = 0; x < domain; ++x) {
        const std::uint32_t y = table_[x];
        if (y >= domain || seen[y])
            throw std::invalid_argument("table permutation: table is not a bijection");
        seen[y] = true;
        inverse_[y] = static_cast<std::uint32_t>(x);
    }
}

void TablePermutation::save(std::ostream& out) const {
    for (std::uint32_t v : table_) {
        const char bytes[4] = {static_cast<char>(v & 0xFF),
                               static_cast<char>((v >> 8) & 0xFF),
                               static_cast<char>((v >> 16) & 0xFF),
                               static_cast<char>((v >> 24) & 0xFF)};
        out.write(bytes, 4);
    }
}

TablePermutation TablePermutation::load(int n_bits, std::istream& in) {
    const std::uint64_t domain = std::uint64_t{1} << n_bits;
    std::vector<std::uint32_t> table(domain);
    for (auto& v : table) {
        unsigned char bytes[4];
        in.read(reinterpret_cast<char*>(bytes), 4);
        if (!in) throw std::invalid_argument("table permutation: truncated table file");
        v = static_cast<std::uint32_t>(bytes[0]) |
            (static_cast<std::uint32_t>(bytes[1]) << 8) |
            (static_cast<std::uint32_t>(bytes[2]) << 16) |
            (static_cast<std::uint32_t>(bytes[3]) << 24);
    }
    return TablePermutation(n_bits, std::move(table));
}

std::unique_ptr<PermutationOracle> make_prp_oracle(SaesKey key) {
    return std::make_unique<SaesPermutation>(key);
}

std::unique_ptr<PermutationOracle> make_random_oracle(int n_bits, std::uint64_t seed) {
    return std::make_unique<TablePermutation>(n_bits, seed);
}

SubsetSpec subset_from_permutation(const PermutationOracle& oracle) {
    const int n = oracle.bits();
    SubsetSpec spec;
    spec.n = n;
    const std::uint64_t half = std::uint64_t{1} << (n - 1);
    spec.elements.reserve(half);
    // Images of the inputs with leading bit 0, in input order, so that
    // element i is P(0 || i).
    for (std::uint64_t i = 0; i < half; ++i)
        spec.elements.push_back(oracle.forward(i));
    return spec;
}

int verify_complement(const PermutationOracle& oracle, std::uint64_t candidate) {
    const std::uint64_t preimage = oracle.inverse(candidate);
    return static_cast<int>((preimage >> (oracle.bits() - 1)) & 1);
}

}  // namespace csamp
