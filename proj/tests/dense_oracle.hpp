#pragma once

// Test-only dense-matrix oracle. Every operator is assembled here as an
// explicit 2^n x 2^n matrix straight from its mathematical definition and
// applied by naive matrix-vector product, independent of the O(2^n)
// update paths in the library. Keep it brute force; it only runs at n <= 6.

#include <complex>
#include <cstdint>
#include <vector>

#include "csamp/statevector.hpp"

namespace dense {

using cdouble = std::complex<double>;
using Matrix = std::vector<std::vector<cdouble>>;

inline Matrix identity(std::uint64_t dim) {
    Matrix m(dim, std::vector<cdouble>(dim));
    for (std::uint64_t i = 0; i < dim; ++i) m[i][i] = 1.0;
    return m;
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
    const std::uint64_t ra = a.size(), ca = a[0].size();
    const std::uint64_t rb = b.size(), cb = b[0].size();
    Matrix m(ra * rb, std::vector<cdouble>(ca * cb));
    for (std::uint64_t i = 0; i < ra; ++i)
        for (std::uint64_t j = 0; j < ca; ++j)
            for (std::uint64_t k = 0; k < rb; ++k)
                for (std::uint64_t l = 0; l < cb; ++l)
                    m[i * rb + k][j * cb + l] = a[i][j] * b[k][l];
    return m;
}

/// Embeds a single-qubit gate at `qubit` (qubit 0 = MSB of the index, so
/// it is the leftmost Kronecker factor).
inline Matrix single_qubit(int n, int qubit, const Matrix& gate) {
    Matrix m = identity(1);
    for (int q = 0; q < n; ++q) m = kron(m, q == qubit ? gate : identity(2));
    return m;
}

inline Matrix hadamard(int n) {
    const double s = 1.0 / std::sqrt(2.0);
    const Matrix h1 = {{s, s}, {s, -s}};
    Matrix m = identity(1);
    for (int q = 0; q < n; ++q) m = kron(m, h1);
    return m;
}

inline Matrix w_gate(int n, int qubit, double q_w, bool adjoint) {
    const double c = std::sqrt(q_w), s = std::sqrt(1.0 - q_w);
    const Matrix w = adjoint ? Matrix{{c, s}, {-s, c}} : Matrix{{c, -s}, {s, c}};
    return single_qubit(n, qubit, w);
}

inline Matrix z_gate(int n, int qubit) {
    return single_qubit(n, qubit, {{1.0, 0.0}, {0.0, -1.0}});
}

/// 2|+^n><+^n| - I, entrywise 2/N - delta.
inline Matrix diffusion(int n) {
    const std::uint64_t dim = std::uint64_t{1} << n;
    Matrix m(dim, std::vector<cdouble>(dim, 2.0 / static_cast<double>(dim)));
    for (std::uint64_t i = 0; i < dim; ++i) m[i][i] -= 1.0;
    return m;
}

/// Diffusion over all qubits but `control`, active on the branch where the
/// control bit reads `control_value`; identity elsewhere.
inline Matrix controlled_diffusion(int n, int control, int control_value) {
    const std::uint64_t dim = std::uint64_t{1} << n;
    const std::uint64_t mask = std::uint64_t{1} << (n - 1 - control);
    const std::uint64_t want = control_value ? mask : 0;
    const double mean_coeff = 2.0 / static_cast<double>(dim / 2);
    Matrix m(dim, std::vector<cdouble>(dim));
    for (std::uint64_t r = 0; r < dim; ++r) {
        for (std::uint64_t c = 0; c < dim; ++c) {
            if ((r & mask) != (c & mask)) continue;
            if ((r & mask) != want) {
                if (r == c) m[r][c] = 1.0;
            } else {
                m[r][c] = mean_coeff - (r == c ? 1.0 : 0.0);
            }
        }
    }
    return m;
}

inline Matrix multi_controlled_not(
    int n, int target, const std::vector<std::pair<int, int>>& controls) {
    const std::uint64_t dim = std::uint64_t{1} << n;
    const std::uint64_t target_mask = std::uint64_t{1} << (n - 1 - target);
    std::uint64_t cmask = 0, cwant = 0;
    for (const auto& [qubit, bit] : controls) {
        const std::uint64_t mask = std::uint64_t{1} << (n - 1 - qubit);
        cmask |= mask;
        if (bit) cwant |= mask;
    }
    Matrix m(dim, std::vector<cdouble>(dim));
    for (std::uint64_t c = 0; c < dim; ++c) {
        const std::uint64_t r = ((c & cmask) == cwant) ? (c ^ target_mask) : c;
        m[r][c] = 1.0;
    }
    return m;
}

inline csamp::StateVector apply(const Matrix& m, const csamp::StateVector& state) {
    csamp::StateVector out{state.n_qubits,
                           std::vector<cdouble>(state.amps.size())};
    for (std::uint64_t r = 0; r < m.size(); ++r) {
        cdouble sum = 0.0;
        for (std::uint64_t c = 0; c < m.size(); ++c) sum += m[r][c] * state.amps[c];
        out.amps[r] = sum;
    }
    return out;
}

inline double max_elementwise_diff(const csamp::StateVector& a,
                                   const csamp::StateVector& b) {
    double worst = 0.0;
    for (std::uint64_t i = 0; i < a.amps.size(); ++i)
        worst = std::max(worst, std::abs(a.amps[i] - b.amps[i]));
    return worst;
}

}  // namespace dense
