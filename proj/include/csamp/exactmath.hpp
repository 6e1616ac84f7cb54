#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace csamp {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Stirling number of the second kind S(d, q) via the triangular
/// recurrence S(d, q) = q S(d-1, q) + S(d-1, q-1), exact integers.
BigInt stirling2(int d, int q);

/// K (K-1) ... (K-q+1).
BigInt falling_factorial(std::uint64_t k, int q);

BigInt binomial(std::uint64_t n, std::uint64_t k);

/// Occupancy distribution: probability of seeing exactly q distinct
/// elements in d uniform draws (with replacement) from a K-element set,
///   K!/(K-q)! * S(d, q) / K^d.
BigRational unique_draw_probability_exact(std::uint64_t k, int d, int q);

}  // namespace csamp
