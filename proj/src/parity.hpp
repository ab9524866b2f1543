#pragma once

// Counts of partitions of n by parity of the smallest part, through the
// convolution with S(i), together with the enumeration-side quantities the
// identities are checked against.

#include <cstdint>
#include <vector>

#include "core_partitions.hpp"

namespace partparity {

struct ParityReport {
  std::uint32_t n = 0;
  BigInt p_n;
  BigInt diff;    // P_O(n) - P_E(n)
  BigInt p_odd;   // P_O(n)
  BigInt p_even;  // P_E(n)

  /// Throws InternalError unless p_odd + p_even = p_n, p_odd - p_even = diff,
  /// and both counts are nonnegative.
  void validate() const;
};

/// S(1), ..., S(n), with index 0 holding S(0) = 1.
std::vector<std::int64_t> s_values(std::uint32_t n);

/// sum_{i=1..n} S(i) p(n-i). Needs table.n_max() >= n - 1.
BigInt parity_difference(std::uint32_t n, const CountTable& table);

/// Solves P_O, P_E from p(n) and the difference. Needs table.n_max() >= n.
ParityReport parity_counts(std::uint32_t n, const CountTable& table);

/// Tallies smallest-part parity over every partition of n.
ParityReport parity_counts_oracle(std::uint32_t n);

/// sum of t(pi) over partitions of n, by enumeration.
std::uint64_t t_sum_enum(std::uint32_t n);

/// The same sum through the S-convolution.
inline BigInt t_sum_formula(std::uint32_t n, const CountTable& table) {
  return parity_difference(n, table);
}

/// sum_{s} (-1)^(s-1) sum_{pi in U_{s,i}, |pi| <= n} p(n - |pi|): the number of
/// partitions of n whose smallest part is exactly i.
BigInt count_smallest_part_pie(std::uint32_t n, std::uint32_t i,
                               const CountTable& table);

/// counts[i] = number of partitions of n with smallest part i (counts[0] = 0),
/// by enumeration.
std::vector<std::uint64_t> smallest_part_histogram(std::uint32_t n);

/// sum over nonempty C-partitions pi with |pi| <= n of (-1)^h(pi) p(n - |pi|).
BigInt c_signed_convolution(std::uint32_t n, const CountTable& table);

/// sum over nonempty distinct-part pi with |pi| <= n of (-1)^rank p(n - |pi|).
BigInt distinct_signed_convolution(std::uint32_t n, const CountTable& table);

}  // namespace partparity
