#include "parity.hpp"

#include <stdexcept>
#include <string>

#include "adh.hpp"

namespace partparity {

namespace {

void require_positive(std::uint32_t n, const char* what) {
  if (n == 0) throw std::domain_error(std::string(what) + " needs n >= 1");
}

}  // namespace

void ParityReport::validate() const {
  const auto fail = [this](const char* what) {
    throw InternalError("parity report for n=" + std::to_string(n) + ": " + what);
  };
  if (p_odd < 0 || p_even < 0) fail("negative count");
  if (p_odd + p_even != p_n) fail("P_O + P_E != p(n)");
  if (p_odd - p_even != diff) fail("P_O - P_E != diff");
}

std::vector<std::int64_t> s_values(std::uint32_t n) {
  std::vector<std::int64_t> s(static_cast<std::size_t>(n) + 1);
  for (std::uint32_t i = 0; i <= n; ++i) s[i] = s_of(i);
  return s;
}

BigInt parity_difference(std::uint32_t n, const CountTable& table) {
  require_positive(n, "parity_difference");
  table.require(static_cast<std::int64_t>(n) - 1, "parity_difference");
  const auto s = s_values(n);
  BigInt diff = 0;
  for (std::uint32_t i = 1; i <= n; ++i) {
    if (s[i] == 0) continue;
    diff += table[n - i] * static_cast<long>(s[i]);
  }
  return diff;
}

ParityReport parity_counts(std::uint32_t n, const CountTable& table) {
  require_positive(n, "parity_counts");
  table.require(n, "parity_counts");
  ParityReport r;
  r.n = n;
  r.p_n = table[n];
  r.diff = parity_difference(n, table);
  BigInt sum = r.p_n + r.diff;
  if (mpz_odd_p(sum.get_mpz_t()))
    throw InternalError("p(" + std::to_string(n) + ") and P_O - P_E differ in parity");
  r.p_odd = sum / 2;
  r.p_even = (r.p_n - r.diff) / 2;
  r.validate();
  return r;
}

ParityReport parity_counts_oracle(std::uint32_t n) {
  require_positive(n, "parity_counts_oracle");
  std::uint64_t odd = 0, even = 0;
  PartitionStream stream(n);
  while (const Partition* pi = stream.next()) {
    if (smallest_part(*pi) % 2) ++odd;
    else ++even;
  }
  ParityReport r;
  r.n = n;
  r.p_odd = odd;
  r.p_even = even;
  r.p_n = r.p_odd + r.p_even;
  r.diff = r.p_odd - r.p_even;
  return r;
}

std::uint64_t t_sum_enum(std::uint32_t n) {
  std::uint64_t total = 0;
  PartitionStream stream(n);
  while (const Partition* pi = stream.next()) total += t_chain_length(*pi);
  return total;
}

BigInt count_smallest_part_pie(std::uint32_t n, std::uint32_t i,
                               const CountTable& table) {
  if (i == 0 || i > n)
    throw std::domain_error("count_smallest_part_pie needs 1 <= i <= n");
  table.require(static_cast<std::int64_t>(n) - i, "count_smallest_part_pie");
  BigInt total = 0;
  DistinctWithLargestStream stream(i, n);
  while (const Partition* pi = stream.next()) {
    const BigInt& term = table[static_cast<std::int64_t>(n - pi->weight())];
    if (pi->size() % 2) total += term;
    else total -= term;
  }
  return total;
}

std::vector<std::uint64_t> smallest_part_histogram(std::uint32_t n) {
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) + 1, 0);
  PartitionStream stream(n);
  while (const Partition* pi = stream.next())
    if (!pi->empty()) ++counts[smallest_part(*pi)];
  return counts;
}

BigInt c_signed_convolution(std::uint32_t n, const CountTable& table) {
  require_positive(n, "c_signed_convolution");
  table.require(static_cast<std::int64_t>(n) - 1, "c_signed_convolution");
  BigInt total = 0;
  CPartitionStream stream(n);
  while (const Partition* pi = stream.next()) {
    const BigInt& term = table[static_cast<std::int64_t>(n - pi->weight())];
    if (h_even_frequency_count(*pi) % 2) total -= term;
    else total += term;
  }
  return total;
}

BigInt distinct_signed_convolution(std::uint32_t n, const CountTable& table) {
  require_positive(n, "distinct_signed_convolution");
  table.require(static_cast<std::int64_t>(n) - 1, "distinct_signed_convolution");
  BigInt total = 0;
  for (std::uint32_t w = 1; w <= n; ++w) {
    const BigInt& p = table[n - w];
    DistinctPartitionStream stream(w);
    while (const Partition* pi = stream.next()) {
      if (rank(*pi) % 2) total -= p;
      else total += p;
    }
  }
  return total;
}

}  // namespace partparity
