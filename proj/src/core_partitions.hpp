#pragma once

// Partition objects, exact counting by the pentagonal-number recurrence, and
// deterministic enumeration streams used as brute-force oracles.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace partparity {

using BigInt = mpz_class;
using Part = std::uint32_t;

/// A partition in nonincreasing order of its parts, with its weight cached.
class Partition {
 public:
  Partition() = default;

  /// Throws std::invalid_argument unless every part is positive and the
  /// sequence is nonincreasing.
  static Partition from_parts(std::vector<Part> parts);

  std::span<const Part> parts() const { return parts_; }
  std::uint64_t weight() const { return weight_; }
  std::size_t size() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  Part largest() const { return parts_.empty() ? 0 : parts_.front(); }

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  struct Trusted {};
  Partition(std::vector<Part> parts, std::uint64_t weight, Trusted)
      : parts_(std::move(parts)), weight_(weight) {}

  friend class PartitionStream;
  friend class DistinctPartitionStream;
  friend class DistinctWithLargestStream;
  friend class CPartitionStream;
  friend class FrequencyVector;
  friend Partition conjugate(const Partition&);

  std::vector<Part> parts_;
  std::uint64_t weight_ = 0;
};

/// Multiplicity form (1^f1 2^f2 ... k^fk) of a partition.
class FrequencyVector {
 public:
  explicit FrequencyVector(const Partition& pi);

  /// f_j for j >= 1; zero past the largest part.
  std::uint64_t freq(std::size_t j) const {
    return (j >= 1 && j <= freqs_.size()) ? freqs_[j - 1] : 0;
  }
  std::size_t largest() const { return freqs_.size(); }
  std::span<const std::uint64_t> freqs() const { return freqs_; }

  Partition to_partition() const;

 private:
  std::vector<std::uint64_t> freqs_;
};

/// Exact values p(0..n_max). Immutable once built.
class CountTable {
 public:
  /// Pentagonal-number recurrence; O(n^1.5) big-integer additions.
  static CountTable build(std::uint32_t n_max);

  std::uint32_t n_max() const {
    return static_cast<std::uint32_t>(values_.size() - 1);
  }

  /// p(n), with p(n) = 0 for n < 0. Throws std::domain_error past n_max.
  const BigInt& at(std::int64_t n) const;
  const BigInt& operator[](std::int64_t n) const { return at(n); }

  /// Throws std::domain_error when the table does not reach `n`.
  void require(std::int64_t n, const char* what) const;

 private:
  explicit CountTable(std::vector<BigInt> values) : values_(std::move(values)) {}
  std::vector<BigInt> values_;
};

inline CountTable build_count_table(std::uint32_t n_max) {
  return CountTable::build(n_max);
}

/// All partitions of n in reverse-lexicographic order: (n), (n-1,1), ...,
/// (1,...,1). n = 0 yields the single empty partition.
class PartitionStream {
 public:
  explicit PartitionStream(std::uint32_t n);
  const Partition* next();

 private:
  Partition current_;
  bool started_ = false;
  bool done_ = false;
};

/// Partitions of n into strictly decreasing parts, reverse-lexicographic.
class DistinctPartitionStream {
 public:
  explicit DistinctPartitionStream(std::uint32_t n);
  const Partition* next();

 private:
  Partition current_;
  bool started_ = false;
  bool done_ = false;
};

/// Strictly decreasing partitions with largest part exactly `largest` and
/// weight <= max_weight, in lexicographically increasing order:
/// (3), (3,1), (3,2), (3,2,1). The part count s is current()->size().
class DistinctWithLargestStream {
 public:
  DistinctWithLargestStream(Part largest, std::uint64_t max_weight);
  const Partition* next();

 private:
  Partition current_;
  std::uint64_t max_weight_;
  bool started_ = false;
  bool done_ = false;
};

/// Nonempty C-partitions (every size below the largest part occurs) of weight
/// <= max_weight, in lexicographically increasing order.
class CPartitionStream {
 public:
  explicit CPartitionStream(std::uint64_t max_weight);
  const Partition* next();

 private:
  bool feasible(std::uint64_t weight, Part last) const;
  bool advance();

  std::vector<Part> parts_;
  std::uint64_t weight_ = 0;
  std::uint64_t max_weight_;
  Partition current_;
  bool done_ = false;
};

template <class Stream>
std::vector<Partition> collect(Stream stream) {
  std::vector<Partition> out;
  while (const Partition* pi = stream.next()) out.push_back(*pi);
  return out;
}

inline std::vector<Partition> enumerate_partitions(std::uint32_t n) {
  return collect(PartitionStream(n));
}
inline std::vector<Partition> enumerate_distinct_partitions(std::uint32_t n) {
  return collect(DistinctPartitionStream(n));
}
inline std::vector<Partition> enumerate_distinct_with_largest(
    Part largest, std::uint64_t max_weight) {
  return collect(DistinctWithLargestStream(largest, max_weight));
}
inline std::vector<Partition> enumerate_c_partitions(std::uint64_t max_weight) {
  return collect(CPartitionStream(max_weight));
}

// Statistics. smallest_part and rank throw std::domain_error on the empty
// partition.
Part smallest_part(const Partition& pi);
std::uint64_t t_chain_length(const Partition& pi);
std::int64_t rank(const Partition& pi);
Partition conjugate(const Partition& pi);
bool is_c_partition(const Partition& pi);
bool is_distinct(const Partition& pi);
/// Number of present part sizes with even multiplicity.
std::uint64_t h_even_frequency_count(const Partition& pi);

}  // namespace partparity
