#include "core_partitions.hpp"

#include <algorithm>
#include <stdexcept>

namespace partparity {

Partition Partition::from_parts(std::vector<Part> parts) {
  std::uint64_t weight = 0;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (parts[k] == 0)
      throw std::invalid_argument("partition parts must be positive");
    if (k + 1 < parts.size() && parts[k] < parts[k + 1])
      throw std::invalid_argument("partition parts must be nonincreasing");
    weight += parts[k];
  }
  return Partition(std::move(parts), weight, Trusted{});
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(parts_[k]);
  }
  return s + ')';
}

FrequencyVector::FrequencyVector(const Partition& pi)
    : freqs_(pi.largest(), 0) {
  for (Part x : pi.parts()) ++freqs_[x - 1];
}

Partition FrequencyVector::to_partition() const {
  std::vector<Part> parts;
  std::uint64_t weight = 0;
  for (std::size_t j = freqs_.size(); j >= 1; --j) {
    parts.insert(parts.end(), freqs_[j - 1], static_cast<Part>(j));
    weight += j * freqs_[j - 1];
  }
  return Partition(std::move(parts), weight, Partition::Trusted{});
}

// ---------------------------------------------------------------------------

CountTable CountTable::build(std::uint32_t n_max) {
  std::vector<BigInt> p(static_cast<std::size_t>(n_max) + 1);
  p[0] = 1;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    BigInt sum = 0;
    for (std::int64_t k = 1;; ++k) {
      const std::int64_t g1 = k * (3 * k - 1) / 2;
      if (g1 > n) break;
      const std::int64_t g2 = k * (3 * k + 1) / 2;
      BigInt term = p[n - g1];
      if (g2 <= n) term += p[n - g2];
      if (k % 2) sum += term;
      else sum -= term;
    }
    p[n] = std::move(sum);
  }
  return CountTable(std::move(p));
}

const BigInt& CountTable::at(std::int64_t n) const {
  static const BigInt zero = 0;
  if (n < 0) return zero;
  require(n, "p(n)");
  return values_[static_cast<std::size_t>(n)];
}

void CountTable::require(std::int64_t n, const char* what) const {
  if (n > static_cast<std::int64_t>(n_max()))
    throw std::domain_error(std::string(what) + ": count table holds p(0.." +
                            std::to_string(n_max()) + "), needs p(" +
                            std::to_string(n) + ")");
}

// ---------------------------------------------------------------------------

PartitionStream::PartitionStream(std::uint32_t n) {
  if (n > 0) current_ = Partition({n}, n, Partition::Trusted{});
}

const Partition* PartitionStream::next() {
  if (done_) return nullptr;
  if (!started_) {
    started_ = true;
    return &current_;
  }
  auto& a = current_.parts_;
  // Rightmost part larger than 1; everything after it is a run of ones.
  auto it = std::find_if(a.rbegin(), a.rend(), [](Part x) { return x > 1; });
  if (it == a.rend()) {
    done_ = true;
    return nullptr;
  }
  const std::size_t j = static_cast<std::size_t>(a.rend() - it) - 1;
  std::uint64_t rest = a.size() - 1 - j + 1;
  const Part cap = --a[j];
  a.resize(j + 1);
  while (rest > 0) {
    const Part x = static_cast<Part>(std::min<std::uint64_t>(cap, rest));
    a.push_back(x);
    rest -= x;
  }
  return &current_;
}

DistinctPartitionStream::DistinctPartitionStream(std::uint32_t n) {
  if (n > 0) current_ = Partition({n}, n, Partition::Trusted{});
}

const Partition* DistinctPartitionStream::next() {
  if (done_) return nullptr;
  if (!started_) {
    started_ = true;
    return &current_;
  }
  auto& a = current_.parts_;
  std::uint64_t suffix = 0;
  for (std::size_t j = a.size(); j-- > 0;) {
    const Part lowered = a[j] - 1;
    const std::uint64_t rest = suffix + 1;
    suffix += a[j];
    if (lowered == 0) continue;
    // Parts after position j must stay below `lowered`; greedy fill works
    // whenever 1 + 2 + ... + (lowered - 1) covers the remainder.
    std::uint64_t bound = lowered - 1;
    if (rest > bound * (bound + 1) / 2) continue;
    a[j] = lowered;
    a.resize(j + 1);
    std::uint64_t left = rest;
    while (left > 0) {
      const Part x = static_cast<Part>(std::min(bound, left));
      a.push_back(x);
      left -= x;
      bound = x - 1;
    }
    return &current_;
  }
  done_ = true;
  return nullptr;
}

DistinctWithLargestStream::DistinctWithLargestStream(Part largest,
                                                     std::uint64_t max_weight)
    : max_weight_(max_weight) {
  if (largest == 0)
    throw std::invalid_argument("largest part must be at least 1");
  if (largest > max_weight) done_ = true;
  else current_ = Partition({largest}, largest, Partition::Trusted{});
}

const Partition* DistinctWithLargestStream::next() {
  if (done_) return nullptr;
  if (!started_) {
    started_ = true;
    return &current_;
  }
  auto& a = current_.parts_;
  auto& w = current_.weight_;
  if (a.back() > 1 && w + 1 <= max_weight_) {
    a.push_back(1);
    w += 1;
    return &current_;
  }
  while (a.size() > 1) {
    const Part x = a.back();
    a.pop_back();
    w -= x;
    if (x + 1 < a.back() && w + x + 1 <= max_weight_) {
      a.push_back(x + 1);
      w += x + 1;
      return &current_;
    }
  }
  done_ = true;
  return nullptr;
}

CPartitionStream::CPartitionStream(std::uint64_t max_weight)
    : max_weight_(max_weight) {}

// A prefix ending in `last` still needs last-1, last-2, ..., 1 appended.
bool CPartitionStream::feasible(std::uint64_t weight, Part last) const {
  return weight + std::uint64_t{last} * (last - 1) / 2 <= max_weight_;
}

// Preorder step through the tree where each child repeats the previous part
// or lowers it by one.
bool CPartitionStream::advance() {
  if (parts_.empty()) {
    if (!feasible(1, 1)) return false;
    parts_.push_back(1);
    weight_ = 1;
    return true;
  }
  const Part v = parts_.back();
  if (v > 1 && feasible(weight_ + v - 1, v - 1)) {
    parts_.push_back(v - 1);
    weight_ += v - 1;
    return true;
  }
  if (feasible(weight_ + v, v)) {
    parts_.push_back(v);
    weight_ += v;
    return true;
  }
  for (;;) {
    const Part x = parts_.back();
    parts_.pop_back();
    weight_ -= x;
    if (parts_.empty()) {
      if (!feasible(x + 1, x + 1)) return false;
      parts_.push_back(x + 1);
      weight_ = x + 1;
      return true;
    }
    const Part parent = parts_.back();
    if (x + 1 == parent && feasible(weight_ + parent, parent)) {
      parts_.push_back(parent);
      weight_ += parent;
      return true;
    }
  }
}

const Partition* CPartitionStream::next() {
  while (!done_) {
    if (!advance()) {
      done_ = true;
      break;
    }
    if (parts_.back() == 1) {
      current_ = Partition(parts_, weight_, Partition::Trusted{});
      return &current_;
    }
  }
  return nullptr;
}

// ---------------------------------------------------------------------------

Part smallest_part(const Partition& pi) {
  if (pi.empty())
    throw std::domain_error("smallest part of the empty partition");
  return pi.parts().back();
}

std::uint64_t t_chain_length(const Partition& pi) {
  const FrequencyVector f(pi);
  std::uint64_t t = 0;
  while (f.freq(t + 1) % 2 == 1) ++t;
  return t;
}

std::int64_t rank(const Partition& pi) {
  if (pi.empty()) throw std::domain_error("rank of the empty partition");
  return static_cast<std::int64_t>(pi.largest()) -
         static_cast<std::int64_t>(pi.size());
}

Partition conjugate(const Partition& pi) {
  const FrequencyVector f(pi);
  const auto freqs = f.freqs();
  std::vector<Part> out(freqs.size());
  std::uint64_t suffix = 0;
  for (std::size_t j = freqs.size(); j-- > 0;) {
    suffix += freqs[j];
    out[j] = static_cast<Part>(suffix);
  }
  return Partition(std::move(out), pi.weight(), Partition::Trusted{});
}

bool is_c_partition(const Partition& pi) {
  const FrequencyVector f(pi);
  const auto freqs = f.freqs();
  return std::all_of(freqs.begin(), freqs.end(),
                     [](std::uint64_t x) { return x >= 1; });
}

bool is_distinct(const Partition& pi) {
  const auto a = pi.parts();
  return std::adjacent_find(a.begin(), a.end()) == a.end();
}

std::uint64_t h_even_frequency_count(const Partition& pi) {
  const FrequencyVector f(pi);
  const auto freqs = f.freqs();
  return static_cast<std::uint64_t>(
      std::count_if(freqs.begin(), freqs.end(),
                    [](std::uint64_t x) { return x >= 1 && x % 2 == 0; }));
}

}  // namespace partparity
