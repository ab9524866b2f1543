#pragma once

// Brute-force references for the tests. Nothing here calls into the library's
// enumeration streams, count table, or square-root routine.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

namespace oracle {

using Parts = std::vector<std::uint32_t>;

// Every partition of n with parts <= cap, by plain recursion.
inline void partitions(std::uint32_t n, std::uint32_t cap, Parts& prefix,
                       std::vector<Parts>& out) {
  if (n == 0) {
    out.push_back(prefix);
    return;
  }
  for (std::uint32_t x = std::min(n, cap); x >= 1; --x) {
    prefix.push_back(x);
    partitions(n - x, x, prefix, out);
    prefix.pop_back();
  }
}

// Produced largest-first at each level, which is reverse-lexicographic.
inline std::vector<Parts> partitions(std::uint32_t n) {
  std::vector<Parts> out;
  Parts prefix;
  partitions(n, n, prefix, out);
  return out;
}

inline std::uint64_t count_partitions(std::uint32_t n, std::uint32_t cap) {
  if (n == 0) return 1;
  std::uint64_t c = 0;
  for (std::uint32_t x = 1; x <= std::min(n, cap); ++x) c += count_partitions(n - x, x);
  return c;
}

inline bool strictly_decreasing(const Parts& a) {
  for (std::size_t k = 1; k < a.size(); ++k)
    if (a[k - 1] <= a[k]) return false;
  return true;
}

inline std::map<std::uint32_t, std::uint64_t> frequencies(const Parts& a) {
  std::map<std::uint32_t, std::uint64_t> f;
  for (auto x : a) ++f[x];
  return f;
}

inline std::uint64_t t_chain(const Parts& a) {
  const auto f = frequencies(a);
  std::uint64_t t = 0;
  for (;;) {
    auto it = f.find(static_cast<std::uint32_t>(t + 1));
    if (it == f.end() || it->second % 2 == 0) return t;
    ++t;
  }
}

// Signed rank count over distinct-part partitions of i.
inline std::int64_t s_brute(std::uint32_t i) {
  std::int64_t s = 0;
  for (const auto& a : partitions(i)) {
    if (a.empty() || !strictly_decreasing(a)) continue;
    const auto r = static_cast<std::int64_t>(a.front()) - static_cast<std::int64_t>(a.size());
    s += (r % 2 == 0) ? 1 : -1;
  }
  return s;
}

// Least y >= 0 such that x^2 - 6y^2 = p for some x >= 0, scanning x directly.
struct Pell {
  std::uint64_t y0, x0;
};
inline Pell pell_brute(std::int64_t p, std::uint64_t y_limit) {
  for (std::uint64_t y = 0; y <= y_limit; ++y) {
    const std::int64_t target = 6 * static_cast<std::int64_t>(y * y) + p;
    for (std::int64_t x = 0; x * x <= target; ++x)
      if (x * x == target) return {y, static_cast<std::uint64_t>(x)};
  }
  return {~0ull, ~0ull};
}

}  // namespace oracle
