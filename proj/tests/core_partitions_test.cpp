#include <random>
#include <set>

#include "core_partitions.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace partparity;

namespace {

Partition P(std::vector<Part> parts) { return Partition::from_parts(std::move(parts)); }

std::vector<std::vector<Part>> as_parts(const std::vector<Partition>& v) {
  std::vector<std::vector<Part>> out;
  for (const auto& pi : v) out.emplace_back(pi.parts().begin(), pi.parts().end());
  return out;
}

// Random partition of n: random cut points, sorted descending.
Partition random_partition(std::mt19937_64& rng, std::uint32_t n) {
  std::vector<Part> parts;
  std::uint32_t left = n;
  while (left > 0) {
    std::uniform_int_distribution<std::uint32_t> d(1, left);
    const Part x = d(rng);
    parts.push_back(x);
    left -= x;
  }
  std::sort(parts.rbegin(), parts.rend());
  return P(parts);
}

}  // namespace

TEST_CASE("partition construction validates order and positivity") {
  CHECK(P({7, 7, 6, 4, 4}).weight() == 28);
  CHECK(Partition().weight() == 0);
  CHECK_THROWS_AS(P({2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(P({2, 0}), std::invalid_argument);
}

TEST_CASE("frequency vector round trip") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const auto pi = random_partition(rng, std::uniform_int_distribution<std::uint32_t>(0, 40)(rng));
    const FrequencyVector f(pi);
    CHECK(f.to_partition() == pi);
    if (!pi.empty()) CHECK(f.freq(f.largest()) >= 1);
  }
  const FrequencyVector f(P({7, 7, 6, 4, 4}));
  CHECK(f.freq(4) == 2);
  CHECK(f.freq(5) == 0);
  CHECK(f.freq(7) == 2);
  CHECK(f.freq(8) == 0);
}

TEST_CASE("count table") {
  CHECK(build_count_table(0).at(0) == 1);
  const auto t = build_count_table(40);
  CHECK(t[17] == 297);
  CHECK(t[37] == 21637);
  CHECK(t[10] == oracle::count_partitions(10, 10));
  CHECK(t[10] == 42);
  CHECK(t[-1] == 0);
  CHECK(t[-100] == 0);
  CHECK_THROWS_AS(t.at(41), std::domain_error);
  for (std::uint32_t n = 0; n <= 30; ++n) CHECK(t[n] == oracle::count_partitions(n, n));
  // p(100) and p(200), well-known values, exceed 64 bits at 200.
  const auto big = build_count_table(200);
  CHECK(big[100] == BigInt("190569292"));
  CHECK(big[200] == BigInt("3972999029388"));
}

TEST_CASE("enumerate_partitions") {
  CHECK(as_parts(enumerate_partitions(0)) == std::vector<std::vector<Part>>{{}});
  CHECK(as_parts(enumerate_partitions(4)) ==
        std::vector<std::vector<Part>>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
  const auto t = build_count_table(30);
  for (std::uint32_t n = 0; n <= 30; ++n) {
    const auto all = enumerate_partitions(n);
    CHECK(t[n] == all.size());
    if (n <= 18) CHECK(as_parts(all) == oracle::partitions(n));
  }
}

TEST_CASE("enumerate_distinct_partitions") {
  CHECK(as_parts(enumerate_distinct_partitions(3)) ==
        std::vector<std::vector<Part>>{{3}, {2, 1}});
  CHECK(as_parts(enumerate_distinct_partitions(1)) == std::vector<std::vector<Part>>{{1}});
  CHECK(as_parts(enumerate_distinct_partitions(0)) == std::vector<std::vector<Part>>{{}});
  for (std::uint32_t n = 1; n <= 22; ++n) {
    std::vector<std::vector<Part>> expected;
    for (auto& a : oracle::partitions(n))
      if (oracle::strictly_decreasing(a)) expected.push_back(a);
    CHECK(as_parts(enumerate_distinct_partitions(n)) == expected);
  }
}

TEST_CASE("enumerate_distinct_with_largest") {
  using V = std::vector<std::vector<Part>>;
  CHECK(as_parts(enumerate_distinct_with_largest(2, 4)) == V{{2}, {2, 1}});
  CHECK(as_parts(enumerate_distinct_with_largest(1, 10)) == V{{1}});
  CHECK(as_parts(enumerate_distinct_with_largest(3, 6)) == V{{3}, {3, 1}, {3, 2}, {3, 2, 1}});
  CHECK(as_parts(enumerate_distinct_with_largest(3, 4)) == V{{3}, {3, 1}});
  CHECK(enumerate_distinct_with_largest(5, 4).empty());
  CHECK_THROWS_AS(DistinctWithLargestStream(0, 3), std::invalid_argument);

  // Matches distinct partitions grouped by largest part.
  for (Part i = 1; i <= 12; ++i) {
    const std::uint64_t max_w = i * (i + 1) / 2;
    std::multiset<std::vector<Part>> expected, got;
    for (std::uint32_t w = 1; w <= max_w; ++w)
      for (const auto& pi : enumerate_distinct_partitions(w))
        if (pi.largest() == i) expected.insert({pi.parts().begin(), pi.parts().end()});
    for (const auto& pi : enumerate_distinct_with_largest(i, max_w)) {
      CHECK(is_distinct(pi));
      got.insert({pi.parts().begin(), pi.parts().end()});
    }
    CHECK(got == expected);
    CHECK(got.size() == (std::size_t{1} << (i - 1)));
  }
}

TEST_CASE("enumerate_c_partitions") {
  using V = std::vector<std::vector<Part>>;
  CHECK(as_parts(enumerate_c_partitions(2)) == V{{1}, {1, 1}});
  CHECK(as_parts(enumerate_c_partitions(3)) == V{{1}, {1, 1}, {1, 1, 1}, {2, 1}});
  CHECK(enumerate_c_partitions(0).empty());
  for (std::uint32_t w = 1; w <= 18; ++w) {
    std::set<std::vector<Part>> expected;
    for (std::uint32_t n = 1; n <= w; ++n)
      for (auto& a : oracle::partitions(n))
        if (is_c_partition(P(a))) expected.insert(a);
    const auto got = as_parts(enumerate_c_partitions(w));
    CHECK(std::set<std::vector<Part>>(got.begin(), got.end()) == expected);
    CHECK(got.size() == expected.size());
    CHECK(std::is_sorted(got.begin(), got.end()));
  }
}

TEST_CASE("smallest_part") {
  CHECK(smallest_part(P({1})) == 1);
  CHECK(smallest_part(P({7, 7, 6, 4, 4})) == 4);
  CHECK(smallest_part(P({5, 3, 2})) == 2);
  CHECK_THROWS_AS(smallest_part(Partition()), std::domain_error);
}

TEST_CASE("t_chain_length") {
  CHECK(t_chain_length(P({1})) == 1);
  CHECK(t_chain_length(P({1, 1})) == 0);
  CHECK(t_chain_length(P({2, 1})) == 2);
  CHECK(t_chain_length(P({3, 1, 1, 1})) == 1);
  CHECK(t_chain_length(Partition()) == 0);
  for (std::uint32_t n = 0; n <= 25; ++n)
    for (const auto& pi : enumerate_partitions(n)) {
      const auto t = t_chain_length(pi);
      const FrequencyVector f(pi);
      for (std::uint64_t j = 1; j <= t; ++j) CHECK(f.freq(j) % 2 == 1);
      CHECK(f.freq(t + 1) % 2 == 0);
      CHECK(t == oracle::t_chain({pi.parts().begin(), pi.parts().end()}));
    }
}

TEST_CASE("rank") {
  CHECK(rank(P({1})) == 0);
  CHECK(rank(P({3})) == 2);
  CHECK(rank(P({2, 1})) == 0);
  CHECK(rank(P({1, 1, 1})) == -2);
  CHECK_THROWS_AS(rank(Partition()), std::domain_error);
}

TEST_CASE("conjugate") {
  CHECK(conjugate(P({7, 7, 6, 4, 4})) == P({5, 5, 5, 5, 3, 3, 2}));
  CHECK(conjugate(P({1})) == P({1}));
  CHECK(conjugate(P({3, 1})) == P({2, 1, 1}));
  CHECK(conjugate(Partition()) == Partition());

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const auto pi = random_partition(rng, std::uniform_int_distribution<std::uint32_t>(0, 60)(rng));
    const auto bar = conjugate(pi);
    CHECK(conjugate(bar) == pi);
    CHECK(bar.weight() == pi.weight());
    CHECK(bar.size() == pi.largest());
  }
}

TEST_CASE("is_c_partition and h") {
  CHECK(is_c_partition(P({3, 2, 1, 1})));
  CHECK_FALSE(is_c_partition(P({3, 1})));
  CHECK(is_c_partition(P({1})));
  CHECK(is_c_partition(Partition()));
  CHECK(h_even_frequency_count(P({1})) == 0);
  CHECK(h_even_frequency_count(P({2, 1, 1})) == 1);
  CHECK(h_even_frequency_count(P({2, 2, 1, 1, 1})) == 1);
  CHECK(h_even_frequency_count(P({4, 4, 1, 1})) == 2);
}

TEST_CASE("conjugation bijects C-partitions onto distinct-part partitions") {
  for (std::uint32_t n = 1; n <= 25; ++n) {
    std::set<Partition> images;
    std::uint64_t c_count = 0;
    for (const auto& pi : enumerate_partitions(n)) {
      if (!is_c_partition(pi)) continue;
      ++c_count;
      const auto bar = conjugate(pi);
      CHECK(is_distinct(bar));
      images.insert(bar);
      CHECK((rank(bar) - static_cast<std::int64_t>(h_even_frequency_count(pi))) % 2 == 0);
    }
    const auto distinct = enumerate_distinct_partitions(n);
    CHECK(images.size() == c_count);
    CHECK(images == std::set<Partition>(distinct.begin(), distinct.end()));
  }
}
