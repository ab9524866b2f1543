#include <random>
#include <set>

#include "adh.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace partparity;

namespace {

std::vector<std::pair<std::int64_t, unsigned>> flat(const SignedFactorization& f) {
  std::vector<std::pair<std::int64_t, unsigned>> out;
  for (const auto& [p, e] : f.factors) out.emplace_back(p.value(), e);
  return out;
}

using Flat = std::vector<std::pair<std::int64_t, unsigned>>;

}  // namespace

TEST_CASE("isqrt is exact") {
  for (std::uint64_t r = 0; r < 3000; ++r) {
    CHECK(isqrt(r * r) == r);
    if (r) CHECK(isqrt(r * r - 1) == r - 1);
    CHECK(isqrt(r * r + 2 * r) == r);
  }
  const std::uint64_t big = 4294967295ull;  // 2^32 - 1
  CHECK(isqrt(big * big) == big);
  CHECK(isqrt(~0ull) == big);
}

TEST_CASE("signed primes") {
  CHECK(SignedPrime(7).residue24() == 7);
  CHECK(SignedPrime(-5).residue24() == 19);
  CHECK(SignedPrime(-11).residue24() == 13);
  CHECK(SignedPrime(-17).residue24() == 7);
  CHECK(SignedPrime(-23).residue24() == 1);
  CHECK_THROWS_AS(SignedPrime(5), std::domain_error);
  CHECK_THROWS_AS(SignedPrime(-7), std::domain_error);
  CHECK_THROWS_AS(SignedPrime(25), std::domain_error);
  CHECK_THROWS_AS(SignedPrime(1), std::domain_error);
  CHECK(SignedPrime::from_prime(29).value() == -29);
}

TEST_CASE("signed_factorize") {
  CHECK(flat(signed_factorize(25)) == Flat{{-5, 2}});
  CHECK(flat(signed_factorize(145)) == Flat{{-5, 1}, {-29, 1}});
  CHECK(signed_factorize(1).factors.empty());
  CHECK(flat(signed_factorize(73)) == Flat{{73, 1}});
  CHECK(flat(signed_factorize(529)) == Flat{{-23, 2}});
  CHECK_THROWS_AS(signed_factorize(0), std::domain_error);
  CHECK_THROWS_AS(signed_factorize(5), std::domain_error);
  CHECK_THROWS_AS(signed_factorize(9), std::domain_error);

  for (std::uint64_t i = 1; i <= 10000; ++i) {
    const auto f = signed_factorize(24 * i + 1);
    CHECK_NOTHROW(f.validate());
  }
}

TEST_CASE("factorization validation catches corruption") {
  auto f = signed_factorize(145);
  f.m = 146;
  CHECK_THROWS_AS(f.validate(), InternalError);
  f = signed_factorize(145);
  f.factors.pop_back();
  CHECK_THROWS_AS(f.validate(), InternalError);
}

TEST_CASE("pell_witness") {
  const auto w73 = pell_witness(73);
  CHECK(w73.y0 == 4);
  CHECK(w73.x0 == 13);
  CHECK(w73.sign == 1);
  const auto w97 = pell_witness(97);
  CHECK(w97.y0 == 2);
  CHECK(w97.x0 == 11);
  CHECK(w97.sign == -1);
  const auto w673 = pell_witness(673);
  CHECK(w673.y0 == 14);
  CHECK(w673.x0 == 43);
  CHECK(w673.sign == 1);
  const auto wm23 = pell_witness(-23);
  CHECK(wm23.y0 == 2);
  CHECK(wm23.x0 == 1);
  CHECK(wm23.sign == -1);
  CHECK(wm23.residue12() == 7);

  CHECK_THROWS_AS(pell_witness(7), std::domain_error);
  CHECK_THROWS_AS(pell_witness(25), std::domain_error);
  CHECK_THROWS_AS(pell_witness(49), std::domain_error);
  // 6*4^2 - 47 = 49 = 7^2 and 7 + 12 = 19 = 7 mod 12.
  const auto wm47 = pell_witness(-47);
  CHECK(wm47.y0 == 4);
  CHECK(wm47.x0 == 7);
  CHECK(wm47.sign == -1);
}

TEST_CASE("pell witnesses agree with a direct x,y scan") {
  std::set<std::int64_t> seen;
  for (std::uint64_t i = 1; i <= 10000; ++i)
    for (const auto& [p, e] : signed_factorize(24 * i + 1).factors)
      if (p.residue24() == 1) seen.insert(p.value());
  REQUIRE(seen.size() > 100);
  int checked = 0;
  for (auto p : seen) {
    const auto w = pell_witness(p);
    const auto x = static_cast<__int128>(w.x0), y = static_cast<__int128>(w.y0);
    CHECK(x * x - 6 * y * y == p);
    CHECK(w.y0 % 2 == 0);
    CHECK(w.x0 % 2 == 1);
    const unsigned r = w.residue12();
    CHECK((r == 1 || r == 5 || r == 7 || r == 11));
    CHECK(w.sign == ((r == 1 || r == 11) ? 1 : -1));
    if (checked++ < 150) {
      const auto b = oracle::pell_brute(p, w.y0 + 1);
      CHECK(b.y0 == w.y0);
      CHECK(b.x0 == w.x0);
    }
  }
}

TEST_CASE("pell_search reports every probe") {
  std::vector<std::uint64_t> ys;
  const auto w = pell_search(73, [&](const PellProbe& pr) {
    ys.push_back(pr.y);
    CHECK(pr.value == 6 * static_cast<std::int64_t>(pr.y * pr.y) + 73);
    CHECK(pr.square == (pr.y == 4));
  });
  CHECK(ys == std::vector<std::uint64_t>{0, 1, 2, 3, 4});
  CHECK(w.y0 == 4);
}

TEST_CASE("t_prime_power") {
  CHECK(t_prime_power(SignedPrime(-5), 2) == 1);
  CHECK(t_prime_power(SignedPrime(7), 2) == -1);
  CHECK(t_prime_power(SignedPrime(7), 4) == 1);
  CHECK(t_prime_power(SignedPrime(73), 1) == 2);
  CHECK(t_prime_power(SignedPrime(73), 2) == 3);
  CHECK(t_prime_power(SignedPrime(97), 1) == -2);
  CHECK(t_prime_power(SignedPrime(97), 3) == -4);
  CHECK(t_prime_power(SignedPrime(-23), 2) == 3);
  CHECK(t_prime_power(SignedPrime(-23), 1) == -2);
  CHECK(t_prime_power(SignedPrime(-5), 1) == 0);
  CHECK(t_prime_power(SignedPrime(13), 3) == 0);
  CHECK_THROWS_AS(t_prime_power(SignedPrime(13), 0), std::domain_error);
}

TEST_CASE("t_of and s_of") {
  CHECK(t_of(25) == 1);
  CHECK(t_of(145) == 0);
  CHECK(t_of(529) == 3);
  CHECK(t_of(1) == 1);
  CHECK(s_of(0) == 1);
  CHECK(s_of(3) == 2);
  CHECK(s_of(22) == 3);
  CHECK(s_of(36) == 0);
  CHECK_THROWS_AS(t_of(35), std::domain_error);
}

TEST_CASE("s_oracle") {
  CHECK(s_oracle(1) == 1);
  CHECK(s_oracle(2) == -1);
  CHECK(s_oracle(3) == 2);
  for (std::uint32_t i = 1; i <= 24; ++i) CHECK(s_oracle(i) == oracle::s_brute(i));
}

TEST_CASE("formula matches the signed rank count") {
  for (std::uint32_t i = 1; i <= 60; ++i) {
    INFO("i=" << i);
    CHECK(s_of(i) == s_oracle(i));
  }
}

TEST_CASE("T is multiplicative on coprime arguments") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::uint64_t> pick(0, 100000 / 6 - 1);
  int tested = 0;
  while (tested < 2000) {
    const std::uint64_t a = 6 * pick(rng) + 1, b = 6 * pick(rng) + 1;
    std::set<std::uint64_t> qa;
    for (const auto& [p, e] : signed_factorize(a).factors) qa.insert(p.magnitude());
    bool coprime = true;
    for (const auto& [p, e] : signed_factorize(b).factors)
      if (qa.count(p.magnitude())) coprime = false;
    if (!coprime) continue;
    ++tested;
    INFO("a=" << a << " b=" << b);
    CHECK(t_of(a * b) == t_of(a) * t_of(b));
  }
}

TEST_CASE("s_table_row picks the sign-deciding factor") {
  const auto r3 = s_table_row(3);
  CHECK(r3.m == 73);
  CHECK(r3.has_witness);
  CHECK(r3.witness.y0 == 4);
  CHECK(r3.witness.x0 == 13);
  CHECK(r3.s == 2);
  const auto r22 = s_table_row(22);
  CHECK(r22.m == 529);
  CHECK_FALSE(r22.has_witness);
  CHECK(r22.s == 3);
  const auto r1 = s_table_row(1);
  CHECK(r1.m == 25);
  CHECK_FALSE(r1.has_witness);
  CHECK(r1.s == 1);
}
