#include "adh.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <string>

#include "core_partitions.hpp"

namespace partparity {

namespace {

unsigned mod_nonneg(std::int64_t v, unsigned m) {
  const std::int64_t r = v % static_cast<std::int64_t>(m);
  return static_cast<unsigned>(r < 0 ? r + m : r);
}

std::uint64_t abs_u64(std::int64_t v) {
  return v < 0 ? std::uint64_t(0) - static_cast<std::uint64_t>(v)
               : static_cast<std::uint64_t>(v);
}

// Largest i with 24i + 1 representable as a positive int64 factor.
constexpr std::uint64_t kMaxIndex =
    (static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()) - 1) / 24;

}  // namespace

std::uint64_t isqrt(std::uint64_t v) {
  if (v < 2) return v;
  // Newton iteration from above; converges to floor(sqrt(v)).
  std::uint64_t x = v;
  std::uint64_t y = x / 2 + (x & 1);
  while (y < x) {
    x = y;
    y = (x + v / x) / 2;
  }
  return x;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::uint64_t d = 5; d <= n / d; d += 6)
    if (n % d == 0 || n % (d + 2) == 0) return false;
  return true;
}

SignedPrime::SignedPrime(std::int64_t value) : value_(value) {
  const std::uint64_t q = magnitude();
  const bool ok = is_prime(q) &&
                  ((value > 0 && q % 6 == 1) || (value < 0 && q % 6 == 5));
  if (!ok)
    throw std::domain_error("not a signed prime: " + std::to_string(value));
}

SignedPrime SignedPrime::from_prime(std::uint64_t q) {
  const auto v = static_cast<std::int64_t>(q);
  return SignedPrime(q % 6 == 5 ? -v : v);
}

std::uint64_t SignedPrime::magnitude() const { return abs_u64(value_); }

unsigned SignedPrime::residue24() const { return mod_nonneg(value_, 24); }

void SignedFactorization::validate() const {
  // Signed product computed in 128 bits so overflow cannot mask a mismatch.
  __int128 product = 1;
  unsigned negatives = 0;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    const auto& [p, e] = factors[k];
    if (e == 0) throw InternalError("zero exponent in factorization");
    if (k > 0 && factors[k - 1].p.magnitude() >= p.magnitude())
      throw InternalError("factors not distinct and ascending");
    for (unsigned r = 0; r < e; ++r) {
      product *= p.value();
      if (product > static_cast<__int128>(m) || -product > static_cast<__int128>(m))
        throw InternalError("factor product exceeds m");
    }
    if (p.value() < 0) negatives += e;
  }
  if (negatives % 2 != 0) throw InternalError("odd number of negative factors");
  if (product != static_cast<__int128>(m))
    throw InternalError("factor product differs from m=" + std::to_string(m));
}

SignedFactorization signed_factorize(std::uint64_t m) {
  if (m == 0 || m % 6 != 1)
    throw std::domain_error("signed_factorize needs m >= 1 with m = 1 mod 6, got " +
                            std::to_string(m));
  SignedFactorization out;
  out.m = m;
  std::uint64_t rest = m;
  auto take = [&](std::uint64_t q) {
    unsigned e = 0;
    while (rest % q == 0) {
      rest /= q;
      ++e;
    }
    if (e) out.factors.push_back({SignedPrime::from_prime(q), e});
  };
  // m is coprime to 6, so only candidates 6k +- 1 can divide it.
  for (std::uint64_t d = 5; d <= rest / d; d += 6) {
    take(d);
    take(d + 2);
  }
  if (rest > 1) out.factors.push_back({SignedPrime::from_prime(rest), 1});
  return out;
}

namespace {

void check_pell_input(std::int64_t p) {
  // Keeps 6y^2 + p inside int64 over the whole search range.
  constexpr std::int64_t kLimit = std::numeric_limits<std::int64_t>::max() / 8;
  if (p > kLimit || p < -kLimit)
    throw std::domain_error("Pell sign search out of range: " + std::to_string(p));
  if (mod_nonneg(p, 24) != 1 || !is_prime(abs_u64(p)))
    throw std::domain_error("Pell sign search needs |p| prime and p = 1 mod 24, got " +
                            std::to_string(p));
}

}  // namespace

PellWitness pell_search(std::int64_t p,
                        const std::function<void(const PellProbe&)>& visit) {
  check_pell_input(p);
  const std::uint64_t mag = abs_u64(p);
  std::uint64_t bound = isqrt(mag);
  if (bound * bound < mag) ++bound;
  bound += 1;
  for (std::uint64_t y = 0; y <= bound; ++y) {
    const std::int64_t value = 6 * static_cast<std::int64_t>(y * y) + p;
    PellProbe probe{y, value, false, 0};
    if (value >= 0) {
      probe.root = isqrt(static_cast<std::uint64_t>(value));
      probe.square = probe.root * probe.root == static_cast<std::uint64_t>(value);
    }
    if (visit) visit(probe);
    if (!probe.square) continue;
    PellWitness w{p, y, probe.root, 0};
    switch (w.residue12()) {
      case 1:
      case 11: w.sign = +1; break;
      case 5:
      case 7: w.sign = -1; break;
      default:
        throw InternalError("x0 + 3y0 = " + std::to_string(w.residue12()) +
                            " mod 12 for p=" + std::to_string(p));
    }
    if (y % 2 != 0 || w.x0 % 2 != 1)
      throw InternalError("Pell witness parity violated for p=" + std::to_string(p));
    return w;
  }
  throw InternalError("no Pell witness with y <= " + std::to_string(bound) +
                      " for p=" + std::to_string(p));
}

PellWitness pell_witness(std::int64_t p) {
  static std::mutex mu;
  static std::map<std::int64_t, PellWitness> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(p); it != cache.end()) return it->second;
  }
  const PellWitness w = pell_search(p, nullptr);
  std::lock_guard lock(mu);
  return cache.emplace(p, w).first->second;
}

const char* describe(TCase c) {
  switch (c) {
    case TCase::Vanishing: return "p != 1 mod 24 and e odd: 0";
    case TCase::EvenOne: return "p = 13 or 19 mod 24 and e even: 1";
    case TCase::EvenAlternating: return "p = 7 mod 24 and e even: (-1)^(e/2)";
    case TCase::PellPositive: return "p = 1 mod 24 and T(p) = 2: e+1";
    case TCase::PellNegative: return "p = 1 mod 24 and T(p) = -2: (-1)^e (e+1)";
  }
  return "?";
}

TCase t_case(SignedPrime p, unsigned e) {
  if (e == 0) throw std::domain_error("prime power exponent must be positive");
  const unsigned r = p.residue24();
  if (r == 1)
    return pell_witness(p.value()).sign > 0 ? TCase::PellPositive
                                            : TCase::PellNegative;
  if (e % 2 == 1) return TCase::Vanishing;
  if (r == 13 || r == 19) return TCase::EvenOne;
  if (r == 7) return TCase::EvenAlternating;
  // Signed primes are 1 mod 6, so mod 24 they are 1, 7, 13 or 19.
  throw InternalError("signed prime with residue " + std::to_string(r) + " mod 24");
}

std::int64_t t_prime_power(SignedPrime p, unsigned e) {
  const auto e1 = static_cast<std::int64_t>(e) + 1;
  switch (t_case(p, e)) {
    case TCase::Vanishing: return 0;
    case TCase::EvenOne: return 1;
    case TCase::EvenAlternating: return (e / 2) % 2 ? -1 : 1;
    case TCase::PellPositive: return e1;
    case TCase::PellNegative: return e % 2 ? -e1 : e1;
  }
  throw InternalError("unreachable prime-power case");
}

std::int64_t t_of(std::uint64_t m) {
  const SignedFactorization f = signed_factorize(m);
  std::int64_t t = 1;
  for (const auto& [p, e] : f.factors) {
    // Vanishing factors settle the product without a Pell search elsewhere.
    if (p.residue24() != 1 && e % 2 == 1) return 0;
  }
  for (const auto& [p, e] : f.factors) t *= t_prime_power(p, e);
  return t;
}

std::int64_t s_of(std::uint64_t i) {
  if (i > kMaxIndex)
    throw std::domain_error("S(i) index too large: " + std::to_string(i));
  return t_of(24 * i + 1);
}

std::int64_t s_oracle(std::uint32_t i) {
  std::int64_t s = 0;
  DistinctPartitionStream stream(i);
  while (const Partition* pi = stream.next()) {
    if (pi->empty()) continue;
    s += rank(*pi) % 2 == 0 ? 1 : -1;
  }
  return s;
}

STableRow s_table_row(std::uint64_t i) {
  if (i > kMaxIndex)
    throw std::domain_error("S(i) index too large: " + std::to_string(i));
  STableRow row{i, 24 * i + 1, false, {}, 0};
  row.s = t_of(row.m);
  for (const auto& [p, e] : signed_factorize(row.m).factors) {
    if (p.residue24() == 1 && e % 2 == 1) {
      row.has_witness = true;
      row.witness = pell_witness(p.value());
      break;
    }
  }
  return row;
}

}  // namespace partparity
