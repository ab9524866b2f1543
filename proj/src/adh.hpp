#pragma once

// S(i) = T(24i + 1), where T is the multiplicative function on integers
// congruent to 1 mod 6 evaluated prime power by prime power. Primes p = 1
// mod 24 need the sign of T(p), which is read off the least solution of the
// Pell-type equation x^2 - 6y^2 = p.

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace partparity {

/// Raised when an invariant the mathematics guarantees does not hold.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A prime = 1 mod 6, or the negative of a prime = 5 mod 6. Either way the
/// value itself is = 1 mod 6.
class SignedPrime {
 public:
  /// Throws std::domain_error when `value` is not of that shape.
  explicit SignedPrime(std::int64_t value);

  /// The signed prime associated with the ordinary prime q (q = 1 or 5 mod 6).
  static SignedPrime from_prime(std::uint64_t q);

  std::int64_t value() const { return value_; }
  std::uint64_t magnitude() const;
  /// value mod 24, reduced into 0..23.
  unsigned residue24() const;

  friend bool operator==(SignedPrime, SignedPrime) = default;

 private:
  std::int64_t value_;
};

struct PrimePower {
  SignedPrime p;
  unsigned e;
};

/// m = prod p^e over factors; factors sorted by |p| ascending.
struct SignedFactorization {
  std::uint64_t m = 1;
  std::vector<PrimePower> factors;

  /// Throws InternalError if the product, distinctness, or sign-count
  /// invariants fail.
  void validate() const;
};

struct PellWitness {
  std::int64_t p;
  std::uint64_t y0;
  std::uint64_t x0;
  int sign;

  /// (x0 + 3 y0) mod 12, one of 1, 5, 7, 11.
  unsigned residue12() const { return static_cast<unsigned>((x0 + 3 * y0) % 12); }
};

/// One probe of the Pell search: 6y^2 + p and whether it is a square.
struct PellProbe {
  std::uint64_t y;
  std::int64_t value;
  bool square;
  std::uint64_t root;
};

/// floor(sqrt(v)) in integer arithmetic.
std::uint64_t isqrt(std::uint64_t v);
bool is_prime(std::uint64_t n);

/// Throws std::domain_error unless m >= 1 and m = 1 mod 6.
SignedFactorization signed_factorize(std::uint64_t m);

/// Least y >= 0 with 6y^2 + p a perfect square. Requires p = 1 mod 24 and |p|
/// prime (std::domain_error otherwise); InternalError if the search passes
/// ceil(sqrt|p|) + 1. Results are memoized.
PellWitness pell_witness(std::int64_t p);

/// Same search, reporting each probe to `visit`. Not memoized.
PellWitness pell_search(std::int64_t p,
                        const std::function<void(const PellProbe&)>& visit);

/// Which branch of the prime-power rule applies.
enum class TCase {
  Vanishing,       // p != 1 mod 24, e odd
  EvenOne,         // p = 13 or 19 mod 24, e even
  EvenAlternating, // p = 7 mod 24, e even: (-1)^(e/2)
  PellPositive,    // p = 1 mod 24, T(p) = 2: e + 1
  PellNegative,    // p = 1 mod 24, T(p) = -2: (-1)^e (e + 1)
};

const char* describe(TCase c);
TCase t_case(SignedPrime p, unsigned e);

std::int64_t t_prime_power(SignedPrime p, unsigned e);

/// T(m) for m = 1 mod 6; T(1) = 1.
std::int64_t t_of(std::uint64_t m);

/// S(i) = T(24i + 1).
std::int64_t s_of(std::uint64_t i);

/// S(i) by summing (-1)^rank over the distinct-part partitions of i.
std::int64_t s_oracle(std::uint32_t i);

/// The witness that decides the sign of S(i), if any: the first factor of
/// 24i + 1 with p = 1 mod 24 and odd exponent.
struct STableRow {
  std::uint64_t i;
  std::uint64_t m;
  bool has_witness;
  PellWitness witness;
  std::int64_t s;
};

STableRow s_table_row(std::uint64_t i);

}  // namespace partparity
