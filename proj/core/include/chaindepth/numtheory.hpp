#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace chaindepth {

using BigInt = mpz_class;

/// Work limit for the Pollard-rho stage of factorization. Inputs below 2^64
/// ignore it and are always factored completely.
struct FactorBudget {
  std::uint64_t rho_iterations = 1u << 22;
};

/// A positive integer together with its (possibly partial) prime
/// factorization. When `complete()` is false the unfactored remainder is kept
/// as `cofactor()`; it is composite and coprime to nothing in particular.
class FactoredInt {
 public:
  using FactorMap = std::map<BigInt, unsigned>;

  FactoredInt() = default;  // the integer 1

  static FactoredInt from_factors(FactorMap factors);
  static FactoredInt from_partial(FactorMap factors, BigInt cofactor);
  /// p^e for a known prime p.
  static FactoredInt prime_power(const BigInt& p, unsigned e);

  const BigInt& value() const { return value_; }
  const FactorMap& factors() const { return factors_; }
  const BigInt& cofactor() const { return cofactor_; }
  bool complete() const { return cofactor_ == 1; }

  /// Number of prime factors with multiplicity; nullopt when incomplete.
  std::optional<unsigned long> omega() const;
  std::vector<BigInt> primes() const;

  FactoredInt operator*(const FactoredInt& rhs) const;
  FactoredInt& operator*=(const FactoredInt& rhs);
  /// Exact quotient; both operands must be complete and rhs | *this.
  FactoredInt operator/(const FactoredInt& rhs) const;
  /// Exponent-wise divisibility test on complete factorizations.
  bool divides(const FactoredInt& other) const;

  /// "2^2 * 3^3 * 7 * 13"; an incomplete remainder is shown as "[c]".
  std::string to_string() const;

  friend bool operator==(const FactoredInt& a, const FactoredInt& b) {
    return a.value_ == b.value_ && a.factors_ == b.factors_ &&
           a.cofactor_ == b.cofactor_;
  }

 private:
  BigInt value_ = 1;
  FactorMap factors_;
  BigInt cofactor_ = 1;
};

struct Primality {
  bool prime = false;
  bool probabilistic = false;  // true above 2^64
};

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(std::uint64_t n);
/// Deterministic below 2^64, 64-round strong probable prime test above.
Primality check_prime(const BigInt& n);
inline bool is_prime(const BigInt& n) { return check_prime(n).prime; }

FactoredInt factorize(const BigInt& n, const FactorBudget& budget = {});
inline FactoredInt factorize(std::uint64_t n) { return factorize(BigInt(static_cast<unsigned long>(n))); }

/// Omega(n), or nullopt when the factorization could not be completed.
std::optional<unsigned long> big_omega(const BigInt& n, const FactorBudget& budget = {});
std::vector<std::uint64_t> prime_divisors(std::uint64_t k);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
/// n! with its factorization from Legendre's formula.
FactoredInt factorial(unsigned n);
BigInt pow_big(std::uint64_t base, unsigned long exp);
/// Writes q = p^k when q is a prime power.
std::optional<std::pair<std::uint64_t, unsigned>> as_prime_power(std::uint64_t q);

struct GoldbachTriple {
  std::uint64_t m = 0;
  std::uint64_t p1 = 0, p2 = 0, p3 = 0;
  friend bool operator==(const GoldbachTriple&, const GoldbachTriple&) = default;
};

/// Ternary Goldbach decomposition with p1 <= p2 <= p3. All-odd triples are
/// preferred, then the lexicographically smallest one.
GoldbachTriple ternary_goldbach(std::uint64_t m);

/// The first `count` primes greater than 5.
std::vector<std::uint64_t> primes_above_five(std::size_t count);

/// Smallest prime p <= limit with p = +-3, +-13 (mod 40) and p = 1 modulo
/// each of the first n-1 primes greater than 5. Throws NotFoundWithinLimit.
std::uint64_t depth3_prime_search(unsigned n, std::uint64_t limit);

}  // namespace chaindepth
