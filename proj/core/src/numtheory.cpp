#include "chaindepth/numtheory.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "chaindepth/error.hpp"

namespace chaindepth {

namespace {

using u64 = std::uint64_t;
__extension__ using u128 = unsigned __int128;

constexpr u64 kSieveLimit = 1'000'000;

// Primality flags below kSieveLimit plus the list of primes.
struct SmallPrimes {
  std::vector<bool> composite;
  std::vector<u64> primes;

  SmallPrimes() : composite(kSieveLimit + 1, false) {
    composite[0] = composite[1] = true;
    for (u64 i = 2; i * i <= kSieveLimit; ++i) {
      if (composite[i]) continue;
      for (u64 j = i * i; j <= kSieveLimit; j += i) composite[j] = true;
    }
    for (u64 i = 2; i <= kSieveLimit; ++i)
      if (!composite[i]) primes.push_back(i);
  }
};

const SmallPrimes& small_primes() {
  static const SmallPrimes sp;
  return sp;
}

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

bool miller_rabin_u64(u64 n) {
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic for every n < 3.3 * 10^24.
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (a % n == 0) continue;
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

// Brent's variant of Pollard rho. Returns a nontrivial factor of the odd
// composite n.
u64 rho_u64(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
    u64 r = 1;
    const u64 m = 128;
    auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r <<= 1;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_u64(u64 n, std::map<u64, unsigned>& out) {
  if (n < 2) return;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}) {
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  }
  std::vector<u64> stack;
  if (n > 1) stack.push_back(n);
  while (!stack.empty()) {
    u64 c = stack.back();
    stack.pop_back();
    if (is_prime(c)) {
      ++out[c];
      continue;
    }
    u64 f = rho_u64(c);
    stack.push_back(f);
    stack.push_back(c / f);
  }
}

bool fits_u64(const BigInt& n) { return n >= 0 && mpz_fits_ulong_p(n.get_mpz_t()) != 0; }

u64 to_u64(const BigInt& n) { return mpz_get_ui(n.get_mpz_t()); }

BigInt from_u64(u64 v) { return BigInt(static_cast<unsigned long>(v)); }

// Brent rho over GMP integers with an iteration budget. Returns 0 when the
// budget runs out.
BigInt rho_big(const BigInt& n, std::uint64_t& budget) {
  for (unsigned long c = 1; c < 64 && budget > 0; ++c) {
    BigInt y = 2, x = 2, g = 1, q = 1, ys = 2, t;
    u64 r = 1;
    const u64 m = 128;
    auto f = [&](BigInt& v) {
      v = v * v + c;
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    bool exhausted = false;
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) f(y);
      u64 k = 0;
      do {
        ys = y;
        const u64 steps = std::min(m, r - k);
        for (u64 i = 0; i < steps; ++i) {
          f(y);
          t = x - y;
          q = q * abs(t);
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        budget = budget > steps ? budget - steps : 0;
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      } while (k < r && g == 1);
      r <<= 1;
      if (budget == 0 && g == 1) exhausted = true;
    } while (g == 1 && !exhausted);
    if (exhausted) return 0;
    if (g == n) {
      do {
        f(ys);
        t = x - ys;
        t = abs(t);
        mpz_gcd(g.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
  return 0;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n <= kSieveLimit) return !small_primes().composite[n];
  if (n % 2 == 0) return false;
  return miller_rabin_u64(n);
}

Primality check_prime(const BigInt& n) {
  if (n < 2) return {false, false};
  if (fits_u64(n)) return {is_prime(to_u64(n)), false};
  // GMP runs trial division, Baillie-PSW and then the requested number of
  // Miller-Rabin rounds with random bases.
  int r = mpz_probab_prime_p(n.get_mpz_t(), 64);
  return {r != 0, r == 1};
}

std::optional<unsigned long> FactoredInt::omega() const {
  if (!complete()) return std::nullopt;
  unsigned long total = 0;
  for (const auto& [p, e] : factors_) total += e;
  return total;
}

std::vector<BigInt> FactoredInt::primes() const {
  std::vector<BigInt> out;
  for (const auto& [p, e] : factors_) out.push_back(p);
  return out;
}

FactoredInt FactoredInt::from_factors(FactorMap factors) { return from_partial(std::move(factors), 1); }

FactoredInt FactoredInt::from_partial(FactorMap factors, BigInt cofactor) {
  FactoredInt f;
  BigInt v = cofactor;
  for (auto it = factors.begin(); it != factors.end();) {
    if (it->second == 0) {
      it = factors.erase(it);
      continue;
    }
    BigInt pe;
    mpz_pow_ui(pe.get_mpz_t(), it->first.get_mpz_t(), it->second);
    v *= pe;
    ++it;
  }
  f.value_ = v;
  f.factors_ = std::move(factors);
  f.cofactor_ = std::move(cofactor);
  return f;
}

FactoredInt FactoredInt::prime_power(const BigInt& p, unsigned e) {
  FactorMap m;
  if (e > 0) m[p] = e;
  return from_factors(std::move(m));
}

FactoredInt FactoredInt::operator*(const FactoredInt& rhs) const {
  FactoredInt out = *this;
  out *= rhs;
  return out;
}

FactoredInt& FactoredInt::operator*=(const FactoredInt& rhs) {
  for (const auto& [p, e] : rhs.factors_) factors_[p] += e;
  cofactor_ *= rhs.cofactor_;
  value_ *= rhs.value_;
  return *this;
}

FactoredInt FactoredInt::operator/(const FactoredInt& rhs) const {
  if (!complete() || !rhs.complete())
    throw IncompleteFactorization("exact division needs complete factorizations");
  if (!rhs.divides(*this)) throw DomainError("divisor does not divide " + value_.get_str());
  FactorMap m = factors_;
  for (const auto& [p, e] : rhs.factors_) m[p] -= e;
  return from_factors(std::move(m));
}

bool FactoredInt::divides(const FactoredInt& other) const {
  if (!complete() || !other.complete()) {
    return mpz_divisible_p(other.value_.get_mpz_t(), value_.get_mpz_t()) != 0;
  }
  for (const auto& [p, e] : factors_) {
    auto it = other.factors_.find(p);
    if (it == other.factors_.end() || it->second < e) return false;
  }
  return true;
}

std::string FactoredInt::to_string() const {
  if (value_ == 1) return "1";
  std::string s;
  for (const auto& [p, e] : factors_) {
    if (!s.empty()) s += " * ";
    s += p.get_str();
    if (e > 1) s += "^" + std::to_string(e);
  }
  if (cofactor_ != 1) {
    if (!s.empty()) s += " * ";
    s += "[" + cofactor_.get_str() + "]";
  }
  return s;
}

FactoredInt factorize(const BigInt& n, const FactorBudget& budget) {
  if (n < 1) throw DomainError("factorize: n must be positive, got " + n.get_str());
  FactoredInt::FactorMap factors;
  if (fits_u64(n)) {
    std::map<u64, unsigned> small;
    factor_u64(to_u64(n), small);
    for (const auto& [p, e] : small) factors[from_u64(p)] = e;
    return FactoredInt::from_factors(std::move(factors));
  }

  BigInt rem = n;
  for (u64 p : small_primes().primes) {
    if (from_u64(p) * from_u64(p) > rem) break;
    if (mpz_divisible_ui_p(rem.get_mpz_t(), p)) {
      unsigned e = 0;
      while (mpz_divisible_ui_p(rem.get_mpz_t(), p)) {
        mpz_divexact_ui(rem.get_mpz_t(), rem.get_mpz_t(), p);
        ++e;
      }
      factors[from_u64(p)] += e;
    }
  }

  BigInt cofactor = 1;
  std::uint64_t left = budget.rho_iterations;
  std::vector<BigInt> stack;
  if (rem > 1) stack.push_back(rem);
  while (!stack.empty()) {
    BigInt c = stack.back();
    stack.pop_back();
    if (fits_u64(c)) {
      std::map<u64, unsigned> small;
      factor_u64(to_u64(c), small);
      for (const auto& [p, e] : small) factors[from_u64(p)] += e;
      continue;
    }
    if (check_prime(c).prime) {
      ++factors[c];
      continue;
    }
    BigInt f = left > 0 ? rho_big(c, left) : BigInt(0);
    if (f == 0) {
      cofactor *= c;
      continue;
    }
    stack.push_back(f);
    stack.push_back(c / f);
  }
  return FactoredInt::from_partial(std::move(factors), std::move(cofactor));
}

std::optional<unsigned long> big_omega(const BigInt& n, const FactorBudget& budget) {
  return factorize(n, budget).omega();
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t k) {
  if (k == 0) throw DomainError("prime_divisors: k must be positive");
  std::map<u64, unsigned> m;
  factor_u64(k, m);
  std::vector<u64> out;
  for (const auto& [p, e] : m) out.push_back(p);
  return out;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

FactoredInt factorial(unsigned n) {
  if (n > kSieveLimit) throw DomainError("factorial: n too large");
  FactoredInt::FactorMap m;
  for (u64 p : small_primes().primes) {
    if (p > n) break;
    unsigned e = 0;
    for (u64 pk = p; pk <= n; pk *= p) e += static_cast<unsigned>(n / pk);
    m[from_u64(p)] = e;
  }
  return FactoredInt::from_factors(std::move(m));
}

BigInt pow_big(std::uint64_t base, unsigned long exp) {
  BigInt r;
  BigInt b = from_u64(base);
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), exp);
  return r;
}

std::optional<std::pair<std::uint64_t, unsigned>> as_prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::map<u64, unsigned> m;
  factor_u64(q, m);
  if (m.size() != 1) return std::nullopt;
  return std::make_pair(m.begin()->first, m.begin()->second);
}

GoldbachTriple ternary_goldbach(std::uint64_t m) {
  if (m < 7 || m % 2 == 0) throw DomainError("ternary_goldbach: m must be odd and >= 7");
  // All-odd triples, scanned in lexicographic order.
  for (u64 p1 = 3; 3 * p1 <= m; p1 += 2) {
    if (!is_prime(p1)) continue;
    const u64 rest = m - p1;
    for (u64 p2 = p1; 2 * p2 <= rest; p2 += 2) {
      if (is_prime(p2) && is_prime(rest - p2)) return {m, p1, p2, rest - p2};
    }
  }
  // Exactly two 2s is the only other parity pattern summing to an odd m.
  if (is_prime(m - 4)) return {m, 2, 2, m - 4};
  throw Error("ternary_goldbach: no decomposition of " + std::to_string(m) +
              " exists; this would contradict the ternary Goldbach theorem");
}

std::vector<std::uint64_t> primes_above_five(std::size_t count) {
  std::vector<u64> out;
  for (u64 p : small_primes().primes) {
    if (out.size() == count) break;
    if (p > 5) out.push_back(p);
  }
  if (out.size() < count) throw DomainError("primes_above_five: count too large");
  return out;
}

std::uint64_t depth3_prime_search(unsigned n, std::uint64_t limit) {
  if (n < 2) throw DomainError("depth3_prime_search: n must be >= 2");
  const auto moduli = primes_above_five(n - 1);
  u128 prod = 1;
  for (u64 p : moduli) {
    prod *= p;
    if (prod > (static_cast<u128>(1) << 100)) break;  // already far beyond any 64-bit limit
  }
  const u128 modulus = prod * 40;

  // x = 1 + prod * t with t chosen so that x hits each residue mod 40.
  const u64 prod40 = static_cast<u64>(prod % 40);
  u64 inv = 0;
  for (u64 t = 1; t < 40; ++t)
    if (prod40 * t % 40 == 1) inv = t;
  std::vector<u128> residues;
  for (u64 r : {3u, 13u, 27u, 37u}) {
    const u64 t = (r + 39) % 40 * inv % 40;  // (r - 1) * prod^-1 mod 40
    residues.push_back(1 + prod * t);
  }
  std::sort(residues.begin(), residues.end());

  for (u128 base = 0;; base += modulus) {
    for (u128 x : residues) {
      const u128 cand = base + x;
      if (cand > limit) {
        throw NotFoundWithinLimit("depth3_prime_search: no admissible prime <= " + std::to_string(limit) +
                                  " for n = " + std::to_string(n));
      }
      if (is_prime(static_cast<u64>(cand))) return static_cast<u64>(cand);
    }
  }
}

}  // namespace chaindepth
