#include "chaindepth/formulas.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

#include "chaindepth/error.hpp"

namespace chaindepth {

namespace detail {
extern const char* const kSporadicDepthsJson;
}

namespace {

// Integers beyond this many bits are not worth attempting to factor.
constexpr unsigned long kMaxFactorBits = 4096;
constexpr unsigned long kMaxPrimalityBits = 100'000;

// Omega, or a lower bound when the factorization stalls: a composite cofactor
// contributes at least two primes.
struct OmegaBound {
  unsigned long lo = 0;
  bool exact = false;
  std::string what;
};

OmegaBound omega_bound(const BigInt& n, const std::string& what, const FactorBudget& budget) {
  if (mpz_sizeinbase(n.get_mpz_t(), 2) > kMaxFactorBits) return {1, false, what};
  const FactoredInt f = factorize(n, budget);
  if (f.complete()) return {*f.omega(), true, what};
  unsigned long found = 0;
  for (const auto& [p, e] : f.factors()) found += e;
  return {found + 2, false, what};
}

// Minimum over candidates; exact when the best exact value is no larger than
// every inexact lower bound.
struct MinResult {
  std::optional<long> value;
  std::string pending;
};

MinResult certified_min(const std::vector<std::pair<OmegaBound, long>>& candidates) {
  std::optional<long> best_exact;
  long best_lower = LONG_MAX;
  std::string pending;
  for (const auto& [ob, shift] : candidates) {
    const long v = static_cast<long>(ob.lo) + shift;
    if (ob.exact) {
      best_exact = best_exact ? std::min(*best_exact, v) : v;
    } else if (v < best_lower) {
      best_lower = v;
      pending = ob.what;
    }
  }
  if (best_exact && *best_exact <= best_lower) return {best_exact, {}};
  return {std::nullopt, pending};
}

BigInt two_pow(unsigned long e) {
  BigInt v;
  mpz_ui_pow_ui(v.get_mpz_t(), 2, e);
  return v;
}

bool exponent_too_large(unsigned long e) { return e > kMaxFactorBits; }

unsigned omega_small(std::uint64_t k) { return static_cast<unsigned>(*factorize(k).omega()); }

std::uint64_t require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  return p;
}

}  // namespace

DepthResult DepthResult::exact(unsigned v, Method m, std::string citation) {
  return {DepthStatus::Exact, v, v, m, std::move(citation), {}};
}

DepthResult DepthResult::interval(unsigned lo, unsigned hi, Method m, std::string citation) {
  if (lo > hi) throw Error("DepthResult: empty interval");
  if (lo == hi) return exact(lo, m, std::move(citation));
  return {DepthStatus::Interval, lo, hi, m, std::move(citation), {}};
}

DepthResult DepthResult::unknown(std::string note, Method m, std::string citation) {
  return {DepthStatus::Unknown, 0, 0, m, std::move(citation), std::move(note)};
}

unsigned DepthResult::value() const {
  if (status != DepthStatus::Exact) throw Error("depth is not exact: " + to_string());
  return lo;
}

std::string DepthResult::to_string() const {
  switch (status) {
    case DepthStatus::Exact: return std::to_string(lo);
    case DepthStatus::Interval: return "[" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
    case DepthStatus::Unknown: return "unknown" + (note.empty() ? std::string() : " (" + note + ")");
  }
  return {};
}

DepthResult depth_l2_prime(std::uint64_t p) {
  if (p == 2) throw DomainError("depth_l2_prime needs an odd prime");
  require_prime(p);
  const std::string cite = "L2(p) depth by congruence class of p";
  if (p == 3) return DepthResult::exact(2, Method::Formula, cite);
  const std::uint64_t r = p % 40;
  if (is_prime((p - 1) / 2) || is_prime((p + 1) / 2) || r == 3 || r == 13 || r == 27 || r == 37)
    return DepthResult::exact(3, Method::Formula, cite);
  return DepthResult::exact(4, Method::Formula, cite);
}

DepthResult depth_l2_pk(std::uint64_t p, unsigned k, const FactorBudget& budget) {
  require_prime(p);
  if (k == 0) throw DomainError("k must be positive");
  if (p == 2 && k == 1) throw DomainError("L2(2) is excluded");
  const unsigned ok = omega_small(k);

  if (p != 2) {
    const std::string cite = "subfield descent for L2(p^k), k odd";
    if (k % 2 == 0) return DepthResult::unknown("out of scope: p odd and k even", Method::Formula, cite);
    return DepthResult::exact(ok + depth_l2_prime(p).value(), Method::Formula, cite);
  }

  std::vector<std::pair<OmegaBound, long>> cands;
  if (k % 2) {
    const std::string cite = "L2(2^k), k odd: minimum over prime divisors r of k";
    for (auto r : prime_divisors(k)) {
      if (exponent_too_large(r)) return DepthResult::unknown("2^" + std::to_string(r) + "+-1", Method::Formula, cite);
      const BigInt t = two_pow(r);
      cands.push_back({omega_bound(t - 1, "2^" + std::to_string(r) + "-1", budget), 0});
      cands.push_back({omega_bound(t + 1, "2^" + std::to_string(r) + "+1", budget), 0});
    }
    const auto m = certified_min(cands);
    if (!m.value) return DepthResult::unknown("incomplete factorization of " + m.pending, Method::Formula, cite);
    return DepthResult::exact(ok + 1 + static_cast<unsigned>(*m.value), Method::Formula, cite);
  }

  const std::string cite = "L2(2^k), k even: minimum over subfields GF(2^(2^c))";
  const unsigned a = static_cast<unsigned>(std::countr_zero(k));
  for (unsigned c = 1; c <= a; ++c) {
    const unsigned long e = 1ul << c;
    if (exponent_too_large(e)) return DepthResult::unknown("2^" + std::to_string(e) + "+-1", Method::Formula, cite);
    const BigInt t = two_pow(e);
    cands.push_back({omega_bound(t - 1, "2^" + std::to_string(e) + "-1", budget), -static_cast<long>(c)});
    cands.push_back({omega_bound(t + 1, "2^" + std::to_string(e) + "+1", budget), -static_cast<long>(c)});
  }
  const auto m = certified_min(cands);
  if (!m.value) return DepthResult::unknown("incomplete factorization of " + m.pending, Method::Formula, cite);
  return DepthResult::exact(static_cast<unsigned>(static_cast<long>(ok) + 2 + *m.value), Method::Formula, cite);
}

DepthResult depth_suzuki(unsigned k, const FactorBudget& budget) {
  if (k < 3 || k % 2 == 0) throw DomainError("Suzuki groups need k >= 3 odd");
  const std::string cite = "2B2(2^k): subfield descent to 2B2(2^r), r prime";
  std::vector<std::pair<OmegaBound, long>> cands;
  for (auto r : prime_divisors(k)) {
    if (exponent_too_large(r)) return DepthResult::unknown("2^" + std::to_string(r) + "-1", Method::Formula, cite);
    const BigInt t = two_pow(r);
    const BigInt s = two_pow((r + 1) / 2);
    const std::string rs = std::to_string(r), ss = std::to_string((r + 1) / 2);
    cands.push_back({omega_bound(t - 1, "2^" + rs + "-1", budget), 0});
    cands.push_back({omega_bound(t + s + 1, "2^" + rs + "+2^" + ss + "+1", budget), 1});
    cands.push_back({omega_bound(t - s + 1, "2^" + rs + "-2^" + ss + "+1", budget), 1});
  }
  const auto m = certified_min(cands);
  if (!m.value) return DepthResult::unknown("incomplete factorization of " + m.pending, Method::Formula, cite);
  return DepthResult::exact(omega_small(k) + 1 + static_cast<unsigned>(*m.value), Method::Formula, cite);
}

const std::map<std::string, unsigned>& sporadic_depth_table() {
  static const std::map<std::string, unsigned> table = [] {
    const auto doc = nlohmann::json::parse(detail::kSporadicDepthsJson);
    std::map<std::string, unsigned> t;
    for (const auto& [name, v] : doc.at("depths").items()) {
      auto canon = canonical_sporadic_name(name);
      if (!canon || *canon != name) throw Error("sporadic depth data: unexpected name " + name);
      t.emplace(name, v.get<unsigned>());
    }
    if (t.size() != sporadic_names().size()) throw Error("sporadic depth data: expected 26 entries");
    return t;
  }();
  return table;
}

DepthResult depth_sporadic(std::string_view name) {
  auto canon = canonical_sporadic_name(name);
  if (!canon) throw DomainError("unknown sporadic group '" + std::string(name) + "'");
  return DepthResult::exact(sporadic_depth_table().at(*canon), Method::TableLookup, "sporadic depth table");
}

DepthResult depth_supersolvable(const FactoredInt& order) {
  auto om = order.omega();
  if (!om) throw IncompleteFactorization("Omega of " + order.value().get_str() + " is not available");
  return DepthResult::exact(static_cast<unsigned>(*om), Method::Formula, "supersolvable: depth = Omega(|G|)");
}

Depth3Verdict is_depth3(const FamilyDescriptor& input) {
  if (!input.is_simple()) throw DomainError(input.display_name() + " is not a non-abelian simple group");
  const FamilyDescriptor d = resolve_alias(input);
  auto yes = [](std::string why) { return Depth3Verdict{Verdict::True, std::move(why), false}; };
  auto no = [](std::string why) { return Depth3Verdict{Verdict::False, std::move(why), false}; };

  switch (d.kind) {
    case FamilyKind::Alternating: {
      const auto n = d.n;
      if (n == 7 || n == 11 || n == 23) return no("A_p with p in {7, 11, 23} is excluded");
      if (is_prime(n) && is_prime((n - 1) / 2)) return yes("p and (p-1)/2 prime");
      return no("A_n needs n and (n-1)/2 prime");
    }
    case FamilyKind::Linear: {
      const std::uint64_t q = d.q;
      if (d.n == 2) {
        const std::uint64_t g = q % 2 ? 2 : 1;
        if (q != 9 && (is_prime((q + 1) / g) || is_prime((q - 1) / g))) return yes("(q+-1)/(2,q-1) prime");
        const auto r = q % 40;
        if (d.k == 1 && (r == 3 || r == 13 || r == 27 || r == 37)) return yes("q prime, q = +-3, +-13 mod 40");
        if (d.p == 3 && d.k >= 3 && is_prime(std::uint64_t{d.k})) return yes("q = 3^k with k >= 3 prime");
        return no("no depth-3 condition for L2(q) holds");
      }
      const int eps = d.epsilon;
      const auto n = static_cast<unsigned>(d.n);
      if ((n == 3 && q == 4 && eps == 1) || (n == 3 && q == 3 && eps == -1) || (n == 3 && q == 5 && eps == -1) ||
          (n == 5 && q == 2 && eps == -1))
        return no("listed exception");
      if (!is_prime(std::uint64_t{n})) return no("n is not prime");
      if (static_cast<double>(n) * std::log2(static_cast<double>(q)) > kMaxPrimalityBits)
        return {Verdict::Unknown, "primality of (q^n-e)/((q-e)(n,q-e)) out of reach", false};
      const BigInt qn = pow_big(q, n);
      const BigInt num = eps == 1 ? BigInt(qn - 1) : BigInt(qn + 1);
      const std::uint64_t qe = eps == 1 ? q - 1 : q + 1;
      const BigInt den = BigInt(static_cast<unsigned long>(qe)) * static_cast<unsigned long>(gcd_u64(n, qe));
      const BigInt N = num / den;
      const Primality pr = check_prime(N);
      Depth3Verdict v = pr.prime ? yes("n and (q^n-e)/((q-e)(n,q-e)) = " + N.get_str() + " prime")
                                 : no("(q^n-e)/((q-e)(n,q-e)) = " + N.get_str() + " is not prime");
      v.probabilistic = pr.probabilistic;
      return v;
    }
    case FamilyKind::Suzuki: {
      const BigInt qm1 = pow_big(d.q, 1) - 1;
      const Primality pr = check_prime(qm1);
      Depth3Verdict v = pr.prime ? yes("q-1 prime") : no("q-1 is not prime");
      v.probabilistic = pr.probabilistic;
      return v;
    }
    case FamilyKind::Sporadic:
      if (d.sporadic_name == "M23" || d.sporadic_name == "B") return yes("sporadic of depth 3");
      return no("sporadic of depth " + std::to_string(sporadic_depth_table().at(d.sporadic_name)));
    default:
      return no("no depth-3 members in this family");
  }
}

namespace {

DepthResult lie_interval(const FamilyDescriptor& d, const FactorBudget& budget) {
  const Depth3Verdict v = is_depth3(d);
  const std::string cite = "depth-3 classification with the Lie-type upper bound";
  if (v.verdict == Verdict::True) return DepthResult::exact(3, Method::Formula, "depth-3 classification");
  const unsigned lo = v.verdict == Verdict::False ? 4 : 3;
  const BoundReport b = bound_thm14(d, budget);
  if (!b.bound_value) return DepthResult::unknown(b.note, Method::Bound, cite);
  return DepthResult::interval(lo, std::max(lo, *b.bound_value), Method::Bound, cite);
}

}  // namespace

DepthResult depth_formula(const FamilyDescriptor& d, const FactorBudget& budget) {
  switch (d.kind) {
    case FamilyKind::Sporadic:
      return depth_sporadic(d.sporadic_name);
    case FamilyKind::Cyclic:
    case FamilyKind::Dihedral:
      return depth_supersolvable(order_of(d, budget));
    case FamilyKind::Symmetric:
      if (d.n <= 3) return depth_supersolvable(order_of(d, budget));
      return DepthResult::unknown("no closed form for S_n, n >= 4", Method::Formula, "");
    case FamilyKind::Alternating: {
      if (d.n <= 3) return depth_supersolvable(order_of(d, budget));
      if (d.n == 4) return DepthResult::exact(2, Method::TableLookup, "A_4 > C_3 > 1");
      if (is_depth3(d).verdict == Verdict::True) return DepthResult::exact(3, Method::Formula, "depth-3 classification");
      return DepthResult::interval(4, 23, Method::Bound, "depth-3 classification with the Goldbach chain bound");
    }
    case FamilyKind::Linear:
      if (d.n == 2 && d.epsilon == 1 && d.is_simple()) {
        DepthResult r = depth_l2_pk(d.p, d.k, budget);
        if (r.is_exact()) return r;
        return lie_interval(d, budget);
      }
      if (!d.is_simple()) throw DomainError(d.display_name() + " is not simple");
      return lie_interval(d, budget);
    case FamilyKind::Suzuki:
      return depth_suzuki(d.k, budget);
    default:
      if (!d.is_simple()) throw DomainError(d.display_name() + " is not simple");
      return lie_interval(d, budget);
  }
}

double f1(double k) {
  if (!(k >= 1)) throw DomainError("f1 needs k >= 1");
  return 3 * std::log2(k) + 2 * k / std::log2(2 * k) + 35;
}

double h(double l) {
  if (!(l >= 36)) throw DomainError("h is defined for l >= 36");
  const double a = std::log2(l - 2) + (l - 2) / std::log2(l - 2) + 1;
  const double b = 3 * std::log2((l - 4) / 3) + 2 * (l - 4) / (3 * std::log2(2 * (l - 4) / 3)) + 35;
  return std::max(a, b);
}

double f2(double l) { return l < 36 ? l : std::min(l, h(l)); }

BoundReport bound_thm14(const FamilyDescriptor& d, const FactorBudget& budget) {
  if (!d.is_lie_type()) throw DomainError(d.display_name() + " is not of Lie type");
  if (!d.is_simple()) throw DomainError(d.display_name() + " is not simple");
  BoundReport rep;
  rep.family = d;
  rep.f1_value = f1(d.k);
  const unsigned ok = omega_small(d.k);

  const bool case_i = (d.kind == FamilyKind::Linear && d.n == 2 && d.epsilon == 1 && d.p == 2) ||
                      d.kind == FamilyKind::Suzuki;
  const bool case_ii = d.kind == FamilyKind::Linear && d.epsilon == -1 && d.n % 2 == 1 && d.p == 2 && d.k % 2 == 0;

  if (case_i) {
    rep.applicable_case = BoundCase::CaseI;
    std::vector<std::pair<OmegaBound, long>> cands;
    for (auto r : prime_divisors(d.k)) {
      if (exponent_too_large(r)) {
        rep.note = "2^" + std::to_string(r) + "-1 too large to factor";
        return rep;
      }
      cands.push_back({omega_bound(two_pow(r) - 1, "2^" + std::to_string(r) + "-1", budget), 0});
    }
    const auto m = certified_min(cands);
    if (!m.value) {
      rep.note = "incomplete factorization of " + m.pending;
      return rep;
    }
    rep.bound_value = ok + 1 + static_cast<unsigned>(*m.value);
  } else if (case_ii) {
    rep.applicable_case = BoundCase::CaseII;
    const unsigned a = static_cast<unsigned>(std::countr_zero(d.k));
    const unsigned long e = 1ul << a;
    const std::string what = "2^" + std::to_string(e) + "+1";
    if (exponent_too_large(e)) {
      rep.note = what + " too large to factor";
      return rep;
    }
    const OmegaBound ob = omega_bound(two_pow(e) + 1, what, budget);
    if (!ob.exact) {
      rep.note = "incomplete factorization of " + what;
      return rep;
    }
    rep.bound_value = 3 * ok + 2 * static_cast<unsigned>(ob.lo) + 35;
  } else {
    rep.applicable_case = BoundCase::Generic;
    rep.bound_value = 3 * ok + 36;
  }
  return rep;
}

Thm38Report bound_thm38(unsigned r, unsigned u, std::uint64_t l) {
  if (u == 0) throw DomainError("u must be positive");
  if (l < 2ull * r + u) throw DomainError("l must be at least 2r + u");
  Thm38Report rep;
  rep.r = r;
  rep.u = u;
  rep.l = l;
  rep.argument = static_cast<double>(l - 2ull * r) / u;
  rep.f1_value = f1(rep.argument);
  rep.k_ceiling = (l - 2ull * r) / u;
  return rep;
}

Thm38Report bound_thm38(const FamilyDescriptor& d, std::uint64_t l) {
  const auto r = d.lie_rank();
  const auto u = d.sylow_exponent();
  if (!r || !u) throw DomainError(d.display_name() + " has no Lie rank data");
  return bound_thm38(*r, *u, l);
}

std::string to_string(Method m) {
  switch (m) {
    case Method::Formula: return "formula";
    case Method::TableLookup: return "table";
    case Method::Bound: return "bound";
    case Method::BruteForce: return "brute-force";
  }
  return {};
}

std::string to_string(DepthStatus s) {
  switch (s) {
    case DepthStatus::Exact: return "exact";
    case DepthStatus::Interval: return "interval";
    case DepthStatus::Unknown: return "unknown";
  }
  return {};
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::True: return "true";
    case Verdict::False: return "false";
    case Verdict::Unknown: return "unknown";
  }
  return {};
}

std::string to_string(BoundCase c) {
  switch (c) {
    case BoundCase::Generic: return "generic";
    case BoundCase::CaseI: return "case_i";
    case BoundCase::CaseII: return "case_ii";
  }
  return {};
}

}  // namespace chaindepth
