#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "chaindepth/families.hpp"
#include "chaindepth/numtheory.hpp"

namespace chaindepth {

enum class Method { Formula, TableLookup, Bound, BruteForce };
enum class DepthStatus { Exact, Interval, Unknown };

struct DepthResult {
  DepthStatus status = DepthStatus::Unknown;
  unsigned lo = 0, hi = 0;
  Method method = Method::Formula;
  std::string citation;
  /// Why the value is not exact, e.g. the integer whose factorization failed.
  std::string note;

  static DepthResult exact(unsigned v, Method m, std::string citation);
  static DepthResult interval(unsigned lo, unsigned hi, Method m, std::string citation);
  static DepthResult unknown(std::string note, Method m, std::string citation);

  bool is_exact() const { return status == DepthStatus::Exact; }
  /// Throws Error unless exact.
  unsigned value() const;
  std::string to_string() const;
  friend bool operator==(const DepthResult&, const DepthResult&) = default;
};

/// Depth of L2(p), p an odd prime. Throws DomainError otherwise.
DepthResult depth_l2_prime(std::uint64_t p);
/// Depth of L2(p^k). Unknown for odd p with even k, or when a needed Omega
/// cannot be completed within the budget.
DepthResult depth_l2_pk(std::uint64_t p, unsigned k, const FactorBudget& budget = {});
/// Depth of 2B2(2^k), k >= 3 odd.
DepthResult depth_suzuki(unsigned k, const FactorBudget& budget = {});
DepthResult depth_sporadic(std::string_view name);
/// Omega(|G|) for a supersolvable G. Throws IncompleteFactorization.
DepthResult depth_supersolvable(const FactoredInt& order);
/// Best available statement for a descriptor: exact where a formula or table
/// applies, otherwise an interval from the bounds.
DepthResult depth_formula(const FamilyDescriptor& d, const FactorBudget& budget = {});

/// Sporadic name to depth, in the canonical order of sporadic_names().
const std::map<std::string, unsigned>& sporadic_depth_table();

enum class Verdict { False, True, Unknown };

struct Depth3Verdict {
  Verdict verdict = Verdict::Unknown;
  std::string reason;
  /// Set when a primality decision above 2^64 was probabilistic.
  bool probabilistic = false;
  friend bool operator==(const Depth3Verdict&, const Depth3Verdict&) = default;
};

/// Membership in the classification of simple groups of depth 3, after
/// resolving the small isomorphisms. Throws DomainError for non-simple
/// descriptors.
Depth3Verdict is_depth3(const FamilyDescriptor& d);

enum class BoundCase { Generic, CaseI, CaseII };

struct BoundReport {
  FamilyDescriptor family;
  BoundCase applicable_case = BoundCase::Generic;
  std::optional<unsigned> bound_value;
  double f1_value = 0;
  std::string note;
  friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

/// Upper bound on the depth of a simple group of Lie type over GF(p^k).
BoundReport bound_thm14(const FamilyDescriptor& d, const FactorBudget& budget = {});

double f1(double k);
/// Defined for l >= 36; throws DomainError below.
double h(double l);
double f2(double l);

struct Thm38Report {
  unsigned r = 0, u = 0;
  std::uint64_t l = 0;
  double argument = 0;  // (l - 2r) / u
  double f1_value = 0;
  std::uint64_t k_ceiling = 0;
  friend bool operator==(const Thm38Report&, const Thm38Report&) = default;
};

/// f1((l - 2r)/u) and the ceiling k <= (l - 2r)/u. Requires l >= 2r + u.
Thm38Report bound_thm38(unsigned r, unsigned u, std::uint64_t l);
Thm38Report bound_thm38(const FamilyDescriptor& d, std::uint64_t l);

std::string to_string(Method m);
std::string to_string(DepthStatus s);
std::string to_string(Verdict v);
std::string to_string(BoundCase c);

}  // namespace chaindepth
