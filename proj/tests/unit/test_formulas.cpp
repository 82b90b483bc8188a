#include <doctest.h>

#include <cmath>

#include "chaindepth/error.hpp"
#include "chaindepth/families.hpp"
#include "chaindepth/formulas.hpp"
#include "chaindepth/lattice.hpp"
#include "oracles.hpp"

using namespace chaindepth;

namespace {

unsigned l2_prime_oracle(std::uint64_t p) {
  if (p == 3) return 2;
  const std::uint64_t r = p % 40;
  if (oracle::is_prime((p - 1) / 2) || oracle::is_prime((p + 1) / 2) || r == 3 || r == 13 || r == 27 || r == 37)
    return 3;
  return 4;
}

std::uint64_t pow2(unsigned e) { return std::uint64_t{1} << e; }

// Prime-power formula for p = 2 evaluated with trial division.
unsigned l2_two_oracle(unsigned k) {
  const unsigned ok = oracle::omega(k);
  if (k % 2) {
    unsigned best = ~0u;
    for (auto r : oracle::factor(k)) best = std::min({best, oracle::omega(pow2(r) - 1), oracle::omega(pow2(r) + 1)});
    return ok + 1 + best;
  }
  int best = 1 << 20;
  for (unsigned c = 1; k % pow2(c) == 0; ++c) {
    const std::uint64_t e = pow2(c);
    const int m = static_cast<int>(std::min(oracle::omega(pow2(static_cast<unsigned>(e)) - 1),
                                            oracle::omega(pow2(static_cast<unsigned>(e)) + 1)));
    best = std::min(best, m - static_cast<int>(c));
  }
  return static_cast<unsigned>(static_cast<int>(ok) + 2 + best);
}

unsigned suzuki_oracle(unsigned k) {
  unsigned best = ~0u;
  for (auto r : oracle::factor(k)) {
    const std::uint64_t q = pow2(static_cast<unsigned>(r)), s = pow2(static_cast<unsigned>((r + 1) / 2));
    best = std::min({best, oracle::omega(q - 1), oracle::omega(q + s + 1) + 1, oracle::omega(q - s + 1) + 1});
  }
  return oracle::omega(k) + 1 + best;
}

}  // namespace

TEST_CASE("depth of L2(p)") {
  CHECK(depth_l2_prime(3).value() == 2);
  CHECK(depth_l2_prime(7).value() == 3);
  CHECK(depth_l2_prime(31).value() == 4);
  CHECK(depth_l2_prime(43).value() == 3);
  for (std::uint64_t p = 3; p < 5000; p += 2)
    if (oracle::is_prime(p)) CHECK(depth_l2_prime(p).value() == l2_prime_oracle(p));
  CHECK_THROWS_AS(depth_l2_prime(9), DomainError);
  CHECK_THROWS_AS(depth_l2_prime(2), DomainError);
}

TEST_CASE("depth of L2(p^k)") {
  CHECK(depth_l2_pk(3, 3).value() == 3);
  CHECK(depth_l2_pk(2, 4).value() == 3);
  CHECK(depth_l2_pk(2, 6).value() == 4);
  CHECK(depth_l2_pk(2, 2).value() == 3);
  CHECK(depth_l2_pk(5, 3).value() == 4);
  CHECK(depth_l2_pk(3, 9).value() == 4);
  CHECK(depth_l2_pk(3, 2).status == DepthStatus::Unknown);
  CHECK_THROWS_AS(depth_l2_pk(2, 1), DomainError);
  CHECK_THROWS_AS(depth_l2_pk(4, 3), DomainError);
  for (unsigned k = 2; k <= 31; ++k) {
    CAPTURE(k);
    CHECK(depth_l2_pk(2, k).value() == l2_two_oracle(k));
  }
}

TEST_CASE("depth of Suzuki groups") {
  CHECK(depth_suzuki(3).value() == 3);
  CHECK(depth_suzuki(5).value() == 3);
  CHECK(depth_suzuki(9).value() == 4);
  for (unsigned k = 3; k <= 31; k += 2) {
    CAPTURE(k);
    CHECK(depth_suzuki(k).value() == suzuki_oracle(k));
  }
  CHECK_THROWS_AS(depth_suzuki(4), DomainError);
  CHECK_THROWS_AS(depth_suzuki(1), DomainError);
}

TEST_CASE("sporadic depths") {
  CHECK(depth_sporadic("M23").value() == 3);
  CHECK(depth_sporadic("He").value() == 6);
  CHECK(depth_sporadic("B").value() == 3);
  CHECK(depth_sporadic("M").value() == 4);
  CHECK(depth_sporadic("O'N").value() == 5);
  CHECK(depth_sporadic("Fi24'").value() == 4);
  CHECK(depth_sporadic("M23").method == Method::TableLookup);
  CHECK_THROWS_AS(depth_sporadic("M13"), DomainError);
  const auto& table = sporadic_depth_table();
  CHECK(table.size() == 26);
  unsigned maximum = 0, at_max = 0;
  for (const auto& [name, d] : table) maximum = std::max(maximum, d);
  for (const auto& [name, d] : table) at_max += d == maximum;
  CHECK(maximum == 6);
  CHECK(at_max == 1);
  CHECK(table.at("He") == 6);
  for (const auto& name : sporadic_names()) CHECK(table.contains(name));
}

TEST_CASE("supersolvable depth") {
  CHECK(depth_supersolvable(factorize(12)).value() == 3);
  CHECK(depth_supersolvable(factorize(10)).value() == 2);
  CHECK(depth_supersolvable(factorize(101)).value() == 1);
  const auto partial = FactoredInt::from_partial({}, BigInt(15));
  CHECK_THROWS_AS(depth_supersolvable(partial), IncompleteFactorization);
}

TEST_CASE("depth_formula dispatch") {
  CHECK(depth_formula(FamilyDescriptor::parse("sporadic:He")).value() == 6);
  CHECK(depth_formula(FamilyDescriptor::parse("cyc:12")).value() == 3);
  CHECK(depth_formula(FamilyDescriptor::parse("dih:10")).value() == 2);
  CHECK(depth_formula(FamilyDescriptor::parse("alt:5")).value() == 3);
  CHECK(depth_formula(FamilyDescriptor::parse("psl2:64")).value() == 4);
  CHECK(depth_formula(FamilyDescriptor::parse("suzuki:8")).value() == 3);
  const DepthResult a6 = depth_formula(FamilyDescriptor::parse("alt:6"));
  CHECK(a6.status == DepthStatus::Interval);
  CHECK(a6.lo <= 4);
  CHECK(a6.hi >= 4);
  const DepthResult a100 = depth_formula(FamilyDescriptor::parse("alt:100"));
  CHECK(a100.hi == 23);
  const DepthResult e8 = depth_formula(FamilyDescriptor::parse("e8:2"));
  CHECK(e8.status == DepthStatus::Interval);
  CHECK(e8.hi == 36);
  CHECK(depth_formula(FamilyDescriptor::parse("e8:4")).hi == 39);
}

TEST_CASE("depth-3 predicate") {
  CHECK(is_depth3(FamilyDescriptor::alternating(7)).verdict == Verdict::False);
  CHECK(is_depth3(FamilyDescriptor::alternating(5)).verdict == Verdict::True);
  CHECK(is_depth3(FamilyDescriptor::alternating(13)).verdict == Verdict::False);
  CHECK(is_depth3(FamilyDescriptor::alternating(23)).verdict == Verdict::False);
  CHECK(is_depth3(FamilyDescriptor::alternating(47)).verdict == Verdict::True);
  CHECK(is_depth3(FamilyDescriptor::sporadic("M23")).verdict == Verdict::True);
  CHECK(is_depth3(FamilyDescriptor::sporadic("B")).verdict == Verdict::True);
  CHECK(is_depth3(FamilyDescriptor::sporadic("He")).verdict == Verdict::False);
  CHECK(is_depth3(FamilyDescriptor::linear(3, 3)).verdict == Verdict::True);
  CHECK(is_depth3(FamilyDescriptor::linear(3, 4)).verdict == Verdict::False);
  CHECK(is_depth3(FamilyDescriptor::linear(3, 3, -1)).verdict == Verdict::False);
  CHECK(is_depth3(FamilyDescriptor::linear(3, 5, -1)).verdict == Verdict::False);
  CHECK(is_depth3(FamilyDescriptor::linear(5, 2, -1)).verdict == Verdict::False);
  CHECK(is_depth3(FamilyDescriptor::linear(2, 9)).verdict == Verdict::False);
  CHECK(is_depth3(FamilyDescriptor::linear(2, 4)).verdict == Verdict::True);
  CHECK(is_depth3(FamilyDescriptor::linear(3, 2)).verdict == Verdict::True);
  CHECK(is_depth3(FamilyDescriptor::linear(2, 27)).verdict == Verdict::True);
  CHECK(is_depth3(FamilyDescriptor::linear(2, 16)).verdict == Verdict::True);
  CHECK(is_depth3(FamilyDescriptor::linear(2, 31)).verdict == Verdict::False);
  CHECK(is_depth3(FamilyDescriptor::suzuki(8)).verdict == Verdict::True);
  CHECK(is_depth3(FamilyDescriptor::suzuki(128)).verdict == Verdict::True);
  CHECK(is_depth3(FamilyDescriptor::suzuki(512)).verdict == Verdict::False);
  CHECK_THROWS_AS(is_depth3(FamilyDescriptor::alternating(4)), DomainError);
  CHECK_THROWS_AS(is_depth3(FamilyDescriptor::cyclic(7)), DomainError);
}

TEST_CASE("L2(p) and L2(2^k) predicate agrees with the depth formulas") {
  for (std::uint64_t p = 5; p < 3000; p += 2) {
    if (!oracle::is_prime(p)) continue;
    CAPTURE(p);
    const bool three = depth_l2_prime(p).value() == 3;
    CHECK((is_depth3(FamilyDescriptor::linear(2, p)).verdict == Verdict::True) == three);
  }
  for (unsigned k = 3; k <= 20; ++k) {
    CAPTURE(k);
    const bool three = depth_l2_pk(2, k).value() == 3;
    CHECK((is_depth3(FamilyDescriptor::linear(2, pow2(k))).verdict == Verdict::True) == three);
  }
}

TEST_CASE("formulas and predicate agree with the lattice oracle") {
  for (std::uint32_t q : {4u, 5u, 7u, 8u, 9u, 11u, 13u}) {
    CAPTURE(q);
    const unsigned d = depth(enumerate_subgroups(psl2(q))).value;
    const auto [p, k] = *as_prime_power(q);
    const DepthResult f = depth_l2_pk(p, k);
    if (f.is_exact()) CHECK(f.value() == d);
    if (k == 1) CHECK(depth_l2_prime(q).value() == d);
    CHECK((is_depth3(FamilyDescriptor::linear(2, q)).verdict == Verdict::True) == (d == 3));
  }
  for (unsigned n : {5u, 6u}) {
    const unsigned d = depth(enumerate_subgroups(alternating(n))).value;
    CHECK((is_depth3(FamilyDescriptor::alternating(n)).verdict == Verdict::True) == (d == 3));
  }
}

TEST_CASE("bounds for groups of Lie type") {
  const BoundReport l264 = bound_thm14(FamilyDescriptor::linear(2, 64));
  CHECK(l264.applicable_case == BoundCase::CaseI);
  CHECK(l264.bound_value == 4u);
  const BoundReport e8 = bound_thm14(FamilyDescriptor::parse("e8:5"));
  CHECK(e8.applicable_case == BoundCase::Generic);
  CHECK(e8.bound_value == 36u);
  const BoundReport u54 = bound_thm14(FamilyDescriptor::linear(5, 4, -1));
  CHECK(u54.applicable_case == BoundCase::CaseII);
  CHECK(u54.bound_value == 40u);
  CHECK_THROWS_AS(bound_thm14(FamilyDescriptor::alternating(7)), DomainError);
  for (unsigned k = 2; k <= 30; ++k) {
    const DepthResult d = depth_l2_pk(2, k);
    const BoundReport b = bound_thm14(FamilyDescriptor::linear(2, pow2(k)));
    if (d.is_exact() && b.bound_value) CHECK(d.value() <= *b.bound_value);
  }
}

TEST_CASE("f1, h and f2") {
  CHECK(f1(1) == doctest::Approx(37));
  CHECK(f1(36) == doctest::Approx(3 * std::log2(36.0) + 72 / std::log2(72.0) + 35));
  CHECK(f2(20) == 20);
  CHECK(h(36) == doctest::Approx(50.07708353699938).epsilon(1e-12));
  CHECK_THROWS_AS(h(35), DomainError);
  for (unsigned l = 1; l <= 400; ++l) CHECK(f2(l) <= l);
  CHECK(f2(36) == 36);
}

TEST_CASE("refined bound") {
  const Thm38Report a1 = bound_thm38(1, 1, 38);
  CHECK(a1.f1_value == doctest::Approx(f1(36)));
  CHECK(a1.k_ceiling == 36);
  const Thm38Report u3 = bound_thm38(1, 3, 10);
  CHECK(u3.k_ceiling == 2);
  const Thm38Report degenerate = bound_thm38(2, 3, 7);
  CHECK(degenerate.argument == 1);
  CHECK(degenerate.f1_value == doctest::Approx(37));
  CHECK_THROWS_AS(bound_thm38(2, 3, 6), DomainError);
  const Thm38Report via = bound_thm38(FamilyDescriptor::linear(3, 4, -1), 10);
  CHECK(via.r == 1);
  CHECK(via.u == 3);
  CHECK(via.k_ceiling == 2);
}

TEST_CASE("DepthResult accessors") {
  CHECK_THROWS_AS(DepthResult::interval(4, 23, Method::Bound, "x").value(), Error);
  CHECK(DepthResult::interval(4, 23, Method::Bound, "x").to_string() == "[4, 23]");
  CHECK(DepthResult::exact(3, Method::Formula, "x").to_string() == "3");
}
