#include <doctest.h>

#include <numeric>

#include "chaindepth/error.hpp"
#include "chaindepth/families.hpp"
#include "chaindepth/lattice.hpp"
#include "oracles.hpp"

using namespace chaindepth;

namespace {

FiniteGroup group(const char* spec) { return realize(FamilyDescriptor::parse(spec)); }

FiniteGroup q8() {
  return FiniteGroup::close({Permutation::from_cycles(8, {{0, 1, 2, 3}, {4, 5, 6, 7}}),
                             Permutation::from_cycles(8, {{0, 4, 2, 6}, {1, 7, 3, 5}})});
}

FiniteGroup d8xc2() {
  return FiniteGroup::close({Permutation::from_cycles(6, {{0, 1}}), Permutation::from_cycles(6, {{0, 2}, {1, 3}}),
                             Permutation::from_cycles(6, {{4, 5}})});
}

void check_against_oracle(const FiniteGroup& g, unsigned rank) {
  const auto subs = oracle::subgroups(g, rank);
  const auto want = oracle::depth_length(subs);
  const auto lat = enumerate_subgroups(g);
  CHECK(lat.size() == want.count);
  CHECK(depth(lat).value == want.depth);
  CHECK(length(lat).value == want.length);
  std::set<oracle::Subgroup> got;
  for (const auto& n : lat.nodes()) got.insert(oracle::Subgroup(n.elements.begin(), n.elements.end()));
  CHECK(got == subs);
}

// Lemma: depth at a node is one more than the least depth of its maximal subgroups.
void check_recursion(const SubgroupLattice& lat) {
  CHECK(lat.depth_below()[lat.bottom()] == 0);
  for (std::size_t i = 1; i < lat.size(); ++i) {
    unsigned best = ~0u;
    for (auto c : lat.children(i)) best = std::min(best, lat.depth_below()[c]);
    CHECK(lat.depth_below()[i] == best + 1);
  }
}

void check_chain(const SubgroupLattice& lat, const Chain& c, bool unrefinable) {
  REQUIRE(!c.nodes.empty());
  CHECK(c.nodes.front() == lat.top());
  CHECK(c.nodes.back() == lat.bottom());
  std::size_t product = 1;
  for (std::size_t i = 0; i + 1 < c.nodes.size(); ++i) {
    const auto a = c.nodes[i], b = c.nodes[i + 1];
    CHECK(lat.is_subgroup_of(b, a));
    CHECK(lat.node(a).order % lat.node(b).order == 0);
    product *= lat.node(a).order / lat.node(b).order;
    if (unrefinable) {
      const auto& kids = lat.children(a);
      CHECK(std::find(kids.begin(), kids.end(), b) != kids.end());
    }
  }
  CHECK(product == lat.node(lat.top()).order);
}

}  // namespace

TEST_CASE("subgroup counts") {
  CHECK(enumerate_subgroups(symmetric(3)).size() == 6);
  CHECK(enumerate_subgroups(alternating(4)).size() == 10);
  CHECK(enumerate_subgroups(alternating(5)).size() == 59);
  CHECK(enumerate_subgroups(symmetric(4)).size() == 30);
  CHECK(enumerate_subgroups(psl2(7)).size() == 179);
  CHECK(enumerate_subgroups(alternating(6)).size() == 501);
}

TEST_CASE("lattice agrees with brute-force enumeration") {
  SUBCASE("S3") { check_against_oracle(symmetric(3), 2); }
  SUBCASE("A4") { check_against_oracle(alternating(4), 2); }
  SUBCASE("S4") { check_against_oracle(symmetric(4), 2); }
  SUBCASE("A5") { check_against_oracle(alternating(5), 2); }
  SUBCASE("C12") { check_against_oracle(cyclic(12), 1); }
  SUBCASE("D10") { check_against_oracle(dihedral(10), 2); }
  SUBCASE("D24") { check_against_oracle(dihedral(24), 2); }
  SUBCASE("Q8") { check_against_oracle(q8(), 2); }
  SUBCASE("D8 x C2") { check_against_oracle(d8xc2(), 3); }
  SUBCASE("L2(7)") { check_against_oracle(psl2(7), 2); }
}

TEST_CASE("depth and length examples") {
  const auto c12 = enumerate_subgroups(cyclic(12));
  CHECK(depth(c12).value == 3);
  CHECK(length(c12).value == 3);
  CHECK(chain_difference(c12) == 0);
  const auto a5 = enumerate_subgroups(alternating(5));
  CHECK(depth(a5).value == 3);
  CHECK(length(a5).value == 4);
  CHECK(chain_ratio(a5) == Rational{4, 3});
  CHECK(render_orders(a5, length(a5).witness) == "60 > 12 > 4 > 2 > 1");
  const auto a6 = enumerate_subgroups(alternating(6));
  CHECK(depth(a6).value == 4);
  CHECK(length(a6).value == 5);
  CHECK(chain_difference(a6) == 1);
  for (unsigned n : {2u, 3u, 5u, 7u, 11u}) {
    const auto c = enumerate_subgroups(cyclic(n));
    CHECK(depth(c).value == 1);
  }
}

TEST_CASE("chain length profiles") {
  const auto c12 = all_maximal_chain_lengths(enumerate_subgroups(cyclic(12)));
  CHECK(c12.all_equal());
  CHECK(c12.distinct() == std::vector<unsigned>{3});
  CHECK(c12.counts.at(3) == 3);
  const auto d10 = all_maximal_chain_lengths(enumerate_subgroups(dihedral(10)));
  CHECK(d10.distinct() == std::vector<unsigned>{2});
  // D10 > C5 > 1 and D10 > C2 > 1 for each of the five involutions.
  CHECK(d10.counts.at(2) == 6);
  const auto a5 = all_maximal_chain_lengths(enumerate_subgroups(alternating(5)));
  CHECK(a5.distinct() == std::vector<unsigned>{3, 4});
  CHECK_FALSE(a5.saturated);
}

TEST_CASE("structural invariants on a corpus") {
  for (const char* spec : {"alt:5", "sym:4", "psl2:7", "psl2:8", "dih:36", "cyc:60", "psl2:11"}) {
    CAPTURE(spec);
    const auto lat = enumerate_subgroups(group(spec));
    const std::size_t order = lat.node(lat.top()).order;
    CHECK(lat.node(lat.bottom()).order == 1);
    for (const auto& n : lat.nodes()) {
      CHECK(order % n.order == 0);
      CHECK(n.elements.size() == n.order);
    }
    check_recursion(lat);
    const auto d = depth(lat), l = length(lat);
    CHECK(d.value <= l.value);
    CHECK(d.witness.length() == d.value);
    CHECK(l.witness.length() == l.value);
    check_chain(lat, d.witness, true);
    check_chain(lat, l.witness, false);
    CHECK(l.value <= *factorize(static_cast<std::uint64_t>(order)).omega());
    for (const auto& [a, b] : lat.cover_edges()) {
      CHECK(lat.is_subgroup_of(b, a));
      CHECK(lat.node(a).order > lat.node(b).order);
    }
  }
}

TEST_CASE("node order is deterministic") {
  const auto a = enumerate_subgroups(psl2(8));
  const auto b = enumerate_subgroups(psl2(8));
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a.node(i).elements == b.node(i).elements);
  for (std::size_t i = 1; i < a.size(); ++i) CHECK(a.node(i - 1).order <= a.node(i).order);
  CHECK(depth(a).witness == depth(b).witness);
}

TEST_CASE("nilpotent maximal subgroups of simple groups are non-abelian Sylow 2-subgroups") {
  for (const char* spec : {"alt:5", "alt:6", "psl2:7", "psl2:8", "psl2:11", "psl2:13", "psl2:17"}) {
    CAPTURE(spec);
    const auto lat = enumerate_subgroups(group(spec));
    const std::size_t order = lat.node(lat.top()).order;
    std::size_t two_part = 1;
    while (order % (two_part * 2) == 0) two_part *= 2;
    unsigned nilpotent = 0;
    for (auto m : lat.children(lat.top())) {
      if (!lat.is_nilpotent(m)) continue;
      ++nilpotent;
      CHECK_FALSE(lat.is_abelian(m));
      CHECK(lat.node(m).order == two_part);
    }
    // L2(17) has D16 as a maximal Sylow 2-subgroup.
    if (std::string(spec) == "psl2:17") CHECK(nilpotent > 0);
  }
}

TEST_CASE("abelian and nilpotent flags") {
  const auto s4 = enumerate_subgroups(symmetric(4));
  CHECK_FALSE(s4.is_nilpotent(s4.top()));
  unsigned abelian4 = 0, d8 = 0;
  for (std::size_t i = 0; i < s4.size(); ++i) {
    if (s4.node(i).order == 4 && s4.is_abelian(i)) ++abelian4;
    if (s4.node(i).order == 8) {
      ++d8;
      CHECK(s4.is_nilpotent(i));
      CHECK_FALSE(s4.is_abelian(i));
    }
  }
  CHECK(abelian4 == 7);
  CHECK(d8 == 3);
}

TEST_CASE("caps and degenerate inputs") {
  CHECK_THROWS_AS(enumerate_subgroups(alternating(7)), LatticeCapExceeded);
  CHECK_THROWS_AS(enumerate_subgroups(alternating(6), LatticeLimits{2500, 100}), LatticeCapExceeded);
  const auto triv = enumerate_subgroups(cyclic(1));
  CHECK(triv.size() == 1);
  CHECK(depth(triv).value == 0);
  CHECK_THROWS_AS(chain_ratio(triv), DomainError);
  CHECK(Rational::make(6, 4) == Rational{3, 2});
  CHECK(Rational::make(6, 4).to_string() == "3/2");
}
