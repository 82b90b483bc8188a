#include <doctest.h>

#include <cmath>

#include "chaindepth/chains.hpp"
#include "chaindepth/error.hpp"
#include "chaindepth/families.hpp"
#include "chaindepth/lattice.hpp"
#include "oracles.hpp"

using namespace chaindepth;

namespace {

std::vector<std::string> labels(const ChainDescriptor& c) {
  std::vector<std::string> out{c.top_label};
  for (const auto& s : c.steps) out.push_back(s.label);
  return out;
}

}  // namespace

TEST_CASE("l2p_chain examples") {
  const auto c7 = l2p_chain(7);
  CHECK(labels(c7) == std::vector<std::string>{"L_2(7)", "7:3", "7", "1"});
  CHECK(c7.total_length == 3);
  CHECK(c7.render() == "L_2(7) > 7:3 > 7 > 1 (length 3)");
  const auto c31 = l2p_chain(31);
  CHECK(labels(c31) == std::vector<std::string>{"L_2(31)", "A_5", "D_10", "C_5", "1"});
  const auto c5 = l2p_chain(5);
  CHECK(labels(c5) == std::vector<std::string>{"L_2(5)", "D_10", "C_5", "1"});
  CHECK(labels(l2p_chain(17)) == std::vector<std::string>{"L_2(17)", "S_4", "S_3", "C_3", "1"});
  CHECK(labels(l2p_chain(13)) == std::vector<std::string>{"L_2(13)", "D_14", "C_7", "1"});
  CHECK_THROWS_AS(l2p_chain(9), DomainError);
  CHECK_THROWS_AS(l2p_chain(3), DomainError);
}

TEST_CASE("l2p_chain lengths track the depth formula") {
  for (std::uint64_t p = 5; p <= 10'000; p += 2) {
    if (!oracle::is_prime(p)) continue;
    CAPTURE(p);
    const auto c = l2p_chain(p);
    CHECK(c.is_valid());
    CHECK(c.total_length <= 4);
    const unsigned d = depth_l2_prime(p).value();
    CHECK(c.total_length >= d);
    CHECK((c.total_length == 3) == (d == 3));
    // The subgroup after L2(p) is one of the dihedral, Borel, A4, S4 or A5 routes.
    const std::string& first = c.steps.front().label;
    if (first == "S_4") CHECK((p % 8 == 1 || p % 8 == 7));
    if (first == "A_5") CHECK((p % 10 == 1 || p % 10 == 9));
  }
}

TEST_CASE("ap1_chain examples") {
  CHECK(labels(ap1_chain(23)) == std::vector<std::string>{"A_24", "M_24", "M_23", "23:11", "11", "1"});
  CHECK(labels(ap1_chain(5)) == std::vector<std::string>{"A_6", "L_2(5)", "D_10", "C_5", "1"});
  CHECK(labels(ap1_chain(3)) == std::vector<std::string>{"A_4", "C_3", "1"});
  CHECK(ap1_chain(2).total_length == 1);
  CHECK(ap1_chain(11).total_length == 5);
  CHECK(ap1_chain(7).total_length == 5);
  CHECK_THROWS_AS(ap1_chain(9), DomainError);
}

TEST_CASE("ap1_chain stays within length 5") {
  for (std::uint64_t p = 2; p <= 10'000; ++p) {
    if (!oracle::is_prime(p)) continue;
    CAPTURE(p);
    const auto c = ap1_chain(p);
    CHECK(c.is_valid());
    CHECK(c.total_length <= 5);
  }
}

TEST_CASE("an_chain examples") {
  CHECK(labels(an_chain(5)) == std::vector<std::string>{"A_5", "A_4", "C_3", "1"});
  const auto c11 = an_chain(11);
  CHECK(c11.steps.front().label == "A_10");
  CHECK(c11.steps.front().justification == Justification::PointStabilizer);
  CHECK(c11.total_length <= 23);
  CHECK_FALSE(c11.caveats.empty());
  const auto c20 = an_chain(20);
  CHECK(c20.steps[0].label == "(A_4 x A_16).2");
  CHECK(c20.steps[1].label == "A_4 x A_16");
  CHECK(c20.steps[2].label == "A_4 x (A_4 x A_12).2");
  CHECK(c20.steps[3].label == "A_4 x A_4 x A_12");
  const auto c24 = an_chain(24);
  CHECK(c24.total_length <= 23);
  CHECK(c24.is_valid());
  CHECK_THROWS_AS(an_chain(4), DomainError);
}

TEST_CASE("an_chain is valid and short for every degree up to 2000") {
  unsigned longest = 0;
  for (unsigned n = 5; n <= 2000; ++n) {
    const auto c = an_chain(n);
    if (!c.is_valid() || c.total_length > 23) {
      CAPTURE(n);
      CHECK(c.is_valid());
      CHECK(c.total_length <= 23);
    }
    CHECK(c.top_order == order_of(FamilyDescriptor::alternating(n)));
    longest = std::max(longest, c.total_length);
  }
  CHECK(longest <= 23);
}

TEST_CASE("constructed chains never beat the lattice depth") {
  for (unsigned n : {5u, 6u}) {
    const unsigned d = depth(enumerate_subgroups(alternating(n))).value;
    CHECK(an_chain(n).total_length >= d);
  }
  for (std::uint64_t p : {5, 7, 11, 13}) {
    const unsigned d = depth(enumerate_subgroups(psl2(static_cast<std::uint32_t>(p)))).value;
    CHECK(l2p_chain(p).total_length >= d);
  }
}

TEST_CASE("validate rejects malformed chains") {
  auto c = l2p_chain(7);
  REQUIRE(c.is_valid());
  auto wrong_length = c;
  wrong_length.total_length = 4;
  CHECK_FALSE(wrong_length.is_valid());
  auto not_dividing = c;
  not_dividing.steps[0].order = factorize(20);
  CHECK_FALSE(not_dividing.is_valid());
  auto not_trivial = c;
  not_trivial.steps.pop_back();
  not_trivial.total_length = 2;
  CHECK_FALSE(not_trivial.is_valid());
  CHECK_THROWS_AS(not_trivial.validate(), Error);
}

TEST_CASE("index of each step") {
  const auto c = l2p_chain(7);
  CHECK(c.index(0).value() == 8);
  CHECK(c.index(1).value() == 3);
  CHECK(c.index(2).value() == 7);
}

TEST_CASE("justification names round-trip") {
  for (auto j : {Justification::IntransitiveMax, Justification::ImprimitiveMax, Justification::PointStabilizer,
                 Justification::SubfieldMax, Justification::BorelMax, Justification::TableCited,
                 Justification::ProductDescent, Justification::SmallGroupTable})
    CHECK(justification_from_string(to_string(j)) == j);
  CHECK_FALSE(justification_from_string("Nope").has_value());
}

TEST_CASE("depth-3 witnesses of large length") {
  const auto w2 = thm16_witness(2);
  CHECK(w2.p == 43);
  CHECK(w2.p % 40 == 3);
  CHECK(w2.depth.value() == 3);
  CHECK(w2.omega_p_minus_1 == 3);
  CHECK(w2.length_exceeds_n);
  std::uint64_t prev = 0;
  for (unsigned n = 2; n <= 5; ++n) {
    const auto w = thm16_witness(n);
    CHECK(w.depth.value() == 3);
    CHECK(w.omega_p_minus_1 >= n);
    CHECK(w.omega_p_minus_1 == oracle::omega(w.p - 1));
    CHECK(w.p >= prev);
    prev = w.p;
  }
  CHECK_THROWS_AS(thm16_witness(6, 1000), NotFoundWithinLimit);
}

TEST_CASE("depth against log of length") {
  const auto w1 = prop18_witness(1);
  CHECK(w1.k == 3);
  CHECK(w1.depth == 3);
  CHECK(w1.order.value() == 9828);
  CHECK(w1.omega_order == 7);
  CHECK(w1.log_term == doctest::Approx(std::log(7.0) / std::log(3.0) + 1).epsilon(1e-12));
  CHECK(w1.inequality_holds);
  const auto w2 = prop18_witness(2);
  CHECK(w2.depth == 4);
  // 3^9 (3^18 - 1) / 2 with 3^18 - 1 = 2^3 * 7 * 13 * 19 * 37 * 757.
  CHECK(w2.omega_order == 9 + 3 - 1 + 5);
  CHECK(w2.inequality_holds);
  CHECK_THROWS_AS(prop18_witness(0), DomainError);
}
