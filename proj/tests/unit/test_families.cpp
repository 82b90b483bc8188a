#include <doctest.h>

#include "chaindepth/error.hpp"
#include "chaindepth/families.hpp"
#include "oracles.hpp"

using namespace chaindepth;

namespace {

// Polynomial product of two encoded elements reduced modulo the field's
// modulus, computed from scratch.
std::uint32_t poly_mul(const SmallField& f, std::uint32_t a, std::uint32_t b) {
  const std::uint32_t p = f.characteristic();
  const unsigned k = f.degree();
  std::vector<std::uint32_t> x(k), y(k), z(2 * k, 0);
  for (unsigned i = 0; i < k; ++i) x[i] = a % p, a /= p, y[i] = b % p, b /= p;
  for (unsigned i = 0; i < k; ++i)
    for (unsigned j = 0; j < k; ++j) z[i + j] = (z[i + j] + x[i] * y[j]) % p;
  const auto& m = f.modulus();
  for (unsigned d = 2 * k - 1; d >= k; --d) {
    const std::uint32_t c = z[d];
    if (!c) continue;
    for (unsigned i = 0; i <= k; ++i) z[d - k + i] = (z[d - k + i] + (p - c) * m[i] % p) % p;
  }
  std::uint32_t out = 0;
  for (unsigned i = k; i-- > 0;) out = out * p + z[i];
  return out;
}

}  // namespace

TEST_CASE("small field examples") {
  const SmallField f9 = gf(9);
  CHECK(f9.order() == 9);
  CHECK(f9.modulus() == std::vector<std::uint32_t>{1, 0, 1});
  for (std::uint32_t r = 0; r < 3; ++r) CHECK((r * r + 1) % 3 != 0);
  const SmallField f4 = gf(4);
  // x + 1 is encoded as 3 and x as 2.
  CHECK(f4.mul(3, 3) == 2);
  const SmallField f5 = gf(5);
  CHECK(f5.mul(2, 3) == 1);
  CHECK(f5.inv(2) == 3);
  CHECK_THROWS_AS(gf(6), DomainError);
  CHECK_THROWS_AS(gf(64), DomainError);
  CHECK_THROWS_AS(f5.inv(0), DomainError);
}

TEST_CASE("field axioms hold exhaustively") {
  for (auto q : supported_field_orders()) {
    CAPTURE(q);
    const SmallField f = gf(q);
    bool ok = true;
    for (std::uint32_t a = 0; a < q; ++a) {
      const auto ea = static_cast<SmallField::Elem>(a);
      ok = ok && f.add(ea, f.neg(ea)) == 0 && f.mul(ea, 1) == ea;
      if (a) ok = ok && f.mul(ea, f.inv(ea)) == 1;
      for (std::uint32_t b = 0; b < q; ++b) {
        const auto eb = static_cast<SmallField::Elem>(b);
        ok = ok && f.mul(ea, eb) == poly_mul(f, a, b) && f.add(ea, eb) == f.add(eb, ea) &&
             f.mul(ea, eb) == f.mul(eb, ea);
        for (std::uint32_t c = 0; c < q; ++c) {
          const auto ec = static_cast<SmallField::Elem>(c);
          ok = ok && f.mul(f.mul(ea, eb), ec) == f.mul(ea, f.mul(eb, ec)) &&
               f.add(f.add(ea, eb), ec) == f.add(ea, f.add(eb, ec)) &&
               f.mul(ea, f.add(eb, ec)) == f.add(f.mul(ea, eb), f.mul(ea, ec));
        }
      }
    }
    CHECK(ok);
    // The primitive element has multiplicative order q - 1.
    SmallField::Elem x = 1;
    unsigned order = 0;
    do {
      x = f.mul(x, f.primitive());
      ++order;
    } while (x != 1);
    CHECK(order == q - 1);
  }
}

TEST_CASE("psl2 orders and degrees") {
  CHECK(psl2(7).order() == 168);
  CHECK(psl2(7).degree() == 8);
  CHECK(psl2(4).order() == 60);
  CHECK(psl2(9).order() == 360);
  for (auto q : supported_field_orders()) {
    if (q < 4) continue;
    CAPTURE(q);
    const FiniteGroup g = psl2(q);
    const std::uint64_t want = std::uint64_t{q} * (std::uint64_t{q} * q - 1) / (q % 2 ? 2 : 1);
    CHECK(g.order() == want);
    CHECK(g.degree() == q + 1);
  }
  CHECK_THROWS_AS(psl2(27, GroupLimits{1000}), OrderCapExceeded);
}

TEST_CASE("standard permutation families") {
  CHECK(alternating(5).order() == 60);
  CHECK(dihedral(10).order() == 10);
  CHECK(dihedral(10).degree() == 5);
  CHECK(cyclic(12).order() == 12);
  CHECK(dihedral(4).order() == 4);
  CHECK(dihedral(2).order() == 2);
  for (unsigned n = 3; n <= 6; ++n) {
    const FiniteGroup a = alternating(n), s = symmetric(n);
    CHECK(s.order() == 2 * a.order());
    for (const auto& p : a.elements()) CHECK(p.is_even());
    for (const auto& p : a.elements()) CHECK(s.contains(p));
  }
}

TEST_CASE("order_of") {
  const FactoredInt l227 = order_of(FamilyDescriptor::linear(2, 27));
  CHECK(l227.value() == 9828);
  CHECK(l227.factors() == FactoredInt::FactorMap{{2, 2}, {3, 3}, {7, 1}, {13, 1}});
  CHECK(order_of(FamilyDescriptor::suzuki(8)).value() == 29120);
  CHECK(order_of(FamilyDescriptor::alternating(6)).value() == 360);
  CHECK(order_of(FamilyDescriptor::sporadic("M11")).value() == 7920);
  CHECK(order_of(FamilyDescriptor::sporadic("J1")).value() == 175560);
  CHECK(order_of(FamilyDescriptor::linear(3, 4)).value() == 20160);
  CHECK(order_of(FamilyDescriptor::linear(3, 3, -1)).value() == 6048);
  CHECK(order_of(FamilyDescriptor::lie(FamilyKind::G2, 7, 3)).value() == 4245696);
  CHECK(order_of(FamilyDescriptor::lie(FamilyKind::Symplectic, 4, 3)).value() == 25920);
  // Realized groups agree with the formulas.
  for (std::uint64_t q : {5, 7, 8, 11, 13, 16}) CHECK(order_of(FamilyDescriptor::linear(2, q)).value() == psl2(q).order());
}

TEST_CASE("descriptor grammar round-trips") {
  for (const char* s : {"alt:7", "sym:4", "cyc:12", "dih:10", "psl2:8", "psl:3,4,+", "psl:5,4,-", "suzuki:32",
                        "ree:27", "sporadic:M23", "psp:4,3", "omega:7,3", "omegap:8,2", "omegam:8,2", "g2:3", "f4:2",
                        "e6:2", "2e6:2", "e7:2", "e8:2", "3d4:2", "2f4:8"}) {
    CAPTURE(s);
    const FamilyDescriptor d = FamilyDescriptor::parse(s);
    CHECK(FamilyDescriptor::parse(d.spec()) == d);
  }
  CHECK(FamilyDescriptor::parse("psl2:7").display_name() == "L_2(7)");
  CHECK(FamilyDescriptor::parse("psl:5,4,-").display_name() == "U_5(4)");
  CHECK(FamilyDescriptor::parse("suzuki:8").display_name() == "2B2(8)");
  CHECK(FamilyDescriptor::parse("alt:7").display_name() == "A_7");
  CHECK_THROWS_AS(FamilyDescriptor::parse("psl2:6"), DomainError);
  CHECK_THROWS_AS(FamilyDescriptor::parse("nonsense"), DomainError);
  CHECK_THROWS_AS(FamilyDescriptor::parse("sporadic:M13"), DomainError);
  CHECK_THROWS_AS(FamilyDescriptor::parse("suzuki:16"), DomainError);
}

TEST_CASE("aliases and simplicity conventions") {
  CHECK(resolve_alias(FamilyDescriptor::linear(2, 4)) == FamilyDescriptor::alternating(5));
  CHECK(resolve_alias(FamilyDescriptor::linear(2, 5)) == FamilyDescriptor::alternating(5));
  CHECK(resolve_alias(FamilyDescriptor::linear(2, 9)) == FamilyDescriptor::alternating(6));
  CHECK(resolve_alias(FamilyDescriptor::linear(3, 2)) == FamilyDescriptor::linear(2, 7));
  CHECK(resolve_alias(FamilyDescriptor::linear(2, 11)) == FamilyDescriptor::linear(2, 11));
  CHECK_FALSE(FamilyDescriptor::alternating(4).is_simple());
  CHECK(FamilyDescriptor::alternating(5).is_simple());
  CHECK_FALSE(FamilyDescriptor::linear(2, 3).is_simple());
  CHECK(FamilyDescriptor::linear(2, 4).is_simple());
  CHECK_FALSE(FamilyDescriptor::linear(3, 2, -1).is_simple());
  CHECK_FALSE(FamilyDescriptor::lie(FamilyKind::Symplectic, 4, 2).is_simple());
  CHECK_FALSE(FamilyDescriptor::lie(FamilyKind::G2, 7, 2).is_simple());
  CHECK_FALSE(FamilyDescriptor::cyclic(7).is_simple());
  CHECK(FamilyDescriptor::sporadic("M").is_simple());
}

TEST_CASE("rank and Sylow exponent") {
  const auto u3 = FamilyDescriptor::linear(3, 4, -1);
  CHECK(u3.lie_rank() == 1u);
  CHECK(u3.sylow_exponent() == 3u);
  const auto a1 = FamilyDescriptor::linear(2, 8);
  CHECK(a1.lie_rank() == 1u);
  CHECK(a1.sylow_exponent() == 1u);
  const auto e8 = FamilyDescriptor::lie(FamilyKind::E8, 0, 2);
  CHECK(e8.lie_rank() == 8u);
  CHECK(e8.sylow_exponent() == 120u);
  CHECK_FALSE(FamilyDescriptor::alternating(7).lie_rank().has_value());
  // |Sylow_p| = q^u against the order formula.
  for (const char* s : {"psl:4,3,+", "psl:4,3,-", "psp:6,2", "omega:7,3", "omegap:8,2", "omegam:8,3", "g2:3", "3d4:2",
                        "suzuki:8", "ree:27", "f4:2", "2f4:8"}) {
    CAPTURE(s);
    const auto d = FamilyDescriptor::parse(s);
    const FactoredInt o = order_of(d);
    const auto it = o.factors().find(BigInt(static_cast<unsigned long>(d.p)));
    REQUIRE(it != o.factors().end());
    CHECK(it->second == *d.sylow_exponent() * d.k);
  }
}

TEST_CASE("sporadic names") {
  CHECK(sporadic_names().size() == 26);
  CHECK(canonical_sporadic_name("baby") == "B");
  CHECK(canonical_sporadic_name("monster") == "M");
  CHECK(canonical_sporadic_name("ON") == "O'N");
  CHECK(canonical_sporadic_name("fi24") == "Fi24'");
  CHECK(canonical_sporadic_name("m23") == "M23");
  CHECK_FALSE(canonical_sporadic_name("M13").has_value());
}

TEST_CASE("realize") {
  CHECK(realize(FamilyDescriptor::parse("psl2:8")).order() == 504);
  CHECK(realize(FamilyDescriptor::parse("psl:3,2,+")).order() == 168);
  CHECK(realize(FamilyDescriptor::parse("dih:12")).order() == 12);
  CHECK_THROWS_AS(realize(FamilyDescriptor::parse("sporadic:M11")), DomainError);
}
