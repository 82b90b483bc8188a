#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chaindepth/numtheory.hpp"
#include "chaindepth/permutation.hpp"

namespace chaindepth {

/// GF(q) for prime powers q <= 32. Elements are integers 0..q-1 encoding the
/// coefficient vector a0 + a1*p + a2*p^2 + ... of a polynomial in x modulo a
/// fixed irreducible polynomial.
class SmallField {
 public:
  using Elem = std::uint8_t;

  std::uint32_t order() const { return q_; }
  std::uint32_t characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  /// Monic modulus coefficients, constant term first (length degree+1).
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * q_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  /// Throws DomainError for zero.
  Elem inv(Elem a) const;
  /// A generator of the multiplicative group.
  Elem primitive() const { return primitive_; }
  std::vector<std::uint32_t> coefficients(Elem a) const;

  friend SmallField gf(std::uint32_t q);

 private:
  std::uint32_t q_ = 0, p_ = 0;
  unsigned k_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<Elem> add_, mul_, neg_, inv_;
  Elem primitive_ = 1;
};

/// Throws DomainError for unsupported q.
SmallField gf(std::uint32_t q);
const std::vector<std::uint32_t>& supported_field_orders();

/// PSL(2, q) acting on the q+1 points of the projective line; point q is
/// infinity.
FiniteGroup psl2(std::uint32_t q, const GroupLimits& limits = {});
FiniteGroup alternating(unsigned n, const GroupLimits& limits = {});
FiniteGroup symmetric(unsigned n, const GroupLimits& limits = {});
FiniteGroup cyclic(unsigned n, const GroupLimits& limits = {});
/// The dihedral group of the given ORDER (2m). D_{2m} acts on m points for
/// m >= 3; order 2 is C2 on two points and order 4 is the Klein four-group.
FiniteGroup dihedral(unsigned order, const GroupLimits& limits = {});

enum class FamilyKind {
  Alternating,
  Symmetric,
  Cyclic,
  Dihedral,
  Linear,  // L_n^eps(q): eps = +1 linear, eps = -1 unitary
  Suzuki,  // 2B2(q)
  Ree2G2,
  Sporadic,
  Symplectic,  // PSp_n(q), n even
  OmegaOdd,    // Omega_n(q), n odd
  OmegaPlus,   // POmega+_n(q), n even
  OmegaMinus,  // POmega-_n(q), n even
  G2,
  F4,
  E6,
  TwistedE6,
  E7,
  E8,
  Triality3D4,
  Ree2F4,
};

/// Symbolic name of a group or family member. `n` is the degree for
/// alternating/symmetric, the order for cyclic/dihedral and the dimension
/// of the natural module for classical kinds.
struct FamilyDescriptor {
  FamilyKind kind = FamilyKind::Cyclic;
  std::uint64_t n = 1;
  std::uint64_t q = 0;
  std::uint64_t p = 0;
  unsigned k = 0;
  int epsilon = 1;
  std::string sporadic_name;

  static FamilyDescriptor alternating(unsigned n);
  static FamilyDescriptor symmetric(unsigned n);
  static FamilyDescriptor cyclic(std::uint64_t n);
  static FamilyDescriptor dihedral(std::uint64_t order);
  static FamilyDescriptor linear(unsigned n, std::uint64_t q, int epsilon = 1);
  static FamilyDescriptor suzuki(std::uint64_t q);
  static FamilyDescriptor ree(std::uint64_t q);
  static FamilyDescriptor sporadic(std::string_view name);
  static FamilyDescriptor lie(FamilyKind kind, unsigned n, std::uint64_t q);

  /// Parses the flat spec grammar: alt:n, sym:n, cyc:n, dih:order, psl2:q,
  /// psl:n,q,+ / psl:n,q,-, suzuki:q, ree:q, sporadic:Name, psp:n,q,
  /// omega:n,q, omegap:n,q, omegam:n,q, g2:q, f4:q, e6:q, 2e6:q, e7:q, e8:q,
  /// 3d4:q, 2f4:q.
  static FamilyDescriptor parse(std::string_view spec);
  /// Inverse of parse.
  std::string spec() const;
  /// Conventional name such as "L_3(4)", "U_5(4)", "2B2(8)", "A_7".
  std::string display_name() const;

  bool is_lie_type() const;
  /// Non-abelian simple under the usual small-case conventions.
  bool is_simple() const;
  /// BN-pair rank (the twisted rank for twisted groups).
  std::optional<unsigned> lie_rank() const;
  /// u with |Sylow_p| = q^u.
  std::optional<unsigned> sylow_exponent() const;

  friend bool operator==(const FamilyDescriptor&, const FamilyDescriptor&) = default;
};

/// Canonical representative under the known small isomorphisms
/// L2(4) = L2(5) = A5, L2(9) = A6, L3(2) = L2(7).
FamilyDescriptor resolve_alias(const FamilyDescriptor& d);

/// Group order with its factorization.
FactoredInt order_of(const FamilyDescriptor& d, const FactorBudget& budget = {});

/// Concrete permutation representation for the kinds that have one here
/// (alternating, symmetric, cyclic, dihedral, L2(q)). Throws DomainError for
/// the rest.
FiniteGroup realize(const FamilyDescriptor& d, const GroupLimits& limits = {});

/// Canonical names of the 26 sporadic groups.
const std::vector<std::string>& sporadic_names();
/// Accepts canonical names and the usual spellings (O'N, Fi24', Baby, ...).
std::optional<std::string> canonical_sporadic_name(std::string_view name);

}  // namespace chaindepth
