#include "chaindepth/families.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <utility>

#include "chaindepth/error.hpp"

namespace chaindepth {

namespace {

std::vector<std::uint32_t> poly_mul_mod(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                                        const std::vector<std::uint32_t>& modulus, std::uint32_t p) {
  const std::size_t k = modulus.size() - 1;
  std::vector<std::uint32_t> prod(2 * k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  for (std::size_t d = prod.size(); d-- > k;) {
    const std::uint32_t c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (std::size_t i = 0; i < k; ++i) prod[d - k + i] = (prod[d - k + i] + (p - c) * modulus[i]) % p;
  }
  prod.resize(k);
  return prod;
}

struct FieldSpec {
  std::uint32_t q, p;
  std::vector<std::uint32_t> modulus;  // monic, constant term first
};

const std::vector<FieldSpec>& field_specs() {
  static const std::vector<FieldSpec> specs = {
      {2, 2, {0, 1}},           {3, 3, {0, 1}},        {4, 2, {1, 1, 1}},       {5, 5, {0, 1}},
      {7, 7, {0, 1}},           {8, 2, {1, 1, 0, 1}},  {9, 3, {1, 0, 1}},       {11, 11, {0, 1}},
      {13, 13, {0, 1}},         {16, 2, {1, 1, 0, 0, 1}}, {17, 17, {0, 1}},     {19, 19, {0, 1}},
      {23, 23, {0, 1}},         {25, 5, {3, 0, 1}},    {27, 3, {1, 2, 0, 1}},   {29, 29, {0, 1}},
      {31, 31, {0, 1}},         {32, 2, {1, 0, 1, 0, 0, 1}},
  };
  return specs;
}

GroupLimits checked(const GroupLimits& limits, const BigInt& projected, const std::string& label) {
  if (projected > BigInt(static_cast<unsigned long>(limits.max_order))) {
    throw OrderCapExceeded(label + " has order " + projected.get_str() + ", above the cap " +
                           std::to_string(limits.max_order));
  }
  return limits;
}

Permutation cycle_on(std::size_t degree, std::size_t from, std::size_t to) {
  std::vector<Point> im(degree);
  for (std::size_t i = 0; i < degree; ++i) im[i] = static_cast<Point>(i);
  for (std::size_t i = from; i < to; ++i) im[i] = static_cast<Point>(i + 1 < to ? i + 1 : from);
  return Permutation(std::move(im));
}

std::string lower_no_quote(std::string_view s) {
  std::string out;
  for (char c : s)
    if (c != '\'') out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  return out;
}

std::uint64_t parse_uint(std::string_view s, std::string_view what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    throw DomainError("invalid " + std::string(what) + ": '" + std::string(s) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::pair<std::uint64_t, unsigned> require_prime_power(std::uint64_t q) {
  auto pk = as_prime_power(q);
  if (!pk) throw DomainError("q = " + std::to_string(q) + " is not a prime power");
  return *pk;
}

FactoredInt fz(const BigInt& v, const FactorBudget& budget) { return factorize(v, budget); }

// q^e - sign, factored.
FactoredInt qpow_pm(std::uint64_t q, unsigned long e, int sign, const FactorBudget& budget) {
  BigInt v = pow_big(q, e);
  v = sign > 0 ? BigInt(v - 1) : BigInt(v + 1);
  return fz(v, budget);
}

FactoredInt prime_power_factored(std::uint64_t p, unsigned k, unsigned long e) {
  return FactoredInt::prime_power(BigInt(static_cast<unsigned long>(p)), static_cast<unsigned>(k * e));
}

// Divides by a small integer, removing known prime factors first.
FactoredInt divide_small(const FactoredInt& f, std::uint64_t d) {
  if (d == 1) return f;
  const FactoredInt df = factorize(d);
  if (f.complete() || df.divides(FactoredInt::from_factors(f.factors()))) {
    auto m = f.factors();
    for (const auto& [p, e] : df.factors()) {
      auto it = m.find(p);
      if (it == m.end() || it->second < e) throw DomainError("divide_small: divisor does not divide");
      it->second -= e;
    }
    return FactoredInt::from_partial(std::move(m), f.cofactor());
  }
  BigInt c = f.cofactor() / BigInt(static_cast<unsigned long>(d));
  return FactoredInt::from_partial(f.factors(), c);
}

struct SporadicInfo {
  const char* name;
  std::vector<std::pair<unsigned, unsigned>> order;
};

const std::vector<SporadicInfo>& sporadic_info() {
  static const std::vector<SporadicInfo> info = {
      {"M11", {{2, 4}, {3, 2}, {5, 1}, {11, 1}}},
      {"M12", {{2, 6}, {3, 3}, {5, 1}, {11, 1}}},
      {"M22", {{2, 7}, {3, 2}, {5, 1}, {7, 1}, {11, 1}}},
      {"M23", {{2, 7}, {3, 2}, {5, 1}, {7, 1}, {11, 1}, {23, 1}}},
      {"M24", {{2, 10}, {3, 3}, {5, 1}, {7, 1}, {11, 1}, {23, 1}}},
      {"J1", {{2, 3}, {3, 1}, {5, 1}, {7, 1}, {11, 1}, {19, 1}}},
      {"J2", {{2, 7}, {3, 3}, {5, 2}, {7, 1}}},
      {"J3", {{2, 7}, {3, 5}, {5, 1}, {17, 1}, {19, 1}}},
      {"J4", {{2, 21}, {3, 3}, {5, 1}, {7, 1}, {11, 3}, {23, 1}, {29, 1}, {31, 1}, {37, 1}, {43, 1}}},
      {"HS", {{2, 9}, {3, 2}, {5, 3}, {7, 1}, {11, 1}}},
      {"Suz", {{2, 13}, {3, 7}, {5, 2}, {7, 1}, {11, 1}, {13, 1}}},
      {"McL", {{2, 7}, {3, 6}, {5, 3}, {7, 1}, {11, 1}}},
      {"Ru", {{2, 14}, {3, 3}, {5, 3}, {7, 1}, {13, 1}, {29, 1}}},
      {"He", {{2, 10}, {3, 3}, {5, 2}, {7, 3}, {17, 1}}},
      {"Ly", {{2, 8}, {3, 7}, {5, 6}, {7, 1}, {11, 1}, {31, 1}, {37, 1}, {67, 1}}},
      {"O'N", {{2, 9}, {3, 4}, {5, 1}, {7, 3}, {11, 1}, {19, 1}, {31, 1}}},
      {"Co1", {{2, 21}, {3, 9}, {5, 4}, {7, 2}, {11, 1}, {13, 1}, {23, 1}}},
      {"Co2", {{2, 18}, {3, 6}, {5, 3}, {7, 1}, {11, 1}, {23, 1}}},
      {"Co3", {{2, 10}, {3, 7}, {5, 3}, {7, 1}, {11, 1}, {23, 1}}},
      {"Fi22", {{2, 17}, {3, 9}, {5, 2}, {7, 1}, {11, 1}, {13, 1}}},
      {"Fi23", {{2, 18}, {3, 13}, {5, 2}, {7, 1}, {11, 1}, {13, 1}, {17, 1}, {23, 1}}},
      {"Fi24'", {{2, 21}, {3, 16}, {5, 2}, {7, 3}, {11, 1}, {13, 1}, {17, 1}, {23, 1}, {29, 1}}},
      {"HN", {{2, 14}, {3, 6}, {5, 6}, {7, 1}, {11, 1}, {19, 1}}},
      {"Th", {{2, 15}, {3, 10}, {5, 3}, {7, 2}, {13, 1}, {19, 1}, {31, 1}}},
      {"B", {{2, 41}, {3, 13}, {5, 6}, {7, 2}, {11, 1}, {13, 1}, {17, 1}, {19, 1}, {23, 1}, {31, 1}, {47, 1}}},
      {"M",
       {{2, 46}, {3, 20}, {5, 9}, {7, 6}, {11, 2}, {13, 3}, {17, 1}, {19, 1}, {23, 1}, {29, 1}, {31, 1},
        {41, 1}, {47, 1}, {59, 1}, {71, 1}}},
  };
  return info;
}

}  // namespace

SmallField::Elem SmallField::inv(Elem a) const {
  if (a == 0) throw DomainError("GF(" + std::to_string(q_) + "): zero has no inverse");
  return inv_[a];
}

std::vector<std::uint32_t> SmallField::coefficients(Elem a) const {
  std::vector<std::uint32_t> c(k_);
  std::uint32_t v = a;
  for (unsigned i = 0; i < k_; ++i) {
    c[i] = v % p_;
    v /= p_;
  }
  return c;
}

const std::vector<std::uint32_t>& supported_field_orders() {
  static const std::vector<std::uint32_t> qs = [] {
    std::vector<std::uint32_t> v;
    for (const auto& s : field_specs()) v.push_back(s.q);
    return v;
  }();
  return qs;
}

SmallField gf(std::uint32_t q) {
  const auto& specs = field_specs();
  auto it = std::find_if(specs.begin(), specs.end(), [&](const FieldSpec& s) { return s.q == q; });
  if (it == specs.end()) throw DomainError("GF(" + std::to_string(q) + ") is not supported");

  SmallField f;
  f.q_ = q;
  f.p_ = it->p;
  f.k_ = static_cast<unsigned>(it->modulus.size() - 1);
  f.modulus_ = it->modulus;
  f.add_.resize(q * q);
  f.mul_.resize(q * q);
  f.neg_.resize(q);
  f.inv_.assign(q, 0);

  auto encode = [&](const std::vector<std::uint32_t>& c) {
    std::uint32_t v = 0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * f.p_ + c[i];
    return static_cast<SmallField::Elem>(v);
  };
  for (std::uint32_t a = 0; a < q; ++a) {
    const auto ca = f.coefficients(static_cast<SmallField::Elem>(a));
    std::vector<std::uint32_t> cn(f.k_);
    for (unsigned i = 0; i < f.k_; ++i) cn[i] = (f.p_ - ca[i]) % f.p_;
    f.neg_[a] = encode(cn);
    for (std::uint32_t b = 0; b < q; ++b) {
      const auto cb = f.coefficients(static_cast<SmallField::Elem>(b));
      std::vector<std::uint32_t> cs(f.k_);
      for (unsigned i = 0; i < f.k_; ++i) cs[i] = (ca[i] + cb[i]) % f.p_;
      f.add_[a * q + b] = encode(cs);
      f.mul_[a * q + b] = encode(poly_mul_mod(ca, cb, f.modulus_, f.p_));
    }
  }
  for (std::uint32_t a = 1; a < q; ++a)
    for (std::uint32_t b = 1; b < q; ++b)
      if (f.mul_[a * q + b] == 1) f.inv_[a] = static_cast<SmallField::Elem>(b);

  for (std::uint32_t g = 1; g < q; ++g) {
    std::uint32_t x = g, ord = 1;
    while (x != 1) {
      x = f.mul_[x * q + g];
      ++ord;
      if (ord > q) break;
    }
    if (ord == q - 1) {
      f.primitive_ = static_cast<SmallField::Elem>(g);
      break;
    }
  }
  return f;
}

FiniteGroup psl2(std::uint32_t q, const GroupLimits& limits) {
  const SmallField f = gf(q);
  const std::string label = "L_2(" + std::to_string(q) + ")";
  const BigInt qb(q);
  const BigInt projected = qb * (qb * qb - 1) / (q % 2 ? 2 : 1);
  checked(limits, projected, label);

  const Point inf = static_cast<Point>(q);
  const std::size_t degree = q + 1;
  const auto alpha2 = f.mul(f.primitive(), f.primitive());
  std::vector<Point> t(degree), d(degree), w(degree);
  for (std::uint32_t x = 0; x < q; ++x) {
    const auto e = static_cast<SmallField::Elem>(x);
    t[x] = f.add(e, f.one());
    d[x] = f.mul(alpha2, e);
    w[x] = x == 0 ? inf : f.neg(f.inv(e));
  }
  t[inf] = inf;
  d[inf] = inf;
  w[inf] = 0;
  auto g = FiniteGroup::close({Permutation(t), Permutation(d), Permutation(w)}, label, limits);
  if (BigInt(static_cast<unsigned long>(g.order())) != projected)
    throw Error(label + ": closure produced order " + std::to_string(g.order()));
  return g;
}

FiniteGroup alternating(unsigned n, const GroupLimits& limits) {
  const std::string label = "A_" + std::to_string(n);
  checked(limits, n >= 2 ? factorial(n).value() / 2 : BigInt(1), label);
  const std::size_t degree = std::max(n, 1u);
  if (n < 3) return FiniteGroup::close({Permutation::identity(degree)}, label, limits);
  std::vector<Permutation> gens{cycle_on(degree, 0, 3)};
  if (n > 3) gens.push_back(n % 2 ? cycle_on(degree, 0, n) : cycle_on(degree, 1, n));
  return FiniteGroup::close(std::move(gens), label, limits);
}

FiniteGroup symmetric(unsigned n, const GroupLimits& limits) {
  const std::string label = "S_" + std::to_string(n);
  checked(limits, factorial(n).value(), label);
  const std::size_t degree = std::max(n, 1u);
  if (n < 2) return FiniteGroup::close({Permutation::identity(degree)}, label, limits);
  return FiniteGroup::close({cycle_on(degree, 0, 2), cycle_on(degree, 0, n)}, label, limits);
}

FiniteGroup cyclic(unsigned n, const GroupLimits& limits) {
  if (n == 0) throw DomainError("cyclic: order must be positive");
  const std::string label = "C_" + std::to_string(n);
  checked(limits, BigInt(n), label);
  return FiniteGroup::close({cycle_on(n, 0, n)}, label, limits);
}

FiniteGroup dihedral(unsigned order, const GroupLimits& limits) {
  if (order == 0 || order % 2) throw DomainError("dihedral: order must be even and positive");
  const std::string label = "D_" + std::to_string(order);
  checked(limits, BigInt(order), label);
  const unsigned m = order / 2;
  if (m == 1) return FiniteGroup::close({Permutation::from_cycles(2, {{0, 1}})}, label, limits);
  if (m == 2) {
    return FiniteGroup::close(
        {Permutation::from_cycles(4, {{0, 1}, {2, 3}}), Permutation::from_cycles(4, {{0, 2}, {1, 3}})}, label,
        limits);
  }
  std::vector<Point> refl(m);
  for (unsigned x = 0; x < m; ++x) refl[x] = static_cast<Point>((m - x) % m);
  return FiniteGroup::close({cycle_on(m, 0, m), Permutation(refl)}, label, limits);
}

FamilyDescriptor FamilyDescriptor::alternating(unsigned n) {
  FamilyDescriptor d;
  d.kind = FamilyKind::Alternating;
  d.n = n;
  return d;
}

FamilyDescriptor FamilyDescriptor::symmetric(unsigned n) {
  FamilyDescriptor d;
  d.kind = FamilyKind::Symmetric;
  d.n = n;
  return d;
}

FamilyDescriptor FamilyDescriptor::cyclic(std::uint64_t n) {
  if (n == 0) throw DomainError("cyclic order must be positive");
  FamilyDescriptor d;
  d.kind = FamilyKind::Cyclic;
  d.n = n;
  return d;
}

FamilyDescriptor FamilyDescriptor::dihedral(std::uint64_t order) {
  if (order == 0 || order % 2) throw DomainError("dihedral order must be even and positive");
  FamilyDescriptor d;
  d.kind = FamilyKind::Dihedral;
  d.n = order;
  return d;
}

FamilyDescriptor FamilyDescriptor::linear(unsigned n, std::uint64_t q, int epsilon) {
  if (n < 2) throw DomainError("linear/unitary dimension must be >= 2");
  if (epsilon != 1 && epsilon != -1) throw DomainError("epsilon must be + or -");
  if (epsilon == -1 && n < 3) throw DomainError("unitary groups need n >= 3");
  auto [p, k] = require_prime_power(q);
  FamilyDescriptor d;
  d.kind = FamilyKind::Linear;
  d.n = n;
  d.q = q;
  d.p = p;
  d.k = k;
  d.epsilon = epsilon;
  return d;
}

FamilyDescriptor FamilyDescriptor::suzuki(std::uint64_t q) {
  auto [p, k] = require_prime_power(q);
  if (p != 2 || k % 2 == 0 || k < 3) throw DomainError("Suzuki groups need q = 2^k with k >= 3 odd");
  FamilyDescriptor d;
  d.kind = FamilyKind::Suzuki;
  d.q = q;
  d.p = p;
  d.k = k;
  return d;
}

FamilyDescriptor FamilyDescriptor::ree(std::uint64_t q) {
  auto [p, k] = require_prime_power(q);
  if (p != 3 || k % 2 == 0) throw DomainError("2G2 needs q = 3^k with k odd");
  FamilyDescriptor d;
  d.kind = FamilyKind::Ree2G2;
  d.q = q;
  d.p = p;
  d.k = k;
  return d;
}

FamilyDescriptor FamilyDescriptor::sporadic(std::string_view name) {
  auto canon = canonical_sporadic_name(name);
  if (!canon) throw DomainError("unknown sporadic group '" + std::string(name) + "'");
  FamilyDescriptor d;
  d.kind = FamilyKind::Sporadic;
  d.sporadic_name = *canon;
  return d;
}

FamilyDescriptor FamilyDescriptor::lie(FamilyKind kind, unsigned n, std::uint64_t q) {
  auto [p, k] = require_prime_power(q);
  FamilyDescriptor d;
  d.kind = kind;
  d.q = q;
  d.p = p;
  d.k = k;
  d.n = n;
  switch (kind) {
    case FamilyKind::Symplectic:
      if (n < 4 || n % 2) throw DomainError("PSp_n(q) needs even n >= 4");
      break;
    case FamilyKind::OmegaOdd:
      if (n < 7 || n % 2 == 0 || p == 2) throw DomainError("Omega_n(q) needs odd n >= 7 and odd q");
      break;
    case FamilyKind::OmegaPlus:
    case FamilyKind::OmegaMinus:
      if (n < 8 || n % 2) throw DomainError("POmega^+-_n(q) needs even n >= 8");
      break;
    case FamilyKind::Ree2F4:
      if (p != 2 || k % 2 == 0) throw DomainError("2F4 needs q = 2^k with k odd");
      d.n = 0;
      break;
    case FamilyKind::Suzuki:
      return suzuki(q);
    case FamilyKind::Ree2G2:
      return ree(q);
    case FamilyKind::Linear:
      return linear(n, q, 1);
    case FamilyKind::G2:
    case FamilyKind::F4:
    case FamilyKind::E6:
    case FamilyKind::TwistedE6:
    case FamilyKind::E7:
    case FamilyKind::E8:
    case FamilyKind::Triality3D4:
      d.n = 0;
      break;
    default:
      throw DomainError("not a Lie-type kind");
  }
  return d;
}

FamilyDescriptor FamilyDescriptor::parse(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw DomainError("group spec '" + std::string(spec) + "' lacks ':'");
  const std::string kind = lower_no_quote(spec.substr(0, colon));
  const std::string_view rest = spec.substr(colon + 1);
  const auto args = split(rest, ',');
  auto arg = [&](std::size_t i, std::string_view what) {
    if (i >= args.size()) throw DomainError("group spec '" + std::string(spec) + "' is missing " + std::string(what));
    return parse_uint(args[i], what);
  };
  auto expect_args = [&](std::size_t count) {
    if (args.size() != count)
      throw DomainError("group spec '" + std::string(spec) + "' expects " + std::to_string(count) + " argument(s)");
  };

  if (kind == "alt") return expect_args(1), alternating(static_cast<unsigned>(arg(0, "degree")));
  if (kind == "sym") return expect_args(1), symmetric(static_cast<unsigned>(arg(0, "degree")));
  if (kind == "cyc") return expect_args(1), cyclic(arg(0, "order"));
  if (kind == "dih") return expect_args(1), dihedral(arg(0, "order"));
  if (kind == "psl2") return expect_args(1), linear(2, arg(0, "q"), 1);
  if (kind == "psl") {
    expect_args(3);
    const auto sign = args[2];
    if (sign != "+" && sign != "-") throw DomainError("psl sign must be + or -");
    return linear(static_cast<unsigned>(arg(0, "n")), arg(1, "q"), sign == "+" ? 1 : -1);
  }
  if (kind == "suzuki" || kind == "sz" || kind == "2b2") return expect_args(1), suzuki(arg(0, "q"));
  if (kind == "ree" || kind == "2g2") return expect_args(1), ree(arg(0, "q"));
  if (kind == "sporadic") return sporadic(rest);
  if (kind == "psp") return expect_args(2), lie(FamilyKind::Symplectic, static_cast<unsigned>(arg(0, "n")), arg(1, "q"));
  if (kind == "omega") return expect_args(2), lie(FamilyKind::OmegaOdd, static_cast<unsigned>(arg(0, "n")), arg(1, "q"));
  if (kind == "omegap") return expect_args(2), lie(FamilyKind::OmegaPlus, static_cast<unsigned>(arg(0, "n")), arg(1, "q"));
  if (kind == "omegam") return expect_args(2), lie(FamilyKind::OmegaMinus, static_cast<unsigned>(arg(0, "n")), arg(1, "q"));
  static const std::vector<std::pair<std::string, FamilyKind>> exceptional = {
      {"g2", FamilyKind::G2},        {"f4", FamilyKind::F4}, {"e6", FamilyKind::E6},
      {"2e6", FamilyKind::TwistedE6}, {"e7", FamilyKind::E7}, {"e8", FamilyKind::E8},
      {"3d4", FamilyKind::Triality3D4}, {"2f4", FamilyKind::Ree2F4},
  };
  for (const auto& [name, k] : exceptional)
    if (kind == name) return expect_args(1), lie(k, 0, arg(0, "q"));
  throw DomainError("unknown group kind '" + std::string(spec.substr(0, colon)) + "'");
}

std::string FamilyDescriptor::spec() const {
  const std::string qs = std::to_string(q);
  switch (kind) {
    case FamilyKind::Alternating: return "alt:" + std::to_string(n);
    case FamilyKind::Symmetric: return "sym:" + std::to_string(n);
    case FamilyKind::Cyclic: return "cyc:" + std::to_string(n);
    case FamilyKind::Dihedral: return "dih:" + std::to_string(n);
    case FamilyKind::Linear:
      if (n == 2 && epsilon == 1) return "psl2:" + qs;
      return "psl:" + std::to_string(n) + "," + qs + "," + (epsilon == 1 ? "+" : "-");
    case FamilyKind::Suzuki: return "suzuki:" + qs;
    case FamilyKind::Ree2G2: return "ree:" + qs;
    case FamilyKind::Sporadic: return "sporadic:" + sporadic_name;
    case FamilyKind::Symplectic: return "psp:" + std::to_string(n) + "," + qs;
    case FamilyKind::OmegaOdd: return "omega:" + std::to_string(n) + "," + qs;
    case FamilyKind::OmegaPlus: return "omegap:" + std::to_string(n) + "," + qs;
    case FamilyKind::OmegaMinus: return "omegam:" + std::to_string(n) + "," + qs;
    case FamilyKind::G2: return "g2:" + qs;
    case FamilyKind::F4: return "f4:" + qs;
    case FamilyKind::E6: return "e6:" + qs;
    case FamilyKind::TwistedE6: return "2e6:" + qs;
    case FamilyKind::E7: return "e7:" + qs;
    case FamilyKind::E8: return "e8:" + qs;
    case FamilyKind::Triality3D4: return "3d4:" + qs;
    case FamilyKind::Ree2F4: return "2f4:" + qs;
  }
  return {};
}

std::string FamilyDescriptor::display_name() const {
  const std::string qs = "(" + std::to_string(q) + ")";
  const std::string ns = std::to_string(n);
  switch (kind) {
    case FamilyKind::Alternating: return "A_" + ns;
    case FamilyKind::Symmetric: return "S_" + ns;
    case FamilyKind::Cyclic: return "C_" + ns;
    case FamilyKind::Dihedral: return "D_" + ns;
    case FamilyKind::Linear: return (epsilon == 1 ? "L_" : "U_") + ns + qs;
    case FamilyKind::Suzuki: return "2B2" + qs;
    case FamilyKind::Ree2G2: return "2G2" + qs;
    case FamilyKind::Sporadic: return sporadic_name;
    case FamilyKind::Symplectic: return "PSp_" + ns + qs;
    case FamilyKind::OmegaOdd: return "Omega_" + ns + qs;
    case FamilyKind::OmegaPlus: return "POmega+_" + ns + qs;
    case FamilyKind::OmegaMinus: return "POmega-_" + ns + qs;
    case FamilyKind::G2: return "G2" + qs;
    case FamilyKind::F4: return "F4" + qs;
    case FamilyKind::E6: return "E6" + qs;
    case FamilyKind::TwistedE6: return "2E6" + qs;
    case FamilyKind::E7: return "E7" + qs;
    case FamilyKind::E8: return "E8" + qs;
    case FamilyKind::Triality3D4: return "3D4" + qs;
    case FamilyKind::Ree2F4: return "2F4" + qs;
  }
  return {};
}

bool FamilyDescriptor::is_lie_type() const {
  switch (kind) {
    case FamilyKind::Alternating:
    case FamilyKind::Symmetric:
    case FamilyKind::Cyclic:
    case FamilyKind::Dihedral:
    case FamilyKind::Sporadic:
      return false;
    default:
      return true;
  }
}

bool FamilyDescriptor::is_simple() const {
  switch (kind) {
    case FamilyKind::Alternating: return n >= 5;
    case FamilyKind::Symmetric:
    case FamilyKind::Cyclic:
    case FamilyKind::Dihedral:
      return false;
    case FamilyKind::Linear:
      if (epsilon == 1) return n > 2 || q >= 4;
      return !(n == 3 && q == 2);
    case FamilyKind::Suzuki:
    case FamilyKind::Sporadic:
    case FamilyKind::Symplectic:
      return !(kind == FamilyKind::Symplectic && n == 4 && q == 2);
    case FamilyKind::Ree2G2: return k >= 3;
    case FamilyKind::G2: return q > 2;
    case FamilyKind::Ree2F4: return k >= 3;
    default: return true;
  }
}

std::optional<unsigned> FamilyDescriptor::lie_rank() const {
  const auto nn = static_cast<unsigned>(n);
  switch (kind) {
    case FamilyKind::Linear: return epsilon == 1 ? nn - 1 : nn / 2;
    case FamilyKind::Suzuki:
    case FamilyKind::Ree2G2:
      return 1u;
    case FamilyKind::Symplectic: return nn / 2;
    case FamilyKind::OmegaOdd: return (nn - 1) / 2;
    case FamilyKind::OmegaPlus: return nn / 2;
    case FamilyKind::OmegaMinus: return nn / 2 - 1;
    case FamilyKind::G2: return 2u;
    case FamilyKind::F4: return 4u;
    case FamilyKind::E6: return 6u;
    case FamilyKind::TwistedE6: return 4u;
    case FamilyKind::E7: return 7u;
    case FamilyKind::E8: return 8u;
    case FamilyKind::Triality3D4: return 2u;
    case FamilyKind::Ree2F4: return 2u;
    default: return std::nullopt;
  }
}

std::optional<unsigned> FamilyDescriptor::sylow_exponent() const {
  const auto nn = static_cast<unsigned>(n);
  switch (kind) {
    case FamilyKind::Linear: return nn * (nn - 1) / 2;
    case FamilyKind::Suzuki: return 2u;
    case FamilyKind::Ree2G2: return 3u;
    case FamilyKind::Symplectic: return (nn / 2) * (nn / 2);
    case FamilyKind::OmegaOdd: return ((nn - 1) / 2) * ((nn - 1) / 2);
    case FamilyKind::OmegaPlus:
    case FamilyKind::OmegaMinus:
      return (nn / 2) * (nn / 2 - 1);
    case FamilyKind::G2: return 6u;
    case FamilyKind::F4: return 24u;
    case FamilyKind::E6: return 36u;
    case FamilyKind::TwistedE6: return 36u;
    case FamilyKind::E7: return 63u;
    case FamilyKind::E8: return 120u;
    case FamilyKind::Triality3D4: return 12u;
    case FamilyKind::Ree2F4: return 12u;
    default: return std::nullopt;
  }
}

FamilyDescriptor resolve_alias(const FamilyDescriptor& d) {
  if (d.kind == FamilyKind::Linear && d.epsilon == 1) {
    if (d.n == 2 && (d.q == 4 || d.q == 5)) return FamilyDescriptor::alternating(5);
    if (d.n == 2 && d.q == 9) return FamilyDescriptor::alternating(6);
    if (d.n == 3 && d.q == 2) return FamilyDescriptor::linear(2, 7);
  }
  return d;
}

FactoredInt order_of(const FamilyDescriptor& d, const FactorBudget& budget) {
  const std::uint64_t q = d.q;
  auto qpow = [&](unsigned long e) { return prime_power_factored(d.p, d.k, e); };
  auto qm = [&](unsigned long e) { return qpow_pm(q, e, 1, budget); };   // q^e - 1
  auto qp = [&](unsigned long e) { return qpow_pm(q, e, -1, budget); };  // q^e + 1
  const auto n = static_cast<unsigned>(d.n);

  switch (d.kind) {
    case FamilyKind::Alternating:
      return n >= 2 ? factorial(n) / factorize(2) : FactoredInt{};
    case FamilyKind::Symmetric: return factorial(n);
    case FamilyKind::Cyclic:
    case FamilyKind::Dihedral:
      return factorize(d.n);
    case FamilyKind::Linear: {
      FactoredInt f = qpow(static_cast<unsigned long>(n) * (n - 1) / 2);
      for (unsigned i = 2; i <= n; ++i) {
        const int sign = d.epsilon == 1 ? 1 : (i % 2 ? -1 : 1);  // q^i - eps^i
        f *= qpow_pm(q, i, sign, budget);
      }
      const std::uint64_t qe = d.epsilon == 1 ? q - 1 : q + 1;
      return divide_small(f, gcd_u64(n, qe));
    }
    case FamilyKind::Suzuki: return qpow(2) * qp(2) * qm(1);
    case FamilyKind::Ree2G2: return qpow(3) * qp(3) * qm(1);
    case FamilyKind::Sporadic: {
      for (const auto& s : sporadic_info()) {
        if (d.sporadic_name != s.name) continue;
        FactoredInt::FactorMap m;
        for (auto [p, e] : s.order) m[BigInt(p)] = e;
        return FactoredInt::from_factors(std::move(m));
      }
      throw DomainError("unknown sporadic group '" + d.sporadic_name + "'");
    }
    case FamilyKind::Symplectic:
    case FamilyKind::OmegaOdd: {
      const unsigned m = n / 2;
      FactoredInt f = qpow(static_cast<unsigned long>(m) * m);
      for (unsigned i = 1; i <= m; ++i) f *= qm(2 * i);
      return divide_small(f, gcd_u64(2, q - 1));
    }
    case FamilyKind::OmegaPlus:
    case FamilyKind::OmegaMinus: {
      const unsigned m = n / 2;
      const int sign = d.kind == FamilyKind::OmegaPlus ? 1 : -1;
      FactoredInt f = qpow(static_cast<unsigned long>(m) * (m - 1)) * qpow_pm(q, m, sign, budget);
      for (unsigned i = 1; i < m; ++i) f *= qm(2 * i);
      const BigInt qm_pm = sign > 0 ? BigInt(pow_big(q, m) - 1) : BigInt(pow_big(q, m) + 1);
      const BigInt g4 = gcd(qm_pm, BigInt(4));
      return divide_small(f, g4.get_ui());
    }
    case FamilyKind::G2: return qpow(6) * qm(6) * qm(2);
    case FamilyKind::F4: return qpow(24) * qm(12) * qm(8) * qm(6) * qm(2);
    case FamilyKind::E6: {
      FactoredInt f = qpow(36);
      for (unsigned i : {2u, 5u, 6u, 8u, 9u, 12u}) f *= qm(i);
      return divide_small(f, gcd_u64(3, q - 1));
    }
    case FamilyKind::TwistedE6: {
      FactoredInt f = qpow(36) * qm(2) * qp(5) * qm(6) * qm(8) * qp(9) * qm(12);
      return divide_small(f, gcd_u64(3, q + 1));
    }
    case FamilyKind::E7: {
      FactoredInt f = qpow(63);
      for (unsigned i : {2u, 6u, 8u, 10u, 12u, 14u, 18u}) f *= qm(i);
      return divide_small(f, gcd_u64(2, q - 1));
    }
    case FamilyKind::E8: {
      FactoredInt f = qpow(120);
      for (unsigned i : {2u, 8u, 12u, 14u, 18u, 20u, 24u, 30u}) f *= qm(i);
      return f;
    }
    case FamilyKind::Triality3D4: {
      const BigInt q4 = pow_big(q, 4);
      return qpow(12) * factorize(BigInt(q4 * q4 + q4 + 1), budget) * qm(6) * qm(2);
    }
    case FamilyKind::Ree2F4: return qpow(12) * qp(6) * qm(4) * qp(3) * qm(1);
  }
  throw DomainError("order_of: unhandled kind");
}

FiniteGroup realize(const FamilyDescriptor& d, const GroupLimits& limits) {
  switch (d.kind) {
    case FamilyKind::Alternating: return alternating(static_cast<unsigned>(d.n), limits);
    case FamilyKind::Symmetric: return symmetric(static_cast<unsigned>(d.n), limits);
    case FamilyKind::Cyclic: return cyclic(static_cast<unsigned>(d.n), limits);
    case FamilyKind::Dihedral: return dihedral(static_cast<unsigned>(d.n), limits);
    case FamilyKind::Linear:
      if (d.n == 2 && d.epsilon == 1) return psl2(static_cast<std::uint32_t>(d.q), limits);
      if (d.n == 3 && d.q == 2 && d.epsilon == 1) return psl2(7, limits);
      break;
    default:
      break;
  }
  throw DomainError("no concrete permutation representation for " + d.display_name());
}

const std::vector<std::string>& sporadic_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& s : sporadic_info()) v.emplace_back(s.name);
    return v;
  }();
  return names;
}

std::optional<std::string> canonical_sporadic_name(std::string_view name) {
  const std::string key = lower_no_quote(name);
  for (const auto& s : sporadic_names())
    if (lower_no_quote(s) == key) return s;
  static const std::vector<std::pair<std::string, std::string>> aliases = {
      {"baby", "B"}, {"bm", "B"}, {"monster", "M"}, {"fi24", "Fi24'"}, {"on", "O'N"}, {"f2", "B"}, {"f1", "M"},
  };
  for (const auto& [a, c] : aliases)
    if (key == a) return c;
  return std::nullopt;
}

}  // namespace chaindepth
