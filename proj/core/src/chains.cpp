#include "chaindepth/chains.hpp"

#include <array>
#include <cmath>

#include "chaindepth/error.hpp"

namespace chaindepth {

namespace {

FactoredInt ord(std::uint64_t n) { return factorize(n); }

FactoredInt alt_order(std::uint64_t n) { return n <= 2 ? FactoredInt{} : factorial(static_cast<unsigned>(n)) / ord(2); }

FactoredInt l2_order(std::uint64_t p) { return ord(p) * ord(p - 1) * ord(p + 1) / ord(2); }

std::string alt(std::uint64_t n) { return "A_" + std::to_string(n); }

struct Builder {
  ChainDescriptor c;

  Builder(std::string label, FactoredInt order) {
    c.top_label = std::move(label);
    c.top_order = std::move(order);
  }

  void step(std::string label, FactoredInt order, Justification j) {
    c.steps.push_back({std::move(label), std::move(order), j});
  }

  void append(const ChainDescriptor& tail) {
    for (const auto& s : tail.steps) c.steps.push_back(s);
    for (const auto& note : tail.caveats) c.caveats.push_back(note);
  }

  ChainDescriptor done() {
    c.total_length = static_cast<unsigned>(c.steps.size());
    c.validate();
    return std::move(c);
  }
};

}  // namespace

std::string to_string(Justification j) {
  switch (j) {
    case Justification::IntransitiveMax: return "IntransitiveMax";
    case Justification::ImprimitiveMax: return "ImprimitiveMax";
    case Justification::PointStabilizer: return "PointStabilizer";
    case Justification::SubfieldMax: return "SubfieldMax";
    case Justification::BorelMax: return "BorelMax";
    case Justification::TableCited: return "TableCited";
    case Justification::ProductDescent: return "ProductDescent";
    case Justification::SmallGroupTable: return "SmallGroupTable";
  }
  return {};
}

std::optional<Justification> justification_from_string(std::string_view s) {
  for (auto j : {Justification::IntransitiveMax, Justification::ImprimitiveMax, Justification::PointStabilizer,
                 Justification::SubfieldMax, Justification::BorelMax, Justification::TableCited,
                 Justification::ProductDescent, Justification::SmallGroupTable})
    if (to_string(j) == s) return j;
  return std::nullopt;
}

FactoredInt ChainDescriptor::index(std::size_t i) const {
  const FactoredInt& above = i == 0 ? top_order : steps[i - 1].order;
  return above / steps[i].order;
}

void ChainDescriptor::validate() const {
  if (total_length != steps.size())
    throw Error("chain declares length " + std::to_string(total_length) + " but has " +
                std::to_string(steps.size()) + " steps");
  if (steps.empty()) {
    if (top_order.value() != 1) throw Error("empty chain from a nontrivial group");
    return;
  }
  if (steps.back().order.value() != 1) throw Error("chain does not end at the trivial group");
  FactoredInt product;
  const FactoredInt* above = &top_order;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto& s = steps[i];
    if (!s.order.complete() || !above->complete()) throw Error("chain orders must be completely factored");
    if (s.order.value() >= above->value()) throw Error("order does not decrease at step " + s.label);
    if (!s.order.divides(*above)) throw Error("order of " + s.label + " does not divide its predecessor's");
    product *= *above / s.order;
    above = &s.order;
  }
  if (product.value() != top_order.value()) throw Error("step indices do not multiply to the top order");
}

bool ChainDescriptor::is_valid() const {
  try {
    validate();
    return true;
  } catch (const Error&) {
    return false;
  }
}

std::string ChainDescriptor::render() const {
  std::string s = top_label;
  for (const auto& st : steps) s += " > " + st.label;
  return s + " (length " + std::to_string(total_length) + ")";
}

ChainDescriptor l2p_chain(std::uint64_t p) {
  if (p < 5 || !is_prime(p)) throw DomainError("l2p_chain needs a prime p >= 5");
  Builder b("L_2(" + std::to_string(p) + ")", l2_order(p));
  const std::uint64_t r = p % 40;
  if (is_prime((p - 1) / 2)) {
    const std::uint64_t h = (p - 1) / 2;
    const std::string borel = p == 5 ? "D_10" : std::to_string(p) + ":" + std::to_string(h);
    b.step(borel, ord(p) * ord(h), Justification::BorelMax);
    b.step(p == 5 ? "C_5" : std::to_string(p), ord(p), Justification::SmallGroupTable);
  } else if (is_prime((p + 1) / 2)) {
    b.step("D_" + std::to_string(p + 1), ord(p + 1), Justification::TableCited);
    b.step("C_" + std::to_string((p + 1) / 2), ord((p + 1) / 2), Justification::SmallGroupTable);
  } else if (r == 3 || r == 13 || r == 27 || r == 37) {
    b.step("A_4", ord(12), Justification::TableCited);
    b.step("C_3", ord(3), Justification::SmallGroupTable);
  } else if (p % 10 == 1 || p % 10 == 9) {
    b.step("A_5", ord(60), Justification::TableCited);
    b.step("D_10", ord(10), Justification::SmallGroupTable);
    b.step("C_5", ord(5), Justification::SmallGroupTable);
  } else {
    b.step("S_4", ord(24), Justification::TableCited);
    b.step("S_3", ord(6), Justification::SmallGroupTable);
    b.step("C_3", ord(3), Justification::SmallGroupTable);
  }
  b.step("1", FactoredInt{}, Justification::SmallGroupTable);
  return b.done();
}

ChainDescriptor ap1_chain(std::uint64_t p) {
  if (!is_prime(p)) throw DomainError("ap1_chain needs a prime");
  Builder b(alt(p + 1), alt_order(p + 1));
  const auto one = [&] { b.step("1", FactoredInt{}, Justification::SmallGroupTable); };
  switch (p) {
    case 2:
      one();
      break;
    case 3:
      b.step("C_3", ord(3), Justification::SmallGroupTable);
      one();
      break;
    case 7:
      b.step("2^3:L_3(2)", ord(1344), Justification::TableCited);
      b.step("L_3(2)", ord(168), Justification::TableCited);
      b.step("7:3", ord(21), Justification::TableCited);
      b.step("7", ord(7), Justification::SmallGroupTable);
      one();
      break;
    case 11:
      b.step("M_12", order_of(FamilyDescriptor::sporadic("M12")), Justification::TableCited);
      b.step("L_2(11)", l2_order(11), Justification::TableCited);
      b.step("11:5", ord(55), Justification::BorelMax);
      b.step("11", ord(11), Justification::SmallGroupTable);
      one();
      break;
    case 23:
      b.step("M_24", order_of(FamilyDescriptor::sporadic("M24")), Justification::TableCited);
      b.step("M_23", order_of(FamilyDescriptor::sporadic("M23")), Justification::TableCited);
      b.step("23:11", ord(253), Justification::TableCited);
      b.step("11", ord(11), Justification::SmallGroupTable);
      one();
      break;
    default:
      b.step("L_2(" + std::to_string(p) + ")", l2_order(p), Justification::TableCited);
      b.append(l2p_chain(p));
      break;
  }
  return b.done();
}

namespace {

ChainDescriptor small_an_chain(unsigned n) {
  Builder b(alt(n), alt_order(n));
  switch (n) {
    case 5:
      b.step("A_4", ord(12), Justification::PointStabilizer);
      b.step("C_3", ord(3), Justification::SmallGroupTable);
      break;
    case 6:
      b.step("A_5", ord(60), Justification::PointStabilizer);
      b.step("A_4", ord(12), Justification::PointStabilizer);
      b.step("C_3", ord(3), Justification::SmallGroupTable);
      break;
    case 7:
      b.step("L_2(7)", l2_order(7), Justification::TableCited);
      b.step("7:3", ord(21), Justification::BorelMax);
      b.step("7", ord(7), Justification::SmallGroupTable);
      break;
    case 8:
      return ap1_chain(7);
    case 9:
      b.step("L_2(8):3", ord(1512), Justification::TableCited);
      b.step("L_2(8)", ord(504), Justification::TableCited);
      b.step("2^3:7", ord(56), Justification::BorelMax);
      b.step("7", ord(7), Justification::SmallGroupTable);
      break;
    case 10:
      b.step("M_10", ord(720), Justification::TableCited);
      b.step("5:4", ord(20), Justification::TableCited);
      b.step("5:2", ord(10), Justification::SmallGroupTable);
      b.step("5", ord(5), Justification::SmallGroupTable);
      break;
    default:
      throw DomainError("no small-degree chain for A_" + std::to_string(n));
  }
  b.step("1", FactoredInt{}, Justification::SmallGroupTable);
  return b.done();
}

// Steps from ctx x A_d down to ctx x A_k x A_{d-k}; the label and order of
// ctx are prepended to every step.
void split(Builder& b, const std::string& ctx, const FactoredInt& ctx_order, std::uint64_t d, std::uint64_t k) {
  const std::uint64_t m = d - k;
  const std::string pre = ctx.empty() ? std::string() : ctx + " x ";
  const FactoredInt base = ctx_order * alt_order(k) * alt_order(m);
  const std::string prod = alt(k) + " x " + alt(m);
  if (k == m) {
    b.step(pre + "(" + prod + ").2^2", base * ord(4), Justification::ImprimitiveMax);
    b.step(pre + "(" + prod + ").2", base * ord(2), Justification::TableCited);
  } else {
    b.step(pre + "(" + prod + ").2", base * ord(2), Justification::IntransitiveMax);
  }
  b.step(pre + prod, base, Justification::TableCited);
}

}  // namespace

ChainDescriptor an_chain(unsigned n) {
  if (n < 5) throw DomainError("an_chain needs n >= 5");
  if (n <= 10) return small_an_chain(n);

  Builder b(alt(n), alt_order(n));
  const unsigned delta = n % 2;
  const std::uint64_t top = n - delta;
  if (delta) b.step(alt(top), alt_order(top), Justification::PointStabilizer);

  const GoldbachTriple t = ternary_goldbach(n - 3 - delta);
  const std::array<std::uint64_t, 3> sorted{t.p1, t.p2, t.p3};
  std::array<std::uint64_t, 3> roles = sorted;
  for (int i = 0; i < 3; ++i) {
    const std::uint64_t p1 = sorted[i], p2 = sorted[(i + 1) % 3], p3 = sorted[(i + 2) % 3];
    if (top != 2 * (p1 + 1) && p2 != p3) {
      roles = {p1, std::min(p2, p3), std::max(p2, p3)};
      break;
    }
  }
  const std::uint64_t a = roles[0] + 1, bb = roles[1] + 1, c = roles[2] + 1;

  split(b, "", FactoredInt{}, top, a);
  split(b, alt(a), alt_order(a), bb + c, bb);
  if (roles[0] == 2 || roles[1] == 2 || roles[2] == 2)
    b.c.caveats.push_back("A_3 factor: maximality of the block splits is taken by convention for 3-point blocks");

  struct Factor {
    std::string label;
    FactoredInt order;
  };
  std::array<Factor, 3> f{Factor{alt(a), alt_order(a)}, Factor{alt(bb), alt_order(bb)}, Factor{alt(c), alt_order(c)}};
  const auto label = [&] {
    std::string s;
    for (const auto& x : f) {
      if (x.label == "1") continue;
      if (!s.empty()) s += " x ";
      s += x.label;
    }
    return s.empty() ? std::string("1") : s;
  };
  for (int i = 0; i < 3; ++i) {
    for (const auto& st : ap1_chain(roles[i]).steps) {
      f[i] = {st.label, st.order};
      b.step(label(), f[0].order * f[1].order * f[2].order, Justification::ProductDescent);
    }
  }
  return b.done();
}

Thm16Witness thm16_witness(unsigned n, std::uint64_t limit) {
  if (n < 2) throw DomainError("thm16_witness needs n >= 2");
  Thm16Witness w;
  w.n = n;
  w.p = depth3_prime_search(n, limit);
  w.depth = depth_l2_prime(w.p);
  w.omega_p_minus_1 = *factorize(w.p - 1).omega();
  w.length_exceeds_n = w.omega_p_minus_1 >= n;
  return w;
}

Prop18Witness prop18_witness(unsigned i, const FactorBudget& budget) {
  if (i < 1) throw DomainError("prop18_witness needs i >= 1");
  if (i > 39) throw DomainError("3^i overflows 64 bits");
  Prop18Witness w;
  w.i = i;
  w.k = 1;
  for (unsigned j = 0; j < i; ++j) w.k *= 3;
  w.depth = depth_l2_pk(3, static_cast<unsigned>(w.k), budget).value();

  const BigInt q = pow_big(3, w.k);
  const FactoredInt minus = factorize(BigInt(q - 1), budget);
  const FactoredInt plus = factorize(BigInt(q + 1), budget);
  if (!minus.complete() || !plus.complete())
    throw IncompleteFactorization("|L2(3^" + std::to_string(w.k) + ")| could not be factored within the budget");
  w.order = FactoredInt::prime_power(3, static_cast<unsigned>(w.k)) * minus * plus / factorize(2);
  w.omega_order = *w.order.omega();
  w.log_term = std::log(static_cast<double>(w.omega_order)) / std::log(3.0) + 1;
  w.inequality_holds = static_cast<double>(w.depth) > w.log_term + 1e-9;
  return w;
}

}  // namespace chaindepth
