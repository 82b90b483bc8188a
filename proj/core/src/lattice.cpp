#include "chaindepth/lattice.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_map>

#include "chaindepth/error.hpp"

namespace chaindepth {

namespace {

using Bits = std::vector<std::uint64_t>;

constexpr std::size_t kTableLimit = 4096;

bool test(const Bits& b, std::size_t i) { return (b[i >> 6] >> (i & 63)) & 1u; }
void set(Bits& b, std::size_t i) { b[i >> 6] |= std::uint64_t{1} << (i & 63); }

std::uint64_t hash_bits(const Bits& b) {
  std::uint64_t h = 0x9e3779b97f4a7c15ull;
  for (std::uint64_t w : b) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 0xbf58476d1ce4e5b9ull;
  }
  return h;
}

// Lexicographic comparison of the sorted element lists of two equal-size sets.
bool lex_less(const Bits& a, const Bits& b) {
  for (std::size_t w = 0; w < a.size(); ++w) {
    const std::uint64_t x = a[w] ^ b[w];
    if (x) return (a[w] >> std::countr_zero(x)) & 1u;
  }
  return false;
}

bool is_prime_power(std::uint64_t n) {
  if (n < 2) return false;
  std::uint64_t p = 2;
  while (n % p) ++p;
  while (n % p == 0) n /= p;
  return n == 1;
}

struct Builder {
  const FiniteGroup& g;
  const LatticeLimits& limits;
  std::size_t n, words;
  std::vector<std::uint32_t> table;

  std::vector<Bits> sets;
  std::vector<std::vector<std::uint32_t>> members, gens;
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> index;
  std::uint32_t top = 0;

  Bits work;
  std::vector<std::uint32_t> reps;

  Builder(const FiniteGroup& group, const LatticeLimits& lim)
      : g(group), limits(lim), n(group.order()), words((group.order() + 63) / 64), work(words) {
    if (n <= kTableLimit) {
      table.resize(n * n);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) table[a * n + b] = static_cast<std::uint32_t>(g.multiply(a, b));
    }
  }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return table.empty() ? static_cast<std::uint32_t>(g.multiply(a, b)) : table[std::size_t{a} * n + b];
  }

  std::uint32_t intern(const Bits& bits, std::vector<std::uint32_t> gen) {
    const std::uint64_t h = hash_bits(bits);
    auto& bucket = index[h];
    for (auto id : bucket)
      if (sets[id] == bits) return id;
    if (sets.size() >= limits.max_subgroups) {
      throw LatticeCapExceeded("subgroup count of " + g.label() + " exceeds the cap " +
                               std::to_string(limits.max_subgroups));
    }
    const auto id = static_cast<std::uint32_t>(sets.size());
    bucket.push_back(id);
    std::vector<std::uint32_t> elems;
    for (std::size_t w = 0; w < words; ++w)
      for (std::uint64_t x = bits[w]; x; x &= x - 1) elems.push_back(static_cast<std::uint32_t>(w * 64 + std::countr_zero(x)));
    sets.push_back(bits);
    members.push_back(std::move(elems));
    gens.push_back(std::move(gen));
    return id;
  }

  // <H, x> by right-coset closure; anything past half the group is the group.
  std::uint32_t join(std::uint32_t h, std::uint32_t x) {
    work = sets[h];
    const auto& base = members[h];
    const auto& hg = gens[h];
    std::size_t size = base.size();
    reps.assign(1, static_cast<std::uint32_t>(g.identity_index()));
    for (std::size_t r = 0; r < reps.size(); ++r) {
      for (std::size_t i = 0; i <= hg.size(); ++i) {
        const std::uint32_t t = mul(reps[r], i < hg.size() ? hg[i] : x);
        if (test(work, t)) continue;
        for (auto e : base) set(work, mul(e, t));
        size += base.size();
        if (2 * size > n) return top;
        reps.push_back(t);
      }
    }
    std::vector<std::uint32_t> gen = hg;
    gen.push_back(x);
    return intern(work, std::move(gen));
  }
};

}  // namespace

Rational Rational::make(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw DomainError("Rational: zero denominator");
  const std::uint64_t d = std::gcd(num, den);
  return {num / (d ? d : 1), den / (d ? d : 1)};
}

std::string Rational::to_string() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

std::vector<unsigned> ChainLengthProfile::distinct() const {
  std::vector<unsigned> v;
  for (const auto& [len, count] : counts) v.push_back(len);
  return v;
}

SubgroupLattice enumerate_subgroups(const FiniteGroup& g, const LatticeLimits& limits) {
  if (g.order() > limits.max_group_order) {
    throw LatticeCapExceeded(g.label() + " has order " + std::to_string(g.order()) + ", above the lattice cap " +
                             std::to_string(limits.max_group_order));
  }
  Builder b(g, limits);
  const std::size_t n = g.order();
  const auto id = static_cast<std::uint32_t>(g.identity_index());

  std::vector<std::uint64_t> ord(n);
  for (std::size_t i = 0; i < n; ++i) ord[i] = g.element(i).order();

  {
    Bits bits(b.words, 0);
    set(bits, id);
    b.intern(bits, {});
  }
  {
    Bits bits(b.words, ~std::uint64_t{0});
    if (n % 64) bits.back() = (std::uint64_t{1} << (n % 64)) - 1;
    std::vector<std::uint32_t> gen;
    for (const auto& p : g.generators()) gen.push_back(static_cast<std::uint32_t>(*g.index_of(p)));
    b.top = b.intern(bits, std::move(gen));
  }

  // Cyclic subgroups of prime-power order generate every subgroup.
  std::vector<std::uint32_t> seeds;
  std::vector<bool> covered(n, false);
  for (std::uint32_t x = 0; x < n; ++x) {
    if (covered[x] || !is_prime_power(ord[x])) continue;
    std::uint32_t y = x;
    do {
      if (ord[y] == ord[x]) covered[y] = true;
      y = b.mul(y, x);
    } while (y != x);
    seeds.push_back(x);
  }

  // Phase j finds exactly the subgroups generated by seeds 0..j: each is
  // <H, x_j> with H generated by earlier seeds. skip[H] holds elements y with
  // <H, y> already known to be built, namely Hx and xH for joined seeds x.
  std::vector<Bits> skip(b.sets.size());
  for (std::uint32_t x : seeds) {
    const std::size_t existing = b.sets.size();
    for (std::uint32_t h = 0; h < existing; ++h) {
      if (h == b.top || test(b.sets[h], x)) continue;
      if (!skip[h].empty() && test(skip[h], x)) continue;
      b.join(h, x);
      if (skip[h].empty()) skip[h].assign(b.words, 0);
      for (auto e : b.members[h]) {
        set(skip[h], b.mul(e, x));
        set(skip[h], b.mul(x, e));
      }
    }
    skip.resize(b.sets.size());
  }

  const std::size_t count = b.sets.size();
  std::vector<std::uint32_t> perm(count);
  std::iota(perm.begin(), perm.end(), 0u);
  std::sort(perm.begin(), perm.end(), [&](std::uint32_t x, std::uint32_t y) {
    if (b.members[x].size() != b.members[y].size()) return b.members[x].size() < b.members[y].size();
    return lex_less(b.sets[x], b.sets[y]);
  });

  SubgroupLattice lat;
  lat.parent_ = std::make_shared<const FiniteGroup>(g);
  lat.element_order_ = std::move(ord);
  lat.nodes_.resize(count);
  std::vector<Bits> sets(count);
  skip.clear();
  for (std::size_t i = 0; i < count; ++i) {
    auto& node = lat.nodes_[i];
    node.order = b.members[perm[i]].size();
    node.elements = std::move(b.members[perm[i]]);
    node.generators = std::move(b.gens[perm[i]]);
    sets[i] = std::move(b.sets[perm[i]]);
  }

  // Proper containment, tested only where the orders allow it.
  const std::size_t node_words = (count + 63) / 64;
  std::vector<Bits> below(count, Bits(node_words, 0));
  lat.children_.assign(count, {});
  lat.parents_.assign(count, {});
  for (std::size_t k = 1; k < count; ++k) {
    const auto& K = lat.nodes_[k];
    for (std::size_t h = 0; h < k; ++h) {
      const auto& H = lat.nodes_[h];
      if (H.order == K.order || K.order % H.order) continue;
      bool inside = true;
      for (auto x : H.generators) {
        if (!test(sets[k], x)) {
          inside = false;
          break;
        }
      }
      if (inside) set(below[k], h);
    }
    Bits deeper(node_words, 0);
    for (std::size_t w = 0; w < node_words; ++w) {
      for (std::uint64_t bits = below[k][w]; bits; bits &= bits - 1) {
        const std::size_t m = w * 64 + std::countr_zero(bits);
        for (std::size_t v = 0; v < node_words; ++v) deeper[v] |= below[m][v];
      }
    }
    for (std::size_t w = 0; w < node_words; ++w) {
      for (std::uint64_t bits = below[k][w] & ~deeper[w]; bits; bits &= bits - 1) {
        const auto m = static_cast<std::uint32_t>(w * 64 + std::countr_zero(bits));
        lat.children_[k].push_back(m);
        lat.parents_[m].push_back(static_cast<std::uint32_t>(k));
      }
    }
  }

  lat.depth_.assign(count, 0);
  lat.length_.assign(count, 0);
  for (std::size_t k = 1; k < count; ++k) {
    unsigned lo = UINT32_MAX, hi = 0;
    for (auto m : lat.children_[k]) {
      lo = std::min(lo, lat.depth_[m]);
      hi = std::max(hi, lat.length_[m]);
    }
    lat.depth_[k] = lo + 1;
    lat.length_[k] = hi + 1;
  }
  return lat;
}

std::vector<std::pair<std::size_t, std::size_t>> SubgroupLattice::cover_edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t k = 0; k < size(); ++k)
    for (auto m : children_[k]) edges.emplace_back(k, m);
  return edges;
}

bool SubgroupLattice::contains(std::size_t i, std::size_t element) const {
  const auto& e = nodes_[i].elements;
  return std::binary_search(e.begin(), e.end(), static_cast<std::uint32_t>(element));
}

bool SubgroupLattice::is_subgroup_of(std::size_t h, std::size_t k) const {
  if (nodes_[k].order % nodes_[h].order) return false;
  for (auto x : nodes_[h].generators)
    if (!contains(k, x)) return false;
  return true;
}

bool SubgroupLattice::is_abelian(std::size_t i) const {
  const auto& gen = nodes_[i].generators;
  for (std::size_t a = 0; a < gen.size(); ++a)
    for (std::size_t b = a + 1; b < gen.size(); ++b)
      if (parent_->multiply(gen[a], gen[b]) != parent_->multiply(gen[b], gen[a])) return false;
  return true;
}

bool SubgroupLattice::is_nilpotent(std::size_t i) const {
  const auto& e = nodes_[i].elements;
  if (is_prime_power(nodes_[i].order) || nodes_[i].order == 1) return true;
  for (std::size_t a = 0; a < e.size(); ++a) {
    for (std::size_t b = a + 1; b < e.size(); ++b) {
      if (std::gcd(element_order_[e[a]], element_order_[e[b]]) != 1) continue;
      if (parent_->multiply(e[a], e[b]) != parent_->multiply(e[b], e[a])) return false;
    }
  }
  return true;
}

namespace {

ChainResult descend(const SubgroupLattice& lat, const std::vector<unsigned>& score, bool shortest) {
  ChainResult r;
  r.value = score[lat.top()];
  std::size_t cur = lat.top();
  r.witness.nodes.push_back(cur);
  while (cur != lat.bottom()) {
    std::size_t next = lat.children(cur).front();
    for (auto m : lat.children(cur)) {
      const bool better = shortest ? score[m] < score[next] : score[m] > score[next];
      if (better) next = m;
    }
    cur = next;
    r.witness.nodes.push_back(cur);
  }
  return r;
}

}  // namespace

ChainResult depth(const SubgroupLattice& lat) { return descend(lat, lat.depth_below(), true); }

ChainResult length(const SubgroupLattice& lat) { return descend(lat, lat.length_below(), false); }

unsigned chain_difference(const SubgroupLattice& lat) {
  return lat.length_below()[lat.top()] - lat.depth_below()[lat.top()];
}

Rational chain_ratio(const SubgroupLattice& lat) {
  const unsigned d = lat.depth_below()[lat.top()];
  if (d == 0) throw DomainError("chain ratio of the trivial group is undefined");
  return Rational::make(lat.length_below()[lat.top()], d);
}

ChainLengthProfile all_maximal_chain_lengths(const SubgroupLattice& lat) {
  std::vector<std::map<unsigned, std::uint64_t>> paths(lat.size());
  bool saturated = false;
  paths[lat.bottom()][0] = 1;
  for (std::size_t k = 1; k < lat.size(); ++k) {
    for (auto m : lat.children(k)) {
      for (const auto& [len, count] : paths[m]) {
        auto& slot = paths[k][len + 1];
        if (slot > UINT64_MAX - count) {
          slot = UINT64_MAX;
          saturated = true;
        } else {
          slot += count;
        }
      }
    }
  }
  ChainLengthProfile p;
  p.counts = std::move(paths[lat.top()]);
  p.saturated = saturated;
  return p;
}

std::string render_orders(const SubgroupLattice& lat, const Chain& c) {
  std::string s;
  for (std::size_t i = 0; i < c.nodes.size(); ++i) {
    if (i) s += " > ";
    s += std::to_string(lat.node(c.nodes[i]).order);
  }
  return s;
}

}  // namespace chaindepth
