#include "chaindepth/permutation.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "chaindepth/error.hpp"

namespace chaindepth {

namespace {

__extension__ using u128 = unsigned __int128;

struct ImagesHash {
  std::size_t operator()(const std::vector<Point>& v) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (Point p : v) {
      h ^= p;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

std::uint64_t lcm_saturating(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t g = std::gcd(a, b);
  const u128 l = static_cast<u128>(a / g) * b;
  return l > UINT64_MAX ? UINT64_MAX : static_cast<std::uint64_t>(l);
}

}  // namespace

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p]) throw DomainError("permutation images are not a bijection");
    seen[p] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> im(degree);
  std::iota(im.begin(), im.end(), Point{0});
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

Permutation Permutation::from_cycles(std::size_t degree, std::initializer_list<std::vector<Point>> cycles) {
  std::vector<Point> im(degree);
  std::iota(im.begin(), im.end(), Point{0});
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= degree) throw DomainError("cycle point out of range");
      im[c[i]] = c[(i + 1) % c.size()];
    }
  }
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<Point> im(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) im[images_[i]] = static_cast<Point>(i);
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

bool Permutation::is_even() const {
  std::vector<bool> seen(images_.size(), false);
  std::size_t transpositions = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

std::uint64_t Permutation::order() const {
  std::vector<bool> seen(images_.size(), false);
  std::uint64_t ord = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    ord = lcm_saturating(ord, len);
  }
  return ord;
}

std::string Permutation::to_cycle_string() const {
  std::vector<bool> seen(images_.size(), false);
  std::string s;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    s += "(";
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (!first) s += " ";
      s += std::to_string(j);
      first = false;
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw DomainError("compose: degree mismatch");
  std::vector<Point> im(a.degree());
  for (std::size_t x = 0; x < im.size(); ++x) im[x] = a(b(static_cast<Point>(x)));
  return Permutation(std::move(im));
}

FiniteGroup FiniteGroup::close(std::vector<Permutation> generators, std::string label, const GroupLimits& limits) {
  if (generators.empty()) throw DomainError("close: empty generator list");
  const std::size_t degree = generators.front().degree();
  for (const auto& g : generators)
    if (g.degree() != degree) throw DomainError("close: generators of different degrees");
  if (generators.size() > 0xFFFF) throw DomainError("close: too many generators");

  std::vector<Permutation> bfs{Permutation::identity(degree)};
  std::vector<std::uint32_t> parent{0};
  std::vector<std::uint16_t> via{0};
  std::unordered_map<std::vector<Point>, std::uint32_t, ImagesHash> seen;
  seen.emplace(std::vector<Point>(bfs[0].images().begin(), bfs[0].images().end()), 0);

  std::vector<Point> buf(degree);
  for (std::size_t head = 0; head < bfs.size(); ++head) {
    for (std::size_t gi = 0; gi < generators.size(); ++gi) {
      const auto& x = bfs[head];
      const auto& s = generators[gi];
      for (std::size_t p = 0; p < degree; ++p) buf[p] = x(s(static_cast<Point>(p)));
      if (seen.contains(buf)) continue;
      if (bfs.size() >= limits.max_order) {
        throw OrderCapExceeded("closure of " + (label.empty() ? std::string("group") : label) +
                               " exceeds the order cap " + std::to_string(limits.max_order));
      }
      seen.emplace(buf, static_cast<std::uint32_t>(bfs.size()));
      bfs.push_back(Permutation(buf));
      parent.push_back(static_cast<std::uint32_t>(head));
      via.push_back(static_cast<std::uint16_t>(gi));
    }
  }
  seen.clear();

  // Canonical order: lexicographic on image arrays.
  std::vector<std::uint32_t> order(bfs.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) { return bfs[a] < bfs[b]; });
  std::vector<std::uint32_t> pos(bfs.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<std::uint32_t>(i);

  FiniteGroup g;
  g.degree_ = degree;
  g.label_ = std::move(label);
  g.generators_ = std::move(generators);
  g.elements_.reserve(bfs.size());
  g.word_parent_.resize(bfs.size());
  g.word_gen_.resize(bfs.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    g.elements_.push_back(std::move(bfs[order[i]]));
    g.word_parent_[i] = pos[parent[order[i]]];
    g.word_gen_[i] = via[order[i]];
  }
  g.identity_ = pos[0];

  // Base via a descending chain of point stabilizers.
  std::vector<std::uint32_t> stab(g.elements_.size());
  std::iota(stab.begin(), stab.end(), 0u);
  while (stab.size() > 1) {
    Point moved = 0;
    bool found = false;
    for (std::size_t pt = 0; pt < degree && !found; ++pt) {
      for (auto idx : stab) {
        if (g.elements_[idx](static_cast<Point>(pt)) != pt) {
          moved = static_cast<Point>(pt);
          found = true;
          break;
        }
      }
    }
    g.base_.push_back(moved);
    std::erase_if(stab, [&](std::uint32_t idx) { return g.elements_[idx](moved) != moved; });
  }

  u128 span = 1;
  for (std::size_t i = 0; i < g.base_.size() && g.packed_keys_; ++i) {
    span *= degree;
    if (span > UINT64_MAX) g.packed_keys_ = false;
  }
  if (!g.packed_keys_) {
    // Base images do not fit a single word; fall back to hashing whole images.
    g.base_.resize(degree);
    std::iota(g.base_.begin(), g.base_.end(), Point{0});
  }
  g.by_key_.reserve(g.elements_.size());
  for (std::size_t i = 0; i < g.elements_.size(); ++i) g.by_key_.emplace(g.key_from(g.elements_[i]), i);
  if (g.by_key_.size() != g.elements_.size()) {
    // Only reachable on the hashed fallback path.
    throw Error("FiniteGroup: element key collision");
  }
  return g;
}

std::uint64_t FiniteGroup::key_from(const Permutation& p) const {
  if (packed_keys_) {
    std::uint64_t k = 0;
    for (Point b : base_) k = k * degree_ + p(b);
    return k;
  }
  std::vector<Point> v(p.images().begin(), p.images().end());
  return ImagesHash{}(v);
}

std::uint64_t FiniteGroup::key_of_product(std::size_t i, std::size_t j) const {
  const auto& a = elements_[i];
  const auto& b = elements_[j];
  if (packed_keys_) {
    std::uint64_t k = 0;
    for (Point pt : base_) k = k * degree_ + a(b(pt));
    return k;
  }
  return key_from(compose(a, b));
}

std::optional<std::size_t> FiniteGroup::lookup_key(std::uint64_t key) const {
  auto it = by_key_.find(key);
  if (it == by_key_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> FiniteGroup::index_of(const Permutation& p) const {
  if (p.degree() != degree_) return std::nullopt;
  auto idx = lookup_key(key_from(p));
  if (!idx || elements_[*idx] != p) return std::nullopt;
  return idx;
}

std::size_t FiniteGroup::multiply(std::size_t i, std::size_t j) const {
  auto idx = lookup_key(key_of_product(i, j));
  if (!idx) throw Error("FiniteGroup::multiply: product outside the group");
  return *idx;
}

std::size_t FiniteGroup::inverse_index(std::size_t i) const { return *index_of(elements_[i].inverse()); }

std::vector<std::size_t> FiniteGroup::word(std::size_t i) const {
  std::vector<std::size_t> w;
  while (i != identity_) {
    w.push_back(word_gen_[i]);
    i = word_parent_[i];
  }
  std::reverse(w.begin(), w.end());
  return w;
}

std::string FiniteGroup::word_string(std::size_t i) const {
  const auto w = word(i);
  if (w.empty()) return "e";
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) s += "*";
    s += "g" + std::to_string(w[k]);
  }
  return s;
}

bool is_subgroup(std::span<const std::size_t> h, const FiniteGroup& g) {
  if (h.empty()) return false;
  std::vector<bool> in(g.order(), false);
  for (auto i : h) {
    if (i >= g.order()) return false;
    in[i] = true;
  }
  for (auto a : h) {
    if (!in[g.inverse_index(a)]) return false;
    for (auto b : h)
      if (!in[g.multiply(a, b)]) return false;
  }
  return true;
}

}  // namespace chaindepth
