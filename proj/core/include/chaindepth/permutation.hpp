#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace chaindepth {

using Point = std::uint16_t;

/// A bijection of {0, ..., degree-1} stored as its image array.
class Permutation {
 public:
  Permutation() = default;
  /// Throws DomainError unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);
  /// Product of the given cycles, e.g. from_cycles(3, {{0, 1, 2}}).
  static Permutation from_cycles(std::size_t degree, std::initializer_list<std::vector<Point>> cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;
  bool is_even() const;
  /// Order as the lcm of cycle lengths, saturating at UINT64_MAX.
  std::uint64_t order() const;
  /// Disjoint-cycle notation, "()" for the identity.
  std::string to_cycle_string() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<Point> images_;
};

/// (a * b)(x) = a(b(x)). Throws DomainError on a degree mismatch.
Permutation compose(const Permutation& a, const Permutation& b);

struct GroupLimits {
  std::size_t max_order = 1'000'000;
};

/// A permutation group stored as its full, lexicographically sorted element
/// table. Immutable after construction.
class FiniteGroup {
 public:
  /// Breadth-first closure of the generators. Throws OrderCapExceeded as
  /// soon as the partial element count passes `limits.max_order`.
  static FiniteGroup close(std::vector<Permutation> generators, std::string label = {},
                           const GroupLimits& limits = {});

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::string& label() const { return label_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  const Permutation& element(std::size_t i) const { return elements_[i]; }
  std::size_t identity_index() const { return identity_; }

  std::optional<std::size_t> index_of(const Permutation& p) const;
  bool contains(const Permutation& p) const { return index_of(p).has_value(); }

  /// Index of element(i) * element(j).
  std::size_t multiply(std::size_t i, std::size_t j) const;
  std::size_t inverse_index(std::size_t i) const;

  /// A shortest word for element(i) as generator indices; element(i) equals
  /// the composition g[w0] * g[w1] * ... of the returned word.
  std::vector<std::size_t> word(std::size_t i) const;
  std::string word_string(std::size_t i) const;

  /// Points whose images determine an element uniquely.
  const std::vector<Point>& base() const { return base_; }

 private:
  FiniteGroup() = default;
  std::uint64_t key_from(const Permutation& p) const;
  std::uint64_t key_of_product(std::size_t i, std::size_t j) const;
  std::optional<std::size_t> lookup_key(std::uint64_t key) const;

  std::size_t degree_ = 0;
  std::string label_;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::size_t identity_ = 0;
  std::vector<Point> base_;
  bool packed_keys_ = true;
  std::unordered_map<std::uint64_t, std::uint32_t> by_key_;
  // Breadth-first spanning tree: element = elements_[parent] * generators_[gen].
  std::vector<std::uint32_t> word_parent_;
  std::vector<std::uint16_t> word_gen_;
};

/// True iff the listed elements of `g` (indices) form a subgroup.
bool is_subgroup(std::span<const std::size_t> h, const FiniteGroup& g);

}  // namespace chaindepth
