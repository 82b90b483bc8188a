#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "chaindepth/permutation.hpp"

namespace chaindepth {

struct LatticeLimits {
  std::size_t max_group_order = 2500;
  std::size_t max_subgroups = 100'000;
};

/// Exact non-negative rational in lowest terms.
struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  static Rational make(std::uint64_t num, std::uint64_t den);
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string to_string() const;
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// Node indices from the top of the lattice down to the trivial subgroup.
struct Chain {
  std::vector<std::size_t> nodes;
  std::size_t length() const { return nodes.empty() ? 0 : nodes.size() - 1; }
  friend bool operator==(const Chain&, const Chain&) = default;
};

struct ChainResult {
  unsigned value = 0;
  Chain witness;
};

/// Number of top-to-bottom cover paths per length. Counts saturate at
/// UINT64_MAX and set `saturated`; the set of lengths stays exact.
struct ChainLengthProfile {
  std::map<unsigned, std::uint64_t> counts;
  bool saturated = false;

  bool all_equal() const { return counts.size() == 1; }
  std::vector<unsigned> distinct() const;
};

class SubgroupLattice {
 public:
  struct Node {
    std::size_t order = 0;
    std::vector<std::uint32_t> elements;    // sorted indices into parent()
    std::vector<std::uint32_t> generators;  // small generating set, element indices
  };

  const FiniteGroup& parent() const { return *parent_; }
  std::size_t size() const { return nodes_.size(); }
  const Node& node(std::size_t i) const { return nodes_[i]; }
  const std::vector<Node>& nodes() const { return nodes_; }
  std::size_t top() const { return nodes_.size() - 1; }
  std::size_t bottom() const { return 0; }

  /// Maximal subgroups of node i, ascending.
  const std::vector<std::uint32_t>& children(std::size_t i) const { return children_[i]; }
  /// Nodes in which node i is maximal, ascending.
  const std::vector<std::uint32_t>& parents(std::size_t i) const { return parents_[i]; }
  /// (i, j) with node j maximal in node i, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> cover_edges() const;

  bool contains(std::size_t i, std::size_t element) const;
  bool is_subgroup_of(std::size_t h, std::size_t k) const;
  bool is_abelian(std::size_t i) const;
  /// Elements of coprime order commute.
  bool is_nilpotent(std::size_t i) const;

  /// depth_below()[i] is the depth of the subgroup at node i.
  const std::vector<unsigned>& depth_below() const { return depth_; }
  const std::vector<unsigned>& length_below() const { return length_; }

  friend SubgroupLattice enumerate_subgroups(const FiniteGroup& g, const LatticeLimits& limits);

 private:
  std::shared_ptr<const FiniteGroup> parent_;
  std::vector<Node> nodes_;
  std::vector<std::vector<std::uint32_t>> children_, parents_;
  std::vector<unsigned> depth_, length_;
  std::vector<std::uint64_t> element_order_;
};

/// Every subgroup of g with the covering relation. Nodes are ordered by
/// (order, sorted element list); node 0 is trivial, the last node is g.
/// Throws LatticeCapExceeded when |g| or the subgroup count exceeds the limits.
SubgroupLattice enumerate_subgroups(const FiniteGroup& g, const LatticeLimits& limits = {});

/// Shortest unrefinable chain; ties go to the smallest node index.
ChainResult depth(const SubgroupLattice& lat);
/// Longest chain of subgroups, with the same tie-break.
ChainResult length(const SubgroupLattice& lat);
unsigned chain_difference(const SubgroupLattice& lat);
Rational chain_ratio(const SubgroupLattice& lat);
ChainLengthProfile all_maximal_chain_lengths(const SubgroupLattice& lat);

/// Orders along the chain, e.g. "60 > 12 > 4 > 2 > 1".
std::string render_orders(const SubgroupLattice& lat, const Chain& c);

}  // namespace chaindepth
