#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chaindepth/formulas.hpp"
#include "chaindepth/numtheory.hpp"

namespace chaindepth {

/// Why a step is maximal in its predecessor.
enum class Justification {
  IntransitiveMax,
  ImprimitiveMax,
  PointStabilizer,
  SubfieldMax,
  BorelMax,
  TableCited,
  ProductDescent,
  SmallGroupTable,
};

std::string to_string(Justification j);
std::optional<Justification> justification_from_string(std::string_view s);

struct ChainStep {
  std::string label;
  FactoredInt order;
  Justification justification = Justification::TableCited;
  friend bool operator==(const ChainStep&, const ChainStep&) = default;
};

/// A symbolic unrefinable chain top > steps[0] > ... > steps.back() = 1.
struct ChainDescriptor {
  std::string top_label;
  FactoredInt top_order;
  std::vector<ChainStep> steps;
  unsigned total_length = 0;
  /// Remarks on steps whose maximality rests on conventions for tiny factors.
  std::vector<std::string> caveats;

  /// [H_{i-1} : H_i] for step i (H_{-1} is the top).
  FactoredInt index(std::size_t i) const;
  /// Throws Error describing the first violated structural invariant.
  void validate() const;
  bool is_valid() const;
  /// "A_5 > A_4 > C_3 > 1 (length 3)".
  std::string render() const;

  friend bool operator==(const ChainDescriptor&, const ChainDescriptor&) = default;
};

/// Chain of length <= 4 from L2(p), p >= 5 prime, of length 3 whenever the
/// depth is 3.
ChainDescriptor l2p_chain(std::uint64_t p);
/// Chain of length <= 5 from A_{p+1}, p prime.
ChainDescriptor ap1_chain(std::uint64_t p);
/// Chain of length <= 23 from A_n, n >= 5.
ChainDescriptor an_chain(unsigned n);

struct Thm16Witness {
  unsigned n = 0;
  std::uint64_t p = 0;
  DepthResult depth;
  unsigned long omega_p_minus_1 = 0;
  /// Omega(p-1) >= n, so the length of L2(p) exceeds n.
  bool length_exceeds_n = false;
  friend bool operator==(const Thm16Witness&, const Thm16Witness&) = default;
};

/// L2(p) of depth 3 whose length exceeds n, with p from the CRT search.
Thm16Witness thm16_witness(unsigned n, std::uint64_t limit = 10'000'000);

struct Prop18Witness {
  unsigned i = 0;
  std::uint64_t k = 0;  // 3^i
  unsigned depth = 0;   // i + 2
  FactoredInt order;    // |L2(3^k)|
  unsigned long omega_order = 0;
  double log_term = 0;  // log_3(Omega(|H_i|)) + 1
  /// depth > log_3(l) + 1 is implied for this i.
  bool inequality_holds = false;
  friend bool operator==(const Prop18Witness&, const Prop18Witness&) = default;
};

/// H_i = L2(3^(3^i)). Throws IncompleteFactorization when |H_i| cannot be
/// factored within the budget.
Prop18Witness prop18_witness(unsigned i, const FactorBudget& budget = {});

}  // namespace chaindepth
