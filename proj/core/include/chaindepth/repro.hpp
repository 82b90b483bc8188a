#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "chaindepth/families.hpp"
#include "chaindepth/lattice.hpp"
#include "chaindepth/numtheory.hpp"

namespace chaindepth {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct ReproConfig {
  LatticeLimits limits;
  /// Cap used for the best-effort A7 lattice.
  std::size_t a7_max_order = 2520;
  FactorBudget budget;
  unsigned jobs = 1;
  std::uint64_t seed = 20240607;
  /// Largest odd m in the Goldbach sweep.
  std::uint64_t goldbach_max = 1'000'000;
  unsigned an_chain_max = 2000;
  unsigned dihedral_max_m = 500;
};

/// One lattice in the reproduction corpus.
struct CorpusGroup {
  std::string name;
  bool simple = false;
  bool p_group = false;
};

/// The acceptance criteria, with every lattice built along the way cached and
/// checked against the depth recursion.
class ReproSuite {
 public:
  explicit ReproSuite(ReproConfig config = {});

  static constexpr int kCriteria = 11;
  CriterionResult run(int id);
  std::vector<CriterionResult> run_all();

  /// Simple groups and p-groups of the corpus, in a fixed order.
  static const std::vector<CorpusGroup>& corpus();
  /// Lattice of a corpus group; nullptr when it exceeds the caps.
  const SubgroupLattice* lattice(const std::string& name);

  std::size_t lattices_checked() const { return recursion_checked_; }
  const std::vector<std::string>& recursion_failures() const { return recursion_failures_; }

 private:
  const SubgroupLattice* build(const std::string& name, const std::function<FiniteGroup()>& make, std::size_t cap);
  void check_recursion(const std::string& name, const SubgroupLattice& lat);

  CriterionResult sporadic_table();
  CriterionResult depth3_oracle();
  CriterionResult formula_vs_oracle();
  CriterionResult iwasawa();
  CriterionResult recursion();
  CriterionResult alternating_chains();
  CriterionResult goldbach();
  CriterionResult long_depth3();
  CriterionResult unbounded_witness();
  CriterionResult length_bound();
  CriterionResult simple_lower_bound();

  ReproConfig config_;
  std::map<std::string, std::unique_ptr<SubgroupLattice>> cache_;
  std::map<std::string, std::string> skipped_;
  std::size_t recursion_checked_ = 0;
  std::vector<std::string> recursion_failures_;
};

/// Shortest path from the top to the trivial subgroup in the cover graph,
/// found by breadth-first search.
unsigned depth_by_bfs(const SubgroupLattice& lat);

/// "[PASS] 3 Formula vs oracle: detail (0.12 s)".
std::string format_result(const CriterionResult& r);

}  // namespace chaindepth
