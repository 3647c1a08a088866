#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cgblock/geometry.hpp"
#include "cgblock/hitting_set.hpp"

namespace cgblock {

enum class ShpFamily {
  all,               // every simple Hamiltonian path
  boundary_circuit,  // only the 2m paths along the boundary (control case)
};

struct VerifyConfig {
  std::uint64_t node_limit = 1'000'000'000;
  int threads = 1;
  bool include_blockers = true;
  bool timing = false;  // wall-clock time makes reports non-reproducible
  ShpFamily shp_family = ShpFamily::all;
};

struct FamilyCounts {
  std::uint64_t spm = 0;
  std::uint64_t shp = 0;
  std::uint64_t blockers_spm = 0;
  std::uint64_t blockers_shp = 0;
  std::uint64_t formula_family = 0;

  friend bool operator==(const FamilyCounts&, const FamilyCounts&) = default;
};

struct MinSizes {
  int spm = 0;
  int shp = 0;

  friend bool operator==(const MinSizes&, const MinSizes&) = default;
};

struct Equalities {
  bool min_size_is_m = false;
  bool bh_equals_bm = false;
  bool bm_equals_formula = false;
  bool bh_equals_directional = false;
  bool bm_blocks_h = false;

  friend bool operator==(const Equalities&, const Equalities&) = default;
};

struct StructureSummary {
  std::uint64_t checked = 0;
  std::uint64_t caterpillar_ok = 0;
  std::uint64_t sweep_ok = 0;
  bool all_structural = false;
  bool odd_direction_profile = false;
  bool boundary_spine_path = false;
  bool closed_under_symmetry = false;
  bool lower_bound_certificates = false;

  friend bool operator==(const StructureSummary&, const StructureSummary&) = default;
};

struct SolverStats {
  std::string status;
  std::uint64_t nodes = 0;

  friend bool operator==(const SolverStats&, const SolverStats&) = default;
};

struct Counterexample {
  std::string check;
  std::string edge_set;
  std::string unhit_member;  // empty when the set misses nothing

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct TheoremReport {
  int m = 0;
  FamilyCounts counts;
  MinSizes min_sizes;
  Equalities equalities;
  StructureSummary structure;
  SolverStats solver_spm;
  SolverStats solver_shp;
  std::uint64_t directional_nodes = 0;
  int formula_spec_count = 0;
  int formula_max_multiplicity = 0;
  std::vector<std::string> blockers;
  std::optional<Counterexample> counterexample;
  std::optional<double> elapsed_seconds;
  std::string status;  // "pass" | "fail" | "inconclusive"
  std::string content_hash;

  friend bool operator==(const TheoremReport&, const TheoremReport&) = default;
};

TheoremReport verify_theorems(int m, const VerifyConfig& config = {});

// Exactly one edge per odd direction and none in even directions.
bool check_odd_direction_profile(const std::vector<EdgeSet>& blockers, const Context& ctx);
// Boundary edges of each blocker form one consecutive path of length >= 2.
bool check_boundary_spine_path(const std::vector<EdgeSet>& blockers, const Context& ctx);
// Family (sorted) maps to itself under v -> v+1 and v -> -v.
bool closed_under_symmetry(const std::vector<EdgeSet>& blockers, const Context& ctx);
// Canonical disjoint SPM/SHP families are valid and pairwise edge-disjoint.
bool check_lower_bound_certificates(const Context& ctx);

struct MutationStats {
  std::uint64_t mutations = 0;
  std::uint64_t outside_family = 0;
  std::uint64_t detected = 0;  // non-family mutations missing some member

  bool passes() const { return detected == outside_family; }
};

// Replaces one edge of a blocker by another edge of the same direction.
// sample == 0 means exhaustive; otherwise `sample` mutations are drawn with a
// fixed-seed generator.
MutationStats mutation_sensitivity(const std::vector<EdgeSet>& blockers, const std::vector<EdgeSet>& family,
                                   const Context& ctx, std::uint64_t sample = 0, std::uint64_t seed = 1);

bool report_passed(const TheoremReport& r);

}  // namespace cgblock
