#pragma once

#include <cstdint>
#include <vector>

#include "cgblock/geometry.hpp"

namespace cgblock {

// Abstract set system over the ground set {0, ..., ground_size-1}. The
// generic solver sees nothing but this.
struct SetSystem {
  int ground_size = 0;
  std::vector<std::vector<int>> sets;

  // Throws DomainError on empty members or out-of-range elements.
  void validate() const;
};

SetSystem to_set_system(const std::vector<EdgeSet>& family, const Context& ctx);

enum class SolverStatus { complete, incomplete };

struct SolverConfig {
  std::uint64_t node_limit = 1'000'000'000;
  int threads = 1;
};

struct SolverResult {
  int min_size = 0;
  std::vector<std::vector<int>> solutions;  // each sorted; list sorted
  SolverStatus status = SolverStatus::complete;
  std::uint64_t nodes = 0;
};

// Exact minimum hitting set size and every optimal solution. Iterative
// deepening from a disjoint-packing lower bound; each level is an exhaustive
// branch-and-bound where the i-th branch on an unhit set takes its i-th
// element and forbids the earlier ones, so every solution is produced once.
// When the node limit is reached the result is marked incomplete and its
// contents must not be trusted.
SolverResult min_hitting_sets(const SetSystem& sys, const SolverConfig& config = {});

// Vacuously true for an empty family.
bool is_blocking_set(const EdgeSet& candidate, const std::vector<EdgeSet>& family);

// First family member missed by candidate, if any.
const EdgeSet* first_unhit(const EdgeSet& candidate, const std::vector<EdgeSet>& family);

struct DirectionalResult {
  std::vector<EdgeSet> blockers;  // sorted
  std::uint64_t nodes = 0;
};

// All blocking sets made of exactly one edge from each odd direction class.
DirectionalResult directional_blocker_search(const Context& ctx, const std::vector<EdgeSet>& family);

std::vector<EdgeSet> solutions_as_edge_sets(const SolverResult& res, const Context& ctx);

}  // namespace cgblock
