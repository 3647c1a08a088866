#pragma once

// Caterpillar blockers of CK(2m): t consecutive boundary edges [i-1, i]
// (the spine) followed by m-t diagonals [t+j-1-e_j, t+j+e_j] whose "back"
// offsets e_j strictly increase inside [1, m-2], everything rotated by r.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cgblock/geometry.hpp"

namespace cgblock {

struct BlockerSpec {
  int r = 0;
  int t = 2;
  std::vector<int> epsilons;

  friend bool operator==(const BlockerSpec&, const BlockerSpec&) = default;
};

// Throws DomainError unless the spec is admissible for ctx.
void validate_spec(const BlockerSpec& spec, const Context& ctx);

// "r:t:e1,e2,..." (the epsilon list may be empty: "0:6:").
BlockerSpec parse_spec(std::string_view text);
std::string format_spec(const BlockerSpec& spec);

// Edges in realization order: spine edges first, then the diagonals by
// increasing direction.
std::vector<Edge> realize_edges(const BlockerSpec& spec, const Context& ctx);
EdgeSet realize(const BlockerSpec& spec, const Context& ctx);

// Every admissible spec, ordered by (r, t, epsilons).
std::vector<BlockerSpec> all_specs(const Context& ctx);

struct FormulaFamily {
  std::vector<EdgeSet> blockers;  // sorted, deduplicated
  std::vector<BlockerSpec> first_spec;  // one generating spec per blocker
  int spec_count = 0;
  int max_multiplicity = 0;  // largest number of specs realizing one blocker
};

FormulaFamily enumerate_formula_family(const Context& ctx);

struct CaterpillarReport {
  bool is_tree = false;
  bool is_noncrossing = false;
  bool is_caterpillar = false;
  std::optional<std::vector<Vertex>> boundary_spine;
  std::vector<int> direction_profile;  // sorted directions of all edges

  bool passes() const { return is_tree && is_noncrossing && is_caterpillar && boundary_spine.has_value(); }
};

CaterpillarReport validate_structure(const EdgeSet& s, const Context& ctx);

// Maximal runs of consecutive boundary edges in s, each as a vertex sequence
// v, v+1, ..., v+len (mod 2m).
std::vector<std::vector<Vertex>> boundary_chains(const EdgeSet& s, const Context& ctx);

// One edge per odd direction, a single boundary chain 0..j (after rotation),
// and the remaining diagonals, read by increasing direction, hang off
// interior chain vertices with weakly decreasing roots.
bool direction_sweep_check(const EdgeSet& s, const Context& ctx);

// Recovers the unique spec of a set that passes direction_sweep_check.
std::optional<BlockerSpec> spec_of(const EdgeSet& s, const Context& ctx);

}  // namespace cgblock
