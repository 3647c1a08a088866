#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "cgblock/geometry.hpp"

namespace cgblock {

// Largest m for which whole families are materialized in memory; larger
// orders are streaming-only.
inline constexpr int kMaxMaterializedM = 7;

struct SimplePath {
  std::vector<Vertex> vertices;

  std::vector<Edge> edges() const;
  std::size_t edge_count() const { return vertices.empty() ? 0 : vertices.size() - 1; }

  friend auto operator<=>(const SimplePath&, const SimplePath&) = default;
};

SimplePath reversed(const SimplePath& p);
// The lexicographically smaller of the two readings.
SimplePath canonical_reading(const SimplePath& p);

// Distinct valid vertices with pairwise noncrossing consecutive edges.
bool is_simple_path(const SimplePath& p, const Context& ctx);
// A simple path through all 2m vertices.
bool is_shp(const SimplePath& p, const Context& ctx);
// m pairwise vertex-disjoint, pairwise noncrossing edges.
bool is_spm(const EdgeSet& s, const Context& ctx);

EdgeSet path_edge_set(const SimplePath& p, const Context& ctx);

// Alternating sequence first, second, first+step, second-step, first+2*step,
// ... (labels in Z_2m) of the given length. Consecutive edges alternate
// between directions first+second and first+second+step.
SimplePath zigzag(Vertex first, Vertex second, int first_step, int count, const Context& ctx);

// Streaming enumerators. Callbacks receive structures in canonical order;
// returning false stops the enumeration.
using SpmVisitor = std::function<bool(const EdgeSet&)>;
using PathVisitor = std::function<bool(const SimplePath&)>;

void for_each_spm(const Context& ctx, const SpmVisitor& visit);
// Contiguous-arc enumerator: every prefix of a noncrossing Hamiltonian path
// on convex points covers an arc, so each step extends one end of the arc.
void for_each_shp(const Context& ctx, const PathVisitor& visit);
// Reference enumerator: depth-first search over all vertex orders with
// incremental crossing pruning.
void for_each_shp_dfs(const Context& ctx, const PathVisitor& visit);

std::vector<EdgeSet> enumerate_spm(const Context& ctx);
std::vector<SimplePath> enumerate_shp(const Context& ctx);
std::vector<SimplePath> enumerate_shp_dfs(const Context& ctx);

std::uint64_t count_spm(const Context& ctx);
std::uint64_t count_shp(const Context& ctx);

// Edges at positions 1, 3, ..., 2m-1 of a Hamiltonian path.
EdgeSet odd_position_matching(const SimplePath& p, const Context& ctx);

// m pairwise edge-disjoint SPMs: the odd direction classes D(1), D(3), ...
std::vector<EdgeSet> canonical_spm_family(const Context& ctx);
// m pairwise edge-disjoint SHPs realizing D(2i) u D(2i+1), 0 <= i < m.
std::vector<SimplePath> canonical_shp_family(const Context& ctx);

// The 2m Hamiltonian paths along the polygon boundary; path r omits the
// boundary edge [r-1, r].
std::vector<SimplePath> boundary_shps(const Context& ctx);

std::vector<EdgeSet> as_edge_sets(const std::vector<SimplePath>& paths, const Context& ctx);

}  // namespace cgblock
