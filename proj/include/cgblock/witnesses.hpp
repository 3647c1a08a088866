#pragma once

// Explicit simple Hamiltonian paths that certify a candidate edge set is not
// a blocker for H. All three constructions are concatenations of boundary
// runs and zig-zags (see zigzag()).

#include <vector>

#include "cgblock/enumeration.hpp"
#include "cgblock/geometry.hpp"

namespace cgblock {

// Paths P_i for 2 <= k <= m-1, 1 <= i <= k-1, built around the boundary
// edges g = [0,1], f = [m+k-1, m+k] and h = [2m-1, 0].
struct Prop1Params {
  int m = 0;
  int k = 0;
  int i = 0;
};

struct Prop1Batches {
  std::vector<Edge> a;  // direction 2i
  std::vector<Edge> b;  // direction 2i+1
  std::vector<Edge> c;  // {h}
  std::vector<Edge> d;  // direction 2i
  std::vector<Edge> e;  // direction 2i-1
};

// Boundary path <s, ..., t> followed by the zig-zag t, s-1, t+1, s-2, ...
struct P0Params {
  int m = 0;
  int j = 0;
  int s = 0;
  int t = 0;
};

// Backwards zig-zag over <alpha+1, ..., beta>, boundary run
// <beta, ..., beta'+alpha'-alpha>, zig-zag back through 0 to alpha.
struct P1Params {
  int m = 0;
  int j = 0;
  int alpha = 0;
  int alpha2 = 0;  // alpha'
  int beta = 0;
  int beta2 = 0;  // beta'
};

void validate(const Prop1Params& p);
void validate(const P0Params& p);
void validate(const P1Params& p);

Edge prop1_g(const Context& ctx);
Edge prop1_f(const Prop1Params& p, const Context& ctx);
Edge prop1_h(const Context& ctx);

Prop1Batches prop1_batches(const Prop1Params& p, const Context& ctx);

// The path runs from i to m+i.
SimplePath build_prop1_path(const Prop1Params& p, const Context& ctx);
SimplePath build_p0(const P0Params& p, const Context& ctx);
SimplePath build_p1(const P1Params& p, const Context& ctx);

// The four family conditions over P_1, ..., P_{k-1}.
struct Prop1FamilyCheck {
  bool all_shp = false;
  bool avoid_f_g_contain_h = false;
  bool no_shared_odd_order_edge = false;  // other than h
  bool odd_order_directions = false;       // 2i+1 or 2i-1 (h excepted)
  bool even_order_directions = false;      // 2i

  bool passes() const {
    return all_shp && avoid_f_g_contain_h && no_shared_odd_order_edge && odd_order_directions &&
           even_order_directions;
  }
};

Prop1FamilyCheck check_prop1_family(int m, int k);

// Odd-direction edges of a path that are neither parallel to `diagonal` nor
// boundary edges outside the spine <0, ..., j>. Empty means any
// one-edge-per-odd-direction set containing `diagonal` whose boundary edges
// are exactly the spine's is avoided on those edges.
std::vector<Edge> odd_edges_not_excused(const SimplePath& p, const std::vector<Edge>& diagonals, int j,
                                        const Context& ctx);

SimplePath reflect_path(const SimplePath& p, int axis, const Context& ctx);

// Outcome of the built-in checks attached to each witness.
struct WitnessChecks {
  bool is_shp = false;
  std::vector<Edge> avoids;
  std::vector<Edge> contains;
  bool passed = false;
};

WitnessChecks check_witness(const SimplePath& p, std::vector<Edge> avoids, std::vector<Edge> contains,
                            const Context& ctx);

}  // namespace cgblock
