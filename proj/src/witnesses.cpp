#include "cgblock/witnesses.hpp"

#include <algorithm>
#include <set>

namespace cgblock {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

std::string str(int v) { return std::to_string(v); }

void append(SimplePath& dst, const SimplePath& src, std::size_t skip_first = 0) {
  dst.vertices.insert(dst.vertices.end(), src.vertices.begin() + static_cast<std::ptrdiff_t>(skip_first),
                      src.vertices.end());
}

}  // namespace

void validate(const Prop1Params& p) {
  require(p.m >= 3, "prop1 needs m >= 3 (got m=" + str(p.m) + ")");
  require(p.k >= 2 && p.k <= p.m - 1, "prop1 needs 2 <= k <= m-1 (got k=" + str(p.k) + ")");
  require(p.i >= 1 && p.i <= p.k - 1, "prop1 needs 1 <= i <= k-1 (got i=" + str(p.i) + ")");
}

void validate(const P0Params& p) {
  require(p.m >= 2, "p0 needs m >= 2");
  require(p.j >= 2 && p.j <= p.m, "p0 needs 2 <= j <= m (got j=" + str(p.j) + ")");
  require(p.j <= p.s && p.s < p.t && p.t < 2 * p.m,
          "p0 needs j <= s < t < 2m (got s=" + str(p.s) + ", t=" + str(p.t) + ")");
  require((p.s + p.t) % 2 == 1, "p0 needs s and t of different parity");
  require(p.t - p.s >= 3, "p0 needs [s,t] to be a diagonal (t-s >= 3)");
}

void validate(const P1Params& p) {
  const int n = 2 * p.m;
  require(p.m >= 2, "p1 needs m >= 2");
  require(p.j >= 2 && p.j <= p.m, "p1 needs 2 <= j <= m (got j=" + str(p.j) + ")");
  require(0 < p.alpha && p.alpha < p.alpha2 && p.alpha2 < p.j, "p1 needs 0 < alpha < alpha' < j");
  require(p.j < p.beta && p.beta < n, "p1 needs j < beta < 2m");
  require(p.j < p.beta2 && p.beta2 < n, "p1 needs j < beta' < 2m");
  require(p.beta - p.beta2 <= p.alpha2 - p.alpha, "p1 needs beta - beta' <= alpha' - alpha");
  require((p.alpha + p.beta) % 2 == 1 && (p.alpha2 + p.beta2) % 2 == 1, "p1 needs odd directions");
  require(p.alpha + p.beta < p.alpha2 + p.beta2, "p1 needs alpha + beta < alpha' + beta'");
  require(p.alpha2 + p.beta2 < n, "p1 needs alpha' + beta' < 2m");
  require(p.beta2 + p.alpha2 - p.alpha <= n - 2, "p1 needs beta' + alpha' - alpha <= 2m-2");
}

Edge prop1_g(const Context& ctx) { return ctx.edge(0, 1); }
Edge prop1_f(const Prop1Params& p, const Context& ctx) { return ctx.edge(p.m + p.k - 1, p.m + p.k); }
Edge prop1_h(const Context& ctx) { return ctx.edge(ctx.n() - 1, 0); }

Prop1Batches prop1_batches(const Prop1Params& p, const Context& ctx) {
  validate(p);
  const int m = p.m, i = p.i;
  Prop1Batches out;
  for (int q = 1; q <= i; ++q) out.a.push_back(ctx.edge(i - q, i + q));
  for (int q = 0; q < i; ++q) out.b.push_back(ctx.edge(i - q, i + 1 + q));
  out.c.push_back(prop1_h(ctx));
  for (int q = 0; q < m - 1 - i; ++q) out.d.push_back(ctx.edge(2 * m - 1 - q, 2 * i + 1 + q));
  for (int q = 0; q < m - 1 - i; ++q) out.e.push_back(ctx.edge(2 * m - 2 - q, 2 * i + 1 + q));
  return out;
}

SimplePath build_prop1_path(const Prop1Params& p, const Context& ctx) {
  validate(p);
  if (ctx.m() != p.m) throw DomainError("parameter m does not match context");
  const int m = p.m, i = p.i;
  // B u A: i, i+1, i-1, i+2, ..., 2i, 0; then h; then D u E: 2m-1, 2i+1, 2m-2, ..., m+i.
  SimplePath path = zigzag(i, i + 1, -1, 2 * i + 1, ctx);
  append(path, zigzag(2 * m - 1, 2 * i + 1, -1, 2 * m - 1 - 2 * i, ctx));
  return path;
}

SimplePath build_p0(const P0Params& p, const Context& ctx) {
  validate(p);
  if (ctx.m() != p.m) throw DomainError("parameter m does not match context");
  SimplePath path;
  for (int v = p.s; v <= p.t; ++v) path.vertices.push_back(v);
  append(path, zigzag(p.t, p.s - 1, +1, ctx.n() - (p.t - p.s), ctx), 1);
  return path;
}

SimplePath build_p1(const P1Params& p, const Context& ctx) {
  validate(p);
  if (ctx.m() != p.m) throw DomainError("parameter m does not match context");
  const int turn = p.beta2 + p.alpha2 - p.alpha;
  SimplePath path = reversed(zigzag(p.beta, p.alpha + 1, -1, p.beta - p.alpha, ctx));
  for (int v = p.beta + 1; v <= turn; ++v) path.vertices.push_back(v);
  append(path, zigzag(turn, p.alpha, +1, ctx.n() - turn + p.alpha + 1, ctx), 1);
  return path;
}

Prop1FamilyCheck check_prop1_family(int m, int k) {
  Context ctx(m);
  Prop1FamilyCheck chk{true, true, true, true, true};
  const Edge g = prop1_g(ctx), h = prop1_h(ctx);
  const Edge f = prop1_f({m, k, 1}, ctx);
  std::vector<std::set<Edge>> odd_edges;
  for (int i = 1; i <= k - 1; ++i) {
    auto path = build_prop1_path({m, k, i}, ctx);
    if (!is_shp(path, ctx)) chk.all_shp = false;
    auto es = path.edges();
    auto has = [&](Edge x) { return std::find(es.begin(), es.end(), x) != es.end(); };
    if (has(f) || has(g) || !has(h)) chk.avoid_f_g_contain_h = false;
    std::set<Edge> odd;
    for (const auto& e : es) {
      int dir = direction(e, ctx);
      if (order(e, ctx) % 2 == 1) {
        if (e != h) {
          odd.insert(e);
          if (dir != ctx.wrap(2 * i + 1) && dir != ctx.wrap(2 * i - 1)) chk.odd_order_directions = false;
        }
      } else if (dir != ctx.wrap(2 * i)) {
        chk.even_order_directions = false;
      }
    }
    for (const auto& prev : odd_edges)
      for (const auto& e : odd)
        if (prev.count(e)) chk.no_shared_odd_order_edge = false;
    odd_edges.push_back(std::move(odd));
  }
  return chk;
}

std::vector<Edge> odd_edges_not_excused(const SimplePath& p, const std::vector<Edge>& diagonals, int j,
                                        const Context& ctx) {
  std::vector<Edge> out;
  for (const auto& e : p.edges()) {
    int dir = direction(e, ctx);
    if (dir % 2 == 0) continue;
    bool excused = false;
    for (const auto& d : diagonals)
      if (dir == direction(d, ctx) && e != d) excused = true;
    if (is_boundary(e, ctx)) {
      // Boundary edge [v, v+1]; the spine consists of v = 0, ..., j-1.
      Vertex v = (e.b == e.a + 1) ? e.a : e.b;
      if (v >= j) excused = true;
    }
    if (!excused) out.push_back(e);
  }
  return out;
}

SimplePath reflect_path(const SimplePath& p, int axis, const Context& ctx) {
  SimplePath out;
  for (Vertex v : p.vertices) out.vertices.push_back(ctx.wrap(axis - v));
  return out;
}

WitnessChecks check_witness(const SimplePath& p, std::vector<Edge> avoids, std::vector<Edge> contains,
                            const Context& ctx) {
  WitnessChecks chk;
  chk.is_shp = is_shp(p, ctx);
  auto es = p.edges();
  auto has = [&](Edge x) { return std::find(es.begin(), es.end(), x) != es.end(); };
  chk.passed = chk.is_shp && std::none_of(avoids.begin(), avoids.end(), has) &&
               std::all_of(contains.begin(), contains.end(), has);
  chk.avoids = std::move(avoids);
  chk.contains = std::move(contains);
  return chk;
}

}  // namespace cgblock
