#include "cgblock/enumeration.hpp"

#include <algorithm>

namespace cgblock {

std::vector<Edge> SimplePath::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) out.push_back(Edge::make(vertices[i], vertices[i + 1]));
  return out;
}

SimplePath reversed(const SimplePath& p) {
  return SimplePath{{p.vertices.rbegin(), p.vertices.rend()}};
}

SimplePath canonical_reading(const SimplePath& p) {
  auto r = reversed(p);
  return r < p ? r : p;
}

bool is_simple_path(const SimplePath& p, const Context& ctx) {
  std::vector<bool> seen(static_cast<std::size_t>(ctx.n()), false);
  for (Vertex v : p.vertices) {
    if (!ctx.valid_vertex(v) || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = true;
  }
  auto es = p.edges();
  return pairwise_noncrossing(es);
}

bool is_shp(const SimplePath& p, const Context& ctx) {
  return static_cast<int>(p.vertices.size()) == ctx.n() && is_simple_path(p, ctx);
}

bool is_spm(const EdgeSet& s, const Context& ctx) {
  if (static_cast<int>(s.size()) != ctx.m()) return false;
  auto es = s.edges(ctx);
  std::vector<bool> covered(static_cast<std::size_t>(ctx.n()), false);
  for (const auto& e : es) {
    if (covered[static_cast<std::size_t>(e.a)] || covered[static_cast<std::size_t>(e.b)]) return false;
    covered[static_cast<std::size_t>(e.a)] = covered[static_cast<std::size_t>(e.b)] = true;
  }
  return pairwise_noncrossing(es);
}

EdgeSet path_edge_set(const SimplePath& p, const Context& ctx) {
  auto es = p.edges();
  return EdgeSet(ctx, es);
}

SimplePath zigzag(Vertex first, Vertex second, int first_step, int count, const Context& ctx) {
  if (first_step != 1 && first_step != -1) throw DomainError("zig-zag step must be +1 or -1");
  SimplePath p;
  p.vertices.reserve(static_cast<std::size_t>(count));
  long long hi = first, lo = second;
  for (int i = 0; i < count; ++i) {
    if (i % 2 == 0) {
      p.vertices.push_back(ctx.wrap(hi));
      hi += first_step;
    } else {
      p.vertices.push_back(ctx.wrap(lo));
      lo -= first_step;
    }
  }
  return p;
}

namespace {

class SpmSearch {
 public:
  SpmSearch(const Context& ctx, const SpmVisitor& visit)
      : ctx_(ctx), visit_(visit), partner_(static_cast<std::size_t>(ctx.n()), -1) {}

  void run() { step(0); }

 private:
  // Pairs the smallest unmatched vertex with each admissible partner in
  // increasing order, which yields matchings in canonical order.
  bool step(int matched) {
    if (matched == ctx_.n()) {
      EdgeSet s(ctx_);
      for (const auto& e : chosen_) s.insert(ctx_, e);
      return visit_(s);
    }
    Vertex u = 0;
    while (partner_[static_cast<std::size_t>(u)] >= 0) ++u;
    for (Vertex w = u + 1; w < ctx_.n(); w += 2) {
      if (partner_[static_cast<std::size_t>(w)] >= 0) continue;
      Edge e{u, w};
      // Unmatched vertices strictly inside the arc (u, w) must pair among
      // themselves.
      int inside = 0;
      for (Vertex x = u + 1; x < w; ++x)
        if (partner_[static_cast<std::size_t>(x)] < 0) ++inside;
      if (inside % 2) continue;
      if (std::any_of(chosen_.begin(), chosen_.end(), [&](const Edge& f) { return crosses(e, f); })) continue;
      partner_[static_cast<std::size_t>(u)] = w;
      partner_[static_cast<std::size_t>(w)] = u;
      chosen_.push_back(e);
      bool go_on = step(matched + 2);
      chosen_.pop_back();
      partner_[static_cast<std::size_t>(u)] = partner_[static_cast<std::size_t>(w)] = -1;
      if (!go_on) return false;
    }
    return true;
  }

  const Context& ctx_;
  const SpmVisitor& visit_;
  std::vector<Vertex> partner_;
  std::vector<Edge> chosen_;
};

class ArcPathSearch {
 public:
  ArcPathSearch(const Context& ctx, const PathVisitor& visit) : ctx_(ctx), visit_(visit) {
    path_.vertices.reserve(static_cast<std::size_t>(ctx.n()));
  }

  void run() {
    for (Vertex s = 0; s < ctx_.n(); ++s) {
      path_.vertices.assign(1, s);
      if (!extend(s, s)) return;
    }
  }

 private:
  // The visited vertices form the arc lo, lo+1, ..., hi (mod 2m).
  bool extend(Vertex lo, Vertex hi) {
    if (static_cast<int>(path_.vertices.size()) == ctx_.n()) {
      if (reversed(path_) < path_) return true;
      return visit_(path_);
    }
    Vertex down = ctx_.wrap(lo - 1), up = ctx_.wrap(hi + 1);
    if (down == up) return descend(down, down, down);
    if (down < up) return descend(down, down, hi) && descend(up, lo, up);
    return descend(up, lo, up) && descend(down, down, hi);
  }

  bool descend(Vertex next, Vertex lo, Vertex hi) {
    path_.vertices.push_back(next);
    bool go_on = extend(lo, hi);
    path_.vertices.pop_back();
    return go_on;
  }

  const Context& ctx_;
  const PathVisitor& visit_;
  SimplePath path_;
};

class DfsPathSearch {
 public:
  DfsPathSearch(const Context& ctx, const PathVisitor& visit)
      : ctx_(ctx), visit_(visit), used_(static_cast<std::size_t>(ctx.n()), false) {}

  void run() {
    for (Vertex s = 0; s < ctx_.n(); ++s) {
      path_.vertices.assign(1, s);
      used_[static_cast<std::size_t>(s)] = true;
      bool go_on = extend();
      used_[static_cast<std::size_t>(s)] = false;
      if (!go_on) return;
    }
  }

 private:
  bool extend() {
    if (static_cast<int>(path_.vertices.size()) == ctx_.n()) {
      if (reversed(path_) < path_) return true;
      return visit_(path_);
    }
    Vertex last = path_.vertices.back();
    for (Vertex w = 0; w < ctx_.n(); ++w) {
      if (used_[static_cast<std::size_t>(w)]) continue;
      Edge e = Edge::make(last, w);
      bool ok = true;
      for (std::size_t i = 0; ok && i + 2 < path_.vertices.size(); ++i)
        ok = !crosses(e, Edge::make(path_.vertices[i], path_.vertices[i + 1]));
      if (!ok) continue;
      used_[static_cast<std::size_t>(w)] = true;
      path_.vertices.push_back(w);
      bool go_on = extend();
      path_.vertices.pop_back();
      used_[static_cast<std::size_t>(w)] = false;
      if (!go_on) return false;
    }
    return true;
  }

  const Context& ctx_;
  const PathVisitor& visit_;
  std::vector<bool> used_;
  SimplePath path_;
};

void require_materializable(const Context& ctx) {
  if (ctx.m() > kMaxMaterializedM)
    throw DomainError("families are materialized only up to m=" + std::to_string(kMaxMaterializedM) +
                      "; use the streaming enumerators for m=" + std::to_string(ctx.m()));
}

}  // namespace

void for_each_spm(const Context& ctx, const SpmVisitor& visit) { SpmSearch(ctx, visit).run(); }
void for_each_shp(const Context& ctx, const PathVisitor& visit) { ArcPathSearch(ctx, visit).run(); }
void for_each_shp_dfs(const Context& ctx, const PathVisitor& visit) { DfsPathSearch(ctx, visit).run(); }

std::vector<EdgeSet> enumerate_spm(const Context& ctx) {
  require_materializable(ctx);
  std::vector<EdgeSet> out;
  for_each_spm(ctx, [&](const EdgeSet& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

std::vector<SimplePath> enumerate_shp(const Context& ctx) {
  require_materializable(ctx);
  std::vector<SimplePath> out;
  for_each_shp(ctx, [&](const SimplePath& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

std::vector<SimplePath> enumerate_shp_dfs(const Context& ctx) {
  require_materializable(ctx);
  std::vector<SimplePath> out;
  for_each_shp_dfs(ctx, [&](const SimplePath& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

std::uint64_t count_spm(const Context& ctx) {
  std::uint64_t c = 0;
  for_each_spm(ctx, [&](const EdgeSet&) { return ++c, true; });
  return c;
}

std::uint64_t count_shp(const Context& ctx) {
  std::uint64_t c = 0;
  for_each_shp(ctx, [&](const SimplePath&) { return ++c, true; });
  return c;
}

EdgeSet odd_position_matching(const SimplePath& p, const Context& ctx) {
  if (!is_shp(p, ctx)) throw DomainError("odd_position_matching needs a simple Hamiltonian path");
  EdgeSet s(ctx);
  for (std::size_t i = 0; i + 1 < p.vertices.size(); i += 2) s.insert(ctx, Edge::make(p.vertices[i], p.vertices[i + 1]));
  return s;
}

std::vector<EdgeSet> canonical_spm_family(const Context& ctx) {
  std::vector<EdgeSet> out;
  for (int i = 0; i < ctx.m(); ++i) out.push_back(direction_class(2 * i + 1, ctx));
  return out;
}

std::vector<SimplePath> canonical_shp_family(const Context& ctx) {
  // i, i+1, i-1, i+2, ... alternates directions 2i+1 and 2i.
  std::vector<SimplePath> out;
  for (int i = 0; i < ctx.m(); ++i) out.push_back(canonical_reading(zigzag(i, i + 1, -1, ctx.n(), ctx)));
  return out;
}

std::vector<SimplePath> boundary_shps(const Context& ctx) {
  std::vector<SimplePath> out;
  for (Vertex r = 0; r < ctx.n(); ++r) {
    SimplePath p;
    for (int k = 0; k < ctx.n(); ++k) p.vertices.push_back(ctx.wrap(r + k));
    out.push_back(canonical_reading(p));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EdgeSet> as_edge_sets(const std::vector<SimplePath>& paths, const Context& ctx) {
  std::vector<EdgeSet> out;
  out.reserve(paths.size());
  for (const auto& p : paths) out.push_back(path_edge_set(p, ctx));
  return out;
}

}  // namespace cgblock
