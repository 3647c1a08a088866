#include "cgblock/blocker_formula.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <map>

namespace cgblock {

void validate_spec(const BlockerSpec& spec, const Context& ctx) {
  const int m = ctx.m();
  if (spec.r < 0 || spec.r >= ctx.n())
    throw DomainError("rotation r=" + std::to_string(spec.r) + " outside [0," + std::to_string(ctx.n()) + ")");
  if (spec.t < 2 || spec.t > m)
    throw DomainError("spine length t=" + std::to_string(spec.t) + " outside [2," + std::to_string(m) + "]");
  if (static_cast<int>(spec.epsilons.size()) != m - spec.t)
    throw DomainError("expected " + std::to_string(m - spec.t) + " epsilons, got " +
                      std::to_string(spec.epsilons.size()));
  for (std::size_t k = 0; k < spec.epsilons.size(); ++k) {
    int e = spec.epsilons[k];
    if (e < 1 || e > m - 2)
      throw DomainError("epsilon " + std::to_string(e) + " outside [1," + std::to_string(m - 2) + "]");
    if (k > 0 && e <= spec.epsilons[k - 1]) throw DomainError("epsilons must be strictly increasing");
  }
}

BlockerSpec parse_spec(std::string_view text) {
  auto bad = [&] { return DomainError("malformed spec '" + std::string(text) + "' (expected r:t:e1,e2,...)"); };
  auto num = [&](std::string_view t) {
    int v = 0;
    auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc{} || p != t.data() + t.size()) throw bad();
    return v;
  };
  auto c1 = text.find(':');
  if (c1 == std::string_view::npos) throw bad();
  auto c2 = text.find(':', c1 + 1);
  BlockerSpec spec;
  spec.r = num(text.substr(0, c1));
  if (c2 == std::string_view::npos) {
    spec.t = num(text.substr(c1 + 1));
    return spec;
  }
  spec.t = num(text.substr(c1 + 1, c2 - c1 - 1));
  auto rest = text.substr(c2 + 1);
  while (!rest.empty()) {
    auto comma = rest.find(',');
    spec.epsilons.push_back(num(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return spec;
}

std::string format_spec(const BlockerSpec& spec) {
  std::string out = std::to_string(spec.r) + ":" + std::to_string(spec.t) + ":";
  for (std::size_t k = 0; k < spec.epsilons.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(spec.epsilons[k]);
  }
  return out;
}

std::vector<Edge> realize_edges(const BlockerSpec& spec, const Context& ctx) {
  validate_spec(spec, ctx);
  const int t = spec.t;
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(ctx.m()));
  // Unrotated labels stay inside [0, 2m-2]; the rotation is applied last.
  for (int i = 1; i <= t; ++i) out.push_back(ctx.edge(i - 1 + spec.r, i + spec.r));
  for (int j = 1; j <= ctx.m() - t; ++j) {
    int eps = spec.epsilons[static_cast<std::size_t>(j - 1)];
    out.push_back(ctx.edge(t + j - 1 - eps + spec.r, t + j + eps + spec.r));
  }
  return out;
}

EdgeSet realize(const BlockerSpec& spec, const Context& ctx) {
  auto es = realize_edges(spec, ctx);
  return EdgeSet(ctx, es);
}

namespace {

// k-subsets of [lo, hi] in lexicographic order.
void for_each_combination(int lo, int hi, int k, std::vector<int>& cur, const auto& visit) {
  if (static_cast<int>(cur.size()) == k) {
    visit(cur);
    return;
  }
  int start = cur.empty() ? lo : cur.back() + 1;
  int remaining = k - static_cast<int>(cur.size());
  for (int v = start; v + remaining - 1 <= hi; ++v) {
    cur.push_back(v);
    for_each_combination(lo, hi, k, cur, visit);
    cur.pop_back();
  }
}

}  // namespace

std::vector<BlockerSpec> all_specs(const Context& ctx) {
  std::vector<BlockerSpec> out;
  const int m = ctx.m();
  for (int r = 0; r < ctx.n(); ++r) {
    for (int t = 2; t <= m; ++t) {
      std::vector<int> cur;
      for_each_combination(1, m - 2, m - t, cur, [&](const std::vector<int>& eps) {
        out.push_back(BlockerSpec{r, t, eps});
      });
    }
  }
  return out;
}

FormulaFamily enumerate_formula_family(const Context& ctx) {
  struct Entry {
    EdgeSet set;
    BlockerSpec spec;
    int count = 0;
  };
  std::map<std::vector<int>, Entry> by_key;
  FormulaFamily fam;
  for (const auto& spec : all_specs(ctx)) {
    auto s = realize(spec, ctx);
    auto& entry = by_key[s.indices()];
    if (entry.count++ == 0) {
      entry.set = s;
      entry.spec = spec;
    }
    ++fam.spec_count;
  }
  for (auto& [key, entry] : by_key) {
    fam.blockers.push_back(entry.set);
    fam.first_spec.push_back(entry.spec);
    fam.max_multiplicity = std::max(fam.max_multiplicity, entry.count);
  }
  return fam;
}

std::vector<std::vector<Vertex>> boundary_chains(const EdgeSet& s, const Context& ctx) {
  const int n = ctx.n();
  std::vector<bool> has(static_cast<std::size_t>(n), false);  // has[v]: edge [v, v+1]
  int total = 0;
  for (const auto& e : s.edges(ctx)) {
    if (!is_boundary(e, ctx)) continue;
    Vertex v = (e.b == e.a + 1) ? e.a : e.b;  // [2m-1, 0] starts at 2m-1
    has[static_cast<std::size_t>(v)] = true;
    ++total;
  }
  std::vector<std::vector<Vertex>> chains;
  if (total == n) {
    std::vector<Vertex> cycle;
    for (int k = 0; k <= n; ++k) cycle.push_back(ctx.wrap(k));
    chains.push_back(cycle);
    return chains;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (!has[static_cast<std::size_t>(v)] || has[static_cast<std::size_t>(ctx.wrap(v - 1))]) continue;
    std::vector<Vertex> chain{v};
    Vertex cur = v;
    while (has[static_cast<std::size_t>(cur)]) {
      cur = ctx.wrap(cur + 1);
      chain.push_back(cur);
    }
    chains.push_back(std::move(chain));
  }
  return chains;
}

CaterpillarReport validate_structure(const EdgeSet& s, const Context& ctx) {
  CaterpillarReport rep;
  auto es = s.edges(ctx);
  for (const auto& e : es) rep.direction_profile.push_back(direction(e, ctx));
  std::sort(rep.direction_profile.begin(), rep.direction_profile.end());
  rep.is_noncrossing = pairwise_noncrossing(es);
  if (es.empty()) return rep;

  const auto n = static_cast<std::size_t>(ctx.n());
  std::vector<std::vector<Vertex>> adj(n);
  for (const auto& e : es) {
    adj[static_cast<std::size_t>(e.a)].push_back(e.b);
    adj[static_cast<std::size_t>(e.b)].push_back(e.a);
  }
  std::vector<Vertex> verts;
  for (Vertex v = 0; v < ctx.n(); ++v)
    if (!adj[static_cast<std::size_t>(v)].empty()) verts.push_back(v);

  // Breadth-first distances from src; unreachable vertices stay -1.
  auto bfs = [&](Vertex src) {
    std::vector<int> dist(n, -1);
    std::deque<Vertex> q{src};
    dist[static_cast<std::size_t>(src)] = 0;
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop_front();
      for (Vertex w : adj[static_cast<std::size_t>(u)])
        if (dist[static_cast<std::size_t>(w)] < 0) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
          q.push_back(w);
        }
    }
    return dist;
  };

  auto d0 = bfs(verts.front());
  bool connected = std::all_of(verts.begin(), verts.end(), [&](Vertex v) { return d0[static_cast<std::size_t>(v)] >= 0; });
  rep.is_tree = connected && es.size() + 1 == verts.size();
  if (!rep.is_tree) return rep;

  // Caterpillar: the non-leaf vertices induce a path (or nothing).
  rep.is_caterpillar = true;
  for (Vertex v : verts) {
    if (adj[static_cast<std::size_t>(v)].size() <= 1) continue;
    int inner = 0;
    for (Vertex w : adj[static_cast<std::size_t>(v)])
      if (adj[static_cast<std::size_t>(w)].size() > 1) ++inner;
    if (inner > 2) rep.is_caterpillar = false;
  }

  Vertex far = verts.front();
  for (Vertex v : verts)
    if (d0[static_cast<std::size_t>(v)] > d0[static_cast<std::size_t>(far)]) far = v;
  auto d1 = bfs(far);
  int diameter = 0;
  for (Vertex v : verts) diameter = std::max(diameter, d1[static_cast<std::size_t>(v)]);

  // A boundary sub-path of length equal to the diameter is a longest path;
  // it is necessarily a whole maximal boundary chain.
  for (auto& chain : boundary_chains(s, ctx)) {
    if (static_cast<int>(chain.size()) - 1 == diameter) {
      rep.boundary_spine = chain;
      break;
    }
  }
  return rep;
}

namespace {

struct SweepShape {
  Vertex chain_start = 0;
  int chain_length = 0;
  std::vector<int> roots;  // relative to chain_start, by increasing direction
};

std::optional<SweepShape> sweep_shape(const EdgeSet& s, const Context& ctx) {
  const int m = ctx.m(), n = ctx.n();
  if (static_cast<int>(s.size()) != m) return std::nullopt;
  auto es = s.edges(ctx);
  std::vector<int> per_dir(static_cast<std::size_t>(n), 0);
  for (const auto& e : es) ++per_dir[static_cast<std::size_t>(direction(e, ctx))];
  for (int k = 0; k < n; ++k)
    if (per_dir[static_cast<std::size_t>(k)] != (k % 2 ? 1 : 0)) return std::nullopt;

  auto chains = boundary_chains(s, ctx);
  if (chains.size() != 1) return std::nullopt;
  SweepShape shape;
  shape.chain_start = chains.front().front();
  shape.chain_length = static_cast<int>(chains.front().size()) - 1;
  const int j = shape.chain_length;
  if (j < 2 || j > m) return std::nullopt;

  std::vector<std::pair<int, int>> dir_root;
  for (const auto& e : es) {
    if (is_boundary(e, ctx)) continue;
    int a = ctx.wrap(e.a - shape.chain_start), b = ctx.wrap(e.b - shape.chain_start);
    if (a > b) std::swap(a, b);
    bool a_interior = a >= 1 && a <= j - 1;
    bool b_outside = b >= j + 1 && b <= n - 1;
    if (!a_interior || !b_outside) return std::nullopt;
    dir_root.emplace_back(a + b, a);
  }
  std::sort(dir_root.begin(), dir_root.end());
  for (std::size_t k = 0; k < dir_root.size(); ++k) {
    if (dir_root[k].first != 2 * (j + static_cast<int>(k)) + 1) return std::nullopt;
    if (k > 0 && dir_root[k].second > dir_root[k - 1].second) return std::nullopt;
    shape.roots.push_back(dir_root[k].second);
  }
  return shape;
}

}  // namespace

bool direction_sweep_check(const EdgeSet& s, const Context& ctx) { return sweep_shape(s, ctx).has_value(); }

std::optional<BlockerSpec> spec_of(const EdgeSet& s, const Context& ctx) {
  auto shape = sweep_shape(s, ctx);
  if (!shape) return std::nullopt;
  BlockerSpec spec{shape->chain_start, shape->chain_length, {}};
  for (std::size_t k = 0; k < shape->roots.size(); ++k)
    spec.epsilons.push_back(spec.t + static_cast<int>(k) - shape->roots[k]);
  validate_spec(spec, ctx);
  return spec;
}

}  // namespace cgblock
