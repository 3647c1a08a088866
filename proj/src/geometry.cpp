#include "cgblock/geometry.hpp"

#include <algorithm>
#include <charconv>

namespace cgblock {

Context::Context(int m) : m_(m), n_(2 * m) {
  if (m < 2) throw DomainError("m must be at least 2 (got " + std::to_string(m) + ")");
  if (m > 512) throw DomainError("m is too large (got " + std::to_string(m) + ")");
  index_table_.assign(static_cast<std::size_t>(n_ * n_), -1);
  for (Vertex a = 0; a < n_; ++a) {
    for (Vertex b = a + 1; b < n_; ++b) {
      int idx = static_cast<int>(edges_.size());
      edges_.push_back({a, b});
      index_table_[static_cast<std::size_t>(a * n_ + b)] = idx;
      index_table_[static_cast<std::size_t>(b * n_ + a)] = idx;
    }
  }
  classes_.resize(static_cast<std::size_t>(n_));
  for (int i = 0; i < edge_count(); ++i)
    classes_[static_cast<std::size_t>(direction(edges_[static_cast<std::size_t>(i)], *this))].push_back(i);
}

int Context::index_of(Edge e) const {
  if (!valid_vertex(e.a) || !valid_vertex(e.b) || e.a == e.b)
    throw DomainError("invalid edge " + format_edge(e) + " for m=" + std::to_string(m_));
  return index_table_[static_cast<std::size_t>(e.a * n_ + e.b)];
}

Edge Context::edge(long long u, long long v) const {
  Vertex x = wrap(u), y = wrap(v);
  if (x == y) throw DomainError("degenerate edge at vertex " + std::to_string(x));
  return Edge::make(x, y);
}

int direction(Edge e, const Context& ctx) { return ctx.wrap(e.a + e.b); }

int order(Edge e, const Context& ctx) {
  int k = ctx.wrap(e.b - e.a);
  return std::min(k, ctx.n() - k);
}

bool crosses(Edge e1, Edge e2) {
  Edge x = Edge::make(e1.a, e1.b), y = Edge::make(e2.a, e2.b);
  if (x.a == y.a || x.a == y.b || x.b == y.a || x.b == y.b) return false;
  bool c_in = x.a < y.a && y.a < x.b;
  bool d_in = x.a < y.b && y.b < x.b;
  return c_in != d_in;
}

EdgeSet::EdgeSet(const Context& ctx, std::span<const Edge> edges) : EdgeSet(ctx) {
  for (const auto& e : edges) insert(ctx, e);
}

std::vector<Edge> EdgeSet::edges(const Context& ctx) const {
  std::vector<Edge> out;
  bits_.for_each([&](std::size_t i) { out.push_back(ctx.edge_at(static_cast<int>(i))); });
  return out;
}

EdgeSet operator|(EdgeSet x, const EdgeSet& y) { return x |= y; }
EdgeSet operator&(EdgeSet x, const EdgeSet& y) { return x &= y; }

EdgeSet direction_class(int k, const Context& ctx) {
  if (k < 0 || k >= ctx.n())
    throw DomainError("direction " + std::to_string(k) + " out of range [0," + std::to_string(ctx.n()) + ")");
  EdgeSet s(ctx);
  for (int i : ctx.class_indices(k)) s.insert_index(i);
  return s;
}

EdgeSet full_edge_set(const Context& ctx) {
  EdgeSet s(ctx);
  for (int i = 0; i < ctx.edge_count(); ++i) s.insert_index(i);
  return s;
}

EdgeSet rotate(const EdgeSet& s, int r, const Context& ctx) {
  EdgeSet out(ctx);
  for (const auto& e : s.edges(ctx)) out.insert(ctx, ctx.edge(e.a + r, e.b + r));
  return out;
}

EdgeSet reflect(const EdgeSet& s, int axis, const Context& ctx) {
  EdgeSet out(ctx);
  for (const auto& e : s.edges(ctx)) out.insert(ctx, ctx.edge(axis - e.a, axis - e.b));
  return out;
}

bool pairwise_noncrossing(std::span<const Edge> edges) {
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j)
      if (crosses(edges[i], edges[j])) return false;
  return true;
}

std::string format_edge(Edge e) { return std::to_string(e.a) + "-" + std::to_string(e.b); }

std::string format_edges(std::span<const Edge> edges) {
  std::string out;
  for (const auto& e : edges) {
    if (!out.empty()) out += ',';
    out += format_edge(e);
  }
  return out;
}

std::string format_edge_set(const EdgeSet& s, const Context& ctx) {
  auto es = s.edges(ctx);
  return format_edges(es);
}

namespace {

int parse_label(std::string_view t, std::string_view whole) {
  while (!t.empty() && t.front() == ' ') t.remove_prefix(1);
  while (!t.empty() && t.back() == ' ') t.remove_suffix(1);
  int v = 0;
  auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc{} || p != t.data() + t.size())
    throw DomainError("malformed edge '" + std::string(whole) + "'");
  return v;
}

}  // namespace

Edge parse_edge(std::string_view text, const Context& ctx) {
  auto dash = text.find('-');
  if (dash == std::string_view::npos) throw DomainError("malformed edge '" + std::string(text) + "'");
  int a = parse_label(text.substr(0, dash), text);
  int b = parse_label(text.substr(dash + 1), text);
  if (!ctx.valid_vertex(a) || !ctx.valid_vertex(b) || a == b)
    throw DomainError("edge '" + std::string(text) + "' is not an edge of CK(" + std::to_string(ctx.n()) + ")");
  return Edge::make(a, b);
}

std::vector<Edge> parse_edge_list(std::string_view text, const Context& ctx) {
  std::vector<Edge> out;
  while (!text.empty()) {
    auto comma = text.find(',');
    auto tok = text.substr(0, comma);
    out.push_back(parse_edge(tok, ctx));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

EdgeSet parse_edge_set(std::string_view text, const Context& ctx) {
  auto edges = parse_edge_list(text, ctx);
  EdgeSet s(ctx, edges);
  if (s.size() != edges.size()) throw DomainError("duplicate edge in '" + std::string(text) + "'");
  return s;
}

}  // namespace cgblock
