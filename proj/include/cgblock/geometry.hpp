#pragma once

// The complete convex geometric graph CK(2m). Vertices are elements of Z_2m
// placed cyclically on a convex polygon; edges carry a direction (i+j mod 2m)
// and an order (cyclic gap). Everything here is combinatorial: crossings are
// decided by interleaving of labels, never by coordinates.

#include <compare>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cgblock/bitset.hpp"

namespace cgblock {

// Raised for invalid parameters and malformed input across the library.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Vertex = int;

// Unordered vertex pair in canonical form a < b.
struct Edge {
  Vertex a = 0;
  Vertex b = 0;

  static Edge make(Vertex u, Vertex v) { return u < v ? Edge{u, v} : Edge{v, u}; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class EdgeSet;

class Context {
 public:
  explicit Context(int m);

  int m() const { return m_; }
  int n() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  Vertex wrap(long long v) const {
    long long r = v % n_;
    return static_cast<Vertex>(r < 0 ? r + n_ : r);
  }

  bool valid_vertex(Vertex v) const { return v >= 0 && v < n_; }

  // Canonical dense index: lexicographic position of (a, b) among all pairs.
  int index_of(Edge e) const;
  const Edge& edge_at(int index) const { return edges_[static_cast<std::size_t>(index)]; }
  std::span<const Edge> all_edges() const { return edges_; }

  // Edge from labels given in any order and any residue.
  Edge edge(long long u, long long v) const;

  const std::vector<int>& class_indices(int k) const { return classes_[static_cast<std::size_t>(k)]; }

 private:
  int m_;
  int n_;
  std::vector<Edge> edges_;
  std::vector<int> index_table_;
  std::vector<std::vector<int>> classes_;
};

int direction(Edge e, const Context& ctx);
int order(Edge e, const Context& ctx);
inline bool is_boundary(Edge e, const Context& ctx) { return order(e, ctx) == 1; }
inline bool parallel(Edge e, Edge f, const Context& ctx) { return direction(e, ctx) == direction(f, ctx); }

// True iff the two segments meet in an interior point. Edges sharing an
// endpoint never cross.
bool crosses(Edge e1, Edge e2);

// Membership over the dense edge index space of one Context.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(const Context& ctx) : bits_(static_cast<std::size_t>(ctx.edge_count())) {}
  EdgeSet(const Context& ctx, std::span<const Edge> edges);

  void insert(const Context& ctx, Edge e) { bits_.set(static_cast<std::size_t>(ctx.index_of(e))); }
  void erase(const Context& ctx, Edge e) { bits_.reset(static_cast<std::size_t>(ctx.index_of(e))); }
  bool contains(const Context& ctx, Edge e) const { return bits_.test(static_cast<std::size_t>(ctx.index_of(e))); }
  void insert_index(int i) { bits_.set(static_cast<std::size_t>(i)); }
  void erase_index(int i) { bits_.reset(static_cast<std::size_t>(i)); }
  bool contains_index(int i) const { return bits_.test(static_cast<std::size_t>(i)); }

  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }

  bool intersects(const EdgeSet& o) const { return bits_.intersects(o.bits_); }
  bool is_subset_of(const EdgeSet& o) const { return bits_.is_subset_of(o.bits_); }
  EdgeSet& operator|=(const EdgeSet& o) { bits_ |= o.bits_; return *this; }
  EdgeSet& operator&=(const EdgeSet& o) { bits_ &= o.bits_; return *this; }

  // Indices in increasing (canonical) order.
  std::vector<int> indices() const { return bits_.to_indices(); }
  std::vector<Edge> edges(const Context& ctx) const;

  const DynamicBitset& bits() const { return bits_; }

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;
  // Lexicographic order of the sorted index lists.
  friend bool operator<(const EdgeSet& x, const EdgeSet& y) { return x.indices() < y.indices(); }

 private:
  DynamicBitset bits_;
};

EdgeSet operator|(EdgeSet x, const EdgeSet& y);
EdgeSet operator&(EdgeSet x, const EdgeSet& y);

EdgeSet direction_class(int k, const Context& ctx);
EdgeSet full_edge_set(const Context& ctx);

// Image under v -> v + r.
EdgeSet rotate(const EdgeSet& s, int r, const Context& ctx);
// Image under v -> axis - v.
EdgeSet reflect(const EdgeSet& s, int axis, const Context& ctx);

bool pairwise_noncrossing(std::span<const Edge> edges);

// Text forms: "a-b" and "a-b,c-d,..." (sets are printed in canonical order).
std::string format_edge(Edge e);
std::string format_edges(std::span<const Edge> edges);
std::string format_edge_set(const EdgeSet& s, const Context& ctx);
Edge parse_edge(std::string_view text, const Context& ctx);
std::vector<Edge> parse_edge_list(std::string_view text, const Context& ctx);
EdgeSet parse_edge_set(std::string_view text, const Context& ctx);

}  // namespace cgblock
