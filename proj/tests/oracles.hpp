#pragma once

// Brute-force reference computations. Nothing here calls the library's
// enumerators or solvers; crossings use a separate cyclic-order formulation.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace oracle {

using Pair = std::pair<int, int>;

// x strictly inside the counter-clockwise open arc from a to b on n points.
inline bool strictly_between(int a, int x, int b, int n) {
  int dx = ((x - a) % n + n) % n, db = ((b - a) % n + n) % n;
  return dx > 0 && dx < db;
}

inline bool segments_cross(Pair e, Pair f, int n) {
  if (e.first == f.first || e.first == f.second || e.second == f.first || e.second == f.second) return false;
  return strictly_between(e.first, f.first, e.second, n) != strictly_between(e.first, f.second, e.second, n);
}

inline Pair norm(int a, int b) { return a < b ? Pair{a, b} : Pair{b, a}; }

inline bool noncrossing(const std::vector<Pair>& es, int n) {
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j)
      if (segments_cross(es[i], es[j], n)) return false;
  return true;
}

// All perfect matchings of K_n, then the noncrossing ones; each as a sorted
// pair list, the whole list sorted.
inline std::vector<std::vector<Pair>> spms(int m) {
  const int n = 2 * m;
  std::vector<std::vector<Pair>> all;
  std::vector<Pair> cur;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  auto rec = [&](auto&& self) -> void {
    int u = 0;
    while (u < n && used[static_cast<std::size_t>(u)]) ++u;
    if (u == n) {
      all.push_back(cur);
      return;
    }
    used[static_cast<std::size_t>(u)] = true;
    for (int w = u + 1; w < n; ++w) {
      if (used[static_cast<std::size_t>(w)]) continue;
      used[static_cast<std::size_t>(w)] = true;
      cur.emplace_back(u, w);
      self(self);
      cur.pop_back();
      used[static_cast<std::size_t>(w)] = false;
    }
    used[static_cast<std::size_t>(u)] = false;
  };
  rec(rec);
  std::vector<std::vector<Pair>> out;
  for (auto& mt : all) {
    if (!noncrossing(mt, n)) continue;
    std::sort(mt.begin(), mt.end());
    out.push_back(mt);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::uint64_t perfect_matching_count(int m) {
  std::uint64_t c = 1;
  for (int k = 2 * m - 1; k > 1; k -= 2) c *= static_cast<std::uint64_t>(k);
  return c;
}

inline std::uint64_t catalan(int m) {
  std::uint64_t c = 1;
  for (int k = 0; k < m; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

// Every vertex permutation, kept when noncrossing and not lexicographically
// larger than its reverse.
inline std::vector<std::vector<int>> shps(int m) {
  const int n = 2 * m;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    std::vector<int> r(p.rbegin(), p.rend());
    if (r < p) continue;
    std::vector<Pair> es;
    for (int i = 0; i + 1 < n; ++i) es.push_back(norm(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(i + 1)]));
    if (noncrossing(es, n)) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Smallest-first subset enumeration: all hitting sets of minimum size.
struct NaiveResult {
  int min_size = -1;
  std::vector<std::vector<int>> solutions;
};

inline NaiveResult naive_min_hitting_sets(int ground, const std::vector<std::vector<int>>& sets) {
  std::vector<std::uint32_t> masks;
  for (const auto& s : sets) {
    std::uint32_t mk = 0;
    for (int x : s) mk |= 1u << x;
    masks.push_back(mk);
  }
  NaiveResult res;
  for (int k = 0; k <= ground && res.min_size < 0; ++k) {
    for (std::uint32_t sub = 0; sub < (1u << ground); ++sub) {
      if (__builtin_popcount(sub) != k) continue;
      if (std::all_of(masks.begin(), masks.end(), [&](std::uint32_t mk) { return (mk & sub) != 0; })) {
        std::vector<int> sol;
        for (int x = 0; x < ground; ++x)
          if (sub >> x & 1u) sol.push_back(x);
        res.solutions.push_back(sol);
      }
    }
    if (!res.solutions.empty()) res.min_size = k;
  }
  std::sort(res.solutions.begin(), res.solutions.end());
  return res;
}

// Calls f on every k-subset of [0, n).
template <class F>
void for_each_subset(int n, int k, F&& f) {
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return;
  while (true) {
    f(idx);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace oracle
