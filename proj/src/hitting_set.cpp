#include "cgblock/hitting_set.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

namespace cgblock {

void SetSystem::validate() const {
  if (ground_size < 0) throw DomainError("negative ground size");
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets[i].empty()) throw DomainError("set " + std::to_string(i) + " is empty");
    for (int x : sets[i])
      if (x < 0 || x >= ground_size)
        throw DomainError("element " + std::to_string(x) + " of set " + std::to_string(i) + " outside ground set");
  }
}

SetSystem to_set_system(const std::vector<EdgeSet>& family, const Context& ctx) {
  SetSystem sys;
  sys.ground_size = ctx.edge_count();
  sys.sets.reserve(family.size());
  for (const auto& f : family) sys.sets.push_back(f.indices());
  return sys;
}

namespace {

using Word = std::uint64_t;

class Solver {
 public:
  Solver(const SetSystem& sys, const SolverConfig& config) : config_(config) {
    ground_ = static_cast<std::size_t>(sys.ground_size);
    std::set<std::vector<int>> uniq;
    for (auto s : sys.sets) {
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
      uniq.insert(std::move(s));
    }
    std::vector<DynamicBitset> all;
    for (const auto& s : uniq) {
      DynamicBitset b(ground_);
      for (int x : s) b.set(static_cast<std::size_t>(x));
      all.push_back(std::move(b));
    }
    // A superset is hit whenever any of its subsets is.
    std::vector<std::size_t> order(all.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) { return all[x].count() < all[y].count(); });
    for (auto i : order) {
      bool redundant = std::any_of(sets_.begin(), sets_.end(), [&](const DynamicBitset& k) { return k.is_subset_of(all[i]); });
      if (!redundant) sets_.push_back(all[i]);
    }
  }

  SolverResult solve() {
    SolverResult res;
    if (sets_.empty()) {
      res.solutions.push_back({});
      return res;
    }
    std::vector<int> everything(sets_.size());
    for (std::size_t i = 0; i < sets_.size(); ++i) everything[i] = static_cast<int>(i);
    DynamicBitset none(ground_);
    int lb = packing_bound(everything, none);
    if (lb < 0) throw DomainError("set system has no hitting set");

    for (int bound = lb; bound <= static_cast<int>(ground_); ++bound) {
      auto found = run_level(everything, bound);
      if (aborted_.load()) {
        res.status = SolverStatus::incomplete;
        res.min_size = bound;
        break;
      }
      if (!found.empty()) {
        std::sort(found.begin(), found.end());
        res.min_size = bound;
        res.solutions = std::move(found);
        break;
      }
    }
    res.nodes = nodes_.load();
    return res;
  }

 private:
  struct Worker {
    Solver& solver;
    std::vector<std::vector<int>> found;
    std::vector<int> chosen;
    DynamicBitset forbidden;
    std::uint64_t pending = 0;

    bool tick() {
      if (++pending >= 4096) flush();
      return !solver.aborted_.load(std::memory_order_relaxed);
    }
    void flush() {
      auto total = solver.nodes_.fetch_add(pending) + pending;
      pending = 0;
      if (total > solver.config_.node_limit) solver.aborted_.store(true);
    }

    void search(const std::vector<int>& unhit, int bound) {
      if (!tick()) return;
      if (unhit.empty()) {
        auto sol = chosen;
        std::sort(sol.begin(), sol.end());
        found.push_back(std::move(sol));
        return;
      }
      int depth = static_cast<int>(chosen.size());
      if (depth >= bound) return;
      int lb = solver.packing_bound(unhit, forbidden);
      if (lb < 0 || depth + lb > bound) return;

      const auto& pivot = solver.sets_[static_cast<std::size_t>(solver.branch_set(unhit, forbidden))];
      std::vector<std::size_t> tried;
      pivot.for_each([&](std::size_t e) {
        if (forbidden.test(e)) return;
        auto next = solver.without(unhit, e);
        chosen.push_back(static_cast<int>(e));
        search(next, bound);
        chosen.pop_back();
        forbidden.set(e);
        tried.push_back(e);
      });
      for (auto e : tried) forbidden.reset(e);
    }
  };

  std::vector<std::vector<int>> run_level(const std::vector<int>& everything, int bound) {
    nodes_.fetch_add(1);
    if (bound == 0) return {};
    DynamicBitset none(ground_);
    const auto& pivot = sets_[static_cast<std::size_t>(branch_set(everything, none))];
    auto elements = pivot.to_indices();

    // Root children are independent once the forbidden prefix is fixed.
    std::vector<std::vector<std::vector<int>>> per_child(elements.size());
    std::atomic<std::size_t> next_child{0};
    auto work = [&] {
      Worker w{*this, {}, {}, DynamicBitset(ground_), 0};
      for (std::size_t c; (c = next_child.fetch_add(1)) < elements.size();) {
        w.forbidden = DynamicBitset(ground_);
        for (std::size_t k = 0; k < c; ++k) w.forbidden.set(static_cast<std::size_t>(elements[k]));
        w.chosen.assign(1, elements[c]);
        w.found.clear();
        w.search(without(everything, static_cast<std::size_t>(elements[c])), bound);
        per_child[c] = std::move(w.found);
      }
      w.flush();
    };
    int threads = std::max(1, config_.threads);
    if (threads == 1) {
      work();
    } else {
      std::vector<std::jthread> pool;
      for (int i = 0; i < threads; ++i) pool.emplace_back(work);
    }
    std::vector<std::vector<int>> found;
    for (auto& f : per_child) found.insert(found.end(), f.begin(), f.end());
    return found;
  }

  std::vector<int> without(const std::vector<int>& unhit, std::size_t e) const {
    std::vector<int> out;
    out.reserve(unhit.size());
    for (int i : unhit)
      if (!sets_[static_cast<std::size_t>(i)].test(e)) out.push_back(i);
    return out;
  }

  int branch_set(const std::vector<int>& unhit, const DynamicBitset& forbidden) const {
    int best = unhit.front();
    std::size_t best_count = SIZE_MAX;
    for (int i : unhit) {
      auto c = sets_[static_cast<std::size_t>(i)].count_outside(forbidden);
      if (c < best_count) {
        best_count = c;
        best = i;
      }
    }
    return best;
  }

  // Size of a greedy packing of pairwise disjoint unhit sets restricted to
  // allowed elements; -1 if some unhit set has no allowed element left.
  int packing_bound(const std::vector<int>& unhit, const DynamicBitset& forbidden) const {
    const auto& fw = forbidden.words();
    std::vector<Word> used(fw.size(), 0);
    int count = 0;
    for (int i : unhit) {
      const auto& sw = sets_[static_cast<std::size_t>(i)].words();
      bool empty = true, disjoint = true;
      for (std::size_t k = 0; k < sw.size(); ++k) {
        Word allowed = sw[k] & ~fw[k];
        if (allowed) empty = false;
        if (allowed & used[k]) disjoint = false;
      }
      if (empty) return -1;
      if (!disjoint) continue;
      for (std::size_t k = 0; k < sw.size(); ++k) used[k] |= sw[k] & ~fw[k];
      ++count;
    }
    return count;
  }

  SolverConfig config_;
  std::size_t ground_ = 0;
  std::vector<DynamicBitset> sets_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> aborted_{false};
};

}  // namespace

SolverResult min_hitting_sets(const SetSystem& sys, const SolverConfig& config) {
  sys.validate();
  return Solver(sys, config).solve();
}

bool is_blocking_set(const EdgeSet& candidate, const std::vector<EdgeSet>& family) {
  return first_unhit(candidate, family) == nullptr;
}

const EdgeSet* first_unhit(const EdgeSet& candidate, const std::vector<EdgeSet>& family) {
  for (const auto& f : family)
    if (!candidate.intersects(f)) return &f;
  return nullptr;
}

namespace {

class DirectionalSearch {
 public:
  DirectionalSearch(const Context& ctx, const std::vector<EdgeSet>& family) : ctx_(ctx), family_(family) {
    if (ctx.m() > 63) throw DomainError("directional search supports m <= 63");
    for (const auto& f : family) {
      std::uint64_t mask = 0;
      for (const auto& e : f.edges(ctx)) {
        int d = direction(e, ctx);
        if (d % 2) mask |= std::uint64_t{1} << (d / 2);
      }
      masks_.push_back(mask);
    }
  }

  DirectionalResult run() {
    std::vector<int> all(family_.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    chosen_ = EdgeSet(ctx_);
    step(0, all);
    std::sort(result_.blockers.begin(), result_.blockers.end());
    return std::move(result_);
  }

 private:
  void step(int cls, const std::vector<int>& unhit) {
    ++result_.nodes;
    if (cls == ctx_.m()) {
      if (unhit.empty()) result_.blockers.push_back(chosen_);
      return;
    }
    // Classes cls, cls+1, ... are still free.
    std::uint64_t remaining = ~std::uint64_t{0} << cls;
    for (int i : unhit)
      if ((masks_[static_cast<std::size_t>(i)] & remaining) == 0) return;
    for (int idx : ctx_.class_indices(2 * cls + 1)) {
      std::vector<int> next;
      next.reserve(unhit.size());
      for (int i : unhit)
        if (!family_[static_cast<std::size_t>(i)].contains_index(idx)) next.push_back(i);
      chosen_.insert_index(idx);
      step(cls + 1, next);
      chosen_.erase_index(idx);
    }
  }

  const Context& ctx_;
  const std::vector<EdgeSet>& family_;
  std::vector<std::uint64_t> masks_;
  EdgeSet chosen_;
  DirectionalResult result_;
};

}  // namespace

DirectionalResult directional_blocker_search(const Context& ctx, const std::vector<EdgeSet>& family) {
  return DirectionalSearch(ctx, family).run();
}

std::vector<EdgeSet> solutions_as_edge_sets(const SolverResult& res, const Context& ctx) {
  std::vector<EdgeSet> out;
  for (const auto& sol : res.solutions) {
    EdgeSet s(ctx);
    for (int i : sol) s.insert_index(i);
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cgblock
