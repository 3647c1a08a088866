#include "cgblock/verification.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>

#include "cgblock/blocker_formula.hpp"
#include "cgblock/enumeration.hpp"
#include "cgblock/json_io.hpp"

namespace cgblock {

bool check_odd_direction_profile(const std::vector<EdgeSet>& blockers, const Context& ctx) {
  for (const auto& b : blockers) {
    std::vector<int> per_dir(static_cast<std::size_t>(ctx.n()), 0);
    for (const auto& e : b.edges(ctx)) ++per_dir[static_cast<std::size_t>(direction(e, ctx))];
    for (int k = 0; k < ctx.n(); ++k)
      if (per_dir[static_cast<std::size_t>(k)] != k % 2) return false;
  }
  return true;
}

bool check_boundary_spine_path(const std::vector<EdgeSet>& blockers, const Context& ctx) {
  for (const auto& b : blockers) {
    auto chains = boundary_chains(b, ctx);
    if (chains.size() != 1 || chains.front().size() < 3) return false;
  }
  return true;
}

bool closed_under_symmetry(const std::vector<EdgeSet>& blockers, const Context& ctx) {
  std::set<std::vector<int>> keys;
  for (const auto& b : blockers) keys.insert(b.indices());
  for (const auto& b : blockers) {
    if (!keys.count(rotate(b, 1, ctx).indices())) return false;
    if (!keys.count(reflect(b, 0, ctx).indices())) return false;
  }
  return true;
}

bool check_lower_bound_certificates(const Context& ctx) {
  auto spms = canonical_spm_family(ctx);
  auto shps = canonical_shp_family(ctx);
  if (static_cast<int>(spms.size()) != ctx.m() || static_cast<int>(shps.size()) != ctx.m()) return false;
  for (const auto& s : spms)
    if (!is_spm(s, ctx)) return false;
  std::vector<EdgeSet> shp_sets;
  for (int i = 0; i < ctx.m(); ++i) {
    if (!is_shp(shps[static_cast<std::size_t>(i)], ctx)) return false;
    auto es = path_edge_set(shps[static_cast<std::size_t>(i)], ctx);
    if (es != (direction_class(2 * i, ctx) | direction_class(2 * i + 1, ctx))) return false;
    shp_sets.push_back(es);
  }
  for (std::size_t x = 0; x < spms.size(); ++x)
    for (std::size_t y = x + 1; y < spms.size(); ++y)
      if (spms[x].intersects(spms[y]) || shp_sets[x].intersects(shp_sets[y])) return false;
  return true;
}

MutationStats mutation_sensitivity(const std::vector<EdgeSet>& blockers, const std::vector<EdgeSet>& family,
                                   const Context& ctx, std::uint64_t sample, std::uint64_t seed) {
  std::set<std::vector<int>> keys;
  for (const auto& b : blockers) keys.insert(b.indices());
  MutationStats st;
  auto probe = [&](const EdgeSet& b, int drop, int add) {
    EdgeSet mutated = b;
    mutated.erase_index(drop);
    mutated.insert_index(add);
    ++st.mutations;
    if (keys.count(mutated.indices())) return;
    ++st.outside_family;
    if (!is_blocking_set(mutated, family)) ++st.detected;
  };
  auto partners = [&](const EdgeSet& b, int drop) {
    std::vector<int> out;
    for (int idx : ctx.class_indices(direction(ctx.edge_at(drop), ctx)))
      if (idx != drop && !b.contains_index(idx)) out.push_back(idx);
    return out;
  };
  if (sample == 0) {
    for (const auto& b : blockers)
      for (int drop : b.indices())
        for (int add : partners(b, drop)) probe(b, drop, add);
    return st;
  }
  if (blockers.empty()) return st;
  std::mt19937_64 rng(seed);
  for (std::uint64_t s = 0; s < sample; ++s) {
    const auto& b = blockers[rng() % blockers.size()];
    auto idx = b.indices();
    int drop = idx[rng() % idx.size()];
    auto cand = partners(b, drop);
    if (cand.empty()) continue;
    probe(b, drop, cand[rng() % cand.size()]);
  }
  return st;
}

namespace {

std::vector<std::string> as_strings(const std::vector<EdgeSet>& sets, const Context& ctx) {
  std::vector<std::string> out;
  for (const auto& s : sets) out.push_back(format_edge_set(s, ctx));
  return out;
}

// Lexicographically first set in exactly one of two sorted collections.
std::optional<EdgeSet> first_difference(const std::vector<EdgeSet>& x, const std::vector<EdgeSet>& y) {
  std::vector<EdgeSet> diff;
  std::set_symmetric_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(diff));
  if (diff.empty()) return std::nullopt;
  return diff.front();
}

}  // namespace

bool report_passed(const TheoremReport& r) { return r.status == "pass"; }

TheoremReport verify_theorems(int m, const VerifyConfig& config) {
  auto started = std::chrono::steady_clock::now();
  Context ctx(m);
  TheoremReport rep;
  rep.m = m;

  auto spms = enumerate_spm(ctx);
  auto paths = config.shp_family == ShpFamily::all ? enumerate_shp(ctx) : boundary_shps(ctx);
  auto shps = as_edge_sets(paths, ctx);
  rep.counts.spm = spms.size();
  rep.counts.shp = shps.size();

  SolverConfig sc{config.node_limit, config.threads};
  auto res_m = min_hitting_sets(to_set_system(spms, ctx), sc);
  auto res_h = min_hitting_sets(to_set_system(shps, ctx), sc);
  rep.solver_spm = {status_name(res_m.status), res_m.nodes};
  rep.solver_shp = {status_name(res_h.status), res_h.nodes};
  rep.min_sizes = {res_m.min_size, res_h.min_size};
  auto bm = solutions_as_edge_sets(res_m, ctx);
  auto bh = solutions_as_edge_sets(res_h, ctx);
  rep.counts.blockers_spm = bm.size();
  rep.counts.blockers_shp = bh.size();

  auto formula = enumerate_formula_family(ctx);
  rep.counts.formula_family = formula.blockers.size();
  rep.formula_spec_count = formula.spec_count;
  rep.formula_max_multiplicity = formula.max_multiplicity;

  auto directional = directional_blocker_search(ctx, shps);
  rep.directional_nodes = directional.nodes;

  auto& eq = rep.equalities;
  eq.min_size_is_m = res_m.min_size == m && res_h.min_size == m;
  eq.bh_equals_bm = bh == bm;
  eq.bm_equals_formula = bm == formula.blockers;
  // The directional search only sees size-m sets, so it can stand in for
  // B(H) only when the minimum is m.
  eq.bh_equals_directional = res_h.min_size == m && directional.blockers == bh;
  eq.bm_blocks_h = std::all_of(bm.begin(), bm.end(), [&](const EdgeSet& b) { return is_blocking_set(b, shps); });

  auto& st = rep.structure;
  std::vector<EdgeSet> all_blockers = bh;
  all_blockers.insert(all_blockers.end(), bm.begin(), bm.end());
  for (const auto& b : all_blockers) {
    ++st.checked;
    if (validate_structure(b, ctx).passes()) ++st.caterpillar_ok;
    if (direction_sweep_check(b, ctx)) ++st.sweep_ok;
  }
  st.all_structural = st.checked > 0 && st.caterpillar_ok == st.checked && st.sweep_ok == st.checked;
  st.odd_direction_profile = check_odd_direction_profile(bh, ctx);
  st.boundary_spine_path = check_boundary_spine_path(bh, ctx) && check_boundary_spine_path(bm, ctx);
  st.closed_under_symmetry = closed_under_symmetry(bh, ctx) && closed_under_symmetry(bm, ctx);
  st.lower_bound_certificates = check_lower_bound_certificates(ctx);

  if (config.include_blockers) rep.blockers = as_strings(bh, ctx);

  auto note = [&](const std::string& check, const EdgeSet& s) {
    if (rep.counterexample) return;
    Counterexample ce{check, format_edge_set(s, ctx), ""};
    if (const auto* miss = first_unhit(s, spms))
      ce.unhit_member = format_edge_set(*miss, ctx);
    else if (const auto* miss2 = first_unhit(s, shps))
      ce.unhit_member = format_edge_set(*miss2, ctx);
    rep.counterexample = ce;
  };
  if (auto d = first_difference(bh, bm)) note("bh_equals_bm", *d);
  if (auto d = first_difference(bm, formula.blockers)) note("bm_equals_formula", *d);
  for (const auto& b : all_blockers)
    if (!validate_structure(b, ctx).passes() || !direction_sweep_check(b, ctx)) note("structure", b);

  bool complete = res_m.status == SolverStatus::complete && res_h.status == SolverStatus::complete;
  bool ok = eq.min_size_is_m && eq.bh_equals_bm && eq.bm_equals_formula && eq.bh_equals_directional &&
            eq.bm_blocks_h && st.all_structural && st.odd_direction_profile && st.boundary_spine_path &&
            st.closed_under_symmetry && st.lower_bound_certificates;
  rep.status = !complete ? "inconclusive" : ok ? "pass" : "fail";

  Json inputs{{"m", m},
              {"node_limit", config.node_limit},
              {"shp_family", config.shp_family == ShpFamily::all ? "all" : "boundary_circuit"},
              {"include_blockers", config.include_blockers}};
  Json outputs = rep;
  outputs.erase("content_hash");
  rep.content_hash = sha256_hex(inputs.dump() + "\n" + outputs.dump());

  if (config.timing)
    rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return rep;
}

}  // namespace cgblock
