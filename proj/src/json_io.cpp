#include "cgblock/json_io.hpp"

#include <openssl/evp.h>

#include <cstdio>

namespace cgblock {

std::vector<EdgePair> edge_pairs(std::span<const Edge> edges) {
  std::vector<EdgePair> out;
  out.reserve(edges.size());
  for (const auto& e : edges) out.push_back({e.a, e.b});
  return out;
}

StructureRecord spm_record(const EdgeSet& s, const Context& ctx) {
  auto es = s.edges(ctx);
  return {ctx.m(), "spm", edge_pairs(es), std::nullopt};
}

StructureRecord shp_record(const SimplePath& p, const Context& ctx) {
  auto es = path_edge_set(p, ctx).edges(ctx);
  return {ctx.m(), "shp", edge_pairs(es), p.vertices};
}

WitnessRecord witness_record(const std::string& kind, std::map<std::string, int> params, const SimplePath& p,
                             const WitnessChecks& checks) {
  return {kind,           std::move(params),          p.vertices,   checks.is_shp,
          edge_pairs(checks.avoids), edge_pairs(checks.contains), checks.passed};
}

void to_json(Json& j, const StructureRecord& r) {
  j = Json{{"m", r.m}, {"kind", r.kind}, {"edges", r.edges}};
  if (r.vertices) j["vertices"] = *r.vertices;
}

void from_json(const Json& j, StructureRecord& r) {
  j.at("m").get_to(r.m);
  j.at("kind").get_to(r.kind);
  j.at("edges").get_to(r.edges);
  if (j.contains("vertices"))
    r.vertices = j.at("vertices").get<std::vector<int>>();
  else
    r.vertices.reset();
}

void to_json(Json& j, const BlockerSpec& s) { j = Json{{"r", s.r}, {"t", s.t}, {"epsilons", s.epsilons}}; }

void from_json(const Json& j, BlockerSpec& s) {
  j.at("r").get_to(s.r);
  j.at("t").get_to(s.t);
  j.at("epsilons").get_to(s.epsilons);
}

void to_json(Json& j, const FormulaRecord& r) { j = Json{{"m", r.m}, {"spec", r.spec}, {"edges", r.edges}}; }

void from_json(const Json& j, FormulaRecord& r) {
  j.at("m").get_to(r.m);
  j.at("spec").get_to(r.spec);
  j.at("edges").get_to(r.edges);
}

void to_json(Json& j, const WitnessRecord& r) {
  j = Json{{"kind", r.kind},
           {"params", r.params},
           {"vertices", r.vertices},
           {"checks", {{"is_shp", r.is_shp}, {"avoids", r.avoids}, {"contains", r.contains}, {"passed", r.passed}}}};
}

void from_json(const Json& j, WitnessRecord& r) {
  j.at("kind").get_to(r.kind);
  j.at("params").get_to(r.params);
  j.at("vertices").get_to(r.vertices);
  const auto& c = j.at("checks");
  c.at("is_shp").get_to(r.is_shp);
  c.at("avoids").get_to(r.avoids);
  c.at("contains").get_to(r.contains);
  c.at("passed").get_to(r.passed);
}

void to_json(Json& j, const SetSystem& s) { j = Json{{"ground_size", s.ground_size}, {"sets", s.sets}}; }

void from_json(const Json& j, SetSystem& s) {
  j.at("ground_size").get_to(s.ground_size);
  j.at("sets").get_to(s.sets);
}

std::string status_name(SolverStatus s) { return s == SolverStatus::complete ? "complete" : "incomplete"; }

SolverStatus parse_status(const std::string& s) {
  if (s == "complete") return SolverStatus::complete;
  if (s == "incomplete") return SolverStatus::incomplete;
  throw DomainError("unknown solver status '" + s + "'");
}

void to_json(Json& j, const SolverResult& r) {
  j = Json{{"min_size", r.min_size}, {"solutions", r.solutions}, {"status", status_name(r.status)}, {"nodes", r.nodes}};
}

void from_json(const Json& j, SolverResult& r) {
  j.at("min_size").get_to(r.min_size);
  j.at("solutions").get_to(r.solutions);
  r.status = parse_status(j.at("status").get<std::string>());
  j.at("nodes").get_to(r.nodes);
}

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(FamilyCounts, spm, shp, blockers_spm, blockers_shp, formula_family)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(MinSizes, spm, shp)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(Equalities, min_size_is_m, bh_equals_bm, bm_equals_formula, bh_equals_directional,
                                   bm_blocks_h)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(StructureSummary, checked, caterpillar_ok, sweep_ok, all_structural, odd_direction_profile,
                                   boundary_spine_path, closed_under_symmetry, lower_bound_certificates)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(SolverStats, status, nodes)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(Counterexample, check, edge_set, unhit_member)

void to_json(Json& j, const TheoremReport& r) {
  j = Json{{"m", r.m},
           {"counts", r.counts},
           {"min_sizes", r.min_sizes},
           {"equalities", r.equalities},
           {"structure", r.structure},
           {"solver_spm", r.solver_spm},
           {"solver_shp", r.solver_shp},
           {"directional_nodes", r.directional_nodes},
           {"formula_spec_count", r.formula_spec_count},
           {"formula_max_multiplicity", r.formula_max_multiplicity},
           {"blockers", r.blockers},
           {"counterexample", nullptr},
           {"status", r.status},
           {"content_hash", r.content_hash}};
  if (r.counterexample) j["counterexample"] = *r.counterexample;
  if (r.elapsed_seconds) j["elapsed_seconds"] = *r.elapsed_seconds;
}

void from_json(const Json& j, TheoremReport& r) {
  j.at("m").get_to(r.m);
  j.at("counts").get_to(r.counts);
  j.at("min_sizes").get_to(r.min_sizes);
  j.at("equalities").get_to(r.equalities);
  j.at("structure").get_to(r.structure);
  j.at("solver_spm").get_to(r.solver_spm);
  j.at("solver_shp").get_to(r.solver_shp);
  j.at("directional_nodes").get_to(r.directional_nodes);
  j.at("formula_spec_count").get_to(r.formula_spec_count);
  j.at("formula_max_multiplicity").get_to(r.formula_max_multiplicity);
  j.at("blockers").get_to(r.blockers);
  const auto& ce = j.at("counterexample");
  if (ce.is_null())
    r.counterexample.reset();
  else
    r.counterexample = ce.get<Counterexample>();
  if (j.contains("elapsed_seconds"))
    r.elapsed_seconds = j.at("elapsed_seconds").get<double>();
  else
    r.elapsed_seconds.reset();
  j.at("status").get_to(r.status);
  j.at("content_hash").get_to(r.content_hash);
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 digest failed");
  std::string out;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    out += buf;
  }
  return out;
}

}  // namespace cgblock
