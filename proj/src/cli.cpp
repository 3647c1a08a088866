#include "cgblock/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "cgblock/blocker_formula.hpp"
#include "cgblock/enumeration.hpp"
#include "cgblock/hitting_set.hpp"
#include "cgblock/json_io.hpp"
#include "cgblock/render.hpp"
#include "cgblock/verification.hpp"
#include "cgblock/witnesses.hpp"

namespace cgblock {

namespace {

struct VerificationFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SolverIncomplete : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Writes to --out when given, otherwise to the command's stdout.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw DomainError("cannot open '" + path + "' for writing");
    }
    os_ = path.empty() ? &fallback : &file_;
  }
  std::ostream& os() { return *os_; }

 private:
  std::ofstream file_;
  std::ostream* os_;
};

// Appends "--key value" for every config entry whose flag the user did not
// give explicitly, so command-line flags win over the file.
std::vector<std::string> merge_config(std::vector<std::string> args) {
  std::string path;
  std::vector<std::string> rest;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    } else {
      rest.push_back(args[i]);
    }
  }
  if (path.empty()) return rest;
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read config file '" + path + "'");
  Json cfg;
  try {
    cfg = Json::parse(in);
  } catch (const Json::exception& e) {
    throw DomainError("config file '" + path + "': " + e.what());
  }
  if (!cfg.is_object()) throw DomainError("config file must hold a JSON object");
  auto given = [&](const std::string& flag) {
    for (const auto& a : rest)
      if (a == flag || a.rfind(flag + "=", 0) == 0) return true;
    return false;
  };
  auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  for (const auto& [key, value] : cfg.items()) {
    std::string flag = "--" + key;
    if (given(flag)) continue;
    if (value.is_boolean()) {
      if (value.get<bool>()) rest.push_back(flag);
    } else if (value.is_array()) {
      for (const auto& v : value) {
        rest.push_back(flag);
        rest.push_back(scalar(v));
      }
    } else {
      rest.push_back(flag);
      rest.push_back(scalar(value));
    }
  }
  return rest;
}

void emit_solver_json(std::ostream& os, int m, const std::string& family, const std::string& algorithm,
                      const SolverResult& res, const Context& ctx) {
  Json j = res;
  j["m"] = m;
  j["family"] = family;
  j["algorithm"] = algorithm;
  Json names = Json::array();
  for (const auto& s : solutions_as_edge_sets(res, ctx)) names.push_back(format_edge_set(s, ctx));
  j["blockers"] = names;
  os << j.dump() << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Blockers of simple perfect matchings and simple Hamiltonian paths in CK(2m)", "cgblock"};
  app.require_subcommand(1);
  app.add_option("--config", "JSON file mirroring the command-line flags");

  // enumerate
  int en_m = 0;
  std::string en_family, en_out;
  bool en_count = false;
  auto* en = app.add_subcommand("enumerate", "Enumerate all SPMs or SHPs as JSON lines");
  en->add_option("--m", en_m, "half the number of vertices")->required();
  en->add_option("--family", en_family)->required()->check(CLI::IsMember({"spm", "shp"}));
  en->add_flag("--count-only", en_count);
  en->add_option("--out", en_out);

  // blockers formula|exact
  auto* bl = app.add_subcommand("blockers", "Formula or exact blockers");
  bl->require_subcommand(1);
  int bf_m = 0;
  std::string bf_spec, bf_out;
  auto* bf = bl->add_subcommand("formula", "Caterpillar blockers r:t:e1,e2,...");
  bf->add_option("--m", bf_m)->required();
  bf->add_option("--spec", bf_spec, "a single spec; prints its edges in realization order");
  bf->add_option("--out", bf_out);
  int bx_m = 0, bx_threads = 1;
  std::uint64_t bx_limit = SolverConfig{}.node_limit;
  std::string bx_family, bx_algo = "generic", bx_out;
  auto* bx = bl->add_subcommand("exact", "All minimum blocking sets by exact search");
  bx->add_option("--m", bx_m)->required();
  bx->add_option("--family", bx_family)->required()->check(CLI::IsMember({"spm", "shp"}));
  bx->add_option("--algorithm", bx_algo)->check(CLI::IsMember({"generic", "directional"}));
  bx->add_option("--node-limit", bx_limit);
  bx->add_option("--threads", bx_threads);
  bx->add_option("--out", bx_out);

  // verify
  int vf_m = 0, vf_threads = 1;
  std::optional<int> vf_to;
  std::uint64_t vf_limit = VerifyConfig{}.node_limit;
  bool vf_timing = false, vf_no_blockers = false, vf_control = false;
  std::string vf_out;
  auto* vf = app.add_subcommand("verify", "Certify B(H) = B(M) = formula family for each m");
  vf->add_option("--m", vf_m)->required();
  vf->add_option("--to", vf_to, "verify every order from --m to --to");
  vf->add_option("--node-limit", vf_limit);
  vf->add_option("--threads", vf_threads);
  vf->add_flag("--timing", vf_timing, "include wall-clock time (breaks byte-stability)");
  vf->add_flag("--no-blockers", vf_no_blockers, "omit the blocker list");
  vf->add_flag("--control", vf_control, "replace H by the 2m boundary paths (expected to fail)");
  vf->add_option("--out", vf_out);

  // witness prop1|p0|p1
  auto* wt = app.add_subcommand("witness", "Build an explicit witness path");
  wt->require_subcommand(1);
  Prop1Params wp1;
  auto* w_prop1 = wt->add_subcommand("prop1", "P_i avoiding g=[0,1] and f=[m+k-1,m+k]");
  w_prop1->add_option("--m", wp1.m)->required();
  w_prop1->add_option("--k", wp1.k)->required();
  w_prop1->add_option("--i", wp1.i)->required();
  P0Params wp0;
  auto* w_p0 = wt->add_subcommand("p0", "P_0 for an extra edge [s,t]");
  w_p0->add_option("--m", wp0.m)->required();
  w_p0->add_option("--j", wp0.j)->required();
  w_p0->add_option("--s", wp0.s)->required();
  w_p0->add_option("--t", wp0.t)->required();
  P1Params wq;
  auto* w_p1 = wt->add_subcommand("p1", "P_1 for extra edges [alpha,beta], [alpha',beta']");
  w_p1->add_option("--m", wq.m)->required();
  w_p1->add_option("--j", wq.j)->required();
  w_p1->add_option("--alpha", wq.alpha)->required();
  w_p1->add_option("--alpha2", wq.alpha2, "alpha'")->required();
  w_p1->add_option("--beta", wq.beta)->required();
  w_p1->add_option("--beta2", wq.beta2, "beta'")->required();

  // render
  int rd_m = 0;
  std::vector<std::string> rd_layers;
  std::string rd_out;
  bool rd_no_labels = false, rd_angles = false;
  auto* rd = app.add_subcommand("render", "Draw layers of edges or paths as SVG");
  rd->add_option("--m", rd_m)->required();
  rd->add_option("--layer", rd_layers, "<edges|a>b>c|Dk|all>:<solid|dotted|bold|punctured>[:label]")->required();
  rd->add_option("--out", rd_out);
  rd->add_flag("--no-labels", rd_no_labels);
  rd->add_flag("--angles", rd_angles, "annotate each edge with its direction");

  // solve
  std::string sv_in, sv_out;
  std::uint64_t sv_limit = SolverConfig{}.node_limit;
  int sv_threads = 1;
  auto* sv = app.add_subcommand("solve", "Minimum hitting sets of a JSON set system");
  sv->add_option("--in", sv_in)->required();
  sv->add_option("--node-limit", sv_limit);
  sv->add_option("--threads", sv_threads);
  sv->add_option("--out", sv_out);

  // mutations
  int mu_m = 0;
  std::uint64_t mu_sample = 0, mu_seed = 1;
  auto* mu = app.add_subcommand("mutations", "Single-edge mutations of B(H) are caught unless they stay in B(H)");
  mu->add_option("--m", mu_m)->required();
  mu->add_option("--sample", mu_sample, "0 = exhaustive");
  mu->add_option("--seed", mu_seed);

  std::vector<std::string> args;
  try {
    args = merge_config(raw_args);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  std::vector<const char*> argv{"cgblock"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*en) {
      Context ctx(en_m);
      Sink sink(en_out, out);
      if (en_family == "spm") {
        if (en_count) {
          sink.os() << count_spm(ctx) << "\n";
        } else {
          for_each_spm(ctx, [&](const EdgeSet& s) {
            sink.os() << Json(spm_record(s, ctx)).dump() << "\n";
            return true;
          });
        }
      } else if (en_count) {
        sink.os() << count_shp(ctx) << "\n";
      } else {
        for_each_shp(ctx, [&](const SimplePath& p) {
          sink.os() << Json(shp_record(p, ctx)).dump() << "\n";
          return true;
        });
      }
    } else if (*bf) {
      Context ctx(bf_m);
      Sink sink(bf_out, out);
      if (!bf_spec.empty()) {
        auto edges = realize_edges(parse_spec(bf_spec), ctx);
        sink.os() << format_edges(edges) << "\n";
      } else {
        auto fam = enumerate_formula_family(ctx);
        for (std::size_t i = 0; i < fam.blockers.size(); ++i) {
          auto es = fam.blockers[i].edges(ctx);
          sink.os() << Json(FormulaRecord{bf_m, fam.first_spec[i], edge_pairs(es)}).dump() << "\n";
        }
      }
    } else if (*bx) {
      Context ctx(bx_m);
      Sink sink(bx_out, out);
      auto family = bx_family == "spm" ? enumerate_spm(ctx) : as_edge_sets(enumerate_shp(ctx), ctx);
      SolverResult res;
      if (bx_algo == "generic") {
        res = min_hitting_sets(to_set_system(family, ctx), {bx_limit, bx_threads});
      } else {
        auto dir = directional_blocker_search(ctx, family);
        res.min_size = ctx.m();
        res.nodes = dir.nodes;
        for (const auto& b : dir.blockers) res.solutions.push_back(b.indices());
      }
      emit_solver_json(sink.os(), bx_m, bx_family, bx_algo, res, ctx);
      if (res.status == SolverStatus::incomplete) throw SolverIncomplete("node limit reached");
    } else if (*vf) {
      Sink sink(vf_out, out);
      int last = vf_to.value_or(vf_m);
      if (last < vf_m) throw DomainError("--to must not be smaller than --m");
      VerifyConfig cfg;
      cfg.node_limit = vf_limit;
      cfg.threads = vf_threads;
      cfg.timing = vf_timing;
      cfg.include_blockers = !vf_no_blockers;
      cfg.shp_family = vf_control ? ShpFamily::boundary_circuit : ShpFamily::all;
      bool incomplete = false, failed = false;
      for (int m = vf_m; m <= last; ++m) {
        auto rep = verify_theorems(m, cfg);
        sink.os() << Json(rep).dump() << "\n";
        if (rep.status == "inconclusive") incomplete = true;
        if (rep.status == "fail") failed = true;
      }
      if (incomplete) throw SolverIncomplete("solver hit the node limit; report is inconclusive");
      if (failed) throw VerificationFailed("verification failed");
    } else if (*wt) {
      WitnessRecord rec;
      if (*w_prop1) {
        validate(wp1);
        Context ctx(wp1.m);
        auto p = build_prop1_path(wp1, ctx);
        auto chk = check_witness(p, {prop1_f(wp1, ctx), prop1_g(ctx)}, {prop1_h(ctx)}, ctx);
        rec = witness_record("prop1", {{"m", wp1.m}, {"k", wp1.k}, {"i", wp1.i}}, p, chk);
      } else if (*w_p0) {
        validate(wp0);
        Context ctx(wp0.m);
        auto p = build_p0(wp0, ctx);
        auto chk = check_witness(p, {ctx.edge(wp0.s, wp0.t)}, {}, ctx);
        rec = witness_record("p0", {{"m", wp0.m}, {"j", wp0.j}, {"s", wp0.s}, {"t", wp0.t}}, p, chk);
      } else {
        validate(wq);
        Context ctx(wq.m);
        auto p = build_p1(wq, ctx);
        std::vector<Edge> avoid{ctx.edge(wq.alpha, wq.beta), ctx.edge(wq.alpha2, wq.beta2)};
        for (int v = 0; v < wq.j; ++v) avoid.push_back(ctx.edge(v, v + 1));
        auto chk = check_witness(p, avoid, {}, ctx);
        rec = witness_record("p1",
                             {{"m", wq.m}, {"j", wq.j}, {"alpha", wq.alpha}, {"alpha2", wq.alpha2},
                              {"beta", wq.beta}, {"beta2", wq.beta2}},
                             p, chk);
      }
      out << Json(rec).dump() << "\n";
      if (!rec.passed) throw VerificationFailed("witness checks failed");
    } else if (*rd) {
      Context ctx(rd_m);
      RenderSpec spec;
      spec.m = rd_m;
      spec.vertex_labels = !rd_no_labels;
      spec.highlight_angles = rd_angles;
      for (const auto& l : rd_layers) spec.layers.push_back(parse_layer(l, ctx));
      Sink sink(rd_out, out);
      sink.os() << render_svg(spec);
    } else if (*sv) {
      std::ifstream in(sv_in);
      if (!in) throw DomainError("cannot read '" + sv_in + "'");
      SetSystem sys;
      try {
        sys = Json::parse(in).get<SetSystem>();
      } catch (const Json::exception& e) {
        throw DomainError("set system '" + sv_in + "': " + e.what());
      }
      auto res = min_hitting_sets(sys, {sv_limit, sv_threads});
      Sink sink(sv_out, out);
      sink.os() << Json(res).dump() << "\n";
      if (res.status == SolverStatus::incomplete) throw SolverIncomplete("node limit reached");
    } else if (*mu) {
      Context ctx(mu_m);
      auto shps = as_edge_sets(enumerate_shp(ctx), ctx);
      auto bh = solutions_as_edge_sets(min_hitting_sets(to_set_system(shps, ctx)), ctx);
      auto st = mutation_sensitivity(bh, shps, ctx, mu_sample, mu_seed);
      out << Json{{"m", mu_m},
                  {"mutations", st.mutations},
                  {"outside_family", st.outside_family},
                  {"detected", st.detected},
                  {"passed", st.passes()}}
                 .dump()
          << "\n";
      if (!st.passes()) throw VerificationFailed("undetected mutation");
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const VerificationFailed& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerificationFailed;
  } catch (const SolverIncomplete& e) {
    err << "error: " << e.what() << "\n";
    return kExitSolverIncomplete;
  }
  return kExitOk;
}

int cli_main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace cgblock
