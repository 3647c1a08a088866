#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cgblock/cli.hpp"
#include "cgblock/json_io.hpp"
#include "cgblock/render.hpp"

using namespace cgblock;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<Json> json_lines(const std::string& text) {
  std::vector<Json> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) out.push_back(Json::parse(line));
  return out;
}

std::string temp_path(const std::string& name) { return "cgblock_test_" + name; }

}  // namespace

TEST_CASE("enumerate") {
  auto r = run({"enumerate", "--m", "2", "--family", "spm"});
  CHECK(r.code == kExitOk);
  auto lines = json_lines(r.out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0]["edges"] == Json::parse("[[0,1],[2,3]]"));
  CHECK(lines[0]["kind"] == "spm");
  auto rec = lines[1].get<StructureRecord>();
  CHECK(rec.m == 2);
  CHECK(Json(rec) == lines[1]);

  auto shp = json_lines(run({"enumerate", "--m", "3", "--family", "shp"}).out);
  CHECK(shp.size() == 48);
  CHECK(shp[0]["vertices"].size() == 6);
  CHECK(run({"enumerate", "--m", "6", "--family", "shp", "--count-only"}).out == "6144\n");
  CHECK(run({"enumerate", "--m", "6", "--family", "spm", "--count-only"}).out == "132\n");
}

TEST_CASE("blockers formula and exact") {
  auto r = run({"blockers", "formula", "--m", "6", "--spec", "0:3:1,2,4"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "0-1,1-2,2-3,2-5,2-7,1-10\n");
  auto fam = json_lines(run({"blockers", "formula", "--m", "3"}).out);
  CHECK(fam.size() == 12);
  auto rec = fam[0].get<FormulaRecord>();
  CHECK(Json(rec) == fam[0]);

  auto gx = json_lines(run({"blockers", "exact", "--m", "4", "--family", "shp"}).out);
  auto dx = json_lines(run({"blockers", "exact", "--m", "4", "--family", "spm", "--algorithm", "directional"}).out);
  REQUIRE(gx.size() == 1);
  REQUIRE(dx.size() == 1);
  CHECK(gx[0]["min_size"] == 4);
  CHECK(gx[0]["blockers"] == dx[0]["blockers"]);
  CHECK(gx[0]["blockers"].size() == 32);

  auto lim = run({"blockers", "exact", "--m", "5", "--family", "shp", "--node-limit", "3"});
  CHECK(lim.code == kExitSolverIncomplete);
}

TEST_CASE("verify") {
  auto r = run({"verify", "--m", "2", "--to", "4"});
  CHECK(r.code == kExitOk);
  auto lines = json_lines(r.out);
  REQUIRE(lines.size() == 3);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    CHECK(lines[i]["m"] == static_cast<int>(i) + 2);
    CHECK(lines[i]["status"] == "pass");
    auto rep = lines[i].get<TheoremReport>();
    CHECK(Json(rep) == lines[i]);
  }
  auto control = run({"verify", "--m", "3", "--control"});
  CHECK(control.code == kExitVerificationFailed);
  CHECK(json_lines(control.out)[0]["status"] == "fail");
  CHECK(run({"verify", "--m", "4", "--node-limit", "2"}).code == kExitSolverIncomplete);
  CHECK(run({"verify", "--m", "3"}).out == run({"verify", "--m", "3", "--threads", "4"}).out);
  CHECK(json_lines(run({"verify", "--m", "3", "--timing"}).out)[0].contains("elapsed_seconds"));
}

TEST_CASE("witness") {
  auto p0 = json_lines(run({"witness", "p0", "--m", "6", "--j", "3", "--s", "4", "--t", "7"}).out);
  REQUIRE(p0.size() == 1);
  CHECK(p0[0]["vertices"] == Json::parse("[4,5,6,7,3,8,2,9,1,10,0,11]"));
  CHECK(p0[0]["checks"]["passed"] == true);
  auto rec = p0[0].get<WitnessRecord>();
  CHECK(Json(rec) == p0[0]);

  auto p1 = json_lines(run({"witness", "p1", "--m", "6", "--j", "3", "--alpha", "1", "--alpha2", "2", "--beta", "6",
                            "--beta2", "7"})
                           .out);
  CHECK(p1[0]["vertices"] == Json::parse("[4,3,5,2,6,7,8,1,9,0,10,11]"));
  auto pi = json_lines(run({"witness", "prop1", "--m", "6", "--k", "3", "--i", "2"}).out);
  CHECK(pi[0]["vertices"] == Json::parse("[2,3,1,4,0,11,5,10,6,9,7,8]"));
  CHECK(pi[0]["checks"]["contains"] == Json::parse("[[0,11]]"));

  CHECK(run({"witness", "p0", "--m", "6", "--j", "3", "--s", "4", "--t", "6"}).code == kExitDomain);
}

TEST_CASE("usage and domain errors") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"enumerate", "--family", "spm"}).code == kExitUsage);
  CHECK(run({"enumerate", "--m", "3", "--family", "xyz"}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  auto bad_m = run({"enumerate", "--m", "1", "--family", "spm"});
  CHECK(bad_m.code == kExitDomain);
  CHECK_FALSE(bad_m.err.empty());
  CHECK(json_lines(run({"enumerate", "--m", "9", "--family", "spm"}).out).size() == 4862);
  CHECK(run({"blockers", "formula", "--m", "6", "--spec", "0:3:1,2"}).code == kExitDomain);
  CHECK(run({"render", "--m", "3", "--layer", "0-7:solid"}).code == kExitDomain);
  CHECK(run({"render", "--m", "3", "--layer", "0-1:wavy"}).code == kExitDomain);
  CHECK(run({"help"}).code != kExitOk);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("solve reads a set system file") {
  auto in = temp_path("system.json");
  {
    std::ofstream f(in);
    f << R"({"ground_size": 4, "sets": [[0, 1], [1, 2], [2, 3]]})";
  }
  auto out = temp_path("solve_out.json");
  auto r = run({"solve", "--in", in, "--out", out});
  CHECK(r.code == kExitOk);
  std::ifstream f(out);
  std::stringstream ss;
  ss << f.rdbuf();
  auto res = Json::parse(ss.str()).get<SolverResult>();
  CHECK(res.min_size == 2);
  CHECK(res.solutions == std::vector<std::vector<int>>{{0, 2}, {1, 2}, {1, 3}});
  CHECK(run({"solve", "--in", temp_path("missing.json")}).code == kExitDomain);
  {
    std::ofstream g(in);
    g << R"({"ground_size": 2, "sets": [[0, 5]]})";
  }
  CHECK(run({"solve", "--in", in}).code == kExitDomain);
  std::remove(in.c_str());
  std::remove(out.c_str());
}

TEST_CASE("config file supplies missing flags") {
  auto cfg = temp_path("config.json");
  {
    std::ofstream f(cfg);
    f << R"({"m": 2, "family": "spm"})";
  }
  auto r = run({"enumerate", "--config", cfg});
  CHECK(r.code == kExitOk);
  CHECK(json_lines(r.out).size() == 2);
  auto over = run({"enumerate", "--config", cfg, "--m", "3"});
  CHECK(json_lines(over.out).size() == 5);
  std::remove(cfg.c_str());
}

TEST_CASE("mutations subcommand") {
  auto r = json_lines(run({"mutations", "--m", "3"}).out);
  REQUIRE(r.size() == 1);
  CHECK(r[0]["passed"] == true);
  CHECK(r[0]["detected"] == r[0]["outside_family"]);
}

TEST_CASE("render: layers and determinism") {
  Context ctx(6);
  auto l = parse_layer("0-1,1-2,2-3,2-5,2-7,1-10:solid:blocker", ctx);
  CHECK(l.edges.size() == 6);
  CHECK(l.style == Style::solid);
  CHECK(l.label == "blocker");
  auto d = parse_layer("D1:dotted", ctx);
  CHECK(d.edges.size() == 6);
  CHECK(d.style == Style::dotted);
  auto p = parse_layer("4>5>6>7>3>8>2>9>1>10>0>11:bold", ctx);
  CHECK(p.edges.size() == 11);
  CHECK(parse_layer("all:punctured", ctx).edges.size() == 66);
  CHECK_THROWS_AS(parse_layer("D12:solid", ctx), DomainError);
  CHECK_THROWS_AS(parse_layer("0-1", ctx), DomainError);
  CHECK(style_name(parse_style("punctured")) == "punctured");

  RenderSpec spec{6, {d, l, p}, true, true};
  auto a = render_svg(spec), b = render_svg(spec);
  CHECK(a == b);
  CHECK(a.rfind("<?xml", 0) == 0);
  CHECK(a.find("</svg>") != std::string::npos);
  CHECK(a.find("<title>blocker</title>") != std::string::npos);
  CHECK(a.find("stroke-dasharray") != std::string::npos);

  RenderSpec mixed{6, {d, parse_layer("D1:solid", Context(3))}, true, false};
  CHECK_THROWS_AS(render_svg(mixed), DomainError);

  auto svg = run({"render", "--m", "6", "--layer", "D1:bold", "--layer", "4>5>6:dotted:path"});
  CHECK(svg.code == kExitOk);
  CHECK(svg.out == run({"render", "--m", "6", "--layer", "D1:bold", "--layer", "4>5>6:dotted:path"}).out);
  // Six D(1) edges plus two path edges.
  std::size_t lines = 0;
  for (std::size_t pos = 0; (pos = svg.out.find("<line", pos)) != std::string::npos; ++pos) ++lines;
  CHECK(lines == 8);
}
