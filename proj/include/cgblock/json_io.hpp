#pragma once

// JSON forms of every artifact the toolkit reads or writes. Key order is
// fixed (sorted) so that dumps are byte-stable.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "cgblock/blocker_formula.hpp"
#include "cgblock/enumeration.hpp"
#include "cgblock/hitting_set.hpp"
#include "cgblock/verification.hpp"
#include "cgblock/witnesses.hpp"

namespace cgblock {

using Json = nlohmann::json;
using EdgePair = std::array<int, 2>;

std::vector<EdgePair> edge_pairs(std::span<const Edge> edges);

// One enumerated SPM or SHP.
struct StructureRecord {
  int m = 0;
  std::string kind;  // "spm" | "shp"
  std::vector<EdgePair> edges;
  std::optional<std::vector<int>> vertices;

  friend bool operator==(const StructureRecord&, const StructureRecord&) = default;
};

StructureRecord spm_record(const EdgeSet& s, const Context& ctx);
StructureRecord shp_record(const SimplePath& p, const Context& ctx);

struct FormulaRecord {
  int m = 0;
  BlockerSpec spec;
  std::vector<EdgePair> edges;

  friend bool operator==(const FormulaRecord&, const FormulaRecord&) = default;
};

struct WitnessRecord {
  std::string kind;  // "prop1" | "p0" | "p1"
  std::map<std::string, int> params;
  std::vector<int> vertices;
  bool is_shp = false;
  std::vector<EdgePair> avoids;
  std::vector<EdgePair> contains;
  bool passed = false;

  friend bool operator==(const WitnessRecord&, const WitnessRecord&) = default;
};

WitnessRecord witness_record(const std::string& kind, std::map<std::string, int> params, const SimplePath& p,
                             const WitnessChecks& checks);

void to_json(Json& j, const StructureRecord& r);
void from_json(const Json& j, StructureRecord& r);
void to_json(Json& j, const BlockerSpec& s);
void from_json(const Json& j, BlockerSpec& s);
void to_json(Json& j, const FormulaRecord& r);
void from_json(const Json& j, FormulaRecord& r);
void to_json(Json& j, const WitnessRecord& r);
void from_json(const Json& j, WitnessRecord& r);
void to_json(Json& j, const SetSystem& s);
void from_json(const Json& j, SetSystem& s);
void to_json(Json& j, const SolverResult& r);
void from_json(const Json& j, SolverResult& r);
void to_json(Json& j, const TheoremReport& r);
void from_json(const Json& j, TheoremReport& r);

std::string status_name(SolverStatus s);
SolverStatus parse_status(const std::string& s);

// Lowercase hex SHA-256 of the given bytes.
std::string sha256_hex(const std::string& bytes);

}  // namespace cgblock
