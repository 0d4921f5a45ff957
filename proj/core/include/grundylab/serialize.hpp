#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "grundylab/bounds.hpp"
#include "grundylab/domination.hpp"
#include "grundylab/graph.hpp"
#include "grundylab/witness.hpp"

namespace grundylab {

// Bumped whenever a key or column changes meaning; stamped on every record.
inline constexpr int kSchemaVersion = 1;

// JSON builders emit one compact object per call (JSON Lines friendly);
// real-valued fields are rounded to 6 decimals. TSV builders pair one header
// with one row (or row block) per record; infinite girth prints as "inf" and
// unavailable cells as "-".

struct InvariantsRecord {
  std::string graph_id;
  int n = 0;
  int m = 0;
  std::vector<int> degrees;
  Girth girth = Girth::infinite();
  bool triangle_free = false;
  bool connected = false;
  int gamma = 0;
  int star_number = 0;
  int grundy = 0;
  bool exact = true;
  int grundy_upper = 0;
};

std::string invariants_json(const InvariantsRecord& r);
std::string invariants_tsv_header();
std::string invariants_tsv_row(const InvariantsRecord& r);

std::string bound_report_json(const BoundReport& r);
std::string bound_report_tsv_header();
std::string bound_report_tsv_rows(const BoundReport& r);  // one line per bound entry

struct OracleRecord {
  std::string graph_id;
  int n = 0;
  bool skipped = false;
  std::string skip_reason;
  int grundy_solver = 0, grundy_oracle = 0;
  int gamma_solver = 0, gamma_oracle = 0;
  int s_solver = 0, s_oracle = 0;
  std::vector<std::string> divergences;
};

std::string oracle_json(const OracleRecord& r);
std::string oracle_tsv_header();
std::string oracle_tsv_row(const OracleRecord& r);

struct SidecarRecord {
  std::string family;
  std::vector<std::pair<std::string, std::int64_t>> params;
  std::vector<std::pair<std::string, std::int64_t>> expected;
  std::string graph6;
};

std::string sidecar_json(const SidecarRecord& r);

std::string witness_json(const LeveledWitness& w, const StarPartition& sp,
                         const CountIdentity& id, bool counts_match);

// Per-graph failure note, same shape in both formats.
std::string error_json(const std::string& graph_id, const std::string& message);
std::string error_tsv(const std::string& graph_id, const std::string& message);

}  // namespace grundylab
