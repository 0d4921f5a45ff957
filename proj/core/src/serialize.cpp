#include "grundylab/serialize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "json.hpp"

namespace grundylab {

namespace {

using json = nlohmann::ordered_json;

double round6(double x) { return std::round(x * 1e6) / 1e6; }

std::string fmt6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

// TSV cells must stay single-line and tab-free
std::string cell(std::string s) {
  for (char& c : s)
    if (c == '\t' || c == '\n' || c == '\r') c = ' ';
  return s;
}

json girth_json(const Girth& g) {
  if (!g.is_finite()) return nullptr;
  return g.value();
}

std::string girth_cell(const Girth& g) {
  return g.is_finite() ? std::to_string(g.value()) : "inf";
}

const char* applicability_str(Applicability a) {
  switch (a) {
    case Applicability::applicable: return "applicable";
    case Applicability::inapplicable: return "inapplicable";
    default: return "unknown_bracketed";
  }
}

const char* b2s(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string invariants_json(const InvariantsRecord& r) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["graph_id"] = r.graph_id;
  j["n"] = r.n;
  j["m"] = r.m;
  j["degrees"] = r.degrees;
  j["girth"] = girth_json(r.girth);
  j["triangle_free"] = r.triangle_free;
  j["connected"] = r.connected;
  j["gamma"] = r.gamma;
  j["s"] = r.star_number;
  j["grundy"] = r.grundy;
  j["exact"] = r.exact;
  j["grundy_upper"] = r.grundy_upper;
  return j.dump();
}

std::string invariants_tsv_header() {
  return "# schema_version=" + std::to_string(kSchemaVersion) +
         "\ngraph_id\tn\tm\tgirth\tdelta\ttriangle_free\tconnected\tgamma\ts\tgrundy\texact";
}

std::string invariants_tsv_row(const InvariantsRecord& r) {
  int delta = 0;
  for (int d : r.degrees) delta = std::max(delta, d);
  std::string row = cell(r.graph_id);
  row += '\t';
  row += std::to_string(r.n);
  row += '\t';
  row += std::to_string(r.m);
  row += '\t';
  row += girth_cell(r.girth);
  row += '\t';
  row += std::to_string(delta);
  row += '\t';
  row += b2s(r.triangle_free);
  row += '\t';
  row += b2s(r.connected);
  row += '\t';
  row += std::to_string(r.gamma);
  row += '\t';
  row += std::to_string(r.star_number);
  row += '\t';
  row += std::to_string(r.grundy);
  row += '\t';
  row += b2s(r.exact);
  return row;
}

std::string bound_report_json(const BoundReport& r) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["graph_id"] = r.graph_id;
  j["n"] = r.n;
  j["m"] = r.m;
  j["girth"] = girth_json(r.girth);
  j["delta"] = r.delta;
  j["triangle_free"] = r.triangle_free;
  j["gamma"] = r.gamma;
  j["grundy"] = r.grundy;
  j["exact"] = r.exact;
  j["grundy_upper"] = r.grundy_upper;
  json entries = json::array();
  for (const auto& e : r.entries) {
    json je;
    je["bound"] = e.name;
    je["applicable"] = applicability_str(e.applicability);
    je["reason"] = e.reason;
    je["rhs"] = e.rhs ? json(round6(*e.rhs)) : json(nullptr);
    je["satisfied"] = e.satisfied ? json(*e.satisfied) : json(nullptr);
    je["slack"] = e.slack ? json(round6(*e.slack)) : json(nullptr);
    je["tight"] = e.equality ? json(*e.equality) : json(nullptr);
    entries.push_back(std::move(je));
  }
  j["entries"] = std::move(entries);
  j["twhz_rhs"] = round6(r.twhz_rhs);
  j["beats_delta_condition"] = r.beats_delta_condition;
  j["equality_characterization"] =
      r.equality_characterization ? json(*r.equality_characterization) : json(nullptr);
  j["odd_improves_zaker"] = r.odd_improves_zaker ? json(*r.odd_improves_zaker) : json(nullptr);
  j["odd_base_strict"] = r.odd_base_strict ? json(*r.odd_base_strict) : json(nullptr);
  j["odd_full_strict"] = r.odd_full_strict ? json(*r.odd_full_strict) : json(nullptr);
  j["anomalies"] = r.anomalies;
  return j.dump();
}

std::string bound_report_tsv_header() {
  return "# schema_version=" + std::to_string(kSchemaVersion) +
         "\ngraph_id\tn\tm\tgirth\tdelta\tgamma\tgrundy\texact\tbound\tapplicable\trhs\tslack\ttight";
}

std::string bound_report_tsv_rows(const BoundReport& r) {
  std::string prefix = cell(r.graph_id);
  prefix += '\t';
  prefix += std::to_string(r.n);
  prefix += '\t';
  prefix += std::to_string(r.m);
  prefix += '\t';
  prefix += girth_cell(r.girth);
  prefix += '\t';
  prefix += std::to_string(r.delta);
  prefix += '\t';
  prefix += std::to_string(r.gamma);
  prefix += '\t';
  prefix += std::to_string(r.grundy);
  prefix += '\t';
  prefix += b2s(r.exact);

  std::string out;
  bool first = true;
  for (const auto& e : r.entries) {
    if (!first) out += '\n';
    first = false;
    out += prefix;
    out += '\t';
    out += e.name;
    out += '\t';
    out += applicability_str(e.applicability);
    out += '\t';
    out += e.rhs ? fmt6(*e.rhs) : "-";
    out += '\t';
    out += e.slack ? fmt6(*e.slack) : "-";
    out += '\t';
    out += e.equality ? b2s(*e.equality) : "-";
  }
  return out;
}

std::string oracle_json(const OracleRecord& r) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["graph_id"] = r.graph_id;
  j["n"] = r.n;
  if (r.skipped) {
    j["status"] = "skipped";
    j["reason"] = r.skip_reason;
  } else {
    j["status"] = r.divergences.empty() ? "ok" : "diverged";
    j["grundy_solver"] = r.grundy_solver;
    j["grundy_oracle"] = r.grundy_oracle;
    j["gamma_solver"] = r.gamma_solver;
    j["gamma_oracle"] = r.gamma_oracle;
    j["s_solver"] = r.s_solver;
    j["s_oracle"] = r.s_oracle;
    j["divergences"] = r.divergences;
  }
  return j.dump();
}

std::string oracle_tsv_header() {
  return "# schema_version=" + std::to_string(kSchemaVersion) +
         "\ngraph_id\tn\tstatus\tgrundy_solver\tgrundy_oracle\tgamma_solver\tgamma_oracle"
         "\ts_solver\ts_oracle\tnotes";
}

std::string oracle_tsv_row(const OracleRecord& r) {
  std::string row = cell(r.graph_id);
  row += '\t';
  row += std::to_string(r.n);
  row += '\t';
  if (r.skipped) {
    row += "skipped\t-\t-\t-\t-\t-\t-\t";
    row += cell(r.skip_reason);
    return row;
  }
  row += r.divergences.empty() ? "ok" : "diverged";
  for (int v : {r.grundy_solver, r.grundy_oracle, r.gamma_solver, r.gamma_oracle, r.s_solver,
                r.s_oracle}) {
    row += '\t';
    row += std::to_string(v);
  }
  row += '\t';
  std::string notes;
  for (const auto& d : r.divergences) {
    if (!notes.empty()) notes += "; ";
    notes += d;
  }
  row += cell(notes.empty() ? "-" : notes);
  return row;
}

std::string sidecar_json(const SidecarRecord& r) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["family"] = r.family;
  json params = json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  j["params"] = std::move(params);
  json expected = json::object();
  for (const auto& [k, v] : r.expected) expected[k] = v;
  j["expected"] = std::move(expected);
  j["graph6"] = r.graph6;
  return j.dump();
}

std::string witness_json(const LeveledWitness& w, const StarPartition& sp,
                         const CountIdentity& id, bool counts_match) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["k"] = id.k;
  j["g"] = id.g;
  j["g_mod_4"] = id.g_mod_4;
  j["doubled"] = w.doubled;
  j["depth"] = w.depth;
  j["n"] = w.graph.vertex_count();
  j["v_h"] = id.v_h;
  j["s_prime"] = id.s_prime;
  j["uncovered"] = id.uncovered;
  j["counts_match"] = counts_match;
  j["roots"] = w.roots;
  j["levels"] = w.levels;
  j["demanded_color"] = w.demanded_color;
  j["parent"] = w.parent;
  j["level_of"] = w.level_of;
  json stars = json::array();
  for (const auto& p : sp.parts) {
    json s;
    s["apex"] = p.apex;
    s["members"] = p.members;
    stars.push_back(std::move(s));
  }
  j["star_partition"] = std::move(stars);
  return j.dump();
}

std::string error_json(const std::string& graph_id, const std::string& message) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["graph_id"] = graph_id;
  j["error"] = message;
  return j.dump();
}

std::string error_tsv(const std::string& graph_id, const std::string& message) {
  return "# error\t" + cell(graph_id) + "\t" + cell(message);
}

}  // namespace grundylab
