#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "grundylab/bounds.hpp"
#include "grundylab/coloring.hpp"
#include "grundylab/domination.hpp"
#include "grundylab/generators.hpp"
#include "grundylab/graph.hpp"
#include "grundylab/graph_io.hpp"
#include "grundylab/serialize.hpp"
#include "grundylab/witness.hpp"

#include "oracles.hpp"
#include "pipeline.hpp"

namespace {

using namespace grundylab;
using cli::InputItem;

struct BatchFlags {
  std::string input = "-";
  std::string format = "json";
  std::int64_t budget_ms = 10000;
  int threads = 0;
};

void add_batch_flags(CLI::App* cmd, BatchFlags& f) {
  cmd->add_option("--input", f.input, "graph6 or edge-list file, - for stdin")
      ->capture_default_str();
  cmd->add_option("--format", f.format, "output format")
      ->check(CLI::IsMember({"json", "tsv"}))
      ->capture_default_str();
  cmd->add_option("--budget-ms", f.budget_ms, "per-solver time budget per graph, 0 = unlimited")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd->add_option("--threads", f.threads, "worker threads (default GRUNDY_LAB_THREADS, else 1)");
}

std::optional<std::chrono::steady_clock::time_point> deadline_after(std::int64_t budget_ms) {
  if (budget_ms <= 0) return std::nullopt;
  return std::chrono::steady_clock::now() + std::chrono::milliseconds(budget_ms);
}

std::string failure(bool tsv, const std::string& id, const std::string& message) {
  return tsv ? error_tsv(id, message) : error_json(id, message);
}

int count_parse_errors(const std::vector<InputItem>& items) {
  int k = 0;
  for (const auto& it : items)
    if (!it.graph) ++k;
  return k;
}

int run_invariants(const BatchFlags& f) {
  const auto items = cli::read_input(f.input);
  const bool tsv = f.format == "tsv";
  std::atomic<int> faults{0};

  auto rows = cli::ordered_map(
      static_cast<int>(items.size()), cli::resolve_threads(f.threads), [&](int i) {
        const InputItem& it = items[static_cast<std::size_t>(i)];
        if (!it.graph) return failure(tsv, it.graph_id, it.error);
        try {
          const Graph& g = *it.graph;
          InvariantsRecord r;
          r.graph_id = it.graph_id;
          r.n = g.vertex_count();
          r.m = g.edge_count();
          r.degrees.reserve(static_cast<std::size_t>(r.n));
          for (int v = 0; v < r.n; ++v) r.degrees.push_back(g.degree(v));
          r.girth = g.girth();
          r.triangle_free = g.is_triangle_free();
          r.connected = g.is_connected();
          r.gamma = domination_number_exact(g, deadline_after(f.budget_ms)).gamma;
          r.star_number = star_partition_number_exact(g, deadline_after(f.budget_ms)).s;
          GrundyOptions go;
          go.budget_ms = f.budget_ms;
          go.known_gamma = r.gamma;
          GrundyResult gr = grundy_number_exact(g, go);
          r.grundy = gr.k;
          r.exact = gr.exact;
          r.grundy_upper = gr.upper_bound;
          return tsv ? invariants_tsv_row(r) : invariants_json(r);
        } catch (const BudgetExceeded& e) {
          return failure(tsv, it.graph_id, e.what());
        } catch (const std::exception& e) {
          faults.fetch_add(1);
          return failure(tsv, it.graph_id, e.what());
        }
      });

  if (tsv) std::cout << invariants_tsv_header() << '\n';
  for (const auto& row : rows) std::cout << row << '\n';
  return (count_parse_errors(items) > 0 || faults.load() > 0) ? 1 : 0;
}

int run_check_bounds(const BatchFlags& f) {
  const auto items = cli::read_input(f.input);
  const bool tsv = f.format == "tsv";
  std::atomic<int> applicable{0}, satisfied{0}, tight{0}, anomalous{0}, faults{0};

  auto rows = cli::ordered_map(
      static_cast<int>(items.size()), cli::resolve_threads(f.threads), [&](int i) {
        const InputItem& it = items[static_cast<std::size_t>(i)];
        if (!it.graph) return failure(tsv, it.graph_id, it.error);
        try {
          CheckOptions o;
          o.graph_id = it.graph_id;
          o.budget_ms = f.budget_ms;
          BoundReport r = check_all(*it.graph, o);
          for (const auto& e : r.entries) {
            if (e.applicability == Applicability::applicable) applicable.fetch_add(1);
            if (e.satisfied && *e.satisfied) satisfied.fetch_add(1);
            if (e.equality && *e.equality) tight.fetch_add(1);
          }
          anomalous.fetch_add(static_cast<int>(r.anomalies.size()));
          return tsv ? bound_report_tsv_rows(r) : bound_report_json(r);
        } catch (const BudgetExceeded& e) {
          return failure(tsv, it.graph_id, e.what());
        } catch (const std::exception& e) {
          faults.fetch_add(1);
          return failure(tsv, it.graph_id, e.what());
        }
      });

  if (tsv) std::cout << bound_report_tsv_header() << '\n';
  for (const auto& row : rows) std::cout << row << '\n';
  if (tsv) {
    std::cout << "# summary graphs=" << items.size() << " applicable=" << applicable.load()
              << " satisfied=" << satisfied.load() << " tight=" << tight.load()
              << " anomalous=" << anomalous.load() << '\n';
  } else {
    std::cout << "{\"schema_version\":" << kSchemaVersion << ",\"record\":\"summary\",\"graphs\":"
              << items.size() << ",\"applicable\":" << applicable.load() << ",\"satisfied\":"
              << satisfied.load() << ",\"tight\":" << tight.load() << ",\"anomalous\":"
              << anomalous.load() << "}\n";
  }
  return (count_parse_errors(items) > 0 || anomalous.load() > 0 || faults.load() > 0) ? 1 : 0;
}

int run_oracle(const BatchFlags& f, int nmax) {
  const auto items = cli::read_input(f.input);
  const bool tsv = f.format == "tsv";
  std::atomic<int> divergent{0}, faults{0};

  auto rows = cli::ordered_map(
      static_cast<int>(items.size()), cli::resolve_threads(f.threads), [&](int i) {
        const InputItem& it = items[static_cast<std::size_t>(i)];
        if (!it.graph) return failure(tsv, it.graph_id, it.error);
        const Graph& g = *it.graph;
        OracleRecord r;
        r.graph_id = it.graph_id;
        r.n = g.vertex_count();
        if (r.n > nmax) {
          r.skipped = true;
          r.skip_reason = "n exceeds --nmax " + std::to_string(nmax);
          return tsv ? oracle_tsv_row(r) : oracle_json(r);
        }
        try {
          GrundyOptions go;
          go.budget_ms = f.budget_ms;
          GrundyResult gr = grundy_number_exact(g, go);
          r.grundy_solver = gr.k;
          r.grundy_oracle = oracles::grundy_all_orderings(g);
          r.gamma_solver = domination_number_exact(g, deadline_after(f.budget_ms)).gamma;
          r.gamma_oracle = oracles::gamma_all_subsets(g);
          r.s_solver = star_partition_number_exact(g, deadline_after(f.budget_ms)).s;
          r.s_oracle = oracles::star_partition_dp(g);
          if (!gr.exact)
            r.divergences.push_back("grundy solver returned a bracketed value under the budget");
          if (r.grundy_solver != r.grundy_oracle)
            r.divergences.push_back("grundy: solver " + std::to_string(r.grundy_solver) +
                                    " vs oracle " + std::to_string(r.grundy_oracle));
          if (r.gamma_solver != r.gamma_oracle)
            r.divergences.push_back("gamma: solver " + std::to_string(r.gamma_solver) +
                                    " vs oracle " + std::to_string(r.gamma_oracle));
          if (r.s_solver != r.s_oracle)
            r.divergences.push_back("s: solver " + std::to_string(r.s_solver) + " vs oracle " +
                                    std::to_string(r.s_oracle));
          divergent.fetch_add(static_cast<int>(r.divergences.size()));
          return tsv ? oracle_tsv_row(r) : oracle_json(r);
        } catch (const BudgetExceeded& e) {
          return failure(tsv, it.graph_id, e.what());
        } catch (const std::exception& e) {
          faults.fetch_add(1);
          return failure(tsv, it.graph_id, e.what());
        }
      });

  if (tsv) std::cout << oracle_tsv_header() << '\n';
  for (const auto& row : rows) std::cout << row << '\n';
  return (count_parse_errors(items) > 0 || divergent.load() > 0 || faults.load() > 0) ? 1 : 0;
}

struct GenOut {
  Graph graph;
  SidecarRecord sidecar;
};

GenOut pack(Graph g, std::string family, std::vector<std::pair<std::string, std::int64_t>> params,
            std::vector<std::pair<std::string, std::int64_t>> expected) {
  SidecarRecord sc{std::move(family), std::move(params), std::move(expected), serialize_graph6(g)};
  return {std::move(g), std::move(sc)};
}

int run_generate(const std::vector<GenOut>& outs, const std::string& sidecar_path) {
  std::ofstream side;
  if (!sidecar_path.empty()) {
    side.open(sidecar_path);
    if (!side) throw std::runtime_error("cannot open sidecar file: " + sidecar_path);
  }
  for (const auto& o : outs) {
    std::cout << o.sidecar.graph6 << '\n';
    if (side.is_open()) side << sidecar_json(o.sidecar) << '\n';
  }
  return 0;
}

int run_witness(int k, int g, const std::string& dot_path, const std::string& format) {
  if (g < 5) throw std::runtime_error("witness: girth must be at least 5");
  const bool even = g % 2 == 0;
  if (even && 2 * k <= g + 2)
    throw std::runtime_error("witness: even girth " + std::to_string(g) + " needs k > (g+2)/2 = " +
                             std::to_string((g + 2) / 2));
  if (!even && 2 * k < g + 1)
    throw std::runtime_error("witness: odd girth " + std::to_string(g) + " needs k >= (g+1)/2 = " +
                             std::to_string((g + 1) / 2));

  const int depth = even ? g / 2 : (g + 1) / 2;
  const LeveledWitness w = witness_tree(k, depth, even);
  const StarPartition sp = witness_star_partition(w, g);
  const CountIdentity id = count_identities(k, g);
  const bool match = id.v_h == w.graph.vertex_count() &&
                     id.s_prime == static_cast<std::int64_t>(sp.parts.size());

  if (!dot_path.empty()) {
    std::ofstream out(dot_path);
    if (!out) throw std::runtime_error("cannot open dot file: " + dot_path);
    out << witness_to_dot(w);
  }
  if (format == "tsv") {
    std::cout << "# schema_version=" << kSchemaVersion
              << "\nk\tg\tdoubled\tdepth\tv_h\ts_prime\tv_h_formula\ts_prime_formula\tcounts_match\n"
              << w.k << '\t' << g << '\t' << (w.doubled ? "true" : "false") << '\t' << w.depth
              << '\t' << w.graph.vertex_count() << '\t' << sp.parts.size() << '\t' << id.v_h
              << '\t' << id.s_prime << '\t' << (match ? "true" : "false") << '\n';
  } else {
    std::cout << witness_json(w, sp, id, match) << '\n';
  }
  return match ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  CLI::App app{"exact Grundy, domination, star partition and girth toolkit for small graphs"};
  app.require_subcommand(1);
  int exit_code = 0;

  BatchFlags inv_flags;
  auto* inv = app.add_subcommand("invariants", "one record per input graph: n, m, degrees, "
                                               "girth, gamma, star number, Grundy number");
  add_batch_flags(inv, inv_flags);
  inv->callback([&] { exit_code = run_invariants(inv_flags); });

  BatchFlags chk_flags;
  auto* chk = app.add_subcommand("check-bounds", "evaluate every Grundy upper bound per graph, "
                                                 "with slack, tightness and anomaly reporting");
  add_batch_flags(chk, chk_flags);
  chk->callback([&] { exit_code = run_check_bounds(chk_flags); });

  BatchFlags orc_flags;
  int nmax = 8;
  auto* orc = app.add_subcommand("oracle", "cross-check the exact solvers against brute-force "
                                           "references on small inputs");
  add_batch_flags(orc, orc_flags);
  orc->add_option("--nmax", nmax, "largest n handed to the brute-force oracles")
      ->check(CLI::Range(0, 10))
      ->capture_default_str();
  orc->callback([&] { exit_code = run_oracle(orc_flags, nmax); });

  auto* gen = app.add_subcommand("generate", "emit graph6 lines for a named family");
  gen->require_subcommand(1);
  std::string sidecar_path;
  gen->add_option("--sidecar", sidecar_path, "also write one JSON record per graph to this file");
  std::vector<GenOut> outs;
  gen->callback([&] { exit_code = run_generate(outs, sidecar_path); });

  {
    auto* c = gen->add_subcommand("extremal-even", "K_{t,t} minus a (t-1)-matching, n = 2t");
    auto t = std::make_shared<int>(3);
    c->add_option("--t", *t, "half the vertex count")->required()->check(CLI::Range(2, 1000));
    c->callback([&outs, t] {
      outs.push_back(pack(extremal_even(*t).graph, "extremal_even", {{"t", *t}},
                          {{"n", 2 * *t}, {"grundy", *t + 1}, {"gamma", 2}}));
    });
  }
  {
    auto* c = gen->add_subcommand("extremal-odd", "the odd-order tight family, n = 2t+1");
    auto t = std::make_shared<int>(3);
    c->add_option("--t", *t, "parameter, n = 2t+1")->required()->check(CLI::Range(3, 1000));
    c->callback([&outs, t] {
      outs.push_back(pack(extremal_odd(*t).graph, "extremal_odd", {{"t", *t}},
                          {{"n", 2 * *t + 1}, {"grundy", *t + 1}, {"gamma", 3}, {"s", 3}}));
    });
  }
  {
    auto* c = gen->add_subcommand("prop-gamma", "clique Q of size q plus an independent "
                                                "dominating set of d leaves");
    auto q = std::make_shared<int>(3);
    auto d = std::make_shared<int>(1);
    c->add_option("--q", *q, "clique size")->required()->check(CLI::PositiveNumber);
    c->add_option("--d", *d, "dominating set size, at most q")->required()->check(CLI::PositiveNumber);
    c->callback([&outs, q, d] {
      outs.push_back(pack(prop_gamma_equality(*q, *d), "prop_gamma_equality",
                          {{"q", *q}, {"d", *d}},
                          {{"n", *q + *d}, {"grundy", *q + 1}, {"gamma", *d}}));
    });
  }
  {
    auto* c = gen->add_subcommand("atom", "tree atom T_k on 2^(k-1) vertices");
    auto k = std::make_shared<int>(4);
    c->add_option("--k", *k, "atom index")->required()->check(CLI::Range(1, 21));
    c->callback([&outs, k] {
      outs.push_back(pack(tree_atom(*k), "tree_atom", {{"k", *k}},
                          {{"n", std::int64_t{1} << (*k - 1)}, {"grundy", *k}}));
    });
  }
  {
    auto* c = gen->add_subcommand("cycle", "cycle C_n");
    auto n = std::make_shared<int>(5);
    c->add_option("--n", *n, "length")->required()->check(CLI::Range(3, 1000000));
    c->callback([&outs, n] { outs.push_back(pack(cycle(*n), "cycle", {{"n", *n}}, {})); });
  }
  {
    auto* c = gen->add_subcommand("path", "path P_n");
    auto n = std::make_shared<int>(4);
    c->add_option("--n", *n, "vertex count")->required()->check(CLI::Range(0, 1000000));
    c->callback([&outs, n] { outs.push_back(pack(path(*n), "path", {{"n", *n}}, {})); });
  }
  {
    auto* c = gen->add_subcommand("complete", "complete graph K_n");
    auto n = std::make_shared<int>(4);
    c->add_option("--n", *n, "vertex count")->required()->check(CLI::Range(0, 10000));
    c->callback([&outs, n] {
      outs.push_back(pack(complete(*n), "complete", {{"n", *n}},
                          {{"n", *n}, {"grundy", *n}, {"gamma", std::min(*n, 1)}}));
    });
  }
  {
    auto* c = gen->add_subcommand("complete-bipartite", "complete bipartite K_{a,b}");
    auto a = std::make_shared<int>(3);
    auto b = std::make_shared<int>(3);
    c->add_option("--a", *a, "left part size")->required()->check(CLI::Range(0, 10000));
    c->add_option("--b", *b, "right part size")->required()->check(CLI::Range(0, 10000));
    c->callback([&outs, a, b] {
      outs.push_back(
          pack(complete_bipartite(*a, *b), "complete_bipartite", {{"a", *a}, {"b", *b}}, {}));
    });
  }
  {
    auto* c = gen->add_subcommand("petersen", "the Petersen graph");
    c->callback([&outs] {
      outs.push_back(pack(petersen(), "petersen", {},
                          {{"n", 10}, {"girth", 5}, {"gamma", 3}, {"grundy", 4}}));
    });
  }
  {
    auto* c = gen->add_subcommand("random", "Erdos-Renyi G(n, p) samples");
    auto n = std::make_shared<int>(10);
    auto p = std::make_shared<double>(0.5);
    auto count = std::make_shared<int>(1);
    auto seed = std::make_shared<std::uint64_t>(0);
    c->add_option("--n", *n, "vertex count")->required()->check(CLI::Range(0, 100000));
    c->add_option("--p", *p, "edge probability")->required()->check(CLI::Range(0.0, 1.0));
    c->add_option("--count", *count, "number of samples")->check(CLI::PositiveNumber)
        ->capture_default_str();
    c->add_option("--seed", *seed, "seed of the first sample; sample i uses seed + i")
        ->capture_default_str();
    c->callback([&outs, n, p, count, seed] {
      for (int i = 0; i < *count; ++i)
        outs.push_back(pack(random_graph(*n, *p, *seed + static_cast<std::uint64_t>(i)), "random",
                            {{"n", *n},
                             {"p_ppm", std::llround(*p * 1e6)},
                             {"seed", static_cast<std::int64_t>(*seed + static_cast<std::uint64_t>(i))}},
                            {}));
    });
  }
  {
    auto* c = gen->add_subcommand("random-girth", "G(n, p) samples filtered to girth >= gmin");
    auto n = std::make_shared<int>(12);
    auto p = std::make_shared<double>(0.15);
    auto gmin = std::make_shared<int>(5);
    auto attempts = std::make_shared<int>(100);
    auto count = std::make_shared<int>(1);
    auto seed = std::make_shared<std::uint64_t>(0);
    c->add_option("--n", *n, "vertex count")->required()->check(CLI::Range(0, 100000));
    c->add_option("--p", *p, "edge probability")->required()->check(CLI::Range(0.0, 1.0));
    c->add_option("--gmin", *gmin, "smallest admissible girth")->required()
        ->check(CLI::Range(3, 1000));
    c->add_option("--max-attempts", *attempts, "rejection budget per sample")
        ->check(CLI::PositiveNumber)->capture_default_str();
    c->add_option("--count", *count, "number of samples")->check(CLI::PositiveNumber)
        ->capture_default_str();
    c->add_option("--seed", *seed, "base seed; sample i starts at seed + i*max-attempts")
        ->capture_default_str();
    c->callback([&outs, n, p, gmin, attempts, count, seed] {
      for (int i = 0; i < *count; ++i) {
        const std::uint64_t base =
            *seed + static_cast<std::uint64_t>(i) * static_cast<std::uint64_t>(*attempts);
        auto got = random_with_min_girth(*n, *p, *gmin, base, *attempts);
        if (!got)
          throw std::runtime_error("random-girth: no sample reached girth >= " +
                                   std::to_string(*gmin) + " within " +
                                   std::to_string(*attempts) + " attempts");
        outs.push_back(pack(std::move(*got), "random_girth",
                            {{"n", *n},
                             {"p_ppm", std::llround(*p * 1e6)},
                             {"gmin", *gmin},
                             {"seed", static_cast<std::int64_t>(base)},
                             {"max_attempts", *attempts}},
                            {}));
      }
    });
  }

  // --sidecar may trail the family name: unmatched family args climb to generate
  for (auto* sub : gen->get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  int wit_k = 0, wit_g = 0;
  std::string wit_dot, wit_format = "json";
  auto* wit = app.add_subcommand("witness", "build the demand tree behind the girth bounds, its "
                                            "star partition, and the count identity report");
  wit->add_option("--k", wit_k, "Grundy value the witness certifies")->required()
      ->check(CLI::Range(2, 21));
  wit->add_option("--g", wit_g, "girth the construction is tuned to")->required()
      ->check(CLI::Range(5, 43));
  wit->add_option("--format", wit_format, "output format")
      ->check(CLI::IsMember({"json", "tsv"}))->capture_default_str();
  wit->add_option("--dot", wit_dot, "also write a DOT rendering of the tree to this file");
  wit->callback([&] { exit_code = run_witness(wit_k, wit_g, wit_dot, wit_format); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return exit_code;
}
