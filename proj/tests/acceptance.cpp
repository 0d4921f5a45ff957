// Acceptance harness: one PASS/FAIL line per criterion, exit 0 only if all
// pass. Each criterion recomputes its corpus deterministically, checks the
// library against the independent reference implementations in test_util.hpp,
// and reports counts plus the first failure seen.

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "grundylab/bounds.hpp"
#include "grundylab/coloring.hpp"
#include "grundylab/domination.hpp"
#include "grundylab/generators.hpp"
#include "grundylab/graph.hpp"
#include "grundylab/prng.hpp"
#include "grundylab/witness.hpp"
#include "test_util.hpp"

using namespace grundylab;

namespace {

struct Tally {
  std::atomic<long long> checked{0};
  std::atomic<long long> failures{0};
  std::mutex mu;
  std::string first;

  void fail(const std::string& what) {
    failures.fetch_add(1);
    std::lock_guard<std::mutex> lock(mu);
    if (first.empty()) first = what;
  }
  bool ok() const { return failures.load() == 0; }
};

struct Criterion {
  bool pass = false;
  std::string stats;
};

Criterion finish(const Tally& t, std::string stats) {
  if (!t.ok()) stats += "; first: " + t.first;
  return {t.ok(), std::move(stats)};
}

void parallel_for(long long count, const std::function<void(long long)>& fn, Tally& t) {
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned workers =
      static_cast<unsigned>(std::min<long long>(hw, std::max<long long>(count, 1)));
  std::atomic<long long> next{0};
  auto body = [&] {
    for (;;) {
      const long long i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (const std::exception& e) {
        t.fail("item " + std::to_string(i) + " threw: " + e.what());
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(body);
  body();
  for (auto& th : pool) th.join();
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Every graph on exactly n labeled vertices, one per edge subset.
Graph graph_from_mask(int n, std::uint64_t mask) {
  std::vector<std::pair<int, int>> edges;
  int bit = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b, ++bit)
      if (mask >> bit & 1) edges.emplace_back(a, b);
  return Graph(n, edges);
}

std::int64_t binom(int a, int b) {
  if (b < 0 || b > a) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

// deterministic random corpus item: vertex count cycles, density varies
Graph corpus_graph(long long i, int nmax, int nmin = 1) {
  const int span = nmax - nmin + 1;
  const int n = nmin + static_cast<int>(i % span);
  const double p = 0.08 + 0.09 * static_cast<double>((i / span) % 10);
  return random_graph(n, p, 0x9E3779B97F4A7C15ull + static_cast<std::uint64_t>(i));
}

// connected sample with minimum degree 1, by bounded rejection
Graph connected_corpus_graph(long long i, int nmax, Tally& t) {
  const int n = 2 + static_cast<int>(i % (nmax - 1));
  const double p = std::min(1.0, 0.3 + 0.07 * static_cast<double>((i / (nmax - 1)) % 7));
  for (int attempt = 0; attempt < 4000; ++attempt) {
    Graph g = random_graph(n, p,
                           0xC0FFEEull * static_cast<std::uint64_t>(i + 1) +
                               static_cast<std::uint64_t>(attempt));
    if (g.is_connected() && g.min_degree() >= 1) return g;
  }
  t.fail("rejection sampling exhausted at item " + std::to_string(i));
  return complete(n);
}

Criterion criterion1() {
  const auto start = std::chrono::steady_clock::now();
  Tally t;

  std::vector<std::pair<int, std::uint64_t>> all;
  for (int n = 0; n <= 6; ++n) {
    const std::uint64_t graphs = 1ull << (n * (n - 1) / 2);
    for (std::uint64_t m = 0; m < graphs; ++m) all.emplace_back(n, m);
  }
  auto check_one = [&](const Graph& g, const char* origin, long long i) {
    const GrundyResult gr = grundy_number_exact(g);
    const int want_grundy = testutil::grundy_oracle(g);
    if (!gr.exact || gr.k != want_grundy)
      t.fail(std::string(origin) + " item " + std::to_string(i) + ": grundy " +
             std::to_string(gr.k) + " vs oracle " + std::to_string(want_grundy));
    const DominationWitness dw = domination_number_exact(g);
    const int want_gamma = testutil::gamma_oracle(g);
    if (dw.gamma != want_gamma || !is_dominating_set(g, dw.set))
      t.fail(std::string(origin) + " item " + std::to_string(i) + ": gamma " +
             std::to_string(dw.gamma) + " vs oracle " + std::to_string(want_gamma));
    t.checked.fetch_add(1);
  };
  parallel_for(static_cast<long long>(all.size()),
               [&](long long i) {
                 const auto& [n, mask] = all[static_cast<std::size_t>(i)];
                 check_one(graph_from_mask(n, mask), "exhaustive", i);
               },
               t);
  const long long random_count = 10000;
  parallel_for(random_count, [&](long long i) { check_one(corpus_graph(i, 8), "random", i); },
               t);

  const double secs = seconds_since(start);
  if (secs > 600.0) t.fail("runtime " + std::to_string(secs) + "s exceeds 10 minutes");
  std::ostringstream s;
  s << all.size() << " exhaustive (n <= 6) + " << random_count
    << " random (n <= 8) graphs against the ordering and subset oracles, "
    << t.failures.load() << " divergences, " << std::fixed << std::setprecision(1) << secs
    << "s";
  return finish(t, s.str());
}

Criterion criterion2() {
  Tally t;
  const long long count = 10000;
  parallel_for(count,
               [&](long long i) {
                 const Graph g = connected_corpus_graph(i, 10, t);
                 const DominationWitness dw = domination_number_exact(g);
                 const StarPartitionResult sp = star_partition_number_exact(g);
                 if (sp.s != dw.gamma)
                   t.fail("s = " + std::to_string(sp.s) + " but gamma = " +
                          std::to_string(dw.gamma) + " at item " + std::to_string(i));
                 std::string defect;
                 if (!is_star_partition(g, sp.partition, &defect) ||
                     static_cast<int>(sp.partition.parts.size()) != sp.s)
                   t.fail("solver partition invalid at item " + std::to_string(i) + ": " + defect);
                 const StarPartition built = star_partition_from_dominating_set(g, dw.set);
                 if (!is_star_partition(g, built, &defect))
                   t.fail("constructed partition invalid at item " + std::to_string(i) + ": " +
                          defect);
                 if (static_cast<int>(built.parts.size()) > dw.gamma)
                   t.fail("constructed partition uses " + std::to_string(built.parts.size()) +
                          " parts with gamma " + std::to_string(dw.gamma) + " at item " +
                          std::to_string(i));
                 t.checked.fetch_add(1);
               },
               t);
  std::ostringstream s;
  s << t.checked.load() << " connected graphs with min degree 1 (n <= 10), star number equals "
    << "gamma with valid partitions, " << t.failures.load() << " violations";
  return finish(t, s.str());
}

// corpus shared by the soundness sweep (criterion 3) and the improvement
// census (criterion 8)
std::vector<Graph> bound_corpus() {
  std::vector<Graph> out;
  for (int tt = 2; tt <= 6; ++tt) out.push_back(extremal_even(tt).graph);
  for (int tt = 3; tt <= 6; ++tt) out.push_back(extremal_odd(tt).graph);
  for (int k = 1; k <= 7; ++k) out.push_back(tree_atom(k));
  // witness trees kept small enough for an exact Grundy run
  for (int g = 5; g <= 13; ++g) {
    const bool even = g % 2 == 0;
    const int depth = even ? g / 2 : (g + 1) / 2;
    for (int k = even ? (g + 2) / 2 : (g + 1) / 2; k <= 12; ++k) {
      if (count_identities(k, g).v_h > 48) break;
      out.push_back(witness_tree(k, depth, even).graph);
    }
  }
  for (int n = 3; n <= 12; ++n) out.push_back(cycle(n));
  for (int n = 0; n <= 12; ++n) out.push_back(path(n));
  for (int n = 1; n <= 10; ++n) out.push_back(complete(n));
  for (int a = 1; a <= 5; ++a)
    for (int b = a; b <= 5; ++b) out.push_back(complete_bipartite(a, b));
  out.push_back(petersen());
  return out;
}

struct SweepOutcome {
  Tally sound;    // criterion 3
  Tally improve;  // criterion 8
  std::atomic<long long> applicable{0};
  std::atomic<long long> full_strict{0};
};

void sweep_graph(const Graph& g, const std::string& label, SweepOutcome& o) {
  BoundReport r = check_all(g, {});
  if (!r.exact) {
    o.sound.fail(label + ": grundy not exact");
    return;
  }
  for (const auto& e : r.entries)
    if (e.applicability == Applicability::applicable) {
      o.applicable.fetch_add(1);
      if (!e.satisfied.has_value() || !*e.satisfied)
        o.sound.fail(label + ": " + e.name + " unsatisfied");
      if (*e.rhs < r.grundy - 1e-9) o.sound.fail(label + ": " + e.name + " rhs below grundy");
    }
  for (const auto& a : r.anomalies) o.sound.fail(label + ": " + a);
  o.sound.checked.fetch_add(1);

  if (r.girth.is_finite() && r.girth.is_odd()) {
    if (r.gamma >= 1 && (!r.odd_improves_zaker.has_value() || !*r.odd_improves_zaker))
      o.improve.fail(label + ": odd-girth bound fails to improve on the zaker bound");
    if (r.gamma >= 2 && (!r.odd_base_strict.has_value() || !*r.odd_base_strict))
      o.improve.fail(label + ": scaled base not strictly smaller");
    if (r.odd_full_strict.has_value() && *r.odd_full_strict) o.full_strict.fetch_add(1);
    o.improve.checked.fetch_add(1);
  }
}

void run_sweep(SweepOutcome& o) {
  const std::vector<Graph> fixed = bound_corpus();
  parallel_for(static_cast<long long>(fixed.size()),
               [&](long long i) {
                 sweep_graph(fixed[static_cast<std::size_t>(i)], "fixture " + std::to_string(i),
                             o);
               },
               o.sound);
  parallel_for(10000,
               [&](long long i) { sweep_graph(corpus_graph(i, 14), "random " + std::to_string(i), o); },
               o.sound);
}

Criterion criterion4() {
  Tally t;
  for (int tt = 2; tt <= 6; ++tt) {
    const Graph g = extremal_even(tt).graph;
    const int grundy = grundy_number_exact(g).k;
    const int gamma = domination_number_exact(g).gamma;
    const int n = g.vertex_count();
    if (grundy != tt + 1)
      t.fail("even t=" + std::to_string(tt) + ": grundy " + std::to_string(grundy));
    if (gamma != 2) t.fail("even t=" + std::to_string(tt) + ": gamma " + std::to_string(gamma));
    if (n - gamma + 4 != 2 * grundy || (n + 2) / 2 != grundy)
      t.fail("even t=" + std::to_string(tt) + ": triangle-free bound not an exact tie");
    t.checked.fetch_add(1);
  }
  for (int tt = 3; tt <= 6; ++tt) {
    const Graph g = extremal_odd(tt).graph;
    const int grundy = grundy_number_exact(g).k;
    const int gamma = domination_number_exact(g).gamma;
    if (grundy != tt + 1)
      t.fail("odd t=" + std::to_string(tt) + ": grundy " + std::to_string(grundy));
    if (gamma != 3) t.fail("odd t=" + std::to_string(tt) + ": gamma " + std::to_string(gamma));
    if (g.vertex_count() - gamma + 4 != 2 * grundy)
      t.fail("odd t=" + std::to_string(tt) + ": triangle-free bound not an exact tie");
    t.checked.fetch_add(1);
  }
  std::ostringstream s;
  s << t.checked.load() << " extremal instances, integer tightness throughout, "
    << t.failures.load() << " misses";
  return finish(t, s.str());
}

Criterion criterion5() {
  Tally t;
  parallel_for(10000,
               [&](long long i) {
                 const Graph g = connected_corpus_graph(i, 10, t);
                 const int gamma = domination_number_exact(g).gamma;
                 const int grundy = grundy_number_exact(g).k;
                 const bool holds = equality_characterization_holds(g, gamma, grundy);
                 if (holds != (grundy == g.vertex_count() - gamma + 1))
                   t.fail("biconditional broken at item " + std::to_string(i));
                 t.checked.fetch_add(1);
               },
               t);
  for (int q = 2; q <= 5; ++q)
    for (int d = 1; d <= std::min(q, 4); ++d) {
      const Graph g = prop_gamma_equality(q, d);
      const int gamma = domination_number_exact(g).gamma;
      const int grundy = grundy_number_exact(g).k;
      if (gamma != d || grundy != q + 1 || grundy != g.vertex_count() - gamma + 1 ||
          !equality_characterization_holds(g, gamma, grundy))
        t.fail("prop_gamma_equality(" + std::to_string(q) + "," + std::to_string(d) + ") off");
      t.checked.fetch_add(1);
    }
  std::ostringstream s;
  s << t.checked.load() << " graphs, characterization is exactly grundy == n - gamma + 1, "
    << t.failures.load() << " mismatches";
  return finish(t, s.str());
}

Criterion criterion6() {
  Tally t;
  auto check_pair = [&](int k, int g) {
    const bool even = g % 2 == 0;
    const int depth = even ? g / 2 : (g + 1) / 2;
    const LeveledWitness w = witness_tree(k, depth, even);
    const StarPartition sp = witness_star_partition(w, g);
    const CountIdentity id = count_identities(k, g);
    std::int64_t vh_sum = 0;
    for (int i = 0; i < depth; ++i) vh_sum += even ? 2 * binom(k - 2, i) : binom(k - 1, i);
    const std::string tag = "(k=" + std::to_string(k) + ",g=" + std::to_string(g) + ")";
    if (id.v_h != w.graph.vertex_count() || id.v_h != vh_sum)
      t.fail(tag + ": vertex count " + std::to_string(w.graph.vertex_count()) +
             " vs closed form " + std::to_string(id.v_h));
    if (id.s_prime != static_cast<std::int64_t>(sp.parts.size()))
      t.fail(tag + ": " + std::to_string(sp.parts.size()) + " stars vs closed form " +
             std::to_string(id.s_prime));
    std::string defect;
    if (!is_star_partition(w.graph, sp, &defect)) t.fail(tag + ": invalid partition, " + defect);
    t.checked.fetch_add(1);
    return id;
  };
  for (int g = 5; g <= 13; ++g) {
    const bool even = g % 2 == 0;
    for (int k = even ? (g + 4) / 2 : (g + 3) / 2; k <= 12; ++k) check_pair(k, g);
  }
  const struct {
    int k, g;
    std::int64_t vh, sp;
  } spots[] = {{4, 7, 8, 4}, {4, 5, 7, 3}, {5, 8, 16, 8}, {5, 6, 14, 6}};
  for (const auto& sv : spots) {
    const CountIdentity id = check_pair(sv.k, sv.g);
    if (id.v_h != sv.vh || id.s_prime != sv.sp)
      t.fail("spot (k=" + std::to_string(sv.k) + ",g=" + std::to_string(sv.g) + ") gives " +
             std::to_string(id.v_h) + "/" + std::to_string(id.s_prime) + ", expected " +
             std::to_string(sv.vh) + "/" + std::to_string(sv.sp));
  }
  std::ostringstream s;
  s << t.checked.load()
    << " (k, g) pairs incl. 4 spot values, construction matches the closed forms exactly, "
    << t.failures.load() << " mismatches";
  return finish(t, s.str());
}

Criterion criterion7() {
  Tally t;
  auto expect = [&](bool cond, const std::string& what) {
    if (!cond) t.fail(what);
    t.checked.fetch_add(1);
  };
  const Graph pet = petersen();
  expect(pet.girth() == Girth::finite(5), "petersen girth");
  expect(domination_number_exact(pet).gamma == 3, "petersen gamma");
  expect(grundy_number_exact(pet).k == 4, "petersen grundy");
  expect(grundy_number_exact(path(4)).k == 3, "P4 grundy");
  expect(domination_number_exact(path(4)).gamma == 2, "P4 gamma");
  expect(grundy_number_exact(cycle(4)).k == 2, "C4 grundy");
  expect(grundy_number_exact(cycle(6)).k == 3, "C6 grundy");
  expect(domination_number_exact(cycle(6)).gamma == 2, "C6 gamma");
  for (int n = 1; n <= 8; ++n) {
    expect(grundy_number_exact(complete(n)).k == n, "K_n grundy at n=" + std::to_string(n));
    expect(domination_number_exact(complete(n)).gamma == 1, "K_n gamma at n=" + std::to_string(n));
  }
  for (int k = 1; k <= 10; ++k)
    expect(tree_atom(k).vertex_count() == (1 << (k - 1)),
           "tree atom size at k=" + std::to_string(k));
  for (int k = 1; k <= 7; ++k)
    expect(grundy_number_exact(tree_atom(k)).k == k,
           "tree atom grundy at k=" + std::to_string(k));
  std::ostringstream s;
  s << t.checked.load() << " known values, " << t.failures.load() << " misses";
  return finish(t, s.str());
}

}  // namespace

int main() {
  bool all = true;
  auto report = [&](int id, const Criterion& c) {
    std::printf("%s criterion %d: %s\n", c.pass ? "PASS" : "FAIL", id, c.stats.c_str());
    std::fflush(stdout);
    all = all && c.pass;
  };

  report(1, criterion1());
  report(2, criterion2());

  SweepOutcome sweep;
  run_sweep(sweep);
  {
    std::ostringstream s;
    s << sweep.sound.checked.load() << " corpus graphs, " << sweep.applicable.load()
      << " applicable bound checks at tolerance 1e-9, " << sweep.sound.failures.load()
      << " anomalies";
    report(3, finish(sweep.sound, s.str()));
  }

  report(4, criterion4());
  report(5, criterion5());
  report(6, criterion6());
  report(7, criterion7());

  {
    std::ostringstream s;
    s << sweep.improve.checked.load()
      << " odd-girth corpus graphs: gamma >= 1 improves on the zaker bound, gamma >= 2 scales "
      << "the base strictly, " << sweep.full_strict.load() << " outright strict improvements, "
      << sweep.improve.failures.load() << " violations";
    report(8, finish(sweep.improve, s.str()));
  }
  return all ? 0 : 1;
}
