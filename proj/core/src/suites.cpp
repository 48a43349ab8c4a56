#include "gracegraph/suites.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <fstream>
#include <functional>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

#include "gracegraph/epsilon.hpp"
#include "gracegraph/families.hpp"
#include "gracegraph/graph6.hpp"
#include "gracegraph/iso.hpp"
#include "gracegraph/solver.hpp"

namespace gracegraph {

namespace {

using ordered_json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

// Parity-certificate verdicts are re-derived by exhaustion up to this
// size, so the certificate can never silently disagree with search.
constexpr int kRgCrossCheckMaxEdges = 13;

long long param_or(const SuiteParams& p, const std::string& key,
                   long long dflt) {
  auto it = p.ints.find(key);
  return it == p.ints.end() ? dflt : it->second;
}

void cap_param(const std::string& suite, const std::string& key,
               long long value, long long lo, long long hi) {
  if (value < lo || value > hi)
    fail_input("suite " + suite + " caps " + key + " to " +
               std::to_string(lo) + ".." + std::to_string(hi) + ", got " +
               std::to_string(value));
}

std::string assess(Verdict v, bool expect_graceful) {
  switch (v) {
    case Verdict::graceful:
      return expect_graceful ? "supported" : "refuted";
    case Verdict::nongraceful_exhausted:
    case Verdict::nongraceful_rosa_golomb:
      return expect_graceful ? "refuted" : "supported";
    case Verdict::budget_exceeded:
      return "inconclusive";
  }
  return "inconclusive";
}

SearchOutcome solve_checked(const Graph& g, const SolveOptions& opts) {
  SearchOutcome out = solve_graceful(g, opts);
  if (out.verdict == Verdict::nongraceful_rosa_golomb &&
      g.size() <= kRgCrossCheckMaxEdges) {
    SolveOptions full = opts;
    full.rosa_golomb_shortcut = false;
    SearchOutcome ex = solve_graceful(g, full);
    if (ex.verdict == Verdict::graceful)
      throw std::logic_error(
          "parity certificate contradicts exhaustive search on " +
          encode_graph6(g));
  }
  return out;
}

SuiteRecord base_record(const Graph& g, const std::string& family) {
  SuiteRecord r;
  r.graph6 = encode_graph6(g);
  r.p = g.order();
  r.q = g.size();
  r.family = family;
  r.epsilon_class = to_string(classify_epsilon(g).epsilon_class);
  return r;
}

SuiteRecord solve_record(const Graph& g, const std::string& family,
                         const std::string& claim, bool expect_graceful,
                         const SolveOptions& opts) {
  SuiteRecord r = base_record(g, family);
  SearchOutcome out = solve_checked(g, opts);
  r.claim = claim;
  r.verdict = to_string(out.verdict);
  r.assessment = assess(out.verdict, expect_graceful);
  if (out.witness) r.witness = out.witness->labels;
  r.nodes_expanded = out.nodes_expanded;
  r.wall_ms = out.wall_ms;
  return r;
}

SuiteRecord opt_record(const Graph& g, const std::string& family,
                       const std::string& claim,
                       const std::function<std::string(const SearchOutcome&)>&
                           judge,
                       const SolveOptions& opts) {
  SuiteRecord r = base_record(g, family);
  SearchOutcome out = optimal_labeling(g, opts);
  r.claim = claim;
  r.verdict = to_string(out.verdict);
  r.assessment = judge(out);
  r.opt = out.opt;
  if (out.witness) r.witness = out.witness->labels;
  r.nodes_expanded = out.nodes_expanded;
  r.wall_ms = out.wall_ms;
  return r;
}

using Task = std::function<SuiteRecord()>;

std::vector<SuiteRecord> run_tasks(const std::vector<Task>& tasks,
                                   int workers) {
  std::vector<SuiteRecord> out(tasks.size());
  std::atomic<size_t> next{0};
  std::exception_ptr first_error;
  std::mutex mu;
  auto work = [&] {
    try {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= tasks.size()) break;
        out[i] = tasks[i]();
      }
    } catch (...) {
      std::lock_guard<std::mutex> lk(mu);
      if (!first_error) first_error = std::current_exception();
    }
  };
  int w = std::clamp(workers, 1, (int)std::max<size_t>(tasks.size(), 1));
  if (w <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < w; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);
  return out;
}

int inner_workers(int workers, size_t tasks) {
  return std::max(1, workers / (int)std::max<size_t>(
                                   std::min<size_t>(tasks, workers), 1));
}

SuiteReport finish(std::string suite,
                   std::vector<std::pair<std::string, std::string>> params,
                   std::vector<SuiteRecord> records) {
  SuiteReport r;
  r.suite = std::move(suite);
  std::sort(params.begin(), params.end());
  r.parameters = std::move(params);
  std::stable_sort(records.begin(), records.end(),
                   [](const SuiteRecord& a, const SuiteRecord& b) {
                     return a.graph6 != b.graph6 ? a.graph6 < b.graph6
                                                 : a.family < b.family;
                   });
  std::set<std::string> refuted;
  for (const SuiteRecord& rec : records) {
    if (rec.assessment == "supported") ++r.summary.supported;
    else if (rec.assessment == "refuted") {
      ++r.summary.refuted;
      refuted.insert(rec.graph6);
    } else if (rec.assessment == "inconclusive") ++r.summary.inconclusive;
    else ++r.summary.informational;
  }
  r.records = std::move(records);
  r.counterexamples.assign(refuted.begin(), refuted.end());
  return r;
}

std::vector<std::pair<std::string, std::string>> echo(
    std::initializer_list<std::pair<std::string, long long>> kv) {
  std::vector<std::pair<std::string, std::string>> out;
  for (auto& [k, v] : kv) out.emplace_back(k, std::to_string(v));
  return out;
}

// --- deterministic corpora ---

const std::vector<std::string>& eps_spec_strings(int residue) {
  static const std::vector<std::string> e0 = {
      "complete_bipartite(2,2)", "complete_bipartite(2,4)",
      "complete_bipartite(2,6)", "complete_bipartite(2,8)",
      "cycle(4)",                "cycle(8)",
      "cycle(12)",               "windmill_cycles(2,4)",
      "windmill_cycles(3,4)",    "subdivision(complete_bipartite(2,4),1)"};
  static const std::vector<std::string> e1 = {
      "cycle(5)",           "cycle(9)",           "cycle(13)",
      "windmill_cycles(2,5)", "windmill_cycles(3,5)", "snake_cycles(2,5)",
      "snake_cycles(3,5)"};
  static const std::vector<std::string> e2 = {
      "cycle(6)", "cycle(10)", "windmill_cycles(2,6)", "windmill_cycles(3,6)",
      "snake_cycles(2,6)"};
  static const std::vector<std::string> e3 = {
      "cycle(3)",           "cycle(7)",           "cycle(11)",
      "dutch_windmill(2)",  "dutch_windmill(3)",  "dutch_windmill(4)",
      "dutch_windmill(5)",  "snake_triangular(3)", "snake_triangular(4)",
      "windmill_cycles(2,7)"};
  switch (residue) {
    case 0: return e0;
    case 1: return e1;
    case 2: return e2;
    case 3: return e3;
  }
  fail_input("epsilon corpus residue must be 0..3, got " +
             std::to_string(residue));
}

// --- individual suites ---

SuiteReport suite_cycles(const SuiteParams& sp, int workers) {
  long long n_max = param_or(sp, "n_max", 14);
  cap_param("cycles", "n_max", n_max, 3, 40);
  long long budget = param_or(sp, "budget", suite_default_budget("cycles"));
  std::vector<Task> tasks;
  for (int n = 3; n <= n_max; ++n) {
    tasks.push_back([n, budget, workers, total = n_max - 2] {
      SolveOptions opts;
      opts.budget = budget;
      opts.workers = inner_workers(workers, total);
      return solve_record(make(FamilySpec::parse("cycle(" + std::to_string(n) + ")")),
                          "cycle(" + std::to_string(n) + ")",
                          "graceful iff order is 0 or 3 (mod 4)",
                          n % 4 == 0 || n % 4 == 3, opts);
    });
  }
  return finish("cycles", echo({{"n_max", n_max}, {"budget", budget}}),
                run_tasks(tasks, workers));
}

SuiteReport suite_wheels(const SuiteParams& sp, int workers) {
  long long n_max = param_or(sp, "n_max", 8);
  cap_param("wheels", "n_max", n_max, 3, 12);
  long long budget = param_or(sp, "budget", suite_default_budget("wheels"));
  std::vector<Task> tasks;
  for (int n = 3; n <= n_max; ++n) {
    tasks.push_back([n, budget, workers, total = n_max - 2] {
      SolveOptions opts;
      opts.budget = budget;
      opts.workers = inner_workers(workers, total);
      std::string spec = "wheel(" + std::to_string(n) + ")";
      return solve_record(make(FamilySpec::parse(spec)), spec,
                          "wheels are graceful", true, opts);
    });
  }
  return finish("wheels", echo({{"n_max", n_max}, {"budget", budget}}),
                run_tasks(tasks, workers));
}

SuiteReport suite_dutch(const SuiteParams& sp, int workers) {
  long long m_max = param_or(sp, "m_max", 6);
  cap_param("dutch", "m_max", m_max, 1, 8);
  long long budget = param_or(sp, "budget", suite_default_budget("dutch"));
  std::vector<Task> tasks;
  for (int m = 1; m <= m_max; ++m) {
    tasks.push_back([m, budget, workers, total = m_max] {
      SolveOptions opts;
      opts.budget = budget;
      opts.workers = inner_workers(workers, total);
      std::string spec = "dutch_windmill(" + std::to_string(m) + ")";
      return solve_record(make(FamilySpec::parse(spec)), spec,
                          "graceful iff the blade count is 0 or 1 (mod 4)",
                          m % 4 == 0 || m % 4 == 1, opts);
    });
  }
  return finish("dutch", echo({{"m_max", m_max}, {"budget", budget}}),
                run_tasks(tasks, workers));
}

SuiteReport suite_french(const SuiteParams& sp, int workers) {
  long long m_max = param_or(sp, "m_max", 4);
  cap_param("french", "m_max", m_max, 1, 5);
  long long budget = param_or(sp, "budget", suite_default_budget("french"));
  std::vector<Task> tasks;
  for (int m = 1; m <= m_max; ++m) {
    tasks.push_back([m, budget, workers, total = m_max] {
      SolveOptions opts;
      opts.budget = budget;
      opts.workers = inner_workers(workers, total);
      std::string spec = "windmill_complete(" + std::to_string(m) + ",4)";
      SuiteRecord r = solve_record(make(FamilySpec::parse(spec)), spec,
                                   "graceful for 4 or more blades", m >= 4,
                                   opts);
      if (m < 4 && r.assessment != "inconclusive") {
        r.assessment = "informational";  // claim silent below 4 blades
        r.detail = "below the conjecture's blade range";
      }
      return r;
    });
  }
  return finish("french", echo({{"m_max", m_max}, {"budget", budget}}),
                run_tasks(tasks, workers));
}

SuiteReport suite_windmill_c4(const SuiteParams& sp, int workers) {
  long long m_max = param_or(sp, "m_max", 5);
  cap_param("windmill_c4", "m_max", m_max, 1, 7);
  long long budget =
      param_or(sp, "budget", suite_default_budget("windmill_c4"));
  std::vector<Task> tasks;
  for (int m = 1; m <= m_max; ++m) {
    tasks.push_back([m, budget, workers, total = m_max] {
      SolveOptions opts;
      opts.budget = budget;
      opts.workers = inner_workers(workers, total);
      std::string spec = "windmill_cycles(" + std::to_string(m) + ",4)";
      return solve_record(make(FamilySpec::parse(spec)), spec,
                          "4-cycle windmills are graceful", true, opts);
    });
  }
  return finish("windmill_c4", echo({{"m_max", m_max}, {"budget", budget}}),
                run_tasks(tasks, workers));
}

SuiteReport suite_nongraceful_catalog(const SuiteParams& sp, int workers) {
  long long budget =
      param_or(sp, "budget", suite_default_budget("nongraceful_catalog"));
  const std::vector<std::string> specs = {
      "dutch_windmill(2)", "dutch_windmill(3)", "windmill_complete(2,4)",
      "two_cliques_shared_node(4,3)"};
  std::vector<Task> tasks;
  for (const std::string& spec : specs) {
    tasks.push_back([spec, budget, workers, total = specs.size()] {
      SolveOptions opts;
      opts.budget = budget;
      opts.workers = inner_workers(workers, total);
      Graph g = make(FamilySpec::parse(spec));
      return opt_record(
          g, spec, "nongraceful, with the least achievable max label",
          [&](const SearchOutcome& out) {
            if (out.verdict == Verdict::budget_exceeded) return "inconclusive";
            return out.verdict == Verdict::graceful ? "refuted" : "supported";
          },
          opts);
    });
  }
  return finish("nongraceful_catalog", echo({{"budget", budget}}),
                run_tasks(tasks, workers));
}

SuiteReport suite_h22n(const SuiteParams& sp, int workers) {
  long long n_max = param_or(sp, "n_max", 4);
  cap_param("h22n", "n_max", n_max, 1, 5);
  long long budget = param_or(sp, "budget", suite_default_budget("h22n"));
  std::vector<Task> tasks;
  for (int n = 1; n <= n_max; ++n) {
    tasks.push_back([n, budget, workers, total = n_max] {
      SolveOptions opts;
      opts.budget = budget;
      opts.workers = inner_workers(workers, total);
      std::string spec = "h_join(2,2," + std::to_string(n) + ")";
      Graph g = make(FamilySpec::parse(spec));
      if (g.order() != n + 4 || g.size() != 4 * n + 2)
        throw std::logic_error("join form is not a (n+4, 4n+2)-graph");
      return solve_record(g, spec, "the (n+4, 4n+2) join form is nongraceful",
                          false, opts);
    });
  }
  return finish("h22n", echo({{"n_max", n_max}, {"budget", budget}}),
                run_tasks(tasks, workers));
}

SuiteReport suite_kn(const SuiteParams& sp, int workers) {
  long long n_max = param_or(sp, "n_max", 7);
  cap_param("kn", "n_max", n_max, 1, 8);
  long long budget = param_or(sp, "budget", suite_default_budget("kn"));
  std::vector<Task> tasks;
  for (int n = 1; n <= n_max; ++n) {
    tasks.push_back([n, budget, workers, total = n_max] {
      SolveOptions opts;
      opts.budget = budget;
      opts.workers = inner_workers(workers, total);
      opts.rosa_golomb_shortcut = n >= 7;  // exhaust every decidable case
      std::string spec = "complete(" + std::to_string(n) + ")";
      return solve_record(make(FamilySpec::parse(spec)), spec,
                          "graceful exactly up to order 4", n <= 4, opts);
    });
  }
  return finish("kn", echo({{"n_max", n_max}, {"budget", budget}}),
                run_tasks(tasks, workers));
}

SuiteReport suite_unicyclic(const SuiteParams& sp, int workers) {
  long long order_max = param_or(sp, "order_max", 7);
  cap_param("unicyclic", "order_max", order_max, 3,
            kUnicyclicEnumerationCap);
  long long budget = param_or(sp, "budget", suite_default_budget("unicyclic"));
  std::vector<Task> tasks;
  for (int order = 3; order <= order_max; ++order) {
    auto batch = enumerate_unicyclic(order);
    for (const Graph& g : batch) {
      tasks.push_back([g, order, budget] {
        SolveOptions opts;
        opts.budget = budget;
        bool expect_graceful =
            !(is_cycle_graph(g) && (g.order() % 4 == 1 || g.order() % 4 == 2));
        return solve_record(g, "unicyclic(" + std::to_string(order) + ")",
                            "nongraceful only for cycles of order 1,2 (mod 4)",
                            expect_graceful, opts);
      });
    }
  }
  return finish("unicyclic",
                echo({{"order_max", order_max}, {"budget", budget}}),
                run_tasks(tasks, workers));
}

SuiteReport suite_trees(const SuiteParams& sp, int workers) {
  long long order_max = param_or(sp, "order_max", 9);
  cap_param("trees", "order_max", order_max, 1, kTreeEnumerationCap);
  long long budget = param_or(sp, "budget", suite_default_budget("trees"));
  std::vector<Task> tasks;
  for (int order = 1; order <= order_max; ++order) {
    for (const Graph& g : enumerate_trees(order)) {
      tasks.push_back([g, order, budget] {
        SolveOptions opts;
        opts.budget = budget;
        return solve_record(g, "tree(" + std::to_string(order) + ")",
                            "all trees are graceful", true, opts);
      });
    }
  }
  return finish("trees", echo({{"order_max", order_max}, {"budget", budget}}),
                run_tasks(tasks, workers));
}

SuiteReport suite_eulerforest(const SuiteParams& sp, int workers) {
  long long residue = param_or(sp, "residue", 3);
  cap_param("eulerforest_eps", "residue", residue, 0, 3);
  long long samples = param_or(sp, "samples", 6);
  cap_param("eulerforest_eps", "samples", samples, 1, 50);
  long long seed = param_or(sp, "seed", 1);
  long long budget =
      param_or(sp, "budget", suite_default_budget("eulerforest_eps"));

  const auto& pool = eps_spec_strings((int)residue);
  std::mt19937_64 rng((std::uint64_t)seed);
  std::vector<Task> tasks;
  for (long long s = 0; s < samples; ++s) {
    const std::string base_spec = pool[rng() % pool.size()];
    int extra = 1 + (int)(rng() % 4);
    std::uint64_t forest_seed = rng();
    tasks.push_back([base_spec, extra, forest_seed, budget] {
      SolveOptions opts;
      opts.budget = budget;
      Graph base = make(FamilySpec::parse(base_spec));
      Graph forest =
          random_graphforest(base, base.order() + extra, forest_seed);
      std::string family = "graphforest(" + base_spec + "," +
                           std::to_string(base.order() + extra) +
                           ",seed=" + std::to_string(forest_seed) + ")";
      SuiteRecord r = base_record(forest, family);
      SearchOutcome on_base = solve_checked(base, opts);
      SearchOutcome on_forest = solve_checked(forest, opts);
      r.claim = "the planted forest is graceful iff its base is";
      r.verdict = to_string(on_forest.verdict);
      if (on_forest.witness) r.witness = on_forest.witness->labels;
      r.nodes_expanded = on_base.nodes_expanded + on_forest.nodes_expanded;
      r.wall_ms = on_base.wall_ms + on_forest.wall_ms;
      r.detail = "base " + encode_graph6(base) + " " +
                 to_string(on_base.verdict);
      bool base_decided = on_base.verdict != Verdict::budget_exceeded;
      bool forest_decided = on_forest.verdict != Verdict::budget_exceeded;
      if (!base_decided || !forest_decided) {
        r.assessment = "inconclusive";
      } else {
        bool bg = on_base.verdict == Verdict::graceful;
        bool fg = on_forest.verdict == Verdict::graceful;
        r.assessment = bg == fg ? "supported" : "refuted";
      }
      return r;
    });
  }
  return finish("eulerforest_eps",
                echo({{"residue", residue},
                      {"samples", samples},
                      {"seed", seed},
                      {"budget", budget}}),
                run_tasks(tasks, workers));
}

SuiteReport suite_graphforest(const SuiteParams& sp, int workers) {
  long long samples = param_or(sp, "samples", 8);
  cap_param("graphforest_graceful", "samples", samples, 1, 50);
  long long seed = param_or(sp, "seed", 1);
  long long budget =
      param_or(sp, "budget", suite_default_budget("graphforest_graceful"));

  const std::vector<std::string> pool = {
      "cycle(3)",  "cycle(4)",  "cycle(7)",
      "cycle(8)",  "complete(4)", "wheel(4)",
      "wheel(5)",  "complete_bipartite(2,3)", "windmill_cycles(2,4)",
      "complete_bipartite(3,4)"};
  std::mt19937_64 rng((std::uint64_t)seed);
  std::vector<Task> tasks;
  for (long long s = 0; s < samples; ++s) {
    const std::string base_spec = pool[rng() % pool.size()];
    int extra = 1 + (int)(rng() % 4);
    std::uint64_t forest_seed = rng();
    tasks.push_back([base_spec, extra, forest_seed, budget] {
      SolveOptions opts;
      opts.budget = budget;
      Graph base = make(FamilySpec::parse(base_spec));
      Graph forest =
          random_graphforest(base, base.order() + extra, forest_seed);
      std::string family = "graphforest(" + base_spec + "," +
                           std::to_string(base.order() + extra) +
                           ",seed=" + std::to_string(forest_seed) + ")";
      SearchOutcome on_base = solve_checked(base, opts);
      SolveOptions fopts = opts;
      SuiteRecord r =
          solve_record(forest, family,
                       "forests planted on a graceful pendant-free base "
                       "are graceful",
                       true, fopts);
      r.detail = "base " + encode_graph6(base) + " " +
                 to_string(on_base.verdict);
      if (on_base.verdict != Verdict::graceful)
        r.assessment = "informational";  // hypothesis not met by the base
      return r;
    });
  }
  return finish("graphforest_graceful",
                echo({{"samples", samples}, {"seed", seed}, {"budget", budget}}),
                run_tasks(tasks, workers));
}

SuiteReport suite_bipartite_euler_opt(const SuiteParams& sp, int workers) {
  long long order_max = param_or(sp, "order_max", 10);
  cap_param("bipartite_euler_opt", "order_max", order_max, 4, 10);
  long long budget =
      param_or(sp, "budget", suite_default_budget("bipartite_euler_opt"));
  auto corpus = bipartite_euler_corpus((int)order_max);
  std::vector<Task> tasks;
  for (const Graph& g : corpus) {
    tasks.push_back([g, budget, order_max] {
      SolveOptions opts;
      opts.budget = budget;
      return opt_record(
          g, "bipartite_euler_corpus(" + std::to_string(order_max) + ")",
          "least achievable max label is q or q+1",
          [&](const SearchOutcome& out) {
            if (out.verdict == Verdict::budget_exceeded) return "inconclusive";
            return out.opt && (*out.opt == g.size() || *out.opt == g.size() + 1)
                       ? "supported"
                       : "refuted";
          },
          opts);
    });
  }
  return finish("bipartite_euler_opt",
                echo({{"order_max", order_max}, {"budget", budget}}),
                run_tasks(tasks, workers));
}

SuiteReport suite_structure_audit(const SuiteParams& sp, int workers) {
  long long with_char = param_or(sp, "characterization", 0);
  cap_param("structure_audit", "characterization", with_char, 0, 1);

  std::vector<std::pair<Graph, std::string>> graphs;
  std::set<std::string> seen;
  for (int residue = 0; residue < 4; ++residue)
    for (const std::string& spec : eps_spec_strings(residue)) {
      Graph g = make(FamilySpec::parse(spec));
      if (seen.insert(encode_graph6(g)).second) graphs.emplace_back(g, spec);
    }
  if (with_char) {
    for (const Graph& g : characterization_corpus()) {
      if (!structural_profile(g).euler) continue;
      if (seen.insert(encode_graph6(g)).second)
        graphs.emplace_back(g, "characterization_corpus(10)");
    }
  }

  std::vector<Task> tasks;
  for (auto& [g, family] : graphs) {
    tasks.push_back([g, family] {
      auto t0 = Clock::now();
      SuiteRecord r = base_record(g, family);
      EpsilonReport rep = structure_audit(g);
      std::vector<std::string> failed;
      long long checks = 0;
      for (const AuditRecord& a : rep.audit) {
        if (a.status != AuditStatus::skipped) ++checks;
        if (a.status == AuditStatus::fail)
          failed.push_back(a.id + (a.detail.empty() ? "" : ": " + a.detail));
      }
      r.claim = "all structural theorems hold for the graph's class";
      r.verdict = failed.empty() ? "audit_pass" : "audit_fail";
      r.assessment = failed.empty() ? "supported" : "refuted";
      if (failed.empty()) {
        r.detail = std::to_string(checks) + " checks";
      } else {
        std::string d;
        for (const std::string& f : failed) d += (d.empty() ? "" : "; ") + f;
        r.detail = d;
      }
      r.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0)
                      .count();
      return r;
    });
  }
  return finish("structure_audit",
                echo({{"characterization", with_char}}),
                run_tasks(tasks, workers));
}

struct EvenSubgraphScan {
  bool blocked = false;
  long long scanned = 0;
  bool truncated = false;
};

// Scans the cycle space for a connected even subgraph whose edge count is
// 1 or 2 (mod 4). Every such subgraph certifies nongracefulness of itself,
// so a graph free of them has no parity obstruction anywhere inside it.
EvenSubgraphScan scan_parity_blocked(const Graph& g, long long cap) {
  EvenSubgraphScan out;
  int p = g.order(), q = g.size();
  if (q == 0 || q > 62) return out;

  std::vector<int> parent_edge(p, -1), parent(p, -1), comp(p, -1);
  std::vector<std::uint64_t> path_mask(p, 0);
  std::vector<std::uint64_t> basis;
  for (int root = 0; root < p; ++root) {
    if (comp[root] != -1) continue;
    comp[root] = root;
    std::vector<int> queue{root};
    for (size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      for (int v : g.neighbors(u)) {
        if (comp[v] == -1) {
          comp[v] = root;
          parent[v] = u;
          parent_edge[v] = g.edge_index(u, v);
          path_mask[v] = path_mask[u] | (std::uint64_t{1} << parent_edge[v]);
          queue.push_back(v);
        }
      }
    }
  }
  for (int e = 0; e < q; ++e) {
    auto [u, v] = g.edges()[e];
    if (parent_edge[u] == e || parent_edge[v] == e) continue;
    basis.push_back(path_mask[u] ^ path_mask[v] ^ (std::uint64_t{1} << e));
  }

  int dim = (int)basis.size();
  if (dim == 0) return out;
  if (dim > 40) {
    out.truncated = true;
    return out;
  }
  auto connected_even = [&](std::uint64_t mask) {
    int first = -1;
    std::vector<char> in_sub(p, 0);
    for (int e = 0; e < q; ++e)
      if ((mask >> e) & 1) {
        auto [u, v] = g.edges()[e];
        in_sub[u] = in_sub[v] = 1;
        first = u;
      }
    std::vector<char> seen(p, 0);
    std::vector<int> queue{first};
    seen[first] = 1;
    for (size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      for (int v : g.neighbors(u)) {
        int e = g.edge_index(u, v);
        if (((mask >> e) & 1) && !seen[v]) {
          seen[v] = 1;
          queue.push_back(v);
        }
      }
    }
    for (int v = 0; v < p; ++v)
      if (in_sub[v] && !seen[v]) return false;
    return true;
  };
  // Gray-code walk so each step is one basis XOR.
  std::uint64_t mask = 0;
  for (std::uint64_t sel = 1; sel < (std::uint64_t{1} << dim); ++sel) {
    if (++out.scanned > cap) {
      out.truncated = true;
      return out;
    }
    mask ^= basis[std::countr_zero(sel)];
    int edges = std::popcount(mask);
    if (edges % 4 != 1 && edges % 4 != 2) continue;
    if (connected_even(mask)) {
      out.blocked = true;
      return out;
    }
  }
  return out;
}

SuiteReport suite_rg_free(const SuiteParams& sp, int workers) {
  long long order_max = param_or(sp, "order_max", 6);
  cap_param("rg_free_graceful", "order_max", order_max, 1, 6);
  long long scan_cap = param_or(sp, "subgraph_cap", 1 << 20);
  cap_param("rg_free_graceful", "subgraph_cap", scan_cap, 1, 1LL << 32);
  long long budget =
      param_or(sp, "budget", suite_default_budget("rg_free_graceful"));
  auto corpus = connected_graph_corpus((int)order_max);
  std::vector<Task> tasks;
  for (const Graph& g : corpus) {
    tasks.push_back([g, budget, scan_cap, order_max] {
      SolveOptions opts;
      opts.budget = budget;
      EvenSubgraphScan scan = scan_parity_blocked(g, scan_cap);
      SuiteRecord r = solve_record(
          g, "connected_graph_corpus(" + std::to_string(order_max) + ")",
          "no parity-blocked even subgraph implies graceful", true, opts);
      if (scan.truncated) {
        r.assessment = "inconclusive";
        r.detail = "even-subgraph scan truncated at " +
                   std::to_string(scan_cap);
      } else if (scan.blocked) {
        r.assessment = "informational";
        r.detail = "contains a parity-blocked even subgraph";
      } else {
        r.detail = "parity-free; scanned " + std::to_string(scan.scanned) +
                   " even subgraphs (bound " + std::to_string(scan_cap) + ")";
      }
      return r;
    });
  }
  return finish("rg_free_graceful",
                echo({{"order_max", order_max},
                      {"subgraph_cap", scan_cap},
                      {"budget", budget}}),
                run_tasks(tasks, workers));
}

SuiteReport suite_custom(const SuiteParams& sp, int workers) {
  long long budget = param_or(sp, "budget", suite_default_budget("custom"));
  std::vector<Task> tasks;
  for (size_t i = 0; i < sp.graphs.size(); ++i) {
    const std::string& line = sp.graphs[i];
    tasks.push_back([line, i, budget] {
      SuiteRecord r;
      try {
        Graph g = decode_graph6(line);
        SolveOptions opts;
        opts.budget = budget;
        r = solve_record(g, "custom[" + std::to_string(i) + "]",
                         "", true, opts);
        r.assessment = r.verdict == to_string(Verdict::budget_exceeded)
                           ? "inconclusive"
                           : "informational";
        r.claim = "none (informational solve)";
      } catch (const error& e) {
        r.graph6 = line;
        r.family = "custom[" + std::to_string(i) + "]";
        r.claim = "none (informational solve)";
        r.verdict = "error";
        r.assessment = "informational";
        r.detail = e.what();
      }
      return r;
    });
  }
  return finish("custom", echo({{"budget", budget}}),
                run_tasks(tasks, workers));
}

}  // namespace

std::vector<std::string> registered_suites() {
  return {"cycles",
          "wheels",
          "dutch",
          "french",
          "windmill_c4",
          "nongraceful_catalog",
          "h22n",
          "kn",
          "unicyclic",
          "trees",
          "eulerforest_eps",
          "graphforest_graceful",
          "bipartite_euler_opt",
          "structure_audit",
          "rg_free_graceful",
          "custom"};
}

long long suite_default_budget(const std::string& suite) {
  static const std::map<std::string, long long> table = {
      {"cycles", 40000000},
      {"wheels", 40000000},
      {"dutch", 600000000},
      {"french", 300000000},
      {"windmill_c4", 80000000},
      {"nongraceful_catalog", 200000000},
      {"h22n", 1200000000},
      {"kn", 200000000},
      {"unicyclic", 60000000},
      {"trees", 60000000},
      {"eulerforest_eps", 150000000},
      {"graphforest_graceful", 150000000},
      {"bipartite_euler_opt", 500000000},
      {"structure_audit", 1000000},
      {"rg_free_graceful", 50000000},
      {"custom", kDefaultSolveBudget},
  };
  auto it = table.find(suite);
  if (it == table.end()) fail_input("unknown suite: " + suite);
  return it->second;
}

SuiteReport run_suite(const std::string& suite, const SuiteParams& params,
                      int workers) {
  if (suite == "cycles") return suite_cycles(params, workers);
  if (suite == "wheels") return suite_wheels(params, workers);
  if (suite == "dutch") return suite_dutch(params, workers);
  if (suite == "french") return suite_french(params, workers);
  if (suite == "windmill_c4") return suite_windmill_c4(params, workers);
  if (suite == "nongraceful_catalog")
    return suite_nongraceful_catalog(params, workers);
  if (suite == "h22n") return suite_h22n(params, workers);
  if (suite == "kn") return suite_kn(params, workers);
  if (suite == "unicyclic") return suite_unicyclic(params, workers);
  if (suite == "trees") return suite_trees(params, workers);
  if (suite == "eulerforest_eps") return suite_eulerforest(params, workers);
  if (suite == "graphforest_graceful")
    return suite_graphforest(params, workers);
  if (suite == "bipartite_euler_opt")
    return suite_bipartite_euler_opt(params, workers);
  if (suite == "structure_audit")
    return suite_structure_audit(params, workers);
  if (suite == "rg_free_graceful") return suite_rg_free(params, workers);
  if (suite == "custom") return suite_custom(params, workers);
  std::string known;
  for (const std::string& s : registered_suites())
    known += (known.empty() ? "" : ", ") + s;
  fail_input("unknown suite: " + suite + " (registered: " + known + ")");
}

IngestResult ingest_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail_input("cannot open corpus file: " + path);
  IngestResult out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
      line.pop_back();
    if (line.empty() || line[0] == '#') continue;

    std::istringstream head(line);
    int p = 0;
    long long q = 0;
    char extra = 0;
    if (head >> p >> q && !(head >> extra)) {
      int start = lineno;
      std::string block = line;
      bool truncated = false;
      for (long long i = 0; i < q; ++i) {
        std::string edge_line;
        if (!std::getline(in, edge_line)) {
          truncated = true;
          break;
        }
        ++lineno;
        block += "\n" + edge_line;
      }
      if (truncated) {
        out.diagnostics.push_back("line " + std::to_string(start) +
                                  ": edge-list block ends early");
        continue;
      }
      try {
        out.graphs.push_back(from_edge_list(block));
      } catch (const error& e) {
        out.diagnostics.push_back("line " + std::to_string(start) + ": " +
                                  e.what());
      }
      continue;
    }

    try {
      out.graphs.push_back(decode_graph6(line));
    } catch (const error& e) {
      out.diagnostics.push_back("line " + std::to_string(lineno) + ": " +
                                e.what());
    }
  }
  return out;
}

std::string report_json(const SuiteReport& r) {
  ordered_json j;
  j["schema_version"] = r.schema_version;
  j["suite"] = r.suite;
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  j["parameters"] = params;
  j["summary"] = {{"supported", r.summary.supported},
                  {"refuted", r.summary.refuted},
                  {"inconclusive", r.summary.inconclusive},
                  {"informational", r.summary.informational}};
  j["counterexamples"] = r.counterexamples;
  ordered_json records = ordered_json::array();
  for (const SuiteRecord& rec : r.records) {
    ordered_json o;
    o["graph6"] = rec.graph6;
    o["p"] = rec.p;
    o["q"] = rec.q;
    o["family"] = rec.family;
    o["epsilon_class"] = rec.epsilon_class;
    o["claim"] = rec.claim;
    o["verdict"] = rec.verdict;
    o["assessment"] = rec.assessment;
    if (rec.opt) o["opt"] = *rec.opt;
    else o["opt"] = nullptr;
    if (rec.witness) o["witness"] = *rec.witness;
    else o["witness"] = nullptr;
    o["nodes_expanded"] = rec.nodes_expanded;
    o["wall_ms"] = rec.wall_ms;
    o["detail"] = rec.detail;
    records.push_back(std::move(o));
  }
  j["records"] = std::move(records);
  return j.dump(2) + "\n";
}

void emit_report(const SuiteReport& r, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail_input("cannot write report to " + path);
  out << report_json(r);
  out.flush();
  if (!out) fail_input("write failed for " + path);
}

std::vector<Graph> epsilon_corpus(int residue) {
  std::vector<Graph> out;
  for (const std::string& spec : eps_spec_strings(residue))
    out.push_back(make(FamilySpec::parse(spec)));
  return out;
}

std::vector<Graph> characterization_corpus() {
  std::vector<Graph> out;
  std::set<std::string> seen;
  auto add = [&](const Graph& g) {
    if (g.order() > 10 || !is_connected(g)) return;
    if (seen.insert(certificate(g)).second) out.push_back(g);
  };
  for (int order = 1; order <= 9; ++order)
    for (const Graph& g : enumerate_trees(order)) add(g);
  for (int order = 3; order <= 8; ++order)
    for (const Graph& g : enumerate_unicyclic(order)) add(g);

  const std::vector<std::string> specs = {
      "cycle(9)",
      "cycle(10)",
      "wheel(3)",
      "wheel(4)",
      "wheel(5)",
      "wheel(6)",
      "wheel(7)",
      "wheel(8)",
      "wheel(9)",
      "complete(3)",
      "complete(4)",
      "complete(5)",
      "complete(6)",
      "complete(7)",
      "complete_bipartite(1,1)",
      "complete_bipartite(2,2)",
      "complete_bipartite(2,3)",
      "complete_bipartite(2,4)",
      "complete_bipartite(2,6)",
      "complete_bipartite(2,8)",
      "complete_bipartite(3,3)",
      "complete_bipartite(3,4)",
      "complete_bipartite(3,5)",
      "complete_bipartite(3,7)",
      "complete_bipartite(4,4)",
      "complete_bipartite(4,6)",
      "complete_bipartite(5,5)",
      "dutch_windmill(2)",
      "dutch_windmill(3)",
      "dutch_windmill(4)",
      "windmill_cycles(2,4)",
      "windmill_cycles(2,5)",
      "windmill_cycles(3,4)",
      "snake_triangular(2)",
      "snake_triangular(3)",
      "snake_triangular(4)",
      "snake_cycles(2,4)",
      "snake_cycles(2,5)",
      "snake_cycles(3,4)",
      "book(3,2,2)",
      "book(3,2,3)",
      "book(4,2,2)",
      "two_cliques_shared_node(3,3)",
      "two_cliques_shared_node(3,4)",
      "two_cliques_shared_node(4,4)",
      "h_join(2,2,1)",
      "h_join(2,2,2)",
      "h_join(2,2,3)",
      "h_join(2,2,4)",
      "subdivision(complete(4),1)",
      "subdivision(complete_bipartite(2,3),1)",
      "cartesian_product(path(2),cycle(4))",
      "cartesian_product(path(2),path(4))",
      "join(cycle(4),complete(1))",
  };
  for (const std::string& s : specs) add(make(FamilySpec::parse(s)));
  return out;
}

std::vector<Graph> connected_graph_corpus(int order_max) {
  if (order_max < 1 || order_max > 6)
    fail_input("connected graph corpus supports orders 1..6");
  std::vector<Graph> out;
  for (int n = 1; n <= order_max; ++n) {
    std::set<std::string> seen;
    std::vector<Edge> all;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
    int m = (int)all.size();
    for (std::uint64_t sel = 0; sel < (std::uint64_t{1} << m); ++sel) {
      std::vector<Edge> edges;
      for (int e = 0; e < m; ++e)
        if ((sel >> e) & 1) edges.push_back(all[e]);
      Graph g = Graph::build(n, edges);
      if (!is_connected(g)) continue;
      if (seen.insert(certificate(g)).second) out.push_back(g);
    }
  }
  return out;
}

std::vector<Graph> bipartite_euler_corpus(int order_max) {
  if (order_max < 4 || order_max > 10)
    fail_input("bipartite Euler corpus supports orders 4..10");
  std::vector<Graph> out;
  std::set<std::string> seen;
  for (int a = 2; 2 * a <= order_max; ++a) {
    for (int b = a; a + b <= order_max; ++b) {
      int dim = (a - 1) * (b - 1);
      auto edge_bit = [&](int i, int j) {
        return std::uint64_t{1} << (i * b + j);
      };
      std::vector<std::uint64_t> basis;
      for (int i = 1; i < a; ++i)
        for (int j = 1; j < b; ++j)
          basis.push_back(edge_bit(0, 0) | edge_bit(0, j) | edge_bit(i, 0) |
                          edge_bit(i, j));
      for (std::uint64_t sel = 1; sel < (std::uint64_t{1} << dim); ++sel) {
        std::uint64_t mask = 0;
        for (int t = 0; t < dim; ++t)
          if ((sel >> t) & 1) mask ^= basis[t];
        if (mask == 0) continue;
        std::vector<Edge> edges;
        for (int i = 0; i < a; ++i)
          for (int j = 0; j < b; ++j)
            if ((mask >> (i * b + j)) & 1) edges.emplace_back(i, a + j);
        Graph g = Graph::build(a + b, edges);
        bool spanning = true;
        for (int v = 0; v < g.order() && spanning; ++v)
          spanning = g.degree(v) > 0;
        if (!spanning || !is_connected(g)) continue;
        if (seen.insert(certificate(g)).second) out.push_back(g);
      }
    }
  }
  return out;
}

}  // namespace gracegraph
