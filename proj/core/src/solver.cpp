#include "gracegraph/solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <climits>
#include <exception>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "gracegraph/epsilon.hpp"

namespace gracegraph {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::graceful: return "graceful";
    case Verdict::nongraceful_exhausted: return "nongraceful_exhausted";
    case Verdict::nongraceful_rosa_golomb: return "nongraceful_rosa_golomb";
    case Verdict::budget_exceeded: return "budget_exceeded";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Sets of mutually interchangeable nodes: equal open neighborhoods
// (nonadjacent) or equal closed neighborhoods (adjacent). Transpositions
// inside a set are automorphisms, and the sets they generate act as the
// full symmetric group on each union-find component, so forcing ascending
// labels keeps exactly one representative per orbit.
struct TwinClasses {
  std::vector<int> cls;  // class id per node, -1 for singletons
  int count = 0;
};

TwinClasses twin_classes(const Graph& g) {
  int p = g.order();
  std::vector<int> parent(p);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

  std::map<std::vector<int>, int> open_rep, closed_rep;
  for (int v = 0; v < p; ++v) {
    std::vector<int> open = g.neighbors(v);
    auto [it, fresh] = open_rep.try_emplace(open, v);
    if (!fresh) unite(v, it->second);
    std::vector<int> closed = open;
    closed.insert(std::lower_bound(closed.begin(), closed.end(), v), v);
    auto [jt, fresh2] = closed_rep.try_emplace(closed, v);
    if (!fresh2) unite(v, jt->second);
  }

  TwinClasses tc;
  tc.cls.assign(p, -1);
  std::vector<int> size(p, 0), id(p, -1);
  for (int v = 0; v < p; ++v) ++size[find(v)];
  for (int v = 0; v < p; ++v) {
    int r = find(v);
    if (size[r] < 2) continue;
    if (id[r] < 0) id[r] = tc.count++;
    tc.cls[v] = id[r];
  }
  return tc;
}

// One unit of search: assign labels to `order` by depth-first search over
// free label bits, keeping node labels and edge values distinct via
// 64-bit masks. Used both for the {0,q}-pinned branches of the graceful
// search and, with no pinned nodes, for bounded-max-label levels.
struct Branch {
  const Graph* g = nullptr;
  int maxlab = 0;
  int fix0 = -1, fixq = -1;  // nodes pinned to 0 and maxlab, or -1
  long long budget = 0;
  bool enumerate_all = false;
  const TwinClasses* twins = nullptr;  // nullptr disables twin breaking

  std::vector<int> order;
  std::vector<std::vector<int>> prior_nb;  // per depth, placed neighbors
  std::vector<int> bound_prev;             // per depth, label lower bound node
  std::vector<int> labels;
  std::uint64_t node_mask = 0, edge_mask = 0, full_mask = 0;

  long long expanded = 0;
  bool out_of_budget = false;
  bool found = false;
  std::vector<int> witness;
  std::vector<std::vector<int>> collected;

  void run() {
    setup();
    dfs(0);
  }

  void setup() {
    int p = g->order();
    labels.assign(p, -1);
    full_mask = (std::uint64_t{2} << maxlab) - 1;
    if (fix0 >= 0) {
      labels[fix0] = 0;
      labels[fixq] = maxlab;
      node_mask = 1 | (std::uint64_t{1} << maxlab);
      edge_mask = std::uint64_t{1} << maxlab;
    }
    order.clear();
    for (int v = 0; v < p; ++v)
      if (v != fix0 && v != fixq) order.push_back(v);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return g->degree(a) != g->degree(b) ? g->degree(a) > g->degree(b)
                                          : a < b;
    });

    std::vector<int> depth_of(p, -1);
    for (size_t d = 0; d < order.size(); ++d) depth_of[order[d]] = (int)d;
    prior_nb.assign(order.size(), {});
    for (size_t d = 0; d < order.size(); ++d)
      for (int w : g->neighbors(order[d]))
        if (w == fix0 || w == fixq || depth_of[w] < (int)d)
          prior_nb[d].push_back(w);

    bound_prev.assign(order.size(), -1);
    if (twins) {
      std::vector<int> last_in_class(twins->count, -1);
      for (int v = 0; v < p; ++v) {
        int c = twins->cls[v];
        if (c < 0 || v == fix0 || v == fixq) continue;
        if (last_in_class[c] >= 0) bound_prev[depth_of[v]] = last_in_class[c];
        last_in_class[c] = v;
      }
    }
  }

  bool dfs(size_t depth) {  // true aborts the whole branch
    if (depth == order.size()) {
      if (!(node_mask & 1)) return false;  // label 0 unused
      if (enumerate_all) {
        collected.push_back(labels);
        return false;
      }
      found = true;
      witness = labels;
      return true;
    }
    int v = order[depth];
    std::uint64_t avail = full_mask & ~node_mask;
    if (bound_prev[depth] >= 0)
      avail &= ~((std::uint64_t{2} << labels[bound_prev[depth]]) - 1);
    const auto& nbs = prior_nb[depth];
    while (avail) {
      int l = std::countr_zero(avail);
      avail &= avail - 1;
      if (++expanded > budget) {
        out_of_budget = true;
        return true;
      }
      std::uint64_t add = 0;
      bool ok = true;
      for (int w : nbs) {
        int d = l - labels[w];
        std::uint64_t bit = std::uint64_t{1} << (d < 0 ? -d : d);
        if ((edge_mask | add) & bit) {
          ok = false;
          break;
        }
        add |= bit;
      }
      if (!ok) continue;
      labels[v] = l;
      node_mask |= std::uint64_t{1} << l;
      edge_mask |= add;
      bool stop = dfs(depth + 1);
      labels[v] = -1;
      node_mask &= ~(std::uint64_t{1} << l);
      edge_mask &= ~add;
      if (stop) return true;
    }
    return false;
  }
};

// Runs the {0,q}-edge branches, one per edge, each with its own slice of
// the budget. Worker count never affects which branch wins: a branch only
// gets skipped when a strictly earlier one already holds a witness, and
// totals are assembled from the branches a sequential run would touch.
struct BranchSet {
  std::vector<Branch> branches;

  void run(int workers, bool decision) {
    int n = (int)branches.size();
    std::atomic<int> next{0};
    std::atomic<int> best{INT_MAX};
    std::exception_ptr first_error;
    std::mutex error_mu;
    auto work = [&] {
      try {
        for (;;) {
          int i = next.fetch_add(1);
          if (i >= n) break;
          if (decision && i > best.load()) continue;
          branches[i].run();
          if (branches[i].found) {
            int cur = best.load();
            while (i < cur && !best.compare_exchange_weak(cur, i)) {
            }
          }
        }
      } catch (...) {
        std::lock_guard<std::mutex> lk(error_mu);
        if (!first_error) first_error = std::current_exception();
      }
    };
    int w = std::clamp(workers, 1, std::max(n, 1));
    if (w <= 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (int i = 0; i < w; ++i) pool.emplace_back(work);
      for (auto& t : pool) t.join();
    }
    if (first_error) std::rethrow_exception(first_error);
  }

  int winning_branch() const {
    for (int i = 0; i < (int)branches.size(); ++i)
      if (branches[i].found) return i;
    return -1;
  }
};

BranchSet make_edge_branches(const Graph& g, const SolveOptions& opts,
                             bool enumerate_all, const TwinClasses* twins) {
  int q = g.size();
  BranchSet set;
  set.branches.resize(q);
  long long base = opts.budget / q, rem = opts.budget % q;
  for (int i = 0; i < q; ++i) {
    Branch& b = set.branches[i];
    b.g = &g;
    b.maxlab = q;
    b.fix0 = g.edges()[i].first;
    b.fixq = g.edges()[i].second;
    b.budget = base + (i < rem ? 1 : 0);
    b.enumerate_all = enumerate_all;
    b.twins = twins;
  }
  return set;
}

void check_size_supported(const Graph& g) {
  if (g.size() > kMaxSolvableSize)
    throw error(error::kind::unsupported,
                "search supports at most " + std::to_string(kMaxSolvableSize) +
                    " edges, got " + std::to_string(g.size()));
}

}  // namespace

SearchOutcome solve_graceful(const Graph& g, const SolveOptions& opts) {
  auto t0 = Clock::now();
  check_size_supported(g);
  int q = g.size(), p = g.order();

  SearchOutcome out;
  if (q == 0) {
    out.verdict = p <= 1 ? Verdict::graceful : Verdict::nongraceful_exhausted;
    if (p == 1) out.witness = Labeling{{0}};
    out.wall_ms = ms_since(t0);
    return out;
  }
  if (opts.rosa_golomb_shortcut &&
      rosa_golomb(g) == RosaGolombVerdict::certified_nongraceful) {
    out.verdict = Verdict::nongraceful_rosa_golomb;
    out.wall_ms = ms_since(t0);
    return out;
  }

  TwinClasses tc;
  if (opts.break_twin_labels) tc = twin_classes(g);
  BranchSet set = make_edge_branches(
      g, opts, false, opts.break_twin_labels && tc.count ? &tc : nullptr);
  set.run(opts.workers, true);

  int winner = set.winning_branch();
  if (winner >= 0) {
    for (int i = 0; i < winner; ++i)
      out.nodes_expanded += set.branches[i].expanded;
    out.nodes_expanded += set.branches[winner].expanded;
    out.verdict = Verdict::graceful;
    out.witness = Labeling{set.branches[winner].witness};
    auto ev = evaluate_labeling(g, *out.witness);
    if (!ev.graceful)
      throw std::logic_error("search produced a non-graceful witness");
  } else {
    bool starved = false;
    for (const Branch& b : set.branches) {
      out.nodes_expanded += b.expanded;
      starved = starved || b.out_of_budget;
    }
    out.verdict =
        starved ? Verdict::budget_exceeded : Verdict::nongraceful_exhausted;
  }
  out.wall_ms = ms_since(t0);
  return out;
}

EnumerationResult enumerate_graceful(const Graph& g, EnumMode mode,
                                     const SolveOptions& opts) {
  auto t0 = Clock::now();
  check_size_supported(g);
  int q = g.size(), p = g.order();
  if (q == 0) fail_input("enumeration requires at least one edge");

  BranchSet set = make_edge_branches(g, opts, true, nullptr);
  set.run(opts.workers, false);

  EnumerationResult out;
  for (const Branch& b : set.branches) {
    out.nodes_expanded += b.expanded;
    out.complete = out.complete && !b.out_of_budget;
    for (const auto& rep : b.collected) {
      out.labelings.push_back(Labeling{rep});
      if (mode == EnumMode::raw)
        out.labelings.push_back(complement(Labeling{rep}, q));
    }
  }
  if (q + 1 - p == 1) {
    for (const Labeling& l : out.labelings) {
      std::uint64_t used = 0;
      for (int x : l.labels) used |= std::uint64_t{1} << x;
      std::uint64_t missing = ~used & ((std::uint64_t{2} << q) - 1);
      out.by_missing_node_label[std::countr_zero(missing)] += 1;
    }
  }
  out.wall_ms = ms_since(t0);
  return out;
}

SearchOutcome optimal_labeling(const Graph& g, const SolveOptions& opts) {
  auto t0 = Clock::now();
  int q = g.size(), p = g.order();
  if (p - 1 > kMaxSolvableSize)
    throw error(error::kind::unsupported,
                "optimal labeling supports at most " +
                    std::to_string(kMaxSolvableSize + 1) + " nodes");

  TwinClasses tc;
  if (opts.break_twin_labels) tc = twin_classes(g);

  SearchOutcome out;
  long long spent = 0;
  for (int m = std::max(q, p - 1); m <= kMaxSolvableSize; ++m) {
    Branch level;
    level.g = &g;
    level.maxlab = m;
    level.budget = opts.budget - spent;
    level.twins = opts.break_twin_labels && tc.count ? &tc : nullptr;
    if (level.budget <= 0) {
      out.verdict = Verdict::budget_exceeded;
      out.nodes_expanded = spent;
      out.wall_ms = ms_since(t0);
      return out;
    }
    level.run();
    spent += level.expanded;
    if (level.out_of_budget) {
      out.verdict = Verdict::budget_exceeded;
      out.nodes_expanded = spent;
      out.wall_ms = ms_since(t0);
      return out;
    }
    if (level.found) {
      out.opt = m;
      out.opt_minimal_proven = true;
      out.witness = Labeling{level.witness};
      out.verdict =
          m == q ? Verdict::graceful : Verdict::nongraceful_exhausted;
      out.nodes_expanded = spent;
      out.wall_ms = ms_since(t0);
      if (m == q) {
        auto ev = evaluate_labeling(g, *out.witness);
        if (!ev.graceful)
          throw std::logic_error("search produced a non-graceful witness");
      } else {
        std::uint64_t seen_nodes = 0, seen_edges = 0;
        for (int x : out.witness->labels) {
          if (x < 0 || x > m || (seen_nodes >> x) & 1)
            throw std::logic_error("invalid bounded labeling witness");
          seen_nodes |= std::uint64_t{1} << x;
        }
        for (auto [a, b] : g.edges()) {
          int d = out.witness->labels[a] - out.witness->labels[b];
          if (d < 0) d = -d;
          if (d == 0 || (seen_edges >> d) & 1)
            throw std::logic_error("invalid bounded labeling witness");
          seen_edges |= std::uint64_t{1} << d;
        }
      }
      return out;
    }
  }
  throw error(error::kind::unsupported,
              "optimal labeling exceeds the supported label range");
}

EnumerationResult enumerate_bounded_labelings(const Graph& g, int max_label,
                                              const SolveOptions& opts) {
  auto t0 = Clock::now();
  if (max_label < 0 || max_label > kMaxSolvableSize)
    throw error(error::kind::unsupported,
                "bounded enumeration supports max labels 0.." +
                    std::to_string(kMaxSolvableSize));
  EnumerationResult out;
  if (g.order() > max_label + 1) {
    out.wall_ms = ms_since(t0);
    return out;  // no injection exists
  }
  Branch level;
  level.g = &g;
  level.maxlab = max_label;
  level.budget = opts.budget;
  level.enumerate_all = true;
  level.run();
  out.nodes_expanded = level.expanded;
  out.complete = !level.out_of_budget;
  for (auto& rep : level.collected) out.labelings.push_back(Labeling{rep});
  out.wall_ms = ms_since(t0);
  return out;
}

AttractSpectrum attract_spectrum(const Graph& g, const SolveOptions& opts) {
  EnumerationResult en = enumerate_graceful(g, EnumMode::raw, opts);
  AttractSpectrum s;
  s.complete = en.complete;
  s.graceful = !en.labelings.empty();
  int p = g.order(), q = g.size();
  std::vector<std::uint64_t> node_seen(p, 0), edge_seen(q, 0);
  for (const Labeling& l : en.labelings) {
    for (int v = 0; v < p; ++v)
      node_seen[v] |= std::uint64_t{1} << l.labels[v];
    for (int e = 0; e < q; ++e) {
      int d = l.labels[g.edges()[e].first] - l.labels[g.edges()[e].second];
      edge_seen[e] |= std::uint64_t{1} << (d < 0 ? -d : d);
    }
  }
  s.node_labels.resize(p);
  s.edge_values.resize(q);
  for (int v = 0; v < p; ++v)
    for (int x = 0; x <= q; ++x)
      if ((node_seen[v] >> x) & 1) s.node_labels[v].push_back(x);
  for (int e = 0; e < q; ++e)
    for (int x = 1; x <= q; ++x)
      if ((edge_seen[e] >> x) & 1) s.edge_values[e].push_back(x);
  return s;
}

}  // namespace gracegraph
