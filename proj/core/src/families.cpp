#include "gracegraph/families.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "gracegraph/iso.hpp"

namespace gracegraph {

namespace {

const std::pair<Family, const char*> kFamilyNames[] = {
    {Family::cycle, "cycle"},
    {Family::path, "path"},
    {Family::complete, "complete"},
    {Family::complete_bipartite, "complete_bipartite"},
    {Family::wheel, "wheel"},
    {Family::caterpillar, "caterpillar"},
    {Family::dutch_windmill, "dutch_windmill"},
    {Family::windmill_complete, "windmill_complete"},
    {Family::windmill_cycles, "windmill_cycles"},
    {Family::snake_triangular, "snake_triangular"},
    {Family::snake_cycles, "snake_cycles"},
    {Family::book, "book"},
    {Family::two_cliques_shared_node, "two_cliques_shared_node"},
    {Family::h_join, "h_join"},
    {Family::subdivision, "subdivision"},
    {Family::join, "join"},
    {Family::cartesian_product, "cartesian_product"},
    {Family::graphforest, "graphforest"},
};

void need_params(const FamilySpec& s, size_t n) {
  if (s.params.size() != n)
    fail_input(family_name(s.family) + " expects " + std::to_string(n) +
               " integer parameter(s), got " + std::to_string(s.params.size()));
}

void need_operands(const FamilySpec& s, size_t n) {
  if (s.operands.size() != n)
    fail_input(family_name(s.family) + " expects " + std::to_string(n) +
               " operand spec(s), got " + std::to_string(s.operands.size()));
}

int as_int(const FamilySpec& s, size_t i, long long lo, const char* what) {
  long long v = s.params[i];
  if (v < lo)
    fail_input(family_name(s.family) + ": " + what + " must be >= " + std::to_string(lo) +
               ", got " + std::to_string(v));
  if (v > 1000000) fail_input(family_name(s.family) + ": parameter too large");
  return static_cast<int>(v);
}

Graph make_cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::build(n, e);
}

Graph make_path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::build(n, e);
}

Graph make_complete(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::build(n, e);
}

Graph make_complete_bipartite(int m, int n) {
  std::vector<Edge> e;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) e.emplace_back(i, m + j);
  return Graph::build(m + n, e);
}

Graph make_wheel(int n) {
  // rim 0..n-1, hub n
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) {
    e.emplace_back(i, (i + 1) % n);
    e.emplace_back(i, n);
  }
  return Graph::build(n + 1, e);
}

Graph make_windmill_complete(int m, int n) {
  // m copies of K_n sharing node 0
  std::vector<Edge> e;
  for (int c = 0; c < m; ++c) {
    int base = 1 + c * (n - 1);
    for (int i = 0; i < n - 1; ++i) {
      e.emplace_back(0, base + i);
      for (int j = i + 1; j < n - 1; ++j) e.emplace_back(base + i, base + j);
    }
  }
  return Graph::build(1 + m * (n - 1), e);
}

Graph make_windmill_cycles(int m, int n) {
  std::vector<Edge> e;
  for (int c = 0; c < m; ++c) {
    int base = 1 + c * (n - 1);
    e.emplace_back(0, base);
    for (int i = 0; i + 1 < n - 1; ++i) e.emplace_back(base + i, base + i + 1);
    e.emplace_back(base + n - 2, 0);
  }
  return Graph::build(1 + m * (n - 1), e);
}

Graph make_snake_cycles(int k, int n) {
  // path 0..k, each path edge completed to a C_n by n-2 interior nodes
  std::vector<Edge> e;
  int next = k + 1;
  for (int i = 0; i < k; ++i) {
    e.emplace_back(i, i + 1);
    int prev = i;
    for (int t = 0; t < n - 2; ++t) {
      e.emplace_back(prev, next);
      prev = next++;
    }
    e.emplace_back(prev, i + 1);
  }
  return Graph::build(next, e);
}

Graph make_book(int n, int r, int m) {
  // shared K_r on 0..r-1, each page adds n-r nodes
  std::vector<Edge> e;
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) e.emplace_back(i, j);
  for (int c = 0; c < m; ++c) {
    int base = r + c * (n - r);
    for (int i = 0; i < n - r; ++i) {
      for (int j = 0; j < r; ++j) e.emplace_back(j, base + i);
      for (int j = i + 1; j < n - r; ++j) e.emplace_back(base + i, base + j);
    }
  }
  return Graph::build(r + m * (n - r), e);
}

Graph make_two_cliques(int m, int n) {
  Graph km = make_complete(m);
  Graph kn = make_complete(n);
  return plant(km, 0, kn, 0);
}

Graph make_h_join(int l, int m, int n) {
  Graph left = make_complete(l);
  for (int c = 1; c < m; ++c) left = disjoint_union(left, make_complete(l));
  Graph empty = Graph::build(n, {});
  return join(left, empty);
}

}  // namespace

std::string family_name(Family f) {
  for (auto [fam, name] : kFamilyNames)
    if (fam == f) return name;
  fail_input("unknown family enum value");
}

Family family_from_name(std::string_view name) {
  for (auto [fam, n] : kFamilyNames)
    if (name == n) return fam;
  fail_input("unknown family name '" + std::string(name) + "'");
}

// ---- spec parsing ----

namespace {

struct SpecParser {
  std::string_view s;
  size_t i = 0;

  void ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }

  bool eat(char c) {
    ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }

  long long integer() {
    ws();
    size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) fail_input("family spec: expected integer at offset " + std::to_string(start));
    return std::stoll(std::string(s.substr(start, i - start)));
  }

  std::string ident() {
    ws();
    size_t start = i;
    while (i < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
      ++i;
    if (i == start) fail_input("family spec: expected name at offset " + std::to_string(start));
    return std::string(s.substr(start, i - start));
  }

  FamilySpec spec() {
    FamilySpec out;
    size_t name_at = i;
    std::string name = ident();
    ws();
    if (i < s.size() && s[i] == '=') {
      // lone "seed=" is not a spec
      fail_input("family spec: unexpected '=' after '" + name + "'");
    }
    out.family = family_from_name(name);
    (void)name_at;
    if (eat('(')) {
      if (!eat(')')) {
        do {
          ws();
          if (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) ||
                               s[i] == '-' || s[i] == '+')) {
            out.params.push_back(integer());
          } else {
            size_t mark = i;
            std::string word = ident();
            ws();
            if (word == "seed" && i < s.size() && s[i] == '=') {
              ++i;
              out.seed = static_cast<std::uint64_t>(integer());
            } else {
              i = mark;
              out.operands.push_back(spec());
            }
          }
        } while (eat(','));
        if (!eat(')')) fail_input("family spec: expected ')'");
      }
    }
    return out;
  }
};

}  // namespace

FamilySpec FamilySpec::parse(std::string_view text) {
  SpecParser p{text};
  FamilySpec out = p.spec();
  p.ws();
  if (p.i != text.size())
    fail_input("family spec: trailing characters after offset " + std::to_string(p.i));
  return out;
}

std::string FamilySpec::to_string() const {
  std::ostringstream os;
  os << family_name(family);
  if (!params.empty() || !operands.empty() || seed) {
    os << '(';
    bool first = true;
    auto sep = [&] {
      if (!first) os << ',';
      first = false;
    };
    for (const auto& op : operands) {
      sep();
      os << op.to_string();
    }
    for (long long v : params) {
      sep();
      os << v;
    }
    if (seed) {
      sep();
      os << "seed=" << *seed;
    }
    os << ')';
  }
  return os.str();
}

Graph make(const FamilySpec& s) {
  switch (s.family) {
    case Family::cycle:
      need_params(s, 1);
      return make_cycle(as_int(s, 0, 3, "n"));
    case Family::path:
      need_params(s, 1);
      return make_path(as_int(s, 0, 1, "n"));
    case Family::complete:
      need_params(s, 1);
      return make_complete(as_int(s, 0, 1, "n"));
    case Family::complete_bipartite:
      need_params(s, 2);
      return make_complete_bipartite(as_int(s, 0, 1, "m"), as_int(s, 1, 1, "n"));
    case Family::wheel:
      need_params(s, 1);
      return make_wheel(as_int(s, 0, 3, "rim size"));
    case Family::caterpillar: {
      if (s.params.empty()) fail_input("caterpillar: needs at least one spine leaf count");
      std::vector<int> counts;
      for (size_t i = 0; i < s.params.size(); ++i)
        counts.push_back(as_int(s, i, 0, "leaf count"));
      return caterpillar(counts);
    }
    case Family::dutch_windmill:
      need_params(s, 1);
      return make_windmill_complete(as_int(s, 0, 1, "m"), 3);
    case Family::windmill_complete:
      need_params(s, 2);
      return make_windmill_complete(as_int(s, 0, 1, "m"), as_int(s, 1, 2, "n"));
    case Family::windmill_cycles:
      need_params(s, 2);
      return make_windmill_cycles(as_int(s, 0, 1, "m"), as_int(s, 1, 3, "n"));
    case Family::snake_triangular:
      need_params(s, 1);
      return make_snake_cycles(as_int(s, 0, 1, "k"), 3);
    case Family::snake_cycles:
      need_params(s, 2);
      return make_snake_cycles(as_int(s, 0, 1, "k"), as_int(s, 1, 3, "n"));
    case Family::book: {
      need_params(s, 3);
      int n = as_int(s, 0, 2, "n"), r = as_int(s, 1, 1, "r"), m = as_int(s, 2, 1, "m");
      if (r >= n) fail_input("book: requires r < n");
      return make_book(n, r, m);
    }
    case Family::two_cliques_shared_node:
      need_params(s, 2);
      return make_two_cliques(as_int(s, 0, 2, "m"), as_int(s, 1, 2, "n"));
    case Family::h_join:
      need_params(s, 3);
      return make_h_join(as_int(s, 0, 1, "l"), as_int(s, 1, 1, "m"), as_int(s, 2, 1, "n"));
    case Family::subdivision:
      need_operands(s, 1);
      need_params(s, 1);
      return subdivision(make(s.operands[0]), as_int(s, 0, 0, "k"));
    case Family::join:
      need_operands(s, 2);
      need_params(s, 0);
      return join(make(s.operands[0]), make(s.operands[1]));
    case Family::cartesian_product:
      need_operands(s, 2);
      need_params(s, 0);
      return cartesian_product(make(s.operands[0]), make(s.operands[1]));
    case Family::graphforest: {
      need_operands(s, 1);
      need_params(s, 1);
      if (!s.seed) fail_input("graphforest: spec requires seed=N");
      Graph base = make(s.operands[0]);
      return random_graphforest(base, as_int(s, 0, 1, "total order"), *s.seed);
    }
  }
  fail_input("unknown family");
}

Graph subdivision(const Graph& g, int k) {
  if (k < 0) fail_input("subdivision: k must be >= 0");
  std::vector<Edge> e;
  int next = g.order();
  for (auto [u, v] : g.edges()) {
    int prev = u;
    for (int t = 0; t < k; ++t) {
      e.emplace_back(prev, next);
      prev = next++;
    }
    e.emplace_back(prev, v);
  }
  return Graph::build(next, e);
}

Graph join(const Graph& a, const Graph& b) {
  std::vector<Edge> e(a.edges());
  for (auto [u, v] : b.edges()) e.emplace_back(a.order() + u, a.order() + v);
  for (int u = 0; u < a.order(); ++u)
    for (int v = 0; v < b.order(); ++v) e.emplace_back(u, a.order() + v);
  return Graph::build(a.order() + b.order(), e);
}

Graph cartesian_product(const Graph& a, const Graph& b) {
  int nb = b.order();
  std::vector<Edge> e;
  for (int j = 0; j < nb; ++j)
    for (auto [u, v] : a.edges()) e.emplace_back(u * nb + j, v * nb + j);
  for (int i = 0; i < a.order(); ++i)
    for (auto [u, v] : b.edges()) e.emplace_back(i * nb + u, i * nb + v);
  return Graph::build(a.order() * nb, e);
}

Graph caterpillar(std::span<const int> leaf_counts) {
  if (leaf_counts.empty()) fail_input("caterpillar: empty spine");
  int m = static_cast<int>(leaf_counts.size());
  std::vector<Edge> e;
  for (int i = 0; i + 1 < m; ++i) e.emplace_back(i, i + 1);
  int next = m;
  for (int i = 0; i < m; ++i) {
    if (leaf_counts[i] < 0) fail_input("caterpillar: negative leaf count");
    for (int t = 0; t < leaf_counts[i]; ++t) e.emplace_back(i, next++);
  }
  return Graph::build(next, e);
}

std::vector<Graph> enumerate_trees(int order, int cap) {
  if (order < 1) fail_input("enumerate_trees: order must be >= 1");
  if (order > cap)
    fail_input("enumerate_trees: order " + std::to_string(order) + " above cap " +
               std::to_string(cap));
  std::vector<Graph> level{Graph::build(1, {})};
  for (int n = 2; n <= order; ++n) {
    std::map<std::string, Graph> next;
    for (const Graph& t : level) {
      for (int v = 0; v < t.order(); ++v) {
        std::vector<Edge> e(t.edges());
        e.emplace_back(v, t.order());
        Graph cand = Graph::build(t.order() + 1, e);
        next.emplace(certificate(cand), cand);
      }
    }
    level.clear();
    for (auto& [cert, t] : next) level.push_back(std::move(t));
  }
  return level;
}

std::vector<Graph> enumerate_unicyclic(int order, int cap) {
  if (order < 3) fail_input("enumerate_unicyclic: order must be >= 3");
  if (order > cap)
    fail_input("enumerate_unicyclic: order " + std::to_string(order) + " above cap " +
               std::to_string(cap));
  std::map<std::string, Graph> found;
  for (const Graph& t : enumerate_trees(order, std::max(order, kTreeEnumerationCap))) {
    for (int u = 0; u < order; ++u)
      for (int v = u + 1; v < order; ++v) {
        if (t.has_edge(u, v)) continue;
        std::vector<Edge> e(t.edges());
        e.emplace_back(u, v);
        Graph cand = Graph::build(order, e);
        found.emplace(certificate(cand), cand);
      }
  }
  std::vector<Graph> out;
  out.reserve(found.size());
  for (auto& [cert, g] : found) out.push_back(std::move(g));
  return out;
}

Graph random_graphforest(const Graph& g, int total_order, std::uint64_t seed) {
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) <= 1)
      fail_input("random_graphforest: base has a node of degree <= 1 (node " +
                 std::to_string(v) + ")");
  if (total_order < g.order())
    fail_input("random_graphforest: total order below base order");
  std::mt19937_64 rng(seed);
  std::vector<Edge> e(g.edges());
  for (int v = g.order(); v < total_order; ++v)
    e.emplace_back(static_cast<int>(rng() % v), v);
  return Graph::build(total_order, e);
}

}  // namespace gracegraph
