#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gracegraph/constructive.hpp"
#include "gracegraph/cycles.hpp"
#include "gracegraph/epsilon.hpp"
#include "gracegraph/families.hpp"
#include "gracegraph/graph.hpp"
#include "gracegraph/graph6.hpp"
#include "gracegraph/labeling.hpp"
#include "gracegraph/solver.hpp"
#include "gracegraph/suites.hpp"

using namespace gracegraph;
using ordered_json = nlohmann::ordered_json;

namespace {

long long env_ll(const char* name, long long dflt) {
  const char* e = std::getenv(name);
  if (!e || !*e) return dflt;
  try {
    return std::stoll(e);
  } catch (...) {
    fail_input(std::string(name) + " is not an integer: " + e);
  }
}

// A family expression when it contains '(' (e.g. cycle(7)); graph6
// otherwise.
Graph parse_graph_arg(const std::string& s) {
  if (s.find('(') != std::string::npos) return make(FamilySpec::parse(s));
  return decode_graph6(s);
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) fail_input("cannot write to " + path);
  return file;
}

std::string labels_line(const std::vector<int>& labels) {
  std::string s;
  for (size_t i = 0; i < labels.size(); ++i)
    s += (i ? " " : "") + std::to_string(labels[i]);
  return s;
}

ordered_json outcome_json(const Graph& g, const SearchOutcome& out) {
  ordered_json j;
  j["graph6"] = encode_graph6(g);
  j["p"] = g.order();
  j["q"] = g.size();
  j["verdict"] = to_string(out.verdict);
  if (out.opt) j["opt"] = *out.opt;
  j["opt_minimal_proven"] = out.opt_minimal_proven;
  if (out.witness) j["witness"] = out.witness->labels;
  j["nodes_expanded"] = out.nodes_expanded;
  j["wall_ms"] = out.wall_ms;
  return j;
}

void print_outcome(const Graph& g, const SearchOutcome& out, bool json,
                   std::ostream& os) {
  if (json) {
    os << outcome_json(g, out).dump(2) << "\n";
    return;
  }
  os << "graph   " << encode_graph6(g) << "  (p=" << g.order()
     << ", q=" << g.size() << ")\n";
  os << "verdict " << to_string(out.verdict) << "\n";
  if (out.opt)
    os << "opt     " << *out.opt
       << (out.opt_minimal_proven ? " (proven minimal)" : "") << "\n";
  if (out.witness) os << "labels  " << labels_line(out.witness->labels) << "\n";
  os << "work    " << out.nodes_expanded << " placements, " << out.wall_ms
     << " ms\n";
}

int exit_for(const SearchOutcome& out) {
  return out.verdict == Verdict::budget_exceeded ? 2 : 0;
}

SolveOptions make_opts(long long budget, int workers, bool no_shortcut,
                       bool no_twins) {
  SolveOptions opts;
  opts.budget = budget;
  opts.workers = workers;
  opts.rosa_golomb_shortcut = !no_shortcut;
  opts.break_twin_labels = !no_twins;
  return opts;
}

}  // namespace

int main(int argc, char** argv) {
  long long budget = env_ll("GRACEGRAPH_BUDGET", kDefaultSolveBudget);
  int workers = (int)env_ll("GRACEGRAPH_WORKERS", 1);

  CLI::App app{"exact graceful-labeling laboratory"};
  app.require_subcommand(1);

  std::string graph_arg, out_path, format = "g6", mode = "up_to_complement";
  bool json = false, no_shortcut = false, no_twins = false;
  long long limit = 10;
  std::vector<int> leaves;
  std::string suite_name;
  std::vector<std::string> param_kv;
  std::string graphs_file;
  bool list_suites = false;

  auto add_graph_positional = [&](CLI::App* sub) {
    sub->add_option("graph", graph_arg,
                    "family expression like cycle(7), or graph6")
        ->required();
  };
  auto add_search_flags = [&](CLI::App* sub) {
    sub->add_option("--budget", budget, "label-placement budget");
    sub->add_option("--workers", workers, "worker threads");
    sub->add_flag("--no-shortcut", no_shortcut,
                  "disable the parity certificate, always search");
    sub->add_flag("--no-twins", no_twins,
                  "disable canonical ordering of interchangeable nodes");
    sub->add_flag("--json", json, "machine-readable output");
  };

  auto* gen = app.add_subcommand("gen", "generate a graph and print it");
  add_graph_positional(gen);
  gen->add_option("--format", format, "g6 | edges")
      ->check(CLI::IsMember({"g6", "edges"}));
  gen->add_option("--out", out_path, "write to a file instead of stdout");

  auto* solve = app.add_subcommand("solve", "decide gracefulness");
  add_graph_positional(solve);
  add_search_flags(solve);

  auto* opt = app.add_subcommand("opt", "smallest achievable max label");
  add_graph_positional(opt);
  add_search_flags(opt);

  auto* enumerate =
      app.add_subcommand("enumerate", "all graceful labelings");
  add_graph_positional(enumerate);
  add_search_flags(enumerate);
  enumerate->add_option("--mode", mode, "raw | up_to_complement")
      ->check(CLI::IsMember({"raw", "up_to_complement"}));
  enumerate->add_option("--limit", limit, "print at most this many labelings");

  auto* classify = app.add_subcommand(
      "classify", "cycle-length residues, class, and parity certificate");
  add_graph_positional(classify);
  classify->add_flag("--json", json, "machine-readable output");

  auto* audit = app.add_subcommand(
      "audit", "re-check the structural theorems for the graph's class");
  add_graph_positional(audit);
  audit->add_flag("--json", json, "machine-readable output");

  auto* embed = app.add_subcommand(
      "embed", "minimum-order graceful host containing the graph induced");
  add_graph_positional(embed);
  add_search_flags(embed);

  auto* plant = app.add_subcommand(
      "plant", "attach a graceful caterpillar at the 0-labeled node");
  add_graph_positional(plant);
  add_search_flags(plant);
  plant
      ->add_option("--leaves", leaves,
                   "comma-separated leaf counts per spine node, root first")
      ->required()
      ->delimiter(',');

  auto* closure = app.add_subcommand(
      "closure", "even-degree bipartite supergraph via at most two nodes");
  add_graph_positional(closure);
  closure->add_flag("--json", json, "machine-readable output");

  auto* suite = app.add_subcommand("suite", "run a named evidence suite");
  suite->add_option("name", suite_name, "suite name (see --list)");
  suite->add_flag("--list", list_suites, "list suites and default budgets");
  suite->add_option("--param", param_kv, "suite parameter key=value")
      ->expected(-1);
  suite->add_option("--graphs", graphs_file,
                    "corpus file for the custom suite (graph6 or edge lists)");
  suite->add_option("--out", out_path, "write the JSON report here");
  suite->add_option("--workers", workers, "worker threads");
  suite->add_option("--budget", budget, "override the suite default budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 3;
  }

  try {
    if (gen->parsed()) {
      Graph g = parse_graph_arg(graph_arg);
      std::ofstream file;
      std::ostream& os = open_out(file, out_path);
      if (format == "edges") os << to_edge_list(g);
      else os << encode_graph6(g) << "\n";
      return 0;
    }

    if (solve->parsed()) {
      Graph g = parse_graph_arg(graph_arg);
      SearchOutcome out =
          solve_graceful(g, make_opts(budget, workers, no_shortcut, no_twins));
      print_outcome(g, out, json, std::cout);
      return exit_for(out);
    }

    if (opt->parsed()) {
      Graph g = parse_graph_arg(graph_arg);
      SearchOutcome out = optimal_labeling(
          g, make_opts(budget, workers, no_shortcut, no_twins));
      print_outcome(g, out, json, std::cout);
      return exit_for(out);
    }

    if (enumerate->parsed()) {
      Graph g = parse_graph_arg(graph_arg);
      EnumMode m =
          mode == "raw" ? EnumMode::raw : EnumMode::up_to_complement;
      EnumerationResult res = enumerate_graceful(
          g, m, make_opts(budget, workers, no_shortcut, no_twins));
      if (json) {
        ordered_json j;
        j["graph6"] = encode_graph6(g);
        j["mode"] = mode;
        j["count"] = res.labelings.size();
        j["complete"] = res.complete;
        ordered_json arr = ordered_json::array();
        for (const Labeling& l : res.labelings) arr.push_back(l.labels);
        j["labelings"] = std::move(arr);
        if (!res.by_missing_node_label.empty()) {
          ordered_json h = ordered_json::object();
          for (auto [k, v] : res.by_missing_node_label)
            h[std::to_string(k)] = v;
          j["by_missing_node_label"] = std::move(h);
        }
        j["nodes_expanded"] = res.nodes_expanded;
        j["wall_ms"] = res.wall_ms;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << res.labelings.size() << " labelings (" << mode << ")"
                  << (res.complete ? "" : ", INCOMPLETE") << "\n";
        long long shown = 0;
        for (const Labeling& l : res.labelings) {
          if (shown++ >= limit) {
            std::cout << "... (" << res.labelings.size() - limit
                      << " more)\n";
            break;
          }
          std::cout << labels_line(l.labels) << "\n";
        }
      }
      return res.complete ? 0 : 2;
    }

    if (classify->parsed()) {
      Graph g = parse_graph_arg(graph_arg);
      EpsilonReport rep = classify_epsilon(g);
      if (json) {
        ordered_json j;
        j["graph6"] = encode_graph6(g);
        j["epsilon_class"] = to_string(rep.epsilon_class);
        j["rosa_golomb"] = to_string(rep.rosa_golomb);
        j["size_congruence_ok"] = rep.size_congruence_ok;
        j["xi"] = rep.xi;
        j["residues"] = rep.residues;
        j["cycle_count"] = rep.cycle_count;
        j["truncated"] = rep.truncated;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "graph        " << encode_graph6(g) << "\n";
        std::cout << "class        " << to_string(rep.epsilon_class) << "\n";
        std::cout << "certificate  " << to_string(rep.rosa_golomb) << "\n";
        std::cout << "congruence   "
                  << (rep.size_congruence_ok ? "holds" : "violated") << "\n";
        std::cout << "cycles       " << rep.cycle_count
                  << (rep.truncated ? " (truncated)" : "") << ", xi = ["
                  << rep.xi[0] << ", " << rep.xi[1] << ", " << rep.xi[2]
                  << ", " << rep.xi[3] << "]\n";
      }
      return 0;
    }

    if (audit->parsed()) {
      Graph g = parse_graph_arg(graph_arg);
      EpsilonReport rep = structure_audit(g);
      bool any_fail = false;
      if (json) {
        ordered_json arr = ordered_json::array();
        for (const AuditRecord& a : rep.audit) {
          any_fail |= a.status == AuditStatus::fail;
          arr.push_back({{"id", a.id},
                         {"status", to_string(a.status)},
                         {"detail", a.detail}});
        }
        ordered_json j;
        j["graph6"] = encode_graph6(g);
        j["epsilon_class"] = to_string(rep.epsilon_class);
        j["audit"] = std::move(arr);
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "graph " << encode_graph6(g) << "  class "
                  << to_string(rep.epsilon_class) << "\n";
        for (const AuditRecord& a : rep.audit) {
          any_fail |= a.status == AuditStatus::fail;
          std::cout << "  [" << to_string(a.status) << "] " << a.id;
          if (!a.detail.empty()) std::cout << "  " << a.detail;
          std::cout << "\n";
        }
      }
      return any_fail ? 1 : 0;
    }

    if (embed->parsed()) {
      Graph g = parse_graph_arg(graph_arg);
      OptimalEmbedding emb = optimal_graceful_embedding(
          g, make_opts(budget, workers, no_shortcut, no_twins));
      if (json) {
        ordered_json j;
        j["graph6"] = encode_graph6(g);
        j["host_graph6"] = encode_graph6(emb.record.output_graph);
        j["host_order"] = emb.minimal_order;
        j["minimal_proven"] = emb.minimal_proven;
        j["host_connected"] = emb.host_connected;
        j["host_labels"] = emb.record.output_labeling.labels;
        j["verified"] = emb.record.verified;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "host    " << encode_graph6(emb.record.output_graph)
                  << "  (order " << emb.minimal_order
                  << (emb.minimal_proven ? ", proven minimal" : "") << ")\n";
        std::cout << "labels  "
                  << labels_line(emb.record.output_labeling.labels) << "\n";
        std::cout << "host is " << (emb.host_connected ? "" : "not ")
                  << "connected\n";
      }
      return 0;
    }

    if (plant->parsed()) {
      Graph g = parse_graph_arg(graph_arg);
      SearchOutcome base =
          solve_graceful(g, make_opts(budget, workers, no_shortcut, no_twins));
      if (base.verdict != Verdict::graceful)
        fail_input("plant needs a graceful base, but the graph is " +
                   to_string(base.verdict));
      ConstructionRecord rec =
          plant_caterpillar_graceful(g, *base.witness, leaves);
      if (json) {
        ordered_json j;
        j["graph6"] = encode_graph6(g);
        j["base_labels"] = rec.input_labeling.labels;
        j["output_graph6"] = encode_graph6(rec.output_graph);
        j["output_labels"] = rec.output_labeling.labels;
        j["verified"] = rec.verified;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "base    " << encode_graph6(g) << "  labels "
                  << labels_line(rec.input_labeling.labels) << "\n";
        std::cout << "planted " << encode_graph6(rec.output_graph)
                  << "  (p=" << rec.output_graph.order()
                  << ", q=" << rec.output_graph.size() << ")\n";
        std::cout << "labels  " << labels_line(rec.output_labeling.labels)
                  << "\n";
      }
      return 0;
    }

    if (closure->parsed()) {
      Graph g = parse_graph_arg(graph_arg);
      Graph h = euler_bipartite_closure(g);
      if (json) {
        ordered_json j;
        j["graph6"] = encode_graph6(g);
        j["closure_graph6"] = encode_graph6(h);
        j["added_nodes"] = h.order() - g.order();
        j["added_edges"] = h.size() - g.size();
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "input   " << encode_graph6(g) << "  (p=" << g.order()
                  << ", q=" << g.size() << ")\n";
        std::cout << "closure " << encode_graph6(h) << "  (p=" << h.order()
                  << ", q=" << h.size() << ")\n";
      }
      return 0;
    }

    if (suite->parsed()) {
      if (list_suites) {
        for (const std::string& s : registered_suites())
          std::cout << s << "  (default budget " << suite_default_budget(s)
                    << ")\n";
        return 0;
      }
      if (suite_name.empty())
        fail_input("suite: give a suite name or --list");
      SuiteParams params;
      for (const std::string& kv : param_kv) {
        auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0)
          fail_input("--param expects key=value, got " + kv);
        try {
          params.ints[kv.substr(0, eq)] = std::stoll(kv.substr(eq + 1));
        } catch (const error&) {
          throw;
        } catch (...) {
          fail_input("--param value is not an integer: " + kv);
        }
      }
      if (suite->count("--budget")) params.ints["budget"] = budget;
      if (!graphs_file.empty()) {
        IngestResult in = ingest_corpus(graphs_file);
        for (const std::string& d : in.diagnostics)
          std::cerr << "corpus: " << d << "\n";
        for (const Graph& g : in.graphs)
          params.graphs.push_back(encode_graph6(g));
      }
      SuiteReport rep = run_suite(suite_name, params, workers);
      if (out_path.empty()) {
        std::cout << report_json(rep);
      } else {
        emit_report(rep, out_path);
        std::cout << "suite " << rep.suite << ": " << rep.summary.supported
                  << " supported, " << rep.summary.refuted << " refuted, "
                  << rep.summary.inconclusive << " inconclusive, "
                  << rep.summary.informational << " informational -> "
                  << out_path << "\n";
      }
      if (rep.summary.refuted > 0) {
        for (const std::string& ce : rep.counterexamples)
          std::cerr << "counterexample: " << ce << "\n";
        return 1;
      }
      return rep.summary.inconclusive > 0 ? 2 : 0;
    }
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.which() == error::kind::budget ? 2 : 3;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
