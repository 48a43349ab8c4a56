#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "gracegraph/families.hpp"
#include "gracegraph/graph.hpp"
#include "gracegraph/graph6.hpp"
#include "gracegraph/iso.hpp"
#include "gracegraph/suites.hpp"

using namespace gracegraph;

namespace {

SuiteReport strip_wall(SuiteReport r) {
  for (auto& rec : r.records) rec.wall_ms = 0;
  return r;
}

}  // namespace

TEST_CASE("suite registry") {
  auto names = registered_suites();
  for (const char* required :
       {"cycles", "wheels", "dutch", "french", "windmill_c4", "nongraceful_catalog",
        "h22n", "kn", "unicyclic", "trees", "eulerforest_eps", "graphforest_graceful",
        "bipartite_euler_opt", "structure_audit", "custom"}) {
    CHECK(std::find(names.begin(), names.end(), required) != names.end());
  }
  for (const std::string& name : names) CHECK(suite_default_budget(name) > 0);
  CHECK_THROWS_AS(suite_default_budget("nope"), error);
  CHECK_THROWS_AS(run_suite("nope"), error);
}

TEST_CASE("cycle suite verdict pattern") {
  SuiteParams p;
  p.ints["n_max"] = 8;
  auto report = run_suite("cycles", p, 2);
  CHECK(report.suite == "cycles");
  CHECK(report.records.size() == 6);
  CHECK(report.summary.refuted == 0);
  CHECK(report.summary.supported == 6);
  CHECK(report.counterexamples.empty());
  std::set<int> graceful_n;
  for (const auto& rec : report.records) {
    CHECK(rec.assessment == "supported");
    CHECK(rec.p == rec.q);
    CHECK_FALSE(rec.graph6.empty());
    CHECK(decode_graph6(rec.graph6).order() == rec.p);
    if (rec.verdict == "graceful") {
      graceful_n.insert(rec.p);
      REQUIRE(rec.witness.has_value());
    }
  }
  CHECK(graceful_n == std::set<int>{3, 4, 7, 8});
}

TEST_CASE("dutch suite verdict pattern") {
  SuiteParams p;
  p.ints["m_max"] = 5;
  auto report = run_suite("dutch", p, 2);
  CHECK(report.summary.refuted == 0);
  CHECK(report.summary.inconclusive == 0);
  std::set<std::string> graceful_family;
  for (const auto& rec : report.records)
    if (rec.verdict == "graceful") graceful_family.insert(rec.family);
  CHECK(graceful_family == std::set<std::string>{"dutch_windmill(1)", "dutch_windmill(4)",
                                                 "dutch_windmill(5)"});
}

TEST_CASE("join family counterexample is reported, not hidden") {
  SuiteParams p;
  p.ints["n_max"] = 4;
  auto report = run_suite("h22n", p, 2);
  CHECK(report.summary.refuted == 1);
  REQUIRE(report.counterexamples.size() == 1);
  Graph cx = decode_graph6(report.counterexamples[0]);
  CHECK(is_isomorphic(cx, make(FamilySpec::parse("h_join(2,2,4)"))));
  for (const auto& rec : report.records) {
    if (rec.assessment != "refuted") continue;
    CHECK(rec.family == "h_join(2,2,4)");
    CHECK(rec.verdict == "graceful");
    REQUIRE(rec.witness.has_value());
  }
  CHECK((report.summary.refuted > 0) == !report.counterexamples.empty());
}

TEST_CASE("reports are bit reproducible across runs and worker counts") {
  SuiteParams p;
  p.ints["n_max"] = 10;
  auto a = strip_wall(run_suite("cycles", p, 1));
  auto b = strip_wall(run_suite("cycles", p, 3));
  CHECK(report_json(a) == report_json(b));
  auto c = strip_wall(run_suite("cycles", p, 3));
  CHECK(report_json(b) == report_json(c));
}

TEST_CASE("report json shape") {
  SuiteParams p;
  p.ints["m_max"] = 3;
  auto report = run_suite("dutch", p, 1);
  auto parsed = nlohmann::json::parse(report_json(report));
  CHECK(parsed["schema_version"] == 1);
  CHECK(parsed["suite"] == "dutch");
  CHECK(parsed["parameters"].is_object());
  CHECK(parsed["parameters"]["m_max"] == "3");
  CHECK(parsed["summary"]["supported"] == report.summary.supported);
  CHECK(parsed["records"].is_array());
  CHECK(parsed["records"].size() == report.records.size());
  for (const auto& rec : parsed["records"]) {
    CHECK(rec.contains("graph6"));
    CHECK(rec.contains("epsilon_class"));
    CHECK(rec.contains("claim"));
    CHECK(rec.contains("verdict"));
    CHECK(rec.contains("assessment"));
    CHECK(rec.contains("opt"));
    CHECK(rec.contains("witness"));
  }
  std::string path = "suite_report_test.json";
  emit_report(report, path);
  std::ifstream in(path);
  REQUIRE(in.good());
  std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(body == report_json(report));
  in.close();
  std::remove(path.c_str());
  CHECK_THROWS_AS(emit_report(report, "no_such_dir/x/y.json"), error);
}

TEST_CASE("parameter caps") {
  SuiteParams p;
  p.ints["n_max"] = 50;
  CHECK_THROWS_AS(run_suite("cycles", p, 1), error);
  p.ints["n_max"] = 2;
  CHECK_THROWS_AS(run_suite("cycles", p, 1), error);
  SuiteParams d;
  d.ints["m_max"] = 9;
  CHECK_THROWS_AS(run_suite("dutch", d, 1), error);
}

TEST_CASE("corpus ingestion") {
  std::string path = "ingest_test_input.txt";
  {
    std::ofstream out(path);
    out << "# comment line\n";
    out << "\n";
    out << "Bw\n";
    out << "4 3\n";
    out << "0 1\n";
    out << "1 2\n";
    out << "2 3\n";
    out << "not a graph\n";
    out << "Cl  \n";
  }
  auto res = ingest_corpus(path);
  std::remove(path.c_str());
  REQUIRE(res.graphs.size() == 3);
  CHECK(res.graphs[0] == make(FamilySpec::parse("complete(3)")));
  CHECK(res.graphs[1] == make(FamilySpec::parse("path(4)")));
  CHECK(res.graphs[2] == make(FamilySpec::parse("cycle(4)")));
  CHECK(res.diagnostics.size() == 1);
  CHECK(res.diagnostics[0].find("line 8") != std::string::npos);
  CHECK_THROWS_AS(ingest_corpus("definitely_missing_file.txt"), error);
}

TEST_CASE("custom suite runs ingested graphs") {
  SuiteParams p;
  p.graphs = {"Bw", "Cl"};
  auto report = run_suite("custom", p, 1);
  REQUIRE(report.records.size() == 2);
  for (const auto& rec : report.records) {
    CHECK(rec.verdict == "graceful");
    CHECK((rec.assessment == "informational" || rec.assessment == "inconclusive"));
  }
  CHECK(report.summary.refuted == 0);
}

TEST_CASE("audit suite is clean on the bundled corpora") {
  auto report = run_suite("structure_audit");
  CHECK(report.summary.refuted == 0);
  CHECK_FALSE(report.records.empty());
  for (const auto& rec : report.records) CHECK(rec.verdict == "audit_pass");
}

TEST_CASE("bundled corpora have the advertised shapes") {
  auto chars = characterization_corpus();
  CHECK(chars.size() >= 200);
  std::set<std::string> certs;
  for (const Graph& g : chars) {
    CHECK(g.order() <= 10);
    CHECK(structural_profile(g).connected);
    certs.insert(certificate(g));
  }
  CHECK(certs.size() == chars.size());

  auto small = connected_graph_corpus(6);
  CHECK(small.size() == 143);
  std::map<int, int> by_order;
  for (const Graph& g : small) ++by_order[g.order()];
  CHECK(by_order == std::map<int, int>{{1, 1}, {2, 1}, {3, 2}, {4, 6}, {5, 21}, {6, 112}});
  CHECK_THROWS_AS(connected_graph_corpus(7), error);

  auto euler_bip = bipartite_euler_corpus(10);
  CHECK(euler_bip.size() == 46);
  for (const Graph& g : euler_bip) {
    auto prof = structural_profile(g);
    CHECK(prof.euler);
    CHECK(prof.bipartition.has_value());
    CHECK(g.order() <= 10);
  }

  for (int r = 0; r < 4; ++r) {
    for (const Graph& g : epsilon_corpus(r)) {
      auto prof = structural_profile(g);
      CHECK(prof.euler);
    }
  }
  CHECK_THROWS_AS(epsilon_corpus(4), error);
}
