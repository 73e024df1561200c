#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#include "incol/families.hpp"
#include "incol/incidence.hpp"
#include "incol/report.hpp"
#include "incol/scan.hpp"
#include "incol/serialize.hpp"

using namespace incol;
using nlohmann::json;

namespace {

Graph fam(const std::string& id) { return generate(parse_family(id)); }

}  // namespace

TEST_CASE("coloring JSON round-trip") {
  const Graph g = fam("petersen");
  const auto c = exact_chi_i(g).witness;
  const json j = coloring_to_json(c);
  CHECK(j.size() == c.arc_count());
  CHECK(j[0].contains("tail"));
  CHECK(coloring_from_json(g, j, c.palette_size()) == c);

  // Arc order in the input does not matter.
  json reversed = json::array();
  for (auto it = j.rbegin(); it != j.rend(); ++it) reversed.push_back(*it);
  CHECK(coloring_from_json(g, reversed, c.palette_size()) == c);

  json unknown = j;
  unknown[0]["head"] = unknown[0]["tail"];
  CHECK_THROWS_AS(coloring_from_json(g, unknown), std::invalid_argument);
  json repeated = j;
  repeated.push_back(j[0]);
  CHECK_THROWS_AS(coloring_from_json(g, repeated), std::invalid_argument);
  CHECK_THROWS_AS(coloring_from_json(g, json::object()), std::invalid_argument);
  CHECK_THROWS_AS(coloring_from_json(g, json::array({json{{"tail", 0}}})), std::invalid_argument);
}

TEST_CASE("report JSON has the stable fields") {
  const Graph g = fam("cycle:5");
  const json j = report_to_json(g, build_bound_report(g));
  CHECK(j["schema"] == 1);
  CHECK(j["graph"]["n"] == 5);
  CHECK(j["graph"]["m"] == 5);
  CHECK(j["graph"]["graph6"] == "Dhc");
  CHECK(j["lower"][0]["value"] == 4);
  CHECK(j["lower"][0].contains("name"));
  CHECK(j["upper"].is_array());
  CHECK(j["exact"]["chi_i"] == 4);
  CHECK(j["nec"]["verdict"] == "chi_i >= 4");
}

TEST_CASE("scan spec expansion") {
  const json spec = json::parse(R"({
    "families": [
      {"family": "cycle", "args": [{"from": 3, "to": 5}]},
      {"family": "complete_bipartite", "args": [[3, 4], 2]},
      {"family": "random_gnp", "args": [6, 0.5], "seeds": {"from": 0, "to": 1}},
      {"family": "petersen"}
    ],
    "guard": 100, "exact": false, "format": "json", "jobs": 2
  })");
  const auto s = parse_scan_spec(spec);
  const std::vector<std::string> expected{"cycle:3",
                                          "cycle:4",
                                          "cycle:5",
                                          "complete_bipartite:3,2",
                                          "complete_bipartite:4,2",
                                          "random_gnp:6,0.5,0",
                                          "random_gnp:6,0.5,1",
                                          "petersen"};
  CHECK(s.instances == expected);
  CHECK(s.arc_guard == 100);
  CHECK_FALSE(s.exact);
  CHECK(s.format == ScanFormat::json);
  CHECK(s.jobs == 2);

  CHECK(parse_scan_spec(json::parse(R"({"families": []})")).instances.empty());
  CHECK_THROWS_AS(parse_scan_spec(json::parse(R"({"families": [{"args": [3]}]})")), std::invalid_argument);
  CHECK_THROWS_AS(parse_scan_spec(json::parse(R"({"families": 3})")), std::invalid_argument);
  CHECK_THROWS_AS(parse_scan_spec(json::parse(R"({"families": [], "format": "xml"})")), std::invalid_argument);
}

TEST_CASE("scan rows: cycles follow the 3-divides-n law") {
  ScanSpec spec;
  for (int n = 3; n <= 12; ++n) spec.instances.push_back("cycle:" + std::to_string(n));
  const auto rows = run_scan(spec);
  REQUIRE(rows.size() == 10);
  const std::vector<int> expected{3, 4, 4, 3, 4, 4, 3, 4, 4, 3};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CAPTURE(rows[i].id);
    CHECK(rows[i].chi_i == expected[i]);
    CHECK_FALSE(rows[i].sandwich_violation);
    CHECK(rows[i].error.empty());
  }
}

TEST_CASE("scan records per-instance errors without aborting") {
  ScanSpec spec;
  spec.instances = {"cycle:2", "cycle:4", "complete:20"};
  const auto rows = run_scan(spec);
  REQUIRE(rows.size() == 3);
  CHECK_FALSE(rows[0].error.empty());
  CHECK(rows[1].error.empty());
  CHECK(rows[1].chi_i == 4);
  CHECK(rows[2].error.empty());
  CHECK_FALSE(rows[2].chi_i.has_value());
  CHECK(rows[2].star_forest_upper.has_value());
}

TEST_CASE("scan output is identical regardless of worker count") {
  ScanSpec spec;
  for (int seed = 0; seed < 12; ++seed) spec.instances.push_back("random_gnp:7,0.5," + std::to_string(seed));
  spec.jobs = 1;
  const auto serial = format_scan(run_scan(spec), ScanFormat::csv, false);
  spec.jobs = 4;
  const auto parallel = format_scan(run_scan(spec), ScanFormat::csv, false);
  CHECK(serial == parallel);
  CHECK(format_scan(run_scan(spec), ScanFormat::json, false) ==
        format_scan(run_scan(spec), ScanFormat::json, false));
}

TEST_CASE("CSV layout") {
  const std::vector<std::string> columns{"id",         "n",          "m",     "max_degree",         "gamma",
                                         "st",         "chi_prime",  "domination_lower", "star_forest_upper", "chi_i",
                                         "sandwich_violation", "error"};
  CHECK(scan_columns(false) == columns);
  CHECK(scan_columns(true).size() == columns.size() + 1);

  ScanSpec spec;
  spec.instances = {"cycle:5"};
  const std::string csv = format_scan(run_scan(spec), ScanFormat::csv, false);
  CHECK(csv.rfind("id,n,m,max_degree,gamma,st,chi_prime,domination_lower,star_forest_upper,chi_i,sandwich_violation,error\n", 0) ==
        0);
  CHECK(csv.find("cycle:5,5,5,2,2,2,3,4,5,4,false,") != std::string::npos);

  const std::string empty = format_scan({}, ScanFormat::csv, false);
  CHECK(empty == "id,n,m,max_degree,gamma,st,chi_prime,domination_lower,star_forest_upper,chi_i,sandwich_violation,error\n");
  const json j = json::parse(format_scan({}, ScanFormat::json, false));
  CHECK(j["schema"] == 1);
  CHECK(j["rows"].empty());
}
