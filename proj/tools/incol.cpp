// incol: analysis, exact solving, composition and batch scans of incidence colorings.
//
// Exit codes: 0 success, 1 internal or integrity failure, 2 bad input
// (including a coloring rejected by `verify`).

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "incol/compose.hpp"
#include "incol/errors.hpp"
#include "incol/families.hpp"
#include "incol/graph_io.hpp"
#include "incol/incidence.hpp"
#include "incol/operations.hpp"
#include "incol/report.hpp"
#include "incol/scan.hpp"
#include "incol/serialize.hpp"

namespace {

using nlohmann::json;
using namespace incol;

constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;

/// Input problems that are not already typed by the library.
class InputError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

struct GraphSource {
  std::string family;
  std::string input;
  std::uint64_t seed = 0;

  void attach(CLI::App* cmd) {
    auto* f = cmd->add_option("--family", family, "family spec, e.g. cycle:5, random_gnp:8,0.5,3");
    auto* i = cmd->add_option("--input", input, "graph6 or edge-list file ('-' for stdin)");
    f->excludes(i);
    cmd->add_option("--seed", seed, "seed for random families given without one");
  }

  Graph load() const {
    if (!family.empty()) return generate(parse_family(family, seed));
    if (!input.empty()) return parse_graph_auto(read_file(input));
    throw InputError("one of --family or --input is required");
  }
};

/// Compose operands: an existing file is read as a graph, anything else is a family spec.
Graph load_operand(const std::string& text, std::uint64_t seed) {
  if (std::filesystem::is_regular_file(text)) return parse_graph_auto(read_file(text));
  return generate(parse_family(text, seed));
}

std::vector<Vertex> read_ordering(const std::string& path) {
  std::istringstream in(read_file(path));
  std::vector<Vertex> ordering;
  for (std::string token; in >> token;) {
    try {
      std::size_t used = 0;
      ordering.push_back(std::stoi(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::logic_error&) {
      throw InputError("ordering file " + path + ": '" + token + "' is not a vertex");
    }
  }
  return ordering;
}

std::string report_csv(const BoundReport& report) {
  std::ostringstream out;
  out << "kind,name,value,hypothesis\n";
  auto row = [&](const char* kind, const ReportBound& b) {
    out << kind << ',' << b.name << ',' << b.value << ",\"" << b.hypothesis << "\"\n";
  };
  for (const auto& b : report.lower) row("lower", b);
  for (const auto& b : report.upper) row("upper", b);
  if (report.exact) out << "exact,chi_i," << report.exact->chi << ",\n";
  return out.str();
}

struct AnalyzeArgs {
  GraphSource source;
  bool exact = false;
  bool no_exact = false;
  int guard = kDefaultArcGuard;
  bool planar = false;
  std::string ordering;
  std::string format = "json";
  std::string out;
  std::string dot;
};

int run_analyze(const AnalyzeArgs& a) {
  const Graph g = a.source.load();
  ReportOptions options;
  options.planar = a.planar;
  options.arc_guard = a.guard;
  options.exact = a.exact ? ExactMode::force : a.no_exact ? ExactMode::skip : ExactMode::automatic;
  if (!a.ordering.empty()) options.ordering = read_ordering(a.ordering);

  const BoundReport report = build_bound_report(g, options);
  for (const auto& w : report.warnings) std::cerr << "warning: " << w << '\n';

  write_output(a.format == "csv" ? report_csv(report) : report_to_json(g, report).dump(2) + "\n", a.out);
  if (!a.dot.empty()) {
    const IncidenceColoring* shown = report.exact ? &report.exact->witness
                                     : report.star_forest ? &report.star_forest->coloring
                                                   : nullptr;
    write_output(to_dot(g, shown), a.dot);
  }
  return 0;
}

struct SolveArgs {
  GraphSource source;
  int guard = kDefaultArcGuard;
  std::string out;
  std::string dot;
};

int run_solve(const SolveArgs& a) {
  const Graph g = a.source.load();
  ExactOptions options;
  options.arc_guard = a.guard;
  const ExactResult result = exact_chi_i(g, options);
  json j{{"schema", 1},
         {"n", g.order()},
         {"m", g.size()},
         {"chi_i", result.chi},
         {"search_nodes", result.search_nodes},
         {"coloring", coloring_to_json(result.witness)}};
  if (g.order() <= kGraph6MaxOrder) j["graph6"] = to_graph6(g);
  write_output(j.dump(2) + "\n", a.out);
  if (!a.dot.empty()) write_output(to_dot(g, &result.witness), a.dot);
  return 0;
}

struct ComposeArgs {
  std::string op;
  std::string left;
  std::string right;
  std::string coloring = "exact";
  int guard = kDefaultArcGuard;
  std::uint64_t seed = 0;
  std::string out;
  std::string dot;
};

IncidenceColoring operand_coloring(const Graph& g, const std::string& mode, int guard) {
  if (mode == "greedy") return greedy_coloring(g);
  ExactOptions options;
  options.arc_guard = guard;
  return exact_chi_i(g, options).witness;
}

int run_compose(const ComposeArgs& a) {
  const Graph g1 = load_operand(a.left, a.seed);
  const Graph g2 = load_operand(a.right, a.seed);
  const IncidenceColoring c1 = operand_coloring(g1, a.coloring, a.guard);
  const IncidenceColoring c2 = operand_coloring(g2, a.coloring, a.guard);
  const int p1 = c1.palette_size();
  const int p2 = c2.palette_size();

  json j{{"schema", 1}, {"op", a.op}};
  Composition result{Graph::null_graph(0), IncidenceColoring::blank(Graph::null_graph(0), 0)};
  int budget = p1 + p2;
  if (a.op == "union") {
    result = compose_union_coloring(g1, c1, g2, c2);
  } else if (a.op == "cartesian") {
    result = compose_cartesian_coloring(g1, c1, g2, c2);
  } else {
    auto joined = compose_join_coloring(g1, c1, g2, c2);
    const int m = g1.order();
    const int n = g2.order();
    budget = joined.branch == JoinBranch::head_index ? m + n : std::max(p1, p2) + std::max(m, n) + 2;
    j["branch"] = joined.branch == JoinBranch::head_index ? "head_index" : "shared_base";
    result = std::move(joined);
  }

  const Verdict verdict = verify(result.graph, result.coloring);
  if (!verdict.valid || result.coloring.palette_size() > budget)
    throw IntegrityError("composed coloring failed certification");

  j["n"] = result.graph.order();
  j["m"] = result.graph.size();
  if (result.graph.order() <= kGraph6MaxOrder) j["graph6"] = to_graph6(result.graph);
  j["palette"] = result.coloring.palette_size();
  j["colors_used"] = result.coloring.colors_used();
  j["budget"] = budget;
  j["valid"] = verdict.valid;
  j["inputs"] = json::array({json{{"source", a.left}, {"n", g1.order()}, {"m", g1.size()}, {"palette", p1}},
                             json{{"source", a.right}, {"n", g2.order()}, {"m", g2.size()}, {"palette", p2}}});
  j["coloring"] = coloring_to_json(result.coloring);
  write_output(j.dump(2) + "\n", a.out);
  if (!a.dot.empty()) write_output(to_dot(result.graph, &result.coloring), a.dot);
  return 0;
}

struct ScanArgs {
  std::string spec;
  std::string format;
  std::string out;
  int jobs = 0;
  int guard = 0;
  bool exact = false;
  bool no_exact = false;
};

int run_scan_command(const ScanArgs& a, const CLI::App& cmd) {
  json j;
  try {
    j = json::parse(read_file(a.spec));
  } catch (const json::parse_error& e) {
    throw InputError("scan spec " + a.spec + ": " + e.what());
  }
  ScanSpec spec = parse_scan_spec(j);
  if (!a.format.empty()) spec.format = a.format == "json" ? ScanFormat::json : ScanFormat::csv;
  if (!a.out.empty()) spec.out = a.out;
  if (a.jobs > 0) spec.jobs = a.jobs;
  if (cmd.count("--guard") > 0) spec.arc_guard = a.guard;
  if (a.exact) spec.exact = true;
  if (a.no_exact) spec.exact = false;

  const auto rows = run_scan(spec);
  write_output(format_scan(rows, spec.format, spec.timing), spec.out.value_or(""));
  return 0;
}

struct VerifyArgs {
  GraphSource source;
  std::string coloring;
  std::optional<int> palette;
  std::string out;
};

int run_verify(const VerifyArgs& a) {
  const Graph g = a.source.load();
  json raw;
  try {
    raw = json::parse(read_file(a.coloring));
  } catch (const json::parse_error& e) {
    throw InputError("coloring " + a.coloring + ": " + e.what());
  }
  // Accept a bare arc array or any document carrying one under "coloring".
  if (raw.is_object() && raw.contains("coloring")) raw = raw["coloring"];
  if (raw.is_object() && raw.contains("exact") && raw["exact"].contains("coloring"))
    raw = raw["exact"]["coloring"];
  const IncidenceColoring c = coloring_from_json(g, raw, a.palette);
  if (!c.complete()) throw IncompleteColoringError("coloring leaves arcs uncolored");

  const Verdict verdict = verify(g, c);
  json violations = json::array();
  for (const auto& v : verdict.violations) {
    violations.push_back({{"first", {v.first.tail, v.first.head}},
                          {"second", {v.second.tail, v.second.head}},
                          {"color", v.color}});
  }
  json j{{"schema", 1},
         {"valid", verdict.valid},
         {"palette", c.palette_size()},
         {"colors_used", c.colors_used()},
         {"violations", violations}};
  write_output(j.dump(2) + "\n", a.out);
  return verdict.valid ? 0 : kExitInput;
}

struct ExportArgs {
  GraphSource source;
  std::string to = "graph6";
  std::string coloring;
  std::string out;
};

int run_export(const ExportArgs& a) {
  const Graph g = a.source.load();
  std::string text;
  if (a.to == "graph6") {
    text = to_graph6(g) + "\n";
  } else if (a.to == "edges") {
    text = to_edge_list(g);
  } else {
    std::optional<IncidenceColoring> c;
    if (!a.coloring.empty()) {
      json raw = json::parse(read_file(a.coloring));
      if (raw.is_object() && raw.contains("coloring")) raw = raw["coloring"];
      c = coloring_from_json(g, raw);
    }
    text = to_dot(g, c ? &*c : nullptr);
  }
  write_output(text, a.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Incidence coloring bounds, exact solver and composers"};
  app.require_subcommand(1);

  AnalyzeArgs analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "bound report for one graph");
  analyze.source.attach(analyze_cmd);
  auto* force = analyze_cmd->add_flag("--exact,--force", analyze.exact, "solve exactly regardless of the guard");
  analyze_cmd->add_flag("--no-exact", analyze.no_exact, "skip the exact solver")->excludes(force);
  analyze_cmd->add_option("--guard", analyze.guard, "arc cap for exact solvers (negative disables)");
  analyze_cmd->add_flag("--planar", analyze.planar, "declare the graph planar (not checked)");
  analyze_cmd->add_option("--ordering", analyze.ordering, "vertex ordering file for the degeneracy bound");
  analyze_cmd->add_option("--format", analyze.format)->check(CLI::IsMember({"json", "csv"}));
  analyze_cmd->add_option("--out", analyze.out, "output path (default stdout)");
  analyze_cmd->add_option("--dot", analyze.dot, "also write a DOT rendering of the best coloring");

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "exact incidence chromatic number with a witness");
  solve.source.attach(solve_cmd);
  solve_cmd->add_option("--guard", solve.guard, "arc cap (negative disables)");
  solve_cmd->add_option("--out", solve.out);
  solve_cmd->add_option("--dot", solve.dot);

  ComposeArgs compose;
  auto* compose_cmd = app.add_subcommand("compose", "compose colorings of two graphs");
  compose_cmd->add_option("op", compose.op)->required()->check(CLI::IsMember({"union", "cartesian", "join"}));
  compose_cmd->add_option("left", compose.left, "family spec or graph file")->required();
  compose_cmd->add_option("right", compose.right, "family spec or graph file")->required();
  compose_cmd->add_option("--coloring", compose.coloring, "operand colorings")
      ->check(CLI::IsMember({"exact", "greedy"}));
  compose_cmd->add_option("--guard", compose.guard, "arc cap for the exact solver (negative disables)");
  compose_cmd->add_option("--seed", compose.seed, "seed for random families given without one");
  compose_cmd->add_option("--out", compose.out);
  compose_cmd->add_option("--dot", compose.dot);

  ScanArgs scan;
  auto* scan_cmd = app.add_subcommand("scan", "batch table over a family spec file");
  scan_cmd->add_option("spec", scan.spec, "scan spec JSON")->required();
  scan_cmd->add_option("--format", scan.format, "overrides the spec")->check(CLI::IsMember({"json", "csv"}));
  scan_cmd->add_option("--out", scan.out, "overrides the spec");
  scan_cmd->add_option("--jobs", scan.jobs, "worker threads, overrides the spec")->check(CLI::PositiveNumber);
  scan_cmd->add_option("--guard", scan.guard, "overrides the spec");
  auto* scan_exact = scan_cmd->add_flag("--exact", scan.exact);
  scan_cmd->add_flag("--no-exact", scan.no_exact)->excludes(scan_exact);

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "check an incidence coloring against a graph");
  verify_args.source.attach(verify_cmd);
  verify_cmd->add_option("--coloring", verify_args.coloring, "coloring JSON")->required();
  verify_cmd->add_option("--palette", verify_args.palette, "palette size (default max color + 1)");
  verify_cmd->add_option("--out", verify_args.out);

  ExportArgs export_args;
  auto* export_cmd = app.add_subcommand("export", "write a graph as graph6, edge list or DOT");
  export_args.source.attach(export_cmd);
  export_cmd->add_option("--to", export_args.to)->check(CLI::IsMember({"graph6", "edges", "dot"}));
  export_cmd->add_option("--coloring", export_args.coloring, "coloring JSON to label DOT arcs");
  export_cmd->add_option("--out", export_args.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*analyze_cmd) return run_analyze(analyze);
    if (*solve_cmd) return run_solve(solve);
    if (*compose_cmd) return run_compose(compose);
    if (*scan_cmd) return run_scan_command(scan, *scan_cmd);
    if (*verify_cmd) return run_verify(verify_args);
    if (*export_cmd) return run_export(export_args);
  } catch (const IntegrityError& e) {
    std::cerr << "integrity error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const TooLargeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}
