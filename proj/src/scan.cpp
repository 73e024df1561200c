#include "incol/scan.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <charconv>
#include <chrono>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "incol/bounds.hpp"
#include "incol/decomp.hpp"
#include "incol/errors.hpp"
#include "incol/families.hpp"

namespace incol {

using nlohmann::json;

namespace {

// One argument slot expands to its list of literal values.
std::vector<std::string> expand_arg(const json& arg) {
  if (arg.is_number_integer()) return {std::to_string(arg.get<long long>())};
  if (arg.is_number()) {
    std::array<char, 32> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), arg.get<double>());
    return {std::string(buf.data(), ptr)};
  }
  if (arg.is_string()) return {arg.get<std::string>()};
  if (arg.is_object() && arg.contains("from") && arg.contains("to")) {
    const long long from = arg.at("from").get<long long>();
    const long long to = arg.at("to").get<long long>();
    const long long step = arg.value("step", 1LL);
    if (step <= 0) throw std::invalid_argument("scan spec: range step must be positive");
    std::vector<std::string> out;
    for (long long v = from; v <= to; v += step) out.push_back(std::to_string(v));
    return out;
  }
  if (arg.is_array()) {
    std::vector<std::string> out;
    for (const auto& a : arg)
      for (auto& s : expand_arg(a)) out.push_back(std::move(s));
    return out;
  }
  throw std::invalid_argument("scan spec: unsupported argument " + arg.dump());
}

template <typename T>
std::string cell(const std::optional<T>& v) {
  return v ? std::to_string(*v) : std::string();
}

}  // namespace

ScanSpec parse_scan_spec(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("scan spec must be a JSON object");
  ScanSpec spec;
  try {
    if (j.contains("schema") && j.at("schema").get<int>() != 1) throw std::invalid_argument("unsupported scan schema");
    spec.arc_guard = j.value("guard", kDefaultArcGuard);
    spec.exact = j.value("exact", true);
    spec.timing = j.value("timing", false);
    spec.jobs = std::max(1, j.value("jobs", 1));
    const std::string format = j.value("format", std::string("csv"));
    if (format == "csv") spec.format = ScanFormat::csv;
    else if (format == "json") spec.format = ScanFormat::json;
    else throw std::invalid_argument("scan spec: format must be csv or json");
    if (j.contains("out")) spec.out = j.at("out").get<std::string>();

    for (const auto& fam : j.value("families", json::array())) {
      const std::string name = fam.at("family").get<std::string>();
      std::vector<std::vector<std::string>> slots;
      for (const auto& arg : fam.value("args", json::array())) slots.push_back(expand_arg(arg));
      if (fam.contains("seeds")) slots.push_back(expand_arg(fam.at("seeds")));

      std::vector<std::string> combos{""};
      for (const auto& slot : slots) {
        std::vector<std::string> next;
        for (const auto& prefix : combos)
          for (const auto& value : slot) next.push_back(prefix.empty() ? value : prefix + "," + value);
        combos = std::move(next);
      }
      for (const auto& args : combos) spec.instances.push_back(args.empty() ? name : name + ":" + args);
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("scan spec: ") + e.what());
  }
  return spec;
}

std::vector<std::string> scan_columns(bool timing) {
  std::vector<std::string> cols{"id",          "n",         "m",           "max_degree", "gamma",
                                "st",          "chi_prime", "domination_lower", "star_forest_upper", "chi_i",
                                "sandwich_violation"};
  if (timing) cols.push_back("runtime_ms");
  cols.push_back("error");
  return cols;
}

ScanRow scan_instance(const std::string& instance, int arc_guard, bool exact) {
  const auto start = std::chrono::steady_clock::now();
  ScanRow row;
  row.id = instance;
  try {
    const auto spec = parse_family(instance);
    row.id = spec.id();
    const Graph g = generate(spec);
    row.n = g.order();
    row.m = g.size();
    row.max_degree = g.max_degree();
    const bool in_range = 2 * g.size() <= arc_guard;
    if (in_range) {
      const int gamma = domination_number_exact(g, arc_guard).gamma;
      row.gamma = gamma;
      row.domination_lower = lower_bound_domination(g, gamma);
      const auto sa = star_arboricity_exact(g, arc_guard);
      const auto ci = chromatic_index_exact(g, arc_guard);
      row.st = sa.st;
      row.chi_prime = ci.chi_prime;
      row.star_forest_upper = star_forest_coloring(g, sa.witness, ci.witness).palette_size();
    } else {
      row.star_forest_upper = star_forest_upper_bound(g, arc_guard).coloring.palette_size();
    }
    if (exact && in_range) {
      ExactOptions options;
      options.arc_guard = arc_guard;
      row.chi_i = exact_chi_i(g, options).chi;
    }

    if (row.chi_i) {
      if (row.domination_lower && *row.domination_lower > *row.chi_i) row.sandwich_violation = true;
      if (*row.chi_i > *row.star_forest_upper) row.sandwich_violation = true;
    }
    if (row.st && row.chi_prime && *row.star_forest_upper > *row.st + *row.chi_prime) row.sandwich_violation = true;
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  row.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return row;
}

std::vector<ScanRow> run_scan(const ScanSpec& spec) {
  std::vector<ScanRow> rows(spec.instances.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < rows.size(); i = next++) {
      rows[i] = scan_instance(spec.instances[i], spec.arc_guard, spec.exact);
    }
  };
  const int threads = std::min<int>(spec.jobs, static_cast<int>(std::max<std::size_t>(1, rows.size())));
  std::vector<std::jthread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  return rows;
}

std::string format_scan(const std::vector<ScanRow>& rows, ScanFormat format, bool timing) {
  const auto columns = scan_columns(timing);
  if (format == ScanFormat::json) {
    json out = {{"schema", 1}, {"columns", columns}, {"rows", json::array()}};
    for (const auto& r : rows) {
      auto opt = [](const std::optional<int>& v) { return v ? json(*v) : json(nullptr); };
      json row = {{"id", r.id},
                  {"n", opt(r.n)},
                  {"m", opt(r.m)},
                  {"max_degree", opt(r.max_degree)},
                  {"gamma", opt(r.gamma)},
                  {"st", opt(r.st)},
                  {"chi_prime", opt(r.chi_prime)},
                  {"domination_lower", opt(r.domination_lower)},
                  {"star_forest_upper", opt(r.star_forest_upper)},
                  {"chi_i", opt(r.chi_i)},
                  {"sandwich_violation", r.sandwich_violation},
                  {"error", r.error.empty() ? json(nullptr) : json(r.error)}};
      if (timing) row["runtime_ms"] = r.runtime_ms;
      out["rows"].push_back(std::move(row));
    }
    return out.dump(2) + "\n";
  }

  auto quote = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) {
      if (ch == '"') q += '"';
      q += ch;
    }
    return q + "\"";
  };
  std::ostringstream out;
  for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
  out << '\n';
  for (const auto& r : rows) {
    out << quote(r.id) << ',' << cell(r.n) << ',' << cell(r.m) << ',' << cell(r.max_degree) << ','
        << cell(r.gamma) << ',' << cell(r.st) << ',' << cell(r.chi_prime) << ',' << cell(r.domination_lower) << ','
        << cell(r.star_forest_upper) << ',' << cell(r.chi_i) << ',' << (r.sandwich_violation ? "true" : "false");
    if (timing) out << ',' << static_cast<long long>(r.runtime_ms + 0.5);
    out << ',' << quote(r.error) << '\n';
  }
  return out.str();
}

}  // namespace incol
