#include "incol/families.hpp"

#include <array>
#include <charconv>
#include <random>
#include <string>

#include "incol/errors.hpp"
#include "incol/operations.hpp"

namespace incol {

namespace {

struct NamedFamily {
  std::string_view name;
  Family family;
};

constexpr std::array kNames{
    NamedFamily{"cycle", Family::cycle},
    NamedFamily{"path", Family::path},
    NamedFamily{"complete", Family::complete},
    NamedFamily{"complete_bipartite", Family::complete_bipartite},
    NamedFamily{"star", Family::star},
    NamedFamily{"wheel", Family::wheel},
    NamedFamily{"grid", Family::grid},
    NamedFamily{"prism", Family::prism},
    NamedFamily{"petersen", Family::petersen},
    NamedFamily{"random_gnp", Family::random_gnp},
    NamedFamily{"random_ktree", Family::random_ktree},
    NamedFamily{"matching_pair", Family::matching_pair},
    NamedFamily{"null", Family::null_graph},
};

// Uniform double in [0,1) from the top 53 bits; independent of the standard
// library's distribution implementations.
double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

long long parse_int(std::string_view s, std::string_view whole) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw GraphError("family \"" + std::string(whole) + "\": expected an integer, got \"" + std::string(s) + "\"");
  }
  return value;
}

double parse_double(std::string_view s, std::string_view whole) {
  double value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw GraphError("family \"" + std::string(whole) + "\": expected a number, got \"" + std::string(s) + "\"");
  }
  return value;
}

std::vector<std::string_view> split_args(std::string_view s) {
  std::vector<std::string_view> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = s.find(',', start);
    out.push_back(s.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

void require(bool ok, const FamilySpec& spec, std::string_view what) {
  if (!ok) throw GraphError("family " + spec.id() + ": " + std::string(what));
}

std::size_t expected_ints(Family f) {
  switch (f) {
    case Family::petersen: return 0;
    case Family::complete_bipartite:
    case Family::grid:
    case Family::random_ktree:
    case Family::matching_pair: return 2;
    default: return 1;
  }
}

Graph make_cycle(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back(make_edge(i, (i + 1) % n));
  return Graph::from_edge_list(n, edges);
}

Graph make_path(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph::from_edge_list(n, edges);
}

Graph make_complete(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  return Graph::from_edge_list(n, edges);
}

Graph make_petersen() {
  std::vector<std::pair<int, int>> subsets;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) subsets.emplace_back(a, b);
  std::vector<Edge> edges;
  for (int i = 0; i < 10; ++i) {
    for (int j = i + 1; j < 10; ++j) {
      auto [a, b] = subsets[i];
      auto [c, d] = subsets[j];
      if (a != c && a != d && b != c && b != d) edges.push_back({i, j});
    }
  }
  return Graph::from_edge_list(10, edges);
}

Graph make_gnp(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (unit_uniform(rng) < p) edges.push_back({i, j});
  return Graph::from_edge_list(n, edges);
}

Graph make_ktree(int k, int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (int i = 0; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) edges.push_back({i, j});
  // k-cliques available for attachment.
  std::vector<std::vector<Vertex>> cliques;
  for (int skip = 0; skip <= k; ++skip) {
    std::vector<Vertex> c;
    for (int i = 0; i <= k; ++i)
      if (i != skip) c.push_back(i);
    cliques.push_back(std::move(c));
  }
  for (Vertex v = k + 1; v < n; ++v) {
    const auto base = cliques[rng() % cliques.size()];
    for (Vertex x : base) edges.push_back({x, v});
    for (std::size_t drop = 0; drop < base.size(); ++drop) {
      std::vector<Vertex> c;
      for (std::size_t i = 0; i < base.size(); ++i)
        if (i != drop) c.push_back(base[i]);
      c.push_back(v);
      cliques.push_back(std::move(c));
    }
  }
  return Graph::from_edge_list(n, edges);
}

}  // namespace

std::string_view family_name(Family f) {
  for (const auto& nf : kNames)
    if (nf.family == f) return nf.name;
  return "unknown";
}

std::string FamilySpec::id() const {
  std::string out(family_name(family));
  std::vector<std::string> args;
  for (long long v : ints) args.push_back(std::to_string(v));
  if (family == Family::random_gnp) {
    std::array<char, 32> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), probability);
    args.insert(args.begin() + std::min<std::ptrdiff_t>(1, static_cast<std::ptrdiff_t>(args.size())),
                std::string(buf.data(), ptr));
  }
  if (family == Family::random_gnp || family == Family::random_ktree) args.push_back(std::to_string(seed));
  for (std::size_t i = 0; i < args.size(); ++i) {
    out += (i == 0 ? ':' : ',');
    out += args[i];
  }
  return out;
}

FamilySpec parse_family(std::string_view text, std::uint64_t default_seed) {
  const std::size_t colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  const std::string_view rest = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  auto args = split_args(rest);

  FamilySpec spec;
  spec.seed = default_seed;

  if (name == "matching") {
    // matching:10a / matching:10b
    if (args.size() != 1 || args[0].size() < 2 || (args[0].back() != 'a' && args[0].back() != 'b')) {
      throw GraphError("family \"" + std::string(text) + "\": expected matching:<n>a or matching:<n>b");
    }
    spec.family = Family::matching_pair;
    spec.ints = {parse_int(args[0].substr(0, args[0].size() - 1), text), args[0].back() == 'a' ? 0 : 1};
    return spec;
  }

  bool found = false;
  for (const auto& nf : kNames) {
    if (nf.name == name) {
      spec.family = nf.family;
      found = true;
    }
  }
  if (!found) throw GraphError("unknown graph family \"" + std::string(name) + "\"");

  if (spec.family == Family::random_gnp) {
    if (args.size() != 2 && args.size() != 3) throw GraphError("random_gnp expects n,p[,seed]");
    spec.ints = {parse_int(args[0], text)};
    spec.probability = parse_double(args[1], text);
    if (args.size() == 3) spec.seed = static_cast<std::uint64_t>(parse_int(args[2], text));
    return spec;
  }
  if (spec.family == Family::random_ktree) {
    if (args.size() != 2 && args.size() != 3) throw GraphError("random_ktree expects k,n[,seed]");
    spec.ints = {parse_int(args[0], text), parse_int(args[1], text)};
    if (args.size() == 3) spec.seed = static_cast<std::uint64_t>(parse_int(args[2], text));
    return spec;
  }
  if (spec.family == Family::matching_pair && args.size() == 2 && (args[1] == "a" || args[1] == "b")) {
    spec.ints = {parse_int(args[0], text), args[1] == "a" ? 0 : 1};
    return spec;
  }
  if (args.size() != expected_ints(spec.family)) {
    throw GraphError("family \"" + std::string(name) + "\" expects " + std::to_string(expected_ints(spec.family)) +
                     " integer argument(s)");
  }
  for (auto a : args) spec.ints.push_back(parse_int(a, text));
  return spec;
}

Graph generate(const FamilySpec& spec) {
  constexpr long long kMaxOrder = 100'000;
  require(spec.ints.size() == expected_ints(spec.family), spec, "wrong number of parameters");
  for (long long v : spec.ints) require(v <= kMaxOrder, spec, "parameter too large");
  auto arg = [&](std::size_t i) { return static_cast<int>(spec.ints[i]); };

  switch (spec.family) {
    case Family::cycle:
      require(arg(0) >= 3, spec, "cycle needs n >= 3");
      return make_cycle(arg(0));
    case Family::path:
      require(arg(0) >= 1, spec, "path needs n >= 1");
      return make_path(arg(0));
    case Family::complete:
      require(arg(0) >= 1, spec, "complete graph needs n >= 1");
      return make_complete(arg(0));
    case Family::complete_bipartite:
      require(arg(0) >= arg(1) && arg(1) >= 1, spec, "complete_bipartite needs m >= n >= 1");
      return join(Graph::null_graph(arg(0)), Graph::null_graph(arg(1)));
    case Family::star:
      require(arg(0) >= 1, spec, "star needs k >= 1");
      return join(Graph::null_graph(1), Graph::null_graph(arg(0)));
    case Family::wheel:
      require(arg(0) >= 3, spec, "wheel needs k >= 3");
      return join(Graph::null_graph(1), make_cycle(arg(0)));
    case Family::grid:
      require(arg(0) >= 1 && arg(1) >= 1, spec, "grid needs r, c >= 1");
      return cartesian_product(make_path(arg(0)), make_path(arg(1)));
    case Family::prism:
      require(arg(0) >= 3, spec, "prism needs k >= 3");
      return cartesian_product(make_cycle(arg(0)), make_complete(2));
    case Family::petersen:
      return make_petersen();
    case Family::random_gnp:
      require(arg(0) >= 1, spec, "random_gnp needs n >= 1");
      require(spec.probability >= 0.0 && spec.probability <= 1.0, spec, "random_gnp needs 0 <= p <= 1");
      return make_gnp(arg(0), spec.probability, spec.seed);
    case Family::random_ktree:
      require(arg(0) >= 1 && arg(1) >= arg(0) + 1, spec, "random_ktree needs k >= 1 and n >= k + 1");
      return make_ktree(arg(0), arg(1), spec.seed);
    case Family::matching_pair: {
      const int n = arg(0);
      require(n >= 4 && n % 2 == 0, spec, "matching_pair needs an even n >= 4");
      require(arg(1) == 0 || arg(1) == 1, spec, "matching_pair side must be 0 (a) or 1 (b)");
      std::vector<Edge> edges;
      for (int i = arg(1); i < n; i += 2) edges.push_back(make_edge(i, (i + 1) % n));
      return Graph::from_edge_list(n, edges);
    }
    case Family::null_graph:
      require(arg(0) >= 1, spec, "null graph needs n >= 1");
      return Graph::null_graph(arg(0));
  }
  throw GraphError("unhandled family");
}

}  // namespace incol
