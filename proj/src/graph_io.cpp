#include "incol/graph_io.hpp"

#include <charconv>
#include <sstream>
#include <string>
#include <vector>

#include "incol/errors.hpp"
#include "incol/incidence.hpp"

namespace incol {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

std::string_view strip_newline(std::string_view s) {
  if (!s.empty() && s.back() == '\n') s.remove_suffix(1);
  if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
  return s;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  text = strip_newline(text);
  std::size_t base = 0;
  if (text.starts_with(kGraph6Header)) base = kGraph6Header.size();
  std::string_view body = text.substr(base);
  if (body.empty()) throw ParseError("graph6: missing length byte", base);

  for (std::size_t i = 0; i < body.size(); ++i) {
    auto ch = static_cast<unsigned char>(body[i]);
    if (ch < 63 || ch > 126) throw ParseError("graph6: illegal character", base + i);
  }
  const int n = static_cast<unsigned char>(body[0]) - 63;
  if (n > kGraph6MaxOrder) {
    throw ParseError("graph6: multi-byte length (n > 62) is not supported", base);
  }

  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  const std::size_t expected = (bits + 5) / 6;
  if (body.size() - 1 != expected) {
    throw ParseError("graph6: expected " + std::to_string(expected) + " data bytes, found " +
                         std::to_string(body.size() - 1),
                     base + std::min(body.size(), expected + 1));
  }

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = static_cast<unsigned char>(body[1 + k / 6]) - 63;
      if (byte & (1 << (5 - static_cast<int>(k % 6)))) edges.push_back({i, j});
    }
  }
  if (bits % 6 != 0) {
    const int last = static_cast<unsigned char>(body.back()) - 63;
    const int pad = static_cast<int>(6 - bits % 6);
    if (last & ((1 << pad) - 1)) throw ParseError("graph6: nonzero padding bits", base + body.size() - 1);
  }
  return Graph::from_edge_list(n, edges);
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder) throw GraphError("graph6 encoding supports at most 62 vertices");
  std::string out(1, static_cast<char>(n + 63));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::vector<long long> numbers;
  std::vector<std::size_t> offsets;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    std::size_t pos = 0;
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
    if (pos < line.size() && line[pos] != '#') {
      while (pos < line.size()) {
        if (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r') {
          ++pos;
          continue;
        }
        long long value = 0;
        auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), value);
        if (ec != std::errc{} || ptr == line.data() + pos) {
          throw ParseError("edge list: expected an integer", line_start + pos);
        }
        numbers.push_back(value);
        offsets.push_back(line_start + pos);
        pos = static_cast<std::size_t>(ptr - line.data());
      }
    }
    line_start = line_end + 1;
  }
  if (numbers.size() < 2) throw ParseError("edge list: missing header \"n m\"", text.size());
  const long long n = numbers[0];
  const long long m = numbers[1];
  if (n < 0 || n > 1'000'000) throw ParseError("edge list: vertex count out of range", offsets[0]);
  if (m < 0 || static_cast<std::size_t>(m) * 2 + 2 != numbers.size()) {
    throw ParseError("edge list: header announces " + std::to_string(m) + " edges but " +
                         std::to_string(numbers.size() - 2) + " endpoints follow",
                     offsets[1]);
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (std::size_t i = 2; i < numbers.size(); i += 2) {
    if (numbers[i] < 0 || numbers[i] >= n || numbers[i + 1] < 0 || numbers[i + 1] >= n) {
      throw ParseError("edge list: vertex out of range", offsets[i]);
    }
    edges.push_back({static_cast<Vertex>(numbers[i]), static_cast<Vertex>(numbers[i + 1])});
  }
  return Graph::from_edge_list(static_cast<int>(n), edges);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph parse_graph_auto(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' || text[i] == '\r')) ++i;
  if (i < text.size() && (text[i] == '#' || (text[i] >= '0' && text[i] <= '9'))) return parse_edge_list(text);
  std::string_view rest = text.substr(i);
  while (!rest.empty() && (rest.back() == ' ' || rest.back() == '\n' || rest.back() == '\r' || rest.back() == '\t')) {
    rest.remove_suffix(1);
  }
  return parse_graph6(rest);
}

std::string to_dot(const Graph& g, const IncidenceColoring* coloring) {
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
  for (const Edge& e : g.edges()) {
    out << "  " << e.u << " -- " << e.v;
    if (coloring != nullptr) {
      out << " [taillabel=\"" << coloring->color_of({e.u, e.v}) << "\", headlabel=\""
          << coloring->color_of({e.v, e.u}) << "\"]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace incol
