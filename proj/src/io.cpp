#include "spliceidx/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

namespace spliceidx {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t parse_uint(std::string_view tok, std::size_t line) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "expected a nonnegative integer, got '" +
                               std::string(tok) + "'");
  }
  return v;
}

}  // namespace

Graph parse_edge_list(std::istream& in, bool one_based) {
  std::string raw;
  std::size_t lineno = 0;
  bool have_header = false;
  std::uint64_t n = 0, m = 0;
  std::vector<Edge> edges;

  while (std::getline(in, raw)) {
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const auto tokens = split_ws(raw);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (tokens.size() != 2) {
      throw ParseError(lineno, "expected two integers, found " +
                                   std::to_string(tokens.size()) + " fields");
    }
    std::uint64_t a = parse_uint(tokens[0], lineno);
    std::uint64_t b = parse_uint(tokens[1], lineno);
    if (!have_header) {
      n = a;
      m = b;
      have_header = true;
      if (n > std::numeric_limits<Vertex>::max()) {
        throw ParseError(lineno, "vertex count too large");
      }
      edges.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(m, 1u << 20)));
      continue;
    }
    if (edges.size() == m) {
      throw ParseError(lineno, "more edge lines than the " + std::to_string(m) +
                                   " declared in the header");
    }
    if (one_based) {
      if (a == 0 || b == 0) {
        throw ParseError(lineno, "vertex id 0 in one-based input");
      }
      --a;
      --b;
    }
    if (a > std::numeric_limits<Vertex>::max() ||
        b > std::numeric_limits<Vertex>::max()) {
      throw ParseError(lineno, "vertex id too large");
    }
    edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
  }
  if (!have_header) throw ParseError(0, "missing 'n m' header line");
  if (edges.size() != m) {
    throw ParseError(lineno, "header declares " + std::to_string(m) +
                                 " edges but " + std::to_string(edges.size()) +
                                 " were found");
  }
  return build_graph(static_cast<std::size_t>(n), edges);
}

Graph parse_edge_list(std::string_view text, bool one_based) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in, one_based);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

Graph parse_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) text.remove_prefix(header.size());
  if (const auto eol = text.find_first_of("\r\n"); eol != std::string_view::npos) {
    text = text.substr(0, eol);
  }

  std::size_t pos = 0;
  auto take = [&]() -> std::uint32_t {
    if (pos >= text.size()) throw ParseError(1, "graph6 string is truncated");
    const auto c = static_cast<unsigned char>(text[pos++]);
    if (c < 63 || c > 126) {
      throw ParseError(1, "invalid graph6 character '" + std::string(1, static_cast<char>(c)) + "'");
    }
    return c - 63u;
  };

  std::uint64_t n = 0;
  if (text.empty()) throw ParseError(1, "empty graph6 string");
  if (static_cast<unsigned char>(text[0]) != 126) {
    n = take();
  } else {
    ++pos;
    int groups = 3;
    if (pos < text.size() && static_cast<unsigned char>(text[pos]) == 126) {
      ++pos;
      groups = 6;
    }
    for (int k = 0; k < groups; ++k) n = (n << 6) | take();
  }
  if (n > std::numeric_limits<Vertex>::max()) throw ParseError(1, "graph6 order too large");

  // Upper triangle, column by column: (0,1), (0,2), (1,2), (0,3), ...
  std::vector<Edge> edges;
  std::uint32_t bits = 0;
  int left = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      if (left == 0) {
        bits = take();
        left = 6;
      }
      --left;
      if (bits >> left & 1) edges.push_back({u, v});
    }
  }
  if (pos != text.size()) throw ParseError(1, "trailing characters after graph6 data");
  return build_graph(static_cast<std::size_t>(n), edges);
}

Graph read_graph_file(const std::filesystem::path& path, GraphFormat format,
                      bool one_based) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  if (format == GraphFormat::graph6) {
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line != "\r") return parse_graph6(line);
    }
    throw ParseError(0, path.string() + " contains no graph6 data");
  }
  return parse_edge_list(in, one_based);
}

void write_edge_list_file(const std::filesystem::path& path, const Graph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << to_edge_list(g);
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace spliceidx
