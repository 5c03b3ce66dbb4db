#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "spliceidx/graph.hpp"

namespace spliceidx {

/// Malformed input text. Graph-level problems (self-loops, disconnection,
/// ids out of range) surface as GraphError instead.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what
                                : what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

enum class GraphFormat { edge_list, graph6 };

/// Edge-list text: header "n m", then m lines "u v". Lines starting with
/// '#' and blank lines are skipped. Ids are 0-based unless one_based is set,
/// in which case they are shifted down on ingestion.
Graph parse_edge_list(std::istream& in, bool one_based = false);
Graph parse_edge_list(std::string_view text, bool one_based = false);

/// Canonical edge-list text for g: header plus sorted, normalized edges.
std::string to_edge_list(const Graph& g);

/// First graph of a graph6 string (an optional ">>graph6<<" prefix is
/// accepted).
Graph parse_graph6(std::string_view text);

/// Throws ParseError if the file cannot be read.
Graph read_graph_file(const std::filesystem::path& path,
                      GraphFormat format = GraphFormat::edge_list,
                      bool one_based = false);

void write_edge_list_file(const std::filesystem::path& path, const Graph& g);

}  // namespace spliceidx
