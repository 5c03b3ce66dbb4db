#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace spliceidx {

using Vertex = std::uint32_t;
using Distance = std::uint32_t;

/// Undirected edge. Graph storage keeps u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class GraphErrc {
  empty,
  vertex_out_of_range,
  self_loop,
  duplicate_edge,
  disconnected,
  not_an_edge,
};

class GraphError : public std::runtime_error {
 public:
  GraphError(GraphErrc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  GraphErrc code() const noexcept { return code_; }

 private:
  GraphErrc code_;
};

/// Work counters shared by every routine that runs a BFS or classifies
/// edges. Passed by pointer; null means "don't count".
struct WorkCounters {
  std::uint64_t bfs_calls = 0;
  std::uint64_t classification_passes = 0;

  WorkCounters& operator+=(const WorkCounters& o) {
    bfs_calls += o.bfs_calls;
    classification_passes += o.classification_passes;
    return *this;
  }
};

/// Immutable simple connected undirected graph on vertices 0..n-1.
///
/// Edges are normalized to (min, max) and kept sorted, so two graphs built
/// from the same edge set in any order compare equal. Adjacency is stored
/// in CSR form with each neighbor list sorted.
class Graph {
 public:
  /// Single vertex, no edges.
  Graph();

  std::size_t vertex_count() const noexcept { return offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const;
  bool has_edge(Vertex a, Vertex b) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.offsets_.size() == b.offsets_.size() && a.edges_ == b.edges_;
  }

 private:
  friend Graph build_graph(std::size_t n, std::span<const Edge> edges);

  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
};

/// Validates and normalizes. Throws GraphError on n = 0, out-of-range ids,
/// self-loops, duplicate edges, or a disconnected result.
Graph build_graph(std::size_t n, std::span<const Edge> edges);

inline Graph build_graph(std::size_t n, std::initializer_list<Edge> edges) {
  return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

/// Hop distances from `source`. Throws GraphError if source is out of range.
std::vector<Distance> bfs_distances(const Graph& g, Vertex source,
                                    WorkCounters* counters = nullptr);

/// Dense n x n hop-count matrix, row-major.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), data_(n * n, 0) {}

  std::size_t size() const noexcept { return n_; }

  Distance operator()(Vertex x, Vertex y) const noexcept {
    return data_[static_cast<std::size_t>(x) * n_ + y];
  }
  Distance& operator()(Vertex x, Vertex y) noexcept {
    return data_[static_cast<std::size_t>(x) * n_ + y];
  }

  std::span<const Distance> row(Vertex x) const noexcept {
    return {data_.data() + static_cast<std::size_t>(x) * n_, n_};
  }

  friend bool operator==(const DistanceMatrix&,
                         const DistanceMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Distance> data_;
};

/// One BFS per vertex. Rows are filled independently, so the result does
/// not depend on evaluation order.
DistanceMatrix all_pairs_distances(const Graph& g,
                                   WorkCounters* counters = nullptr);

struct EccentricityProfile {
  std::vector<Distance> eccentricity;
  Distance radius = 0;
  Distance diameter = 0;
  std::vector<Vertex> center;
};

EccentricityProfile eccentricity_profile(const Graph& g,
                                         const DistanceMatrix& d);

/// d(f, u) = min(d(x, u), d(y, u)) for f = xy.
inline Distance edge_vertex_distance(const DistanceMatrix& d, Edge f,
                                     Vertex u) noexcept {
  const Distance a = d(f.u, u);
  const Distance b = d(f.v, u);
  return a < b ? a : b;
}

}  // namespace spliceidx
