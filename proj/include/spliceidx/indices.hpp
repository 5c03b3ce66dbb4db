#pragma once

#include <chrono>
#include <cstdint>
#include <string_view>
#include <vector>

#include "spliceidx/checked.hpp"
#include "spliceidx/graph.hpp"

namespace spliceidx {

/// Cut counts of one edge e = uv.
///
/// n_u counts vertices strictly closer to u than to v, m_u counts edges f
/// with d(f, u) < d(f, v). The equidistant remainders close the accounting:
/// n_u + n_v + eq_vertices = n and m_u + m_v + eq_edges = m. The edge e
/// itself is always equidistant (distance 0 to both ends).
struct EdgeCutCounts {
  Edge edge;
  std::uint64_t n_u = 0;
  std::uint64_t n_v = 0;
  std::uint64_t m_u = 0;
  std::uint64_t m_v = 0;
  std::uint64_t eq_vertices = 0;
  std::uint64_t eq_edges = 0;

  friend bool operator==(const EdgeCutCounts&, const EdgeCutCounts&) = default;
};

/// Throws GraphError(not_an_edge) if e is not an edge of g. The orientation
/// of e is respected: n_u refers to e.u even when e.u > e.v.
EdgeCutCounts edge_cut_counts(const Graph& g, const DistanceMatrix& d, Edge e);

/// Cut counts for every edge, in the graph's sorted edge order.
std::vector<EdgeCutCounts> all_edge_cut_counts(const Graph& g,
                                               const DistanceMatrix& d,
                                               WorkCounters* counters = nullptr);

struct IndexValues {
  IndexValue szeged = 0;
  IndexValue edge_szeged = 0;
  IndexValue pi_edge = 0;
  IndexValue pi_vertex = 0;
  IndexValue eccentric_connectivity = 0;

  /// The edge-PI index is the one usually written without a subscript.
  IndexValue pi() const noexcept { return pi_edge; }

  friend bool operator==(const IndexValues&, const IndexValues&) = default;
};

enum class IndexKind { szeged, edge_szeged, pi_edge, pi_vertex, eccentric_connectivity };

inline constexpr IndexKind kAllIndices[] = {
    IndexKind::szeged, IndexKind::edge_szeged, IndexKind::pi_edge,
    IndexKind::pi_vertex, IndexKind::eccentric_connectivity};

IndexValue get(const IndexValues& v, IndexKind k) noexcept;
/// JSON key / human label, e.g. "edge_szeged".
std::string_view index_name(IndexKind k) noexcept;

enum class Method { direct, formula_printed, formula_corrected };

std::string_view method_name(Method m) noexcept;

struct IndexReport {
  IndexValues values;
  Method method = Method::direct;
  WorkCounters counters;
  std::chrono::nanoseconds wall_time{0};
};

IndexValue szeged(const Graph& g);
IndexValue edge_szeged(const Graph& g);
IndexValue pi_edge(const Graph& g);
inline IndexValue pi(const Graph& g) { return pi_edge(g); }
IndexValue pi_vertex(const Graph& g);
IndexValue eccentric_connectivity(const Graph& g);

/// The four edge-sum indices from precomputed cut counts, plus Ecc from the
/// distance matrix. Throws OverflowError rather than wrapping.
IndexValues evaluate_indices(const Graph& g, const DistanceMatrix& d,
                             std::span<const EdgeCutCounts> cuts);

/// All five indices of g from scratch (one all-pairs BFS sweep).
IndexValues compute_indices(const Graph& g, WorkCounters* counters = nullptr);

/// compute_indices wrapped in an IndexReport with timing.
IndexReport direct_report(const Graph& g);

}  // namespace spliceidx
