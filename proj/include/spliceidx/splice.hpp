#pragma once

#include <cstdint>
#include <vector>

#include "spliceidx/graph.hpp"
#include "spliceidx/indices.hpp"

namespace spliceidx {

/// S(g1, g2; u1, u2): the union of g1 and g2 with u1 and u2 identified.
struct SpliceSpec {
  Graph g1;
  Graph g2;
  Vertex u1 = 0;
  Vertex u2 = 0;
};

/// Where each component vertex lands in the spliced graph.
///
/// G1 keeps its ids, so glue == u1. G2's vertices other than u2 follow at
/// |V1|, |V1|+1, ... in increasing original order.
struct VertexMap {
  std::vector<Vertex> map1;
  std::vector<Vertex> map2;
  Vertex glue = 0;
};

struct SplicedGraph {
  Graph graph;
  VertexMap map;
};

/// Throws GraphError(vertex_out_of_range) on bad glue ids.
SplicedGraph splice(const SpliceSpec& spec);

/// Which side of the cut the glue vertex falls on for a component edge.
enum class EdgeClass {
  transfer,  ///< endpoints at different distances from the root (T_i)
  level,     ///< endpoints equidistant from the root (S_i)
};

struct ComponentEdge {
  EdgeCutCounts cut;  ///< counts within the component
  EdgeClass cls = EdgeClass::level;
  /// Endpoint closer to the root; meaningful only for transfer edges.
  Vertex near = 0;
  /// Far-side vertex/edge counts; zero for level edges.
  std::uint64_t far_vertices = 0;
  std::uint64_t far_edges = 0;
};

/// Everything the closed forms need from one component rooted at its glue
/// vertex. Built from a single all-pairs sweep of the component.
struct ComponentParams {
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  Vertex root = 0;
  std::vector<ComponentEdge> edges;  ///< in the component's sorted edge order
  std::uint64_t transfer_edges = 0;  ///< t_i
  std::uint64_t sum_far_vertices = 0;
  std::uint64_t sum_far_edges = 0;
  std::vector<Distance> root_distance;
  std::vector<Distance> eccentricity;
  Distance root_eccentricity = 0;
  std::vector<std::size_t> degree;
  IndexValues indices;  ///< Sz, Sz_e, PI, PI_v, Ecc of the component
};

/// Throws GraphError(vertex_out_of_range) if root is not a vertex of g.
ComponentParams splice_params(const Graph& g, Vertex root,
                              WorkCounters* counters = nullptr);

/// How the closed forms count the glue vertex.
///
/// printed evaluates the formulas exactly as published, which count the
/// glue vertex in both |V1| and |V2|. corrected counts it once.
enum class Variant { printed, corrected };

std::string_view variant_name(Variant v) noexcept;

/// Cut counts of a component edge as seen inside the spliced graph, in the
/// component's labels. On transfer edges the near endpoint gains the other
/// component's vertices (|V_j| printed, |V_j| - 1 corrected) and its |E_j|
/// edges. Level edges are unchanged.
std::vector<EdgeCutCounts> transfer_counts(const ComponentParams& half,
                                           std::size_t other_vertices,
                                           std::size_t other_edges,
                                           Variant variant);

struct SpliceEccentricity {
  std::vector<Distance> first;   ///< indexed by G1 vertex
  std::vector<Distance> second;  ///< indexed by G2 vertex
};

/// eps_S(x) = max(d1(x, u1) + eps2(u2), eps1(x)) for x in G1, and the mirror
/// image for G2.
SpliceEccentricity splice_eccentricity(const ComponentParams& half1,
                                       const ComponentParams& half2);

}  // namespace spliceidx
