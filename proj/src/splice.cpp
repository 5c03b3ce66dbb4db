#include "spliceidx/splice.hpp"

#include <algorithm>
#include <sstream>

namespace spliceidx {

namespace {

void check_glue(const Graph& g, Vertex u, const char* which) {
  if (u >= g.vertex_count()) {
    std::ostringstream os;
    os << which << " = " << u << " is not a vertex of a graph with "
       << g.vertex_count() << " vertices";
    throw GraphError(GraphErrc::vertex_out_of_range, os.str());
  }
}

}  // namespace

SplicedGraph splice(const SpliceSpec& spec) {
  check_glue(spec.g1, spec.u1, "u1");
  check_glue(spec.g2, spec.u2, "u2");

  const std::size_t n1 = spec.g1.vertex_count();
  const std::size_t n2 = spec.g2.vertex_count();

  VertexMap map;
  map.glue = spec.u1;
  map.map1.resize(n1);
  for (Vertex v = 0; v < n1; ++v) map.map1[v] = v;
  map.map2.resize(n2);
  Vertex next = static_cast<Vertex>(n1);
  for (Vertex v = 0; v < n2; ++v) {
    map.map2[v] = (v == spec.u2) ? map.glue : next++;
  }

  std::vector<Edge> edges;
  edges.reserve(spec.g1.edge_count() + spec.g2.edge_count());
  for (const Edge& e : spec.g1.edges()) edges.push_back(e);
  for (const Edge& e : spec.g2.edges()) {
    edges.push_back({map.map2[e.u], map.map2[e.v]});
  }
  return {build_graph(n1 + n2 - 1, edges), std::move(map)};
}

ComponentParams splice_params(const Graph& g, Vertex root,
                              WorkCounters* counters) {
  check_glue(g, root, "root");

  const auto d = all_pairs_distances(g, counters);
  const auto cuts = all_edge_cut_counts(g, d, counters);

  ComponentParams p;
  p.vertex_count = g.vertex_count();
  p.edge_count = g.edge_count();
  p.root = root;
  const auto to_root = d.row(root);
  p.root_distance.assign(to_root.begin(), to_root.end());
  const auto ecc = eccentricity_profile(g, d);
  p.eccentricity = ecc.eccentricity;
  p.root_eccentricity = ecc.eccentricity[root];
  p.degree.resize(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) p.degree[v] = g.degree(v);

  p.edges.reserve(cuts.size());
  for (const EdgeCutCounts& c : cuts) {
    ComponentEdge ce;
    ce.cut = c;
    const Distance du = to_root[c.edge.u];
    const Distance dv = to_root[c.edge.v];
    if (du == dv) {
      ce.cls = EdgeClass::level;
    } else {
      ce.cls = EdgeClass::transfer;
      ++p.transfer_edges;
      if (du > dv) {
        ce.near = c.edge.v;
        ce.far_vertices = c.n_u;
        ce.far_edges = c.m_u;
      } else {
        ce.near = c.edge.u;
        ce.far_vertices = c.n_v;
        ce.far_edges = c.m_v;
      }
      p.sum_far_vertices =
          checked_add(p.sum_far_vertices, ce.far_vertices, "far-side sum");
      p.sum_far_edges = checked_add(p.sum_far_edges, ce.far_edges,
                                    "far-side edge sum");
    }
    p.edges.push_back(ce);
  }
  p.indices = evaluate_indices(g, d, cuts);
  return p;
}

std::string_view variant_name(Variant v) noexcept {
  return v == Variant::printed ? "printed" : "corrected";
}

std::vector<EdgeCutCounts> transfer_counts(const ComponentParams& half,
                                           std::size_t other_vertices,
                                           std::size_t other_edges,
                                           Variant variant) {
  const std::uint64_t vertex_gain =
      variant == Variant::printed ? other_vertices : other_vertices - 1;
  std::vector<EdgeCutCounts> out;
  out.reserve(half.edges.size());
  for (const ComponentEdge& ce : half.edges) {
    EdgeCutCounts c = ce.cut;
    if (ce.cls == EdgeClass::transfer) {
      auto& n_near = (ce.near == c.edge.u) ? c.n_u : c.n_v;
      auto& m_near = (ce.near == c.edge.u) ? c.m_u : c.m_v;
      n_near += vertex_gain;
      m_near += other_edges;
    } else {
      // Every vertex and edge of the other component is equidistant from
      // both ends of a level edge.
      c.eq_vertices += other_vertices - 1;
      c.eq_edges += other_edges;
    }
    out.push_back(c);
  }
  return out;
}

SpliceEccentricity splice_eccentricity(const ComponentParams& half1,
                                       const ComponentParams& half2) {
  auto transfer = [](const ComponentParams& self, const ComponentParams& other) {
    std::vector<Distance> eps(self.vertex_count);
    for (std::size_t x = 0; x < self.vertex_count; ++x) {
      eps[x] = std::max(self.root_distance[x] + other.root_eccentricity,
                        self.eccentricity[x]);
    }
    return eps;
  };
  return {transfer(half1, half2), transfer(half2, half1)};
}

}  // namespace spliceidx
