#include "spliceidx/indices.hpp"

#include <algorithm>
#include <sstream>

namespace spliceidx {

namespace {

EdgeCutCounts count_cut(const Graph& g, const DistanceMatrix& d, Edge e) {
  EdgeCutCounts c;
  c.edge = e;
  const auto du = d.row(e.u);
  const auto dv = d.row(e.v);
  for (std::size_t x = 0; x < g.vertex_count(); ++x) {
    if (du[x] < dv[x]) {
      ++c.n_u;
    } else if (dv[x] < du[x]) {
      ++c.n_v;
    } else {
      ++c.eq_vertices;
    }
  }
  for (const Edge& f : g.edges()) {
    const Distance fu = std::min(du[f.u], du[f.v]);
    const Distance fv = std::min(dv[f.u], dv[f.v]);
    if (fu < fv) {
      ++c.m_u;
    } else if (fv < fu) {
      ++c.m_v;
    } else {
      ++c.eq_edges;
    }
  }
  return c;
}

}  // namespace

EdgeCutCounts edge_cut_counts(const Graph& g, const DistanceMatrix& d,
                              Edge e) {
  if (!g.has_edge(e.u, e.v)) {
    std::ostringstream os;
    os << "{" << e.u << "," << e.v << "} is not an edge";
    throw GraphError(GraphErrc::not_an_edge, os.str());
  }
  return count_cut(g, d, e);
}

std::vector<EdgeCutCounts> all_edge_cut_counts(const Graph& g,
                                               const DistanceMatrix& d,
                                               WorkCounters* counters) {
  if (counters) ++counters->classification_passes;
  std::vector<EdgeCutCounts> out;
  out.reserve(g.edge_count());
  for (const Edge& e : g.edges()) out.push_back(count_cut(g, d, e));
  return out;
}

IndexValue get(const IndexValues& v, IndexKind k) noexcept {
  switch (k) {
    case IndexKind::szeged: return v.szeged;
    case IndexKind::edge_szeged: return v.edge_szeged;
    case IndexKind::pi_edge: return v.pi_edge;
    case IndexKind::pi_vertex: return v.pi_vertex;
    case IndexKind::eccentric_connectivity: return v.eccentric_connectivity;
  }
  return 0;
}

std::string_view index_name(IndexKind k) noexcept {
  switch (k) {
    case IndexKind::szeged: return "szeged";
    case IndexKind::edge_szeged: return "edge_szeged";
    case IndexKind::pi_edge: return "pi_edge";
    case IndexKind::pi_vertex: return "pi_vertex";
    case IndexKind::eccentric_connectivity: return "eccentric_connectivity";
  }
  return "?";
}

std::string_view method_name(Method m) noexcept {
  switch (m) {
    case Method::direct: return "direct";
    case Method::formula_printed: return "formula-printed";
    case Method::formula_corrected: return "formula-corrected";
  }
  return "?";
}

IndexValues evaluate_indices(const Graph& g, const DistanceMatrix& d,
                             std::span<const EdgeCutCounts> cuts) {
  IndexValues v;
  for (const EdgeCutCounts& c : cuts) {
    v.szeged = checked_add(v.szeged, checked_mul(c.n_u, c.n_v, "Szeged"),
                           "Szeged");
    v.edge_szeged = checked_add(
        v.edge_szeged, checked_mul(c.m_u, c.m_v, "edge-Szeged"), "edge-Szeged");
    v.pi_edge = checked_add(v.pi_edge, checked_add(c.m_u, c.m_v, "PI"), "PI");
    v.pi_vertex =
        checked_add(v.pi_vertex, checked_add(c.n_u, c.n_v, "vertex-PI"),
                    "vertex-PI");
  }
  const auto ecc = eccentricity_profile(g, d);
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    v.eccentric_connectivity = checked_add(
        v.eccentric_connectivity,
        checked_mul(g.degree(x), ecc.eccentricity[x], "eccentric connectivity"),
        "eccentric connectivity");
  }
  return v;
}

IndexValues compute_indices(const Graph& g, WorkCounters* counters) {
  const auto d = all_pairs_distances(g, counters);
  const auto cuts = all_edge_cut_counts(g, d, counters);
  return evaluate_indices(g, d, cuts);
}

IndexReport direct_report(const Graph& g) {
  IndexReport r;
  r.method = Method::direct;
  const auto start = std::chrono::steady_clock::now();
  r.values = compute_indices(g, &r.counters);
  r.wall_time = std::chrono::steady_clock::now() - start;
  return r;
}

IndexValue szeged(const Graph& g) { return compute_indices(g).szeged; }
IndexValue edge_szeged(const Graph& g) { return compute_indices(g).edge_szeged; }
IndexValue pi_edge(const Graph& g) { return compute_indices(g).pi_edge; }
IndexValue pi_vertex(const Graph& g) { return compute_indices(g).pi_vertex; }

IndexValue eccentric_connectivity(const Graph& g) {
  const auto d = all_pairs_distances(g);
  const auto ecc = eccentricity_profile(g, d);
  IndexValue total = 0;
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    total = checked_add(total, checked_mul(g.degree(x), ecc.eccentricity[x]),
                        "eccentric connectivity");
  }
  return total;
}

}  // namespace spliceidx
