#include "spliceidx/graph.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace spliceidx {

namespace {

std::string edge_text(Edge e) {
  std::ostringstream os;
  os << "{" << e.u << "," << e.v << "}";
  return os.str();
}

void check_vertex(const Graph& g, Vertex v) {
  if (v >= g.vertex_count()) {
    std::ostringstream os;
    os << "vertex " << v << " out of range (n = " << g.vertex_count() << ")";
    throw GraphError(GraphErrc::vertex_out_of_range, os.str());
  }
}

}  // namespace

Graph::Graph() : offsets_{0, 0} {}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(*this, v);
  return {targets_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

std::size_t Graph::degree(Vertex v) const {
  check_vertex(*this, v);
  return offsets_[v + 1] - offsets_[v];
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a >= vertex_count() || b >= vertex_count()) return false;
  const auto nb = neighbors(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

Graph build_graph(std::size_t n, std::span<const Edge> edges) {
  if (n == 0) throw GraphError(GraphErrc::empty, "graph has no vertices");
  if (n > std::numeric_limits<Vertex>::max()) {
    throw GraphError(GraphErrc::vertex_out_of_range,
                     "vertex count exceeds 32-bit id range");
  }

  std::vector<Edge> normalized;
  normalized.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      std::ostringstream os;
      os << "edge " << edge_text(e) << " references a vertex outside 0.."
         << n - 1;
      throw GraphError(GraphErrc::vertex_out_of_range, os.str());
    }
    if (e.u == e.v) {
      throw GraphError(GraphErrc::self_loop,
                       "self-loop at vertex " + std::to_string(e.u));
    }
    normalized.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
  }
  std::sort(normalized.begin(), normalized.end());
  if (auto dup = std::adjacent_find(normalized.begin(), normalized.end());
      dup != normalized.end()) {
    throw GraphError(GraphErrc::duplicate_edge,
                     "duplicate edge " + edge_text(*dup));
  }

  Graph g;
  g.edges_ = std::move(normalized);
  g.offsets_.assign(n + 1, 0);
  for (const Edge& e : g.edges_) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];
  g.targets_.resize(g.offsets_[n]);
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // Sorted edge order fills each list with smaller neighbors first, then
  // larger ones, both ascending.
  for (const Edge& e : g.edges_) {
    g.targets_[cursor[e.u]++] = e.v;
    g.targets_[cursor[e.v]++] = e.u;
  }

  // Connectivity from vertex 0.
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : g.neighbors(x)) {
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  if (reached != n) {
    const auto missing = static_cast<std::size_t>(
        std::find(seen.begin(), seen.end(), 0) - seen.begin());
    std::ostringstream os;
    os << "graph is disconnected: vertex " << missing
       << " is unreachable from vertex 0";
    throw GraphError(GraphErrc::disconnected, os.str());
  }
  return g;
}

std::vector<Distance> bfs_distances(const Graph& g, Vertex source,
                                    WorkCounters* counters) {
  check_vertex(g, source);
  if (counters) ++counters->bfs_calls;

  constexpr Distance unseen = std::numeric_limits<Distance>::max();
  std::vector<Distance> dist(g.vertex_count(), unseen);
  std::vector<Vertex> queue;
  queue.reserve(g.vertex_count());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex x = queue[head];
    for (Vertex y : g.neighbors(x)) {
      if (dist[y] == unseen) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

DistanceMatrix all_pairs_distances(const Graph& g, WorkCounters* counters) {
  const std::size_t n = g.vertex_count();
  DistanceMatrix d(n);
  for (Vertex s = 0; s < n; ++s) {
    const auto row = bfs_distances(g, s, counters);
    for (Vertex t = 0; t < n; ++t) d(s, t) = row[t];
  }
  return d;
}

EccentricityProfile eccentricity_profile(const Graph& g,
                                         const DistanceMatrix& d) {
  const std::size_t n = g.vertex_count();
  EccentricityProfile p;
  p.eccentricity.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    const auto row = d.row(v);
    p.eccentricity[v] = *std::max_element(row.begin(), row.end());
  }
  const auto [lo, hi] =
      std::minmax_element(p.eccentricity.begin(), p.eccentricity.end());
  p.radius = *lo;
  p.diameter = *hi;
  for (Vertex v = 0; v < n; ++v) {
    if (p.eccentricity[v] == p.radius) p.center.push_back(v);
  }
  return p;
}

}  // namespace spliceidx
