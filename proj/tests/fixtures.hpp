#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "oracle.hpp"
#include "spliceidx/graph.hpp"
#include "spliceidx/verify.hpp"

namespace fixtures {

using spliceidx::Edge;
using spliceidx::Graph;

inline Graph k1() { return spliceidx::build_graph(1, {}); }
inline Graph k2() { return spliceidx::build_graph(2, {{0, 1}}); }
inline Graph p3() { return spliceidx::build_graph(3, {{0, 1}, {1, 2}}); }
inline Graph p4() { return spliceidx::build_graph(4, {{0, 1}, {1, 2}, {2, 3}}); }
inline Graph c3() { return spliceidx::build_graph(3, {{0, 1}, {1, 2}, {0, 2}}); }
inline Graph c4() { return spliceidx::build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }
/// Triangle 0-1-2 with pendant vertex 3 on 0.
inline Graph paw() {
  return spliceidx::build_graph(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}});
}

inline oracle::EdgeList edge_list(const Graph& g) {
  oracle::EdgeList out;
  for (const Edge& e : g.edges()) out.emplace_back(static_cast<int>(e.u), static_cast<int>(e.v));
  return out;
}

inline oracle::Values naive(const Graph& g) {
  return oracle::naive_indices(static_cast<int>(g.vertex_count()), edge_list(g));
}

inline Graph relabel(const Graph& g, const std::vector<spliceidx::Vertex>& perm) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back({perm[e.u], perm[e.v]});
  return spliceidx::build_graph(g.vertex_count(), edges);
}

inline std::vector<spliceidx::Vertex> random_permutation(std::size_t n, spliceidx::Rng& rng) {
  std::vector<spliceidx::Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[rng.below(i)]);
  return p;
}

inline bool is_bipartite(const Graph& g) {
  std::vector<int> side(g.vertex_count(), -1);
  side[0] = 0;
  std::vector<spliceidx::Vertex> queue{0};
  for (std::size_t h = 0; h < queue.size(); ++h) {
    for (auto y : g.neighbors(queue[h])) {
      if (side[y] < 0) {
        side[y] = 1 - side[queue[h]];
        queue.push_back(y);
      } else if (side[y] == side[queue[h]]) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace fixtures
