#include <algorithm>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "spliceidx/splice.hpp"
#include "spliceidx/verify.hpp"

using namespace spliceidx;

namespace {

// Maps each component edge to its image in the splice and compares the
// transferred counts with a direct cut count there.
void check_transfer(const SpliceSpec& spec) {
  const SplicedGraph s = splice(spec);
  const auto ds = all_pairs_distances(s.graph);
  const auto h1 = splice_params(spec.g1, spec.u1);
  const auto h2 = splice_params(spec.g2, spec.u2);
  auto check_half = [&](const ComponentParams& half, const std::vector<Vertex>& map,
                        const Graph& other) {
    const auto moved = transfer_counts(half, other.vertex_count(), other.edge_count(),
                                       Variant::corrected);
    for (const EdgeCutCounts& c : moved) {
      auto direct = edge_cut_counts(s.graph, ds, {map[c.edge.u], map[c.edge.v]});
      direct.edge = c.edge;
      REQUIRE(direct == c);
    }
  };
  check_half(h1, s.map.map1, spec.g2);
  check_half(h2, s.map.map2, spec.g1);
}

void check_structure(const SpliceSpec& spec) {
  const SplicedGraph s = splice(spec);
  const Graph& g = s.graph;
  const auto& map = s.map;
  const std::size_t n1 = spec.g1.vertex_count(), n2 = spec.g2.vertex_count();
  REQUIRE(g.vertex_count() == n1 + n2 - 1);
  REQUIRE(g.edge_count() == spec.g1.edge_count() + spec.g2.edge_count());
  REQUIRE(map.glue == spec.u1);
  REQUIRE(map.map2[spec.u2] == map.glue);
  REQUIRE(g.degree(map.glue) == spec.g1.degree(spec.u1) + spec.g2.degree(spec.u2));

  std::vector<int> hits(g.vertex_count(), 0);
  for (Vertex v = 0; v < n1; ++v) ++hits[map.map1[v]];
  for (Vertex v = 0; v < n2; ++v) ++hits[map.map2[v]];
  for (Vertex v = 0; v < g.vertex_count(); ++v) REQUIRE(hits[v] == (v == map.glue ? 2 : 1));

  const auto d = all_pairs_distances(g);
  const auto d1 = all_pairs_distances(spec.g1);
  const auto d2 = all_pairs_distances(spec.g2);
  for (Vertex a = 0; a < n1; ++a) {
    if (a != spec.u1) REQUIRE(g.degree(map.map1[a]) == spec.g1.degree(a));
    for (Vertex b = 0; b < n1; ++b) REQUIRE(d(map.map1[a], map.map1[b]) == d1(a, b));
    for (Vertex b = 0; b < n2; ++b) {
      if (b == spec.u2) continue;
      REQUIRE(d(map.map1[a], map.map2[b]) == d1(a, spec.u1) + d2(spec.u2, b));
    }
  }
  for (Vertex a = 0; a < n2; ++a) {
    if (a != spec.u2) REQUIRE(g.degree(map.map2[a]) == spec.g2.degree(a));
    for (Vertex b = 0; b < n2; ++b) REQUIRE(d(map.map2[a], map.map2[b]) == d2(a, b));
  }
}

}  // namespace

TEST_CASE("splice construction") {
  const SplicedGraph p3 = splice({fixtures::k2(), fixtures::k2(), 1, 0});
  CHECK(p3.graph == fixtures::p3());
  CHECK(p3.map.glue == 1);
  CHECK(p3.map.map2 == std::vector<Vertex>{1, 2});

  const Graph c4 = fixtures::c4();
  for (Vertex u = 0; u < 4; ++u) {
    const SplicedGraph s = splice({c4, fixtures::k1(), u, 0});
    CHECK(all_pairs_distances(s.graph) == all_pairs_distances(c4));
  }

  const SplicedGraph paw = splice({fixtures::c3(), fixtures::k2(), 0, 0});
  CHECK(paw.graph.vertex_count() == 4);
  CHECK(paw.graph.edge_count() == 4);
  CHECK(paw.graph == fixtures::paw());

  // G2 ids other than u2 are shifted in increasing order.
  const SplicedGraph q = splice({fixtures::k2(), fixtures::p3(), 0, 1});
  CHECK(q.map.map2 == std::vector<Vertex>{2, 0, 3});

  CHECK_THROWS_AS(splice({fixtures::k2(), fixtures::k2(), 2, 0}), GraphError);
  CHECK_THROWS_AS(splice({fixtures::k2(), fixtures::k2(), 0, 5}), GraphError);
}

TEST_CASE("splice_params") {
  auto h = splice_params(fixtures::k2(), 1);
  CHECK(h.transfer_edges == 1);
  CHECK(h.edges[0].cls == EdgeClass::transfer);
  CHECK(h.edges[0].near == 1);
  CHECK(h.edges[0].far_vertices == 1);
  CHECK(h.edges[0].far_edges == 0);

  h = splice_params(fixtures::c3(), 0);
  CHECK(h.transfer_edges == 2);
  for (const auto& e : h.edges) {
    if (e.cut.edge == Edge{1, 2}) {
      CHECK(e.cls == EdgeClass::level);
      CHECK(e.far_vertices == 0);
      CHECK(e.far_edges == 0);
    } else {
      CHECK(e.cls == EdgeClass::transfer);
      CHECK(e.far_vertices == 1);
      CHECK(e.far_edges == 1);
    }
  }

  h = splice_params(fixtures::p3(), 2);
  CHECK(h.transfer_edges == 2);
  CHECK(h.edges[0].far_vertices == 1);  // {0,1}, far endpoint 0
  CHECK(h.edges[1].far_vertices == 2);  // {1,2}, far endpoint 1
  CHECK(h.sum_far_vertices == 3);
  CHECK(h.root_distance == std::vector<Distance>{2, 1, 0});
  CHECK(h.root_eccentricity == 2);

  CHECK_THROWS_AS(splice_params(fixtures::p3(), 3), GraphError);

  WorkCounters counters;
  splice_params(fixtures::c4(), 0, &counters);
  CHECK(counters.bfs_calls == 4);
}

TEST_CASE("splice_params invariants") {
  Rng rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = random_connected_graph(1 + rng.below(25), 0.3 * rng.unit(), rng);
    const Vertex root = static_cast<Vertex>(rng.below(g.vertex_count()));
    const auto h = splice_params(g, root);
    std::uint64_t level = 0;
    for (const auto& e : h.edges) {
      const Distance du = h.root_distance[e.cut.edge.u];
      const Distance dv = h.root_distance[e.cut.edge.v];
      REQUIRE((e.cls == EdgeClass::level) == (du == dv));
      if (e.cls == EdgeClass::level) {
        ++level;
        REQUIRE(e.far_vertices == 0);
        REQUIRE(e.far_edges == 0);
      } else {
        const bool u_far = du > dv;
        REQUIRE(e.far_vertices == (u_far ? e.cut.n_u : e.cut.n_v));
        REQUIRE(e.far_edges == (u_far ? e.cut.m_u : e.cut.m_v));
        REQUIRE(e.near == (u_far ? e.cut.edge.v : e.cut.edge.u));
      }
    }
    REQUIRE(h.transfer_edges == g.edge_count() - level);
  }
}

TEST_CASE("transfer_counts on S(K2,K2;1,0)") {
  const auto h1 = splice_params(fixtures::k2(), 1);
  const auto corrected = transfer_counts(h1, 2, 1, Variant::corrected);
  const auto printed = transfer_counts(h1, 2, 1, Variant::printed);
  // Glue-side endpoint is vertex 1.
  CHECK(corrected[0].n_v == 2);
  CHECK(printed[0].n_v == 3);
  CHECK(corrected[0].m_v == 1);
  CHECK(printed[0].m_v == 1);

  const Graph p3 = fixtures::p3();
  const auto direct = edge_cut_counts(p3, all_pairs_distances(p3), {0, 1});
  CHECK(direct.n_v == corrected[0].n_v);
  CHECK(direct.n_v != printed[0].n_v);

  // Level edges are untouched by either variant.
  const auto hc3 = splice_params(fixtures::c3(), 0);
  for (Variant v : {Variant::printed, Variant::corrected}) {
    const auto moved = transfer_counts(hc3, 5, 7, v);
    CHECK(moved[2].edge == Edge{1, 2});
    CHECK(moved[2].n_u == hc3.edges[2].cut.n_u);
    CHECK(moved[2].n_v == hc3.edges[2].cut.n_v);
    CHECK(moved[2].m_u == hc3.edges[2].cut.m_u);
    CHECK(moved[2].m_v == hc3.edges[2].cut.m_v);
  }
}

TEST_CASE("corrected transfer reproduces direct cut counts, all splices up to 6+6") {
  const auto family = enumerate_small_graphs(6);
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i; j < family.size(); ++j) {
      for (Vertex u1 = 0; u1 < family[i].vertex_count(); ++u1) {
        for (Vertex u2 = 0; u2 < family[j].vertex_count(); ++u2) {
          check_transfer({family[i], family[j], u1, u2});
        }
      }
    }
  }
}

TEST_CASE("corrected transfer on random larger splices") {
  Rng rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    SpliceSpec spec{random_connected_graph(7 + rng.below(24), 0.3 * rng.unit(), rng),
                    random_connected_graph(7 + rng.below(24), 0.3 * rng.unit(), rng), 0, 0};
    spec.u1 = static_cast<Vertex>(rng.below(spec.g1.vertex_count()));
    spec.u2 = static_cast<Vertex>(rng.below(spec.g2.vertex_count()));
    check_transfer(spec);
  }
}

TEST_CASE("splice_eccentricity") {
  const auto k2a = splice_params(fixtures::k2(), 1);
  const auto k2b = splice_params(fixtures::k2(), 0);
  auto eps = splice_eccentricity(k2a, k2b);
  CHECK(eps.first[1] == 1);
  CHECK(eps.second[0] == 1);

  // S(P3, K2; leaf, 0) is P4.
  const auto p3 = splice_params(fixtures::p3(), 2);
  eps = splice_eccentricity(p3, k2b);
  CHECK(eps.first[0] == 3);
  const Graph p4 = fixtures::p4();
  const auto direct = eccentricity_profile(p4, all_pairs_distances(p4)).eccentricity;
  const SplicedGraph s = splice({fixtures::p3(), fixtures::k2(), 2, 0});
  for (Vertex v = 0; v < 3; ++v) CHECK(eps.first[v] == direct[s.map.map1[v]]);
  CHECK(eps.second[1] == direct[s.map.map2[1]]);

  const Graph c4 = fixtures::c4();
  const auto c4h = splice_params(c4, 2);
  eps = splice_eccentricity(c4h, splice_params(fixtures::k1(), 0));
  CHECK(eps.first == c4h.eccentricity);
}

TEST_CASE("eccentricity transfer agrees with direct eccentricities") {
  Rng rng(31);
  const auto family = enumerate_small_graphs(5);
  auto check = [](const SpliceSpec& spec) {
    const auto eps = splice_eccentricity(splice_params(spec.g1, spec.u1),
                                         splice_params(spec.g2, spec.u2));
    const SplicedGraph s = splice(spec);
    const auto direct = eccentricity_profile(s.graph, all_pairs_distances(s.graph)).eccentricity;
    for (Vertex v = 0; v < spec.g1.vertex_count(); ++v) REQUIRE(eps.first[v] == direct[s.map.map1[v]]);
    for (Vertex v = 0; v < spec.g2.vertex_count(); ++v) REQUIRE(eps.second[v] == direct[s.map.map2[v]]);
    REQUIRE(eps.first[spec.u1] == eps.second[spec.u2]);
  };
  for (const Graph& a : family) {
    for (const Graph& b : family) {
      for (Vertex u1 = 0; u1 < a.vertex_count(); ++u1) {
        for (Vertex u2 = 0; u2 < b.vertex_count(); ++u2) check({a, b, u1, u2});
      }
    }
  }
  for (int trial = 0; trial < 50; ++trial) {
    SpliceSpec spec{random_connected_graph(2 + rng.below(40), 0.2, rng),
                    random_connected_graph(2 + rng.below(40), 0.2, rng), 0, 0};
    spec.u1 = static_cast<Vertex>(rng.below(spec.g1.vertex_count()));
    spec.u2 = static_cast<Vertex>(rng.below(spec.g2.vertex_count()));
    check(spec);
  }
}

TEST_CASE("structural laws of the splice") {
  const auto family = enumerate_small_graphs(5);
  for (const Graph& a : family) {
    for (const Graph& b : family) {
      for (Vertex u1 = 0; u1 < a.vertex_count(); ++u1) {
        for (Vertex u2 = 0; u2 < b.vertex_count(); ++u2) check_structure({a, b, u1, u2});
      }
    }
  }
  Rng rng(37);
  for (int trial = 0; trial < 50; ++trial) {
    SpliceSpec spec{random_connected_graph(2 + rng.below(40), 0.2, rng),
                    random_connected_graph(2 + rng.below(40), 0.2, rng), 0, 0};
    spec.u1 = static_cast<Vertex>(rng.below(spec.g1.vertex_count()));
    spec.u2 = static_cast<Vertex>(rng.below(spec.g2.vertex_count()));
    check_structure(spec);
    CHECK(compute_indices(splice(spec).graph) ==
          compute_indices(splice({spec.g2, spec.g1, spec.u2, spec.u1}).graph));
  }
}
