#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "spliceidx/io.hpp"

using namespace spliceidx;

namespace {

const std::filesystem::path kData = std::filesystem::path(SPLICEIDX_TEST_DATA) / "data";

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("edge list parsing") {
  CHECK(parse_edge_list("3 2\n0 1\n1 2\n") == fixtures::p3());
  CHECK(parse_edge_list("# comment\n\n3 2\n  1 2 \r\n# more\n1 0\n") == fixtures::p3());
  CHECK(parse_edge_list("1 0\n") == fixtures::k1());
  CHECK(parse_edge_list("3 2\n1 2\n2 3\n", true) == fixtures::p3());
  CHECK(read_graph_file(kData / "paw.txt") == fixtures::paw());
  CHECK(read_graph_file(kData / "p3_one_based.txt", GraphFormat::edge_list, true) ==
        fixtures::p3());
}

TEST_CASE("edge list errors") {
  CHECK_THROWS_AS(parse_edge_list(""), ParseError);
  CHECK_THROWS_AS(parse_edge_list("# only a comment\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 1\n0 1\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n1 -2\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 2\n0 1 5\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n1 2\n", true), ParseError);
  CHECK_THROWS_AS(read_graph_file(kData / "does-not-exist.txt"), ParseError);

  try {
    parse_edge_list("3 2\n0 1\nx 2\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }

  // Well-formed text describing an invalid graph is a GraphError.
  CHECK_THROWS_AS(parse_edge_list("2 1\n0 0\n"), GraphError);
  CHECK_THROWS_AS(parse_edge_list("3 1\n0 5\n"), GraphError);
  CHECK_THROWS_AS(read_graph_file(kData / "disconnected.txt"), GraphError);
}

TEST_CASE("edge list round trip") {
  Rng rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = random_connected_graph(1 + rng.below(50), 0.2 * rng.unit(), rng);
    const std::string text = to_edge_list(g);
    CHECK(parse_edge_list(text) == g);
    CHECK(to_edge_list(parse_edge_list(text)) == text);
  }
  for (const char* name : {"p3.txt", "p4.txt", "c3.txt", "c4.txt"}) {
    CAPTURE(name);
    const std::string text = slurp(kData / name);
    CHECK(to_edge_list(parse_edge_list(text)) == text);
  }

  const auto tmp = std::filesystem::temp_directory_path() / "spliceidx_roundtrip.txt";
  write_edge_list_file(tmp, fixtures::paw());
  CHECK(read_graph_file(tmp) == fixtures::paw());
  std::filesystem::remove(tmp);
}

TEST_CASE("graph6 reader") {
  CHECK(parse_graph6("A_") == fixtures::k2());
  CHECK(parse_graph6("Bg") == fixtures::p3());
  CHECK(parse_graph6("Bw\n") == fixtures::c3());
  CHECK(parse_graph6(">>graph6<<Bw") == fixtures::c3());
  CHECK(parse_graph6("@") == fixtures::k1());
  CHECK(read_graph_file(kData / "paw.g6", GraphFormat::graph6) == fixtures::paw());

  // 70 vertices uses the four-byte order prefix.
  const Graph path = read_graph_file(kData / "path70.g6", GraphFormat::graph6);
  CHECK(path.vertex_count() == 70);
  CHECK(path.edge_count() == 69);
  for (Vertex v = 0; v + 1 < 70; ++v) CHECK(path.has_edge(v, v + 1));

  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_AS(parse_graph6("C"), ParseError);
  CHECK_THROWS_AS(parse_graph6("C{{"), ParseError);
  CHECK_THROWS_AS(parse_graph6("B "), ParseError);
  CHECK_THROWS_AS(parse_graph6("B?"), GraphError);  // three isolated vertices
}
