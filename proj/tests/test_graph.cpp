#include "doctest.h"

#include <algorithm>
#include <sstream>

#include "ajoin/errors.hpp"
#include "ajoin/graph.hpp"

using namespace ajoin;

namespace {

std::vector<std::size_t> sorted_degrees(const Graph& g) {
  auto d = degrees(g);
  std::sort(d.begin(), d.end());
  return d;
}

long max_abs(const IntMatrix& m) {
  long d = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) d = std::max(d, std::abs(m(i, j)));
  return d;
}

}  // namespace

TEST_CASE("families have the expected order and size") {
  CHECK(path_graph(2).size() == 1);
  CHECK(cycle_graph(5).size() == 5);
  CHECK(complete_graph(4).size() == 6);
  CHECK(complete_bipartite_graph(2, 3).size() == 6);
  CHECK(petersen_graph().size() == 15);
  CHECK(*regularity(petersen_graph()) == 3);
  CHECK(empty_graph(3).size() == 0);
  CHECK_THROWS_AS(cycle_graph(2), InvalidParameter);
  CHECK(parse_family_descriptor("cbipartite:2,3") == complete_bipartite_graph(2, 3));
  CHECK_THROWS_AS(parse_family_descriptor("complete:x"), InvalidParameter);
}

TEST_CASE("graph constructor validates edges") {
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), InvalidInput);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), InvalidInput);
  const Graph g(3, {{2, 0}, {1, 0}});
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}});
}

TEST_CASE("complete bipartite detection") {
  CHECK(complete_bipartite_parts(complete_bipartite_graph(3, 2)) == std::pair<std::size_t, std::size_t>{2, 3});
  CHECK(complete_bipartite_parts(path_graph(3)) == std::pair<std::size_t, std::size_t>{1, 2});
  CHECK_FALSE(complete_bipartite_parts(path_graph(4)).has_value());
  CHECK_FALSE(complete_bipartite_parts(cycle_graph(5)).has_value());
}

TEST_CASE("incidence identities") {
  for (const Graph& g : {cycle_graph(5), complete_graph(4), petersen_graph(), path_graph(4),
                         complete_bipartite_graph(2, 3)}) {
    const IntMatrix r = incidence_matrix(g);
    for (std::size_t j = 0; j < r.cols(); ++j) {
      long column = 0;
      for (std::size_t i = 0; i < r.rows(); ++i) column += r(i, j);
      CHECK(column == 2);
    }
    CHECK(r.transpose() * r - adjacency_matrix(line_graph(g)) == IntMatrix::identity(g.size()) * 2L);
    if (auto t = regularity(g))
      CHECK(max_abs(r * r.transpose() - adjacency_matrix(g) - IntMatrix::identity(g.order()) * static_cast<long>(*t)) ==
            0);
  }
}

TEST_CASE("line graph of C5 is C5") {
  const Graph l = line_graph(cycle_graph(5));
  CHECK(l.order() == 5);
  CHECK(l.size() == 5);
  CHECK(*regularity(l) == 2);
}

TEST_CASE("Q-graph and total graph counts") {
  for (const Graph& g : {cycle_graph(4), complete_graph(4), path_graph(3), petersen_graph()}) {
    const std::size_t pairs = incident_edge_pairs(g);
    CHECK(q_graph(g).order() == g.order() + g.size());
    CHECK(total_graph(g).order() == g.order() + g.size());
    CHECK(q_graph(g).size() == 2 * g.size() + pairs);
    CHECK(total_graph(g).size() == 3 * g.size() + pairs);
  }
  CHECK(total_graph(path_graph(2)) == complete_graph(3));
}

TEST_CASE("join(QVertex, K4, P2) degree blocks") {
  const Graph j = join(JoinKind::QVertex, complete_graph(4), path_graph(2));
  REQUIRE(j.order() == 12);
  const auto d = degrees(j);
  for (std::size_t v = 0; v < 4; ++v) CHECK(d[v] == 5);
  for (std::size_t v = 4; v < 10; ++v) CHECK(d[v] == 6);
  for (std::size_t v = 10; v < 12; ++v) CHECK(d[v] == 5);
}

TEST_CASE("join(TEdge, P2, empty(1))") {
  const Graph j = join(JoinKind::TEdge, path_graph(2), empty_graph(1));
  CHECK(j.order() == 4);
  CHECK(j.size() == 4);
  CHECK(sorted_degrees(j) == std::vector<std::size_t>{1, 2, 2, 3});
}

TEST_CASE("join(QEdge, C3, K2) inserted block degrees") {
  const Graph j = join(JoinKind::QEdge, cycle_graph(3), complete_graph(2));
  REQUIRE(j.order() == 8);
  const auto d = degrees(j);
  for (std::size_t v = 3; v < 6; ++v) CHECK(d[v] == 6);
}

TEST_CASE("join degree blocks for all kinds") {
  const Graph g1 = petersen_graph();
  const Graph g2 = path_graph(3);
  const std::size_t n1 = 10, m1 = 15, t1 = 3, n2 = 3;
  const auto d2 = degrees(g2);
  for (JoinKind kind : kAllJoinKinds) {
    const auto d = degrees(join(kind, g1, g2));
    const bool vertex = is_vertex_join(kind);
    const bool total = is_total_join(kind);
    for (std::size_t v = 0; v < n1; ++v) CHECK(d[v] == (total ? 2 * t1 : t1) + (vertex ? n2 : 0));
    for (std::size_t v = n1; v < n1 + m1; ++v) CHECK(d[v] == 2 * t1 + (vertex ? 0 : n2));
    for (std::size_t v = 0; v < n2; ++v) CHECK(d[n1 + m1 + v] == d2[v] + (vertex ? n1 : m1));
  }
}

TEST_CASE("joins are deterministic and reject edgeless G1") {
  for (JoinKind kind : kAllJoinKinds)
    CHECK(join(kind, cycle_graph(4), path_graph(2)) == join(kind, cycle_graph(4), path_graph(2)));
  CHECK_THROWS_AS(join(JoinKind::QVertex, empty_graph(3), path_graph(2)), InvalidInput);
}

TEST_CASE("join kind names round-trip") {
  for (JoinKind kind : kAllJoinKinds) CHECK(parse_join_kind(to_string(kind)) == kind);
  CHECK_THROWS_AS(parse_join_kind("corona"), InvalidParameter);
}

TEST_CASE("edge-list round trip and validation") {
  const Graph g = petersen_graph();
  CHECK(parse_edge_list(to_edge_list(g)) == g);
  CHECK(to_edge_list(path_graph(3)) == "3 2\n0 1\n1 2\n");
  CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), InvalidInput);
  CHECK_THROWS_AS(parse_edge_list("3 1\n0 5\n"), InvalidInput);
  CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n0 1\n"), InvalidInput);
  CHECK_THROWS_AS(parse_edge_list("x\n"), InvalidInput);
  CHECK_THROWS_AS(load_edge_list("/nonexistent/file.el"), InvalidInput);
}
