#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "ramsey/canonical.hpp"
#include "ramsey/cyclicity.hpp"
#include "ramsey/oracle.hpp"

using namespace ramsey;

namespace {

Graph diamond() { return Graph({0, 1, 2, 3}, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

}  // namespace

TEST_CASE("oracle colouring semantics on knowns") {
  REQUIRE(oracle_is_ramsey_cyclicity(diamond(), 2));
  REQUIRE(!oracle_is_ramsey_cyclicity(Graph::cycle(4), 2));
  REQUIRE(oracle_is_ramsey_cyclicity(Graph::cycle(3), 3));
  REQUIRE(!oracle_is_ramsey_cyclicity(Graph::path(5), 2));
}

TEST_CASE("oracle budget gate uses the raw colouring count") {
  REQUIRE_THROWS_AS(oracle_is_ramsey_cyclicity(Graph::complete(5), 2, 1000), budget_error);
  REQUIRE(!oracle_is_ramsey_cyclicity(Graph::cycle(4), 2, 100));  // 81 colourings fit
}

TEST_CASE("density witness on knowns") {
  auto d = oracle_density_witness(diamond(), 2);
  REQUIRE(d);
  REQUIRE(d->vertex_count() == 4);
  REQUIRE(d->edge_count() == 5);

  REQUIRE(!oracle_density_witness(Graph::cycle(6), 2));

  auto k5 = oracle_density_witness(Graph::complete(5), 2);
  REQUIRE(k5);

  REQUIRE_THROWS_AS(oracle_density_witness(Graph::complete(11) /* above cap */, 2),
                    budget_error);
}

TEST_CASE("density witness maximises the violation margin") {
  auto w = oracle_density_witness(Graph::complete(5), 2);
  // Margin 2e - 3v + 2 over induced subgraphs of K5 peaks at the whole K5.
  REQUIRE(w->vertex_count() == 5);
  REQUIRE(w->edge_count() == 10);
}

TEST_CASE("census of order 3 is P3 and C3") {
  std::vector<Graph> graphs = enumerate_graphs(3, nullptr);
  REQUIRE(graphs.size() == 2);
  bool has_path = false, has_triangle = false;
  for (const Graph& g : graphs) {
    if (is_isomorphic(g, Graph::path(3))) has_path = true;
    if (is_isomorphic(g, Graph::cycle(3))) has_triangle = true;
  }
  REQUIRE(has_path);
  REQUIRE(has_triangle);
}

TEST_CASE("census counts match the literature") {
  const int expected[] = {0, 1, 1, 2, 6, 21, 112, 853};
  for (int v = 1; v <= 7; ++v) {
    int count = 0;
    enumerate_connected_graphs(v, [&](const Graph&) { ++count; });
    REQUIRE(count == expected[v]);
  }
}

TEST_CASE("census filters: the diamond is the unique minimal member at v=4, r=2") {
  std::vector<Graph> minimal = enumerate_graphs(4, [](const Graph& g) {
    return is_minimal_cyclicity(g, 2).minimal.value();
  });
  REQUIRE(minimal.size() == 1);
  REQUIRE(is_isomorphic(minimal.front(), diamond()));

  std::vector<Graph> at5 = enumerate_graphs(5, [](const Graph& g) {
    return is_minimal_cyclicity(g, 2).minimal.value();
  });
  REQUIRE(at5.empty());
}

TEST_CASE("census rejects out-of-range orders") {
  REQUIRE_THROWS_AS(enumerate_graphs(9, nullptr), budget_error);
  REQUIRE_THROWS_AS(enumerate_graphs(0, nullptr), budget_error);
}

TEST_CASE("canonical form identifies isomorphic relabelings") {
  Graph a({0, 1, 2, 3}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  Graph b({0, 1, 2, 3}, {{0, 2}, {2, 1}, {1, 3}, {0, 3}});
  REQUIRE(is_isomorphic(a, b));
  REQUIRE(canonical_bitstring(a) == canonical_bitstring(b));
  REQUIRE(!is_isomorphic(a, Graph::path(4)));
  REQUIRE(!is_isomorphic(diamond(), Graph::cycle(4)));
}

TEST_CASE("oracle equivalence: colourings vs density vs pebble, v <= 5") {
  for (int v = 1; v <= 5; ++v) {
    enumerate_connected_graphs(v, [&](const Graph& g) {
      for (int r : {2, 3}) {
        bool colour = oracle_is_ramsey_cyclicity(g, r);
        bool dense = oracle_density_witness(g, r).has_value();
        bool pebble = !pebble_sparse(g, r).sparse;
        REQUIRE(colour == dense);
        REQUIRE(colour == pebble);
      }
    });
  }
}
