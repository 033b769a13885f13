#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "ramsey/graph.hpp"
#include "ramsey/graph_ops.hpp"

using namespace ramsey;

namespace {

Graph diamond() { return Graph({0, 1, 2, 3}, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

// Test-side oracle: every simple cycle as a canonical vertex set.
std::vector<std::vector<int>> all_cycles(const Graph& g) {
  std::vector<std::vector<int>> out;
  std::set<std::set<int>> seen;
  std::vector<int> path;
  std::vector<char> used(static_cast<std::size_t>(g.vertex_count()), 0);
  std::function<void(int)> extend = [&](int start) {
    int last = path.back();
    for (int w : g.neighbors(last)) {
      if (w == start && path.size() >= 3) {
        std::set<int> key(path.begin(), path.end());
        if (seen.insert(key).second) out.push_back(path);
      }
      if (w <= start) continue;
      std::size_t wi = static_cast<std::size_t>(g.index_of(w));
      if (used[wi]) continue;
      used[wi] = 1;
      path.push_back(w);
      extend(start);
      path.pop_back();
      used[wi] = 0;
    }
  };
  for (int s : g.vertices()) {
    path = {s};
    std::fill(used.begin(), used.end(), 0);
    used[static_cast<std::size_t>(g.index_of(s))] = 1;
    extend(s);
  }
  return out;
}

// Test-side oracle: exhaustive proper-colouring check.
bool colourable_brute(const Graph& g, int k) {
  int n = g.vertex_count();
  std::vector<int> colour(static_cast<std::size_t>(n), 0);
  std::function<bool(int)> rec = [&](int i) {
    if (i == n) return true;
    int label = g.vertices()[static_cast<std::size_t>(i)];
    for (int c = 1; c <= k; ++c) {
      bool ok = true;
      for (int w : g.neighbors(label)) {
        int wi = g.index_of(w);
        if (wi < i && colour[static_cast<std::size_t>(wi)] == c) ok = false;
      }
      if (!ok) continue;
      colour[static_cast<std::size_t>(i)] = c;
      if (rec(i + 1)) return true;
    }
    colour[static_cast<std::size_t>(i)] = 0;
    return false;
  };
  return rec(0);
}

int chromatic_brute(const Graph& g) {
  for (int k = 1; k <= g.vertex_count(); ++k)
    if (colourable_brute(g, k)) return k;
  return g.vertex_count();
}

}  // namespace

TEST_CASE("graph6 decoding of DQc gives the hand-decoded path") {
  Graph g = decode_graph("DQc");
  REQUIRE(g.vertex_count() == 5);
  // Hand decode: 'Q'=18=010010, 'c'=36=100100; column-major upper triangle.
  std::vector<Edge> expected{{0, 2}, {0, 4}, {1, 3}, {3, 4}};
  REQUIRE(g.edges() == expected);
  REQUIRE(encode_graph6(g) == "DQc");
}

TEST_CASE("edge-list decoding") {
  Graph g = decode_graph("0 1\n1 2\n2 0");
  REQUIRE(g.vertex_count() == 3);
  REQUIRE(g.edge_count() == 3);
  REQUIRE(g.has_edge(0, 2));
}

TEST_CASE("decode errors name the position") {
  REQUIRE_THROWS_AS(decode_graph("0 0"), parse_error);
  REQUIRE_THROWS_AS(decode_graph("0 1\n0 1"), parse_error);
  REQUIRE_THROWS_AS(decode_graph("0 1 2"), parse_error);
  REQUIRE_THROWS_AS(decode_graph("-1 2"), parse_error);
  REQUIRE_THROWS_AS(decode_graph(""), parse_error);
  REQUIRE_THROWS_AS(decode_graph("D"), parse_error);     // truncated data
  REQUIRE_THROWS_AS(decode_graph("DQcc"), parse_error);  // oversized data
  REQUIRE_THROWS_AS(decode_graph(std::string(1, char(40))), parse_error);
  REQUIRE_THROWS_AS(decode_graph("~??"), parse_error);   // multi-byte header
}

TEST_CASE("graph6 round-trips on random graphs") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng() % 12);
    std::vector<int> verts;
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) verts.push_back(i);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 3 == 0) edges.push_back({u, v});
    Graph g(verts, edges);
    Graph back = decode_graph(encode_graph6(g));
    REQUIRE(back == g);
    if (g.edge_count() > 0) {
      Graph el = decode_graph(encode_edge_list(g));
      REQUIRE(el.edges() == g.edges());
    }
  }
}

TEST_CASE("graph invariants reject bad construction") {
  REQUIRE_THROWS_AS(Graph({0, 1}, {{0, 0}}), precondition_error);
  REQUIRE_THROWS_AS(Graph({0, 1}, {{0, 1}, {1, 0}}), precondition_error);
  REQUIRE_THROWS_AS(Graph({0, 1}, {{0, 2}}), precondition_error);
}

TEST_CASE("girth cycle on C5 is the cycle itself") {
  auto c = girth_cycle(Graph::cycle(5));
  REQUIRE(c);
  REQUIRE(c->length() == 5);
  REQUIRE(c->vertices == std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("girth cycle on the diamond is a triangle with both degree-3 vertices") {
  Graph g = diamond();
  auto cycles = all_cycles(g);
  int shortest = 1 << 20;
  for (const auto& c : cycles) shortest = std::min<int>(shortest, c.size());
  REQUIRE(shortest == 3);

  auto c = girth_cycle(g);
  REQUIRE(c);
  REQUIRE(c->length() == 3);
  // 0 and 1 have degree 3 and lie on every triangle.
  REQUIRE(std::count(c->vertices.begin(), c->vertices.end(), 0) == 1);
  REQUIRE(std::count(c->vertices.begin(), c->vertices.end(), 1) == 1);
  // Lexicographic tie-break among {0,1,2} and {0,1,3}.
  REQUIRE(c->vertices == std::vector<int>{0, 1, 2});
}

TEST_CASE("girth cycle is absent on forests") {
  REQUIRE(!girth_cycle(Graph::path(4)));
}

TEST_CASE("two-connectivity") {
  REQUIRE(is_two_connected(diamond()));
  REQUIRE(is_two_connected(Graph::cycle(6)));
  Graph bowtie({0, 1, 2, 3, 4}, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
  REQUIRE(!is_two_connected(bowtie));
  REQUIRE(!is_two_connected(Graph::path(3)));
  REQUIRE(!is_two_connected(Graph::complete(2)));
}

TEST_CASE("contracting C5 yields a single vertex") {
  auto res = contract_shortest_cycle(Graph::cycle(5));
  REQUIRE(res.graph.vertex_count() == 1);
  REQUIRE(res.graph.edge_count() == 0);
  REQUIRE(!res.parallels_merged);
}

TEST_CASE("contracting a triangle of the diamond merges parallels down to K2") {
  auto res = contract_shortest_cycle(diamond());
  REQUIRE(res.graph.vertex_count() == 2);
  REQUIRE(res.graph.edge_count() == 1);
  REQUIRE(res.parallels_merged);
}

TEST_CASE("contraction count identity when no parallels merge") {
  // Two triangles joined by a path: girth 3, no vertex outside the first
  // triangle sees two of its vertices.
  Graph g({0, 1, 2, 3, 4, 5, 6},
          {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {4, 6}, {5, 6}});
  auto res = contract_shortest_cycle(g);
  REQUIRE(!res.parallels_merged);
  int girth = res.contracted.length();
  REQUIRE(res.graph.vertex_count() == g.vertex_count() - (girth - 1));
  REQUIRE(res.graph.edge_count() == g.edge_count() - girth);
}

TEST_CASE("contraction requires a cycle") {
  REQUIRE_THROWS_AS(contract_shortest_cycle(Graph::path(4)), precondition_error);
}

TEST_CASE("subdividing an edge") {
  Graph c4 = subdivide_edge(Graph::cycle(3), {0, 1});
  REQUIRE(c4.vertex_count() == 4);
  REQUIRE(c4.edge_count() == 4);
  REQUIRE(girth_cycle(c4)->length() == 4);

  Graph d = subdivide_edge(diamond(), {0, 1});
  REQUIRE(d.vertex_count() == 5);
  REQUIRE(d.edge_count() == 6);

  Graph dd = subdivide_edge(d, d.edges().front());
  REQUIRE(dd.vertex_count() == 6);
  REQUIRE(dd.edge_count() == 7);

  REQUIRE_THROWS_AS(subdivide_edge(diamond(), {2, 3}), precondition_error);
}

TEST_CASE("subdivision preserves two-connectivity") {
  for (const Graph& g : {diamond(), Graph::cycle(5), Graph::complete(5)}) {
    for (const Edge& e : g.edges()) {
      REQUIRE(is_two_connected(subdivide_edge(g, e)) == is_two_connected(g));
    }
  }
}

TEST_CASE("blow-up of a degree-2 diamond vertex") {
  Graph g = diamond();
  // Vertex 2 has degree 2 with neighbours 0 and 1; spread them.
  auto res = blow_up_vertex(g, 2, 2, {{0, 0}, {1, 1}});
  REQUIRE(res.graph.vertex_count() == 6);
  REQUIRE(res.graph.edge_count() == 8);
  REQUIRE(res.cycle_induced);
  REQUIRE(res.two_connected);

  auto clumped = blow_up_vertex(g, 2, 2, {{0, 0}, {1, 0}});
  REQUIRE(clumped.cycle_induced);
  REQUIRE(!clumped.two_connected);
}

TEST_CASE("blow-up count identities hold for every assignment") {
  Graph g = diamond();
  for (int v : g.vertices()) {
    const auto& nbrs = g.neighbors(v);
    std::vector<int> pos(nbrs.size(), 0);
    int r = 2;
    while (true) {
      std::map<int, int> assignment;
      for (std::size_t i = 0; i < nbrs.size(); ++i) assignment[nbrs[i]] = pos[i];
      auto res = blow_up_vertex(g, v, r, assignment);
      REQUIRE(res.graph.vertex_count() == g.vertex_count() + r);
      REQUIRE(res.graph.edge_count() == g.edge_count() + r + 1);
      bool more = false;
      for (std::size_t i = pos.size(); i-- > 0;) {
        if (pos[i] < r) {
          ++pos[i];
          for (std::size_t j = i + 1; j < pos.size(); ++j) pos[j] = 0;
          more = true;
          break;
        }
      }
      if (!more) break;
    }
  }
}

TEST_CASE("blow-up validates its assignment") {
  REQUIRE_THROWS_AS(blow_up_vertex(diamond(), 2, 2, {{0, 0}}), precondition_error);
  REQUIRE_THROWS_AS(blow_up_vertex(diamond(), 2, 2, {{0, 0}, {1, 5}}), precondition_error);
  REQUIRE_THROWS_AS(blow_up_vertex(diamond(), 2, 2, {{0, 0}, {1, 0}, {3, 0}}),
                    precondition_error);
}

TEST_CASE("blow-up of C3 at any vertex with r=2") {
  Graph g = Graph::cycle(3);
  auto res = blow_up_vertex(g, 0, 2, {{1, 0}, {2, 1}});
  REQUIRE(res.graph.vertex_count() == 5);
  REQUIRE(res.graph.edge_count() == 6);
}

TEST_CASE("cone constructions") {
  Graph k5 = cone(Graph::complete(4), 1);
  REQUIRE(k5.vertex_count() == 5);
  REQUIRE(k5.edge_count() == 10);

  Graph w4 = cone(Graph::cycle(4), 1);
  REQUIRE(w4.vertex_count() == 5);
  REQUIRE(w4.edge_count() == 8);

  Graph k5b = cone(Graph::complete(3), 2);
  REQUIRE(k5b.vertex_count() == 5);
  REQUIRE(k5b.edge_count() == 10);

  REQUIRE_THROWS_AS(cone(Graph::complete(3), 0), precondition_error);
}

TEST_CASE("chromatic number on knowns and against brute force") {
  REQUIRE(chromatic_number(Graph::complete(4)) == 4);
  REQUIRE(chromatic_number(Graph::cycle(5)) == 3);
  REQUIRE(chromatic_number(Graph::cycle(6)) == 2);
  REQUIRE(chromatic_number(Graph::path(4)) == 2);

  std::mt19937 rng(777);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + static_cast<int>(rng() % 6);
    std::vector<int> verts;
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) verts.push_back(i);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 2 == 0) edges.push_back({u, v});
    Graph g(verts, edges);
    REQUIRE(chromatic_number(g) == chromatic_brute(g));
  }
}

TEST_CASE("chromatic number cap is enforced") {
  std::vector<int> verts;
  std::vector<Edge> edges;
  for (int i = 0; i < 17; ++i) verts.push_back(i);
  for (int i = 0; i + 1 < 17; ++i) edges.push_back({i, i + 1});
  REQUIRE_THROWS_AS(chromatic_number(Graph(verts, edges)), budget_error);
  REQUIRE(chromatic_number(Graph(verts, edges), 17) == 2);
}

TEST_CASE("multigraph inflation carries r copies of every edge") {
  Multigraph m = r_fold_inflation(diamond(), 3);
  REQUIRE(m.edges.size() == 15);
  std::map<Edge, int> count;
  for (const MultiEdge& me : m.edges) count[make_edge(me.u, me.v)] += 1;
  for (const auto& [e, c] : count) REQUIRE(c == 3);
}
