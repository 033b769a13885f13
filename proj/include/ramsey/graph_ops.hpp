#ifndef RAMSEY_GRAPH_OPS_HPP
#define RAMSEY_GRAPH_OPS_HPP

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "ramsey/errors.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

namespace detail {

// Shortest cycle length, or nullopt for forests.  BFS distance between the
// endpoints of each removed edge; exact on simple graphs.
inline std::optional<int> girth_length(const Graph& g) {
  int best = -1;
  const auto& verts = g.vertices();
  int n = g.vertex_count();
  for (const Edge& e : g.edges()) {
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    std::deque<int> queue;
    dist[static_cast<std::size_t>(g.index_of(e.first))] = 0;
    queue.push_back(e.first);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(v)) {
        if ((v == e.first && w == e.second) || (v == e.second && w == e.first)) continue;
        std::size_t wi = static_cast<std::size_t>(g.index_of(w));
        if (dist[wi] < 0) {
          dist[wi] = dist[static_cast<std::size_t>(g.index_of(v))] + 1;
          queue.push_back(w);
        }
      }
    }
    int d = dist[static_cast<std::size_t>(g.index_of(e.second))];
    if (d >= 0 && (best < 0 || d + 1 < best)) best = d + 1;
  }
  (void)verts;
  if (best < 0) return std::nullopt;
  return best;
}

}  // namespace detail

// Shortest cycle, or nullopt on forests.  Ties broken by the
// lexicographically smallest vertex sequence: smallest starting vertex, then
// smallest next neighbor, the start being the minimum of the cycle.
inline std::optional<Cycle> girth_cycle(const Graph& g) {
  auto glen = detail::girth_length(g);
  if (!glen) return std::nullopt;
  int target = *glen;
  std::vector<int> path;
  std::vector<char> used(static_cast<std::size_t>(g.vertex_count()), 0);
  std::optional<Cycle> found;

  std::function<void(int)> extend = [&](int start) {
    if (found) return;
    int last = path.back();
    if (static_cast<int>(path.size()) == target) {
      if (g.has_edge(last, start)) found = make_cycle(g, path);
      return;
    }
    for (int w : g.neighbors(last)) {
      if (found) return;
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
    if (found) return found;
  }
  return std::nullopt;
}

// Any cycle under a fixed deterministic search order (ascending roots,
// ascending neighbors), used where cycle existence is what matters.
inline std::optional<Cycle> find_any_cycle(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> state(static_cast<std::size_t>(n), 0);
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::optional<Cycle> found;

  std::function<void(int)> dfs = [&](int v) {
    if (found) return;
    std::size_t vi = static_cast<std::size_t>(g.index_of(v));
    state[vi] = 1;
    for (int w : g.neighbors(v)) {
      if (found) return;
      std::size_t wi = static_cast<std::size_t>(g.index_of(w));
      if (w == parent[vi]) continue;
      if (state[wi] == 1) {
        std::vector<int> seq{w};
        int x = v;
        while (x != w) {
          seq.push_back(x);
          x = parent[static_cast<std::size_t>(g.index_of(x))];
        }
        std::reverse(seq.begin() + 1, seq.end());
        found = make_cycle(g, seq);
        return;
      }
      if (state[wi] == 0) {
        parent[wi] = v;
        dfs(w);
      }
    }
    state[vi] = 2;
  };

  for (int v : g.vertices()) {
    if (state[static_cast<std::size_t>(g.index_of(v))] == 0) dfs(v);
    if (found) return found;
  }
  return std::nullopt;
}

// v(G) >= 3, connected and free of cutvertices.
inline bool is_two_connected(const Graph& g) {
  int n = g.vertex_count();
  if (n < 3 || !g.is_connected()) return false;
  std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), -1);
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  int timer = 0;
  bool cut = false;

  std::function<void(int)> dfs = [&](int v) {
    std::size_t vi = static_cast<std::size_t>(g.index_of(v));
    disc[vi] = low[vi] = timer++;
    int children = 0;
    for (int w : g.neighbors(v)) {
      std::size_t wi = static_cast<std::size_t>(g.index_of(w));
      if (disc[wi] < 0) {
        ++children;
        parent[wi] = v;
        dfs(w);
        low[vi] = std::min(low[vi], low[wi]);
        if (parent[vi] < 0 && children > 1) cut = true;
        if (parent[vi] >= 0 && low[wi] >= disc[vi]) cut = true;
      } else if (w != parent[vi]) {
        low[vi] = std::min(low[vi], disc[wi]);
      }
    }
  };

  dfs(g.vertices()[0]);
  return !cut;
}

struct ContractionResult {
  Graph graph;
  Cycle contracted;           // the cycle chosen by girth_cycle
  int merged_vertex = 0;      // label carrying the contracted cycle
  bool parallels_merged = false;
};

// Contract the shortest cycle into one vertex (the minimum label of the
// cycle), deleting loops and merging parallel edges.  The merge is flagged
// rather than hidden since the count identity e' = e - g relies on it not
// happening.
inline ContractionResult contract_shortest_cycle(const Graph& g) {
  auto cyc = girth_cycle(g);
  if (!cyc) throw precondition_error("graph is acyclic, nothing to contract");
  int m = *std::min_element(cyc->vertices.begin(), cyc->vertices.end());
  auto on_cycle = [&](int v) {
    return std::find(cyc->vertices.begin(), cyc->vertices.end(), v) != cyc->vertices.end();
  };
  std::vector<int> verts;
  for (int v : g.vertices())
    if (!on_cycle(v) || v == m) verts.push_back(v);
  std::vector<Edge> edges;
  bool merged = false;
  for (const Edge& e : g.edges()) {
    int u = on_cycle(e.first) ? m : e.first;
    int v = on_cycle(e.second) ? m : e.second;
    if (u == v) continue;
    Edge f = make_edge(u, v);
    if (std::find(edges.begin(), edges.end(), f) != edges.end()) {
      merged = true;
      continue;
    }
    edges.push_back(f);
  }
  return {Graph(std::move(verts), std::move(edges)), *cyc, m, merged};
}

// Contract a single edge, merging its endpoints into the smaller label.
inline Graph contract_edge(const Graph& g, Edge e) {
  e = make_edge(e.first, e.second);
  if (!g.has_edge(e.first, e.second))
    throw precondition_error("no edge (" + std::to_string(e.first) + "," +
                             std::to_string(e.second) + ")");
  int keep = e.first, drop = e.second;
  std::vector<int> verts;
  for (int v : g.vertices())
    if (v != drop) verts.push_back(v);
  std::vector<Edge> edges;
  for (const Edge& f : g.edges()) {
    int u = f.first == drop ? keep : f.first;
    int v = f.second == drop ? keep : f.second;
    if (u == v) continue;
    Edge h = make_edge(u, v);
    if (std::find(edges.begin(), edges.end(), h) == edges.end()) edges.push_back(h);
  }
  return Graph(std::move(verts), std::move(edges));
}

// Replace edge xy by x-w-y with a fresh vertex w (one above the max label).
inline Graph subdivide_edge(const Graph& g, Edge e) {
  e = make_edge(e.first, e.second);
  if (!g.has_edge(e.first, e.second))
    throw precondition_error("no edge (" + std::to_string(e.first) + "," +
                             std::to_string(e.second) + ")");
  int w = g.vertices().back() + 1;
  std::vector<int> verts = g.vertices();
  verts.push_back(w);
  std::vector<Edge> edges;
  for (const Edge& f : g.edges())
    if (f != e) edges.push_back(f);
  edges.push_back(make_edge(e.first, w));
  edges.push_back(make_edge(w, e.second));
  return Graph(std::move(verts), std::move(edges));
}

struct BlowUpResult {
  Graph graph;
  std::vector<int> cycle_vertices;  // c_0 .. c_r in cycle order
  bool cycle_induced = false;
  bool two_connected = false;
};

// Replace vertex v by an induced cycle c_0..c_r of length r+1; each former
// edge uv is re-attached to the cycle vertex named by assignment[u].  c_0
// reuses the label of v, the rest are fresh labels.
inline BlowUpResult blow_up_vertex(const Graph& g, int v, int r,
                                   const std::map<int, int>& assignment) {
  if (r < 2) throw precondition_error("r must be at least 2");
  if (!g.has_vertex(v)) throw precondition_error("no vertex " + std::to_string(v));
  const std::vector<int>& nbrs = g.neighbors(v);
  for (int u : nbrs)
    if (!assignment.count(u))
      throw precondition_error("assignment is missing edge (" + std::to_string(u) + "," +
                               std::to_string(v) + ")");
  for (const auto& [u, pos] : assignment) {
    if (!g.has_edge(u, v))
      throw precondition_error("assignment names non-incident edge (" + std::to_string(u) +
                               "," + std::to_string(v) + ")");
    if (pos < 0 || pos > r)
      throw precondition_error("assignment position out of range [0," + std::to_string(r) + "]");
  }

  std::vector<int> cyc(static_cast<std::size_t>(r + 1));
  cyc[0] = v;
  int fresh = g.vertices().back() + 1;
  for (int i = 1; i <= r; ++i) cyc[static_cast<std::size_t>(i)] = fresh++;

  std::vector<int> verts = g.vertices();
  for (int i = 1; i <= r; ++i) verts.push_back(cyc[static_cast<std::size_t>(i)]);
  std::vector<Edge> edges;
  for (const Edge& f : g.edges())
    if (f.first != v && f.second != v) edges.push_back(f);
  for (int i = 0; i <= r; ++i)
    edges.push_back(make_edge(cyc[static_cast<std::size_t>(i)],
                              cyc[static_cast<std::size_t>((i + 1) % (r + 1))]));
  for (int u : nbrs)
    edges.push_back(make_edge(u, cyc[static_cast<std::size_t>(assignment.at(u))]));

  BlowUpResult res{Graph(std::move(verts), std::move(edges)), cyc, true, false};
  for (int i = 0; i <= r; ++i)
    for (int j = i + 1; j <= r; ++j) {
      bool cycle_edge = (j == i + 1) || (i == 0 && j == r);
      if (!cycle_edge && res.graph.has_edge(cyc[static_cast<std::size_t>(i)],
                                            cyc[static_cast<std::size_t>(j)]))
        res.cycle_induced = false;
    }
  res.two_connected = is_two_connected(res.graph);
  return res;
}

// Add k successive dominating vertices.
inline Graph cone(const Graph& g, int k) {
  if (k < 1) throw precondition_error("k must be at least 1");
  Graph cur = g;
  for (int step = 0; step < k; ++step) {
    int w = cur.vertex_count() == 0 ? 0 : cur.vertices().back() + 1;
    std::vector<int> verts = cur.vertices();
    std::vector<Edge> edges = cur.edges();
    for (int v : cur.vertices()) edges.push_back(make_edge(v, w));
    verts.push_back(w);
    cur = Graph(std::move(verts), std::move(edges));
  }
  return cur;
}

namespace detail {

inline bool colourable_with(const Graph& g, int k) {
  int n = g.vertex_count();
  std::vector<int> colour(static_cast<std::size_t>(n), 0);

  std::function<bool(int, int)> rec = [&](int coloured, int max_used) -> bool {
    if (coloured == n) return true;
    // DSATUR order: most distinct neighbor colours, then highest degree.
    int pick = -1, pick_sat = -1, pick_deg = -1;
    for (int i = 0; i < n; ++i) {
      if (colour[static_cast<std::size_t>(i)] != 0) continue;
      int label = g.vertices()[static_cast<std::size_t>(i)];
      unsigned mask = 0;
      for (int w : g.neighbors(label)) {
        int c = colour[static_cast<std::size_t>(g.index_of(w))];
        if (c) mask |= 1u << c;
      }
      int sat = __builtin_popcount(mask);
      int deg = g.degree(label);
      if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
        pick = i;
        pick_sat = sat;
        pick_deg = deg;
      }
    }
    int label = g.vertices()[static_cast<std::size_t>(pick)];
    unsigned forbidden = 0;
    for (int w : g.neighbors(label)) {
      int c = colour[static_cast<std::size_t>(g.index_of(w))];
      if (c) forbidden |= 1u << c;
    }
    int limit = std::min(k, max_used + 1);
    for (int c = 1; c <= limit; ++c) {
      if (forbidden & (1u << c)) continue;
      colour[static_cast<std::size_t>(pick)] = c;
      if (rec(coloured + 1, std::max(max_used, c))) return true;
      colour[static_cast<std::size_t>(pick)] = 0;
    }
    return false;
  };

  return rec(0, 0);
}

inline int greedy_clique_size(const Graph& g) {
  std::vector<int> order = g.vertices();
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return g.degree(a) > g.degree(b) || (g.degree(a) == g.degree(b) && a < b); });
  std::vector<int> clique;
  for (int v : order) {
    bool ok = true;
    for (int u : clique)
      if (!g.has_edge(u, v)) ok = false;
    if (ok) clique.push_back(v);
  }
  return static_cast<int>(clique.size());
}

}  // namespace detail

// Exact chromatic number by branch and bound; refuses graphs above the cap.
inline int chromatic_number(const Graph& g, int cap = 16) {
  if (g.vertex_count() > cap)
    throw budget_error("graph order " + std::to_string(g.vertex_count()) +
                           " exceeds the chromatic-number cap " + std::to_string(cap) +
                           "; raise the cap argument to proceed",
                       static_cast<std::uint64_t>(cap));
  if (g.vertex_count() == 0) return 0;
  if (g.edge_count() == 0) return 1;
  int lower = std::max(2, detail::greedy_clique_size(g));
  for (int k = lower; k <= g.vertex_count(); ++k)
    if (detail::colourable_with(g, k)) return k;
  return g.vertex_count();
}

}  // namespace ramsey

#endif  // RAMSEY_GRAPH_OPS_HPP
