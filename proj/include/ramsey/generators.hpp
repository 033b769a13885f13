#ifndef RAMSEY_GENERATORS_HPP
#define RAMSEY_GENERATORS_HPP

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "ramsey/cyclicity.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/graph_ops.hpp"
#include "ramsey/oracle.hpp"
#include "ramsey/planarity.hpp"

namespace ramsey {

// Subdivision extension: valid on minimal members whose order r does not
// divide; the result is re-verified minimal.
inline Graph extend_subdivision(const Graph& g, int r) {
  RamseyVerdict v = is_minimal_cyclicity(g, r);
  if (!v.member || !v.minimal.value())
    throw precondition_error("subdivision extension needs a minimal member");
  if (g.vertex_count() % r == 0)
    throw precondition_error("subdivision extension needs r not dividing v(G); r=" +
                             std::to_string(r) + " divides v=" +
                             std::to_string(g.vertex_count()));
  Graph out = subdivide_edge(g, g.edges().front());
  if (!is_minimal_cyclicity(out, r).minimal.value())
    throw std::logic_error("subdivided graph failed the minimality re-check");
  return out;
}

namespace detail {

// All position assignments for the edges at v, in lexicographic order.
inline bool next_assignment(std::vector<int>& pos, int r) {
  for (std::size_t i = pos.size(); i-- > 0;) {
    if (pos[i] < r) {
      ++pos[i];
      for (std::size_t j = i + 1; j < pos.size(); ++j) pos[j] = 0;
      return true;
    }
  }
  return false;
}

inline std::optional<Graph> search_blow_up(const Graph& g, int r, int vertex,
                                           bool require_planar) {
  const std::vector<int>& nbrs = g.neighbors(vertex);
  std::vector<int> pos(nbrs.size(), 0);
  do {
    std::map<int, int> assignment;
    for (std::size_t i = 0; i < nbrs.size(); ++i) assignment[nbrs[i]] = pos[i];
    BlowUpResult res = blow_up_vertex(g, vertex, r, assignment);
    if (!res.cycle_induced || !res.two_connected) continue;
    if (require_planar && !is_planar(res.graph)) continue;
    if (!is_minimal_cyclicity(res.graph, r).minimal.value()) continue;
    return res.graph;
  } while (next_assignment(pos, r));
  return std::nullopt;
}

inline Graph blow_up_extension(const Graph& g, int r, bool require_planar) {
  RamseyVerdict v = is_minimal_cyclicity(g, r);
  if (!v.member || !v.minimal.value())
    throw precondition_error("blow-up extension needs a minimal member");
  if (g.vertex_count() % r != 0)
    throw precondition_error("blow-up extension needs r dividing v(G); r=" + std::to_string(r) +
                             " does not divide v=" + std::to_string(g.vertex_count()));
  // Minimal members have a degree-2 vertex; blowing one up preserves a planar
  // embedding for any spread assignment, so those vertices go first.
  std::vector<int> order;
  for (int u : g.vertices())
    if (g.degree(u) == 2) order.push_back(u);
  for (int u : g.vertices())
    if (g.degree(u) != 2) order.push_back(u);
  for (int u : order)
    if (auto found = search_blow_up(g, r, u, require_planar)) return *found;
  throw precondition_error("no vertex admits a valid blow-up assignment");
}

}  // namespace detail

// Blow-up extension: valid on minimal members with r dividing the order;
// searches assignments until one is 2-connected with the new cycle induced,
// and re-verifies minimality.
inline Graph extend_blow_up(const Graph& g, int r) {
  return detail::blow_up_extension(g, r, false);
}

namespace detail {

// Smallest minimal member with r | v, located by bounded exhaustive search
// and cached per r.
inline const Graph& planar_seed(int r) {
  static std::map<int, Graph> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(r);
  if (it != cache.end()) return it->second;
  for (int v = r; v <= 2 * r; v += r) {
    std::vector<Graph> found = enumerate_graphs(v, [&](const Graph& g) {
      return is_minimal_cyclicity(g, r).minimal.value() && is_planar(g);
    });
    if (!found.empty()) {
      cache.emplace(r, found.front());
      return cache.at(r);
    }
  }
  throw precondition_error("no planar minimal seed with r | v found for r=" + std::to_string(r));
}

}  // namespace detail

// Planar minimal member on n vertices, n a proper multiple of r, grown from
// the seed by repeated planarity-preserving blow-ups.
inline Graph gen_planar_family(int r, int n) {
  if (r < 2) throw precondition_error("r must be at least 2");
  if (n % r != 0 || n < 2 * r)
    throw precondition_error("n must be a proper multiple of r (n = kr, k >= 2); got n=" +
                             std::to_string(n));
  Graph g = detail::planar_seed(r);
  while (g.vertex_count() < n) g = detail::blow_up_extension(g, r, true);
  if (g.vertex_count() != n)
    throw std::logic_error("blow-up iteration overshot the requested order");
  if (!is_planar(g)) throw std::logic_error("planar family member failed the planarity check");
  return g;
}

// Odd cycle C_{2k+1} joined completely to both ends of an extra edge.
inline Graph gen_odd_cycle_family(int k) {
  if (k < 1) throw precondition_error("k must be at least 1");
  int cycle_len = 2 * k + 1;
  int a = cycle_len, b = cycle_len + 1;
  std::vector<int> verts;
  std::vector<Edge> edges;
  for (int i = 0; i < cycle_len; ++i) {
    verts.push_back(i);
    edges.push_back(make_edge(i, (i + 1) % cycle_len));
  }
  verts.push_back(a);
  verts.push_back(b);
  edges.push_back(make_edge(a, b));
  for (int i = 0; i < cycle_len; ++i) {
    edges.push_back(make_edge(i, a));
    edges.push_back(make_edge(i, b));
  }
  return Graph(std::move(verts), std::move(edges));
}

}  // namespace ramsey

#endif  // RAMSEY_GENERATORS_HPP
