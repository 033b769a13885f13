#ifndef RAMSEY_CYCLICITY_HPP
#define RAMSEY_CYCLICITY_HPP

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ramsey/canonical.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/graph_ops.hpp"
#include "ramsey/sparsity.hpp"

namespace ramsey {

// Total map E(G) -> {1..r+1}.
struct EdgeColouring {
  int r = 0;
  std::map<Edge, int> colours;

  int colour_of(Edge e) const {
    auto it = colours.find(make_edge(e.first, e.second));
    if (it == colours.end())
      throw precondition_error("edge (" + std::to_string(e.first) + "," +
                               std::to_string(e.second) + ") is uncoloured");
    return it->second;
  }

  bool total_on(const Graph& g) const {
    for (const Edge& e : g.edges()) {
      auto it = colours.find(e);
      if (it == colours.end() || it->second < 1 || it->second > r + 1) return false;
    }
    return true;
  }
};

class member_error : public std::runtime_error {
public:
  member_error(const std::string& msg, Graph violating)
      : std::runtime_error(msg), violating_(std::move(violating)) {}

  const Graph& violating() const noexcept { return violating_; }

private:
  Graph violating_;
};

// Membership/minimality decision plus the certificate proving it: a
// violating subgraph for members, a colouring whose every cycle is rainbow
// for non-members.
struct RamseyVerdict {
  bool member = false;
  std::optional<bool> minimal;  // unset when not evaluated
  std::optional<Graph> violating;
  std::optional<EdgeColouring> colouring;
};

// A cycle of g using at most r colours under c, or nullopt.  Such a cycle
// avoids at least one colour, so colour classes are deleted in turn and the
// remainder searched.
inline std::optional<Cycle> verify_colouring(const Graph& g, const EdgeColouring& c) {
  if (!c.total_on(g)) throw precondition_error("colouring is not total on the graph");
  for (int i = 1; i <= c.r + 1; ++i) {
    std::vector<Edge> kept;
    for (const Edge& e : g.edges())
      if (c.colour_of(e) != i) kept.push_back(e);
    if (kept.empty()) continue;
    Graph sub(g.vertices(), kept);
    if (auto cyc = find_any_cycle(sub)) return cyc;
  }
  return std::nullopt;
}

// Colouring in which every cycle uses all r+1 colours: each edge receives
// the index of the unique forest of the decomposition of G^r holding none of
// its copies.
inline EdgeColouring witness_colouring(const Graph& g, int r) {
  SparsityCertificate cert;
  try {
    cert = forest_decomposition(g, r);
  } catch (const not_sparse_error& e) {
    throw member_error("graph is a member, no witness colouring exists", e.witness());
  }
  std::map<Edge, std::set<int>> present;
  for (std::size_t f = 0; f < cert.forests.size(); ++f)
    for (const MultiEdge& me : cert.forests[f])
      present[make_edge(me.u, me.v)].insert(static_cast<int>(f));
  EdgeColouring col{r, {}};
  for (const Edge& e : g.edges()) {
    const std::set<int>& in = present[e];
    if (static_cast<int>(in.size()) != r)
      throw std::logic_error("edge copies do not occupy r distinct forests");
    for (int f = 0; f <= r; ++f)
      if (!in.count(f)) col.colours[e] = f + 1;
  }
  if (verify_colouring(g, col))
    throw std::logic_error("witness colouring admits a cycle on at most r colours");
  return col;
}

// Theorem: G is 1/r-Ramsey for cyclicity exactly when some subgraph H has
// r e(H) >= (r+1) v(H) - r.
inline RamseyVerdict is_ramsey_cyclicity(const Graph& g, int r) {
  SparsityCertificate cert = pebble_sparse(g, r);
  if (!cert.sparse) return {true, std::nullopt, std::move(cert.witness), std::nullopt};
  return {false, std::nullopt, std::nullopt, witness_colouring(g, r)};
}

// Minimal membership: member, no isolated vertices, and every single-edge
// deletion destroys membership.  Proper subgraphs reached only by vertex
// deletions are covered by the isolated-vertex reduction.
inline RamseyVerdict is_minimal_cyclicity(const Graph& g, int r) {
  RamseyVerdict v = is_ramsey_cyclicity(g, r);
  if (!v.member) {
    v.minimal = false;
    return v;
  }
  bool minimal = true;
  for (int u : g.vertices())
    if (g.degree(u) == 0) minimal = false;
  if (minimal)
    for (const Edge& e : g.edges())
      if (!pebble_sparse(g.without_edge(e), r).sparse) {
        minimal = false;
        break;
      }
  v.minimal = minimal;
  return v;
}

// Greedy minimal member inside a member: delete edges in ascending label
// order while membership survives, then strip isolated vertices.
inline Graph find_minimal_subgraph(const Graph& g, int r) {
  if (pebble_sparse(g, r).sparse)
    throw precondition_error("graph is not a member; nothing to minimise");
  Graph cur = g;
  for (const Edge& e : g.edges()) {
    if (!cur.has_edge(e.first, e.second)) continue;
    Graph candidate = cur.without_edge(e);
    if (!pebble_sparse(candidate, r).sparse) cur = std::move(candidate);
  }
  std::vector<int> keep;
  for (int v : cur.vertices())
    if (cur.degree(v) > 0) keep.push_back(v);
  cur = cur.induced(keep);
  if (!is_minimal_cyclicity(cur, r).minimal.value())
    throw std::logic_error("greedy minimisation did not reach a minimal member");
  return cur;
}

struct MinimalProfileReport {
  int vertex_count = 0;
  int edge_count = 0;
  long long edge_formula_ceil = 0;
  long long edge_formula_floor = 0;
  int min_degree = 0;
  int v_mod_r = 0;
  bool edge_formula_ok = false;
  bool degree_ok = false;
  bool residue_ok = false;

  bool all_ok() const { return edge_formula_ok && degree_ok && residue_ok; }
};

// Checks the three necessary conditions on minimal members: the exact edge
// count (both the ceiling and floor forms), minimum degree 2, and
// v(G) != 1 (mod r).
inline MinimalProfileReport minimal_profile_check(const Graph& g, int r) {
  RamseyVerdict v = is_minimal_cyclicity(g, r);
  if (!v.member || !v.minimal.value())
    throw precondition_error("graph is not a minimal member for r=" + std::to_string(r));
  MinimalProfileReport rep;
  rep.vertex_count = g.vertex_count();
  rep.edge_count = g.edge_count();
  long long n = g.vertex_count();
  // ceil((1+1/r)v - 1) = ceil(((r+1)v - r)/r), floor((1+1/r)v - 1/r).
  rep.edge_formula_ceil = ((r + 1) * n - r + (r - 1)) / r;
  rep.edge_formula_floor = ((r + 1) * n - 1) / r;
  rep.min_degree = g.min_degree();
  rep.v_mod_r = static_cast<int>(n % r);
  rep.edge_formula_ok =
      rep.edge_count == rep.edge_formula_ceil && rep.edge_count == rep.edge_formula_floor;
  rep.degree_ok = rep.min_degree == 2;
  rep.residue_ok = rep.v_mod_r != 1;
  return rep;
}

// One step of a minor derivation; `vertices` names the labels involved.
struct MinorStep {
  std::string op;
  std::vector<int> vertices;
};

struct DiamondMinorResult {
  bool found = false;
  std::vector<MinorStep> steps;
};

namespace detail {

// Edge whose endpoints share at least two neighbours: a diamond subgraph.
inline std::optional<std::array<int, 4>> diamond_subgraph(const Graph& g) {
  for (const Edge& e : g.edges()) {
    std::vector<int> common;
    for (int w : g.neighbors(e.first))
      if (w != e.second && g.has_edge(w, e.second)) common.push_back(w);
    if (common.size() >= 2)
      return std::array<int, 4>{e.first, e.second, common[0], common[1]};
  }
  return std::nullopt;
}

// Non-adjacent pair with at least three common neighbours: a K_{2,3}
// subgraph, whose spoke contraction yields a diamond.
inline std::optional<std::array<int, 5>> k23_subgraph(const Graph& g) {
  const auto& verts = g.vertices();
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      int x = verts[i], y = verts[j];
      if (g.has_edge(x, y)) continue;
      std::vector<int> common;
      for (int w : g.neighbors(x))
        if (g.has_edge(w, y)) common.push_back(w);
      if (common.size() >= 3)
        return std::array<int, 5>{x, y, common[0], common[1], common[2]};
    }
  return std::nullopt;
}

// Exhaustive minor search: a graph has a diamond minor exactly when some
// sequence of edge contractions exposes a diamond subgraph.  Memoised on
// canonical forms.
inline bool diamond_minor_exhaustive(const Graph& g, std::vector<MinorStep>& steps,
                                     std::set<std::string>& seen) {
  if (auto d = diamond_subgraph(g)) {
    steps.push_back({"diamond_subgraph", {(*d)[0], (*d)[1], (*d)[2], (*d)[3]}});
    return true;
  }
  if (g.vertex_count() < 4 || g.edge_count() < 5) return false;
  for (const Edge& e : g.edges()) {
    Graph h = contract_edge(g, e);
    std::string key = canonical_key(h);
    if (seen.count(key)) continue;
    seen.insert(key);
    steps.push_back({"contract_edge", {e.first, e.second}});
    if (diamond_minor_exhaustive(h, steps, seen)) return true;
    steps.pop_back();
  }
  return false;
}

}  // namespace detail

// Diamond minor (K_4 - e) detection.  Graphs meeting the density hypothesis
// 2e >= 3v - 2 run the reduction: extract a minimal member for r=2, look for
// a diamond or a K_{2,3} directly, otherwise contract the shortest cycle and
// repeat.  Sparser graphs fall back to exhaustive minor search below the cap.
inline DiamondMinorResult has_diamond_minor(const Graph& g, int cap = 14) {
  DiamondMinorResult res;
  bool dense = 2LL * g.edge_count() >= 3LL * g.vertex_count() - 2;
  if (!dense) {
    if (g.vertex_count() > cap)
      throw budget_error("graph order " + std::to_string(g.vertex_count()) +
                             " exceeds the minor-search cap " + std::to_string(cap) +
                             " and the density hypothesis 2e >= 3v - 2 fails",
                         static_cast<std::uint64_t>(cap));
    std::set<std::string> seen;
    res.found = detail::diamond_minor_exhaustive(g, res.steps, seen);
    if (!res.found) res.steps.clear();
    return res;
  }

  Graph cur = g;
  while (true) {
    Graph minimal = find_minimal_subgraph(cur, 2);
    res.steps.push_back({"minimal_subgraph", minimal.vertices()});
    if (auto d = detail::diamond_subgraph(minimal)) {
      res.steps.push_back({"diamond_subgraph", {(*d)[0], (*d)[1], (*d)[2], (*d)[3]}});
      res.found = true;
      return res;
    }
    if (auto k = detail::k23_subgraph(minimal)) {
      // Contracting one spoke of the K_{2,3} merges a part vertex into a
      // common neighbour, leaving a diamond subgraph.
      Graph h = contract_edge(minimal, make_edge((*k)[0], (*k)[2]));
      res.steps.push_back({"contract_edge", {(*k)[0], (*k)[2]}});
      auto d = detail::diamond_subgraph(h);
      if (!d) throw std::logic_error("spoke contraction of a K_{2,3} lost the diamond");
      res.steps.push_back({"diamond_subgraph", {(*d)[0], (*d)[1], (*d)[2], (*d)[3]}});
      res.found = true;
      return res;
    }
    ContractionResult c = contract_shortest_cycle(minimal);
    if (c.parallels_merged)
      throw std::logic_error("contraction merged parallels despite subgraph checks");
    res.steps.push_back({"contract_cycle", c.contracted.vertices});
    if (pebble_sparse(c.graph, 2).sparse)
      throw std::logic_error("contraction of a minimal member lost membership");
    cur = std::move(c.graph);
  }
}

}  // namespace ramsey

#endif  // RAMSEY_CYCLICITY_HPP
