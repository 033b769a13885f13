#ifndef RAMSEY_ORACLE_HPP
#define RAMSEY_ORACLE_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ramsey/canonical.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

namespace detail {

// Union-find with an undo log; no path compression so rollback stays exact.
class RollbackDsu {
public:
  explicit RollbackDsu(int n) : parent_(static_cast<std::size_t>(n)),
                                size_(static_cast<std::size_t>(n), 1) {
    for (int i = 0; i < n; ++i) parent_[static_cast<std::size_t>(i)] = i;
  }

  int find(int x) const {
    while (parent_[static_cast<std::size_t>(x)] != x) x = parent_[static_cast<std::size_t>(x)];
    return x;
  }

  bool same(int a, int b) const { return find(a) == find(b); }

  // False when already connected (nothing logged).
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[static_cast<std::size_t>(a)] < size_[static_cast<std::size_t>(b)]) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    size_[static_cast<std::size_t>(a)] += size_[static_cast<std::size_t>(b)];
    log_.push_back({a, b});
    return true;
  }

  std::size_t mark() const { return log_.size(); }

  void rollback(std::size_t mark) {
    while (log_.size() > mark) {
      auto [a, b] = log_.back();
      log_.pop_back();
      parent_[static_cast<std::size_t>(b)] = b;
      size_[static_cast<std::size_t>(a)] -= size_[static_cast<std::size_t>(b)];
    }
  }

private:
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<std::pair<int, int>> log_;
};

}  // namespace detail

// Ground-truth membership by colouring semantics: true when no
// (r+1)-colouring of E(g) leaves every r-subset of colour classes acyclic.
// The search walks colourings depth-first, pruning a branch as soon as some
// colour-avoiding class gains a cycle; the first edge is pinned to colour 1
// since goodness is colour-permutation invariant.
inline bool oracle_is_ramsey_cyclicity(const Graph& g, int r,
                                       std::uint64_t budget = 100000000ULL) {
  if (r < 2) throw precondition_error("r must be at least 2");
  int e = g.edge_count();
  long double raw = std::pow(static_cast<long double>(r + 1), static_cast<long double>(e));
  if (raw > static_cast<long double>(budget))
    throw budget_error("colouring space (r+1)^e exceeds budget " + std::to_string(budget),
                       budget);
  if (e == 0) return false;  // no cycles at all, the empty colouring is good
  int n = g.vertex_count();
  std::vector<detail::RollbackDsu> avoid(static_cast<std::size_t>(r + 1),
                                         detail::RollbackDsu(n));
  const std::vector<Edge>& edges = g.edges();

  std::function<bool(std::size_t)> good_exists = [&](std::size_t pos) -> bool {
    if (pos == edges.size()) return true;
    int a = g.index_of(edges[pos].first);
    int b = g.index_of(edges[pos].second);
    int limit = pos == 0 ? 1 : r + 1;
    for (int c = 1; c <= limit; ++c) {
      bool cyclic = false;
      for (int i = 1; i <= r + 1 && !cyclic; ++i)
        if (i != c && avoid[static_cast<std::size_t>(i - 1)].same(a, b)) cyclic = true;
      if (cyclic) continue;
      std::vector<std::size_t> marks(static_cast<std::size_t>(r + 1));
      for (int i = 1; i <= r + 1; ++i) {
        marks[static_cast<std::size_t>(i - 1)] = avoid[static_cast<std::size_t>(i - 1)].mark();
        if (i != c) avoid[static_cast<std::size_t>(i - 1)].unite(a, b);
      }
      if (good_exists(pos + 1)) return true;
      for (int i = 1; i <= r + 1; ++i)
        avoid[static_cast<std::size_t>(i - 1)].rollback(marks[static_cast<std::size_t>(i - 1)]);
    }
    return false;
  };

  return !good_exists(0);
}

// Densest violating induced subgraph by full subset enumeration, or nullopt.
// Ties on the violation margin r e - (r+1) v + r break towards fewer
// vertices, then the earlier subset.
inline std::optional<Graph> oracle_density_witness(const Graph& g, int r, int cap = 10) {
  if (r < 2) throw precondition_error("r must be at least 2");
  int n = g.vertex_count();
  if (n > cap)
    throw budget_error("graph order " + std::to_string(n) + " exceeds the subset cap " +
                           std::to_string(cap),
                       static_cast<std::uint64_t>(cap));
  std::optional<Graph> best;
  long long best_margin = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> subset;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) subset.push_back(g.vertices()[static_cast<std::size_t>(i)]);
    Graph h = g.induced(subset);
    long long margin = static_cast<long long>(r) * h.edge_count() -
                       (static_cast<long long>(r + 1) * h.vertex_count() - r);
    if (margin < 0) continue;
    if (!best || margin > best_margin ||
        (margin == best_margin && h.vertex_count() < best->vertex_count())) {
      best = std::move(h);
      best_margin = margin;
    }
  }
  return best;
}

namespace detail {

inline Graph graph_from_bitstring(int n, const std::string& bits) {
  std::vector<int> verts(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) verts[static_cast<std::size_t>(i)] = i;
  std::vector<Edge> edges;
  std::size_t pos = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (bits[pos++] == '1') edges.push_back({i, j});
  return Graph(std::move(verts), std::move(edges));
}

// Connected graphs on n vertices up to isomorphism, grown by attaching one
// vertex with every nonempty neighbourhood to each (n-1)-census graph and
// rejecting isomorphs canonically.  Cached per order.
inline const std::vector<Graph>& connected_census(int n) {
  static std::map<int, std::vector<Graph>> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  if (cache.count(n)) return cache.at(n);
  if (!cache.count(1)) cache[1] = {Graph({0}, {})};
  for (int k = 2; k <= n; ++k) {
    if (cache.count(k)) continue;
    std::set<std::string> seen;
    std::vector<Graph> out;
    for (const Graph& base : cache.at(k - 1)) {
      for (std::uint32_t mask = 1; mask < (1u << (k - 1)); ++mask) {
        std::vector<int> verts = base.vertices();
        verts.push_back(k - 1);
        std::vector<Edge> edges = base.edges();
        for (int i = 0; i < k - 1; ++i)
          if (mask & (1u << i)) edges.push_back({i, k - 1});
        Graph candidate(std::move(verts), std::move(edges));
        std::string key = canonical_bitstring(candidate);
        if (seen.insert(key).second) out.push_back(detail::graph_from_bitstring(k, key));
      }
    }
    cache[k] = std::move(out);
  }
  return cache.at(n);
}

}  // namespace detail

// Streams all connected graphs on v vertices up to isomorphism, in canonical
// order, to the visitor.
template <class Fn>
inline void enumerate_connected_graphs(int v, Fn&& visit) {
  if (v < 1 || v > 8)
    throw budget_error("census supports 1 <= v <= 8, got " + std::to_string(v), 8);
  for (const Graph& g : detail::connected_census(v)) visit(g);
}

inline std::vector<Graph> enumerate_graphs(int v,
                                           const std::function<bool(const Graph&)>& filter) {
  std::vector<Graph> out;
  enumerate_connected_graphs(v, [&](const Graph& g) {
    if (!filter || filter(g)) out.push_back(g);
  });
  return out;
}

}  // namespace ramsey

#endif  // RAMSEY_ORACLE_HPP
