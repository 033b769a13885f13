#ifndef RAMSEY_SPARSITY_HPP
#define RAMSEY_SPARSITY_HPP

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ramsey/errors.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

// Outcome of testing G^r against the density threshold of the
// characterization: either a violating subgraph H with
// r e(H) >= (r+1) v(H) - r, or (on demand) a partition of E(G^r) into r+1
// forests.
struct SparsityCertificate {
  int r = 0;
  bool sparse = false;
  std::optional<Graph> witness;                 // set when !sparse
  std::vector<std::vector<MultiEdge>> forests;  // filled by forest_decomposition
};

class not_sparse_error : public std::runtime_error {
public:
  not_sparse_error(const std::string& msg, Graph witness)
      : std::runtime_error(msg), witness_(std::move(witness)) {}

  const Graph& witness() const noexcept { return witness_; }

private:
  Graph witness_;
};

namespace detail {

// (k,l)-pebble game state over vertex indices, k = l = r+1.  Inserted edge
// copies are oriented away from the vertex whose pebble they consumed.
struct PebbleState {
  int k = 0;
  std::vector<int> pebbles;
  std::vector<std::vector<int>> out;  // multi out-neighbour lists

  explicit PebbleState(int n, int k_) : k(k_), pebbles(static_cast<std::size_t>(n), k_),
                                        out(static_cast<std::size_t>(n)) {}

  // Move one pebble to `from` by reversing a directed path ending at a vertex
  // outside {a, b} that still holds a pebble.
  bool collect(int from, int a, int b) {
    int n = static_cast<int>(pebbles.size());
    std::vector<int> parent(static_cast<std::size_t>(n), -2);
    std::deque<int> queue{from};
    parent[static_cast<std::size_t>(from)] = -1;
    int goal = -1;
    while (!queue.empty() && goal < 0) {
      int v = queue.front();
      queue.pop_front();
      for (int w : out[static_cast<std::size_t>(v)]) {
        if (parent[static_cast<std::size_t>(w)] != -2) continue;
        parent[static_cast<std::size_t>(w)] = v;
        if (w != a && w != b && pebbles[static_cast<std::size_t>(w)] > 0) {
          goal = w;
          break;
        }
        queue.push_back(w);
      }
    }
    if (goal < 0) return false;
    int v = goal;
    while (parent[static_cast<std::size_t>(v)] >= 0) {
      int p = parent[static_cast<std::size_t>(v)];
      auto& po = out[static_cast<std::size_t>(p)];
      po.erase(std::find(po.begin(), po.end(), v));
      out[static_cast<std::size_t>(v)].push_back(p);
      v = p;
    }
    --pebbles[static_cast<std::size_t>(goal)];
    ++pebbles[static_cast<std::size_t>(from)];
    return true;
  }

  std::vector<int> reach(int a, int b) const {
    std::vector<char> seen(pebbles.size(), 0);
    std::deque<int> queue{a, b};
    seen[static_cast<std::size_t>(a)] = seen[static_cast<std::size_t>(b)] = 1;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : out[static_cast<std::size_t>(v)])
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          queue.push_back(w);
        }
    }
    std::vector<int> res;
    for (std::size_t i = 0; i < seen.size(); ++i)
      if (seen[i]) res.push_back(static_cast<int>(i));
    return res;
  }
};

}  // namespace detail

// (k,l)-pebble game with k = l = r+1 over the multigraph G^r.  Sparse means
// no subgraph H of G has r e(H) >= (r+1) v(H) - r; the failure region of the
// game, restricted to G, is returned as the violating witness.
inline SparsityCertificate pebble_sparse(const Graph& g, int r) {
  if (r < 2) throw precondition_error("r must be at least 2");
  int k = r + 1;
  int n = g.vertex_count();
  detail::PebbleState st(n, k);
  for (const Edge& e : g.edges()) {
    int a = g.index_of(e.first);
    int b = g.index_of(e.second);
    for (int copy = 0; copy < r; ++copy) {
      while (st.pebbles[static_cast<std::size_t>(a)] + st.pebbles[static_cast<std::size_t>(b)] <
             k + 1) {
        if (st.collect(a, a, b)) continue;
        if (st.collect(b, a, b)) continue;
        std::vector<int> region = st.reach(a, b);
        std::vector<int> labels;
        for (int idx : region) labels.push_back(g.vertices()[static_cast<std::size_t>(idx)]);
        Graph witness = g.induced(labels);
        if (static_cast<long long>(r) * witness.edge_count() <
            static_cast<long long>(r + 1) * witness.vertex_count() - r)
          throw std::logic_error("pebble game produced a non-violating witness");
        return {r, false, std::move(witness), {}};
      }
      st.out[static_cast<std::size_t>(a)].push_back(b);
      --st.pebbles[static_cast<std::size_t>(a)];
    }
  }
  return {r, true, std::nullopt, {}};
}

namespace detail {

// Incremental partition of the copies of E(G^r) into `k` forests; one
// augmentation moves edges along a shortest exchange path found by BFS over
// forest indices in ascending order.
class ForestPartition {
public:
  ForestPartition(const Graph& g, int r, int k) : g_(g), r_(r), k_(k) {
    assign_.assign(g.edges().size(), std::vector<int>(static_cast<std::size_t>(r), -1));
  }

  bool insert(int edge_idx, int copy) {
    long long start = id(edge_idx, copy);
    std::map<long long, std::pair<long long, int>> parent;  // id -> (parent id, forest)
    std::deque<long long> queue{start};
    parent[start] = {-1, -1};
    long long accept_id = -1;
    int accept_forest = -1;

    while (!queue.empty() && accept_id < 0) {
      long long cur = queue.front();
      queue.pop_front();
      int ce = static_cast<int>(cur / r_), cc = static_cast<int>(cur % r_);
      Edge e = g_.edges()[static_cast<std::size_t>(ce)];
      for (int f = 0; f < k_ && accept_id < 0; ++f) {
        if (assigned_forest(ce, cc) == f) continue;
        int dup = copy_in_forest(ce, f);
        if (dup < 0) {
          std::vector<int> path_edges = forest_path(f, e.first, e.second);
          if (path_edges.empty()) {
            accept_id = cur;
            accept_forest = f;
            break;
          }
          for (int pe : path_edges) {
            int pc = which_copy(pe, f);
            long long pid = id(pe, pc);
            if (!parent.count(pid)) {
              parent[pid] = {cur, f};
              queue.push_back(pid);
            }
          }
        } else {
          long long pid = id(ce, dup);
          // A second copy of the same edge would close a 2-cycle in forest f.
          if (pid != cur && !parent.count(pid)) {
            parent[pid] = {cur, f};
            queue.push_back(pid);
          }
        }
      }
    }

    if (accept_id < 0) return false;
    // Walk the exchange chain: each node moves into the forest its child
    // vacated; reassignment of a placed copy vacates its old forest.
    long long cur = accept_id;
    int forest = accept_forest;
    while (cur >= 0) {
      int ce = static_cast<int>(cur / r_), cc = static_cast<int>(cur % r_);
      Edge e = g_.edges()[static_cast<std::size_t>(ce)];
      if (copy_in_forest(ce, forest) >= 0 || !forest_path(forest, e.first, e.second).empty())
        throw std::logic_error("forest augmentation produced an invalid swap");
      assign_[static_cast<std::size_t>(ce)][static_cast<std::size_t>(cc)] = forest;
      auto [pid, pforest] = parent.at(cur);
      forest = pforest;
      cur = pid;
    }
    return true;
  }

  std::vector<std::vector<MultiEdge>> forests() const {
    std::vector<std::vector<MultiEdge>> out(static_cast<std::size_t>(k_));
    for (std::size_t ei = 0; ei < assign_.size(); ++ei)
      for (int c = 0; c < r_; ++c) {
        int f = assign_[ei][static_cast<std::size_t>(c)];
        Edge e = g_.edges()[ei];
        out[static_cast<std::size_t>(f)].push_back({e.first, e.second, c});
      }
    return out;
  }

private:
  long long id(int edge_idx, int copy) const {
    return static_cast<long long>(edge_idx) * r_ + copy;
  }

  int assigned_forest(int edge_idx, int copy) const {
    return assign_[static_cast<std::size_t>(edge_idx)][static_cast<std::size_t>(copy)];
  }

  int copy_in_forest(int edge_idx, int f) const {
    for (int c = 0; c < r_; ++c)
      if (assign_[static_cast<std::size_t>(edge_idx)][static_cast<std::size_t>(c)] == f) return c;
    return -1;
  }

  int which_copy(int edge_idx, int f) const {
    int c = copy_in_forest(edge_idx, f);
    if (c < 0) throw std::logic_error("edge expected in forest");
    return c;
  }

  // Edge indices on the unique path between u and v inside forest f; empty
  // when u and v lie in different components.
  std::vector<int> forest_path(int f, int u, int v) const {
    std::map<int, std::pair<int, int>> parent;  // label -> (parent label, edge idx)
    std::deque<int> queue{u};
    parent[u] = {-1, -1};
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      if (x == v) break;
      for (std::size_t ei = 0; ei < g_.edges().size(); ++ei) {
        if (copy_in_forest(static_cast<int>(ei), f) < 0) continue;
        Edge e = g_.edges()[ei];
        int y = -1;
        if (e.first == x) y = e.second;
        if (e.second == x) y = e.first;
        if (y < 0 || parent.count(y)) continue;
        parent[y] = {x, static_cast<int>(ei)};
        queue.push_back(y);
      }
    }
    std::vector<int> path;
    if (!parent.count(v)) return path;
    int x = v;
    while (x != u) {
      path.push_back(parent.at(x).second);
      x = parent.at(x).first;
    }
    return path;
  }

  const Graph& g_;
  int r_;
  int k_;
  std::vector<std::vector<int>> assign_;  // per edge, per copy: forest or -1
};

}  // namespace detail

// Validates a certificate against its graph: witnesses must violate the
// density inequality inside g, forests must partition E(G^r) with acyclic
// underlying edge sets and no forest holding two copies of one edge.
inline bool verify_certificate(const Graph& g, const SparsityCertificate& cert) {
  int r = cert.r;
  if (!cert.sparse) {
    if (!cert.witness) return false;
    const Graph& h = *cert.witness;
    if (!g.contains_subgraph(h)) return false;
    return static_cast<long long>(r) * h.edge_count() >=
           static_cast<long long>(r + 1) * h.vertex_count() - r;
  }
  if (cert.forests.empty()) return true;  // verdict-only certificate
  if (static_cast<int>(cert.forests.size()) != r + 1) return false;
  std::map<std::pair<Edge, int>, int> seen;
  for (std::size_t f = 0; f < cert.forests.size(); ++f) {
    std::vector<Edge> underlying;
    for (const MultiEdge& me : cert.forests[f]) {
      Edge e = make_edge(me.u, me.v);
      if (!g.has_edge(e.first, e.second)) return false;
      if (me.copy < 0 || me.copy >= r) return false;
      if (seen.count({e, me.copy})) return false;
      seen[{e, me.copy}] = static_cast<int>(f);
      if (std::find(underlying.begin(), underlying.end(), e) != underlying.end())
        return false;  // two copies of one edge in a single forest
      underlying.push_back(e);
    }
    // Acyclic: |edges| < |touched vertices| per component; union-find.
    std::map<int, int> root;
    std::function<int(int)> find = [&](int x) {
      while (root[x] != x) x = root[x] = root[root[x]];
      return x;
    };
    for (const Edge& e : underlying) {
      if (!root.count(e.first)) root[e.first] = e.first;
      if (!root.count(e.second)) root[e.second] = e.second;
      int a = find(e.first), b = find(e.second);
      if (a == b) return false;
      root[a] = b;
    }
  }
  return seen.size() == static_cast<std::size_t>(g.edge_count()) * static_cast<std::size_t>(r);
}

// Nash-Williams style decomposition of E(G^r) into r+1 forests.  Requires a
// sparse input; the violating witness rides on the exception otherwise.
inline SparsityCertificate forest_decomposition(const Graph& g, int r) {
  SparsityCertificate cert = pebble_sparse(g, r);
  if (!cert.sparse)
    throw not_sparse_error("graph is not sparse; violating subgraph attached",
                           *cert.witness);
  detail::ForestPartition part(g, r, r + 1);
  for (std::size_t ei = 0; ei < g.edges().size(); ++ei)
    for (int c = 0; c < r; ++c)
      if (!part.insert(static_cast<int>(ei), c))
        throw std::logic_error("forest augmentation failed on a sparse graph");
  cert.forests = part.forests();
  if (!verify_certificate(g, cert))
    throw std::logic_error("forest decomposition failed verification");
  return cert;
}

}  // namespace ramsey

#endif  // RAMSEY_SPARSITY_HPP
