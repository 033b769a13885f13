#ifndef RAMSEY_CANONICAL_HPP
#define RAMSEY_CANONICAL_HPP

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

// Minimum upper-triangle adjacency bitstring (column-major, '0'/'1' chars)
// over all vertex orderings.  Two graphs are isomorphic exactly when their
// strings and orders agree.  Branch and bound on the shared prefix keeps the
// search far below n! in practice.
inline std::string canonical_bitstring(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0) return "";
  std::vector<std::vector<char>> adj(static_cast<std::size_t>(n),
                                     std::vector<char>(static_cast<std::size_t>(n), 0));
  for (const Edge& e : g.edges()) {
    int i = g.index_of(e.first), j = g.index_of(e.second);
    adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
    adj[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = 1;
  }
  std::size_t total = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::string best(total, '1');
  bool have_best = false;
  std::vector<int> perm;
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::string cur(total, '0');

  // cmp: 0 while equal to the best prefix, -1 once strictly below.  A best
  // replacement can leave -1 stale on the stack, so leaves re-compare fully;
  // pruning stays sound because a stale 0 prefix still matches the new best.
  std::function<void(int, int)> place = [&](int pos, int cmp) {
    if (pos == n) {
      if (!have_best || cur < best) {
        best = cur;
        have_best = true;
      }
      return;
    }
    std::size_t col_start = static_cast<std::size_t>(pos) * (pos - 1) / 2;
    for (int v = 0; v < n; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      int col_cmp = cmp;
      bool prune = false;
      for (int i = 0; i < pos; ++i) {
        char bit = adj[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])]
                      [static_cast<std::size_t>(v)]
                       ? '1'
                       : '0';
        cur[col_start + static_cast<std::size_t>(i)] = bit;
        if (col_cmp == 0 && have_best) {
          char b = best[col_start + static_cast<std::size_t>(i)];
          if (bit > b) {
            prune = true;
            break;
          }
          if (bit < b) col_cmp = -1;
        }
      }
      if (prune) continue;
      used[static_cast<std::size_t>(v)] = 1;
      perm.push_back(v);
      place(pos + 1, col_cmp);
      perm.pop_back();
      used[static_cast<std::size_t>(v)] = 0;
    }
  };

  place(0, 0);
  return best;
}

// Canonical key including the order, suitable for hashing distinct sizes.
inline std::string canonical_key(const Graph& g) {
  return std::to_string(g.vertex_count()) + ":" + canonical_bitstring(g);
}

inline bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  auto degseq = [](const Graph& g) {
    std::vector<int> d;
    for (int v : g.vertices()) d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degseq(a) != degseq(b)) return false;
  return canonical_bitstring(a) == canonical_bitstring(b);
}

}  // namespace ramsey

#endif  // RAMSEY_CANONICAL_HPP
