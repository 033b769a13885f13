#ifndef RAMSEY_CLIQUE_NUMBERS_HPP
#define RAMSEY_CLIQUE_NUMBERS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "ramsey/cyclicity.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

// Stirling numbers of the second kind, S(m,k) = k S(m-1,k) + S(m-1,k-1).
inline std::uint64_t stirling2(int m, int k) {
  if (m < 0 || k < 0) throw precondition_error("stirling2 arguments must be nonnegative");
  if (k > m) return 0;
  if (m == 0) return 1;  // k == 0 here
  if (k == 0) return 0;
  std::vector<std::uint64_t> row(static_cast<std::size_t>(k) + 1, 0);
  row[0] = 1;  // S(0,0)
  for (int i = 1; i <= m; ++i) {
    for (int j = std::min(i, k); j >= 1; --j) {
      std::uint64_t scaled = 0;
      if (__builtin_mul_overflow(row[static_cast<std::size_t>(j)],
                                 static_cast<std::uint64_t>(j), &scaled) ||
          __builtin_add_overflow(scaled, row[static_cast<std::size_t>(j - 1)],
                                 &row[static_cast<std::size_t>(j)]))
        throw precondition_error("stirling2 overflows 64 bits at S(" + std::to_string(i) + "," +
                                 std::to_string(j) + ")");
    }
    row[0] = 0;
  }
  return row[static_cast<std::size_t>(k)];
}

// Memoized off-diagonal upper bounds.  Base case: some entry equal to 2
// collapses to the minimum of the others; otherwise the ceiling recursion
// over the r+1 one-step-reduced tuples.
class BoundTable {
public:
  explicit BoundTable(int r) : r_(r) {
    if (r < 2) throw precondition_error("r must be at least 2");
  }

  long long upper_bound(std::vector<int> tuple) {
    if (static_cast<int>(tuple.size()) != r_ + 1)
      throw precondition_error("tuple must have r+1 = " + std::to_string(r_ + 1) + " entries");
    std::sort(tuple.begin(), tuple.end());
    if (tuple.front() < 2) throw precondition_error("all clique orders must be at least 2");
    auto it = memo_.find(tuple);
    if (it != memo_.end()) return it->second;
    long long value;
    if (tuple.front() == 2) {
      value = tuple[1];  // min over the remaining entries; another 2 gives 2
    } else {
      long long sum = 0;
      for (std::size_t i = 0; i < tuple.size(); ++i) {
        std::vector<int> reduced = tuple;
        reduced[i] -= 1;
        sum += upper_bound(std::move(reduced));
      }
      value = (sum + r_ - 1) / r_;  // ceiling of sum / r
    }
    memo_[std::move(tuple)] = value;
    return value;
  }

  int r() const { return r_; }
  const std::map<std::vector<int>, long long>& memo() const { return memo_; }

private:
  int r_;
  std::map<std::vector<int>, long long> memo_;
};

inline long long upper_bound_recursive(int r, std::vector<int> tuple) {
  BoundTable table(r);
  return table.upper_bound(std::move(tuple));
}

inline long long upper_bound_recursive_diagonal(int r, int n) {
  return upper_bound_recursive(r, std::vector<int>(static_cast<std::size_t>(r) + 1, n));
}

// Closed form r(r+2)/(3r+2) (1+1/r)^{(r+1)n} - r.
inline double upper_bound_closed_form(int r, int n) {
  if (r < 2 || n < 2) throw precondition_error("need r >= 2 and n >= 2");
  long double c = static_cast<long double>(r) * (r + 2) / (3.0L * r + 2);
  long double base = 1.0L + 1.0L / r;
  return static_cast<double>(c * std::pow(base, static_cast<long double>(r + 1) * n) - r);
}

struct ProbabilisticBound {
  double bound = 0.0;
  // Probability that a fixed K_n uses at most r colours under a uniformly
  // random (r+1)-colouring; a union-bound diagnostic.
  double clique_good_probability = 0.0;
};

// Pre-asymptotic threshold from the probabilistic deletion argument:
// (n!/(2(2^r-1)))^{1/n} (1+1/r)^{(n+1)/2}.
inline ProbabilisticBound lower_bound_probabilistic(int r, int n) {
  if (r < 2 || n < 2) throw precondition_error("need r >= 2 and n >= 2");
  long double factorial = 1.0L;
  for (int i = 2; i <= n; ++i) factorial *= i;
  long double denom = 2.0L * (std::pow(2.0L, static_cast<long double>(r)) - 1.0L);
  long double threshold = std::pow(factorial / denom, 1.0L / n) *
                          std::pow(1.0L + 1.0L / r, (n + 1) / 2.0L);

  // Scaled Stirling DP: T(m,k) = S(m,k)/(r+1)^m stays bounded, so the sum
  // sum_k k! C(r+1,k) T(e,k) never overflows.
  int e = n * (n - 1) / 2;
  std::vector<long double> t(static_cast<std::size_t>(r) + 1, 0.0L);
  std::vector<long double> prev(static_cast<std::size_t>(r) + 1, 0.0L);
  long double rp1 = static_cast<long double>(r + 1);
  prev[0] = 1.0L;  // T(0,0) = 1
  for (int m = 1; m <= e; ++m) {
    for (int k = 0; k <= r; ++k) {
      long double up = (k >= 1 ? prev[static_cast<std::size_t>(k - 1)] : 0.0L);
      t[static_cast<std::size_t>(k)] =
          (static_cast<long double>(k) * prev[static_cast<std::size_t>(k)] + up) / rp1;
    }
    t[0] = 0.0L;
    prev = t;
  }
  long double probability = 0.0L;
  long double kfact = 1.0L;
  long double binom = static_cast<long double>(r + 1);
  for (int k = 1; k <= r; ++k) {
    kfact *= k;
    probability += kfact * binom * prev[static_cast<std::size_t>(k)];
    binom = binom * (r + 1 - k) / (k + 1);
  }
  return {static_cast<double>(threshold), static_cast<double>(probability)};
}

struct ArrowsResult {
  bool arrows = false;
  std::optional<EdgeColouring> good_colouring;  // certificate when !arrows
  std::uint64_t nodes = 0;
};

// Does every (r+1)-colouring of E(g) admit a K_n on at most r colours?
// Backtracking over edge colourings; a branch dies once some K_n can no
// longer reach r+1 distinct colours.  Colours are canonicalised by first
// occurrence, so the certificate is the lexicographically least good
// colouring.  `budget` caps explored assignments.
inline ArrowsResult arrows_clique(const Graph& g, int r, int n,
                                  std::uint64_t budget = 1000000000ULL) {
  if (r < 1) throw precondition_error("r must be at least 1");
  if (n < 2) throw precondition_error("n must be at least 2");

  // Edge order: degree sum descending, then colexicographic.
  std::vector<Edge> order = g.edges();
  std::sort(order.begin(), order.end(), [&](const Edge& a, const Edge& b) {
    int da = g.degree(a.first) + g.degree(a.second);
    int db = g.degree(b.first) + g.degree(b.second);
    if (da != db) return da > db;
    if (a.second != b.second) return a.second < b.second;
    return a.first < b.first;
  });
  std::map<Edge, int> edge_pos;
  for (std::size_t i = 0; i < order.size(); ++i) edge_pos[order[i]] = static_cast<int>(i);

  // All K_n vertex sets.
  std::vector<std::vector<int>> cliques;
  std::vector<int> pickbuf;
  const std::vector<int>& verts = g.vertices();
  std::function<void(std::size_t)> pick = [&](std::size_t from) {
    if (static_cast<int>(pickbuf.size()) == n) {
      cliques.push_back(pickbuf);
      return;
    }
    for (std::size_t i = from; i < verts.size(); ++i) {
      bool ok = true;
      for (int u : pickbuf)
        if (!g.has_edge(u, verts[i])) ok = false;
      if (!ok) continue;
      pickbuf.push_back(verts[i]);
      pick(i + 1);
      pickbuf.pop_back();
    }
  };
  pick(0);

  int clique_edges = n * (n - 1) / 2;
  std::vector<std::vector<int>> cliques_of_edge(order.size());
  for (std::size_t q = 0; q < cliques.size(); ++q)
    for (std::size_t i = 0; i < cliques[q].size(); ++i)
      for (std::size_t j = i + 1; j < cliques[q].size(); ++j)
        cliques_of_edge[static_cast<std::size_t>(
                            edge_pos.at(make_edge(cliques[q][i], cliques[q][j])))]
            .push_back(static_cast<int>(q));

  std::vector<int> coloured(cliques.size(), 0);
  std::vector<std::uint32_t> mask(cliques.size(), 0);
  std::vector<int> colour(order.size(), 0);
  std::uint64_t nodes = 0;
  bool out_of_budget = false;

  std::function<bool(std::size_t, int)> search = [&](std::size_t pos, int max_used) -> bool {
    if (pos == order.size()) return true;
    int limit = std::min(r + 1, max_used + 1);
    for (int c = 1; c <= limit; ++c) {
      if (++nodes > budget) {
        out_of_budget = true;
        return false;
      }
      bool dead = false;
      std::vector<std::pair<int, std::uint32_t>> undo;
      for (int q : cliques_of_edge[pos]) {
        undo.push_back({q, mask[static_cast<std::size_t>(q)]});
        coloured[static_cast<std::size_t>(q)] += 1;
        mask[static_cast<std::size_t>(q)] |= 1u << c;
        int remaining = clique_edges - coloured[static_cast<std::size_t>(q)];
        if (__builtin_popcount(mask[static_cast<std::size_t>(q)]) + remaining <= r) dead = true;
      }
      if (!dead) {
        colour[pos] = c;
        if (search(pos + 1, std::max(max_used, c))) return true;
        if (out_of_budget) return false;
        colour[pos] = 0;
      }
      for (auto it = undo.rbegin(); it != undo.rend(); ++it) {
        coloured[static_cast<std::size_t>(it->first)] -= 1;
        mask[static_cast<std::size_t>(it->first)] = it->second;
      }
    }
    return false;
  };

  bool good_found = search(0, 0);
  if (out_of_budget)
    throw budget_error("arrows search exceeded budget of " + std::to_string(budget) +
                           " states; raise --budget to proceed",
                       budget);
  ArrowsResult res;
  res.nodes = nodes;
  res.arrows = !good_found;
  if (good_found) {
    EdgeColouring col{r, {}};
    for (std::size_t i = 0; i < order.size(); ++i) col.colours[order[i]] = colour[i];
    res.good_colouring = std::move(col);
  }
  return res;
}

struct ExactNumber {
  std::optional<int> exact;
  int lower = 2;         // largest N known to fail, plus one
  long long upper = 0;   // recursion upper bound, always valid
  std::optional<EdgeColouring> witness;  // good colouring of K_{lower-1}
  bool complete = false;
};

// Least N with K_N arrowing K_n, found by growing N; on budget exhaustion
// the bracketing interval is returned instead.
inline ExactNumber exact_number_small(int r, int n, std::uint64_t budget = 1000000000ULL) {
  if (r < 2 || n < 2) throw precondition_error("need r >= 2 and n >= 2");
  ExactNumber out;
  out.upper = upper_bound_recursive_diagonal(r, n);
  for (int N = std::max(2, n); N <= 64; ++N) {
    ArrowsResult a;
    try {
      a = arrows_clique(Graph::complete(N), r, n, budget);
    } catch (const budget_error&) {
      out.lower = N;
      return out;
    }
    if (a.arrows) {
      out.exact = N;
      out.lower = N;
      out.complete = true;
      return out;
    }
    out.witness = a.good_colouring;
    out.lower = N + 1;
  }
  return out;
}

}  // namespace ramsey

#endif  // RAMSEY_CLIQUE_NUMBERS_HPP
