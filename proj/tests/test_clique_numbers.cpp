#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <functional>
#include <set>
#include <vector>

#include "ramsey/canonical.hpp"
#include "ramsey/clique_numbers.hpp"
#include "ramsey/generators.hpp"
#include "ramsey/graph_ops.hpp"

using namespace ramsey;

namespace {

// Test-side oracle: count partitions of an m-set into k nonempty blocks by
// direct enumeration of assignments (canonical block order).
std::uint64_t stirling_brute(int m, int k) {
  if (m == 0) return k == 0 ? 1 : 0;
  std::uint64_t count = 0;
  std::vector<int> block(static_cast<std::size_t>(m), 0);
  std::function<void(int, int)> rec = [&](int i, int used) {
    if (i == m) {
      if (used == k) ++count;
      return;
    }
    for (int b = 0; b <= used && b < k; ++b) {
      block[static_cast<std::size_t>(i)] = b;
      rec(i + 1, std::max(used, b + 1));
    }
  };
  rec(0, 0);
  return count;
}

// Every K_n of g uses at least r+1 colours under c.
bool colouring_is_good(const Graph& g, const EdgeColouring& c, int r, int n) {
  std::vector<int> pickbuf;
  const std::vector<int>& verts = g.vertices();
  bool good = true;
  std::function<void(std::size_t)> pick = [&](std::size_t from) {
    if (!good) return;
    if (static_cast<int>(pickbuf.size()) == n) {
      std::set<int> used;
      for (std::size_t i = 0; i < pickbuf.size(); ++i)
        for (std::size_t j = i + 1; j < pickbuf.size(); ++j)
          used.insert(c.colour_of(make_edge(pickbuf[i], pickbuf[j])));
      if (static_cast<int>(used.size()) <= r) good = false;
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
  return good;
}

}  // namespace

TEST_CASE("stirling numbers match brute-force partition counts up to m=10") {
  REQUIRE(stirling2(0, 0) == 1);
  for (int m = 1; m <= 10; ++m) {
    REQUIRE(stirling2(m, 0) == 0);
    for (int k = 0; k <= m; ++k) REQUIRE(stirling2(m, k) == stirling_brute(m, k));
  }
  REQUIRE(stirling2(3, 2) == 3);
  REQUIRE(stirling2(6, 3) == 90);
  REQUIRE(stirling2(6, 2) == 31);
  REQUIRE(stirling2(4, 7) == 0);
}

TEST_CASE("K5 arrows K3 at r=2, K4 does not") {
  auto k5 = arrows_clique(Graph::complete(5), 2, 3);
  REQUIRE(k5.arrows);

  auto k4 = arrows_clique(Graph::complete(4), 2, 3);
  REQUIRE(!k4.arrows);
  REQUIRE(k4.good_colouring);
  const EdgeColouring& c = *k4.good_colouring;
  REQUIRE(colouring_is_good(Graph::complete(4), c, 2, 3));
  // The only good colourings of K4 are the three perfect matchings.
  REQUIRE(c.colour_of({0, 1}) == c.colour_of({2, 3}));
  REQUIRE(c.colour_of({0, 2}) == c.colour_of({1, 3}));
  REQUIRE(c.colour_of({0, 3}) == c.colour_of({1, 2}));
  std::set<int> used{c.colour_of({0, 1}), c.colour_of({0, 2}), c.colour_of({0, 3})};
  REQUIRE(used.size() == 3);
}

TEST_CASE("a clique with e(K_n) = r colours always arrows") {
  // e(K4) = 6, so with r = 6 any colouring of a host containing K4 works.
  auto res = arrows_clique(Graph::complete(5), 6, 4);
  REQUIRE(res.arrows);
}

TEST_CASE("graphs without K_n never arrow it") {
  auto res = arrows_clique(Graph::cycle(5), 2, 3);
  REQUIRE(!res.arrows);
  REQUIRE(res.good_colouring);
}

TEST_CASE("arrows search respects its budget") {
  REQUIRE_THROWS_AS(arrows_clique(Graph::complete(6), 2, 3, 10), budget_error);
}

TEST_CASE("arrowing is monotone under supergraphs (spot check)") {
  // K5 arrows (2,3); so does K6 and K5 plus a pendant vertex.
  REQUIRE(arrows_clique(Graph::complete(6), 2, 3).arrows);
  Graph k5p = cone(Graph::complete(5), 1);
  REQUIRE(arrows_clique(k5p, 2, 3).arrows);
}

TEST_CASE("exact small numbers") {
  auto r23 = exact_number_small(2, 3);
  REQUIRE(r23.exact);
  REQUIRE(*r23.exact == 5);
  REQUIRE(r23.witness);  // good colouring of K4
  REQUIRE(colouring_is_good(Graph::complete(4), *r23.witness, 2, 3));

  for (int r : {2, 3, 4}) {
    auto res = exact_number_small(r, 2);
    REQUIRE(res.exact);
    REQUIRE(*res.exact == 2);
  }
}

TEST_CASE("exact search for (2,4) brackets at 8 under a small budget") {
  auto res = exact_number_small(2, 4, 3000000);
  REQUIRE(!res.exact);
  REQUIRE(res.lower == 8);
  REQUIRE(res.upper >= 8);
  REQUIRE(res.witness);
  REQUIRE(colouring_is_good(Graph::complete(7), *res.witness, 2, 4));
}

TEST_CASE("recursion base cases and small values") {
  REQUIRE(upper_bound_recursive(2, {2, 3, 3}) == 3);
  REQUIRE(upper_bound_recursive(2, {2, 2, 5}) == 2);
  REQUIRE(upper_bound_recursive(2, {3, 3, 3}) == 5);
  REQUIRE(upper_bound_recursive(2, {3, 3, 4}) == 6);  // ceil((3+3+5)/2)
  REQUIRE(upper_bound_recursive_diagonal(2, 3) == 5);
  REQUIRE_THROWS_AS(upper_bound_recursive(2, {1, 3, 3}), precondition_error);
  REQUIRE_THROWS_AS(upper_bound_recursive(2, {3, 3}), precondition_error);
}

TEST_CASE("recursion is symmetric in its tuple") {
  REQUIRE(upper_bound_recursive(2, {3, 4, 5}) == upper_bound_recursive(2, {5, 3, 4}));
  REQUIRE(upper_bound_recursive(3, {2, 3, 4, 5}) == upper_bound_recursive(3, {5, 4, 3, 2}));
}

TEST_CASE("memo entries obey the base case and the ceiling recursion") {
  BoundTable table(2);
  table.upper_bound({5, 5, 5});
  for (const auto& [tuple, value] : table.memo()) {
    if (tuple.front() == 2) {
      REQUIRE(value == tuple[1]);
    } else {
      long long sum = 0;
      for (std::size_t i = 0; i < tuple.size(); ++i) {
        std::vector<int> reduced = tuple;
        reduced[i] -= 1;
        sum += upper_bound_recursive(2, reduced);
      }
      REQUIRE(value == (sum + 1) / 2);
    }
  }
}

TEST_CASE("closed form values") {
  REQUIRE(upper_bound_closed_form(2, 2) == Catch::Approx(9.390625).epsilon(1e-9));
  REQUIRE(upper_bound_closed_form(2, 3) == Catch::Approx(36.443359375).epsilon(1e-9));
  for (int r : {2, 3, 4})
    for (int n = 2; n < 8; ++n)
      REQUIRE(upper_bound_closed_form(r, n) < upper_bound_closed_form(r, n + 1));
}

TEST_CASE("recursive diagonal stays within the closed form") {
  for (int r : {2, 3, 4})
    for (int n = 2; n <= 6; ++n)
      REQUIRE(static_cast<double>(upper_bound_recursive_diagonal(r, n)) <=
              upper_bound_closed_form(r, n) + 1e-9);
}

TEST_CASE("probabilistic lower bound values") {
  auto b = lower_bound_probabilistic(2, 4);
  // Threshold (24/6)^{1/4} (3/2)^{5/2}; probability (3 S(6,1) + 6 S(6,2))/3^6.
  REQUIRE(b.bound == Catch::Approx(std::pow(4.0, 0.25) * std::pow(1.5, 2.5)).epsilon(1e-9));
  REQUIRE(b.clique_good_probability ==
          Catch::Approx((3.0 * 1 + 6.0 * 31) / 729.0).epsilon(1e-9));

  for (int r : {2, 3, 4}) REQUIRE(lower_bound_probabilistic(r, 2).bound <= 2.0);
}

TEST_CASE("lower bound sits below the closed form across the sweep") {
  for (int r : {2, 3, 4})
    for (int n = 2; n <= 8; ++n)
      REQUIRE(lower_bound_probabilistic(r, n).bound < upper_bound_closed_form(r, n));
}

TEST_CASE("sandwich: lower <= exact <= recursive diagonal where exact is known") {
  auto r23 = exact_number_small(2, 3);
  REQUIRE(lower_bound_probabilistic(2, 3).bound <= *r23.exact);
  REQUIRE(*r23.exact <= upper_bound_recursive_diagonal(2, 3));
  for (int r : {2, 3, 4})
    for (int n = 2; n <= 6; ++n)
      REQUIRE(lower_bound_probabilistic(r, n).bound <=
              static_cast<double>(upper_bound_recursive_diagonal(r, n)));
}

TEST_CASE("chromatic obstruction on tiny instances") {
  // Any graph arrowing K_3 at r=2 has chromatic number at least R_{1/2}(3)=5.
  REQUIRE(chromatic_number(Graph::complete(5)) >= 5);
  Graph fam = gen_odd_cycle_family(1);
  REQUIRE(arrows_clique(fam, 2, 3).arrows);
  REQUIRE(chromatic_number(fam) >= 5);
}

TEST_CASE("cone composition at type level") {
  Graph k5 = cone(Graph::complete(4), 1);
  REQUIRE(is_isomorphic(k5, Graph::complete(5)));
  REQUIRE(arrows_clique(k5, 2, 3).arrows);
}
