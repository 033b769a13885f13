#ifndef RAMSEY_PLANARITY_HPP
#define RAMSEY_PLANARITY_HPP

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "ramsey/graph.hpp"
#include "ramsey/graph_ops.hpp"

namespace ramsey {

namespace detail {

// Biconnected components as edge sets (Tarjan, edge stack).
inline std::vector<std::vector<Edge>> biconnected_blocks(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), -1);
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::vector<Edge> stack;
  std::vector<std::vector<Edge>> blocks;
  int timer = 0;

  std::function<void(int)> dfs = [&](int u) {
    std::size_t ui = static_cast<std::size_t>(g.index_of(u));
    disc[ui] = low[ui] = timer++;
    for (int w : g.neighbors(u)) {
      std::size_t wi = static_cast<std::size_t>(g.index_of(w));
      if (disc[wi] < 0) {
        parent[wi] = u;
        stack.push_back(make_edge(u, w));
        dfs(w);
        low[ui] = std::min(low[ui], low[wi]);
        if (low[wi] >= disc[ui]) {
          std::vector<Edge> block;
          Edge top = make_edge(u, w);
          while (!stack.empty()) {
            Edge e = stack.back();
            stack.pop_back();
            block.push_back(e);
            if (e == top) break;
          }
          blocks.push_back(std::move(block));
        }
      } else if (w != parent[ui] && disc[wi] < disc[ui]) {
        stack.push_back(make_edge(u, w));
        low[ui] = std::min(low[ui], disc[wi]);
      }
    }
  };

  for (int v : g.vertices())
    if (disc[static_cast<std::size_t>(g.index_of(v))] < 0) dfs(v);
  return blocks;
}

// Demoucron-Malgrange-Pertuiset incremental embedding of one 2-connected
// block.  Fragments with a single admissible face are embedded first; a
// fragment with none certifies non-planarity.
inline bool dmp_planar_block(const Graph& b) {
  int n = b.vertex_count();
  int m = b.edge_count();
  if (n < 5 || m <= n) return true;  // edge, cycle, or too small for K5/K33
  if (m > 3 * n - 6) return false;

  auto cyc = girth_cycle(b);
  std::set<Edge> embedded_edges;
  std::set<int> embedded_verts(cyc->vertices.begin(), cyc->vertices.end());
  for (const Edge& e : cyc->edges) embedded_edges.insert(e);
  std::vector<std::vector<int>> faces{cyc->vertices, cyc->vertices};

  struct Fragment {
    std::set<int> attach;
    std::vector<int> interior;  // empty for a chord
    Edge chord{0, 0};
    bool is_chord = false;
  };

  while (embedded_edges.size() < static_cast<std::size_t>(m)) {
    std::vector<Fragment> fragments;
    for (const Edge& e : b.edges()) {
      if (embedded_edges.count(e)) continue;
      if (embedded_verts.count(e.first) && embedded_verts.count(e.second)) {
        Fragment f;
        f.attach = {e.first, e.second};
        f.chord = e;
        f.is_chord = true;
        fragments.push_back(std::move(f));
      }
    }
    std::set<int> assigned;
    for (int v : b.vertices()) {
      if (embedded_verts.count(v) || assigned.count(v)) continue;
      Fragment f;
      std::deque<int> queue{v};
      assigned.insert(v);
      while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        f.interior.push_back(x);
        for (int w : b.neighbors(x)) {
          if (embedded_verts.count(w)) {
            f.attach.insert(w);
          } else if (!assigned.count(w)) {
            assigned.insert(w);
            queue.push_back(w);
          }
        }
      }
      fragments.push_back(std::move(f));
    }

    // Admissible faces per fragment.
    int pick = -1, pick_face = -1;
    for (std::size_t fi = 0; fi < fragments.size(); ++fi) {
      int count = 0, first_face = -1;
      for (std::size_t k = 0; k < faces.size(); ++k) {
        bool ok = true;
        for (int a : fragments[fi].attach)
          if (std::find(faces[k].begin(), faces[k].end(), a) == faces[k].end()) ok = false;
        if (ok) {
          ++count;
          if (first_face < 0) first_face = static_cast<int>(k);
        }
      }
      if (count == 0) return false;
      if (count == 1) {
        pick = static_cast<int>(fi);
        pick_face = first_face;
        break;
      }
      if (pick < 0) {
        pick = static_cast<int>(fi);
        pick_face = first_face;
      }
    }

    const Fragment& f = fragments[static_cast<std::size_t>(pick)];
    std::vector<int> path;
    if (f.is_chord) {
      path = {f.chord.first, f.chord.second};
    } else {
      // Path between two attachment vertices through the fragment interior.
      int a = *f.attach.begin();
      int target = *std::next(f.attach.begin());
      std::map<int, int> from;
      std::deque<int> queue;
      for (int w : b.neighbors(a))
        if (!embedded_verts.count(w) && !from.count(w)) {
          from[w] = a;
          queue.push_back(w);
        }
      int hit = -1;
      while (!queue.empty() && hit < 0) {
        int x = queue.front();
        queue.pop_front();
        for (int w : b.neighbors(x)) {
          if (w == target) {
            from[w] = x;
            hit = w;
            break;
          }
          if (!embedded_verts.count(w) && !from.count(w)) {
            from[w] = x;
            queue.push_back(w);
          }
        }
      }
      int x = hit;
      while (x != a) {
        path.push_back(x);
        x = from.at(x);
      }
      path.push_back(a);
      std::reverse(path.begin(), path.end());
    }

    for (std::size_t i = 0; i + 1 < path.size(); ++i)
      embedded_edges.insert(make_edge(path[i], path[i + 1]));
    for (int x : path) embedded_verts.insert(x);

    // Split the face along the path.
    std::vector<int> face = faces[static_cast<std::size_t>(pick_face)];
    faces.erase(faces.begin() + pick_face);
    auto ipos = std::find(face.begin(), face.end(), path.front()) - face.begin();
    auto jpos = std::find(face.begin(), face.end(), path.back()) - face.begin();
    std::size_t fs = face.size();
    std::vector<int> arc1, arc2;
    for (std::size_t t = static_cast<std::size_t>(ipos);; t = (t + 1) % fs) {
      arc1.push_back(face[t]);
      if (t == static_cast<std::size_t>(jpos)) break;
    }
    for (std::size_t t = static_cast<std::size_t>(jpos);; t = (t + 1) % fs) {
      arc2.push_back(face[t]);
      if (t == static_cast<std::size_t>(ipos)) break;
    }
    std::vector<int> face1 = arc1;
    for (std::size_t t = path.size() - 2; t >= 1; --t) face1.push_back(path[t]);
    std::vector<int> face2 = arc2;
    for (std::size_t t = 1; t + 1 < path.size(); ++t) face2.push_back(path[t]);
    faces.push_back(std::move(face1));
    faces.push_back(std::move(face2));
  }
  return true;
}

}  // namespace detail

// Planarity by testing each biconnected block.
inline bool is_planar(const Graph& g) {
  if (g.vertex_count() <= 4) return true;
  for (const std::vector<Edge>& block : detail::biconnected_blocks(g)) {
    Graph h = Graph::from_edges(block);
    if (!detail::dmp_planar_block(h)) return false;
  }
  return true;
}

}  // namespace ramsey

#endif  // RAMSEY_PLANARITY_HPP
