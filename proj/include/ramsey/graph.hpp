#ifndef RAMSEY_GRAPH_HPP
#define RAMSEY_GRAPH_HPP

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ramsey/errors.hpp"

namespace ramsey {

// Edges are stored normalized with first endpoint < second endpoint.
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) {
  if (u == v)
    throw precondition_error("loop edge at vertex " + std::to_string(u));
  return u < v ? Edge{u, v} : Edge{v, u};
}

// Simple undirected graph over stable integer vertex labels.  Values are
// immutable after construction; every operation returns a fresh graph.
class Graph {
public:
  Graph() = default;

  Graph(std::vector<int> vertices, std::vector<Edge> edges) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    verts_ = std::move(vertices);
    for (Edge& e : edges) e = make_edge(e.first, e.second);
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 0; i + 1 < edges.size(); ++i)
      if (edges[i] == edges[i + 1])
        throw precondition_error("duplicate edge (" + std::to_string(edges[i].first) +
                                 "," + std::to_string(edges[i].second) + ")");
    for (const Edge& e : edges)
      if (!has_vertex(e.first) || !has_vertex(e.second))
        throw precondition_error("edge endpoint is not a vertex: (" +
                                 std::to_string(e.first) + "," + std::to_string(e.second) + ")");
    edges_ = std::move(edges);
    adj_.assign(verts_.size(), {});
    for (const Edge& e : edges_) {
      adj_[static_cast<std::size_t>(index_of(e.first))].push_back(e.second);
      adj_[static_cast<std::size_t>(index_of(e.second))].push_back(e.first);
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
  }

  // Vertices are exactly the edge endpoints; isolated vertices cannot be
  // expressed this way.
  static Graph from_edges(std::vector<Edge> edges) {
    std::vector<int> verts;
    for (const Edge& e : edges) {
      verts.push_back(e.first);
      verts.push_back(e.second);
    }
    return Graph(std::move(verts), std::move(edges));
  }

  static Graph complete(int n) {
    std::vector<int> verts(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) verts[static_cast<std::size_t>(i)] = i;
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
    return Graph(std::move(verts), std::move(edges));
  }

  static Graph cycle(int n) {
    if (n < 3) throw precondition_error("cycle needs at least 3 vertices");
    std::vector<int> verts(static_cast<std::size_t>(n));
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
      verts[static_cast<std::size_t>(i)] = i;
      edges.push_back(make_edge(i, (i + 1) % n));
    }
    return Graph(std::move(verts), std::move(edges));
  }

  static Graph path(int n) {
    std::vector<int> verts(static_cast<std::size_t>(n));
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
      verts[static_cast<std::size_t>(i)] = i;
      if (i + 1 < n) edges.push_back({i, i + 1});
    }
    return Graph(std::move(verts), std::move(edges));
  }

  int vertex_count() const { return static_cast<int>(verts_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<int>& vertices() const { return verts_; }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_vertex(int v) const {
    return std::binary_search(verts_.begin(), verts_.end(), v);
  }

  bool has_edge(int u, int v) const {
    if (u == v) return false;
    return std::binary_search(edges_.begin(), edges_.end(), make_edge(u, v));
  }

  // Index of a label in the sorted vertex list; -1 if absent.
  int index_of(int label) const {
    auto it = std::lower_bound(verts_.begin(), verts_.end(), label);
    if (it == verts_.end() || *it != label) return -1;
    return static_cast<int>(it - verts_.begin());
  }

  // Sorted labels adjacent to `label`.
  const std::vector<int>& neighbors(int label) const {
    int i = index_of(label);
    if (i < 0) throw precondition_error("no vertex " + std::to_string(label));
    return adj_[static_cast<std::size_t>(i)];
  }

  int degree(int label) const { return static_cast<int>(neighbors(label).size()); }

  int min_degree() const {
    int d = -1;
    for (int v : verts_) {
      int dv = degree(v);
      if (d < 0 || dv < d) d = dv;
    }
    return d;
  }

  Graph without_edge(Edge e) const {
    e = make_edge(e.first, e.second);
    if (!has_edge(e.first, e.second))
      throw precondition_error("no edge (" + std::to_string(e.first) + "," +
                               std::to_string(e.second) + ")");
    std::vector<Edge> edges;
    for (const Edge& f : edges_)
      if (f != e) edges.push_back(f);
    return Graph(verts_, std::move(edges));
  }

  Graph without_vertex(int v) const {
    if (!has_vertex(v)) throw precondition_error("no vertex " + std::to_string(v));
    std::vector<int> verts;
    for (int w : verts_)
      if (w != v) verts.push_back(w);
    std::vector<Edge> edges;
    for (const Edge& e : edges_)
      if (e.first != v && e.second != v) edges.push_back(e);
    return Graph(std::move(verts), std::move(edges));
  }

  // Subgraph induced on `subset`, keeping all edges inside it.
  Graph induced(std::vector<int> subset) const {
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    std::vector<Edge> edges;
    for (const Edge& e : edges_)
      if (std::binary_search(subset.begin(), subset.end(), e.first) &&
          std::binary_search(subset.begin(), subset.end(), e.second))
        edges.push_back(e);
    return Graph(std::move(subset), std::move(edges));
  }

  bool is_connected() const {
    if (verts_.empty()) return true;
    std::vector<char> seen(verts_.size(), 0);
    std::vector<int> stack{verts_[0]};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : neighbors(v)) {
        std::size_t wi = static_cast<std::size_t>(index_of(w));
        if (!seen[wi]) {
          seen[wi] = 1;
          ++count;
          stack.push_back(w);
        }
      }
    }
    return count == verts_.size();
  }

  // True when the other graph has a subset of our vertices and edges.
  bool contains_subgraph(const Graph& h) const {
    for (int v : h.vertices())
      if (!has_vertex(v)) return false;
    for (const Edge& e : h.edges())
      if (!has_edge(e.first, e.second)) return false;
    return true;
  }

  bool operator==(const Graph& o) const {
    return verts_ == o.verts_ && edges_ == o.edges_;
  }
  bool operator!=(const Graph& o) const { return !(*this == o); }

private:
  std::vector<int> verts_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

// Closed walk through distinct vertices; consecutive vertices are adjacent in
// the host graph, as is the last/first pair.
struct Cycle {
  std::vector<int> vertices;
  std::vector<Edge> edges;

  int length() const { return static_cast<int>(vertices.size()); }
};

inline Cycle make_cycle(const Graph& g, std::vector<int> vertex_sequence) {
  if (vertex_sequence.size() < 3)
    throw precondition_error("cycle length must be at least 3");
  Cycle c;
  c.vertices = std::move(vertex_sequence);
  for (std::size_t i = 0; i < c.vertices.size(); ++i) {
    int u = c.vertices[i];
    int v = c.vertices[(i + 1) % c.vertices.size()];
    if (!g.has_edge(u, v))
      throw precondition_error("cycle vertices " + std::to_string(u) + "," +
                               std::to_string(v) + " are not adjacent");
    c.edges.push_back(make_edge(u, v));
  }
  return c;
}

// One of the r distinguishable copies of an edge of the base graph.
struct MultiEdge {
  int u = 0;
  int v = 0;
  int copy = 0;

  bool operator==(const MultiEdge& o) const {
    return u == o.u && v == o.v && copy == o.copy;
  }
  bool operator<(const MultiEdge& o) const {
    if (u != o.u) return u < o.u;
    if (v != o.v) return v < o.v;
    return copy < o.copy;
  }
};

// Multigraph arising from a simple graph by replacing each edge with r
// parallel copies.
struct Multigraph {
  std::vector<int> vertices;
  std::vector<MultiEdge> edges;
};

inline Multigraph r_fold_inflation(const Graph& g, int r) {
  if (r < 1) throw precondition_error("inflation factor must be positive");
  Multigraph m;
  m.vertices = g.vertices();
  for (const Edge& e : g.edges())
    for (int c = 0; c < r; ++c) m.edges.push_back({e.first, e.second, c});
  return m;
}

// --- graph6 and edge-list text formats -------------------------------------
//
// graph6 (n <= 62): one byte 63+n, then the upper triangle of the adjacency
// matrix in column-major order, packed big-endian into 6-bit groups, each
// group offset by 63.  Trailing pad bits must be zero.

inline std::string encode_graph6(const Graph& g) {
  int n = g.vertex_count();
  if (n > 62)
    throw precondition_error("graph6 encoding supports at most 62 vertices");
  std::string out;
  out.push_back(static_cast<char>(63 + n));
  const std::vector<int>& verts = g.vertices();
  int bits = n * (n - 1) / 2;
  int groups = (bits + 5) / 6;
  std::vector<int> bit(static_cast<std::size_t>(groups) * 6, 0);
  int pos = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      bit[static_cast<std::size_t>(pos++)] =
          g.has_edge(verts[static_cast<std::size_t>(i)], verts[static_cast<std::size_t>(j)]) ? 1 : 0;
    }
  for (int gi = 0; gi < groups; ++gi) {
    int value = 0;
    for (int b = 0; b < 6; ++b) value = (value << 1) | bit[static_cast<std::size_t>(gi * 6 + b)];
    out.push_back(static_cast<char>(63 + value));
  }
  return out;
}

inline std::string encode_edge_list(const Graph& g) {
  std::ostringstream out;
  for (const Edge& e : g.edges()) out << e.first << ' ' << e.second << '\n';
  return out.str();
}

namespace detail {

inline Graph decode_graph6_token(const std::string& tok) {
  if (tok.empty()) throw parse_error("empty graph6 string (byte 0)", 0);
  unsigned char header = static_cast<unsigned char>(tok[0]);
  if (header == 126)
    throw parse_error("multi-byte graph6 headers are not supported (byte 0)", 0);
  if (header < 63 || header > 63 + 62)
    throw parse_error("bad graph6 header byte " + std::to_string(int(header)) + " (byte 0)", 0);
  int n = static_cast<int>(header) - 63;
  int bits = n * (n - 1) / 2;
  std::size_t groups = static_cast<std::size_t>((bits + 5) / 6);
  if (tok.size() != 1 + groups)
    throw parse_error("graph6 length " + std::to_string(tok.size()) + " does not match order " +
                          std::to_string(n) + " (byte " + std::to_string(tok.size()) + ")",
                      tok.size());
  std::vector<int> bit;
  bit.reserve(groups * 6);
  for (std::size_t i = 0; i < groups; ++i) {
    unsigned char b = static_cast<unsigned char>(tok[1 + i]);
    if (b < 63 || b > 126)
      throw parse_error("bad graph6 data byte at byte " + std::to_string(1 + i), 1 + i);
    int value = static_cast<int>(b) - 63;
    for (int k = 5; k >= 0; --k) bit.push_back((value >> k) & 1);
  }
  for (std::size_t i = static_cast<std::size_t>(bits); i < bit.size(); ++i)
    if (bit[i])
      throw parse_error("nonzero graph6 padding (byte " + std::to_string(1 + i / 6) + ")",
                        1 + i / 6);
  std::vector<int> verts(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) verts[static_cast<std::size_t>(i)] = i;
  std::vector<Edge> edges;
  int pos = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (bit[static_cast<std::size_t>(pos++)]) edges.push_back({i, j});
  return Graph(std::move(verts), std::move(edges));
}

inline Graph decode_edge_list_text(const std::string& text) {
  std::vector<Edge> edges;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  std::vector<long long> pending;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      long long value = 0;
      try {
        std::size_t used = 0;
        value = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw parse_error("bad vertex token '" + tok + "' at line " + std::to_string(lineno),
                          lineno);
      }
      if (value < 0 || value > (1LL << 30))
        throw parse_error("vertex label out of range at line " + std::to_string(lineno), lineno);
      pending.push_back(value);
      if (pending.size() == 2) {
        int u = static_cast<int>(pending[0]);
        int v = static_cast<int>(pending[1]);
        pending.clear();
        if (u == v)
          throw parse_error("loop edge at line " + std::to_string(lineno), lineno);
        Edge e = make_edge(u, v);
        if (std::find(edges.begin(), edges.end(), e) != edges.end())
          throw parse_error("duplicate edge at line " + std::to_string(lineno), lineno);
        edges.push_back(e);
      }
    }
  }
  if (!pending.empty())
    throw parse_error("odd number of vertex tokens at line " + std::to_string(lineno), lineno);
  if (edges.empty()) throw parse_error("no edges in edge list (line 1)", 1);
  return Graph::from_edges(std::move(edges));
}

}  // namespace detail

// Accepts graph6 (one token, optionally preceded by the standard
// ">>graph6<<" marker) or whitespace-separated "u v" edge-list text.
inline Graph decode_graph(const std::string& text) {
  std::string body = text;
  const std::string marker = ">>graph6<<";
  std::size_t start = body.find_first_not_of(" \t\r\n");
  if (start == std::string::npos) throw parse_error("empty input (byte 0)", 0);
  if (body.compare(start, marker.size(), marker) == 0) start += marker.size();
  std::size_t end = body.find_last_not_of(" \t\r\n");
  body = body.substr(start, end - start + 1);
  char first = body[0];
  if (std::isdigit(static_cast<unsigned char>(first)) || first == '-')
    return detail::decode_edge_list_text(body);
  if (body.find_first_of(" \t\r\n") != std::string::npos)
    throw parse_error("graph6 input must be a single token (byte " +
                          std::to_string(body.find_first_of(" \t\r\n")) + ")",
                      body.find_first_of(" \t\r\n"));
  return detail::decode_graph6_token(body);
}

}  // namespace ramsey

#endif  // RAMSEY_GRAPH_HPP
