#ifndef RAMSEY_SERIALIZE_HPP
#define RAMSEY_SERIALIZE_HPP

#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "ramsey/clique_numbers.hpp"
#include "ramsey/cyclicity.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/sparsity.hpp"

namespace ramsey {

using nlohmann::json;

inline json to_json(const Graph& g) {
  json j;
  j["vertices"] = g.vertices();
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.first, e.second});
  j["edges"] = edges;
  if (g.vertex_count() <= 62) j["graph6"] = encode_graph6(g);
  return j;
}

inline json to_json(const Cycle& c) {
  json j;
  j["vertices"] = c.vertices;
  json edges = json::array();
  for (const Edge& e : c.edges) edges.push_back({e.first, e.second});
  j["edges"] = edges;
  return j;
}

inline json to_json(const EdgeColouring& c) {
  json j;
  j["r"] = c.r;
  json entries = json::array();
  for (const auto& [e, col] : c.colours) entries.push_back({e.first, e.second, col});
  j["colours"] = entries;
  return j;
}

inline json to_json(const SparsityCertificate& cert) {
  json j;
  j["r"] = cert.r;
  j["verdict"] = cert.sparse ? "sparse" : "violating";
  if (cert.witness) j["witness"] = to_json(*cert.witness);
  if (!cert.forests.empty()) {
    json forests = json::array();
    for (const auto& forest : cert.forests) {
      json f = json::array();
      for (const MultiEdge& me : forest) f.push_back({me.u, me.v, me.copy});
      forests.push_back(f);
    }
    j["forests"] = forests;
  }
  return j;
}

inline json to_json(const RamseyVerdict& v) {
  json j;
  j["member"] = v.member;
  j["minimal"] = v.minimal ? json(*v.minimal) : json(nullptr);
  if (v.violating) {
    j["certificate"] = {{"type", "violating_subgraph"}, {"subgraph", to_json(*v.violating)}};
  } else if (v.colouring) {
    j["certificate"] = {{"type", "witness_colouring"}, {"colouring", to_json(*v.colouring)}};
  }
  return j;
}

inline json to_json(const MinimalProfileReport& rep) {
  json j;
  j["vertices"] = rep.vertex_count;
  j["edges"] = rep.edge_count;
  j["edge_formula_ceil"] = rep.edge_formula_ceil;
  j["edge_formula_floor"] = rep.edge_formula_floor;
  j["min_degree"] = rep.min_degree;
  j["v_mod_r"] = rep.v_mod_r;
  j["edge_formula_ok"] = rep.edge_formula_ok;
  j["degree_ok"] = rep.degree_ok;
  j["residue_ok"] = rep.residue_ok;
  j["all_ok"] = rep.all_ok();
  return j;
}

inline json to_json(const DiamondMinorResult& res) {
  json j;
  j["found"] = res.found;
  json steps = json::array();
  for (const MinorStep& s : res.steps) steps.push_back({{"op", s.op}, {"vertices", s.vertices}});
  j["steps"] = steps;
  return j;
}

// One line per edge: "u v colour".
inline std::string colouring_to_text(const EdgeColouring& c) {
  std::ostringstream out;
  for (const auto& [e, col] : c.colours) out << e.first << ' ' << e.second << ' ' << col << '\n';
  return out.str();
}

inline EdgeColouring colouring_from_text(const std::string& text, int r) {
  EdgeColouring c{r, {}};
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    long long u, v, col;
    if (!(ls >> u)) continue;  // blank line
    if (!(ls >> v >> col))
      throw parse_error("expected 'u v colour' at line " + std::to_string(lineno), lineno);
    std::string rest;
    if (ls >> rest)
      throw parse_error("trailing token '" + rest + "' at line " + std::to_string(lineno),
                        lineno);
    if (col < 1 || col > r + 1)
      throw parse_error("colour out of range 1..r+1 at line " + std::to_string(lineno), lineno);
    Edge e = make_edge(static_cast<int>(u), static_cast<int>(v));
    if (c.colours.count(e))
      throw parse_error("edge coloured twice at line " + std::to_string(lineno), lineno);
    c.colours[e] = static_cast<int>(col);
  }
  return c;
}

}  // namespace ramsey

#endif  // RAMSEY_SERIALIZE_HPP
