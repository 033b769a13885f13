// Command-line front end: batch verdicts, certificates, transformations,
// family generation, clique Ramsey numbers and a self-test census.
//
// Exit codes: 0 computed, 1 negative verdict where a verdict is the output,
// 2 input error, 3 budget exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "ramsey/clique_numbers.hpp"
#include "ramsey/cyclicity.hpp"
#include "ramsey/generators.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/graph_ops.hpp"
#include "ramsey/oracle.hpp"
#include "ramsey/planarity.hpp"
#include "ramsey/serialize.hpp"
#include "ramsey/sparsity.hpp"

namespace {

using namespace ramsey;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open file '" + path + "'", 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// A file is either one edge-list graph or one graph6 token per line.
std::vector<Graph> read_graphs(const std::string& path) {
  std::string text = read_file(path);
  std::size_t start = text.find_first_not_of(" \t\r\n");
  if (start == std::string::npos) throw parse_error("empty input file '" + path + "'", 0);
  if (std::isdigit(static_cast<unsigned char>(text[start])) || text[start] == '-')
    return {decode_graph(text)};
  std::vector<Graph> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    out.push_back(decode_graph(line));
  }
  if (out.empty()) throw parse_error("no graphs in file '" + path + "'", 0);
  return out;
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("RAMSEY_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 1000000000ULL;
}

void emit(const json& j, const std::string& format) {
  if (format == "text") {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << j.dump() << '\n';
  }
}

int run_check(const std::string& file, int r, bool minimal, const std::string& format) {
  std::vector<Graph> graphs = read_graphs(file);
  json results = json::array();
  bool any_negative = false;
  for (const Graph& g : graphs) {
    RamseyVerdict v = minimal ? is_minimal_cyclicity(g, r) : is_ramsey_cyclicity(g, r);
    // Certificates re-verify before printing.
    if (v.violating) {
      SparsityCertificate c{r, false, v.violating, {}};
      if (!verify_certificate(g, c)) throw std::logic_error("violating certificate failed");
    }
    if (v.colouring && verify_colouring(g, *v.colouring))
      throw std::logic_error("witness colouring failed re-verification");
    if (!v.member) any_negative = true;
    json jv = to_json(v);
    jv["graph"] = to_json(g);
    results.push_back(jv);
  }
  emit(results.size() == 1 ? results[0] : results, format);
  return any_negative ? 1 : 0;
}

int run_colour(const std::string& file, int r, const std::string& format) {
  Graph g = read_graphs(file).front();
  try {
    EdgeColouring col = witness_colouring(g, r);
    if (format == "text") {
      std::cout << colouring_to_text(col);
    } else {
      emit(to_json(col), format);
    }
    return 0;
  } catch (const member_error& e) {
    json j;
    j["member"] = true;
    j["violating"] = to_json(e.violating());
    emit(j, format);
    return 1;
  }
}

int run_verify(const std::string& file, const std::string& colour_file, int r,
               const std::string& format) {
  Graph g = read_graphs(file).front();
  EdgeColouring col = colouring_from_text(read_file(colour_file), r);
  auto cyc = verify_colouring(g, col);
  if (!cyc) {
    std::cout << "none\n";
    return 1;
  }
  emit(to_json(*cyc), format);
  return 0;
}

int run_minimize(const std::string& file, int r, const std::string& format) {
  Graph g = read_graphs(file).front();
  Graph m = find_minimal_subgraph(g, r);
  if (format == "json") {
    emit(to_json(m), format);
  } else {
    std::cout << encode_graph6(m) << '\n';
  }
  return 0;
}

int run_number(int r, int n, bool exact, std::uint64_t budget, const std::string& format) {
  json j;
  j["r"] = r;
  j["n"] = n;
  ProbabilisticBound lb = lower_bound_probabilistic(r, n);
  j["lower_probabilistic"] = lb.bound;
  j["clique_good_probability"] = lb.clique_good_probability;
  j["upper_recursive"] = upper_bound_recursive_diagonal(r, n);
  j["upper_closed"] = upper_bound_closed_form(r, n);
  bool budget_hit = false;
  if (exact) {
    ExactNumber res = exact_number_small(r, n, budget);
    j["exact"] = res.exact ? json(*res.exact) : json(nullptr);
    j["search_lower"] = res.lower;
    j["search_upper"] = res.upper;
    if (res.witness) j["witnesses"] = {{"below_exact", to_json(*res.witness)}};
    budget_hit = !res.complete;
  }
  emit(j, format);
  return budget_hit ? 3 : 0;
}

int run_arrows(const std::string& file, int r, int n, std::uint64_t budget,
               const std::string& format) {
  Graph g = read_graphs(file).front();
  ArrowsResult res = arrows_clique(g, r, n, budget);
  json j;
  j["arrows"] = res.arrows;
  j["nodes"] = res.nodes;
  if (res.good_colouring) j["certificate"] = to_json(*res.good_colouring);
  emit(j, format);
  return res.arrows ? 0 : 1;
}

int run_selftest(int max_v, std::uint64_t budget, int threads) {
  int bad = 0;
  for (int v = 1; v <= max_v; ++v) {
    std::vector<Graph> graphs = enumerate_graphs(v, nullptr);
    for (int r : {2, 3}) {
      std::vector<int> fail(graphs.size(), 0);
      auto work = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
          const Graph& g = graphs[i];
          bool fast = !pebble_sparse(g, r).sparse;
          bool slow = oracle_is_ramsey_cyclicity(g, r, budget);
          bool dense = oracle_density_witness(g, r).has_value();
          if (fast != slow || fast != dense) fail[i] = 1;
          if (!fast) {
            EdgeColouring col = witness_colouring(g, r);
            if (verify_colouring(g, col)) fail[i] = 1;
          }
        }
      };
      if (threads <= 1 || graphs.size() < 16) {
        work(0, graphs.size());
      } else {
        std::vector<std::thread> pool;
        std::size_t chunk = (graphs.size() + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
          std::size_t lo = std::min(graphs.size(), static_cast<std::size_t>(t) * chunk);
          std::size_t hi = std::min(graphs.size(), lo + chunk);
          pool.emplace_back(work, lo, hi);
        }
        for (auto& th : pool) th.join();
      }
      int failures = 0;
      for (int f : fail) failures += f;
      bad += failures;
      std::cout << "v=" << v << " r=" << r << ": " << graphs.size() << " graphs, "
                << failures << " disagreements\n";
    }
  }
  std::cout << (bad == 0 ? "selftest ok" : "selftest FAILED") << '\n';
  return bad == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"1/r-Ramsey graphs for cyclicity: decisions, certificates, generators, bounds"};
  app.require_subcommand(1);

  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  int threads = 1;
  app.add_option("--threads", threads, "Worker threads for selftest")->check(CLI::PositiveNumber);

  std::uint64_t budget = default_budget();

  std::string file, colour_file, kind;
  int r = 2, n = 3, k = 1, vertex = 0, max_v = 5, cone_k = 1;
  std::vector<int> edge_uv;
  std::string assign;
  bool minimal = false, exact = false, bounds_only = false;

  CLI::App* c_check = app.add_subcommand("check", "Membership (and minimality) verdict");
  c_check->add_option("--r", r, "r >= 2")->required();
  c_check->add_flag("--minimal", minimal, "Also decide minimality");
  c_check->add_option("file", file, "graph6 or edge-list file")->required();

  CLI::App* c_colour = app.add_subcommand("colour", "Witness colouring or violating subgraph");
  c_colour->add_option("--r", r)->required();
  c_colour->add_option("file", file)->required();

  CLI::App* c_verify = app.add_subcommand("verify", "Find a cycle on at most r colours");
  c_verify->add_option("--r", r)->required();
  c_verify->add_option("file", file)->required();
  c_verify->add_option("colouring", colour_file, "lines 'u v colour'")->required();

  CLI::App* c_minimize = app.add_subcommand("minimize", "Minimal member inside a member");
  c_minimize->add_option("--r", r)->required();
  c_minimize->add_option("file", file)->required();

  CLI::App* c_transform = app.add_subcommand("transform", "Graph surgeries");
  c_transform->add_option("op", kind, "subdivide|blowup|contract|cone")->required();
  c_transform->add_option("file", file)->required();
  c_transform->add_option("--edge", edge_uv, "edge endpoints for subdivide")->expected(2);
  c_transform->add_option("--vertex", vertex, "vertex for blowup");
  c_transform->add_option("--r", r, "cycle length r+1 for blowup");
  c_transform->add_option("--assign", assign, "comma positions per incident edge (sorted)");
  c_transform->add_option("--k", cone_k, "dominating vertices for cone");

  CLI::App* c_generate = app.add_subcommand("generate", "Constructive families");
  c_generate->add_option("family", kind, "planar|oddfam")->required();
  c_generate->add_option("--r", r);
  c_generate->add_option("--n", n);
  c_generate->add_option("--k", k);

  CLI::App* c_number = app.add_subcommand("number", "Clique Ramsey number bounds");
  c_number->add_option("--r", r)->required();
  c_number->add_option("--n", n)->required();
  c_number->add_flag("--exact", exact, "Exhaustive exact value");
  c_number->add_flag("--bounds", bounds_only, "Bounds only (default)");
  c_number->add_option("--budget", budget, "Search state budget");

  CLI::App* c_arrows = app.add_subcommand("arrows", "Does the graph arrow K_n?");
  c_arrows->add_option("--r", r)->required();
  c_arrows->add_option("--n", n)->required();
  c_arrows->add_option("--budget", budget);
  c_arrows->add_option("file", file)->required();

  CLI::App* c_selftest = app.add_subcommand("selftest", "Census agreement checks");
  c_selftest->add_option("--max-v", max_v, "Largest order to enumerate");
  c_selftest->add_option("--budget", budget);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (c_check->parsed()) return run_check(file, r, minimal, format);
    if (c_colour->parsed()) return run_colour(file, r, format);
    if (c_verify->parsed()) return run_verify(file, colour_file, r, format);
    if (c_minimize->parsed()) return run_minimize(file, r, format);
    if (c_number->parsed()) return run_number(r, n, exact, budget, format);
    if (c_arrows->parsed()) return run_arrows(file, r, n, budget, format);
    if (c_selftest->parsed()) return run_selftest(max_v, budget, threads);

    if (c_transform->parsed()) {
      Graph g = read_graphs(file).front();
      if (kind == "subdivide") {
        Edge e = edge_uv.size() == 2 ? make_edge(edge_uv[0], edge_uv[1]) : g.edges().front();
        std::cout << encode_graph6(subdivide_edge(g, e)) << '\n';
        return 0;
      }
      if (kind == "contract") {
        ContractionResult res = contract_shortest_cycle(g);
        json j;
        j["graph6"] = encode_graph6(res.graph);
        j["parallels_merged"] = res.parallels_merged;
        j["contracted_cycle"] = res.contracted.vertices;
        emit(j, format);
        return 0;
      }
      if (kind == "cone") {
        std::cout << encode_graph6(cone(g, cone_k)) << '\n';
        return 0;
      }
      if (kind == "blowup") {
        if (!c_transform->count("--vertex") || !c_transform->count("--r"))
          throw precondition_error("blowup needs --vertex and --r");
        std::optional<BlowUpResult> res;
        if (!assign.empty()) {
          std::map<int, int> assignment;
          std::istringstream as(assign);
          std::string tok;
          std::size_t i = 0;
          const std::vector<int>& nbrs = g.neighbors(vertex);
          while (std::getline(as, tok, ',')) {
            if (i >= nbrs.size()) throw precondition_error("too many assignment positions");
            assignment[nbrs[i++]] = std::stoi(tok);
          }
          if (i != nbrs.size()) throw precondition_error("assignment is incomplete");
          res = blow_up_vertex(g, vertex, r, assignment);
        } else {
          const std::vector<int>& nbrs = g.neighbors(vertex);
          std::vector<int> pos(nbrs.size(), 0);
          while (true) {
            std::map<int, int> assignment;
            for (std::size_t i = 0; i < nbrs.size(); ++i) assignment[nbrs[i]] = pos[i];
            BlowUpResult cand = blow_up_vertex(g, vertex, r, assignment);
            if (cand.cycle_induced && cand.two_connected) {
              res = std::move(cand);
              break;
            }
            bool more = false;
            for (std::size_t i = pos.size(); i-- > 0;) {
              if (pos[i] < r) {
                ++pos[i];
                for (std::size_t j = i + 1; j < pos.size(); ++j) pos[j] = 0;
                more = true;
                break;
              }
            }
            if (!more) break;
          }
          if (!res) throw precondition_error("no 2-connected blow-up assignment found");
        }
        json j;
        j["graph6"] = encode_graph6(res->graph);
        j["cycle_vertices"] = res->cycle_vertices;
        j["cycle_induced"] = res->cycle_induced;
        j["two_connected"] = res->two_connected;
        emit(j, format);
        return 0;
      }
      throw precondition_error("unknown transform '" + kind + "'");
    }

    if (c_generate->parsed()) {
      if (kind == "planar") {
        std::cout << encode_graph6(gen_planar_family(r, n)) << '\n';
        return 0;
      }
      if (kind == "oddfam") {
        std::cout << encode_graph6(gen_odd_cycle_family(k)) << '\n';
        return 0;
      }
      throw precondition_error("unknown family '" + kind + "'");
    }
  } catch (const budget_error& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return 3;
  } catch (const parse_error& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const precondition_error& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const not_sparse_error& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const member_error& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
