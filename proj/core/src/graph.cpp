#include "copos/graph.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace copos::apps {

Graph::Graph(int n) : n_(n), weights_(static_cast<std::size_t>(std::max(n, 0)), Rational(1)) {
  if (n < 0) throw std::invalid_argument("graph: negative vertex count");
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
  for (auto [i, j] : edges) add_edge(i, j);
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph Graph::cycle(int n) {
  if (n < 3) throw std::invalid_argument("graph: a cycle needs at least 3 vertices");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph Graph::path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

bool Graph::adjacent(int i, int j) const { return edges_.count({std::min(i, j), std::max(i, j)}) > 0; }

void Graph::add_edge(int i, int j) {
  if (i < 0 || j < 0 || i >= n_ || j >= n_) throw std::invalid_argument("graph: edge endpoint out of range");
  if (i == j) throw std::invalid_argument("graph: self-loops are not allowed");
  edges_.insert({std::min(i, j), std::max(i, j)});
}

void Graph::set_weights(std::vector<Rational> w) {
  if (w.size() != static_cast<std::size_t>(n_)) throw std::invalid_argument("graph: expected one weight per vertex");
  for (const auto& v : w)
    if (v <= 0) throw std::invalid_argument("graph: weights must be positive");
  weights_ = std::move(w);
  weighted_ = true;
}

SymMatrix Graph::adjacency() const {
  SymMatrix a(static_cast<std::size_t>(n_));
  for (auto [i, j] : edges_) a.set(i, j, 1);
  return a;
}

Graph parse_dimacs(std::istream& is) {
  std::string line;
  int n = -1;
  long declared = -1;
  std::vector<std::pair<int, int>> edges;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    auto fail = [&](const std::string& why) {
      throw std::invalid_argument("dimacs line " + std::to_string(lineno) + ": " + why);
    };
    if (tag == "p") {
      std::string kind;
      if (n >= 0) fail("duplicate problem line");
      if (!(ls >> kind >> n >> declared) || (kind != "edge" && kind != "col") || n < 0 || declared < 0)
        fail("expected 'p edge <n> <m>'");
    } else if (tag == "e") {
      int i = 0, j = 0;
      if (n < 0) fail("edge before problem line");
      if (!(ls >> i >> j)) fail("expected 'e <i> <j>'");
      if (i < 1 || j < 1 || i > n || j > n) fail("vertex out of range");
      edges.emplace_back(i - 1, j - 1);
    } else {
      fail("unknown line type '" + tag + "'");
    }
  }
  if (n < 0) throw std::invalid_argument("dimacs: missing problem line");
  return Graph(n, edges);
}

Graph parse_graph_json(std::istream& is) {
  nlohmann::json j;
  try {
    is >> j;
    Graph g(j.at("n").get<int>());
    for (const auto& e : j.value("edges", nlohmann::json::array())) {
      if (!e.is_array() || e.size() != 2) throw std::invalid_argument("graph: each edge must be a pair");
      g.add_edge(e[0].get<int>(), e[1].get<int>());
    }
    if (j.contains("weights")) {
      std::vector<Rational> w;
      for (const auto& v : j.at("weights")) {
        if (v.is_string()) w.push_back(parse_rational(v.get<std::string>()));
        else if (v.is_number_integer()) w.push_back(Rational(v.get<long>()));
        else if (v.is_number()) w.push_back(parse_rational(v.dump()));
        else throw std::invalid_argument("graph: weights must be numbers or rational strings");
      }
      g.set_weights(std::move(w));
    }
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("graph: ") + e.what());
  }
}

Graph parse_graph(std::istream& is) {
  is >> std::ws;
  return is.peek() == '{' ? parse_graph_json(is) : parse_dimacs(is);
}

void write_dimacs(std::ostream& os, const Graph& g) {
  os << "p edge " << g.size() << ' ' << g.num_edges() << '\n';
  for (auto [i, j] : g.edges()) os << "e " << i + 1 << ' ' << j + 1 << '\n';
}

Graph product_graph(const Graph& g, int t) {
  if (t < 1) throw std::invalid_argument("product_graph: t must be >= 1");
  const int n = g.size();
  Graph out(n * t);
  for (int p = 0; p < t; ++p)
    for (int q = p + 1; q < t; ++q)
      for (int i = 0; i < n; ++i) out.add_edge(p * n + i, q * n + i);
  for (int p = 0; p < t; ++p)
    for (auto [i, j] : g.edges()) out.add_edge(p * n + i, p * n + j);
  return out;
}

Rational brute_alpha(const Graph& g) {
  const int n = g.size();
  if (n > 40) throw std::invalid_argument("brute_alpha: at most 40 vertices");
  using Mask = std::uint64_t;
  std::vector<Mask> nbr(static_cast<std::size_t>(n), 0);
  for (auto [i, j] : g.edges()) {
    nbr[i] |= Mask{1} << j;
    nbr[j] |= Mask{1} << i;
  }
  const auto& w = g.weights();
  Rational best = 0;
  // Branch on the lowest candidate: take it (dropping its neighbours) or skip it.
  std::function<void(Mask, Rational)> go = [&](Mask cand, Rational acc) {
    Rational bound = acc;
    for (int v = 0; v < n; ++v)
      if (cand >> v & 1u) bound += w[v];
    if (bound <= best) return;
    if (cand == 0) {
      best = acc;
      return;
    }
    const int v = std::countr_zero(cand);
    const Mask rest = cand & ~(Mask{1} << v);
    go(rest & ~nbr[v], acc + w[v]);
    // With positive weights a vertex without candidate neighbours is always taken.
    if (rest & nbr[v]) go(rest, acc);
  };
  go(n == 0 ? Mask{0} : (~Mask{0} >> (64 - n)), Rational(0));
  return best;
}

int brute_chi(const Graph& g) {
  const int n = g.size();
  if (n > 12) throw std::invalid_argument("brute_chi: at most 12 vertices");
  if (n == 0) return 0;
  std::vector<int> colour(static_cast<std::size_t>(n), -1);
  std::function<bool(int, int, int)> paint = [&](int v, int k, int used) -> bool {
    if (v == n) return true;
    // New colours are introduced in order, which removes colour symmetry.
    for (int c = 0; c < std::min(k, used + 1); ++c) {
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) ok = !(colour[u] == c && g.adjacent(u, v));
      if (!ok) continue;
      colour[v] = c;
      if (paint(v + 1, k, std::max(used, c + 1))) return true;
    }
    colour[v] = -1;
    return false;
  };
  for (int k = 1; k <= n; ++k)
    if (paint(0, k, 0)) return k;
  return n;
}

}  // namespace copos::apps
