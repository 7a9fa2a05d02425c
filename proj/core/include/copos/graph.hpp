#pragma once

#include <iosfwd>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "copos/rational.hpp"
#include "copos/sym_matrix.hpp"

namespace copos::apps {

/// Simple undirected graph on vertices 0..n-1 with positive vertex weights.
class Graph {
 public:
  explicit Graph(int n = 0);
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  static Graph complete(int n);
  static Graph cycle(int n);
  static Graph path(int n);
  static Graph empty(int n) { return Graph(n); }

  int size() const { return n_; }
  const std::set<std::pair<int, int>>& edges() const { return edges_; }
  std::size_t num_edges() const { return edges_.size(); }
  bool adjacent(int i, int j) const;
  /// Throws on self-loops or out-of-range endpoints; duplicates are merged.
  void add_edge(int i, int j);

  const std::vector<Rational>& weights() const { return weights_; }
  bool weighted() const { return weighted_; }
  /// Throws unless there are n strictly positive weights.
  void set_weights(std::vector<Rational> w);

  SymMatrix adjacency() const;

 private:
  int n_;
  std::set<std::pair<int, int>> edges_;  // i < j
  std::vector<Rational> weights_;
  bool weighted_ = false;
};

/// DIMACS edge format: "c" comments, "p edge n m", "e i j" (1-indexed).
Graph parse_dimacs(std::istream& is);
/// {"n": int, "edges": [[i, j], ...], "weights": [rat]?}, 0-indexed.
Graph parse_graph_json(std::istream& is);
/// Picks the format from the first non-blank character.
Graph parse_graph(std::istream& is);
void write_dimacs(std::ostream& os, const Graph& g);

/// Vertex (p, i) maps to p * n + i; edges join copies of the same vertex
/// and edges of G inside one copy.
Graph product_graph(const Graph& g, int t);

/// Maximum weight of a stable set, by branch and bound (n <= 40).
Rational brute_alpha(const Graph& g);
/// Chromatic number by backtracking k-colouring (n <= 12).
int brute_chi(const Graph& g);

}  // namespace copos::apps
