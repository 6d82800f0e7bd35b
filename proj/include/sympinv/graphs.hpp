#pragma once

#include <gmpxx.h>

#include <compare>
#include <vector>

#include "sympinv/words.hpp"

namespace sympinv {

/// An edge of a wave graph, drawn on one page of the book. Normalized to
/// u < v by the WaveGraph constructor.
struct Edge {
  int u = 0;
  int v = 0;
  int page = 0;

  auto operator<=>(const Edge&) const = default;
};

/// A symplectic 2n-wave graph candidate: vertices 1..m and edges carrying
/// page numbers. Edges are kept sorted by (u, v); whether the graph is an
/// actual wave graph is decided by validate().
class WaveGraph {
 public:
  WaveGraph() = default;
  WaveGraph(int m, std::vector<Edge> edges);

  int m() const { return m_; }
  const std::vector<Edge>& edges() const { return edges_; }

  friend bool operator==(const WaveGraph&, const WaveGraph&) = default;

 private:
  int m_ = 0;
  std::vector<Edge> edges_;
};

/// A walk on the page path: the page sequence (alpha_1, ..., alpha_{m-1}) of
/// the m-1 edges of a connected wave graph, stepping by +-1 between
/// consecutive entries and starting/ending at page 1.
struct Walk {
  std::vector<int> steps;

  friend bool operator==(const Walk&, const Walk&) = default;
};

/// A connected component of a wave graph: its original vertices in
/// increasing order and the component reindexed to vertices 1..size.
struct Component {
  std::vector<int> vertices;
  WaveGraph graph;
};

/// True iff g is a symplectic 2n-wave graph: every component is a path with
/// at least one edge whose traversal visits vertices in increasing order,
/// page sequences start and end at 1 and step by exactly 1, all pages lie in
/// 1..n, and no two same-page edges interlace.
bool validate(const WaveGraph& g, int n);

/// Components of g ordered by minimal vertex. Requires a valid graph.
std::vector<Component> components(const WaveGraph& g);

/// True iff g consists of a single component covering all m vertices.
bool is_connected(const WaveGraph& g);

/// The balanced symplectic lattice word of a valid wave graph: letter i gets
/// magnitude equal to the largest page incident to vertex i, positive when
/// the path starts or ascends there, negative when it ends or descends.
LatticeWord graph_to_word(const WaveGraph& g);

/// Inverse of graph_to_word: brackets the letters of magnitude k and k+1 on
/// each page k and matches them into page-k edges. The word must be balanced
/// (the lattice condition is already guaranteed by LatticeWord).
WaveGraph word_to_graph(const LatticeWord& w, int n);

/// word_to_graph mapped over enumerate_balanced_words(m, n); graphs appear
/// in the word order.
std::vector<WaveGraph> enumerate_graphs(int m, int n);

/// Page sequence of a connected valid wave graph, read in edge order.
Walk graph_to_walk(const WaveGraph& g);

/// The connected wave graph drawing its k-th edge on page steps[k]: the path
/// 1-2-...-m with m = steps.size() + 1.
WaveGraph walk_to_graph(const Walk& w);

/// True iff w is a valid walk for an n-page book.
bool validate_walk(const Walk& w, int n);

/// Number of connected wave graphs with m vertices on n pages: the (1,1)
/// entry of A^(m-2) for A the adjacency matrix of the path on n vertices.
/// Requires m >= 2.
mpz_class count_connected(int m, int n);

}  // namespace sympinv
