#include "sympinv/graphs.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace sympinv {

WaveGraph::WaveGraph(int m, std::vector<Edge> edges)
    : m_(m), edges_(std::move(edges)) {
  for (Edge& e : edges_) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
}

namespace {

// Union-find over vertices 0..m-1.
struct DisjointSets {
  std::vector<int> parent;

  explicit DisjointSets(int m) : parent(m) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Vertex lists of the components induced by the edges, each sorted, the list
// ordered by minimal vertex. Isolated vertices appear as singletons.
std::vector<std::vector<int>> component_vertices(const WaveGraph& g) {
  DisjointSets ds(g.m());
  for (const Edge& e : g.edges()) ds.unite(e.u - 1, e.v - 1);
  std::map<int, std::vector<int>> by_root;
  for (int v = 0; v < g.m(); ++v) by_root[ds.find(v)].push_back(v + 1);
  std::map<int, std::vector<int>> by_min;
  for (auto& [root, verts] : by_root) by_min[verts.front()] = std::move(verts);
  std::vector<std::vector<int>> out;
  out.reserve(by_min.size());
  for (auto& [min_v, verts] : by_min) out.push_back(std::move(verts));
  return out;
}

}  // namespace

bool validate(const WaveGraph& g, int n) {
  if (g.m() < 0 || n < 1) return false;
  for (const Edge& e : g.edges()) {
    if (e.u < 1 || e.v <= e.u || e.v > g.m()) return false;
    if (e.page < 1 || e.page > n) return false;
  }
  for (std::size_t i = 1; i < g.edges().size(); ++i) {
    const Edge& a = g.edges()[i - 1];
    const Edge& b = g.edges()[i];
    if (a.u == b.u && a.v == b.v) return false;  // parallel edges
  }

  // Each component must be a path visiting its vertices in increasing order,
  // so every edge joins consecutive vertices of its component and the page
  // sequence along the component starts at 1, ends at 1 and steps by 1.
  std::map<std::pair<int, int>, int> page_of;
  for (const Edge& e : g.edges()) page_of[{e.u, e.v}] = e.page;

  std::size_t consecutive_pairs = 0;
  for (const std::vector<int>& verts : component_vertices(g)) {
    if (verts.size() < 2) return false;  // a component can't be a point
    std::vector<int> pages;
    pages.reserve(verts.size() - 1);
    for (std::size_t j = 0; j + 1 < verts.size(); ++j) {
      auto it = page_of.find({verts[j], verts[j + 1]});
      if (it == page_of.end()) return false;  // edge skips a component vertex
      pages.push_back(it->second);
    }
    consecutive_pairs += pages.size();
    if (pages.front() != 1 || pages.back() != 1) return false;
    for (std::size_t j = 1; j < pages.size(); ++j) {
      int d = pages[j] - pages[j - 1];
      if (d != 1 && d != -1) return false;
    }
  }
  // The consecutive pairs account for all edges iff the totals match (no
  // chords within a component).
  if (consecutive_pairs != g.edges().size()) return false;

  // Same-page edges must be pairwise disjoint or strictly nested.
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    for (std::size_t j = i + 1; j < g.edges().size(); ++j) {
      const Edge& a = g.edges()[i];
      const Edge& b = g.edges()[j];
      if (a.page != b.page) continue;
      const Edge& first = (a.u <= b.u) ? a : b;
      const Edge& second = (a.u <= b.u) ? b : a;
      if (!(second.u > first.v || second.v < first.v)) return false;
    }
  }
  return true;
}

std::vector<Component> components(const WaveGraph& g) {
  std::vector<Component> out;
  for (std::vector<int>& verts : component_vertices(g)) {
    std::map<int, int> index;  // original vertex -> 1-based position
    for (std::size_t j = 0; j < verts.size(); ++j) index[verts[j]] = static_cast<int>(j) + 1;
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
      auto it = index.find(e.u);
      if (it == index.end()) continue;
      edges.push_back({it->second, index.at(e.v), e.page});
    }
    out.push_back({std::move(verts),
                   WaveGraph(static_cast<int>(index.size()), std::move(edges))});
  }
  return out;
}

bool is_connected(const WaveGraph& g) {
  if (g.m() < 2) return false;
  return component_vertices(g).size() == 1;
}

LatticeWord graph_to_word(const WaveGraph& g) {
  int n = 1;
  for (const Edge& e : g.edges()) n = std::max(n, e.page);
  if (!validate(g, n)) {
    throw std::invalid_argument("graph_to_word: not a valid wave graph");
  }

  std::vector<Letter> letters(g.m(), 0);
  for (const Component& comp : components(g)) {
    const std::vector<int>& verts = comp.vertices;
    std::vector<int> pages;
    for (const Edge& e : comp.graph.edges()) pages.push_back(e.page);
    letters[verts.front() - 1] = 1;
    letters[verts.back() - 1] = -1;
    for (std::size_t j = 1; j + 1 < verts.size(); ++j) {
      // Interior vertex: edges on pages[j-1] and pages[j], differing by 1.
      letters[verts[j] - 1] =
          pages[j] > pages[j - 1] ? pages[j] : -pages[j - 1];
    }
  }
  return LatticeWord(std::move(letters), n);
}

WaveGraph word_to_graph(const LatticeWord& w, int n) {
  if (n < 1) throw std::invalid_argument("word_to_graph: n must be >= 1");
  for (Letter a : w.letters()) {
    if (letter_abs(a) > n) {
      throw std::invalid_argument("word_to_graph: letter magnitude exceeds n");
    }
  }
  if (!w.balanced()) {
    throw std::invalid_argument("word_to_graph: word is not balanced");
  }

  const std::vector<Letter>& letters = w.letters();
  std::vector<Edge> edges;
  for (int k = 1; k <= n; ++k) {
    // On page k the letters k and (k+1)-bar open a bracket, k-bar and k+1
    // close one; matched pairs become page-k edges.
    std::vector<int> stack;
    for (std::size_t i = 0; i < letters.size(); ++i) {
      Letter a = letters[i];
      if (a == k || a == -(k + 1)) {
        stack.push_back(static_cast<int>(i) + 1);
      } else if (a == -k || a == k + 1) {
        if (stack.empty()) {
          throw std::invalid_argument("word_to_graph: unbalanced brackets on page " +
                                      std::to_string(k));
        }
        edges.push_back({stack.back(), static_cast<int>(i) + 1, k});
        stack.pop_back();
      }
    }
    if (!stack.empty()) {
      throw std::invalid_argument("word_to_graph: unbalanced brackets on page " +
                                  std::to_string(k));
    }
  }
  return WaveGraph(w.size(), std::move(edges));
}

std::vector<WaveGraph> enumerate_graphs(int m, int n) {
  std::vector<WaveGraph> out;
  for (const LatticeWord& w : enumerate_balanced_words(m, n)) {
    out.push_back(word_to_graph(w, n));
  }
  return out;
}

Walk graph_to_walk(const WaveGraph& g) {
  int n = 1;
  for (const Edge& e : g.edges()) n = std::max(n, e.page);
  if (!validate(g, n) || !is_connected(g)) {
    throw std::invalid_argument("graph_to_walk: graph must be valid and connected");
  }
  Walk w;
  for (const Edge& e : g.edges()) w.steps.push_back(e.page);  // edge order = path order
  return w;
}

WaveGraph walk_to_graph(const Walk& w) {
  if (w.steps.empty()) {
    throw std::invalid_argument("walk_to_graph: walk must have at least one page");
  }
  if (w.steps.front() != 1 || w.steps.back() != 1) {
    throw std::invalid_argument("walk_to_graph: walk must start and end at page 1");
  }
  std::vector<Edge> edges;
  for (std::size_t k = 0; k < w.steps.size(); ++k) {
    if (w.steps[k] < 1) throw std::invalid_argument("walk_to_graph: pages must be >= 1");
    if (k > 0 && std::abs(w.steps[k] - w.steps[k - 1]) != 1) {
      throw std::invalid_argument("walk_to_graph: walk must step by exactly 1");
    }
    edges.push_back({static_cast<int>(k) + 1, static_cast<int>(k) + 2, w.steps[k]});
  }
  return WaveGraph(static_cast<int>(w.steps.size()) + 1, std::move(edges));
}

bool validate_walk(const Walk& w, int n) {
  if (w.steps.empty() || w.steps.front() != 1 || w.steps.back() != 1) return false;
  for (std::size_t k = 0; k < w.steps.size(); ++k) {
    if (w.steps[k] < 1 || w.steps[k] > n) return false;
    if (k > 0 && std::abs(w.steps[k] - w.steps[k - 1]) != 1) return false;
  }
  return true;
}

mpz_class count_connected(int m, int n) {
  if (m < 2) throw std::invalid_argument("count_connected: m must be >= 2");
  if (n < 1) throw std::invalid_argument("count_connected: n must be >= 1");

  using Matrix = std::vector<std::vector<mpz_class>>;
  auto mul = [n](const Matrix& a, const Matrix& b) {
    Matrix c(n, std::vector<mpz_class>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        if (a[i][k] != 0)
          for (int j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
  };

  Matrix adj(n, std::vector<mpz_class>(n, 0));
  for (int i = 0; i + 1 < n; ++i) adj[i][i + 1] = adj[i + 1][i] = 1;
  Matrix result(n, std::vector<mpz_class>(n, 0));
  for (int i = 0; i < n; ++i) result[i][i] = 1;

  int e = m - 2;
  while (e > 0) {
    if (e % 2 == 1) result = mul(result, adj);
    adj = mul(adj, adj);
    e /= 2;
  }
  return result[0][0];
}

}  // namespace sympinv
