#ifndef SDISO_GRAPH_HPP
#define SDISO_GRAPH_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sdiso/bitset.hpp"

namespace sdiso {

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& what_)
      : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

// Undirected simple graph with optional vertex colors. Adjacency is kept as
// one dense bitset row per vertex; neighbor iteration via VertexSet::next is
// already in increasing id order.
class Graph {
public:
  Graph() = default;
  explicit Graph(int n) : n_(n), adj_(n, VertexSet(n)) {}

  int n() const { return n_; }
  int m() const { return m_; }

  void add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("self-loop");
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::out_of_range("vertex id");
    if (adj_[u].test(v)) throw std::invalid_argument("duplicate edge");
    adj_[u].set(v);
    adj_[v].set(u);
    ++m_;
  }
  bool adjacent(int u, int v) const { return adj_[u].test(v); }
  const VertexSet& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].count(); }

  bool colored() const { return !colors_.empty(); }
  int color(int v) const { return colors_.empty() ? 0 : colors_[v]; }
  void set_color(int v, int c) {
    if (colors_.empty()) colors_.assign(n_, 0);
    colors_[v] = c;
  }
  const std::vector<int>& colors() const { return colors_; }

  // Vertices of `part` whose edges, colors, and ids (via the returned map:
  // new id -> old id) give the induced subgraph.
  std::pair<Graph, std::vector<int>> induced(const VertexSet& part) const;

  bool operator==(const Graph& o) const {
    return n_ == o.n_ && adj_ == o.adj_ && color_vec_normalized() == o.color_vec_normalized();
  }

private:
  std::vector<int> color_vec_normalized() const {
    return colors_.empty() ? std::vector<int>(n_, 0) : colors_;
  }

  int n_ = 0;
  int m_ = 0;
  std::vector<VertexSet> adj_;
  std::vector<int> colors_;
};

// Edge-list format: header "p <n> <m>", then m lines "e <u> <v>" and optional
// "c <v> <color>" lines; '#' starts a comment. Errors carry 1-based line
// numbers. parse(serialize(g)) == g.
Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);

// Offset of h's vertex ids in the union is g.n().
Graph disjoint_union(const Graph& g, const Graph& h);

// Components of g with `forbidden` vertices removed, each as a VertexSet over
// g's universe, ordered by smallest contained vertex.
std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& forbidden);
std::vector<VertexSet> connected_components(const Graph& g);

}  // namespace sdiso

#endif
