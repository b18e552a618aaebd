#include "sdiso/graph.hpp"

#include <algorithm>
#include <sstream>

namespace sdiso {

std::pair<Graph, std::vector<int>> Graph::induced(const VertexSet& part) const {
  std::vector<int> old_of = part.to_vector();
  std::vector<int> new_of(n_, -1);
  for (size_t i = 0; i < old_of.size(); ++i) new_of[old_of[i]] = int(i);
  Graph sub(int(old_of.size()));
  for (size_t i = 0; i < old_of.size(); ++i) {
    VertexSet nb = adj_[old_of[i]] & part;
    for (int v = nb.next(old_of[i] + 1); v >= 0; v = nb.next(v + 1))
      sub.add_edge(int(i), new_of[v]);
    if (!colors_.empty()) sub.set_color(int(i), colors_[old_of[i]]);
  }
  return {std::move(sub), std::move(old_of)};
}

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  std::optional<Graph> g;
  int edges_seen = 0, edges_declared = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "p") {
      if (g) throw ParseError(lineno, "duplicate header");
      int n, m;
      if (!(ls >> n >> m) || n < 0 || m < 0) throw ParseError(lineno, "malformed header");
      g.emplace(n);
      edges_declared = m;
    } else if (tag == "e") {
      if (!g) throw ParseError(lineno, "edge before header");
      int u, v;
      if (!(ls >> u >> v)) throw ParseError(lineno, "malformed edge");
      try {
        g->add_edge(u, v);
      } catch (const std::exception& e) {
        throw ParseError(lineno, e.what());
      }
      ++edges_seen;
    } else if (tag == "c") {
      if (!g) throw ParseError(lineno, "color before header");
      int v, c;
      if (!(ls >> v >> c)) throw ParseError(lineno, "malformed color");
      if (v < 0 || v >= g->n()) throw ParseError(lineno, "vertex id out of range");
      g->set_color(v, c);
    } else {
      throw ParseError(lineno, "unknown line tag '" + tag + "'");
    }
    std::string extra;
    if (ls >> extra) throw ParseError(lineno, "trailing tokens");
  }
  if (!g) throw ParseError(lineno, "missing header");
  if (edges_seen != edges_declared)
    throw ParseError(lineno, "edge count mismatch: header declares " +
                                 std::to_string(edges_declared) + ", found " +
                                 std::to_string(edges_seen));
  return *g;
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << "p " << g.n() << ' ' << g.m() << '\n';
  for (int u = 0; u < g.n(); ++u) {
    const VertexSet& nb = g.neighbors(u);
    for (int v = nb.next(u + 1); v >= 0; v = nb.next(v + 1))
      out << "e " << u << ' ' << v << '\n';
  }
  if (g.colored())
    for (int v = 0; v < g.n(); ++v)
      if (g.color(v) != 0) out << "c " << v << ' ' << g.color(v) << '\n';
  return out.str();
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  Graph u(g.n() + h.n());
  for (int v = 0; v < g.n(); ++v) {
    const VertexSet& nb = g.neighbors(v);
    for (int w = nb.next(v + 1); w >= 0; w = nb.next(w + 1)) u.add_edge(v, w);
  }
  for (int v = 0; v < h.n(); ++v) {
    const VertexSet& nb = h.neighbors(v);
    for (int w = nb.next(v + 1); w >= 0; w = nb.next(w + 1))
      u.add_edge(g.n() + v, g.n() + w);
  }
  if (g.colored() || h.colored()) {
    for (int v = 0; v < g.n(); ++v) u.set_color(v, g.color(v));
    for (int v = 0; v < h.n(); ++v) u.set_color(g.n() + v, h.color(v));
  }
  return u;
}

std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& forbidden) {
  std::vector<VertexSet> comps;
  VertexSet seen = forbidden;
  for (int s = 0; s < g.n(); ++s) {
    if (seen.test(s)) continue;
    VertexSet comp(g.n());
    std::vector<int> stack{s};
    seen.set(s);
    comp.set(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      VertexSet nb = g.neighbors(v) - seen;
      for (int w = nb.next(0); w >= 0; w = nb.next(w + 1)) {
        seen.set(w);
        comp.set(w);
        stack.push_back(w);
      }
    }
    comps.push_back(std::move(comp));
  }
  return comps;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  return connected_components(g, VertexSet(g.n()));
}

}  // namespace sdiso
