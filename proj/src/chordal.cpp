#include "sdiso/chordal.hpp"

#include <algorithm>
#include <stdexcept>

namespace sdiso {

std::vector<int> lex_bfs(const Graph& g) {
  // Partition refinement. Inspired by the classic Habib et al. scheme; at
  // desk scale a vector-of-buckets version is plenty.
  int n = g.n();
  std::vector<std::vector<int>> buckets{std::vector<int>(n)};
  for (int v = 0; v < n; ++v) buckets[0][v] = v;
  std::vector<int> order;
  order.reserve(n);
  while (!buckets.empty()) {
    int v = buckets.front().front();
    buckets.front().erase(buckets.front().begin());
    if (buckets.front().empty()) buckets.erase(buckets.begin());
    order.push_back(v);
    const VertexSet& nb = g.neighbors(v);
    std::vector<std::vector<int>> next;
    for (auto& b : buckets) {
      std::vector<int> hit, miss;
      for (int w : b) (nb.test(w) ? hit : miss).push_back(w);
      if (!hit.empty()) next.push_back(std::move(hit));
      if (!miss.empty()) next.push_back(std::move(miss));
    }
    buckets = std::move(next);
  }
  return order;
}

namespace {

// Search a hole through v given two non-adjacent later neighbors w, x: a
// chordless w..x path avoiding N[v] \ {w,x} closes into an induced cycle
// with v. Falls back to scanning all (v,w,x) triples; some triple on an
// actual hole always works.
std::vector<int> find_hole(const Graph& g, int v0, int w0, int x0) {
  auto attempt = [&](int v, int w, int x) -> std::vector<int> {
    VertexSet blocked = g.neighbors(v);
    blocked.set(v);
    blocked.reset(w);
    blocked.reset(x);
    std::vector<int> parent(g.n(), -1);
    std::vector<int> queue{w};
    VertexSet seen = blocked;
    seen.set(w);
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int u = queue[qi];
      VertexSet nb = g.neighbors(u) - seen;
      for (int t = nb.next(0); t >= 0; t = nb.next(t + 1)) {
        parent[t] = u;
        seen.set(t);
        queue.push_back(t);
      }
    }
    if (parent[x] == -1 && x != w) return {};
    std::vector<int> path;
    for (int t = x; t != -1; t = parent[t]) path.push_back(t);
    // Shortest path is induced within the blocked subgraph; shrink to the
    // chordless cycle in case w..x still has a chord to an inner vertex of
    // a non-shortest detour (cannot happen for BFS paths, kept simple).
    path.push_back(v);
    return path;  // cycle order x .. w v
  };
  if (auto h = attempt(v0, w0, x0); !h.empty()) return h;
  for (int v = 0; v < g.n(); ++v) {
    std::vector<int> nb = g.neighbors(v).to_vector();
    for (size_t i = 0; i < nb.size(); ++i)
      for (size_t j = i + 1; j < nb.size(); ++j) {
        if (g.adjacent(nb[i], nb[j])) continue;
        if (auto h = attempt(v, nb[i], nb[j]); !h.empty()) return h;
      }
  }
  throw std::logic_error("fill-in check failed but no hole found");
}

}  // namespace

PeoResult peo(const Graph& g) {
  std::vector<int> order = lex_bfs(g);
  std::reverse(order.begin(), order.end());  // LexBFS order reversed is a PEO iff chordal
  std::vector<int> pos(g.n());
  for (int i = 0; i < g.n(); ++i) pos[order[i]] = i;
  for (int i = 0; i < g.n(); ++i) {
    int v = order[i];
    // Later neighbors of v; the earliest of them must see all the others.
    int w = -1;
    std::vector<int> later;
    for (int u = g.neighbors(v).next(0); u >= 0; u = g.neighbors(v).next(u + 1))
      if (pos[u] > i) {
        later.push_back(u);
        if (w == -1 || pos[u] < pos[w]) w = u;
      }
    for (int x : later)
      if (x != w && !g.adjacent(w, x)) return {std::nullopt, find_hole(g, v, w, x)};
  }
  return {order, {}};
}

std::vector<VertexSet> maximal_cliques(const Graph& g) {
  PeoResult r = peo(g);
  if (!r.chordal()) throw std::invalid_argument("maximal_cliques: graph not chordal");
  const std::vector<int>& order = *r.order;
  std::vector<int> pos(g.n());
  for (int i = 0; i < g.n(); ++i) pos[order[i]] = i;
  // Candidate cliques {v} + later neighbors; keep the inclusion-maximal ones.
  std::vector<VertexSet> cand;
  for (int i = 0; i < g.n(); ++i) {
    int v = order[i];
    VertexSet c(g.n());
    c.set(v);
    for (int u = g.neighbors(v).next(0); u >= 0; u = g.neighbors(v).next(u + 1))
      if (pos[u] > i) c.set(u);
    cand.push_back(std::move(c));
  }
  std::sort(cand.begin(), cand.end(), [](const VertexSet& a, const VertexSet& b) {
    int ca = a.count(), cb = b.count();
    return ca != cb ? ca > cb : a < b;
  });
  std::vector<VertexSet> out;
  for (const VertexSet& c : cand) {
    bool covered = false;
    for (const VertexSet& k : out)
      if (c.subset_of(k)) {
        covered = true;
        break;
      }
    if (!covered) out.push_back(c);
  }
  return out;
}

}  // namespace sdiso
