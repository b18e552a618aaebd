#include "sdiso/instances.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

#include "sdiso/chordal.hpp"

namespace sdiso {

namespace {

// Host adjacency from a parent array; nullopt when the array is not a tree
// with exactly one root.
std::optional<std::vector<std::vector<int>>> host_adjacency(const std::vector<int>& parent) {
  int m = int(parent.size());
  std::vector<std::vector<int>> adj(m);
  int root = -1;
  for (int v = 0; v < m; ++v) {
    if (parent[v] < 0) {
      if (root != -1) return std::nullopt;
      root = v;
      continue;
    }
    if (parent[v] >= m) return std::nullopt;
    adj[v].push_back(parent[v]);
    adj[parent[v]].push_back(v);
  }
  if (root == -1 && m > 0) return std::nullopt;
  // reachability from the root rules out parent cycles off to the side
  std::vector<char> seen(m, 0);
  std::vector<int> stack;
  if (m > 0) stack.push_back(root), seen[root] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) seen[w] = 1, stack.push_back(w);
  }
  for (char s : seen)
    if (!s) return std::nullopt;
  return adj;
}

bool connected_in_host(const std::vector<std::vector<int>>& adj, const std::vector<int>& nodes) {
  if (nodes.empty()) return false;
  std::vector<char> inside(adj.size(), 0);
  for (int v : nodes) inside[v] = 1;
  std::vector<char> seen(adj.size(), 0);
  std::vector<int> stack{nodes[0]};
  seen[nodes[0]] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (inside[w] && !seen[w]) seen[w] = 1, ++reached, stack.push_back(w);
  }
  return reached == int(nodes.size());
}

bool contains_sorted(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(a.begin(), a.end(), b.begin(), b.end());
}

bool comparable_sorted(const std::vector<int>& a, const std::vector<int>& b) {
  return contains_sorted(a, b) || contains_sorted(b, a);
}

// Random connected subtree of the host: seeded at `start`, grown along the
// frontier.
std::vector<int> grow_subtree(const std::vector<std::vector<int>>& adj, int start, int size,
                              std::mt19937_64& rng) {
  std::vector<int> nodes{start};
  std::vector<char> inside(adj.size(), 0);
  inside[start] = 1;
  std::vector<int> frontier(adj[start]);
  while (int(nodes.size()) < size && !frontier.empty()) {
    int pick = int(rng() % frontier.size());
    int v = frontier[pick];
    frontier.erase(frontier.begin() + pick);
    if (inside[v]) continue;
    inside[v] = 1;
    nodes.push_back(v);
    for (int w : adj[v])
      if (!inside[w]) frontier.push_back(w);
  }
  std::sort(nodes.begin(), nodes.end());
  return nodes;
}

// Shared one-round WL-style refinement palette for one or two graphs, so
// labels are comparable across them.
std::vector<std::vector<int>> joint_refine(const std::vector<const Graph*>& gs, int rounds) {
  std::vector<std::vector<int>> lab(gs.size());
  {
    std::map<std::pair<int, int>, int> palette;
    for (size_t i = 0; i < gs.size(); ++i) {
      lab[i].resize(gs[i]->n());
      for (int v = 0; v < gs[i]->n(); ++v) {
        auto key = std::make_pair(gs[i]->color(v), gs[i]->neighbors(v).count());
        lab[i][v] = palette.emplace(key, int(palette.size())).first->second;
      }
    }
  }
  for (int r = 0; r < rounds; ++r) {
    std::map<std::vector<int>, int> palette;
    std::vector<std::vector<int>> next(gs.size());
    for (size_t i = 0; i < gs.size(); ++i) {
      next[i].resize(gs[i]->n());
      for (int v = 0; v < gs[i]->n(); ++v) {
        std::vector<int> key{lab[i][v]};
        const VertexSet& nb = gs[i]->neighbors(v);
        std::vector<int> around;
        for (int w = nb.next(0); w >= 0; w = nb.next(w + 1)) around.push_back(lab[i][w]);
        std::sort(around.begin(), around.end());
        key.insert(key.end(), around.begin(), around.end());
        next[i][v] = palette.emplace(std::move(key), int(palette.size())).first->second;
      }
    }
    lab = std::move(next);
  }
  return lab;
}

}  // namespace

bool valid_subtree_rep(const SubtreeRep& rep) {
  auto adj = host_adjacency(rep.host_parent);
  if (!adj) return false;
  int m = int(rep.host_parent.size());
  for (const std::vector<int>& nodes : rep.nodes) {
    if (nodes.empty()) return false;
    for (size_t i = 0; i < nodes.size(); ++i) {
      if (nodes[i] < 0 || nodes[i] >= m) return false;
      if (i > 0 && nodes[i] <= nodes[i - 1]) return false;
    }
    if (!connected_in_host(*adj, nodes)) return false;
  }
  return true;
}

Graph intersection_graph(const SubtreeRep& rep) {
  int n = int(rep.nodes.size());
  Graph g(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const std::vector<int>&x = rep.nodes[a], &y = rep.nodes[b];
      size_t i = 0, j = 0;
      while (i < x.size() && j < y.size()) {
        if (x[i] == y[j]) {
          g.add_edge(a, b);
          break;
        }
        x[i] < y[j] ? ++i : ++j;
      }
    }
  return g;
}

SdInstance random_sd_graph(int n, int d, std::uint64_t seed, bool proper) {
  if (n < d || d < 1) throw std::invalid_argument("need n >= d >= 1");
  std::mt19937_64 rng(seed);

  for (int growth = 0;; ++growth) {
    // host: star center 0, d rays of random length
    int span = std::max(2, 2 * n / d + 1) + growth * n;
    std::vector<int> parent{-1};
    std::vector<int> ray_start(d), ray_len(d);
    for (int r = 0; r < d; ++r) {
      ray_len[r] = 1 + int(rng() % span);
      ray_start[r] = int(parent.size());
      parent.push_back(0);
      for (int j = 1; j < ray_len[r]; ++j) parent.push_back(int(parent.size()) - 1);
    }
    auto adj = host_adjacency(parent);

    int nc = 1 + int(rng() % std::max<std::uint64_t>(1, std::min(n, 2 * d)));
    SubtreeRep rep;
    rep.host_parent = parent;
    bool stuck = false;
    for (int v = 0; v < n && !stuck; ++v) {
      bool want_center = v < nc;
      for (int attempt = 0;; ++attempt) {
        if (attempt >= 300) {
          // proper placement starved; a longer host gives fresh room
          if (want_center && int(rep.nodes.size()) >= 1) {
            want_center = false;  // demote to a ray segment and keep trying
            attempt = 0;
            continue;
          }
          stuck = true;
          break;
        }
        std::vector<int> cand;
        if (want_center) {
          cand.push_back(0);
          if (!proper && v == 0) {
            // occupying only the center keeps the center clique maximal
          } else {
            for (int r = 0; r < d; ++r) {
              int depth = int(rng() % (ray_len[r] + 1));
              if (proper && v == 0 && r == 0 && depth == 0) depth = 1;
              for (int j = 0; j < depth; ++j) cand.push_back(ray_start[r] + j);
            }
            if (proper && cand.size() == 1) continue;  // bare center nests in anything
          }
        } else {
          int r = int(rng() % d);
          int a = int(rng() % ray_len[r]);
          int b = std::min(ray_len[r] - 1, a + int(rng() % 4));
          for (int j = a; j <= b; ++j) cand.push_back(ray_start[r] + j);
        }
        std::sort(cand.begin(), cand.end());
        if (proper) {
          bool clash = false;
          for (const std::vector<int>& other : rep.nodes)
            if (comparable_sorted(other, cand)) {
              clash = true;
              break;
            }
          if (clash) continue;
        }
        rep.nodes.push_back(std::move(cand));
        break;
      }
    }
    if (stuck) continue;

    VertexSet center(n);
    for (int v = 0; v < n; ++v)
      if (!rep.nodes[v].empty() && rep.nodes[v][0] == 0) center.set(v);
    (void)adj;
    return SdInstance{intersection_graph(rep), center, std::move(rep)};
  }
}

TInstance random_t_graph(const std::vector<int>& tree_parent, int n, std::uint64_t seed,
                         bool proper) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  if (!host_adjacency(tree_parent)) throw std::invalid_argument("tree parameter is not a tree");
  std::mt19937_64 rng(seed);

  for (int growth = 0;; ++growth) {
    // subdivide each tree edge a random number of times
    std::vector<int> parent;
    for (size_t v = 0; v < tree_parent.size(); ++v) parent.push_back(tree_parent[v]);
    for (size_t v = 0; v < tree_parent.size(); ++v) {
      if (tree_parent[v] < 0) continue;
      int extra = int(rng() % 3) + growth;
      int above = parent[v];
      for (int j = 0; j < extra; ++j) {
        parent.push_back(above);
        above = int(parent.size()) - 1;
      }
      parent[v] = above;
    }
    auto adj = host_adjacency(parent);

    SubtreeRep rep;
    rep.host_parent = parent;
    bool stuck = false;
    for (int v = 0; v < n && !stuck; ++v) {
      for (int attempt = 0;; ++attempt) {
        if (attempt >= 300) {
          stuck = true;
          break;
        }
        int start = int(rng() % parent.size());
        int size = 1 + int(rng() % 5);
        std::vector<int> cand = grow_subtree(*adj, start, size, rng);
        if (proper) {
          bool clash = false;
          for (const std::vector<int>& other : rep.nodes)
            if (comparable_sorted(other, cand)) {
              clash = true;
              break;
            }
          if (clash) continue;
        }
        rep.nodes.push_back(std::move(cand));
        break;
      }
    }
    if (stuck) continue;
    return TInstance{intersection_graph(rep), std::move(rep)};
  }
}

Poset random_poset(int n, int d, std::uint64_t seed) {
  if (n < 0 || d < 1) throw std::invalid_argument("need n >= 0, d >= 1");
  std::mt19937_64 rng(seed);
  Poset p(n);
  std::vector<int> last(d, -1);
  for (int v = 0; v < n; ++v) {
    int c = int(rng() % d);
    if (last[c] != -1) p.add_relation(last[c], v);
    last[c] = v;
  }
  int extra = n > 1 ? int(rng() % (2 * n)) : 0;
  for (int t = 0; t < extra; ++t) {
    int a = int(rng() % n), b = int(rng() % n);
    if (a != b && !p.less(b, a)) p.add_relation(a, b);
  }
  return p;
}

Graph poset_to_sd(const Poset& p) {
  int n = p.n();
  int maxc = 1;
  for (int v = 0; v < n; ++v) maxc = std::max(maxc, p.color(v));
  int dummies = maxc + 1;
  int csize = n + dummies;
  int total = csize;
  for (int v = 0; v < n; ++v) total += std::max(1, p.color(v));

  Graph g(total);
  for (int a = 0; a < csize; ++a)
    for (int b = a + 1; b < csize; ++b) g.add_edge(a, b);
  int next = csize;
  for (int i = 0; i < n; ++i) {
    int k = std::max(1, p.color(i));
    for (int a = 0; a < k; ++a) {
      for (int b = a + 1; b < k; ++b) g.add_edge(next + a, next + b);
      for (int j = 0; j < n; ++j)
        if (j == i || p.less(j, i)) g.add_edge(next + a, j);
    }
    next += k;
  }

  // the construction only works if the center is the unique maximum clique
  std::vector<VertexSet> cliques = maximal_cliques(g);
  VertexSet center(total);
  for (int v = 0; v < csize; ++v) center.set(v);
  if (cliques.empty() || cliques[0] != center ||
      (cliques.size() > 1 && int(cliques[1].count()) >= csize))
    throw std::logic_error("reduction center is not the unique maximum clique");
  return g;
}

IsoVerdict brute_iso(const Graph& g, const Graph& h) {
  if (g.n() > 20 || h.n() > 20) throw std::runtime_error("brute_iso size guard exceeded");
  IsoVerdict out;
  out.trace = "brute";
  if (g.n() != h.n()) return out;
  int n = g.n();
  std::vector<std::vector<int>> lab = joint_refine({&g, &h}, 3);
  {
    std::vector<int> a = lab[0], b = lab[1];
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return out;
  }
  // most-constrained first: rare labels up front
  std::map<int, int> freq;
  for (int v = 0; v < n; ++v) ++freq[lab[0][v]];
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (freq[lab[0][a]] != freq[lab[0][b]]) return freq[lab[0][a]] < freq[lab[0][b]];
    return a < b;
  });

  std::vector<int> img(n, -1);
  std::vector<char> used(n, 0);
  std::function<bool(int)> go = [&](int pos) -> bool {
    if (pos == n) return true;
    int v = order[pos];
    for (int w = 0; w < n; ++w) {
      if (used[w] || lab[0][v] != lab[1][w]) continue;
      bool ok = true;
      for (int q = 0; q < pos && ok; ++q)
        if (g.adjacent(order[q], v) != h.adjacent(img[order[q]], w)) ok = false;
      if (!ok) continue;
      img[v] = w;
      used[w] = 1;
      if (go(pos + 1)) return true;
      used[w] = 0;
      img[v] = -1;
    }
    return false;
  };
  if (!go(0)) return out;
  out.isomorphic = true;
  out.witness = img;
  return out;
}

PermGroup brute_aut(const Graph& g) {
  if (g.n() > 14) throw std::runtime_error("brute_aut size guard exceeded");
  int n = g.n();
  std::vector<int> lab = joint_refine({&g}, 3)[0];
  PermGroup group(n);
  long long found = 0;

  std::vector<int> img(n, -1);
  std::vector<char> used(n, 0);
  std::function<void(int)> go = [&](int v) {
    if (v == n) {
      if (++found > 200000)
        throw std::runtime_error("brute_aut: automorphism count beyond enumeration budget");
      Perm p(img);
      if (!group.contains(p)) group.add_gen(p);
      return;
    }
    for (int w = 0; w < n; ++w) {
      if (used[w] || lab[v] != lab[w]) continue;
      bool ok = true;
      for (int q = 0; q < v && ok; ++q)
        if (g.adjacent(q, v) != g.adjacent(img[q], w)) ok = false;
      if (!ok) continue;
      img[v] = w;
      used[w] = 1;
      go(v + 1);
      used[w] = 0;
      img[v] = -1;
    }
  };
  go(0);
  return group;
}

bool brute_poset_iso(const Poset& p, const Poset& q) {
  if (p.n() > 8 || q.n() > 8) throw std::runtime_error("brute_poset_iso size guard exceeded");
  if (p.n() != q.n()) return false;
  int n = p.n();
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i;
  do {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      if (p.color(a) != q.color(img[a])) ok = false;
      for (int b = 0; b < n && ok; ++b)
        if (p.less(a, b) != q.less(img[a], img[b])) ok = false;
    }
    if (ok) return true;
  } while (std::next_permutation(img.begin(), img.end()));
  return false;
}

}  // namespace sdiso
