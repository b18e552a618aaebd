#include "sdiso/interval.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

#include "sdiso/chordal.hpp"

namespace sdiso {

namespace {

bool strict_overlap(const VertexSet& a, const VertexSet& b) {
  return a.intersects(b) && !a.subset_of(b) && !b.subset_of(a);
}

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Node of the clique tree.  Q-node children sit in the rigid order found by
// the block sweep (unique up to reversal); the canonical pass then fixes a
// visit order for every node.
struct Node {
  enum Kind { Leaf, P, Q };
  Kind kind = Leaf;
  int clique = -1;            // Leaf only
  std::vector<int> children;

  std::string code;
  bool reversed = false;      // Q: canonical orientation flips the cell order
  bool pal = false;           // Q: code identical in both orientations
  std::vector<int> visit;     // positions into children, canonical order
  int first_leaf = -1, last_leaf = -1;
  int tin = -1, tout = -1;
};

// Placement of a clique set: a whole node, or a run of consecutive children
// of a Q-node (1-based positions in the built order).
struct Spot {
  int node = -1;
  int lo = -1, hi = -1;
};

struct Tree {
  int q = 0;
  std::vector<VertexSet> fam;  // deduplicated clique sets, 2 <= |S| < q
  std::vector<Spot> spot;      // placement per family set
  std::vector<int> leaf_of;    // clique -> leaf node
  std::vector<Node> nodes;
  bool fail = false;           // no consecutive arrangement exists

  int new_node(Node::Kind k) {
    nodes.emplace_back();
    nodes.back().kind = k;
    return int(nodes.size()) - 1;
  }
  int make_leaf(int c) {
    int id = new_node(Node::Leaf);
    nodes[id].clique = c;
    leaf_of[c] = id;
    return id;
  }

  int build(const std::vector<int>& ground, const std::vector<int>& fs);
  int build_class(const std::vector<int>& members, const VertexSet& uni,
                  const std::vector<int>& inner);
};

// ground: clique indices handled at this level; fs: family sets strictly
// inside the ground set.  Returns the subtree root.
int Tree::build(const std::vector<int>& ground, const std::vector<int>& fs) {
  if (fail) return -1;
  if (ground.size() == 1) return make_leaf(ground[0]);

  // Classes of the strict-overlap relation on the constraints.
  Dsu dsu(int(fs.size()));
  for (int i = 0; i < int(fs.size()); ++i)
    for (int j = i + 1; j < int(fs.size()); ++j)
      if (strict_overlap(fam[fs[i]], fam[fs[j]])) dsu.unite(i, j);
  std::map<int, std::vector<int>> byroot;
  for (int i = 0; i < int(fs.size()); ++i) byroot[dsu.find(i)].push_back(fs[i]);

  struct Group {
    VertexSet uni;
    std::vector<int> members;
  };
  std::vector<Group> groups;
  for (auto& [r, mem] : byroot) {
    Group gr{VertexSet(q), mem};
    for (int f : mem) gr.uni |= fam[f];
    groups.push_back(std::move(gr));
  }

  // Unions of distinct classes never strictly overlap, so the inclusion-wise
  // maximal ones are pairwise disjoint and everything else nests inside one
  // of them.  Non-maximal classes dissolve: their sets are re-classified by
  // the recursive call they fall into.
  std::vector<int> order(groups.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    if (groups[x].uni.count() != groups[y].uni.count())
      return groups[x].uni.count() > groups[y].uni.count();
    return x < y;
  });
  std::vector<int> maximal;
  std::vector<int> container(groups.size(), -1);
  for (int gi : order) {
    for (int mi : maximal) {
      if (groups[gi].uni.subset_of(groups[mi].uni)) {
        container[gi] = mi;
        break;
      }
      if (groups[gi].uni.intersects(groups[mi].uni))
        throw std::logic_error("overlap class unions not laminar");
    }
    if (container[gi] < 0) maximal.push_back(gi);
  }

  std::map<int, std::vector<int>> inner;  // maximal group -> nested sets
  for (int gi = 0; gi < int(groups.size()); ++gi)
    if (container[gi] >= 0)
      for (int f : groups[gi].members) inner[container[gi]].push_back(f);

  std::vector<int> kids;
  VertexSet covered(q);
  for (int mi : maximal) {
    int child;
    if (groups[mi].members.size() == 1) {
      // A single set not overlapping anything here is its own module.
      child = build(groups[mi].uni.to_vector(), inner[mi]);
      if (fail) return -1;
      spot[groups[mi].members[0]] = Spot{child, -1, -1};
    } else {
      child = build_class(groups[mi].members, groups[mi].uni, inner[mi]);
      if (fail) return -1;
    }
    kids.push_back(child);
    covered |= groups[mi].uni;
  }
  for (int c : ground)
    if (!covered.test(c)) kids.push_back(make_leaf(c));

  if (kids.size() == 1) return kids[0];  // one group spanning the ground set
  int p = new_node(Node::P);
  nodes[p].children = kids;
  return p;
}

// A class of mutually overlapping sets admits at most one consecutive
// arrangement of its cells up to reversal.  The sweep places one member at a
// time (in search order, so each shares ground with the placed region) and
// maintains an ordered list of blocks; processed members always cover a run
// of complete blocks, so later refinements never break them.
int Tree::build_class(const std::vector<int>& members, const VertexSet& uni,
                      const std::vector<int>& inner) {
  int nm = int(members.size());
  std::vector<int> elems = uni.to_vector();

  // Cells: elements with identical membership pattern across the class.
  std::map<std::vector<char>, int> sig2cell;
  std::map<int, int> cell_of;
  std::vector<std::vector<int>> cellelems;
  for (int e : elems) {
    std::vector<char> sig(nm);
    for (int i = 0; i < nm; ++i) sig[i] = fam[members[i]].test(e) ? 1 : 0;
    auto [it, fresh] = sig2cell.try_emplace(sig, int(cellelems.size()));
    if (fresh) cellelems.emplace_back();
    cell_of[e] = it->second;
    cellelems[it->second].push_back(e);
  }
  int nc = int(cellelems.size());

  std::vector<VertexSet> mcells(nm, VertexSet(nc));
  for (int e : elems)
    for (int i = 0; i < nm; ++i)
      if (fam[members[i]].test(e)) mcells[i].set(cell_of[e]);

  std::vector<int> bfs{0};
  std::vector<char> seen(nm, 0);
  seen[0] = 1;
  for (int head = 0; head < int(bfs.size()); ++head)
    for (int v = 0; v < nm; ++v)
      if (!seen[v] && strict_overlap(fam[members[bfs[head]]], fam[members[v]])) {
        seen[v] = 1;
        bfs.push_back(v);
      }
  if (int(bfs.size()) != nm) throw std::logic_error("overlap class not connected");

  std::vector<std::vector<int>> blocks;
  std::vector<char> placed(nc, 0);
  for (int mi : bfs) {
    const VertexSet& cs = mcells[mi];
    std::vector<int> outv;
    for (int c = cs.next(0); c >= 0; c = cs.next(c + 1))
      if (!placed[c]) outv.push_back(c);

    if (blocks.empty()) {
      blocks.push_back(outv);
      for (int c : outv) placed[c] = 1;
      continue;
    }

    int nb = int(blocks.size());
    std::vector<int> status(nb);  // 0 none, 1 partial, 2 full
    for (int b = 0; b < nb; ++b) {
      int k = 0;
      for (int c : blocks[b])
        if (cs.test(c)) ++k;
      status[b] = k == 0 ? 0 : (k == int(blocks[b].size()) ? 2 : 1);
    }
    int first_hit = -1, last_hit = -1;
    for (int b = 0; b < nb; ++b)
      if (status[b] != 0) {
        if (first_hit < 0) first_hit = b;
        last_hit = b;
      }
    if (first_hit < 0) throw std::logic_error("sweep member misses placed region");

    // Split a partial block into its inside and outside parts.
    auto split = [&](const std::vector<int>& blk, bool inside_first) {
      std::array<std::vector<int>, 2> parts;
      for (int c : blk) parts[cs.test(c) == inside_first ? 0 : 1].push_back(c);
      return parts;
    };

    std::vector<std::vector<int>> next;
    if (!outv.empty()) {
      // New cells attach at one end; the placed part of the member must be a
      // prefix or suffix of the block list with at most one ragged block.
      bool pref = true;
      for (int b = 0; b < last_hit; ++b)
        if (status[b] != 2) pref = false;
      bool suff = true;
      for (int b = first_hit + 1; b < nb; ++b)
        if (status[b] != 2) suff = false;
      if (pref) {
        next.push_back(outv);
        for (int b = 0; b < last_hit; ++b) next.push_back(blocks[b]);
        if (status[last_hit] == 2) {
          next.push_back(blocks[last_hit]);
        } else {
          auto parts = split(blocks[last_hit], true);
          next.push_back(parts[0]);
          next.push_back(parts[1]);
        }
        for (int b = last_hit + 1; b < nb; ++b) next.push_back(blocks[b]);
      } else if (suff) {
        for (int b = 0; b < first_hit; ++b) next.push_back(blocks[b]);
        if (status[first_hit] == 2) {
          next.push_back(blocks[first_hit]);
        } else {
          auto parts = split(blocks[first_hit], false);
          next.push_back(parts[0]);
          next.push_back(parts[1]);
        }
        for (int b = first_hit + 1; b < nb; ++b) next.push_back(blocks[b]);
        next.push_back(outv);
      } else {
        fail = true;
        return -1;
      }
      for (int c : outv) placed[c] = 1;
    } else {
      // The member lies inside the placed region: one contiguous run with
      // ragged blocks only at its two ends.
      for (int b = first_hit + 1; b < last_hit; ++b)
        if (status[b] != 2) {
          fail = true;
          return -1;
        }
      if (first_hit == last_hit) {
        if (status[first_hit] != 2) {
          fail = true;
          return -1;
        }
        continue;
      }
      for (int b = 0; b < first_hit; ++b) next.push_back(blocks[b]);
      if (status[first_hit] == 2) {
        next.push_back(blocks[first_hit]);
      } else {
        auto parts = split(blocks[first_hit], false);
        next.push_back(parts[0]);
        next.push_back(parts[1]);
      }
      for (int b = first_hit + 1; b < last_hit; ++b) next.push_back(blocks[b]);
      if (status[last_hit] == 2) {
        next.push_back(blocks[last_hit]);
      } else {
        auto parts = split(blocks[last_hit], true);
        next.push_back(parts[0]);
        next.push_back(parts[1]);
      }
      for (int b = last_hit + 1; b < nb; ++b) next.push_back(blocks[b]);
    }
    blocks = std::move(next);
  }

  // Distinct cells are separated by some member, so every block has shrunk
  // to a single cell by now.
  std::vector<int> cellorder;
  for (auto& blk : blocks) {
    if (blk.size() != 1) throw std::logic_error("unresolved block after sweep");
    cellorder.push_back(blk[0]);
  }
  std::vector<int> pos(nc, -1);
  for (int i = 0; i < nc; ++i) pos[cellorder[i]] = i + 1;

  std::vector<int> spanlo(nm), spanhi(nm);
  for (int i = 0; i < nm; ++i) {
    int lo = nc + 1, hi = 0, cnt = 0;
    for (int c = mcells[i].next(0); c >= 0; c = mcells[i].next(c + 1)) {
      lo = std::min(lo, pos[c]);
      hi = std::max(hi, pos[c]);
      ++cnt;
    }
    if (hi - lo + 1 != cnt) throw std::logic_error("class member not contiguous");
    spanlo[i] = lo;
    spanhi[i] = hi;
  }

  // Route the nested sets: equal to the whole union, equal to a cell, or
  // strictly inside one cell.
  std::vector<VertexSet> cellset(nc, VertexSet(q));
  for (int c = 0; c < nc; ++c)
    for (int e : cellelems[c]) cellset[c].set(e);
  std::vector<std::vector<int>> insides(nc);
  std::vector<int> whole_union;
  std::vector<std::pair<int, int>> whole_cell;  // (set, cell)
  for (int f : inner) {
    if (fam[f] == uni) {
      whole_union.push_back(f);
      continue;
    }
    int c = cell_of.at(fam[f].next(0));
    if (fam[f] == cellset[c])
      whole_cell.push_back({f, c});
    else if (fam[f].subset_of(cellset[c]))
      insides[c].push_back(f);
    else
      throw std::logic_error("constraint crosses cell boundary");
  }

  std::vector<int> kids(nc, -1);
  for (int i = 0; i < nc; ++i) {
    int c = cellorder[i];
    kids[i] = build(cellelems[c], insides[c]);
    if (fail) return -1;
  }
  int qn = new_node(Node::Q);
  nodes[qn].children = kids;

  for (int i = 0; i < nm; ++i) spot[members[i]] = Spot{qn, spanlo[i], spanhi[i]};
  for (int f : whole_union) spot[f] = Spot{qn, 1, nc};
  for (auto [f, c] : whole_cell) spot[f] = Spot{kids[pos[c] - 1], -1, -1};
  return qn;
}

struct Analysis {
  bool ok = false;
  int n = 0, q = 0;
  std::vector<VertexSet> cliques;
  Tree t;
  int root = -1;
  std::vector<Spot> vspot;     // per vertex; whole-of-Q normalized to a span
  std::vector<int> leaforder;  // canonical position -> clique index
  std::vector<int> vlo, vhi;   // canonical leaf interval per vertex
  std::vector<int> relabel;    // vertex -> canonical position
  std::string code;
};

Analysis analyze(const Graph& g) {
  Analysis a;
  a.n = g.n();
  if (!peo(g).chordal()) return a;
  a.cliques = maximal_cliques(g);
  a.q = int(a.cliques.size());
  if (a.q == 0) {
    a.ok = true;
    a.code = "E";
    return a;
  }

  a.t.q = a.q;
  a.t.leaf_of.assign(a.q, -1);

  std::vector<VertexSet> vset(a.n, VertexSet(a.q));
  for (int c = 0; c < a.q; ++c)
    for (int v = a.cliques[c].next(0); v >= 0; v = a.cliques[c].next(v + 1))
      vset[v].set(c);
  std::map<VertexSet, int> dedup;
  std::vector<int> vfam(a.n, -1);
  for (int v = 0; v < a.n; ++v) {
    int k = vset[v].count();
    if (k == 0) throw std::logic_error("vertex in no maximal clique");
    if (k == 1 || k == a.q) continue;  // placed at a leaf / at the root
    auto [it, fresh] = dedup.try_emplace(vset[v], int(a.t.fam.size()));
    if (fresh) a.t.fam.push_back(vset[v]);
    vfam[v] = it->second;
  }
  a.t.spot.assign(a.t.fam.size(), Spot{});

  std::vector<int> ground(a.q);
  std::iota(ground.begin(), ground.end(), 0);
  std::vector<int> fs(a.t.fam.size());
  std::iota(fs.begin(), fs.end(), 0);
  a.root = a.t.build(ground, fs);
  if (a.t.fail) return a;

  a.vspot.assign(a.n, Spot{});
  for (int v = 0; v < a.n; ++v) {
    Spot s;
    if (vset[v].count() == a.q)
      s = Spot{a.root, -1, -1};
    else if (vset[v].count() == 1)
      s = Spot{a.t.leaf_of[vset[v].next(0)], -1, -1};
    else
      s = a.t.spot[vfam[v]];
    if (s.node < 0) throw std::logic_error("unplaced clique set");
    if (s.lo < 0 && a.t.nodes[s.node].kind == Node::Q) {
      s.lo = 1;
      s.hi = int(a.t.nodes[s.node].children.size());
    }
    a.vspot[v] = s;
  }

  // Vertex populations per node, keyed by (span, color); whole-node
  // placements use the span (-1,-1).
  int nn = int(a.t.nodes.size());
  std::vector<std::map<std::array<int, 3>, int>> marks(nn);
  for (int v = 0; v < a.n; ++v)
    marks[a.vspot[v].node][{a.vspot[v].lo, a.vspot[v].hi, g.color(v)}] += 1;

  auto fmt = [](const std::map<std::array<int, 3>, int>& m) {
    std::string out;
    for (auto& [key, cnt] : m) {
      if (!out.empty()) out += ',';
      out += '(' + std::to_string(key[0]) + ',' + std::to_string(key[1]) + ',' +
             std::to_string(key[2]) + ")x" + std::to_string(cnt);
    }
    return out;
  };

  std::function<void(int)> encode = [&](int u) {
    for (int c : a.t.nodes[u].children) encode(c);
    Node& nd = a.t.nodes[u];
    if (nd.kind == Node::Leaf) {
      nd.code = "L(" + fmt(marks[u]) + ")";
      return;
    }
    if (nd.kind == Node::P) {
      std::vector<int> idx(nd.children.size());
      std::iota(idx.begin(), idx.end(), 0);
      std::sort(idx.begin(), idx.end(), [&](int x, int y) {
        const std::string& cx = a.t.nodes[nd.children[x]].code;
        const std::string& cy = a.t.nodes[nd.children[y]].code;
        return cx != cy ? cx < cy : x < y;
      });
      nd.visit = idx;
      std::string body;
      for (int i : idx) body += a.t.nodes[nd.children[i]].code + ',';
      nd.code = "P(" + fmt(marks[u]) + '|' + body + ')';
      return;
    }
    int m = int(nd.children.size());
    std::string fwd, rev;
    for (int i = 0; i < m; ++i) fwd += a.t.nodes[nd.children[i]].code + ',';
    for (int i = m - 1; i >= 0; --i) rev += a.t.nodes[nd.children[i]].code + ',';
    std::map<std::array<int, 3>, int> rmarks;
    for (auto& [key, cnt] : marks[u])
      rmarks[{m + 1 - key[1], m + 1 - key[0], key[2]}] += cnt;
    fwd += ';' + fmt(marks[u]);
    rev += ';' + fmt(rmarks);
    nd.pal = fwd == rev;
    nd.reversed = rev < fwd;
    nd.visit.resize(m);
    for (int i = 0; i < m; ++i) nd.visit[i] = nd.reversed ? m - 1 - i : i;
    nd.code = "Q(" + std::min(fwd, rev) + ')';
  };
  encode(a.root);

  int pos = 0, timer = 0;
  a.leaforder.assign(a.q, -1);
  std::function<void(int)> place = [&](int u) {
    a.t.nodes[u].tin = timer++;
    if (a.t.nodes[u].kind == Node::Leaf) {
      a.t.nodes[u].first_leaf = a.t.nodes[u].last_leaf = pos;
      a.leaforder[pos] = a.t.nodes[u].clique;
      ++pos;
    } else {
      a.t.nodes[u].first_leaf = pos;
      for (int i : a.t.nodes[u].visit) place(a.t.nodes[u].children[i]);
      a.t.nodes[u].last_leaf = pos - 1;
    }
    a.t.nodes[u].tout = timer++;
  };
  place(a.root);

  a.vlo.assign(a.n, 0);
  a.vhi.assign(a.n, 0);
  for (int v = 0; v < a.n; ++v) {
    const Spot& s = a.vspot[v];
    const Node& nd = a.t.nodes[s.node];
    if (s.lo < 0) {
      a.vlo[v] = nd.first_leaf;
      a.vhi[v] = nd.last_leaf;
    } else {
      int lo = std::numeric_limits<int>::max(), hi = -1;
      for (int i = s.lo - 1; i <= s.hi - 1; ++i) {
        lo = std::min(lo, a.t.nodes[nd.children[i]].first_leaf);
        hi = std::max(hi, a.t.nodes[nd.children[i]].last_leaf);
      }
      a.vlo[v] = lo;
      a.vhi[v] = hi;
    }
  }

  std::vector<int> vs(a.n);
  std::iota(vs.begin(), vs.end(), 0);
  std::sort(vs.begin(), vs.end(), [&](int x, int y) {
    if (a.vlo[x] != a.vlo[y]) return a.vlo[x] < a.vlo[y];
    if (a.vhi[x] != a.vhi[y]) return a.vhi[x] < a.vhi[y];
    if (g.color(x) != g.color(y)) return g.color(x) < g.color(y);
    return x < y;
  });
  a.relabel.assign(a.n, -1);
  for (int i = 0; i < a.n; ++i) a.relabel[vs[i]] = i;

  a.code = 'I' + std::to_string(a.n) + ';' + a.t.nodes[a.root].code;
  a.ok = true;
  return a;
}

bool claw_free(const Graph& g) {
  for (int x = 0; x < g.n(); ++x)
    for (int y = x + 1; y < g.n(); ++y) {
      if (g.adjacent(x, y)) continue;
      VertexSet centers = g.neighbors(x) & g.neighbors(y);
      for (int v = centers.next(0); v >= 0; v = centers.next(v + 1)) {
        VertexSet third = g.neighbors(v) - (g.neighbors(x) | g.neighbors(y));
        third.reset(x);
        third.reset(y);
        if (!third.empty()) return false;
      }
    }
  return true;
}

}  // namespace

IntervalCanon interval_canon(const Graph& g) {
  Analysis a = analyze(g);
  IntervalCanon out;
  out.interval = a.ok;
  if (!a.ok) return out;
  out.code = a.code;
  out.relabel = a.relabel;
  out.clique_path.reserve(a.q);
  for (int i = 0; i < a.q; ++i) out.clique_path.push_back(a.cliques[a.leaforder[i]]);
  return out;
}

std::optional<std::vector<VertexSet>> is_interval(const Graph& g) {
  IntervalCanon c = interval_canon(g);
  if (!c.interval) return std::nullopt;
  return c.clique_path;
}

bool is_proper_interval(const Graph& g) {
  return interval_canon(g).interval && claw_free(g);
}

std::optional<std::vector<int>> interval_iso(const Graph& g, const Graph& h) {
  Analysis a = analyze(g), b = analyze(h);
  if (!a.ok || !b.ok || a.code != b.code) return std::nullopt;
  std::vector<int> invb(b.n);
  for (int v = 0; v < b.n; ++v) invb[b.relabel[v]] = v;
  std::vector<int> iso(a.n);
  for (int v = 0; v < a.n; ++v) iso[v] = invb[a.relabel[v]];
  for (int u = 0; u < a.n; ++u) {
    if (g.color(u) != h.color(iso[u]))
      throw std::logic_error("canonical relabeling broke colors");
    for (int v = u + 1; v < a.n; ++v)
      if (g.adjacent(u, v) != h.adjacent(iso[u], iso[v]))
        throw std::logic_error("canonical relabeling broke adjacency");
  }
  return iso;
}

std::optional<IntervalAut> interval_aut(const Graph& g) {
  Analysis a = analyze(g);
  if (!a.ok) return std::nullopt;
  IntervalAut out;
  if (a.n == 0) return out;

  auto by_canon = [&](std::vector<int>& vv) {
    std::sort(vv.begin(), vv.end(),
              [&](int x, int y) { return a.relabel[x] < a.relabel[y]; });
  };

  // Vertices sharing a placement and color are interchangeable.
  std::map<std::array<int, 4>, std::vector<int>> cells;
  for (int v = 0; v < a.n; ++v)
    cells[{a.vspot[v].node, a.vspot[v].lo, a.vspot[v].hi, g.color(v)}].push_back(v);
  for (auto& [key, vv] : cells) {
    by_canon(vv);
    if (vv.size() < 2) continue;
    Perm tr = Perm::identity(a.n);
    tr.img[vv[0]] = vv[1];
    tr.img[vv[1]] = vv[0];
    out.gens.push_back(tr);
    if (vv.size() >= 3) {
      Perm cy = Perm::identity(a.n);
      for (size_t i = 0; i < vv.size(); ++i) cy.img[vv[i]] = vv[(i + 1) % vv.size()];
      out.gens.push_back(cy);
    }
  }

  // All vertices whose placement node lies in the subtree of u, in canonical
  // order.  Matching two such lists position by position maps isomorphic
  // sibling subtrees onto each other.
  auto subtree_verts = [&](int u) {
    std::vector<int> vv;
    for (int v = 0; v < a.n; ++v) {
      const Node& host = a.t.nodes[a.vspot[v].node];
      if (host.tin >= a.t.nodes[u].tin && host.tout <= a.t.nodes[u].tout)
        vv.push_back(v);
    }
    by_canon(vv);
    return vv;
  };

  for (int u = 0; u < int(a.t.nodes.size()); ++u) {
    const Node& nd = a.t.nodes[u];
    if (nd.kind == Node::P) {
      size_t i = 0;
      while (i < nd.visit.size()) {
        size_t j = i;
        while (j < nd.visit.size() &&
               a.t.nodes[nd.children[nd.visit[j]]].code ==
                   a.t.nodes[nd.children[nd.visit[i]]].code)
          ++j;
        int gc = int(j - i);
        if (gc >= 2) {
          std::vector<std::vector<int>> lam;
          for (size_t k = i; k < j; ++k)
            lam.push_back(subtree_verts(nd.children[nd.visit[k]]));
          for (auto& l : lam)
            if (l.size() != lam[0].size())
              throw std::logic_error("equal codes, unequal populations");
          Perm sw = Perm::identity(a.n);
          for (size_t k = 0; k < lam[0].size(); ++k) {
            sw.img[lam[0][k]] = lam[1][k];
            sw.img[lam[1][k]] = lam[0][k];
          }
          if (!sw.is_identity()) out.gens.push_back(sw);
          if (gc >= 3) {
            Perm cy = Perm::identity(a.n);
            for (int t = 0; t < gc; ++t)
              for (size_t k = 0; k < lam[t].size(); ++k)
                cy.img[lam[t][k]] = lam[(t + 1) % gc][k];
            if (!cy.is_identity()) out.gens.push_back(cy);
          }
        }
        i = j;
      }
    } else if (nd.kind == Node::Q && nd.pal) {
      int m = int(nd.children.size());
      Perm rv = Perm::identity(a.n);
      for (int i = 0; 2 * i < m - 1; ++i) {
        auto L = subtree_verts(nd.children[i]);
        auto R = subtree_verts(nd.children[m - 1 - i]);
        if (L.size() != R.size())
          throw std::logic_error("palindromic subtree mismatch");
        for (size_t k = 0; k < L.size(); ++k) {
          rv.img[L[k]] = R[k];
          rv.img[R[k]] = L[k];
        }
      }
      std::map<std::array<int, 3>, std::vector<int>> sp;
      for (int v = 0; v < a.n; ++v)
        if (a.vspot[v].node == u)
          sp[{a.vspot[v].lo, a.vspot[v].hi, g.color(v)}].push_back(v);
      for (auto& [key, vv] : sp) by_canon(vv);
      for (auto& [key, vv] : sp) {
        std::array<int, 3> rkey{m + 1 - key[1], m + 1 - key[0], key[2]};
        if (rkey <= key) continue;  // self-reflected or already handled
        auto it = sp.find(rkey);
        if (it == sp.end() || it->second.size() != vv.size())
          throw std::logic_error("palindromic span mismatch");
        for (size_t k = 0; k < vv.size(); ++k) {
          rv.img[vv[k]] = it->second[k];
          rv.img[it->second[k]] = vv[k];
        }
      }
      if (!rv.is_identity()) out.gens.push_back(rv);
    }
  }

  // |Aut| factors into free choices: one symmetric group per vertex cell,
  // one per family of like subtrees under a P-node, a factor 2 per
  // reversible Q-node.
  BigInt ord = 1;
  for (auto& [key, vv] : cells) ord *= factorial(int(vv.size()));
  std::function<BigInt(int)> tf = [&](int u) -> BigInt {
    const Node& nd = a.t.nodes[u];
    BigInt r = 1;
    for (int c : nd.children) r *= tf(c);
    if (nd.kind == Node::P) {
      size_t i = 0;
      while (i < nd.visit.size()) {
        size_t j = i;
        while (j < nd.visit.size() &&
               a.t.nodes[nd.children[nd.visit[j]]].code ==
                   a.t.nodes[nd.children[nd.visit[i]]].code)
          ++j;
        r *= factorial(int(j - i));
        i = j;
      }
    } else if (nd.kind == Node::Q && nd.pal) {
      r *= 2;
    }
    return r;
  };
  out.order = ord * tf(a.root);
  return out;
}

}  // namespace sdiso
