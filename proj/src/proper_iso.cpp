#include "sdiso/proper_iso.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sdiso/bridge_util.hpp"
#include "sdiso/chordal.hpp"
#include "sdiso/interval.hpp"
#include "sdiso/perm.hpp"
#include "sdiso/poset.hpp"
#include "sdiso/venn.hpp"

namespace sdiso {
namespace {

bool claw_free(const Graph& g) {
  for (int v = 0; v < g.n(); ++v) {
    std::vector<int> nb = set_to_list(g.neighbors(v));
    for (size_t i = 0; i < nb.size(); ++i)
      for (size_t j = i + 1; j < nb.size(); ++j) {
        if (g.adjacent(nb[i], nb[j])) continue;
        for (size_t l = j + 1; l < nb.size(); ++l)
          if (!g.adjacent(nb[i], nb[l]) && !g.adjacent(nb[j], nb[l])) return false;
      }
  }
  return true;
}

// All bijections m with class_l[i] == class_r[m[i]]; fn may stop the scan by
// returning true.  Returns whether fn ever did.
template <typename F>
bool match_bridges(const std::vector<int>& class_l, const std::vector<int>& class_r, F&& fn) {
  int nb = int(class_l.size());
  if (int(class_r.size()) != nb) return false;
  {
    std::vector<int> a = class_l, b = class_r;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
  }
  std::vector<int> m(nb, -1);
  std::vector<char> used(nb, 0);
  auto rec = [&](auto&& self, int i) -> bool {
    if (i == nb) return fn(m);
    for (int j = 0; j < nb; ++j) {
      if (used[j] || class_r[j] != class_l[i]) continue;
      used[j] = 1;
      m[i] = j;
      if (self(self, i + 1)) return true;
      used[j] = 0;
    }
    return false;
  };
  return rec(rec, 0);
}

// Bundle bijection -> involution of the joint collection slots (left bundles
// occupy slots [0, nl), right ones [nl, 2*nl)).
Perm slot_swap(int nl, const std::vector<int>& m) {
  std::vector<int> img(2 * nl);
  for (int i = 0; i < nl; ++i) {
    img[i] = nl + m[i];
    img[nl + m[i]] = i;
  }
  return Perm(std::move(img));
}

bool order_preserving(const Poset& r, const Perm& rho) {
  for (int i = 0; i < r.n(); ++i)
    for (int j = 0; j < r.n(); ++j)
      if (r.less(i, j) != r.less(rho(i), rho(j))) return false;
  return true;
}

// First class-preserving, order-preserving bundle bijection whose attachment
// collections agree cell by cell, as a slot involution of u; classes are
// matched as opaque strings from a shared dictionary.
std::optional<Perm> consistent_swap(const AttachmentCollection& u,
                                    const std::vector<std::string>& cls_l,
                                    const std::vector<std::string>& cls_r) {
  std::map<std::string, int> dict;
  auto intern = [&dict](const std::vector<std::string>& v) {
    std::vector<int> out;
    for (const std::string& s : v)
      out.push_back(dict.try_emplace(s, int(dict.size())).first->second);
    return out;
  };
  std::vector<int> cl = intern(cls_l), cr = intern(cls_r);
  int nl = int(cl.size());
  std::optional<Perm> found;
  match_bridges(cl, cr, [&](const std::vector<int>& m) {
    Perm rho = slot_swap(nl, m);
    if (!order_preserving(u.r, rho)) return false;
    if (!venn_good_sided(u, rho)) return false;
    found = rho;
    return true;
  });
  return found;
}

// ---------------------------------------------------------------------
// anchored central cliques (the star case)

struct AnchoredSide {
  VertexSet cliq;
  CentralPoset cp;
  std::vector<std::string> cls;  // bundle matching classes
};

// The candidate clique is admissible when every bundle stays interval and at
// most d components attach; detached components live in one merged bundle.
std::optional<AnchoredSide> anchored_side(const Graph& g, const VertexSet& c, int d) {
  auto cp = central_poset(g, c);
  if (!cp) return std::nullopt;
  int attached = 0;
  AnchoredSide s;
  s.cliq = c;
  for (const Bridge& br : cp->bridges) {
    if (!br.hoods.empty()) attached += int(br.comps.size());
    s.cls.push_back(bridge_key(g, c, br));
  }
  if (attached > d) return std::nullopt;
  s.cp = std::move(*cp);
  return s;
}

// ---------------------------------------------------------------------
// rich and nonseparating cliques

struct CompAttachment {
  VertexSet lower, upper;  // minimum / maximum vertex neighborhood in c
};

std::vector<CompAttachment> comp_attachments(const Graph& g, const VertexSet& c) {
  std::vector<CompAttachment> out;
  for (const VertexSet& comp : connected_components(g, c)) {
    CompAttachment a{VertexSet(g.n()), VertexSet(g.n())};
    bool first = true;
    for (int v = comp.next(0); v >= 0; v = comp.next(v + 1)) {
      VertexSet hd = g.neighbors(v) & c;
      if (first) {
        a.lower = hd;
        first = false;
      } else {
        a.lower &= hd;
      }
      a.upper |= hd;
    }
    out.push_back(a);
  }
  return out;
}

bool has_incomparable_triple(const Graph& g, const VertexSet& c) {
  std::vector<CompAttachment> at = comp_attachments(g, c);
  int k = int(at.size());
  auto comparable = [&at](int i, int j) {
    return at[i].upper.subset_of(at[j].lower) || at[j].upper.subset_of(at[i].lower);
  };
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      if (comparable(i, j)) continue;
      for (int l = j + 1; l < k; ++l)
        if (!comparable(i, l) && !comparable(j, l)) return true;
    }
  return false;
}

// ---------------------------------------------------------------------
// clique-to-tree assignments (the tree case)

struct TreeShape {
  std::vector<std::pair<int, int>> edges;  // fixed order, endpoints ascending
  std::vector<std::vector<int>> incident;  // node -> edge indices
};

TreeShape shape_of(const TreeParam& t) {
  TreeShape s;
  s.incident.resize(t.n());
  for (int v = 0; v < t.n(); ++v)
    for (int w : t.adj[v])
      if (v < w) {
        s.incident[v].push_back(int(s.edges.size()));
        s.incident[w].push_back(int(s.edges.size()));
        s.edges.emplace_back(v, w);
      }
  return s;
}

struct Assignment {
  std::vector<int> node_cl;               // tree node -> clique index
  std::vector<std::vector<int>> edge_cl;  // tree edge -> remaining clique indices
  std::vector<VertexSet> zone;            // tree edge -> endpoint cliques + assigned ones
};

// Every way to put one maximal clique on each tree node (injectively) such
// that the remaining cliques distribute over the tree edges and every edge
// zone induces a connected proper interval graph overlapping its sibling
// zones in the shared endpoint clique only.
//
// Node candidates are all maximal cliques, merely ordered so that cliques
// with three pairwise incomparable component attachments come first for
// branching nodes and cliques whose removal keeps the rest connected come
// first for leaves: those classes host the corresponding nodes in most
// representations, but neither is exhaustive (a hub vertex shared by every
// clique of a thin branch defeats both), so they cannot be used as filters.
//
// A remaining clique is tied to the component of g minus all node cliques
// that holds its interior vertices (cliques sharing that blob must land on
// one arc together); candidate arcs must absorb the blob neighborhood --
// or cover the whole clique when it has no interior -- and their endpoint
// cliques must be separated by the clique.  Several candidate arcs can
// survive (the blob may genuinely be movable), so the choices are
// enumerated per blob.
std::vector<Assignment> side_assignments(const Graph& g, const std::vector<VertexSet>& cliques,
                                         const TreeParam& t, const TreeShape& shape) {
  std::vector<Assignment> out;
  int nc = int(cliques.size());
  int ne = int(shape.edges.size());

  std::vector<char> is_rich(nc, 0), is_nonsep(nc, 0);
  std::vector<std::vector<VertexSet>> comps(nc);
  for (int i = 0; i < nc; ++i) {
    comps[i] = connected_components(g, cliques[i]);
    is_rich[i] = has_incomparable_triple(g, cliques[i]);
    is_nonsep[i] = comps[i].size() <= 1;
  }

  std::vector<int> nodes;
  for (int v : t.branching) nodes.push_back(v);
  for (int v : t.leaves) nodes.push_back(v);
  std::vector<std::vector<int>> cand_of(nodes.size());
  for (size_t k = 0; k < nodes.size(); ++k) {
    const std::vector<char>& preferred = k < t.branching.size() ? is_rich : is_nonsep;
    for (int i = 0; i < nc; ++i)
      if (preferred[i]) cand_of[k].push_back(i);
    for (int i = 0; i < nc; ++i)
      if (!preferred[i]) cand_of[k].push_back(i);
  }

  std::vector<int> node_cl(t.n(), -1);
  std::vector<char> taken(nc, 0);

  auto place = [&]() {
    VertexSet node_verts(g.n());
    for (int v = 0; v < t.n(); ++v) node_verts |= cliques[node_cl[v]];

    std::vector<VertexSet> blobs = connected_components(g, node_verts);
    std::vector<VertexSet> blob_hood(blobs.size(), VertexSet(g.n()));
    for (size_t p = 0; p < blobs.size(); ++p) {
      for (int w = blobs[p].next(0); w >= 0; w = blobs[p].next(w + 1))
        blob_hood[p] |= g.neighbors(w);
      blob_hood[p] -= blobs[p];
    }

    std::vector<std::vector<int>> group_cl;    // cliques sharing one arc choice
    std::vector<std::vector<int>> group_cand;  // surviving arcs of the group
    std::map<int, int> blob_group;
    for (int ci = 0; ci < nc; ++ci) {
      if (taken[ci]) continue;
      int blob = -1;
      VertexSet inside = cliques[ci] - node_verts;
      if (!inside.empty()) {
        int w = inside.next(0);
        for (size_t p = 0; p < blobs.size(); ++p)
          if (blobs[p].test(w)) {
            blob = int(p);
            break;
          }
      }
      std::vector<int> cand;
      for (int e = 0; e < ne; ++e) {
        auto [x, y] = shape.edges[e];
        const VertexSet& fx = cliques[node_cl[x]];
        const VertexSet& fy = cliques[node_cl[y]];
        VertexSet cover = fx | fy;
        if (blob >= 0) {
          if (!blob_hood[blob].subset_of(cover)) continue;
        } else if (!cliques[ci].subset_of(cover)) {
          continue;
        }
        VertexSet ax = fx - cliques[ci];
        VertexSet ay = fy - cliques[ci];
        if (ax.empty() || ay.empty())
          throw std::logic_error("distinct maximal cliques must differ");
        bool separated = true;
        for (const VertexSet& comp : comps[ci])
          if (comp.intersects(ax) && comp.intersects(ay)) {
            separated = false;
            break;
          }
        if (separated) cand.push_back(e);
      }
      if (cand.empty()) return;
      if (blob >= 0) {
        auto [it, fresh] = blob_group.try_emplace(blob, int(group_cl.size()));
        if (!fresh) {
          group_cl[it->second].push_back(ci);
          std::vector<int>& gc = group_cand[it->second];
          std::vector<int> merged;
          for (int e : gc)
            if (std::find(cand.begin(), cand.end(), e) != cand.end()) merged.push_back(e);
          gc = std::move(merged);
          if (gc.empty()) return;
          continue;
        }
      }
      group_cl.push_back({ci});
      group_cand.push_back(std::move(cand));
    }

    std::vector<int> pick(group_cl.size(), -1);
    auto finish = [&](auto&& self, size_t gi) -> void {
      if (gi < group_cl.size()) {
        for (int e : group_cand[gi]) {
          pick[gi] = e;
          self(self, gi + 1);
        }
        return;
      }
      Assignment as;
      as.node_cl = node_cl;
      as.edge_cl.assign(ne, {});
      for (size_t gj = 0; gj < group_cl.size(); ++gj)
        for (int ci : group_cl[gj]) as.edge_cl[pick[gj]].push_back(ci);

      as.zone.assign(ne, VertexSet(g.n()));
      for (int e = 0; e < ne; ++e) {
        VertexSet z =
            cliques[as.node_cl[shape.edges[e].first]] | cliques[as.node_cl[shape.edges[e].second]];
        for (int ci : as.edge_cl[e]) z |= cliques[ci];
        as.zone[e] = z;
        Graph sub = g.induced(z).first;
        if (connected_components(sub).size() != 1) return;
        if (!is_interval(sub).has_value() || !claw_free(sub)) return;
      }
      for (int v : t.branching) {
        const VertexSet& cv = cliques[as.node_cl[v]];
        const std::vector<int>& inc = shape.incident[v];
        for (size_t i = 0; i < inc.size(); ++i)
          for (size_t j = i + 1; j < inc.size(); ++j)
            if (!((as.zone[inc[i]] & as.zone[inc[j]]) - cv).empty()) return;
      }
      out.push_back(std::move(as));
    };
    finish(finish, 0);
  };

  auto assign = [&](auto&& self, size_t k) -> void {
    if (k == nodes.size()) {
      place();
      return;
    }
    int w = nodes[k];
    // a node may share the clique of an already assigned tree neighbour:
    // the arc between them is then a thin direction hosting only subtree
    // tails, which proper representations of sparse graphs need (the bare
    // claw has three maximal cliques for four tree nodes)
    std::vector<int> shared;
    for (int e : shape.incident[w]) {
      int u = shape.edges[e].first == w ? shape.edges[e].second : shape.edges[e].first;
      int ci = node_cl[u];
      if (ci < 0 || std::find(shared.begin(), shared.end(), ci) != shared.end()) continue;
      shared.push_back(ci);
      node_cl[w] = ci;
      self(self, k + 1);
      node_cl[w] = -1;
    }
    for (int ci : cand_of[k]) {
      if (taken[ci]) continue;
      taken[ci] = 1;
      node_cl[w] = ci;
      self(self, k + 1);
      taken[ci] = 0;
      node_cl[w] = -1;
    }
  };
  assign(assign, 0);
  return out;
}

// The attachment structure around one branching node: bundles of every
// incident zone against the node clique, tagged by direction, with a joint
// order by the attachment rule.  nullopt when some zone refuses to split.
struct NodeView {
  CentralPoset cp;                // vertex sets in g coordinates
  std::vector<std::string> cls;   // direction-tagged bundle classes
};

std::optional<NodeView> node_view(const Graph& g, const std::vector<VertexSet>& cliques,
                                  const Assignment& as, const TreeShape& shape, int v) {
  const VertexSet& cv = cliques[as.node_cl[v]];
  NodeView nv;
  std::vector<Bridge>& bridges = nv.cp.bridges;
  for (size_t di = 0; di < shape.incident[v].size(); ++di) {
    auto [sub, back] = g.induced(as.zone[shape.incident[v][di]]);
    VertexSet cl(sub.n());
    for (int x = 0; x < sub.n(); ++x)
      if (cv.test(back[x])) cl.set(x);
    auto cp = central_poset(sub, cl);
    if (!cp) return std::nullopt;
    auto lift = [&back, &g](const VertexSet& s) {
      VertexSet out(g.n());
      for (int x = s.next(0); x >= 0; x = s.next(x + 1)) out.set(back[x]);
      return out;
    };
    for (const Bridge& br : cp->bridges) {
      Bridge gb;
      gb.verts = VertexSet(g.n());
      for (const VertexSet& comp : br.comps) {
        gb.comps.push_back(lift(comp));
        gb.verts |= gb.comps.back();
      }
      for (const VertexSet& hd : br.hoods) gb.hoods.push_back(lift(hd));
      gb.lower = lift(br.lower);
      gb.upper = lift(br.upper);
      nv.cls.push_back(std::to_string(di) + '#' + bridge_key(g, cv, gb));
      bridges.push_back(std::move(gb));
    }
  }
  // joint order across directions by the usual attachment rule, made
  // antisymmetric so equal flat attachments in different directions do not
  // collide
  int nb = int(bridges.size());
  nv.cp.poset = Poset(nb);
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < nb; ++j)
      if (i != j && bridges[i].upper.subset_of(bridges[j].lower) &&
          !bridges[j].upper.subset_of(bridges[i].lower))
        nv.cp.poset.add_relation(i, j);
  return nv;
}

// Canonical code of a zone with its two endpoint cliques marked; any colors
// the input graph already carries stay significant.
std::string zone_code(const Graph& g, const VertexSet& zone, const VertexSet& cv,
                      const VertexSet& cu) {
  auto [sub, back] = g.induced(zone);
  for (int x = 0; x < sub.n(); ++x) {
    int col = (sub.color(x) << 2) | (cv.test(back[x]) ? 1 : 0) | (cu.test(back[x]) ? 2 : 0);
    sub.set_color(x, col);
  }
  IntervalCanon ic = interval_canon(sub);
  return ic.interval ? ic.code : std::string("!");
}

struct PreppedSide {
  Assignment as;
  std::vector<NodeView> views;                   // by branching position
  std::vector<std::vector<std::string>> zcodes;  // [branching position][direction]
  std::vector<int> clique_size;                  // by branching position
};

std::vector<PreppedSide> prep_side(const Graph& g, const std::vector<VertexSet>& cliques,
                                   const TreeParam& t, const TreeShape& shape) {
  std::vector<PreppedSide> out;
  for (Assignment& as : side_assignments(g, cliques, t, shape)) {
    PreppedSide ps;
    bool ok = true;
    for (int v : t.branching) {
      auto nv = node_view(g, cliques, as, shape, v);
      if (!nv) {
        ok = false;
        break;
      }
      const VertexSet& cv = cliques[as.node_cl[v]];
      std::vector<std::string> codes;
      for (int e : shape.incident[v]) {
        int u = shape.edges[e].first == v ? shape.edges[e].second : shape.edges[e].first;
        codes.push_back(zone_code(g, as.zone[e], cv, cliques[as.node_cl[u]]));
      }
      ps.views.push_back(std::move(*nv));
      ps.zcodes.push_back(std::move(codes));
      ps.clique_size.push_back(int(cv.count()));
    }
    if (!ok) continue;
    ps.as = std::move(as);
    out.push_back(std::move(ps));
  }
  return out;
}

// One candidate host tree: enumerate assignments on both sides and look for
// a pair that agrees at every branching node.
bool core_match(const Graph& g, const Graph& h, const TreeParam& t, IsoVerdict& out) {
  if (t.branching.empty()) {
    // a point or an edge hosts exactly the proper interval graphs
    if (!claw_free(g) || !claw_free(h)) return false;
    IntervalCanon a = interval_canon(g), b = interval_canon(h);
    if (!a.interval || !b.interval || a.code != b.code) return false;
    std::vector<int> pos(h.n());
    for (int v = 0; v < h.n(); ++v) pos[b.relabel[v]] = v;
    std::vector<int> wit(g.n());
    for (int v = 0; v < g.n(); ++v) wit[v] = pos[a.relabel[v]];
    verify_graph_iso(g, h, wit);
    out.isomorphic = true;
    out.witness = std::move(wit);
    out.trace = "matched as proper interval graphs (host tree on " + std::to_string(t.n()) +
                " nodes)";
    return true;
  }
  TreeShape shape = shape_of(t);
  std::vector<VertexSet> cg = maximal_cliques(g);
  std::vector<VertexSet> ch = maximal_cliques(h);
  std::vector<PreppedSide> ag = prep_side(g, cg, t, shape);
  if (ag.empty()) return false;
  std::vector<PreppedSide> ah = prep_side(h, ch, t, shape);
  if (ah.empty()) return false;
  Graph k = disjoint_union(g, h);
  for (const PreppedSide& x : ag)
    for (const PreppedSide& y : ah) {
      bool all = true;
      for (int bi = 0; bi < int(t.branching.size()) && all; ++bi) {
        if (x.clique_size[bi] != y.clique_size[bi] || x.zcodes[bi] != y.zcodes[bi]) {
          all = false;
          break;
        }
        const VertexSet& cv = cg[x.as.node_cl[t.branching[bi]]];
        const VertexSet& dv = ch[y.as.node_cl[t.branching[bi]]];
        const NodeView& a = x.views[bi];
        const NodeView& b = y.views[bi];
        if (a.cp.bridges.size() != b.cp.bridges.size()) {
          all = false;
          break;
        }
        AttachmentCollection u = build_collection(a.cp, b.cp, cv, dv, g.n(), k.n());
        if (!consistent_swap(u, a.cls, b.cls)) all = false;
      }
      if (all) {
        out.isomorphic = true;
        out.trace = "clique-to-tree assignments on a host tree with " + std::to_string(t.n()) +
                    " nodes agree at every branching node";
        return true;
      }
    }
  return false;
}

// Connected node subsets of the suppressed host, deduplicated up to tree
// isomorphism and ordered by size so smaller hosts are tried first.
std::vector<TreeParam> subtree_shapes(const TreeParam& base) {
  int n = base.n();
  std::map<std::string, TreeParam> seen;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    int start = std::countr_zero(mask);
    std::vector<int> parent(n, -2);
    std::vector<int> order{start};
    parent[start] = -1;
    for (size_t qi = 0; qi < order.size(); ++qi)
      for (int w : base.adj[order[qi]])
        if ((mask >> w & 1) && parent[w] == -2) {
          parent[w] = order[qi];
          order.push_back(w);
        }
    if (int(order.size()) != std::popcount(mask)) continue;
    std::vector<int> id(n, -1);
    int m = 0;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) id[v] = m++;
    std::vector<int> par(m);
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) par[id[v]] = parent[v] < 0 ? -1 : id[parent[v]];
    TreeParam sub = suppress(make_tree(par));
    seen.try_emplace(tree_code(sub), std::move(sub));
  }
  std::vector<TreeParam> out;
  out.reserve(seen.size());
  for (auto& [code, sub] : seen) out.push_back(std::move(sub));
  std::stable_sort(out.begin(), out.end(),
                   [](const TreeParam& a, const TreeParam& b) { return a.n() < b.n(); });
  return out;
}

}  // namespace

IsoVerdict proper_sd_iso(const Graph& g, const Graph& h, int d) {
  if (d < 1) throw std::invalid_argument("star degree must be at least 1");
  IsoVerdict out;
  if (g.n() != h.n()) {
    out.trace = "not isomorphic: vertex counts differ";
    return out;
  }
  if (g.n() == 0) {
    out.isomorphic = true;
    out.witness.emplace();
    out.trace = "both graphs are empty";
    return out;
  }
  if (!peo(g).chordal() || !peo(h).chordal())
    throw std::invalid_argument("inputs must be chordal");

  Graph k = disjoint_union(g, h);
  std::vector<AnchoredSide> hsides;
  for (const VertexSet& dc : maximal_cliques(h))
    if (std::optional<AnchoredSide> b = anchored_side(h, dc, d)) hsides.push_back(std::move(*b));
  for (const VertexSet& c : maximal_cliques(g)) {
    std::optional<AnchoredSide> a = anchored_side(g, c, d);
    if (!a) continue;
    for (const AnchoredSide& b : hsides) {
      const VertexSet& dc = b.cliq;
      if (dc.count() != c.count()) continue;
      if (a->cp.bridges.size() != b.cp.bridges.size()) continue;
      std::vector<int> wit(g.n());
      if (a->cp.bridges.empty()) {
        // no components outside either clique: two complete graphs
        std::iota(wit.begin(), wit.end(), 0);
      } else {
        AttachmentCollection u = build_collection(a->cp, b.cp, c, dc, g.n(), k.n());
        std::optional<Perm> rho = consistent_swap(u, a->cls, b.cls);
        if (!rho) continue;
        Perm p = materialize_witness(k, u, *rho);
        for (int v = 0; v < g.n(); ++v) wit[v] = p(v) - g.n();
      }
      verify_graph_iso(g, h, wit);
      out.isomorphic = true;
      out.witness = std::move(wit);
      out.trace = "central cliques of size " + std::to_string(c.count()) +
                  " admit an attachment-consistent bundle matching";
      return out;
    }
  }
  out.trace = "not isomorphic as proper star graphs: no anchored clique pair matches";
  return out;
}

std::vector<VertexSet> rich_cliques(const Graph& g) {
  std::vector<VertexSet> out;
  for (const VertexSet& c : maximal_cliques(g))
    if (has_incomparable_triple(g, c)) out.push_back(c);
  return out;
}

std::vector<VertexSet> nonseparating_max_cliques(const Graph& g) {
  std::vector<VertexSet> out;
  for (const VertexSet& c : maximal_cliques(g))
    if (connected_components(g, c).size() <= 1) out.push_back(c);
  return out;
}

IsoVerdict proper_t_iso(const Graph& g, const Graph& h, const TreeParam& t) {
  if (t.n() == 0) throw std::invalid_argument("empty host tree");
  if (g.n() == 0 || h.n() == 0) throw std::invalid_argument("inputs must be nonempty");
  if (connected_components(g).size() != 1 || connected_components(h).size() != 1)
    throw std::invalid_argument("inputs must be connected");
  if (!peo(g).chordal() || !peo(h).chordal())
    throw std::invalid_argument("inputs must be chordal");
  TreeParam base = suppress(t);
  if (base.n() > 16)
    throw std::invalid_argument("host tree too large: more than 16 suppressed nodes");

  IsoVerdict out;
  if (g.n() != h.n()) {
    out.trace = "not isomorphic: vertex counts differ";
    return out;
  }
  for (const TreeParam& sub : subtree_shapes(base))
    if (core_match(g, h, sub, out)) return out;
  out.trace = "not isomorphic as proper tree graphs: no host subtree admits a matching assignment";
  return out;
}

}  // namespace sdiso
