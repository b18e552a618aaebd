#include "sdiso/t_iso.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "sdiso/bridge_util.hpp"
#include "sdiso/chordal.hpp"
#include "sdiso/interval.hpp"
#include "sdiso/poset.hpp"
#include "sdiso/venn.hpp"

namespace sdiso {

namespace {

void classify_tree(TreeParam& t) {
  t.branching.clear();
  t.leaves.clear();
  for (int v = 0; v < t.n(); ++v) {
    int deg = int(t.adj[v].size());
    if (deg >= 3) t.branching.push_back(v);
    if (deg <= 1) t.leaves.push_back(v);
  }
}

}  // namespace

TreeParam make_tree(const std::vector<int>& parent) {
  int m = int(parent.size());
  if (m == 0) throw std::invalid_argument("tree must have at least one node");
  TreeParam t;
  t.adj.assign(m, {});
  int root = -1;
  for (int v = 0; v < m; ++v) {
    if (parent[v] < 0) {
      if (root >= 0) throw std::invalid_argument("parent array has two roots");
      root = v;
      continue;
    }
    if (parent[v] >= m || parent[v] == v)
      throw std::invalid_argument("parent index out of range");
    t.adj[v].push_back(parent[v]);
    t.adj[parent[v]].push_back(v);
  }
  if (root < 0) throw std::invalid_argument("parent array has no root");
  std::vector<char> seen(m, 0);
  std::vector<int> queue = {root};
  seen[root] = 1;
  for (size_t i = 0; i < queue.size(); ++i)
    for (int w : t.adj[queue[i]])
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
  if (int(queue.size()) != m) throw std::invalid_argument("parent array contains a cycle");
  classify_tree(t);
  return t;
}

TreeParam suppress(const TreeParam& t) {
  int m = t.n();
  std::vector<std::vector<int>> adj = t.adj;
  std::vector<char> gone(m, 0);
  bool again = true;
  while (again) {
    again = false;
    for (int v = 0; v < m; ++v) {
      if (gone[v] || adj[v].size() != 2) continue;
      int a = adj[v][0], b = adj[v][1];
      std::replace(adj[a].begin(), adj[a].end(), v, b);
      std::replace(adj[b].begin(), adj[b].end(), v, a);
      adj[v].clear();
      gone[v] = 1;
      again = true;
    }
  }
  std::vector<int> id(m, -1);
  int nn = 0;
  for (int v = 0; v < m; ++v)
    if (!gone[v]) id[v] = nn++;
  TreeParam out;
  out.adj.assign(nn, {});
  for (int v = 0; v < m; ++v) {
    if (gone[v]) continue;
    for (int w : adj[v]) out.adj[id[v]].push_back(id[w]);
  }
  classify_tree(out);
  return out;
}

namespace {

// The next recursion parameter: one leaf removed, degree-2 nodes contracted.
TreeParam drop_leaf(const TreeParam& t) {
  if (t.n() <= 1) return t;
  int leaf = t.leaves.back();
  std::vector<int> id(t.n(), -1);
  int nn = 0;
  for (int v = 0; v < t.n(); ++v)
    if (v != leaf) id[v] = nn++;
  TreeParam mid;
  mid.adj.assign(nn, {});
  for (int v = 0; v < t.n(); ++v) {
    if (v == leaf) continue;
    for (int w : t.adj[v])
      if (w != leaf) mid.adj[id[v]].push_back(id[w]);
  }
  classify_tree(mid);
  return suppress(mid);
}

// Central structure of a clique with the non-interval bridge graphs routed
// to a separate list instead of disqualifying the clique.
struct CliqueSplit {
  CentralPoset cp;              // interval-bridged part, equivalent comps merged
  std::vector<VertexSet> hard;  // components whose bridge graph is not interval
  int interval_comps = 0;       // interval-bridged component count before merging
};

CliqueSplit split_at(const Graph& g, const VertexSet& c) {
  for (int u = c.next(0); u >= 0; u = c.next(u + 1))
    for (int v = c.next(u + 1); v >= 0; v = c.next(v + 1))
      if (!g.adjacent(u, v)) throw std::invalid_argument("c is not a clique");
  for (int v = 0; v < g.n(); ++v) {
    if (c.test(v)) continue;
    if ((g.neighbors(v) & c) == c) throw std::invalid_argument("c is not maximal");
  }

  struct Raw {
    VertexSet verts;
    std::vector<VertexSet> hoods;
    VertexSet lower, upper;
  };
  std::vector<Raw> raw;
  CliqueSplit out;
  for (const VertexSet& comp : connected_components(g, c)) {
    if (!is_interval(g.induced(c | comp).first)) {
      out.hard.push_back(comp);
      continue;
    }
    Raw r{comp, {}, VertexSet(g.n()), VertexSet(g.n())};
    bool first = true;
    std::vector<VertexSet> seen;
    for (int v = comp.next(0); v >= 0; v = comp.next(v + 1)) {
      VertexSet h = g.neighbors(v) & c;
      if (first) {
        r.lower = h;
        first = false;
      } else {
        r.lower &= h;
      }
      r.upper |= h;
      if (!h.empty() && std::find(seen.begin(), seen.end(), h) == seen.end())
        seen.push_back(h);
    }
    std::sort(seen.begin(), seen.end(),
              [](const VertexSet& x, const VertexSet& y) { return x.count() < y.count(); });
    r.hoods = std::move(seen);
    for (size_t i = 0; i + 1 < r.hoods.size(); ++i)
      if (!(r.hoods[i].subset_of(r.hoods[i + 1]) && r.hoods[i] != r.hoods[i + 1]))
        throw std::logic_error("interval bridge with non-chain attachments");
    raw.push_back(std::move(r));
    ++out.interval_comps;
  }

  std::map<VertexSet, int> flat;
  for (Raw& r : raw) {
    if (r.lower == r.upper) {
      auto [it, fresh] = flat.try_emplace(r.upper, int(out.cp.bridges.size()));
      if (!fresh) {
        Bridge& b = out.cp.bridges[it->second];
        b.comps.push_back(r.verts);
        b.verts |= r.verts;
        continue;
      }
    }
    Bridge b;
    b.comps = {r.verts};
    b.verts = r.verts;
    b.hoods = std::move(r.hoods);
    b.lower = std::move(r.lower);
    b.upper = std::move(r.upper);
    out.cp.bridges.push_back(std::move(b));
  }
  int nb = int(out.cp.bridges.size());
  out.cp.poset = Poset(nb);
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < nb; ++j)
      if (i != j && out.cp.bridges[i].upper.subset_of(out.cp.bridges[j].lower))
        out.cp.poset.add_relation(i, j);
  return out;
}

// Interval bridges plus one single-vertex bridge per vertex of a hard
// component; the extra bridges stay isolated in the order.  slots[i] lists
// the bridge index given to each vertex of hard[i], ascending.
CentralPoset extend_with_hard(const CliqueSplit& s, const Graph& g, const VertexSet& c,
                              std::vector<std::vector<int>>& slots) {
  CentralPoset out;
  out.bridges = s.cp.bridges;
  int nb0 = int(out.bridges.size());
  slots.assign(s.hard.size(), {});
  for (size_t i = 0; i < s.hard.size(); ++i)
    for (int v = s.hard[i].next(0); v >= 0; v = s.hard[i].next(v + 1)) {
      slots[i].push_back(int(out.bridges.size()));
      Bridge b;
      VertexSet vs(g.n());
      vs.set(v);
      b.comps = {vs};
      b.verts = vs;
      VertexSet hd = g.neighbors(v) & c;
      if (!hd.empty()) b.hoods = {hd};
      b.lower = hd;
      b.upper = hd;
      out.bridges.push_back(std::move(b));
    }
  out.poset = Poset(int(out.bridges.size()));
  for (int i = 0; i < nb0; ++i)
    for (int j = 0; j < nb0; ++j)
      if (s.cp.poset.less(i, j)) out.poset.add_relation(i, j);
  return out;
}

struct Ctx {
  int branch_bound = 0;  // hard components allowed at any candidate clique
  int depth_limit = 1;
  std::map<std::string, std::optional<std::vector<Perm>>> memo;
};

std::optional<PermGroup> aut_union_impl(const Graph& g, const Graph& h, const TreeParam& cur,
                                        int depth, Ctx& ctx);

// Automorphisms of one sub-instance pair, cut to the setwise stabilizer of
// the joint clique and written on the component vertices alone (a-vertices
// ascending, then b-vertices ascending).  nullopt: the pair does not match.
const std::optional<std::vector<Perm>>& rec_component_pair(
    const Graph& g, const Graph& h, const VertexSet& c, const VertexSet& d, const VertexSet& ai,
    const VertexSet& bj, const TreeParam& next_tree, int depth, Ctx& ctx) {
  auto [gi, backg] = g.induced(c | ai);
  auto [hj, backh] = h.induced(d | bj);
  VertexSet cdg(gi.n()), cdh(hj.n());
  for (int p = 0; p < gi.n(); ++p)
    if (c.test(backg[p])) cdg.set(p);
  for (int p = 0; p < hj.n(); ++p)
    if (d.test(backh[p])) cdh.set(p);
  std::string key = serialize_graph(gi) + "@" + set_to_string(cdg) + "|" + serialize_graph(hj) +
                    "@" + set_to_string(cdh) + "|" + std::to_string(next_tree.n());
  auto hit = ctx.memo.find(key);
  if (hit != ctx.memo.end()) return hit->second;

  std::optional<std::vector<Perm>> value;
  std::optional<PermGroup> grp = aut_union_impl(gi, hj, next_tree, depth + 1, ctx);
  if (grp) {
    int n1 = gi.n(), kn = n1 + hj.n();
    VertexSet cd(kn);
    for (int p = cdg.next(0); p >= 0; p = cdg.next(p + 1)) cd.set(p);
    for (int p = cdh.next(0); p >= 0; p = cdh.next(p + 1)) cd.set(n1 + p);
    auto stays = [&cd](const Perm& p) {
      for (int v = cd.next(0); v >= 0; v = cd.next(v + 1))
        if (!cd.test(p(v))) return false;
      return true;
    };
    auto ckey = [&cd](const Perm& p) {
      std::vector<int> img;
      for (int v = cd.next(0); v >= 0; v = cd.next(v + 1)) img.push_back(p(v));
      std::sort(img.begin(), img.end());
      std::string s;
      for (int x : img) {
        s += std::to_string(x);
        s += ',';
      }
      return s;
    };
    PermGroup stab = fhl_subgroup(*grp, stays, factorial(kn), ckey);
    std::vector<int> pts, rank(kn, -1);
    for (int v = 0; v < kn; ++v)
      if (!cd.test(v)) {
        rank[v] = int(pts.size());
        pts.push_back(v);
      }
    std::vector<Perm> rgens;
    for (const Perm& s : stab.gens()) {
      std::vector<int> img(pts.size());
      for (size_t i = 0; i < pts.size(); ++i) img[i] = rank[s(pts[i])];
      rgens.push_back(Perm(std::move(img)));
    }
    value = std::move(rgens);
  }
  return ctx.memo.emplace(key, std::move(value)).first->second;
}

// One candidate clique pair: every automorphism of k harvested from side
// swaps across the component bijections, or nullopt when no bijection
// admits a swap.
std::optional<std::vector<Perm>> clique_pair_gens(const Graph& k, const Graph& g, const Graph& h,
                                                  const VertexSet& c, const VertexSet& d,
                                                  const CliqueSplit& sg, const CliqueSplit& sh,
                                                  const TreeParam& next_tree, int depth, Ctx& ctx) {
  int ag = int(sg.cp.bridges.size()), ah = int(sh.cp.bridges.size());
  int a = int(sg.hard.size());

  // shared fine colors for the interval bridges of both sides
  Poset rint = poset_union(sg.cp.poset, sh.cp.poset);
  std::vector<std::vector<int>> lv = levels(rint);
  std::vector<int> lvl(ag + ah, -1);
  for (size_t l = 0; l < lv.size(); ++l)
    for (int b : lv[l]) lvl[b] = int(l);
  std::map<std::pair<int, std::string>, int> palette;
  std::vector<int> color(ag + ah);
  for (int b = 0; b < ag + ah; ++b) {
    const Bridge& br = b < ag ? sg.cp.bridges[b] : sh.cp.bridges[b - ag];
    auto key = std::make_pair(lvl[b], bridge_key(b < ag ? g : h, b < ag ? c : d, br));
    color[b] = palette.emplace(key, int(palette.size())).first->second + 1;
  }
  {  // a side swap needs the colored level statistics to balance
    std::map<std::pair<int, int>, int> bal;
    for (int b = 0; b < ag; ++b) ++bal[{lvl[b], color[b]}];
    for (int b = ag; b < ag + ah; ++b) --bal[{lvl[b], color[b]}];
    for (const auto& [cl, excess] : bal)
      if (excess != 0) return std::nullopt;
  }
  Poset rcol = rint;
  for (int b = 0; b < ag + ah; ++b) rcol.set_color(b, color[b]);
  PermGroup gamma0 = colored_poset_aut(rcol);

  // the collection sees every hard vertex as its own single-vertex bridge
  std::vector<std::vector<int>> slotsg, slotsh;
  CentralPoset lext = extend_with_hard(sg, g, c, slotsg);
  CentralPoset rext = extend_with_hard(sh, h, d, slotsh);
  int lsz = int(lext.bridges.size());
  int nslots = lsz + int(rext.bridges.size());
  for (auto& sl : slotsh)
    for (int& s : sl) s += lsz;
  AttachmentCollection u = build_collection(lext, rext, c, d, g.n(), k.n());
  if (u.nb() != nslots) throw std::logic_error("collection size disagrees with the bridge count");

  // coarse group on the extended bridge domain
  std::vector<Perm> base;
  for (const Perm& p : gamma0.gens()) {
    std::vector<int> img(nslots);
    std::iota(img.begin(), img.end(), 0);
    for (int b = 0; b < ag + ah; ++b) {
      int from = b < ag ? b : lsz + (b - ag);
      int pb = p(b);
      img[from] = pb < ag ? pb : lsz + (pb - ag);
    }
    base.push_back(Perm(std::move(img)));
  }

  // pairwise sub-instance groups for the hard components
  std::vector<std::vector<const std::optional<std::vector<Perm>>*>> rec(a);
  for (int i = 0; i < a; ++i) {
    rec[i].resize(a);
    for (int j = 0; j < a; ++j)
      rec[i][j] = &rec_component_pair(g, h, c, d, sg.hard[i], sh.hard[j], next_tree, depth, ctx);
  }
  for (int i = 0; i < a; ++i) {
    bool row = false, col = false;
    for (int j = 0; j < a; ++j) {
      row |= rec[i][j]->has_value();
      col |= rec[j][i]->has_value();
    }
    if (!row || !col) return std::nullopt;
  }

  // refinement budgets sized so the index guards cannot fire: any subgroup
  // chain step has index at most |Sym(nb)|
  int deff_gamma = u.nb() / 2 + 1;
  int deff_side = u.nb() * u.nb() + 1;

  std::vector<Perm> out;
  int swaps = 0;
  std::vector<int> m(a);
  std::iota(m.begin(), m.end(), 0);
  do {
    bool viable = true;
    for (int i = 0; i < a && viable; ++i) viable = rec[i][m[i]]->has_value();
    if (!viable) continue;
    std::vector<Perm> gens = base;
    for (int i = 0; i < a; ++i) {
      int na = int(sg.hard[i].count());
      for (const Perm& q : **rec[i][m[i]]) {
        if (q.n() != na + int(sh.hard[m[i]].count()))
          throw std::logic_error("sub-instance group lives on the wrong point count");
        std::vector<int> img(nslots);
        std::iota(img.begin(), img.end(), 0);
        for (int t = 0; t < q.n(); ++t) {
          int from = t < na ? slotsg[i][t] : slotsh[m[i]][t - na];
          int qt = q(t);
          img[from] = qt < na ? slotsg[i][qt] : slotsh[m[i]][qt - na];
        }
        gens.push_back(Perm(std::move(img)));
      }
    }
    PermGroup gamma = schreier_sims(nslots, gens);
    PermGroup refined = gamma_prime(u, gamma, deff_gamma);
    SideAnalysis sides = side_analysis(u, refined, deff_side);
    if (!sides.has_swap) continue;
    ++swaps;
    for (const Perm& rho : sides.group.gens()) out.push_back(materialize_witness(k, u, rho));
  } while (std::next_permutation(m.begin(), m.end()));
  if (swaps == 0) return std::nullopt;

  // bridge interiors move freely once attachment ranks are preserved
  auto interior_gens = [&](const Graph& side, const VertexSet& cl, const CentralPoset& cp,
                           int off) {
    for (const Bridge& br : cp.bridges) {
      std::optional<IntervalAut> ia = interval_aut(rank_colored_interior(side, cl, br));
      if (!ia) throw std::logic_error("interval bridge lost its interval interior");
      std::vector<int> back = set_to_list(br.verts);
      for (const Perm& q : ia->gens) {
        std::vector<int> img(k.n());
        std::iota(img.begin(), img.end(), 0);
        for (int t = 0; t < q.n(); ++t) img[back[t] + off] = back[q(t)] + off;
        verify_graph_iso(k, k, img);
        out.push_back(Perm(std::move(img)));
      }
    }
  };
  interior_gens(g, c, sg.cp, 0);
  interior_gens(h, d, sh.cp, g.n());

  // clique vertices with the same membership pattern across the whole
  // collection are interchangeable
  for (int side = 0; side < 2; ++side) {
    std::map<std::vector<int>, std::vector<int>> cells;
    const VertexSet& cl = u.cliq[side];
    for (int w = cl.next(0); w >= 0; w = cl.next(w + 1)) {
      std::vector<int> sig;
      for (int key = 0; key < u.nkeys(); ++key)
        if (u.set_of(key).test(w)) sig.push_back(key);
      cells[std::move(sig)].push_back(w);
    }
    for (const auto& [sig, vs] : cells)
      for (size_t t = 1; t < vs.size(); ++t) {
        std::vector<int> img(k.n());
        std::iota(img.begin(), img.end(), 0);
        img[vs[t - 1]] = vs[t];
        img[vs[t]] = vs[t - 1];
        verify_graph_iso(k, k, img);
        out.push_back(Perm(std::move(img)));
      }
  }
  return out;
}

std::optional<PermGroup> aut_union_impl(const Graph& g, const Graph& h, const TreeParam& cur,
                                        int depth, Ctx& ctx) {
  if (depth > ctx.depth_limit) throw std::logic_error("recursion outran the host tree");
  if (g.n() != h.n() || g.n() == 0) return std::nullopt;
  if (!peo(g).chordal() || !peo(h).chordal()) return std::nullopt;

  Graph k = disjoint_union(g, h);
  std::vector<VertexSet> cg = maximal_cliques(g), ch = maximal_cliques(h);
  {
    std::vector<size_t> szg, szh;
    for (const VertexSet& x : cg) szg.push_back(x.count());
    for (const VertexSet& x : ch) szh.push_back(x.count());
    std::sort(szg.begin(), szg.end());
    std::sort(szh.begin(), szh.end());
    if (szg != szh) return std::nullopt;
  }

  int hard_allowed = cur.n() >= 3 ? ctx.branch_bound : 0;
  TreeParam next_tree = drop_leaf(cur);
  if (cur.n() >= 2 && next_tree.n() >= cur.n())
    throw std::logic_error("tree parameter failed to shrink");

  for (const VertexSet& c : cg) {
    CliqueSplit sg = split_at(g, c);
    if (int(sg.hard.size()) > hard_allowed) continue;
    std::vector<size_t> hszg;
    for (const VertexSet& x : sg.hard) hszg.push_back(x.count());
    std::sort(hszg.begin(), hszg.end());

    std::vector<Perm> collected;
    int good = 0;
    for (const VertexSet& d : ch) {
      if (d.count() != c.count()) continue;
      if (int(c.count()) == g.n()) {
        // complete against complete: swap the copies and permute freely
        int n = g.n();
        std::vector<int> img(2 * n);
        for (int v = 0; v < n; ++v) {
          img[v] = v + n;
          img[v + n] = v;
        }
        verify_graph_iso(k, k, img);
        collected.push_back(Perm(std::move(img)));
        for (int v = 0; v + 1 < n; ++v)
          for (int off : {0, n}) {
            std::vector<int> tr(2 * n);
            std::iota(tr.begin(), tr.end(), 0);
            tr[v + off] = v + 1 + off;
            tr[v + 1 + off] = v + off;
            collected.push_back(Perm(std::move(tr)));
          }
        ++good;
        continue;
      }
      CliqueSplit sh = split_at(h, d);
      if (sh.hard.size() != sg.hard.size()) continue;
      if (sh.interval_comps != sg.interval_comps) continue;
      if (sh.cp.bridges.size() != sg.cp.bridges.size()) continue;
      std::vector<size_t> hszh;
      for (const VertexSet& x : sh.hard) hszh.push_back(x.count());
      std::sort(hszh.begin(), hszh.end());
      if (hszh != hszg) continue;
      std::optional<std::vector<Perm>> gens =
          clique_pair_gens(k, g, h, c, d, sg, sh, next_tree, depth, ctx);
      if (gens) {
        collected.insert(collected.end(), gens->begin(), gens->end());
        ++good;
      }
    }
    if (good > 0) return schreier_sims(k.n(), collected);
  }
  return std::nullopt;
}

}  // namespace

std::optional<PermGroup> t_aut_union(const Graph& g, const Graph& h, const TreeParam& t) {
  if (t.n() == 0) throw std::invalid_argument("empty tree parameter");
  if (g.n() == 0 || h.n() == 0) throw std::invalid_argument("graphs must be nonempty");
  if (connected_components(g).size() != 1 || connected_components(h).size() != 1)
    throw std::invalid_argument("inputs must be connected");
  TreeParam core = suppress(t);
  Ctx ctx;
  ctx.branch_bound = int(core.branching.size());
  ctx.depth_limit = std::max(1, core.n());
  return aut_union_impl(g, h, core, 0, ctx);
}

PermGroup t_aut(const Graph& g, const TreeParam& t) {
  std::optional<PermGroup> doubled = t_aut_union(g, g, t);
  if (!doubled) throw std::invalid_argument("input is not recognized as a T-graph");

  // first-copy stabilizer: index <= 2 because every generator moves the
  // copies wholesale
  int n = g.n();
  auto stays = [n](const Perm& p) {
    for (int v = 0; v < n; ++v)
      if (p(v) >= n) return false;
    return true;
  };
  auto side_key = [n](const Perm& p) { return std::string(p(0) < n ? "0" : "1"); };
  PermGroup kernel = fhl_subgroup(*doubled, stays, BigInt(2), side_key);

  std::vector<Perm> rgens;
  for (const Perm& p : kernel.gens()) {
    std::vector<int> img(n);
    for (int v = 0; v < n; ++v) img[v] = p(v);
    verify_graph_iso(g, g, img);
    rgens.push_back(Perm(std::move(img)));
  }
  return schreier_sims(n, rgens);
}

IsoVerdict t_iso(const Graph& g, const Graph& h, const TreeParam& t) {
  IsoVerdict out;
  if (g.n() != h.n()) {
    out.trace = "not isomorphic: vertex counts differ";
    return out;
  }
  std::optional<PermGroup> grp = t_aut_union(g, h, t);
  if (!grp) {
    out.trace = "not isomorphic as T-graphs: no central clique pair admits a side swap";
    return out;
  }
  int n = g.n();
  for (const Perm& p : grp->gens()) {
    bool swapper = true;
    for (int v = 0; v < n && swapper; ++v) swapper = p(v) >= n;
    if (!swapper) continue;
    std::vector<int> wit(n);
    for (int v = 0; v < n; ++v) wit[v] = p(v) - n;
    verify_graph_iso(g, h, wit);
    out.isomorphic = true;
    out.witness = std::move(wit);
    out.trace = "a side-swapping automorphism of the disjoint union certifies the isomorphism";
    return out;
  }
  out.trace = "not isomorphic as T-graphs: the union group preserves the sides";
  return out;
}

namespace {

std::string rooted_code(const std::vector<std::vector<int>>& adj, int v, int parent) {
  std::vector<std::string> sub;
  for (int w : adj[v])
    if (w != parent) sub.push_back(rooted_code(adj, w, v));
  std::sort(sub.begin(), sub.end());
  std::string s = "(";
  for (const std::string& x : sub) s += x;
  s += ")";
  return s;
}

std::string tree_code(const std::vector<std::vector<int>>& adj) {
  std::string best;
  for (int v = 0; v < int(adj.size()); ++v) {
    std::string s = rooted_code(adj, v, -1);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

// Every suppressed host tree with at most lmax leaves, smallest first:
// K1, K2, then the trees without degree-2 nodes on up to 2*lmax-2 nodes.
std::vector<TreeParam> candidate_trees(int lmax) {
  std::vector<TreeParam> out;
  out.push_back(make_tree({-1}));
  out.push_back(make_tree({-1, 0}));
  if (lmax < 3) return out;
  std::vector<std::vector<std::vector<int>>> frontier = {{{1}, {0}}};
  for (int n = 3; n <= 2 * lmax - 2; ++n) {
    std::map<std::string, std::vector<std::vector<int>>> next;
    for (const auto& adj : frontier)
      for (int v = 0; v < int(adj.size()); ++v) {
        auto grown = adj;
        grown[v].push_back(n - 1);
        grown.push_back({v});
        next.try_emplace(tree_code(grown), std::move(grown));
      }
    frontier.clear();
    for (auto& [code, adj] : next) {
      frontier.push_back(adj);
      int leaf_count = 0;
      bool suppressed = true;
      for (const auto& nb : adj) {
        if (nb.size() == 2) suppressed = false;
        if (nb.size() <= 1) ++leaf_count;
      }
      if (!suppressed || leaf_count > lmax) continue;
      TreeParam t;
      t.adj = std::move(adj);
      classify_tree(t);
      out.push_back(std::move(t));
    }
  }
  return out;
}

}  // namespace

std::string tree_code(const TreeParam& t) { return tree_code(t.adj); }

IsoVerdict leafage_iso(const Graph& g, const Graph& h, int leaf_bound) {
  if (leaf_bound < 1 || leaf_bound > 8)
    throw std::invalid_argument("leaf bound must lie in [1, 8]");
  if (!peo(g).chordal() || !peo(h).chordal())
    throw std::invalid_argument("inputs must be chordal");
  IsoVerdict out;
  if (g.n() != h.n()) {
    out.trace = "not isomorphic: vertex counts differ";
    return out;
  }
  if (g.n() == 0) {
    out.isomorphic = true;
    out.witness = std::vector<int>{};
    out.trace = "empty graphs";
    return out;
  }
  std::vector<VertexSet> compg = connected_components(g), comph = connected_components(h);
  if (compg.size() != comph.size()) {
    out.trace = "not isomorphic: component counts differ";
    return out;
  }
  if (compg.size() > 1) {
    // match whole components pairwise; isomorphism classes make the greedy
    // pairing safe
    std::vector<int> wit(g.n(), -1);
    std::vector<char> used(comph.size(), 0);
    for (const VertexSet& cg : compg) {
      auto [gi, backg] = g.induced(cg);
      bool matched = false;
      for (size_t j = 0; j < comph.size() && !matched; ++j) {
        if (used[j] || comph[j].count() != cg.count()) continue;
        auto [hj, backh] = h.induced(comph[j]);
        IsoVerdict sub = leafage_iso(gi, hj, leaf_bound);
        if (!sub.isomorphic) continue;
        used[j] = 1;
        matched = true;
        for (int p = 0; p < gi.n(); ++p) wit[backg[p]] = backh[(*sub.witness)[p]];
      }
      if (!matched) {
        out.trace = "not isomorphic: a component has no isomorphic partner";
        return out;
      }
    }
    verify_graph_iso(g, h, wit);
    out.isomorphic = true;
    out.witness = std::move(wit);
    out.trace = "components matched pairwise";
    return out;
  }
  for (const TreeParam& t : candidate_trees(leaf_bound)) {
    IsoVerdict v = t_iso(g, h, t);
    if (v.isomorphic) {
      v.trace = "isomorphic with a host tree on " + std::to_string(t.n()) + " node(s)";
      return v;
    }
  }
  out.trace = "not isomorphic: no host tree with at most " + std::to_string(leaf_bound) +
              " leaves admits a side swap";
  return out;
}

}  // namespace sdiso
