#include "sdiso/sd_iso.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>

#include "sdiso/bridge_util.hpp"
#include "sdiso/chordal.hpp"
#include "sdiso/interval.hpp"
#include "sdiso/poset.hpp"
#include "sdiso/venn.hpp"

namespace sdiso {

std::vector<int> set_to_list(const VertexSet& s) {
  std::vector<int> out;
  for (int v = s.next(0); v >= 0; v = s.next(v + 1)) out.push_back(v);
  return out;
}

std::string set_to_string(const VertexSet& s) {
  std::string out = "{";
  for (int v = s.next(0); v >= 0; v = s.next(v + 1)) {
    if (out.size() > 1) out += ",";
    out += std::to_string(v);
  }
  return out + "}";
}

Graph rank_colored_interior(const Graph& g, const VertexSet& c, const Bridge& br) {
  auto [sub, back] = g.induced(br.verts);
  for (int v = 0; v < sub.n(); ++v) {
    VertexSet hood = g.neighbors(back[v]) & c;
    int rank = 0;
    if (hood.count()) {
      for (size_t i = 0; i < br.hoods.size(); ++i)
        if (hood == br.hoods[i]) {
          rank = int(i) + 1;
          break;
        }
      if (rank == 0) throw std::logic_error("bridge vertex has a neighborhood off its chain");
    }
    sub.set_color(v, rank);
  }
  return sub;
}

std::string bridge_key(const Graph& g, const VertexSet& c, const Bridge& br) {
  std::string key;
  for (const VertexSet& h : br.hoods) key += std::to_string(h.count()) + ",";
  key += "|";
  IntervalCanon canon = interval_canon(rank_colored_interior(g, c, br));
  if (!canon.interval) throw std::logic_error("bridge interior is not interval");
  return key + canon.code;
}

void verify_graph_iso(const Graph& g, const Graph& h, const std::vector<int>& wit) {
  std::vector<char> hit(h.n(), 0);
  for (int v = 0; v < g.n(); ++v) {
    if (wit[v] < 0 || wit[v] >= h.n() || hit[wit[v]])
      throw std::logic_error("witness is not a bijection");
    hit[wit[v]] = 1;
  }
  for (int a = 0; a < g.n(); ++a)
    for (int b = a + 1; b < g.n(); ++b)
      if (g.adjacent(a, b) != h.adjacent(wit[a], wit[b]))
        throw std::logic_error("witness fails to preserve an edge");
}

namespace {

// The shared central machinery for one (C, D) pair on K = g + h: returns the
// materialized, verified side-swapping automorphism of K when one exists.
std::optional<Perm> run_pipeline(const Graph& k, const Graph& g, const Graph& h,
                                 const VertexSet& c, const CentralPoset& cpg,
                                 const VertexSet& dcl, const CentralPoset& cph, int d) {
  if (cpg.bridges.size() != cph.bridges.size()) return std::nullopt;
  int kb = int(cpg.bridges.size());
  if (kb == 0) {
    // both graphs equal their central cliques: the plain copy swap works
    std::vector<int> img(k.n());
    for (int v = 0; v < g.n(); ++v) img[v] = g.n() + v;
    for (int v = 0; v < h.n(); ++v) img[g.n() + v] = v;
    return Perm(std::move(img));
  }

  AttachmentCollection u = build_collection(cpg, cph, c, dcl, g.n(), k.n());

  // per-level coloring of the bridge poset, one shared palette for both sides
  Poset r = u.r;
  std::map<std::pair<int, std::string>, int> palette;
  for (int b = 0; b < u.nb(); ++b) {
    const Bridge& br = b < kb ? cpg.bridges[b] : cph.bridges[b - kb];
    auto key = std::make_pair(u.level[b],
                              bridge_key(b < kb ? g : h, b < kb ? c : dcl, br));
    r.set_color(b, palette.emplace(key, int(palette.size())).first->second + 1);
  }

  PermGroup gamma = colored_poset_aut(r);
  PermGroup refined = gamma_prime(u, gamma, d);
  SideAnalysis sides = side_analysis(u, refined, d);
  if (!sides.has_swap) return std::nullopt;
  return materialize_witness(k, u, sides.swap);
}

bool clique_sizes_match(const std::vector<VertexSet>& s, const std::vector<VertexSet>& t) {
  if (s.size() != t.size()) return false;
  std::vector<int> a, b;
  for (const VertexSet& x : s) a.push_back(x.count());
  for (const VertexSet& x : t) b.push_back(x.count());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace

std::optional<VertexSet> admissible_clique(const Graph& g, int d) {
  if (!peo(g).chordal()) return std::nullopt;
  for (const VertexSet& cand : maximal_cliques(g)) {
    auto cp = central_poset(g, cand);
    if (!cp) continue;
    if (d >= 1 && width(cp->poset).width > d) continue;
    return cand;
  }
  return std::nullopt;
}

std::vector<VertexSet> admissible_cliques(const Graph& g, int d) {
  std::vector<VertexSet> out;
  if (!peo(g).chordal()) return out;
  for (const VertexSet& cand : maximal_cliques(g)) {
    auto cp = central_poset(g, cand);
    if (cp && !(d >= 1 && width(cp->poset).width > d)) out.push_back(cand);
  }
  return out;
}

IsoVerdict sd_iso_bounded_clique(const Graph& g, const Graph& h, int p) {
  IsoVerdict out;
  if (!peo(g).chordal() || !peo(h).chordal()) {
    out.trace = "not isomorphic as S_d-graphs: an input is not chordal";
    return out;
  }
  std::vector<VertexSet> s = maximal_cliques(g), t = maximal_cliques(h);
  if (!clique_sizes_match(s, t)) {
    out.trace = "maximal clique collections differ";
    return out;
  }

  VertexSet c;
  std::optional<CentralPoset> cpg;
  for (const VertexSet& cand : s) {
    cpg = central_poset(g, cand);
    if (cpg) {
      c = cand;
      break;
    }
  }
  if (!cpg) {
    out.trace = "not isomorphic as S_d-graphs: no clique of the first graph has interval bridges";
    return out;
  }
  std::vector<int> cvs = set_to_list(c);
  if (int(cvs.size()) > p)
    out.trace = "note: clique size " + std::to_string(cvs.size()) + " exceeds the stated bound; ";

  // bridge graphs of g with the fixed labeling of C frozen into colors
  int kb = int(cpg->bridges.size());
  auto labeled_bridge = [](const Graph& gr, const std::vector<int>& cl_list,
                           const std::vector<int>& label, const Bridge& br) {
    VertexSet part = br.verts;
    for (int v : cl_list) part.set(v);
    auto [sub, back] = gr.induced(part);
    std::map<int, int> pos;
    for (size_t i = 0; i < cl_list.size(); ++i) pos[cl_list[i]] = int(i);
    for (int v = 0; v < sub.n(); ++v) {
      auto it = pos.find(back[v]);
      sub.set_color(v, it == pos.end() ? 0 : label[it->second] + 1);
    }
    return sub;
  };
  std::vector<int> id_label(cvs.size());
  for (size_t i = 0; i < cvs.size(); ++i) id_label[i] = int(i);
  std::vector<std::string> gcodes;
  for (const Bridge& br : cpg->bridges)
    gcodes.push_back(interval_canon(labeled_bridge(g, cvs, id_label, br)).code);

  for (const VertexSet& dcl : t) {
    if (dcl.count() != c.count()) continue;
    auto cph = central_poset(h, dcl);
    if (!cph || int(cph->bridges.size()) != kb) continue;
    std::vector<int> dvs = set_to_list(dcl);

    std::vector<int> label(dvs.size());
    for (size_t i = 0; i < dvs.size(); ++i) label[i] = int(i);
    do {
      std::vector<std::string> hcodes;
      for (const Bridge& br : cph->bridges)
        hcodes.push_back(interval_canon(labeled_bridge(h, dvs, label, br)).code);
      // greedy matching on the bridge isomorphism classes
      std::vector<char> used(kb, 0);
      std::vector<int> match(kb, -1);
      bool all = true;
      for (int i = 0; i < kb && all; ++i) {
        all = false;
        for (int j = 0; j < kb; ++j)
          if (!used[j] && gcodes[i] == hcodes[j]) {
            used[j] = 1;
            match[i] = j;
            all = true;
            break;
          }
      }
      if (!all) continue;

      // materialize: C by the labeling, interiors by per-pair isomorphisms
      std::vector<int> wit(g.n(), -1);
      for (size_t q = 0; q < cvs.size(); ++q)
        for (size_t j = 0; j < dvs.size(); ++j)
          if (label[j] == int(q)) wit[cvs[q]] = dvs[j];
      for (int i = 0; i < kb; ++i) {
        VertexSet gpart = cpg->bridges[i].verts;
        for (int v : cvs) gpart.set(v);
        VertexSet hpart = cph->bridges[match[i]].verts;
        for (int v : dvs) hpart.set(v);
        Graph ga = labeled_bridge(g, cvs, id_label, cpg->bridges[i]);
        Graph hb = labeled_bridge(h, dvs, label, cph->bridges[match[i]]);
        auto iso = interval_iso(ga, hb);
        if (!iso) throw std::logic_error("matched bridge codes without an isomorphism");
        auto back_g = g.induced(gpart).second;
        auto back_h = h.induced(hpart).second;
        for (size_t v = 0; v < back_g.size(); ++v)
          if (cpg->bridges[i].verts.test(back_g[v])) wit[back_g[v]] = back_h[(*iso)[v]];
      }
      verify_graph_iso(g, h, wit);
      out.isomorphic = true;
      out.witness = wit;
      out.trace += "clique " + set_to_string(c) + " matched " + set_to_string(dcl) +
                   " under a relabeling";
      return out;
    } while (std::next_permutation(label.begin(), label.end()));
  }
  out.trace += "no candidate clique matched under any relabeling";
  return out;
}

IsoVerdict sd_iso(const Graph& g, const Graph& h, int d, int jobs, const VertexSet* force_c) {
  if (d < 1) throw std::invalid_argument("star degree must be at least 1");
  IsoVerdict out;
  if (!peo(g).chordal() || !peo(h).chordal()) {
    out.trace = "not isomorphic as S_d-graphs: an input is not chordal";
    return out;
  }
  std::vector<VertexSet> s = maximal_cliques(g), t = maximal_cliques(h);
  if (!clique_sizes_match(s, t)) {
    out.trace = "maximal clique collections differ";
    return out;
  }

  VertexSet c;
  std::optional<CentralPoset> cpg;
  if (force_c) {
    cpg = central_poset(g, *force_c);
    if (!cpg || width(cpg->poset).width > d)
      throw std::invalid_argument("forced central clique is not admissible");
    c = *force_c;
  } else {
    for (const VertexSet& cand : s) {
      auto cp = central_poset(g, cand);
      if (cp && width(cp->poset).width <= d) {
        c = cand;
        cpg = std::move(cp);
        break;
      }
    }
  }
  if (!cpg) {
    out.trace =
        "not isomorphic as S_d-graphs: the first graph has no admissible central clique "
        "for d = " +
        std::to_string(d);
    return out;
  }

  std::vector<int> cands;
  for (int i = 0; i < int(t.size()); ++i)
    if (t[i].count() == c.count()) cands.push_back(i);

  Graph k = disjoint_union(g, h);
  std::vector<std::optional<Perm>> results(cands.size());
  std::atomic<size_t> next{0};
  std::atomic<int> best{int(cands.size())};
  auto work = [&]() {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= cands.size()) return;
      if (int(i) >= best.load()) continue;
      const VertexSet& dcl = t[cands[i]];
      auto cph = central_poset(h, dcl);
      if (!cph || width(cph->poset).width > d) continue;
      auto swap = run_pipeline(k, g, h, c, *cpg, dcl, *cph, d);
      if (swap) {
        results[i] = std::move(swap);
        int cur = best.load();
        while (int(i) < cur && !best.compare_exchange_weak(cur, int(i))) {
        }
      }
    }
  };
  if (jobs <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(work);
    for (std::thread& th : pool) th.join();
  }

  for (size_t i = 0; i < cands.size(); ++i) {
    if (!results[i]) continue;
    const Perm& kperm = *results[i];
    std::vector<int> wit(g.n());
    for (int v = 0; v < g.n(); ++v) {
      if (kperm(v) < g.n()) throw std::logic_error("side swap left a vertex on its side");
      wit[v] = kperm(v) - g.n();
    }
    verify_graph_iso(g, h, wit);
    out.isomorphic = true;
    out.witness = wit;
    out.trace = "central clique " + set_to_string(c) + " matched " +
                set_to_string(t[cands[i]]) + "; swap verified";
    return out;
  }
  out.trace = "central clique " + set_to_string(c) + ": none of " +
              std::to_string(cands.size()) + " candidate cliques admits a side swap";
  return out;
}

PermGroup sd_aut(const Graph& g, int d) {
  if (d < 1) throw std::invalid_argument("star degree must be at least 1");
  auto c_opt = admissible_clique(g, d);
  if (!c_opt) throw std::invalid_argument("input is not recognized as an S_d-graph");
  VertexSet c = *c_opt;
  auto cpg = central_poset(g, c);

  int n = g.n();
  Graph k = disjoint_union(g, g);
  std::vector<Perm> kgens;
  auto add_kgen = [&](const Perm& p) {
    for (int a = 0; a < k.n(); ++a)
      for (int b = a + 1; b < k.n(); ++b)
        if (k.adjacent(a, b) != k.adjacent(p(a), p(b)))
          throw std::logic_error("generator is not an automorphism of the doubled graph");
    kgens.push_back(p);
  };

  // side swaps for every matching candidate clique of the second copy
  for (const VertexSet& dcl : maximal_cliques(g)) {
    if (dcl.count() != c.count()) continue;
    auto cph = central_poset(g, dcl);
    if (!cph || width(cph->poset).width > d) continue;
    if (cph->bridges.size() != cpg->bridges.size()) continue;
    if (cpg->bridges.empty()) {
      std::vector<int> img(2 * n);
      for (int v = 0; v < n; ++v) img[v] = n + v, img[n + v] = v;
      add_kgen(Perm(std::move(img)));
      continue;
    }
    AttachmentCollection u = build_collection(*cpg, *cph, c, dcl, n, 2 * n);
    Poset r = u.r;
    std::map<std::pair<int, std::string>, int> palette;
    int kb = int(cpg->bridges.size());
    for (int b = 0; b < u.nb(); ++b) {
      const Bridge& br = b < kb ? cpg->bridges[b] : cph->bridges[b - kb];
      auto key = std::make_pair(u.level[b], bridge_key(g, b < kb ? c : dcl, br));
      r.set_color(b, palette.emplace(key, int(palette.size())).first->second + 1);
    }
    PermGroup refined = gamma_prime(u, colored_poset_aut(r), d);
    SideAnalysis sides = side_analysis(u, refined, d);
    if (!sides.has_swap) continue;
    for (const Perm& rho : sides.group.gens()) add_kgen(materialize_witness(k, u, rho));
  }

  // interior symmetries of each bridge and symmetric groups on the cells of
  // the attachment collection in C, mirrored into both copies
  for (int off = 0; off < 2 * n; off += n) {
    for (const Bridge& br : cpg->bridges) {
      Graph sub = rank_colored_interior(g, c, br);
      auto back = g.induced(br.verts).second;
      auto ia = interval_aut(sub);
      if (!ia) throw std::logic_error("bridge interior is not interval");
      for (const Perm& a : ia->gens) {
        std::vector<int> img(2 * n);
        for (int v = 0; v < 2 * n; ++v) img[v] = v;
        for (int v = 0; v < sub.n(); ++v) img[back[v] + off] = back[a(v)] + off;
        add_kgen(Perm(std::move(img)));
      }
    }
    std::map<std::vector<int>, std::vector<int>> cells;
    for (int w = c.next(0); w >= 0; w = c.next(w + 1)) {
      std::vector<int> sig;
      for (size_t i = 0; i < cpg->bridges.size(); ++i)
        for (size_t j = 0; j < cpg->bridges[i].hoods.size(); ++j)
          if (cpg->bridges[i].hoods[j].test(w)) sig.push_back(int(i) << 8 | int(j));
      cells[sig].push_back(w);
    }
    for (const auto& [sig, members] : cells)
      for (size_t q = 0; q + 1 < members.size(); ++q) {
        std::vector<int> img(2 * n);
        for (int v = 0; v < 2 * n; ++v) img[v] = v;
        std::swap(img[members[q] + off], img[members[q + 1] + off]);
        add_kgen(Perm(std::move(img)));
      }
  }

  PermGroup doubled = schreier_sims(2 * n, kgens);
  // first-copy stabilizer: index <= 2 because every generator moves the
  // copies wholesale
  auto stays = [n](const Perm& p) {
    for (int v = 0; v < n; ++v)
      if (p(v) >= n) return false;
    return true;
  };
  auto side_key = [n](const Perm& p) { return std::string(p(0) < n ? "0" : "1"); };
  PermGroup kernel = fhl_subgroup(doubled, stays, BigInt(2), side_key);

  std::vector<Perm> rgens;
  for (const Perm& p : kernel.gens()) {
    std::vector<int> img(n);
    for (int v = 0; v < n; ++v) img[v] = p(v);
    Perm rp(std::move(img));
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (g.adjacent(a, b) != g.adjacent(rp(a), rp(b)))
          throw std::logic_error("restricted generator is not an automorphism");
    rgens.push_back(std::move(rp));
  }
  return schreier_sims(n, rgens);
}

}  // namespace sdiso
