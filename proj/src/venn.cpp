#include "sdiso/venn.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

#include "sdiso/interval.hpp"

namespace sdiso {

namespace {

using Sig = std::vector<int>;

// Nonzero Venn cells of the key family, per ground vertex signature.  Keys
// must be sorted.  with_side appends a marker nkeys()+0 / nkeys()+1 telling
// which central clique the vertex lies in.
std::map<Sig, int> signature_cells(const AttachmentCollection& u, const std::vector<int>& keys,
                                   bool with_side) {
  std::map<Sig, int> cells;
  for (int s = 0; s < 2; ++s) {
    const VertexSet& cl = u.cliq[s];
    for (int w = cl.next(0); w >= 0; w = cl.next(w + 1)) {
      Sig sig;
      for (int k : keys)
        if (u.set_of(k).test(w)) sig.push_back(k);
      if (with_side) sig.push_back(u.nkeys() + s);
      ++cells[sig];
    }
  }
  return cells;
}

int cell_value(const std::map<Sig, int>& cells, const Sig& sig) {
  auto it = cells.find(sig);
  return it == cells.end() ? 0 : it->second;
}

// Serialized {(image of S, |cell S|)} over the nonzero cells.  For a
// relabeling map composed functorially this is constant on left cosets of
// the cell-preserving subgroup and equal exactly on each coset, so it is a
// perfect coset key for the refinement predicates below.
std::string image_fingerprint(const std::map<Sig, int>& cells,
                              const std::function<Sig(const Sig&)>& img) {
  std::vector<std::pair<Sig, int>> out;
  out.reserve(cells.size());
  for (const auto& [sig, cnt] : cells) out.emplace_back(img(sig), cnt);
  std::sort(out.begin(), out.end());
  std::string s;
  for (const auto& [sig, cnt] : out) {
    for (int k : sig) {
      s += std::to_string(k);
      s += ',';
    }
    s += ':';
    s += std::to_string(cnt);
    s += ';';
  }
  return s;
}

}  // namespace

int AttachmentCollection::bridge_of(int key) const {
  auto it = std::upper_bound(first_key.begin(), first_key.end(), key);
  return int(it - first_key.begin()) - 1;
}

AttachmentCollection build_collection(const CentralPoset& left, const CentralPoset& right,
                                      const VertexSet& c, const VertexSet& d, int offset,
                                      int kn) {
  auto shift = [kn](const VertexSet& s, int off) {
    VertexSet out(kn);
    for (int v = s.next(0); v >= 0; v = s.next(v + 1)) out.set(v + off);
    return out;
  };

  AttachmentCollection u;
  for (const Bridge& b : left.bridges) {
    u.members.emplace_back();
    for (const VertexSet& h : b.hoods) u.members.back().push_back(shift(h, 0));
    u.verts.push_back(shift(b.verts, 0));
    u.side.push_back(0);
  }
  for (const Bridge& b : right.bridges) {
    u.members.emplace_back();
    for (const VertexSet& h : b.hoods) u.members.back().push_back(shift(h, offset));
    u.verts.push_back(shift(b.verts, offset));
    u.side.push_back(1);
  }
  u.cliq[0] = shift(c, 0);
  u.cliq[1] = shift(d, offset);

  u.r = poset_union(left.poset, right.poset);
  u.lv = levels(u.r);
  u.level.assign(u.nb(), -1);
  for (int li = 0; li < int(u.lv.size()); ++li)
    for (int e : u.lv[li]) u.level[e] = li;

  u.first_key.assign(1, 0);
  for (const auto& chain : u.members) {
    for (size_t i = 1; i < chain.size(); ++i)
      if (!(chain[i - 1].subset_of(chain[i])) || chain[i - 1] == chain[i])
        throw std::logic_error("attachment chain is not strictly nested");
    u.first_key.push_back(u.first_key.back() + int(chain.size()));
  }
  return u;
}

Perm induced_collection_perm(const AttachmentCollection& u, const Perm& rho) {
  if (rho.n() != u.nb()) throw std::invalid_argument("bridge permutation domain mismatch");
  std::vector<int> img(u.nkeys());
  for (int b = 0; b < u.nb(); ++b) {
    int b2 = rho(b);
    if (u.members[b].size() != u.members[b2].size())
      throw std::invalid_argument("bridge image has a different attachment chain length");
    for (int i = 0; i < int(u.members[b].size()); ++i) img[u.key_of(b, i)] = u.key_of(b2, i);
  }
  return Perm(std::move(img));
}

VennCells venn_cells(const AttachmentCollection& u, const std::vector<int>& restrict_keys) {
  std::vector<int> keys = restrict_keys;
  std::sort(keys.begin(), keys.end());
  return VennCells{signature_cells(u, keys, false)};
}

std::optional<std::vector<int>> venn_violation(const AttachmentCollection& u,
                                               const std::vector<int>& restrict_keys,
                                               const Perm& key_perm) {
  std::vector<int> keys = restrict_keys;
  std::sort(keys.begin(), keys.end());
  {
    std::vector<int> ikeys;
    for (int k : keys) ikeys.push_back(key_perm(k));
    std::sort(ikeys.begin(), ikeys.end());
    if (ikeys != keys)
      throw std::invalid_argument("restricted keys are not closed under the permutation");
  }
  std::map<Sig, int> cells = signature_cells(u, keys, false);
  Perm inv = key_perm.inverse();
  auto map_sig = [](const Sig& s, const Perm& p) {
    Sig t;
    for (int k : s) t.push_back(p(k));
    std::sort(t.begin(), t.end());
    return t;
  };

  // Candidates for the smallest violated signature: every nonzero cell and
  // every preimage of one (a zero cell facing a nonzero image is violated
  // as well).
  std::set<Sig> candidates;
  for (const auto& [sig, cnt] : cells) {
    if (sig.empty()) continue;
    candidates.insert(sig);
    candidates.insert(map_sig(sig, inv));
  }
  std::optional<Sig> best;
  for (const Sig& cand : candidates) {
    if (cell_value(cells, cand) == cell_value(cells, map_sig(cand, key_perm))) continue;
    if (!best || cand.size() < best->size() || (cand.size() == best->size() && cand < *best))
      best = cand;
  }
  return best;
}

int side_pattern(const AttachmentCollection& u, const Perm& rho) {
  bool keep = false, cross = false;
  for (int b = 0; b < u.nb(); ++b)
    (u.side[rho(b)] != u.side[b] ? cross : keep) = true;
  if (keep && cross) return -1;
  return cross ? 1 : 0;
}

bool venn_good_sided(const AttachmentCollection& u, const Perm& rho) {
  int pat = side_pattern(u, rho);
  if (pat < 0) return false;
  Perm kp = induced_collection_perm(u, rho);
  int m = u.nkeys();

  std::vector<int> keys(m);
  std::iota(keys.begin(), keys.end(), 0);
  std::map<Sig, int> cells = signature_cells(u, keys, true);
  auto img = [&](const Sig& s) {
    Sig t;
    for (int k : s)
      t.push_back(k < m ? kp(k) : (pat == 0 ? k : m + (m + 1) - k));
    std::sort(t.begin(), t.end());
    return t;
  };
  // The image map is injective and total mass matches, so one direction of
  // the cell comparison suffices.
  for (const auto& [sig, cnt] : cells)
    if (cell_value(cells, img(sig)) != cnt) return false;
  return true;
}

GammaStepResult gamma_prime_step(const AttachmentCollection& u, const PermGroup& prev, int d) {
  int k = int(u.lv.size());
  std::vector<Perm> gens = prev.gens();
  std::vector<Perm> kperm;
  for (const Perm& s : gens) kperm.push_back(induced_collection_perm(u, s));

  auto keys_in = [&](const std::vector<char>& bridge_in) {
    std::vector<int> keys;
    for (int b = 0; b < u.nb(); ++b)
      if (bridge_in[b])
        for (int i = 0; i < int(u.members[b].size()); ++i) keys.push_back(u.key_of(b, i));
    return keys;
  };
  auto violated = [&](const std::vector<int>& keys) {
    for (const Perm& kp : kperm)
      if (venn_violation(u, keys, kp)) return true;
    return false;
  };
  auto prefix_with = [&](int b, const std::vector<char>& m2) {
    std::vector<char> in = m2;
    for (int li = 0; li < b; ++li)
      for (int e : u.lv[li]) in[e] = 1;
    return in;
  };

  std::vector<char> m2(u.nb(), 0);
  std::vector<int> js;
  for (int a = 1; a <= d; ++a) {
    if (!violated(keys_in(prefix_with(k, m2)))) {
      if (a == 1) return GammaStepResult{true, PermGroup(prev.domain()), {}};
      throw std::logic_error("level scan lost its violation");
    }
    // Minimal prefix length whose collection (together with the already
    // selected levels) is violated; monotone, so halve instead of stepping.
    int lo = 1, hi = k;
    while (lo < hi) {
      int mid = lo + (hi - lo) / 2;
      if (violated(keys_in(prefix_with(mid, m2))))
        hi = mid;
      else
        lo = mid + 1;
    }
    js.push_back(lo);
    std::fill(m2.begin(), m2.end(), 0);
    for (int j : js)
      for (int e : u.lv[j - 1]) m2[e] = 1;
    if (lo == 1) break;
  }

  std::vector<int> u2 = keys_in(m2);
  auto test = [&u, &u2](const Perm& rho) {
    return venn_good(u, u2, induced_collection_perm(u, rho));
  };
  std::map<Sig, int> u2cells = signature_cells(u, u2, false);
  auto key = [&u, &u2cells](const Perm& rho) {
    Perm kp = induced_collection_perm(u, rho);
    return image_fingerprint(u2cells, [&kp](const Sig& s) {
      Sig t;
      for (int k0 : s) t.push_back(kp(k0));
      std::sort(t.begin(), t.end());
      return t;
    });
  };
  BigInt bound = 1;
  BigInt f2d = factorial(2 * d);
  for (int i = 0; i < d; ++i) bound *= f2d;

  GammaStepResult out;
  out.next = fhl_subgroup(prev, test, bound, key);
  out.level_indices = js;
  if (!(out.next.order() < prev.order()))
    throw std::logic_error("refinement step failed to shrink the group");
  return out;
}

PermGroup gamma_prime(const AttachmentCollection& u, const PermGroup& gamma, int d) {
  PermGroup cur = gamma;
  BigInt ord = gamma.order();
  int max_steps = (ord > 1 ? int(boost::multiprecision::msb(ord)) : 0) + 1;
  for (int step = 0; step <= max_steps; ++step) {
    GammaStepResult r = gamma_prime_step(u, cur, d);
    if (r.all_good) return cur;
    cur = r.next;
  }
  throw std::logic_error("refinement exceeded its halving budget");
}

SideAnalysis side_analysis(const AttachmentCollection& u, const PermGroup& gamma_prime_grp,
                           int d) {
  SideAnalysis out;
  auto coherent = [&u](const Perm& rho) { return venn_good_sided(u, rho); };
  int m = u.nkeys();
  std::vector<int> keys(m);
  std::iota(keys.begin(), keys.end(), 0);
  std::map<Sig, int> ext_cells = signature_cells(u, keys, true);
  // No pattern component in the key: the target subgroup may itself hold a
  // side swap, in which case one coset spans both patterns and only the
  // fingerprint stays constant across it.
  auto ckey = [&u, &ext_cells, m](const Perm& rho) {
    int pat = side_pattern(u, rho);
    if (pat < 0) return std::string("m");  // side mixers share one bucket
    Perm kp = induced_collection_perm(u, rho);
    return image_fingerprint(ext_cells, [&](const Sig& sg) {
      Sig t;
      for (int k0 : sg) t.push_back(k0 < m ? kp(k0) : (pat == 0 ? k0 : m + (m + 1) - k0));
      std::sort(t.begin(), t.end());
      return t;
    });
  };
  out.group = fhl_subgroup(gamma_prime_grp, coherent, BigInt(1) << (2 * d + 2), ckey);

  auto keeps = [&u](const Perm& rho) { return side_pattern(u, rho) == 0; };
  auto pkey = [&u](const Perm& rho) { return std::to_string(side_pattern(u, rho)); };
  out.keepers = fhl_subgroup(out.group, keeps, BigInt(2), pkey);

  BigInt ratio = out.group.order() / out.keepers.order();
  if (ratio == 2) {
    out.has_swap = true;
    for (const Perm& s : out.group.gens())
      if (side_pattern(u, s) == 1) {
        out.swap = s;
        break;
      }
    if (out.swap.n() == 0) throw std::logic_error("swap coset lacks a swapping generator");
  } else if (ratio != 1) {
    throw std::logic_error("side classification split into more than two cosets");
  }
  return out;
}

Perm materialize_witness(const Graph& k, const AttachmentCollection& u, const Perm& rho) {
  int pat = side_pattern(u, rho);
  if (pat < 0) throw std::invalid_argument("cannot materialize a side-mixing permutation");
  Perm kp = induced_collection_perm(u, rho);
  int m = u.nkeys();

  // Cellwise part on C + D: vertices grouped by extended signature, each
  // cell mapped onto its image cell in ascending-id order.
  std::vector<int> keys(m);
  std::iota(keys.begin(), keys.end(), 0);
  std::map<Sig, std::vector<int>> cells;
  for (int s = 0; s < 2; ++s) {
    const VertexSet& cl = u.cliq[s];
    for (int w = cl.next(0); w >= 0; w = cl.next(w + 1)) {
      Sig sig;
      for (int key : keys)
        if (u.set_of(key).test(w)) sig.push_back(key);
      sig.push_back(m + s);
      cells[sig].push_back(w);
    }
  }
  auto img_sig = [&](const Sig& s) {
    Sig t;
    for (int key : s)
      t.push_back(key < m ? kp(key) : (pat == 0 ? key : m + (m + 1) - key));
    std::sort(t.begin(), t.end());
    return t;
  };
  std::vector<int> img(k.n(), -1);
  for (const auto& [sig, vs] : cells) {
    auto it = cells.find(img_sig(sig));
    if (it == cells.end() || it->second.size() != vs.size())
      throw std::logic_error("cell sizes disagree while building the witness");
    for (size_t i = 0; i < vs.size(); ++i) img[vs[i]] = it->second[i];
  }

  // Bridge interiors: any rank-preserving isomorphism glues correctly with
  // the cell map, because a rank-r vertex is adjacent to exactly the r-th
  // attachment set and cells respect those sets.
  VertexSet ground = u.ground();
  auto rank_colored = [&](int b) {
    auto [sub, back] = k.induced(u.verts[b]);
    for (int i = 0; i < sub.n(); ++i) {
      VertexSet hood = k.neighbors(back[i]) & ground;
      int color = 0;
      if (!hood.empty()) {
        for (int r = 0; r < int(u.members[b].size()); ++r)
          if (u.members[b][r] == hood) {
            color = r + 1;
            break;
          }
        if (color == 0) throw std::logic_error("bridge vertex with an unknown attachment set");
      }
      sub.set_color(i, color);
    }
    return std::make_pair(std::move(sub), std::move(back));
  };
  for (int b = 0; b < u.nb(); ++b) {
    int b2 = rho(b);
    auto [ga, backa] = rank_colored(b);
    auto [gb, backb] = rank_colored(b2);
    std::optional<std::vector<int>> iso = interval_iso(ga, gb);
    if (!iso) throw std::logic_error("bridge interiors do not match their images");
    for (int i = 0; i < ga.n(); ++i) img[backa[i]] = backb[(*iso)[i]];
  }

  for (int v = 0; v < k.n(); ++v)
    if (img[v] < 0) throw std::logic_error("witness leaves a vertex unmapped");
  Perm f(std::move(img));
  {
    std::vector<char> seen(k.n(), 0);
    for (int v = 0; v < k.n(); ++v) {
      if (seen[f(v)]) throw std::logic_error("witness maps two vertices together");
      seen[f(v)] = 1;
    }
  }
  for (int a = 0; a < k.n(); ++a)
    for (int b = a + 1; b < k.n(); ++b)
      if (k.adjacent(a, b) != k.adjacent(f(a), f(b)))
        throw std::logic_error("materialized witness breaks an edge");
  return f;
}

}  // namespace sdiso
