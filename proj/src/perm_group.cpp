#include "sdiso/perm_group.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <stdexcept>

namespace sdiso {

Perm PermGroup::sift_from(int level, const Perm& p, int* stop_level) const {
  Perm cur = p;
  for (int i = level; i < int(levels_.size()); ++i) {
    if (cur.is_identity()) {
      if (stop_level) *stop_level = i;
      return cur;
    }
    int x = cur(levels_[i].base);
    auto it = levels_[i].transversal.find(x);
    if (it == levels_[i].transversal.end()) {
      if (stop_level) *stop_level = i;
      return cur;
    }
    cur = it->second.inverse() * cur;  // now fixes levels_[i].base
  }
  if (stop_level) *stop_level = int(levels_.size());
  return cur;
}

// A generator stored at level j fixes the first j base points, so the
// generating set of the level-k stabilizer is everything stored at k or
// deeper.
std::vector<Perm> PermGroup::cumulative_gens(int level) const {
  std::vector<Perm> out;
  for (int j = level; j < int(levels_.size()); ++j)
    for (const Perm& s : levels_[j].gens) out.push_back(s);
  return out;
}

void PermGroup::store(int level, const Perm& p) {
  if (level == int(levels_.size())) {
    Level l;
    for (int x = 0; x < n_; ++x)
      if (p(x) != x) {
        l.base = x;
        break;
      }
    levels_.push_back(std::move(l));
  }
  levels_[level].gens.push_back(p);
}

void PermGroup::rebuild_orbit(int level) {
  std::vector<Perm> gens = cumulative_gens(level);
  Level& l = levels_[level];
  l.transversal.clear();
  l.transversal.emplace(l.base, Perm::identity(n_));
  std::vector<int> queue{l.base};
  for (size_t h = 0; h < queue.size(); ++h) {
    int x = queue[h];
    for (const Perm& s : gens) {
      int y = s(x);
      if (!l.transversal.count(y)) {
        l.transversal.emplace(y, s * l.transversal.at(x));
        queue.push_back(y);
      }
    }
  }
}

// Re-establish the chain invariant at `level`, assuming all deeper levels
// already satisfy it: the orbit is closed under the cumulative generators
// and every Schreier generator sifts to the identity below.  New residues
// are stored where their sift stopped and the deeper chain is repaired
// deepest-first before this level restarts.
void PermGroup::ensure(int level) {
  for (;;) {
    rebuild_orbit(level);
    std::vector<int> pts;
    for (const auto& [x, rep] : levels_[level].transversal) pts.push_back(x);
    std::vector<Perm> gens = cumulative_gens(level);

    bool dirty = false;
    for (size_t xi = 0; xi < pts.size() && !dirty; ++xi) {
      for (const Perm& s : gens) {
        Perm ux = levels_[level].transversal.at(pts[xi]);
        Perm uy = levels_[level].transversal.at(s(pts[xi]));
        Perm schreier = uy.inverse() * (s * ux);
        int stop = 0;
        Perm res = sift_from(level + 1, schreier, &stop);
        if (res.is_identity()) continue;
        store(stop, res);
        for (int m = stop; m > level; --m) ensure(m);
        dirty = true;
        break;
      }
    }
    if (!dirty) return;
  }
}

void PermGroup::add_gen(const Perm& p) {
  if (p.n() != n_) throw std::invalid_argument("permutation domain mismatch");
  int stop = 0;
  Perm res = sift(p, &stop);
  if (res.is_identity()) return;  // already a member, nothing to do
  store(stop, res);
  for (int m = stop; m >= 0; --m) ensure(m);
}

BigInt PermGroup::order() const {
  BigInt o = 1;
  for (const Level& l : levels_) o *= BigInt(l.transversal.size());
  return o;
}

std::vector<Perm> PermGroup::gens() const {
  std::vector<Perm> out;
  std::set<std::vector<int>> seen;
  for (const Level& l : levels_)
    for (const Perm& s : l.gens)
      if (seen.insert(s.img).second) out.push_back(s);
  return out;
}

PermGroup schreier_sims(int domain, const std::vector<Perm>& gens) {
  PermGroup g(domain);
  for (const Perm& p : gens) g.add_gen(p);
  return g;
}

PermGroup fhl_subgroup(const PermGroup& g,
                       const std::function<bool(const Perm&)>& member_test,
                       const BigInt& index_bound,
                       const std::function<std::string(const Perm&)>& coset_key) {
  int n = g.domain();
  if (!member_test(Perm::identity(n)))
    throw std::invalid_argument("member_test rejects the identity");
  std::vector<Perm> gens = g.gens();

  PermGroup h(n);
  bool all_pass = true;
  for (const Perm& s : gens)
    if (!member_test(s)) {
      all_pass = false;
      break;
    }
  if (all_pass) {
    // The predicate cuts out a subgroup, so if it accepts every generator
    // the subgroup is the whole group.
    for (const Perm& s : gens) h.add_gen(s);
    if (h.order() != g.order()) throw std::logic_error("subgroup closure mismatch");
    return h;
  }

  // Coset representatives of the subgroup, discovered by closing {id} under
  // left products with the generators: s*r lands in the coset r'H exactly
  // when r'^{-1}*s*r passes the test, and that element is then a subgroup
  // generator (Schreier).  Representative 0 is the identity, so the
  // subgroup's own coset always matches first.  Since the key is constant on
  // left cosets, candidates outside t's bucket can never match.
  std::vector<Perm> reps{Perm::identity(n)};
  std::vector<Perm> repinv{Perm::identity(n)};
  std::map<std::string, std::vector<int>> buckets;
  auto key_of = [&](const Perm& p) { return coset_key ? coset_key(p) : std::string(); };
  buckets[key_of(reps[0])].push_back(0);
  for (size_t i = 0; i < reps.size(); ++i) {
    for (const Perm& s : gens) {
      Perm t = s * reps[i];
      int found = -1;
      std::string tk = key_of(t);
      for (int j : buckets[tk]) {
        if (member_test(repinv[j] * t)) {
          found = j;
          break;
        }
      }
      if (found < 0) {
        buckets[tk].push_back(int(reps.size()));
        reps.push_back(t);
        repinv.push_back(t.inverse());
        if (BigInt(reps.size()) > index_bound)
          throw std::runtime_error("subgroup index exceeds the declared bound");
      } else {
        Perm sg = repinv[found] * t;
        if (!member_test(sg)) throw std::logic_error("schreier element fails the test");
        h.add_gen(sg);
      }
    }
  }
  if (h.order() * BigInt(reps.size()) != g.order())
    throw std::logic_error("coset table violates Lagrange");
  return h;
}

PermGroup bcm_automorphism(const Graph& g, const std::vector<std::vector<int>>& classes) {
  int n = g.n();
  std::vector<int> cls(n, -1);
  for (int c = 0; c < int(classes.size()); ++c)
    for (int v : classes[c]) {
      if (v < 0 || v >= n || cls[v] != -1)
        throw std::invalid_argument("classes do not partition the vertex set");
      cls[v] = c;
    }
  for (int v = 0; v < n; ++v)
    if (cls[v] == -1) throw std::invalid_argument("classes do not partition the vertex set");
  size_t d = 0;
  for (const auto& c : classes) d = std::max(d, c.size());

  // Start from the product of the symmetric groups on the classes.
  PermGroup cur(n);
  for (const auto& c : classes) {
    if (c.size() < 2) continue;
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    img[c[0]] = c[1];
    img[c[1]] = c[0];
    cur.add_gen(Perm(img));
    if (c.size() > 2) {
      std::iota(img.begin(), img.end(), 0);
      for (size_t i = 0; i < c.size(); ++i) img[c[i]] = c[(i + 1) % c.size()];
      cur.add_gen(Perm(img));
    }
  }

  // Refine one class pair at a time: members must carry the edges between
  // the two classes onto edges.  Since every element respects the classes,
  // preserving each pair's edge set is exactly being an automorphism, and
  // each step has index at most (d!)^2 in the previous group.
  BigInt bound = factorial(int(d)) * factorial(int(d));
  for (int a = 0; a < int(classes.size()); ++a) {
    for (int b = a; b < int(classes.size()); ++b) {
      std::vector<std::pair<int, int>> edges;
      for (int u : classes[a])
        for (int v : classes[b])
          if ((a == b ? u < v : true) && g.adjacent(u, v)) edges.emplace_back(u, v);
      if (edges.empty()) continue;
      auto test = [&](const Perm& p) {
        for (auto [u, v] : edges)
          if (!g.adjacent(p(u), p(v))) return false;
        return true;
      };
      // The image of the edge set pins down the coset, so the table is
      // bucketed instead of scanned.
      auto key = [&](const Perm& p) {
        std::vector<std::pair<int, int>> im;
        im.reserve(edges.size());
        for (auto [u, v] : edges)
          im.emplace_back(std::min(p(u), p(v)), std::max(p(u), p(v)));
        std::sort(im.begin(), im.end());
        std::string s;
        for (auto [u, v] : im) {
          s += std::to_string(u);
          s += ',';
          s += std::to_string(v);
          s += ';';
        }
        return s;
      };
      cur = fhl_subgroup(cur, test, bound, key);
    }
  }
  return cur;
}

PermGroup colored_poset_aut(const Poset& r) {
  int n = r.n();
  Graph comp(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (r.comparable(a, b)) comp.add_edge(a, b);

  std::vector<std::vector<int>> lv = levels(r);
  std::map<std::pair<int, int>, std::vector<int>> cells;
  for (int i = 0; i < int(lv.size()); ++i)
    for (int v : lv[i]) cells[{i, r.color(v)}].push_back(v);
  std::vector<std::vector<int>> classes;
  for (auto& [key, members] : cells) classes.push_back(members);

  PermGroup out = bcm_automorphism(comp, classes);
  // Comparable pairs on distinct levels are ordered by their levels, so
  // level-preserving comparability automorphisms preserve the relation; spot
  // check the generators anyway.
  for (const Perm& p : out.gens())
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (r.less(a, b) && !r.less(p(a), p(b)))
          throw std::logic_error("poset automorphism generator breaks the order");
  return out;
}

}  // namespace sdiso
