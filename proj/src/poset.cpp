#include "sdiso/poset.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "sdiso/interval.hpp"

namespace sdiso {

void Poset::add_relation(int a, int b) {
  if (a < 0 || b < 0 || a >= n_ || b >= n_) throw std::out_of_range("element id");
  if (a == b || less(b, a)) throw std::invalid_argument("relation creates a cycle");
  if (less(a, b)) return;
  // Close transitively: everything at or below a precedes everything at or
  // above b.
  std::vector<int> lo = below_[a].to_vector();
  lo.push_back(a);
  std::vector<int> hi = above_[b].to_vector();
  hi.push_back(b);
  for (int x : lo)
    for (int y : hi) {
      above_[x].set(y);
      below_[y].set(x);
    }
}

std::optional<CentralPoset> central_poset(const Graph& g, const VertexSet& c) {
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
  for (const VertexSet& comp : connected_components(g, c)) {
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

    // Admissibility of the candidate clique: every bridge graph must stay
    // interval.
    if (!is_interval(g.induced(c | comp).first)) return std::nullopt;

    // For an interval bridge the vertex neighborhoods in c are nested.
    for (size_t i = 0; i + 1 < r.hoods.size(); ++i)
      if (!(r.hoods[i].subset_of(r.hoods[i + 1]) && r.hoods[i] != r.hoods[i + 1]))
        throw std::logic_error("interval bridge with non-chain attachments");
    raw.push_back(std::move(r));
  }

  // Components whose attachment is one single neighborhood are equivalent
  // when that neighborhood coincides; they merge into one bridge.  Detached
  // components (empty attachment) all merge together.
  CentralPoset out;
  std::map<VertexSet, int> flat;
  for (Raw& r : raw) {
    if (r.lower == r.upper) {
      auto [it, fresh] = flat.try_emplace(r.upper, int(out.bridges.size()));
      if (!fresh) {
        Bridge& b = out.bridges[it->second];
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
    out.bridges.push_back(std::move(b));
  }

  int nb = int(out.bridges.size());
  out.poset = Poset(nb);
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < nb; ++j)
      if (i != j && out.bridges[i].upper.subset_of(out.bridges[j].lower))
        out.poset.add_relation(i, j);
  // The pairwise definition is transitive and antisymmetric once equivalent
  // components are merged; add_relation would have thrown on a cycle, and
  // closure adds nothing.
  return out;
}

WidthResult width(const Poset& p) {
  int n = p.n();
  WidthResult out;
  if (n == 0) return out;

  // Dilworth via maximum bipartite matching (Hopcroft–Karp) on the relation:
  // left u joined to right v iff u < v.
  std::vector<int> match_l(n, -1), match_r(n, -1), dist(n);
  auto bfs = [&]() {
    std::queue<int> qq;
    bool reachable = false;
    for (int u = 0; u < n; ++u) {
      dist[u] = match_l[u] < 0 ? 0 : -1;
      if (match_l[u] < 0) qq.push(u);
    }
    while (!qq.empty()) {
      int u = qq.front();
      qq.pop();
      for (int v = p.above(u).next(0); v >= 0; v = p.above(u).next(v + 1)) {
        int w = match_r[v];
        if (w < 0)
          reachable = true;
        else if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          qq.push(w);
        }
      }
    }
    return reachable;
  };
  std::function<bool(int)> dfs = [&](int u) {
    for (int v = p.above(u).next(0); v >= 0; v = p.above(u).next(v + 1)) {
      int w = match_r[v];
      if (w < 0 || (dist[w] == dist[u] + 1 && dfs(w))) {
        match_l[u] = v;
        match_r[v] = u;
        return true;
      }
    }
    dist[u] = -1;
    return false;
  };
  while (bfs())
    for (int u = 0; u < n; ++u)
      if (match_l[u] < 0) dfs(u);

  // Chains: walk successor links from elements with no matched predecessor.
  for (int v = 0; v < n; ++v) {
    if (match_r[v] >= 0) continue;
    std::vector<int> chain{v};
    for (int u = v; match_l[u] >= 0; u = match_l[u]) chain.push_back(match_l[u]);
    out.chains.push_back(std::move(chain));
  }
  out.width = int(out.chains.size());

  // Maximum antichain from the final alternating layers (Koenig): elements
  // reachable on the left but not on the right.
  std::vector<char> zl(n, 0), zr(n, 0);
  std::queue<int> qq;
  for (int u = 0; u < n; ++u)
    if (match_l[u] < 0) {
      zl[u] = 1;
      qq.push(u);
    }
  while (!qq.empty()) {
    int u = qq.front();
    qq.pop();
    for (int v = p.above(u).next(0); v >= 0; v = p.above(u).next(v + 1)) {
      if (zr[v]) continue;
      if (match_l[u] == v) continue;  // only non-matching edges leave the left
      zr[v] = 1;
      int w = match_r[v];
      if (w >= 0 && !zl[w]) {
        zl[w] = 1;
        qq.push(w);
      }
    }
  }
  for (int v = 0; v < n; ++v)
    if (zl[v] && !zr[v]) out.antichain.push_back(v);

  if (int(out.antichain.size()) != out.width)
    throw std::logic_error("antichain size differs from chain cover size");
  for (size_t i = 0; i < out.antichain.size(); ++i)
    for (size_t j = i + 1; j < out.antichain.size(); ++j)
      if (p.comparable(out.antichain[i], out.antichain[j]))
        throw std::logic_error("antichain witness not an antichain");
  return out;
}

std::vector<std::vector<int>> levels(const Poset& p) {
  std::vector<std::vector<int>> out;
  VertexSet rest(p.n());
  for (int v = 0; v < p.n(); ++v) rest.set(v);
  while (!rest.empty()) {
    std::vector<int> level;
    for (int v = rest.next(0); v >= 0; v = rest.next(v + 1))
      if (!p.below(v).intersects(rest)) level.push_back(v);
    for (int v : level) rest.reset(v);
    out.push_back(std::move(level));
  }
  return out;
}

Poset poset_union(const Poset& p, const Poset& q) {
  Poset u(p.n() + q.n());
  for (int a = 0; a < p.n(); ++a) {
    u.set_color(a, p.color(a));
    for (int b = p.above(a).next(0); b >= 0; b = p.above(a).next(b + 1))
      u.add_relation(a, b);
  }
  for (int a = 0; a < q.n(); ++a) {
    u.set_color(p.n() + a, q.color(a));
    for (int b = q.above(a).next(0); b >= 0; b = q.above(a).next(b + 1))
      u.add_relation(p.n() + a, p.n() + b);
  }
  return u;
}

Poset parse_poset(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_header = false;
  Poset p;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    auto want_int = [&](const char* what) {
      long long x;
      if (!(ls >> x)) throw ParseError(lineno, std::string("expected ") + what);
      return x;
    };
    auto finish = [&]() {
      std::string extra;
      if (ls >> extra) throw ParseError(lineno, "trailing token '" + extra + "'");
    };
    if (tag == "p") {
      if (have_header) throw ParseError(lineno, "duplicate header");
      long long n = want_int("element count");
      finish();
      if (n < 0) throw ParseError(lineno, "negative element count");
      p = Poset(int(n));
      have_header = true;
    } else if (tag == "r") {
      if (!have_header) throw ParseError(lineno, "relation before header");
      long long a = want_int("element id"), b = want_int("element id");
      finish();
      if (a < 0 || b < 0 || a >= p.n() || b >= p.n())
        throw ParseError(lineno, "element id out of range");
      try {
        p.add_relation(int(a), int(b));
      } catch (const std::invalid_argument&) {
        throw ParseError(lineno, "relation creates a cycle");
      }
    } else if (tag == "c") {
      if (!have_header) throw ParseError(lineno, "color before header");
      long long v = want_int("element id"), col = want_int("color");
      finish();
      if (v < 0 || v >= p.n()) throw ParseError(lineno, "element id out of range");
      if (col < 0) throw ParseError(lineno, "negative color");
      p.set_color(int(v), int(col));
    } else {
      throw ParseError(lineno, "unknown line tag '" + tag + "'");
    }
  }
  if (!have_header) throw ParseError(lineno, "missing 'p <n>' header");
  return p;
}

std::string serialize_poset(const Poset& p) {
  std::ostringstream out;
  out << "p " << p.n() << "\n";
  for (int a = 0; a < p.n(); ++a)
    for (int b = p.above(a).next(0); b >= 0; b = p.above(a).next(b + 1)) {
      bool cover = true;  // no z strictly between a and b
      for (int z = p.above(a).next(0); z >= 0 && cover; z = p.above(a).next(z + 1))
        if (z != b && p.less(z, b)) cover = false;
      if (cover) out << "r " << a << " " << b << "\n";
    }
  for (int v = 0; v < p.n(); ++v)
    if (p.color(v) != 0) out << "c " << v << " " << p.color(v) << "\n";
  return out.str();
}

}  // namespace sdiso
