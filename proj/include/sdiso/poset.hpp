#ifndef SDISO_POSET_HPP
#define SDISO_POSET_HPP

#include <optional>
#include <string>
#include <vector>

#include "sdiso/graph.hpp"

namespace sdiso {

// Finite strict partial order on {0..n-1} with optional element colors.
// The stored relation is always transitively closed.
class Poset {
 public:
  Poset() = default;
  explicit Poset(int n)
      : n_(n), above_(n, VertexSet(n)), below_(n, VertexSet(n)), color_(n, 0) {}

  int n() const { return n_; }

  // Declare a < b and close transitively.  Throws std::invalid_argument if
  // this would create a cycle (including a == b).
  void add_relation(int a, int b);

  bool less(int a, int b) const { return above_[a].test(b); }
  bool comparable(int a, int b) const { return less(a, b) || less(b, a); }
  const VertexSet& above(int v) const { return above_[v]; }
  const VertexSet& below(int v) const { return below_[v]; }

  int color(int v) const { return color_[v]; }
  void set_color(int v, int c) { color_[v] = c; }
  bool colored() const {
    for (int c : color_)
      if (c != 0) return true;
    return false;
  }

  bool operator==(const Poset&) const = default;

 private:
  int n_ = 0;
  std::vector<VertexSet> above_, below_;
  std::vector<int> color_;
};

// One bridge of a central clique: one component of g−c, or several merged
// ones when their attachments coincide and consist of a single neighborhood.
struct Bridge {
  std::vector<VertexSet> comps;  // merged components (vertex sets in g)
  VertexSet verts;               // union of comps
  std::vector<VertexSet> hoods;  // distinct nonempty vertex hoods, ascending
  VertexSet lower, upper;        // minimum / maximum vertex hood in c
};

struct CentralPoset {
  std::vector<Bridge> bridges;
  Poset poset;  // bridge i < bridge j iff upper(i) ⊆ lower(j)
};

// The central structure of g on the maximal clique c.  Returns nullopt when
// some bridge graph g[c ∪ X] is not interval; throws std::invalid_argument
// when c is not a maximal clique.
std::optional<CentralPoset> central_poset(const Graph& g, const VertexSet& c);

// Dilworth width with both witnesses.
struct WidthResult {
  int width = 0;
  std::vector<std::vector<int>> chains;  // partition, ascending inside chains
  std::vector<int> antichain;            // pairwise incomparable, size width
};
WidthResult width(const Poset& p);

// L1 = minimal elements, L_{i+1} = minimal elements of the rest.
std::vector<std::vector<int>> levels(const Poset& p);

// Disjoint union; q's elements are shifted by p.n() so provenance is the
// index split.  No cross relations.
Poset poset_union(const Poset& p, const Poset& q);

// Text format: "p <n>" header, "r <a> <b>" relations (closed on input,
// covers on output), "c <v> <color>", '#' comments.
Poset parse_poset(const std::string& text);
std::string serialize_poset(const Poset& p);

}  // namespace sdiso

#endif
