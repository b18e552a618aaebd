#ifndef SDISO_VENN_HPP
#define SDISO_VENN_HPP

#include <map>
#include <optional>
#include <vector>

#include "sdiso/graph.hpp"
#include "sdiso/perm_group.hpp"
#include "sdiso/poset.hpp"

namespace sdiso {

// Attachment collection of the bridges of K = G + H over the central cliques
// C and D: one member set per distinct neighborhood per bridge, strictly
// nested within each bridge, as a flat key space.  Equal sets from distinct
// bridges stay distinct members (multiset semantics).
struct AttachmentCollection {
  std::vector<std::vector<VertexSet>> members;  // [bridge][rank], K coordinates
  std::vector<VertexSet> verts;                 // bridge interiors, K coordinates
  std::vector<int> side;                        // 0 = C-side bridge, 1 = D-side
  std::vector<int> level;                       // level of the bridge in r
  VertexSet cliq[2];                            // C and D in K coordinates
  Poset r;                                      // combined bridge poset
  std::vector<std::vector<int>> lv;             // levels of r, minima first

  std::vector<int> first_key;  // prefix offsets into the flat key space

  int nb() const { return int(members.size()); }
  int nkeys() const { return first_key.back(); }
  int key_of(int bridge, int rank) const { return first_key[bridge] + rank; }
  int bridge_of(int key) const;
  int rank_of(int key) const { return key - first_key[bridge_of(key)]; }
  const VertexSet& set_of(int key) const {
    int b = bridge_of(key);
    return members[b][key - first_key[b]];
  }
  VertexSet ground() const { return cliq[0] | cliq[1]; }
};

// Assemble the collection from the two per-side central-clique analyses.
// Right-side vertex ids are shifted by `offset` into the universe of size
// `kn` (the disjoint union K).
AttachmentCollection build_collection(const CentralPoset& left, const CentralPoset& right,
                                      const VertexSet& c, const VertexSet& d, int offset,
                                      int kn);

// The unique member permutation induced by a bridge permutation: rank i of Z
// goes to rank i of rho(Z).  Chain-length mismatch -> invalid_argument.
Perm induced_collection_perm(const AttachmentCollection& u, const Perm& rho);

// Sparse cardinality Venn diagram: cell sizes keyed by signature (the sorted
// restricted keys containing a ground vertex; the empty signature is the
// all-outside cell).
struct VennCells {
  std::map<std::vector<int>, int> cells;
};
VennCells venn_cells(const AttachmentCollection& u, const std::vector<int>& restrict_keys);

// Cell-size comparison under the induced member permutation, restricted to a
// key set closed under key_perm (else invalid_argument).  Returns the
// smallest violated signature by (size, lexicographic), or nullopt when all
// nonempty cells match.
std::optional<std::vector<int>> venn_violation(const AttachmentCollection& u,
                                               const std::vector<int>& restrict_keys,
                                               const Perm& key_perm);
inline bool venn_good(const AttachmentCollection& u, const std::vector<int>& restrict_keys,
                      const Perm& key_perm) {
  return !venn_violation(u, restrict_keys, key_perm).has_value();
}

// Whether rho keeps every bridge on its side (0), exchanges the sides of all
// bridges (1), or mixes (-1).
int side_pattern(const AttachmentCollection& u, const Perm& rho);

// Full-collection cell comparison with C and D adjoined as members, mapped
// to each other according to rho's side pattern.  Mixing patterns never pass.
// This is exactly the condition under which rho is realized by an
// automorphism of K fixing {C, D} setwise.
bool venn_good_sided(const AttachmentCollection& u, const Perm& rho);

// One refinement step over the level prefixes (certificate or a strictly
// smaller subgroup cut out by the selected level tuple).
struct GammaStepResult {
  bool all_good = false;
  PermGroup next;
  std::vector<int> level_indices;  // 1-based levels forming the refining tuple
};
GammaStepResult gamma_prime_step(const AttachmentCollection& u, const PermGroup& prev, int d);

// Iterate refinement steps to the subgroup for which the whole collection is
// cell-consistent; step count is bounded by log2 of the starting order.
PermGroup gamma_prime(const AttachmentCollection& u, const PermGroup& gamma, int d);

// Side-coherent subgroup of gamma_prime and its swap structure: `group`
// holds the members realizable by automorphisms of K mapping {C, D} to
// itself, `keepers` the side-preserving ones (index 1 or 2), and `swap` a
// full side exchange when one exists.
struct SideAnalysis {
  PermGroup group;
  PermGroup keepers;
  bool has_swap = false;
  Perm swap;
};
SideAnalysis side_analysis(const AttachmentCollection& u, const PermGroup& gamma_prime_grp,
                           int d);

// Vertex-level automorphism of K realizing a side-coherent rho: cellwise
// bijection on C + D glued with rank-preserving bridge isomorphisms, then
// verified edge by edge (logic_error on any mismatch).
Perm materialize_witness(const Graph& k, const AttachmentCollection& u, const Perm& rho);

}  // namespace sdiso

#endif
