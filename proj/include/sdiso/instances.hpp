#ifndef SDISO_INSTANCES_HPP
#define SDISO_INSTANCES_HPP

#include <cstdint>
#include <vector>

#include "sdiso/graph.hpp"
#include "sdiso/perm_group.hpp"
#include "sdiso/poset.hpp"
#include "sdiso/verdict.hpp"

namespace sdiso {

// A host tree together with one subtree per graph vertex — the ground truth
// the generators hand out, so tests never have to trust the algorithms
// under test.
struct SubtreeRep {
  std::vector<int> host_parent;         // parent array, -1 at the root
  std::vector<std::vector<int>> nodes;  // per vertex: sorted host nodes
};

// Every subtree nonempty, in range, and connected in the host tree.
bool valid_subtree_rep(const SubtreeRep& rep);

// Vertices adjacent iff their subtrees share a host node.
Graph intersection_graph(const SubtreeRep& rep);

struct SdInstance {
  Graph g;
  VertexSet center;  // vertices whose subtree contains the star center
  SubtreeRep rep;
};

// Intersection graph of random subtrees of a randomly subdivided d-ray
// star.  Exactly n vertices; same seed, same instance.  Without `proper`
// the center clique is maximal by construction (vertex 0 occupies only the
// star center).  With `proper` no subtree contains another, which forbids
// that trick, so the center is informational only.
SdInstance random_sd_graph(int n, int d, std::uint64_t seed, bool proper = false);

struct TInstance {
  Graph g;
  SubtreeRep rep;
};

// Same idea on a random subdivision of the given tree (parent array, -1 at
// the root).
TInstance random_t_graph(const std::vector<int>& tree_parent, int n, std::uint64_t seed,
                         bool proper = false);

// Random poset of width <= d: d interleaved chains plus random extra
// relations.  d = 1 yields a chain.
Poset random_poset(int n, int d, std::uint64_t seed);

// Poset isomorphism reduced to graph isomorphism.  Layout: vertices 0..n-1
// mirror the elements, then max(color,1)+1 dummies complete the center
// clique, then per element i (ascending) a block of max(color(i),1)
// pairwise adjacent vertices joined to every center vertex j with j <= i in
// the order (j = i included).  The center is verified to be the unique
// maximum clique before returning.
Graph poset_to_sd(const Poset& p);

// Exhaustive oracles.  brute_iso and brute_aut refuse graphs beyond a small
// size guard with std::runtime_error (20 and 14 vertices respectively), as
// does brute_poset_iso beyond 8 elements; brute_aut also aborts if the full
// automorphism list grows past what closure enumeration can afford.
IsoVerdict brute_iso(const Graph& g, const Graph& h);
PermGroup brute_aut(const Graph& g);
bool brute_poset_iso(const Poset& p, const Poset& q);

}  // namespace sdiso

#endif
