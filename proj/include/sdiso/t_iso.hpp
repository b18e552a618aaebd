// Isomorphism and automorphisms of intersection graphs of subtrees of a
// fixed host tree.  The tree parameter bounds the branching structure the
// solver is willing to explain; a verdict of "not isomorphic" is always
// relative to that tree.
#ifndef SDISO_T_ISO_HPP
#define SDISO_T_ISO_HPP

#include <optional>
#include <string>
#include <vector>

#include "sdiso/graph.hpp"
#include "sdiso/perm_group.hpp"
#include "sdiso/verdict.hpp"

namespace sdiso {

// A host tree given by adjacency lists, with its degree classes precomputed.
struct TreeParam {
  std::vector<std::vector<int>> adj;
  std::vector<int> branching;  // nodes of degree >= 3
  std::vector<int> leaves;     // nodes of degree <= 1

  int n() const { return int(adj.size()); }
};

// Build a tree from a parent array (-1 marks the single root).  Throws
// std::invalid_argument when the array does not describe a tree.
TreeParam make_tree(const std::vector<int>& parent);

// Contract every degree-2 node, keeping endpoints adjacent; node ids are
// compacted in ascending order of the surviving originals.
TreeParam suppress(const TreeParam& t);

// Canonical code of a tree: two trees get the same code exactly when they
// are isomorphic.
std::string tree_code(const TreeParam& t);

// Subgroup of Aut(g ⊎ h) assembled around one anchored clique pairing, with
// both graphs read as intersection graphs of subtrees of t.  The group
// contains a side-swapping generator exactly when the inputs are isomorphic
// as t-graphs, and its side-preserving part restricts to the full
// automorphism group of each side; it need not be all of Aut(g ⊎ h).
// Returns nullopt when no central-clique pairing admits a side swap (so the
// two are not isomorphic as t-graphs).  Inputs must be connected and
// nonempty; throws std::invalid_argument otherwise.
std::optional<PermGroup> t_aut_union(const Graph& g, const Graph& h, const TreeParam& t);

// Automorphism group of a single connected t-graph, extracted from the
// doubled analysis by restricting the side-preserving subgroup to the first
// copy.  Throws std::invalid_argument when g is not recognized as a t-graph.
PermGroup t_aut(const Graph& g, const TreeParam& t);

// Isomorphism of two connected t-graphs.  A positive verdict carries a
// vertex bijection extracted from a side-swapping generator and re-verified
// edge by edge.
IsoVerdict t_iso(const Graph& g, const Graph& h, const TreeParam& t);

// Isomorphism of chordal graphs of leafage at most leaf_bound: every
// suppressed host tree with at most leaf_bound leaves is tried smallest
// first.  Handles disconnected inputs componentwise.  Throws
// std::invalid_argument on non-chordal input or leaf_bound outside [1, 8].
IsoVerdict leafage_iso(const Graph& g, const Graph& h, int leaf_bound);

}  // namespace sdiso

#endif  // SDISO_T_ISO_HPP
