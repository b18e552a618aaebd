// Isomorphism tests for graphs presented as *proper* intersection graphs of
// subdivided stars or subdivided trees: no representing subtree contains
// another.  Properness collapses the group-theoretic machinery of the
// general solvers into bounded bijection loops over anchored cliques, plus a
// clique-to-tree-edge assignment stage in the tree case.
#ifndef SDISO_PROPER_ISO_HPP
#define SDISO_PROPER_ISO_HPP

#include <vector>

#include "sdiso/bitset.hpp"
#include "sdiso/graph.hpp"
#include "sdiso/t_iso.hpp"
#include "sdiso/verdict.hpp"

namespace sdiso {

// Isomorphism of proper S_d-graphs.  Anchors every admissible central clique
// pair (at most d attached components on each side) and tries every
// component-bundle bijection that preserves attachment order and interior
// structure, accepting when the attachment collections agree cell by cell.
// A positive verdict carries a verified vertex bijection.  Throws
// std::invalid_argument when d < 1.
IsoVerdict proper_sd_iso(const Graph& g, const Graph& h, int d);

// Maximal cliques C such that at least three components of g - C have
// pairwise incomparable attachments in C (X precedes Y when every C-neighbor
// of X is a C-neighbor of every vertex of Y).  Input must be connected and
// chordal.
std::vector<VertexSet> rich_cliques(const Graph& g);

// Maximal cliques whose removal leaves the rest connected (or empty).
// Input must be connected and chordal.
std::vector<VertexSet> nonseparating_max_cliques(const Graph& g);

// Isomorphism of connected proper t-graphs.  Rich cliques are assigned to
// branching nodes, nonseparating cliques to leaves, and every remaining
// maximal clique to the unique tree edge whose endpoint cliques it
// separates; the per-edge zones must induce proper interval graphs.  Two
// assignments match when every branching node sees the same colored zone
// structure in each direction and the direction-tagged attachment
// collections admit a consistent bundle bijection.  Subtrees of t are tried
// smallest first, so inputs representable on a smaller tree are still
// decided.  Positive verdicts carry a vertex witness only in the degenerate
// interval case; otherwise the matched assignment itself is the
// certificate.  Throws std::invalid_argument on empty, disconnected, or
// non-chordal inputs, or when the suppressed tree has more than 16 nodes.
IsoVerdict proper_t_iso(const Graph& g, const Graph& h, const TreeParam& t);

}  // namespace sdiso

#endif
