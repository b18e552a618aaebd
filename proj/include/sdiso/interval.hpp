#ifndef SDISO_INTERVAL_HPP
#define SDISO_INTERVAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "sdiso/graph.hpp"
#include "sdiso/perm.hpp"

namespace sdiso {

// Canonical form of a colored interval graph, obtained from a modified
// PQ-tree whose frontier enumerates the consecutive orderings of the
// maximal cliques.  Two colored graphs are isomorphic iff both are interval
// and their codes are equal; in that case relabeling each graph by its
// `relabel` map yields literally identical colored adjacency structures.
struct IntervalCanon {
  bool interval = false;
  std::string code;                     // complete invariant (colors included)
  std::vector<int> relabel;             // relabel[v] = canonical position of v
  std::vector<VertexSet> clique_path;   // maximal cliques, canonical order
};

IntervalCanon interval_canon(const Graph& g);

// Consecutive ordering of the maximal cliques if g is interval.
std::optional<std::vector<VertexSet>> is_interval(const Graph& g);

// Interval and claw-free.
bool is_proper_interval(const Graph& g);

// Color-preserving isomorphism g -> h extracted from the canonical forms;
// nullopt when the graphs are not isomorphic (or not interval).
std::optional<std::vector<int>> interval_iso(const Graph& g, const Graph& h);

// Automorphism group of a colored interval graph: generators plus the exact
// order, both read off the annotated PQ-tree.  nullopt if g is not interval.
struct IntervalAut {
  BigInt order = 1;
  std::vector<Perm> gens;
};
std::optional<IntervalAut> interval_aut(const Graph& g);

}  // namespace sdiso

#endif
