#ifndef SDISO_BRIDGE_UTIL_HPP
#define SDISO_BRIDGE_UTIL_HPP

#include <string>
#include <vector>

#include "sdiso/graph.hpp"
#include "sdiso/poset.hpp"

namespace sdiso {

// Small helpers shared by the clique-centered isomorphism pipelines.

std::vector<int> set_to_list(const VertexSet& s);
std::string set_to_string(const VertexSet& s);

// Interior of a bridge with each vertex colored by the rank of its clique
// neighborhood in the bridge's nested chain (1-based; 0 for no neighbors).
Graph rank_colored_interior(const Graph& g, const VertexSet& c, const Bridge& br);

// Color key of a bridge: the chain of neighborhood sizes plus the canonical
// code of the rank-colored interior.  Two bridges get the same key exactly
// when their clique attachments have the same shape and their interiors
// match rank for rank — a refinement of plain bridge-graph isomorphism that
// every globally realizable bridge permutation still preserves.
std::string bridge_key(const Graph& g, const VertexSet& c, const Bridge& br);

// Check that wit is a bijection g -> h carrying edges onto edges exactly;
// throws std::logic_error otherwise.
void verify_graph_iso(const Graph& g, const Graph& h, const std::vector<int>& wit);

}  // namespace sdiso

#endif
