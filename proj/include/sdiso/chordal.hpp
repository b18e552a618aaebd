#ifndef SDISO_CHORDAL_HPP
#define SDISO_CHORDAL_HPP

#include <optional>
#include <vector>

#include "sdiso/graph.hpp"

namespace sdiso {

// Result of chordality recognition. Exactly one of `order`, `hole` is
// nonempty: `order` is a perfect elimination ordering (order[i] = i-th
// eliminated vertex), `hole` an induced cycle of length >= 4 listed in cycle
// order. Being non-chordal is a value, not an exception.
struct PeoResult {
  std::optional<std::vector<int>> order;
  std::vector<int> hole;
  bool chordal() const { return order.has_value(); }
};

PeoResult peo(const Graph& g);

// Lexicographic BFS order (visit order). Ties broken toward smaller ids, so
// the sweep is deterministic.
std::vector<int> lex_bfs(const Graph& g);

// Maximal cliques of a chordal graph from a PEO, sorted by (size desc,
// lexicographic) for a deterministic result. Throws if g is not chordal.
std::vector<VertexSet> maximal_cliques(const Graph& g);

}  // namespace sdiso

#endif
