#ifndef SDISO_SD_ISO_HPP
#define SDISO_SD_ISO_HPP

#include <optional>
#include <vector>

#include "sdiso/graph.hpp"
#include "sdiso/perm_group.hpp"
#include "sdiso/verdict.hpp"

namespace sdiso {

// First maximal clique (size-descending enumeration order) whose bridges are
// all interval and whose bridge poset has width <= d.  nullopt when none
// exists — then the graph is not representable with a star of degree d.
// d == 0 skips the width filter.  Non-chordal input -> nullopt.
std::optional<VertexSet> admissible_clique(const Graph& g, int d);

// Every clique passing the same filters, for choice-independence checks.
std::vector<VertexSet> admissible_cliques(const Graph& g, int d);

// Isomorphism through one fixed admissible clique of g against every
// same-size candidate of h: all |D|! labelings of the candidate, canonical
// codes of the labeled bridge graphs, greedy matching.  p bounds the clique
// size, so the labeling loop costs up to p! per candidate.
IsoVerdict sd_iso_bounded_clique(const Graph& g, const Graph& h, int p);

// Full test: bridge posets, per-level bridge coloring, color-preserving
// poset automorphisms, the cell-consistency refinement, and finally a side
// swap materialized into a verified vertex bijection.  jobs > 1 evaluates
// candidate cliques of h in parallel; the verdict stays deterministic
// because the lowest successful candidate always wins.  force_c pins the
// central clique of g (testing hook; must itself be admissible).
IsoVerdict sd_iso(const Graph& g, const Graph& h, int d, int jobs = 1,
                  const VertexSet* force_c = nullptr);

// Automorphism group of g, computed on the doubled graph g + g: materialized
// side swaps for every matching candidate clique, interior symmetries of
// each bridge, and symmetric groups on the attachment cells of the central
// clique, cut down to the subgroup stabilizing the first copy.  Every
// generator is verified as an automorphism before it enters the group.
PermGroup sd_aut(const Graph& g, int d);

}  // namespace sdiso

#endif
