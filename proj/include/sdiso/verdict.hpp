#ifndef SDISO_VERDICT_HPP
#define SDISO_VERDICT_HPP

#include <optional>
#include <string>
#include <vector>

namespace sdiso {

// Outcome of an isomorphism decision.  When `isomorphic` is set the witness
// is a full vertex bijection g -> h that the producing routine has already
// verified edge by edge; `trace` records how the verdict came about (chosen
// cliques, matched components, ...) for diagnostics.
struct IsoVerdict {
  bool isomorphic = false;
  std::optional<std::vector<int>> witness;
  std::string trace;
};

}  // namespace sdiso

#endif
