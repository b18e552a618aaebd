#ifndef SDISO_PERM_GROUP_HPP
#define SDISO_PERM_GROUP_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "sdiso/graph.hpp"
#include "sdiso/perm.hpp"
#include "sdiso/poset.hpp"

namespace sdiso {

// Permutation group kept as a base and strong generating set (deterministic
// Schreier-Sims; generators already in the group are pruned by sifting).
class PermGroup {
 public:
  PermGroup() = default;
  explicit PermGroup(int domain) : n_(domain) {}

  int domain() const { return n_; }

  // Extend the group by p.  No-op if p is already a member.
  void add_gen(const Perm& p);

  bool contains(const Perm& p) const { return sift(p).is_identity(); }
  BigInt order() const;
  bool trivial() const { return levels_.empty(); }

  // Strong generators, one flat list; empty for the trivial group.
  std::vector<Perm> gens() const;

  // Reduce p through the transversals; identity iff p is a member.  The
  // optional out-parameter reports the level where sifting stopped.
  Perm sift(const Perm& p, int* stop_level = nullptr) const {
    return sift_from(0, p, stop_level);
  }

 private:
  struct Level {
    int base = -1;
    std::vector<Perm> gens;  // strong generators first placed at this level
    std::map<int, Perm> transversal;  // point -> u with u(base) = point
  };
  int n_ = 0;
  std::vector<Level> levels_;

  Perm sift_from(int level, const Perm& p, int* stop_level) const;
  std::vector<Perm> cumulative_gens(int level) const;
  void store(int level, const Perm& p);
  void rebuild_orbit(int level);
  void ensure(int level);
};

PermGroup schreier_sims(int domain, const std::vector<Perm>& gens);

// Subgroup of g cut out by a membership predicate, via a coset-representative
// sift table closed under products with the generators.  The predicate must
// define a subgroup of index at most index_bound; exceeding the bound throws
// std::runtime_error, and Lagrange consistency is verified on the result.
//
// coset_key, when given, buckets the representative table: it must be
// constant on left cosets of the subgroup, so a representative can only
// match inside its own bucket (each candidate is still confirmed with
// member_test).  A key that fully characterizes the cosets makes matching
// near-constant instead of a linear scan.
PermGroup fhl_subgroup(const PermGroup& g,
                       const std::function<bool(const Perm&)>& member_test,
                       const BigInt& index_bound,
                       const std::function<std::string(const Perm&)>& coset_key = nullptr);

// Color-preserving automorphism group of a graph whose color classes all
// have at most d elements: start from the product of symmetric groups on the
// classes and refine pairwise by edge-set preservation, each step a
// bounded-index subgroup.
PermGroup bcm_automorphism(const Graph& g, const std::vector<std::vector<int>>& classes);

// Automorphisms of a colored poset: bcm on the comparability graph with
// (level, color) cells as classes; level preservation restores direction.
PermGroup colored_poset_aut(const Poset& r);

}  // namespace sdiso

#endif
