// Conjugacy in a finite semigroup of partial permutations.
//
// Two notions are computed. S-conjugacy is the transitive closure of the
// relation "a = xy and b = yx for some x, y in S"; it is computed both by
// exhaustive pair enumeration and by the structural label (subrank, group
// conjugacy class of the transported invertible part), and the two
// partitions are expected to coincide on inverse semigroups. Unit-group
// conjugacy is the orbit relation b = g a g^-1 with g invertible.

#ifndef CONJREP_CONJUGACY_HPP_
#define CONJREP_CONJUGACY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "conjrep/semigroup.hpp"

namespace conjrep {

enum class ConjugacyMethod { kBruteForce, kStructural, kUnitGroup };

const char* conjugacy_method_name(ConjugacyMethod m);

struct ConjugacyClassInfo {
  ElementId representative = kNoElement;  // minimal member id
  // Transversal member of the D-class of the invertible part (subrank).
  std::optional<ElementId> subrank;
  // Minimal-id member of the witnessing group conjugacy class (structural
  // method only).
  std::optional<ElementId> group_witness;
};

struct ConjugacyPartition {
  ConjugacyMethod method = ConjugacyMethod::kBruteForce;
  std::vector<std::uint32_t> class_of;           // element id -> class index
  std::vector<std::vector<ElementId>> classes;   // ordered by minimal member
  std::vector<ConjugacyClassInfo> info;          // parallel to classes

  std::size_t class_count() const { return classes.size(); }
  bool same_partition(const ConjugacyPartition& other) const {
    return classes == other.classes;
  }
};

// Ordinary conjugacy classes of one maximal subgroup, by orbit enumeration.
struct GroupClasses {
  std::vector<ElementId> members;
  std::unordered_map<ElementId, std::uint32_t> class_of;
  std::vector<ElementId> witness;  // minimal member per class
  std::size_t class_count() const { return witness.size(); }
};

GroupClasses group_conjugacy_classes(const SemigroupTable& table,
                                     const MaximalSubgroup& group);

// The unique idempotent among the powers a, a^2, ...
ElementId induced_idempotent(const SemigroupTable& table, ElementId a);

// a * e_a; a group element H-related to e_a.
ElementId invertible_part(const SemigroupTable& table, ElementId a);

// The transversal idempotent e with invertible_part(a) in D_e.
ElementId subrank(const SemigroupTable& table, const GreenStructure& green,
                  ElementId a);

// Union of {xy, yx} over all pairs, transitively closed.
ConjugacyPartition s_conjugacy_bruteforce(const SemigroupTable& table);

// Labels each element by (subrank, conjugacy class of the invertible part
// transported into the subrank's maximal subgroup). Requires an inverse
// table via the Green structure.
ConjugacyPartition s_conjugacy_structural(const SemigroupTable& table,
                                          const GreenStructure& green);

// Orbits of conjugation by the unit group. Requires an identity element.
ConjugacyPartition g_conjugacy(const SemigroupTable& table);

// Fills per-class subrank metadata (constant on each class of either
// S-conjugacy method).
void annotate_subranks(const SemigroupTable& table, const GreenStructure& green,
                       ConjugacyPartition& partition);

// Mutually inverse pair (u, v) with invertible_part(a) = u invertible_part(b) v
// and invertible_part(b) = v invertible_part(a) u, if one exists. On inverse
// semigroups a witness exists exactly when a and b are S-conjugate.
std::optional<std::pair<ElementId, ElementId>> mutually_inverse_witness(
    const SemigroupTable& table, ElementId a, ElementId b);

struct CounterexampleReport {
  bool passed = false;
  ElementId witness_t = kNoElement;        // the rank-2 shift
  ElementId escaping_element = kNoElement; // the class member whose conjugate escapes
  ElementId conjugate = kNoElement;        // t x t^-1, expected to be the zero
  bool conjugate_is_zero = false;
  bool zero_outside_class = false;
  bool other_conjugate_in_class = false;   // the conjugate of the base element stays
  std::string detail;
};

// Conjugating a whole S-conjugacy class by a connecting element may leave the
// class. Reproduces the witness computation inside the full degree-3 table:
// the class {swap of two points, third point undefined} has a member whose
// conjugate under the rank-2 shift collapses to the empty map.
CounterexampleReport counterexample_check(const SemigroupTable& table);

}  // namespace conjrep

#endif  // CONJREP_CONJUGACY_HPP_
