// Enumeration of a finite semigroup of partial permutations from generators,
// plus the structure used by every analysis: idempotents, Green classes,
// the idempotent transversal, maximal subgroups, connecting elements and the
// Moebius function of the natural partial order.
//
// A SemigroupTable is immutable after generation and safe to share between
// readers.

#ifndef CONJREP_SEMIGROUP_HPP_
#define CONJREP_SEMIGROUP_HPP_

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "conjrep/partial_perm.hpp"

namespace conjrep {

using ElementId = std::uint32_t;
inline constexpr ElementId kNoElement = 0xffffffffu;

struct GenerateOptions {
  std::size_t cap = 1'000'000;
  // When set, the generating set is extended with the inverses of the
  // generators before closing under composition, so the result is closed
  // under the relational inverse.
  bool inverse_closure = true;
};

class SemigroupTable {
 public:
  // Breadth-first closure of the generators (plus their inverses by default)
  // under composition. Enumeration order is deterministic: the deduplicated
  // generators first, then products in discovery order.
  static SemigroupTable generate(std::uint32_t degree,
                                 const std::vector<PartialPerm>& generators,
                                 const GenerateOptions& options = {});

  std::uint32_t degree() const { return degree_; }
  std::size_t size() const { return elements_.size(); }
  const PartialPerm& element(ElementId id) const { return elements_[id]; }
  const std::vector<PartialPerm>& elements() const { return elements_; }
  const std::vector<ElementId>& generator_ids() const { return generator_ids_; }

  ElementId product(ElementId a, ElementId b) const;
  std::optional<ElementId> find(const PartialPerm& p) const;

  // Id of the relational inverse, or kNoElement when it is missing from S.
  ElementId inverse_of(ElementId id) const { return inverse_of_[id]; }
  // Ids of domain_of/range_of, or kNoElement when missing from S.
  ElementId domain_id(ElementId id) const { return domain_id_[id]; }
  ElementId range_id(ElementId id) const { return range_id_[id]; }

  const std::vector<ElementId>& idempotent_ids() const { return idempotent_ids_; }
  std::optional<ElementId> identity() const { return identity_; }
  bool is_idempotent(ElementId id) const { return elements_[id].is_idempotent(); }

  // True iff every element's relational inverse belongs to the table.
  bool inverse_closed() const { return inverse_closed_; }

 private:
  SemigroupTable() = default;

  std::uint32_t degree_ = 0;
  std::vector<PartialPerm> elements_;
  std::unordered_map<PartialPerm, ElementId, PartialPermHash> index_;
  std::vector<ElementId> generator_ids_;
  std::vector<ElementId> inverse_of_;
  std::vector<ElementId> domain_id_;
  std::vector<ElementId> range_id_;
  std::vector<ElementId> idempotent_ids_;
  std::optional<ElementId> identity_;
  bool inverse_closed_ = false;
};

struct InverseCheck {
  bool is_inverse = false;
  // An element whose unique relational inverse is missing from the table,
  // together with that inverse, when the check fails.
  std::optional<ElementId> violator;
  PartialPerm missing_inverse;
  std::string message;
};

// Every element of a semigroup of partial permutations has at most one
// inverse (idempotents are partial identities, and those always commute),
// so the table is an inverse semigroup exactly when each element's
// relational inverse is present.
InverseCheck check_inverse(const SemigroupTable& table);

struct GreenStructure {
  // Element -> class index; class indices are ordered by minimal member id.
  std::vector<std::uint32_t> d_of;
  std::vector<std::uint32_t> h_of;
  std::vector<std::vector<ElementId>> d_classes;
  std::vector<std::vector<ElementId>> h_classes;
  // Idempotents of each D-class, ascending by id.
  std::vector<std::vector<ElementId>> d_idempotents;
  // Transversal: the minimal-id idempotent of each D-class.
  std::vector<ElementId> lambda;

  std::uint32_t d_class_count() const {
    return static_cast<std::uint32_t>(d_classes.size());
  }
  std::optional<std::uint32_t> lambda_index_of(ElementId e) const;
};

// Requires an inverse table (throws GuardError otherwise). H groups elements
// by (domain, range); idempotents are D-related iff some element of S has
// the one as domain and the other as range; elements are D-related iff their
// domain idempotents are.
GreenStructure green_structure(const SemigroupTable& table);

struct MaximalSubgroup {
  ElementId base_idempotent = kNoElement;
  // All a with domain_of(a) = range_of(a) = base, ascending by id.
  std::vector<ElementId> members;
};

MaximalSubgroup maximal_subgroup(const SemigroupTable& table, ElementId e);

// Minimal-id t in S with domain_of(t) = f and range_of(t) = e.
// Throws InputError when f, e are not D-related idempotents.
ElementId connecting_element(const SemigroupTable& table, ElementId f, ElementId e);

// t a t^-1 for a in the maximal subgroup at domain_of(t); lands in the
// maximal subgroup at range_of(t).
ElementId sigma_t(const SemigroupTable& table, ElementId t, ElementId a);

// Caches the natural partial order restricted to the table, with the Moebius
// function of that poset. Down-sets and Moebius values are memoized.
class NaturalOrder {
 public:
  explicit NaturalOrder(const SemigroupTable& table) : table_(&table) {}

  bool leq(ElementId b, ElementId a) const;
  // Ids b with b <= a, ascending.
  const std::vector<ElementId>& down_set(ElementId a) const;
  // mu(a, a) = 1 and mu(b, a) = -sum_{b < c <= a} mu(c, a).
  std::int64_t mobius(ElementId b, ElementId a) const;

 private:
  const SemigroupTable* table_;
  mutable std::unordered_map<ElementId, std::vector<ElementId>> down_sets_;
  mutable std::unordered_map<std::uint64_t, std::int64_t> mobius_;
};

// Moebius function of the natural order; throws InputError when b is not
// below a.
std::int64_t mobius(const SemigroupTable& table, ElementId b, ElementId a);

}  // namespace conjrep

#endif  // CONJREP_SEMIGROUP_HPP_
