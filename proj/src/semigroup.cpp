#include "conjrep/semigroup.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "conjrep/error.hpp"
#include "conjrep/util.hpp"

namespace conjrep {

SemigroupTable SemigroupTable::generate(std::uint32_t degree,
                                        const std::vector<PartialPerm>& generators,
                                        const GenerateOptions& options) {
  if (generators.empty()) {
    throw InputError("at least one generator is required");
  }
  SemigroupTable t;
  t.degree_ = degree;

  auto add = [&t, &options](const PartialPerm& p) -> std::pair<ElementId, bool> {
    auto it = t.index_.find(p);
    if (it != t.index_.end()) return {it->second, false};
    if (t.elements_.size() >= options.cap) {
      throw CapacityError("semigroup closure exceeded the element cap of " +
                          std::to_string(options.cap));
    }
    const auto id = static_cast<ElementId>(t.elements_.size());
    t.elements_.push_back(p);
    t.index_.emplace(p, id);
    return {id, true};
  };

  for (const auto& g : generators) {
    if (g.degree() != degree) {
      throw InputError("generator degree " + std::to_string(g.degree()) +
                       " does not match declared degree " + std::to_string(degree));
    }
    t.generator_ids_.push_back(add(g).first);
  }
  if (options.inverse_closure) {
    const auto given = t.elements_.size();
    for (std::size_t i = 0; i < given; ++i) {
      t.generator_ids_.push_back(add(inverse(t.elements_[i])).first);
    }
  }
  // Deduplicate generator ids, keeping first occurrences.
  {
    std::vector<ElementId> unique_ids;
    for (ElementId id : t.generator_ids_) {
      if (std::find(unique_ids.begin(), unique_ids.end(), id) == unique_ids.end()) {
        unique_ids.push_back(id);
      }
    }
    t.generator_ids_ = std::move(unique_ids);
  }

  // Every product of generators is reachable by extending a shorter product
  // on the right, so right multiplication alone closes the set.
  for (std::size_t i = 0; i < t.elements_.size(); ++i) {
    for (ElementId g : t.generator_ids_) {
      add(compose(t.elements_[i], t.elements_[g]));
    }
  }

  const auto n = t.elements_.size();
  t.inverse_of_.assign(n, kNoElement);
  t.domain_id_.assign(n, kNoElement);
  t.range_id_.assign(n, kNoElement);
  t.inverse_closed_ = true;
  std::vector<bool> support(degree, false);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = t.elements_[i];
    if (auto inv = t.find(inverse(p))) {
      t.inverse_of_[i] = *inv;
    } else {
      t.inverse_closed_ = false;
    }
    if (auto d = t.find(domain_of(p))) t.domain_id_[i] = *d;
    if (auto r = t.find(range_of(p))) t.range_id_[i] = *r;
    if (p.is_idempotent()) t.idempotent_ids_.push_back(static_cast<ElementId>(i));
    for (std::uint32_t x = 0; x < degree; ++x) {
      if (p.defined(x)) {
        support[x] = true;
        support[p.image(x)] = true;
      }
    }
  }

  // The two-sided identity, if any, is the partial identity on the union of
  // all domains and ranges.
  std::vector<std::uint32_t> support_points;
  for (std::uint32_t x = 0; x < degree; ++x) {
    if (support[x]) support_points.push_back(x);
  }
  if (auto id = t.find(PartialPerm::partial_identity(degree, support_points))) {
    t.identity_ = *id;
  }
  return t;
}

ElementId SemigroupTable::product(ElementId a, ElementId b) const {
  const auto p = compose(elements_[a], elements_[b]);
  const auto it = index_.find(p);
  // The table is closed under composition by construction.
  return it->second;
}

std::optional<ElementId> SemigroupTable::find(const PartialPerm& p) const {
  const auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

InverseCheck check_inverse(const SemigroupTable& table) {
  InverseCheck result;
  for (ElementId i = 0; i < table.size(); ++i) {
    if (table.inverse_of(i) == kNoElement) {
      result.is_inverse = false;
      result.violator = i;
      result.missing_inverse = inverse(table.element(i));
      std::ostringstream os;
      os << "element " << i << " = " << table.element(i)
         << " has no inverse in the table (its relational inverse "
         << result.missing_inverse << " is absent)";
      result.message = os.str();
      return result;
    }
  }
  result.is_inverse = true;
  result.message = "every element has a unique inverse";
  return result;
}

std::optional<std::uint32_t> GreenStructure::lambda_index_of(ElementId e) const {
  for (std::uint32_t k = 0; k < lambda.size(); ++k) {
    if (lambda[k] == e) return k;
  }
  return std::nullopt;
}

GreenStructure green_structure(const SemigroupTable& table) {
  const auto check = check_inverse(table);
  if (!check.is_inverse) {
    throw GuardError("not an inverse semigroup: " + check.message);
  }

  const auto n = static_cast<ElementId>(table.size());
  GreenStructure g;

  // D on idempotents: union dom(t) with ran(t) for every t in S.
  const auto& idems = table.idempotent_ids();
  std::unordered_map<ElementId, std::uint32_t> idem_pos;
  for (std::uint32_t k = 0; k < idems.size(); ++k) idem_pos.emplace(idems[k], k);
  DisjointSets dsu(idems.size());
  for (ElementId i = 0; i < n; ++i) {
    dsu.unite(idem_pos.at(table.domain_id(i)), idem_pos.at(table.range_id(i)));
  }

  // Class indices ordered by the minimal element id inside each class.
  g.d_of.assign(n, 0);
  std::map<std::size_t, std::uint32_t> root_to_class;
  for (ElementId i = 0; i < n; ++i) {
    const auto root = dsu.find(idem_pos.at(table.domain_id(i)));
    auto it = root_to_class.find(root);
    if (it == root_to_class.end()) {
      const auto cls = static_cast<std::uint32_t>(g.d_classes.size());
      root_to_class.emplace(root, cls);
      g.d_classes.emplace_back();
      g.d_of[i] = cls;
      g.d_classes[cls].push_back(i);
    } else {
      g.d_of[i] = it->second;
      g.d_classes[it->second].push_back(i);
    }
  }

  g.d_idempotents.resize(g.d_classes.size());
  for (ElementId e : idems) g.d_idempotents[g.d_of[e]].push_back(e);
  g.lambda.resize(g.d_classes.size());
  for (std::uint32_t k = 0; k < g.d_classes.size(); ++k) {
    g.lambda[k] = g.d_idempotents[k].front();
  }

  // H: equal domain and range.
  g.h_of.assign(n, 0);
  std::map<std::pair<ElementId, ElementId>, std::uint32_t> h_index;
  for (ElementId i = 0; i < n; ++i) {
    const auto key = std::make_pair(table.domain_id(i), table.range_id(i));
    auto it = h_index.find(key);
    if (it == h_index.end()) {
      const auto cls = static_cast<std::uint32_t>(g.h_classes.size());
      h_index.emplace(key, cls);
      g.h_classes.emplace_back();
      g.h_of[i] = cls;
      g.h_classes[cls].push_back(i);
    } else {
      g.h_of[i] = it->second;
      g.h_classes[it->second].push_back(i);
    }
  }
  return g;
}

MaximalSubgroup maximal_subgroup(const SemigroupTable& table, ElementId e) {
  if (e >= table.size() || !table.is_idempotent(e)) {
    throw InputError("maximal subgroup requested at a non-idempotent element");
  }
  MaximalSubgroup g;
  g.base_idempotent = e;
  for (ElementId i = 0; i < table.size(); ++i) {
    if (table.domain_id(i) == e && table.range_id(i) == e) g.members.push_back(i);
  }
  return g;
}

ElementId connecting_element(const SemigroupTable& table, ElementId f, ElementId e) {
  if (f >= table.size() || e >= table.size() || !table.is_idempotent(f) ||
      !table.is_idempotent(e)) {
    throw InputError("connecting element requires idempotent endpoints");
  }
  for (ElementId i = 0; i < table.size(); ++i) {
    if (table.domain_id(i) == f && table.range_id(i) == e) return i;
  }
  throw InputError("idempotents " + std::to_string(f) + " and " + std::to_string(e) +
                   " are not D-related: no element has that domain and range");
}

ElementId sigma_t(const SemigroupTable& table, ElementId t, ElementId a) {
  const ElementId f = table.domain_id(t);
  if (table.domain_id(a) != f || table.range_id(a) != f) {
    throw InputError("conjugation by a connecting element applies to members of "
                     "the maximal subgroup at its domain");
  }
  const ElementId t_inv = table.inverse_of(t);
  if (t_inv == kNoElement) {
    throw InputError("connecting element has no inverse in the table");
  }
  return table.product(table.product(t, a), t_inv);
}

bool NaturalOrder::leq(ElementId b, ElementId a) const {
  return natural_leq(table_->element(b), table_->element(a));
}

const std::vector<ElementId>& NaturalOrder::down_set(ElementId a) const {
  auto it = down_sets_.find(a);
  if (it != down_sets_.end()) return it->second;
  std::vector<ElementId> below;
  for (ElementId b = 0; b < table_->size(); ++b) {
    if (leq(b, a)) below.push_back(b);
  }
  return down_sets_.emplace(a, std::move(below)).first->second;
}

std::int64_t NaturalOrder::mobius(ElementId b, ElementId a) const {
  if (!leq(b, a)) {
    throw InputError("mobius(b, a) requires b <= a in the natural order");
  }
  if (b == a) return 1;
  const std::uint64_t key = (static_cast<std::uint64_t>(b) << 32) | a;
  auto it = mobius_.find(key);
  if (it != mobius_.end()) return it->second;
  std::int64_t sum = 0;
  for (ElementId c : down_set(a)) {
    if (c != b && leq(b, c)) sum += mobius(c, a);
  }
  return mobius_.emplace(key, -sum).first->second;
}

std::int64_t mobius(const SemigroupTable& table, ElementId b, ElementId a) {
  NaturalOrder order(table);
  return order.mobius(b, a);
}

}  // namespace conjrep
