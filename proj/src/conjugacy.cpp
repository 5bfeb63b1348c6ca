#include "conjrep/conjugacy.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>
#include <unordered_map>

#include "conjrep/error.hpp"
#include "conjrep/util.hpp"

namespace conjrep {

namespace {

ConjugacyPartition partition_from_dsu(const DisjointSets& dsu, ConjugacyMethod m) {
  ConjugacyPartition p;
  p.method = m;
  p.classes = dsu.classes();
  p.class_of.assign(
      [&] {
        std::size_t n = 0;
        for (const auto& c : p.classes) n += c.size();
        return n;
      }(),
      0);
  p.info.resize(p.classes.size());
  for (std::uint32_t k = 0; k < p.classes.size(); ++k) {
    for (ElementId e : p.classes[k]) p.class_of[e] = k;
    p.info[k].representative = p.classes[k].front();
  }
  return p;
}

}  // namespace

const char* conjugacy_method_name(ConjugacyMethod m) {
  switch (m) {
    case ConjugacyMethod::kBruteForce: return "brute_force";
    case ConjugacyMethod::kStructural: return "structural";
    case ConjugacyMethod::kUnitGroup: return "unit_group";
  }
  return "unknown";
}

GroupClasses group_conjugacy_classes(const SemigroupTable& table,
                                     const MaximalSubgroup& group) {
  GroupClasses out;
  out.members = group.members;
  for (ElementId g : group.members) {
    if (out.class_of.count(g)) continue;
    const auto cls = static_cast<std::uint32_t>(out.witness.size());
    std::vector<ElementId> orbit;
    for (ElementId h : group.members) {
      const ElementId conj = table.product(table.product(h, g), table.inverse_of(h));
      if (!out.class_of.count(conj)) {
        out.class_of.emplace(conj, cls);
        orbit.push_back(conj);
      }
    }
    out.witness.push_back(*std::min_element(orbit.begin(), orbit.end()));
  }
  return out;
}

ElementId induced_idempotent(const SemigroupTable& table, ElementId a) {
  ElementId power = a;
  for (std::size_t steps = 0; steps < table.size(); ++steps) {
    if (table.is_idempotent(power)) return power;
    power = table.product(power, a);
  }
  // Every element of a finite semigroup has an idempotent power.
  assert(false && "no idempotent power found within |S| steps");
  throw InputError("no idempotent power found within |S| steps");
}

ElementId invertible_part(const SemigroupTable& table, ElementId a) {
  return table.product(a, induced_idempotent(table, a));
}

ElementId subrank(const SemigroupTable& table, const GreenStructure& green,
                  ElementId a) {
  return green.lambda[green.d_of[invertible_part(table, a)]];
}

ConjugacyPartition s_conjugacy_bruteforce(const SemigroupTable& table) {
  const auto n = static_cast<ElementId>(table.size());
  DisjointSets dsu(n);
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y <= x; ++y) {
      dsu.unite(table.product(x, y), table.product(y, x));
    }
  }
  return partition_from_dsu(dsu, ConjugacyMethod::kBruteForce);
}

ConjugacyPartition s_conjugacy_structural(const SemigroupTable& table,
                                          const GreenStructure& green) {
  const auto n = static_cast<ElementId>(table.size());

  // Conjugacy classes of each transversal subgroup.
  std::vector<GroupClasses> blocks;
  blocks.reserve(green.lambda.size());
  for (ElementId e : green.lambda) {
    blocks.push_back(group_conjugacy_classes(table, maximal_subgroup(table, e)));
  }

  // Connecting elements are cached per (domain, range) pair.
  std::unordered_map<std::uint64_t, ElementId> connector;
  auto connect = [&](ElementId f, ElementId e) {
    const std::uint64_t key = (static_cast<std::uint64_t>(f) << 32) | e;
    auto it = connector.find(key);
    if (it != connector.end()) return it->second;
    const ElementId t = connecting_element(table, f, e);
    connector.emplace(key, t);
    return t;
  };

  // Label each element, then group by label.
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<ElementId>> by_label;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> labels(n);
  for (ElementId a = 0; a < n; ++a) {
    const ElementId e_a = induced_idempotent(table, a);
    const ElementId part = table.product(a, e_a);
    const std::uint32_t block = green.d_of[part];
    const ElementId e = green.lambda[block];
    const ElementId t = connect(e_a, e);
    const ElementId transported = sigma_t(table, t, part);
    labels[a] = {block, blocks[block].class_of.at(transported)};
    by_label[labels[a]].push_back(a);
  }

  ConjugacyPartition p;
  p.method = ConjugacyMethod::kStructural;
  p.class_of.assign(n, 0);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> ordered;
  for (const auto& [label, members] : by_label) ordered.push_back(label);
  std::sort(ordered.begin(), ordered.end(),
            [&](const auto& l1, const auto& l2) {
              return by_label.at(l1).front() < by_label.at(l2).front();
            });
  for (const auto& label : ordered) {
    const auto cls = static_cast<std::uint32_t>(p.classes.size());
    p.classes.push_back(by_label.at(label));
    ConjugacyClassInfo info;
    info.representative = p.classes.back().front();
    info.subrank = green.lambda[label.first];
    info.group_witness = blocks[label.first].witness[label.second];
    p.info.push_back(info);
    for (ElementId e : p.classes.back()) p.class_of[e] = cls;
  }
  return p;
}

ConjugacyPartition g_conjugacy(const SemigroupTable& table) {
  const auto identity = table.identity();
  if (!identity) {
    throw InputError("unit-group conjugacy requires an identity element");
  }
  const auto units = maximal_subgroup(table, *identity);
  const auto n = static_cast<ElementId>(table.size());
  DisjointSets dsu(n);
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId g : units.members) {
      dsu.unite(a, table.product(table.product(g, a), table.inverse_of(g)));
    }
  }
  return partition_from_dsu(dsu, ConjugacyMethod::kUnitGroup);
}

void annotate_subranks(const SemigroupTable& table, const GreenStructure& green,
                       ConjugacyPartition& partition) {
  for (std::uint32_t k = 0; k < partition.classes.size(); ++k) {
    partition.info[k].subrank =
        subrank(table, green, partition.info[k].representative);
  }
}

std::optional<std::pair<ElementId, ElementId>> mutually_inverse_witness(
    const SemigroupTable& table, ElementId a, ElementId b) {
  const ElementId ga = invertible_part(table, a);
  const ElementId gb = invertible_part(table, b);
  for (ElementId u = 0; u < table.size(); ++u) {
    const ElementId v = table.inverse_of(u);
    if (v == kNoElement) continue;
    if (table.product(table.product(u, gb), v) == ga &&
        table.product(table.product(v, ga), u) == gb) {
      return std::make_pair(u, v);
    }
  }
  return std::nullopt;
}

CounterexampleReport counterexample_check(const SemigroupTable& table) {
  CounterexampleReport report;
  if (table.degree() != 3 || table.size() != 34) {
    throw InputError("the escape counterexample runs on the full degree-3 "
                     "table of partial permutations (34 elements)");
  }
  // 0-based forms of the degree-3 witnesses: t maps 1->0, 2->1; the class is
  // generated by the swap of points 1, 2 with point 0 undefined.
  const auto t = *table.find(PartialPerm({kUndefined, 0, 1}));
  const auto base = *table.find(PartialPerm({kUndefined, 2, 1}));     // swap 1,2
  const auto escaping = *table.find(PartialPerm({2, kUndefined, 0})); // swap 0,2
  const auto swap01 = *table.find(PartialPerm({1, 0, kUndefined}));   // swap 0,1
  const auto zero = *table.find(PartialPerm::empty(3));

  report.witness_t = t;
  report.escaping_element = escaping;
  const ElementId t_inv = table.inverse_of(t);
  report.conjugate = table.product(table.product(t, escaping), t_inv);
  report.conjugate_is_zero = (report.conjugate == zero);

  const auto partition = s_conjugacy_bruteforce(table);
  const auto& cls = partition.classes[partition.class_of[base]];
  report.zero_outside_class =
      std::find(cls.begin(), cls.end(), zero) == cls.end();
  const ElementId conj_base = table.product(table.product(t, base), t_inv);
  report.other_conjugate_in_class =
      conj_base == swap01 &&
      std::find(cls.begin(), cls.end(), conj_base) != cls.end();

  report.passed = report.conjugate_is_zero && report.zero_outside_class &&
                  report.other_conjugate_in_class;
  std::ostringstream os;
  os << "t=" << table.element(t) << " conjugates " << table.element(escaping)
     << " to " << table.element(report.conjugate) << "; class of "
     << table.element(base) << " has " << cls.size() << " members";
  report.detail = os.str();
  return report;
}

}  // namespace conjrep
