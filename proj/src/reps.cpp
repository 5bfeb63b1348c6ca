#include "conjrep/reps.hpp"

#include <sstream>

#include "conjrep/util.hpp"

namespace conjrep {

namespace {

// Multiplicative order of a member within its maximal subgroup.
std::uint32_t member_order(const SemigroupTable& table, ElementId base,
                           ElementId g) {
  ElementId power = g;
  std::uint32_t order = 1;
  while (power != base) {
    power = table.product(power, g);
    ++order;
  }
  return order;
}

}  // namespace

GroupClassification classify_maximal_subgroup(const SemigroupTable& table,
                                              const MaximalSubgroup& group) {
  GroupClassification c;
  c.support_rank = table.element(group.base_idempotent).rank();
  const auto order = static_cast<std::uint64_t>(group.members.size());
  if (order == 1) {
    c.kind = GroupKind::kTrivial;
    c.description = "trivial";
    return c;
  }
  if (c.support_rank <= kMaxSymmetricDegree &&
      order == factorial(c.support_rank)) {
    c.kind = GroupKind::kSymmetric;
    c.description = "symmetric group on " + std::to_string(c.support_rank) +
                    " points";
    return c;
  }
  for (ElementId g : group.members) {
    if (member_order(table, group.base_idempotent, g) == order) {
      c.kind = GroupKind::kCyclic;
      c.cyclic_generator = g;
      c.description = "cyclic group of order " + std::to_string(order);
      return c;
    }
  }
  c.kind = GroupKind::kUnsupported;
  c.description = "group of order " + std::to_string(order) +
                  " (not trivial, cyclic, or full symmetric)";
  return c;
}

template <class Field>
std::vector<Rep<Field>> builtin_group_irreps(const SemigroupTable& table,
                                             const MaximalSubgroup& group,
                                             const Field& field) {
  const auto classification = classify_maximal_subgroup(table, group);
  std::vector<Rep<Field>> reps;

  switch (classification.kind) {
    case GroupKind::kTrivial: {
      Rep<Field> rep;
      rep.base_idempotent = group.base_idempotent;
      rep.members = group.members;
      rep.degree = 1;
      rep.label = "trivial";
      rep.images.push_back(Matrix<Field>::identity(field, 1));
      reps.push_back(std::move(rep));
      return reps;
    }

    case GroupKind::kSymmetric: {
      const std::uint32_t k = classification.support_rank;
      const auto support =
          table.element(group.base_idempotent).domain_points();
      auto position = [&](std::uint32_t point) {
        const auto it = std::lower_bound(support.begin(), support.end(), point);
        return static_cast<std::uint32_t>(it - support.begin());
      };
      for (const auto& irrep : seminormal_irreps(k)) {
        Rep<Field> rep;
        rep.base_idempotent = group.base_idempotent;
        rep.members = group.members;
        rep.degree = irrep.degree;
        rep.label = irrep.label;
        for (ElementId g : group.members) {
          const auto& perm = table.element(g);
          std::vector<std::uint32_t> one_line(k);
          for (std::uint32_t i = 0; i < k; ++i) {
            one_line[i] = position(perm.image(support[i]));
          }
          const auto rational_image = seminormal_image(irrep, one_line);
          Matrix<Field> m(field, irrep.degree, irrep.degree);
          for (std::uint32_t r = 0; r < irrep.degree; ++r) {
            for (std::uint32_t c = 0; c < irrep.degree; ++c) {
              m.at(r, c) = field.from_rational(rational_image.at(r, c));
            }
          }
          rep.images.push_back(std::move(m));
        }
        reps.push_back(std::move(rep));
      }
      return reps;
    }

    case GroupKind::kCyclic: {
      const auto n = static_cast<std::uint32_t>(group.members.size());
      const auto root = field.primitive_nth_root(n);
      if (!root) {
        throw InputError(
            "maximal subgroup at element " +
            std::to_string(group.base_idempotent) + " is cyclic of order " +
            std::to_string(n) + ", but " + field.name() +
            " has no primitive root of unity of that order; supply "
            "representations or use a prime field with p = 1 (mod " +
            std::to_string(n) + ")");
      }
      // Discrete logarithm of each member with respect to the generator.
      std::vector<std::uint32_t> log_of(group.members.size());
      {
        ElementId power = group.base_idempotent;
        for (std::uint32_t m = 0; m < n; ++m) {
          const auto it = std::lower_bound(group.members.begin(),
                                           group.members.end(), power);
          log_of[static_cast<std::size_t>(it - group.members.begin())] = m;
          power = table.product(power, classification.cyclic_generator);
        }
      }
      for (std::uint32_t j = 0; j < n; ++j) {
        Rep<Field> rep;
        rep.base_idempotent = group.base_idempotent;
        rep.members = group.members;
        rep.degree = 1;
        rep.label = "chi_" + std::to_string(j);
        for (std::size_t idx = 0; idx < group.members.size(); ++idx) {
          Matrix<Field> m(field, 1, 1);
          auto value = field.one();
          for (std::uint32_t i = 0; i < (j * log_of[idx]) % n; ++i) {
            value *= *root;
          }
          m.at(0, 0) = value;
          rep.images.push_back(std::move(m));
        }
        reps.push_back(std::move(rep));
      }
      return reps;
    }

    case GroupKind::kUnsupported:
      break;
  }
  throw InputError("no built-in representations for the maximal subgroup at "
                   "element " + std::to_string(group.base_idempotent) + ": " +
                   classification.description +
                   "; supply a complete list of irreducibles");
}

template <class Field>
std::vector<LiftedRep<Field>> all_irreps(
    const SemigroupTable& table, const GreenStructure& green, const Field& field,
    const std::map<ElementId, std::vector<Rep<Field>>>& supplied) {
  const PsiContext context(table, green);
  std::vector<LiftedRep<Field>> lifts;
  for (std::uint32_t k = 0; k < green.lambda.size(); ++k) {
    const ElementId e = green.lambda[k];
    const auto group = maximal_subgroup(table, e);

    std::vector<Rep<Field>> reps;
    const auto it = supplied.find(e);
    if (it != supplied.end()) {
      reps = it->second;
      std::uint64_t degree_square_sum = 0;
      for (const auto& rep : reps) {
        if (rep.members != group.members) {
          throw InputError("supplied representation '" + rep.label +
                           "' does not cover the maximal subgroup at element " +
                           std::to_string(e));
        }
        if (!rep_is_multiplicative(table, rep)) {
          throw InputError("supplied representation '" + rep.label +
                           "' is not multiplicative");
        }
        degree_square_sum +=
            static_cast<std::uint64_t>(rep.degree) * rep.degree;
      }
      if (degree_square_sum != group.members.size()) {
        throw InputError(
            "supplied list for element " + std::to_string(e) +
            " fails the completeness check: sum of squared degrees is " +
            std::to_string(degree_square_sum) + ", expected the group order " +
            std::to_string(group.members.size()));
      }
      for (std::size_t i = 0; i < reps.size(); ++i) {
        for (std::size_t j = i + 1; j < reps.size(); ++j) {
          if (intertwiner_dimension(table, reps[i], reps[j]) != 0) {
            throw InputError("supplied list for element " + std::to_string(e) +
                             " is redundant: '" + reps[i].label + "' and '" +
                             reps[j].label + "' are equivalent");
          }
        }
      }
    } else {
      reps = builtin_group_irreps(table, group, field);
    }

    for (const auto& rep : reps) {
      lifts.push_back(lift(table, green, context, rep));
    }
  }
  return lifts;
}

bool characteristic_guard(const SemigroupTable& table, const GreenStructure& green,
                          std::uint64_t p) {
  if (p == 0) return true;
  if (!is_prime(p)) {
    throw InputError("characteristic " + std::to_string(p) +
                     " is neither zero nor prime");
  }
  for (ElementId e : green.lambda) {
    if (maximal_subgroup(table, e).members.size() % p == 0) return false;
  }
  return true;
}

template std::vector<Rep<RationalField>> builtin_group_irreps(
    const SemigroupTable&, const MaximalSubgroup&, const RationalField&);
template std::vector<Rep<PrimeField>> builtin_group_irreps(
    const SemigroupTable&, const MaximalSubgroup&, const PrimeField&);
template std::vector<LiftedRep<RationalField>> all_irreps(
    const SemigroupTable&, const GreenStructure&, const RationalField&,
    const std::map<ElementId, std::vector<Rep<RationalField>>>&);
template std::vector<LiftedRep<PrimeField>> all_irreps(
    const SemigroupTable&, const GreenStructure&, const PrimeField&,
    const std::map<ElementId, std::vector<Rep<PrimeField>>>&);

}  // namespace conjrep
