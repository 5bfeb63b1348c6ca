// Representations of the table: group representations on maximal subgroups,
// their lifts across the block decomposition, and the exact certificates
// (commutant and intertwiner dimensions) used to certify irreducibility and
// pairwise inequivalence.
//
// Built-in representations cover trivial groups, cyclic groups (over Q only
// up to order 2; over GF(p) when p = 1 mod |G|), and full symmetric groups
// on up to 5 points. Anything else takes the user-supplied path.

#ifndef CONJREP_REPS_HPP_
#define CONJREP_REPS_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "conjrep/algebra.hpp"
#include "conjrep/field.hpp"
#include "conjrep/matrix.hpp"
#include "conjrep/semigroup.hpp"
#include "conjrep/young.hpp"

namespace conjrep {

template <class Field>
struct Rep {
  ElementId base_idempotent = kNoElement;
  std::vector<ElementId> members;       // ascending ids
  std::vector<Matrix<Field>> images;    // parallel to members
  std::uint32_t degree = 0;
  std::string label;

  const Matrix<Field>& image_of(ElementId g) const {
    const auto it = std::lower_bound(members.begin(), members.end(), g);
    if (it == members.end() || *it != g) {
      throw InputError("element " + std::to_string(g) +
                       " is not a member of the represented subgroup");
    }
    return images[static_cast<std::size_t>(it - members.begin())];
  }
};

template <class Field>
bool rep_is_multiplicative(const SemigroupTable& table, const Rep<Field>& rep) {
  const auto identity_image =
      Matrix<Field>::identity(rep.images.front().field(), rep.degree);
  if (rep.image_of(rep.base_idempotent) != identity_image) return false;
  for (ElementId g : rep.members) {
    for (ElementId h : rep.members) {
      if (rep.image_of(table.product(g, h)) != rep.image_of(g) * rep.image_of(h)) {
        return false;
      }
    }
  }
  return true;
}

template <class Field>
struct LiftedRep {
  std::uint32_t lambda_index = 0;
  ElementId lambda_id = kNoElement;
  std::string label;
  std::uint32_t source_degree = 0;
  std::uint32_t degree = 0;
  std::vector<Matrix<Field>> images;  // indexed by element id
};

// Block lift: the (i, j) block of the image of a is rho applied to the
// (i, j) entry of the block decomposition of a. Lift degree is
// block_size * deg rho. Multiplicativity over every pair of S is verified.
template <class Field>
LiftedRep<Field> lift(const SemigroupTable& table, const GreenStructure& green,
                      const PsiContext& context, const Rep<Field>& rho) {
  const auto lambda_index = green.lambda_index_of(rho.base_idempotent);
  if (!lambda_index) {
    throw InputError("lift requires a representation based at a transversal "
                     "idempotent");
  }
  if (!rep_is_multiplicative(table, rho)) {
    throw InputError("representation '" + rho.label +
                     "' is not multiplicative on its subgroup");
  }
  const Field field = rho.images.front().field();
  const std::uint32_t n = context.block_size(*lambda_index);
  const std::uint32_t d = rho.degree;

  LiftedRep<Field> out;
  out.lambda_index = *lambda_index;
  out.lambda_id = rho.base_idempotent;
  out.label = rho.label;
  out.source_degree = d;
  out.degree = n * d;
  out.images.reserve(table.size());
  for (ElementId a = 0; a < table.size(); ++a) {
    const auto block =
        context.psi(*lambda_index, AlgebraElement<Field>::basis(field, a));
    Matrix<Field> m(field, n * d, n * d);
    for (std::uint32_t i = 0; i < n; ++i) {
      for (std::uint32_t j = 0; j < n; ++j) {
        for (const auto& [g, coeff] : block.at(i, j).coeffs()) {
          const auto& rg = rho.image_of(g);
          for (std::uint32_t r = 0; r < d; ++r) {
            for (std::uint32_t c = 0; c < d; ++c) {
              m.at(i * d + r, j * d + c) += coeff * rg.at(r, c);
            }
          }
        }
      }
    }
    out.images.push_back(std::move(m));
  }
  for (ElementId a = 0; a < table.size(); ++a) {
    for (ElementId b = 0; b < table.size(); ++b) {
      if (out.images[table.product(a, b)] != out.images[a] * out.images[b]) {
        throw InputError("lift of '" + rho.label +
                         "' failed the multiplicativity check");
      }
    }
  }
  return out;
}

// Dimension of {M : M X(s) = X(s) M for all s} for the images X. For a
// multiplicative family it is enough to constrain a generating set.
template <class Field>
std::uint32_t commuting_space_dimension(const Field& field,
                                        const std::vector<const Matrix<Field>*>& images) {
  if (images.empty()) return 0;
  const std::uint32_t d = images.front()->rows();
  std::vector<std::vector<typename Field::Scalar>> rows;
  for (const auto* m : images) {
    for (std::uint32_t i = 0; i < d; ++i) {
      for (std::uint32_t j = 0; j < d; ++j) {
        std::vector<typename Field::Scalar> row(
            static_cast<std::size_t>(d) * d, field.zero());
        // (M A - A M)_{ij} = sum_k M_{ik} A_{kj} - A_{ik} M_{kj}
        for (std::uint32_t k = 0; k < d; ++k) {
          row[static_cast<std::size_t>(i) * d + k] += m->at(k, j);
          row[static_cast<std::size_t>(k) * d + j] -= m->at(i, k);
        }
        rows.push_back(std::move(row));
      }
    }
  }
  return d * d - gaussian_rank(field, rows);
}

// Dimension of {M : M X1(s) = X2(s) M for all s}; zero certifies
// inequivalence of irreducibles.
template <class Field>
std::uint32_t intertwining_space_dimension(
    const Field& field, const std::vector<const Matrix<Field>*>& images1,
    const std::vector<const Matrix<Field>*>& images2) {
  if (images1.size() != images2.size()) {
    throw InputError("intertwiner requires images over the same elements");
  }
  if (images1.empty()) return 0;
  const std::uint32_t d1 = images1.front()->rows();
  const std::uint32_t d2 = images2.front()->rows();
  std::vector<std::vector<typename Field::Scalar>> rows;
  for (std::size_t s = 0; s < images1.size(); ++s) {
    const auto& a1 = *images1[s];
    const auto& a2 = *images2[s];
    for (std::uint32_t i = 0; i < d2; ++i) {
      for (std::uint32_t j = 0; j < d1; ++j) {
        // (M A1 - A2 M)_{ij} with M of shape d2 x d1.
        std::vector<typename Field::Scalar> row(
            static_cast<std::size_t>(d1) * d2, field.zero());
        for (std::uint32_t k = 0; k < d1; ++k) {
          row[static_cast<std::size_t>(i) * d1 + k] += a1.at(k, j);
        }
        for (std::uint32_t k = 0; k < d2; ++k) {
          row[static_cast<std::size_t>(k) * d1 + j] -= a2.at(i, k);
        }
        rows.push_back(std::move(row));
      }
    }
  }
  return d1 * d2 - gaussian_rank(field, rows);
}

template <class Field>
std::uint32_t commutant_dimension(const SemigroupTable& table,
                                  const Rep<Field>& rep) {
  std::vector<const Matrix<Field>*> images;
  for (const auto& m : rep.images) images.push_back(&m);
  return commuting_space_dimension(rep.images.front().field(), images);
}

template <class Field>
std::uint32_t commutant_dimension(const SemigroupTable& table,
                                  const LiftedRep<Field>& rep) {
  std::vector<const Matrix<Field>*> images;
  for (ElementId g : table.generator_ids()) images.push_back(&rep.images[g]);
  return commuting_space_dimension(rep.images.front().field(), images);
}

template <class Field>
std::uint32_t intertwiner_dimension(const SemigroupTable& table,
                                    const Rep<Field>& r1, const Rep<Field>& r2) {
  if (r1.members != r2.members) {
    throw InputError("intertwiner requires representations of one subgroup");
  }
  std::vector<const Matrix<Field>*> i1, i2;
  for (std::size_t k = 0; k < r1.images.size(); ++k) {
    i1.push_back(&r1.images[k]);
    i2.push_back(&r2.images[k]);
  }
  return intertwining_space_dimension(r1.images.front().field(), i1, i2);
}

template <class Field>
std::uint32_t intertwiner_dimension(const SemigroupTable& table,
                                    const LiftedRep<Field>& r1,
                                    const LiftedRep<Field>& r2) {
  std::vector<const Matrix<Field>*> i1, i2;
  for (ElementId g : table.generator_ids()) {
    i1.push_back(&r1.images[g]);
    i2.push_back(&r2.images[g]);
  }
  return intertwining_space_dimension(r1.images.front().field(), i1, i2);
}

enum class GroupKind { kTrivial, kSymmetric, kCyclic, kUnsupported };

struct GroupClassification {
  GroupKind kind = GroupKind::kUnsupported;
  std::uint32_t support_rank = 0;
  ElementId cyclic_generator = kNoElement;
  std::string description;
};

GroupClassification classify_maximal_subgroup(const SemigroupTable& table,
                                              const MaximalSubgroup& group);

// Built-in irreducibles for a classified maximal subgroup. Throws InputError
// with a actionable message for unsupported groups or fields without enough
// roots of unity.
template <class Field>
std::vector<Rep<Field>> builtin_group_irreps(const SemigroupTable& table,
                                             const MaximalSubgroup& group,
                                             const Field& field);

// One lift per irreducible of each transversal subgroup, using built-in
// representations unless a supplied list overrides a block. Supplied lists
// are validated: multiplicative, sum of squared degrees equal to the group
// order, pairwise inequivalent.
template <class Field>
std::vector<LiftedRep<Field>> all_irreps(
    const SemigroupTable& table, const GreenStructure& green, const Field& field,
    const std::map<ElementId, std::vector<Rep<Field>>>& supplied = {});

struct IrrepCertificates {
  std::vector<std::uint32_t> commutant_dims;
  // intertwiner[i][j] for i < j, stored as a full symmetric matrix with the
  // commutant dimension on the diagonal.
  std::vector<std::vector<std::uint32_t>> intertwiners;
  bool all_irreducible = false;
  bool pairwise_inequivalent = false;
  std::uint64_t sum_degree_squares = 0;
};

template <class Field>
IrrepCertificates certify_lifts(const SemigroupTable& table,
                                const std::vector<LiftedRep<Field>>& lifts) {
  IrrepCertificates cert;
  const auto n = lifts.size();
  cert.intertwiners.assign(n, std::vector<std::uint32_t>(n, 0));
  cert.all_irreducible = true;
  cert.pairwise_inequivalent = true;
  for (std::size_t i = 0; i < n; ++i) {
    const auto dim = commutant_dimension(table, lifts[i]);
    cert.commutant_dims.push_back(dim);
    cert.intertwiners[i][i] = dim;
    if (dim != 1) cert.all_irreducible = false;
    cert.sum_degree_squares +=
        static_cast<std::uint64_t>(lifts[i].degree) * lifts[i].degree;
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto t = intertwiner_dimension(table, lifts[i], lifts[j]);
      cert.intertwiners[i][j] = cert.intertwiners[j][i] = t;
      if (t != 0) cert.pairwise_inequivalent = false;
    }
  }
  return cert;
}

// True iff p is zero or coprime to every maximal subgroup order. Composite p
// is an input error.
bool characteristic_guard(const SemigroupTable& table, const GreenStructure& green,
                          std::uint64_t p);

}  // namespace conjrep

#endif  // CONJREP_REPS_HPP_
