// The semigroup algebra FS and its block decomposition.
//
// groupoid_expand computes the alternate basis element
//   floor(a) = sum_{b <= a} mu(b, a) b,
// under which FS decomposes into one block per transversal idempotent e,
// each block isomorphic to the n_e x n_e matrix algebra over FG(e). psi
// realizes that isomorphism concretely: floor(b) with b in D_e, range f_i
// and domain f_j is sent to t_i b t_j^-1 in entry (i, j), and floor(b) with
// b outside D_e is sent to zero. The homomorphism property is asserted by
// tests, not assumed.

#ifndef CONJREP_ALGEBRA_HPP_
#define CONJREP_ALGEBRA_HPP_

#include <cstdint>
#include <map>
#include <vector>

#include "conjrep/error.hpp"
#include "conjrep/semigroup.hpp"

namespace conjrep {

// Finite linear combination of table elements; zero coefficients are absent.
template <class Field>
class AlgebraElement {
 public:
  using Scalar = typename Field::Scalar;

  explicit AlgebraElement(const Field& field) : field_(field) {}

  static AlgebraElement basis(const Field& field, ElementId a) {
    AlgebraElement x(field);
    x.coeffs_.emplace(a, field.one());
    return x;
  }

  const Field& field() const { return field_; }
  const std::map<ElementId, Scalar>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  void add(ElementId a, const Scalar& c) {
    auto it = coeffs_.find(a);
    if (it == coeffs_.end()) {
      if (!field_.is_zero(c)) coeffs_.emplace(a, c);
      return;
    }
    it->second += c;
    if (field_.is_zero(it->second)) coeffs_.erase(it);
  }

  AlgebraElement& operator+=(const AlgebraElement& o) {
    for (const auto& [a, c] : o.coeffs_) add(a, c);
    return *this;
  }

  AlgebraElement scaled(const Scalar& s) const {
    AlgebraElement out(field_);
    if (field_.is_zero(s)) return out;
    for (const auto& [a, c] : coeffs_) out.coeffs_.emplace(a, c * s);
    return out;
  }

  // Product in FS via the composition table.
  AlgebraElement times(const SemigroupTable& table, const AlgebraElement& o) const {
    AlgebraElement out(field_);
    for (const auto& [a, ca] : coeffs_) {
      for (const auto& [b, cb] : o.coeffs_) {
        out.add(table.product(a, b), ca * cb);
      }
    }
    return out;
  }

  bool operator==(const AlgebraElement& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

 private:
  Field field_;
  std::map<ElementId, Scalar> coeffs_;
};

// floor(a) = sum over the down-set of a of mu(b, a) b.
template <class Field>
AlgebraElement<Field> groupoid_expand(const SemigroupTable& table,
                                      const NaturalOrder& order, ElementId a,
                                      const Field& field) {
  AlgebraElement<Field> out(field);
  for (ElementId b : order.down_set(a)) {
    out.add(b, field.from_int(order.mobius(b, a)));
  }
  return out;
}

template <class Field>
AlgebraElement<Field> groupoid_expand(const SemigroupTable& table, ElementId a,
                                      const Field& field) {
  NaturalOrder order(table);
  return groupoid_expand(table, order, a, field);
}

// n_e x n_e matrix with entries in FG(e), e the transversal idempotent of
// one D-class block.
template <class Field>
struct GroupMatrix {
  std::uint32_t size = 0;
  std::uint32_t lambda_index = 0;
  std::vector<AlgebraElement<Field>> entries;  // row-major

  const AlgebraElement<Field>& at(std::uint32_t i, std::uint32_t j) const {
    return entries[static_cast<std::size_t>(i) * size + j];
  }
  AlgebraElement<Field>& at(std::uint32_t i, std::uint32_t j) {
    return entries[static_cast<std::size_t>(i) * size + j];
  }

  GroupMatrix times(const SemigroupTable& table, const GroupMatrix& o) const {
    GroupMatrix out = *this;
    for (auto& e : out.entries) e = AlgebraElement<Field>(e.field());
    for (std::uint32_t i = 0; i < size; ++i) {
      for (std::uint32_t k = 0; k < size; ++k) {
        if (at(i, k).is_zero()) continue;
        for (std::uint32_t j = 0; j < size; ++j) {
          out.at(i, j) += at(i, k).times(table, o.at(k, j));
        }
      }
    }
    return out;
  }

  bool operator==(const GroupMatrix& o) const { return entries == o.entries; }
};

// Fixed data for the block maps: per transversal member, the idempotents of
// its D-class in ascending id order and one connecting element per
// idempotent (domain the idempotent, range the transversal member).
class PsiContext {
 public:
  PsiContext(const SemigroupTable& table, const GreenStructure& green);

  const SemigroupTable& table() const { return *table_; }
  const GreenStructure& green() const { return *green_; }
  const NaturalOrder& order() const { return order_; }

  std::uint32_t block_size(std::uint32_t lambda_index) const {
    return static_cast<std::uint32_t>(idempotents_[lambda_index].size());
  }
  const std::vector<ElementId>& block_idempotents(std::uint32_t lambda_index) const {
    return idempotents_[lambda_index];
  }
  ElementId connector(std::uint32_t lambda_index, std::uint32_t i) const {
    return connectors_[lambda_index][i];
  }

  // Row/column slot of an element of the block's D-class.
  std::uint32_t slot_of_idempotent(std::uint32_t lambda_index, ElementId f) const;

  template <class Field>
  GroupMatrix<Field> psi(std::uint32_t lambda_index,
                         const AlgebraElement<Field>& x) const {
    const auto& table = *table_;
    GroupMatrix<Field> m;
    m.size = block_size(lambda_index);
    m.lambda_index = lambda_index;
    m.entries.assign(static_cast<std::size_t>(m.size) * m.size,
                     AlgebraElement<Field>(x.field()));
    // A basis element expands as the plain sum of the groupoid basis over
    // its down-set, and each groupoid basis element occupies one slot.
    for (const auto& [a, coeff] : x.coeffs()) {
      for (ElementId b : order_.down_set(a)) {
        if (green_->d_of[b] != lambda_index) continue;
        const auto i = slot_of_idempotent(lambda_index, table.range_id(b));
        const auto j = slot_of_idempotent(lambda_index, table.domain_id(b));
        const ElementId t_i = connectors_[lambda_index][i];
        const ElementId t_j_inv = table.inverse_of(connectors_[lambda_index][j]);
        const ElementId g = table.product(table.product(t_i, b), t_j_inv);
        m.at(i, j).add(g, coeff);
      }
    }
    return m;
  }

 private:
  const SemigroupTable* table_;
  const GreenStructure* green_;
  NaturalOrder order_;
  std::vector<std::vector<ElementId>> idempotents_;  // per lambda index
  std::vector<std::vector<ElementId>> connectors_;
};

// The block image of an algebra element at the transversal idempotent e.
// Throws InputError when e is not a transversal member.
template <class Field>
GroupMatrix<Field> psi(const SemigroupTable& table, const GreenStructure& green,
                       ElementId e, const AlgebraElement<Field>& x) {
  const auto lambda_index = green.lambda_index_of(e);
  if (!lambda_index) {
    throw InputError("psi is defined at transversal idempotents only");
  }
  PsiContext context(table, green);
  return context.psi(*lambda_index, x);
}

}  // namespace conjrep

#endif  // CONJREP_ALGEBRA_HPP_
