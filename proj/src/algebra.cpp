#include "conjrep/algebra.hpp"

#include <algorithm>

namespace conjrep {

PsiContext::PsiContext(const SemigroupTable& table, const GreenStructure& green)
    : table_(&table), green_(&green), order_(table) {
  idempotents_ = green.d_idempotents;
  connectors_.resize(idempotents_.size());
  for (std::uint32_t k = 0; k < idempotents_.size(); ++k) {
    const ElementId e = green.lambda[k];
    connectors_[k].reserve(idempotents_[k].size());
    for (ElementId f : idempotents_[k]) {
      connectors_[k].push_back(connecting_element(table, f, e));
    }
  }
}

std::uint32_t PsiContext::slot_of_idempotent(std::uint32_t lambda_index,
                                             ElementId f) const {
  const auto& idems = idempotents_[lambda_index];
  const auto it = std::lower_bound(idems.begin(), idems.end(), f);
  return static_cast<std::uint32_t>(it - idems.begin());
}

}  // namespace conjrep
