// Irreducible representations of the symmetric group S_k in Young's
// seminormal form, one per partition of k, with exact rational entries.
// Supported up to k = 5; larger groups go through the user-supplied path.

#ifndef CONJREP_YOUNG_HPP_
#define CONJREP_YOUNG_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "conjrep/field.hpp"
#include "conjrep/matrix.hpp"

namespace conjrep {

inline constexpr std::uint32_t kMaxSymmetricDegree = 5;

// Partitions of k in descending lexicographic order, parts descending.
std::vector<std::vector<std::uint32_t>> partitions_of(std::uint32_t k);

// Product of hook lengths divides k!; the quotient is the number of standard
// tableaux, i.e. the representation degree.
std::uint64_t hook_length_degree(const std::vector<std::uint32_t>& partition);

struct SeminormalIrrep {
  std::vector<std::uint32_t> partition;
  std::uint32_t degree = 0;
  std::string label;
  // Image of the adjacent transposition swapping i, i+1 (0-based i,
  // i = 0..k-2).
  std::vector<Matrix<RationalField>> adjacent_images;
};

// All seminormal irreps of S_k. Throws InputError for k > kMaxSymmetricDegree.
std::vector<SeminormalIrrep> seminormal_irreps(std::uint32_t k);

// Image of an arbitrary permutation (one-line notation, p[i] = image of i)
// as the product over an adjacent-transposition word.
Matrix<RationalField> seminormal_image(const SeminormalIrrep& irrep,
                                       const std::vector<std::uint32_t>& perm);

}  // namespace conjrep

#endif  // CONJREP_YOUNG_HPP_
