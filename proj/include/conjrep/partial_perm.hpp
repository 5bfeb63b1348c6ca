// Partial permutations of {0, ..., degree-1}: injective partial self-maps.
//
// A PartialPerm stores one image per point, with kUndefined marking points
// outside the domain. Composition is a left action: compose(a, b) applies
// b first, so compose(a, b)(x) = a(b(x)).

#ifndef CONJREP_PARTIAL_PERM_HPP_
#define CONJREP_PARTIAL_PERM_HPP_

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "conjrep/util.hpp"

namespace conjrep {

inline constexpr std::uint32_t kUndefined = 0xffffffffu;

class PartialPerm {
 public:
  PartialPerm() = default;

  // Validates injectivity and range; throws InputError on violation.
  explicit PartialPerm(std::vector<std::uint32_t> images);

  static PartialPerm identity(std::uint32_t degree);
  static PartialPerm empty(std::uint32_t degree);
  // Partial identity fixing exactly the given points.
  static PartialPerm partial_identity(std::uint32_t degree,
                                      const std::vector<std::uint32_t>& points);

  std::uint32_t degree() const { return static_cast<std::uint32_t>(images_.size()); }
  std::uint32_t rank() const;
  bool defined(std::uint32_t x) const { return images_[x] != kUndefined; }
  std::uint32_t image(std::uint32_t x) const { return images_[x]; }
  const std::vector<std::uint32_t>& images() const { return images_; }

  std::vector<std::uint32_t> domain_points() const;
  std::vector<std::uint32_t> range_points() const;

  // Idempotent partial permutations are exactly the partial identities.
  bool is_idempotent() const;

  bool operator==(const PartialPerm& other) const { return images_ == other.images_; }
  bool operator!=(const PartialPerm& other) const { return images_ != other.images_; }

  std::string str() const;

 private:
  std::vector<std::uint32_t> images_;
};

// compose(a, b)(x) = a(b(x)); defined where both steps are. Degrees must match.
PartialPerm compose(const PartialPerm& a, const PartialPerm& b);

// inverse(a)(y) = x iff a(x) = y.
PartialPerm inverse(const PartialPerm& a);

// Partial identity on dom(a); equals compose(inverse(a), a).
PartialPerm domain_of(const PartialPerm& a);

// Partial identity on ran(a); equals compose(a, inverse(a)).
PartialPerm range_of(const PartialPerm& a);

// Natural partial order: b <= a iff b is a restriction of a,
// i.e. b = compose(a, domain_of(b)).
bool natural_leq(const PartialPerm& b, const PartialPerm& a);

// degree x degree 0/1 matrix with entry (i, j) = 1 iff a(j) = i.
std::vector<std::vector<int>> to_rook_matrix(const PartialPerm& a);

std::ostream& operator<<(std::ostream& os, const PartialPerm& a);

struct PartialPermHash {
  std::size_t operator()(const PartialPerm& p) const {
    const auto& v = p.images();
    return static_cast<std::size_t>(
        fnv1a(v.data(), v.size() * sizeof(std::uint32_t)));
  }
};

}  // namespace conjrep

#endif  // CONJREP_PARTIAL_PERM_HPP_
