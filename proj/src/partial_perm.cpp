#include "conjrep/partial_perm.hpp"

#include <algorithm>
#include <sstream>

#include "conjrep/error.hpp"

namespace conjrep {

PartialPerm::PartialPerm(std::vector<std::uint32_t> images)
    : images_(std::move(images)) {
  const auto degree = static_cast<std::uint32_t>(images_.size());
  std::vector<bool> seen(degree, false);
  for (std::uint32_t x = 0; x < degree; ++x) {
    const std::uint32_t y = images_[x];
    if (y == kUndefined) continue;
    if (y >= degree) {
      throw InputError("partial permutation image " + std::to_string(y) +
                       " out of range for degree " + std::to_string(degree));
    }
    if (seen[y]) {
      throw InputError("partial permutation is not injective: point " +
                       std::to_string(y) + " hit twice");
    }
    seen[y] = true;
  }
}

PartialPerm PartialPerm::identity(std::uint32_t degree) {
  std::vector<std::uint32_t> v(degree);
  for (std::uint32_t i = 0; i < degree; ++i) v[i] = i;
  return PartialPerm(std::move(v));
}

PartialPerm PartialPerm::empty(std::uint32_t degree) {
  return PartialPerm(std::vector<std::uint32_t>(degree, kUndefined));
}

PartialPerm PartialPerm::partial_identity(
    std::uint32_t degree, const std::vector<std::uint32_t>& points) {
  std::vector<std::uint32_t> v(degree, kUndefined);
  for (std::uint32_t p : points) {
    if (p >= degree) {
      throw InputError("partial identity point " + std::to_string(p) +
                       " out of range for degree " + std::to_string(degree));
    }
    v[p] = p;
  }
  return PartialPerm(std::move(v));
}

std::uint32_t PartialPerm::rank() const {
  std::uint32_t r = 0;
  for (std::uint32_t y : images_) r += (y != kUndefined);
  return r;
}

std::vector<std::uint32_t> PartialPerm::domain_points() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t x = 0; x < degree(); ++x) {
    if (defined(x)) out.push_back(x);
  }
  return out;
}

std::vector<std::uint32_t> PartialPerm::range_points() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t x = 0; x < degree(); ++x) {
    if (defined(x)) out.push_back(images_[x]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool PartialPerm::is_idempotent() const {
  for (std::uint32_t x = 0; x < degree(); ++x) {
    if (defined(x) && images_[x] != x) return false;
  }
  return true;
}

std::string PartialPerm::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

PartialPerm compose(const PartialPerm& a, const PartialPerm& b) {
  if (a.degree() != b.degree()) {
    throw InputError("cannot compose partial permutations of degrees " +
                     std::to_string(a.degree()) + " and " +
                     std::to_string(b.degree()));
  }
  std::vector<std::uint32_t> v(a.degree(), kUndefined);
  for (std::uint32_t x = 0; x < b.degree(); ++x) {
    const std::uint32_t mid = b.image(x);
    if (mid != kUndefined && a.defined(mid)) v[x] = a.image(mid);
  }
  return PartialPerm(std::move(v));
}

PartialPerm inverse(const PartialPerm& a) {
  std::vector<std::uint32_t> v(a.degree(), kUndefined);
  for (std::uint32_t x = 0; x < a.degree(); ++x) {
    if (a.defined(x)) v[a.image(x)] = x;
  }
  return PartialPerm(std::move(v));
}

PartialPerm domain_of(const PartialPerm& a) {
  std::vector<std::uint32_t> v(a.degree(), kUndefined);
  for (std::uint32_t x = 0; x < a.degree(); ++x) {
    if (a.defined(x)) v[x] = x;
  }
  return PartialPerm(std::move(v));
}

PartialPerm range_of(const PartialPerm& a) {
  std::vector<std::uint32_t> v(a.degree(), kUndefined);
  for (std::uint32_t x = 0; x < a.degree(); ++x) {
    if (a.defined(x)) v[a.image(x)] = a.image(x);
  }
  return PartialPerm(std::move(v));
}

bool natural_leq(const PartialPerm& b, const PartialPerm& a) {
  if (a.degree() != b.degree()) {
    throw InputError("natural order compares equal degrees only");
  }
  for (std::uint32_t x = 0; x < b.degree(); ++x) {
    if (b.defined(x) && (!a.defined(x) || a.image(x) != b.image(x))) return false;
  }
  return true;
}

std::vector<std::vector<int>> to_rook_matrix(const PartialPerm& a) {
  const std::uint32_t n = a.degree();
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  for (std::uint32_t j = 0; j < n; ++j) {
    if (a.defined(j)) m[a.image(j)][j] = 1;
  }
  return m;
}

std::ostream& operator<<(std::ostream& os, const PartialPerm& a) {
  os << '[';
  for (std::uint32_t x = 0; x < a.degree(); ++x) {
    if (x) os << ',';
    if (a.defined(x)) {
      os << a.image(x);
    } else {
      os << '-';
    }
  }
  return os << ']';
}

}  // namespace conjrep
