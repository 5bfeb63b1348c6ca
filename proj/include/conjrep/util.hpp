// Small shared utilities: union-find, hashing, integer helpers.

#ifndef CONJREP_UTIL_HPP_
#define CONJREP_UTIL_HPP_

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace conjrep {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  std::size_t find(std::size_t x) const {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    return true;
  }

  // Partition into classes ordered by minimal member; members ascending.
  std::vector<std::vector<std::uint32_t>> classes() const;

 private:
  mutable std::vector<std::size_t> parent_;
  std::vector<std::uint8_t> rank_;
};

inline std::uint64_t fnv1a(const void* data, std::size_t len,
                           std::uint64_t seed = 0xcbf29ce484222325ULL) {
  const auto* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = seed;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t value);

bool is_prime(std::uint64_t n);

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p);

// Smallest generator of the multiplicative group of GF(p).
std::uint64_t primitive_root(std::uint64_t p);

constexpr std::uint64_t factorial(std::uint32_t n) {
  std::uint64_t f = 1;
  for (std::uint32_t i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace conjrep

#endif  // CONJREP_UTIL_HPP_
