#include "conjrep/builtins.hpp"

#include <random>

#include "conjrep/error.hpp"

namespace conjrep {

namespace {

std::vector<PartialPerm> transpositions(std::uint32_t n) {
  std::vector<PartialPerm> gens;
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i + 1; j < n; ++j) {
      std::vector<std::uint32_t> v(n);
      for (std::uint32_t x = 0; x < n; ++x) v[x] = x;
      std::swap(v[i], v[j]);
      gens.emplace_back(std::move(v));
    }
  }
  return gens;
}

PartialPerm shift(std::uint32_t n) {
  std::vector<std::uint32_t> v(n, kUndefined);
  for (std::uint32_t x = 1; x < n; ++x) v[x] = x - 1;
  return PartialPerm(std::move(v));
}

PartialPerm random_partial_perm(std::mt19937_64& rng, std::uint32_t degree) {
  std::vector<std::uint32_t> available(degree);
  for (std::uint32_t x = 0; x < degree; ++x) available[x] = x;
  std::vector<std::uint32_t> images(degree, kUndefined);
  for (std::uint32_t x = 0; x < degree; ++x) {
    if (rng() % 3 == 0) continue;  // leave the point undefined
    const auto pick = static_cast<std::size_t>(rng() % available.size());
    images[x] = available[pick];
    available.erase(available.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return PartialPerm(std::move(images));
}

}  // namespace

GeneratorInput random_inverse_input(std::uint32_t degree, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  GeneratorInput input;
  input.degree = degree;
  input.name = "random-" + std::to_string(degree) + ":" + std::to_string(seed);
  input.generators.push_back(random_partial_perm(rng, degree));
  input.generators.push_back(random_partial_perm(rng, degree));
  return input;
}

GeneratorInput builtin_generators(const std::string& name, std::uint64_t seed) {
  const auto dash = name.rfind('-');
  if (dash == std::string::npos) {
    throw InputError("unknown builtin '" + name +
                     "'; expected rook-n, sym-n, chain-n or random-n");
  }
  const std::string family = name.substr(0, dash);
  std::uint32_t n = 0;
  try {
    n = static_cast<std::uint32_t>(std::stoul(name.substr(dash + 1)));
  } catch (const std::exception&) {
    throw InputError("builtin '" + name + "' has no valid size suffix");
  }

  GeneratorInput input;
  input.degree = n;
  input.name = name;
  if (family == "rook") {
    if (n < 1 || n > 5) {
      throw InputError("rook-n supports 1 <= n <= 5 at this scale");
    }
    input.generators = transpositions(n);
    if (n == 1) input.generators.push_back(PartialPerm::identity(1));
    // One rank n-1 partial identity; together with the unit group this
    // generates every partial permutation.
    std::vector<std::uint32_t> points;
    for (std::uint32_t x = 0; x + 1 < n; ++x) points.push_back(x);
    input.generators.push_back(PartialPerm::partial_identity(n, points));
  } else if (family == "sym") {
    if (n < 1 || n > 6) {
      throw InputError("sym-n supports 1 <= n <= 6 at this scale");
    }
    if (n == 1) {
      input.generators.push_back(PartialPerm::identity(1));
    } else {
      input.generators = transpositions(n);
    }
  } else if (family == "chain") {
    if (n < 1 || n > 8) {
      throw InputError("chain-n supports 1 <= n <= 8 at this scale");
    }
    input.generators.push_back(shift(n));
  } else if (family == "random") {
    if (n < 2 || n > 6) {
      throw InputError("random-n supports 2 <= n <= 6 at this scale");
    }
    return random_inverse_input(n, seed);
  } else {
    throw InputError("unknown builtin family '" + family +
                     "'; expected rook, sym, chain or random");
  }
  return input;
}

}  // namespace conjrep
