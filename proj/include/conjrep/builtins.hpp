// Canonical generator families used as fixtures:
//   rook-n   all partial permutations of n points (transpositions plus one
//            rank n-1 partial identity),
//   sym-n    the symmetric group on n points,
//   chain-n  the inverse semigroup generated by the rank n-1 shift,
//   random-n a seeded random inverse subsemigroup on n points.

#ifndef CONJREP_BUILTINS_HPP_
#define CONJREP_BUILTINS_HPP_

#include <cstdint>
#include <string>

#include "conjrep/io.hpp"

namespace conjrep {

// Parses names of the form "rook-3", "sym-4", "chain-5", "random-4". The
// seed is used by the random family only. Unknown names or out-of-range
// sizes raise InputError.
GeneratorInput builtin_generators(const std::string& name, std::uint64_t seed = 0);

// Two random partial permutations of the given degree, closed under
// inverses during generation; deterministic in the seed.
GeneratorInput random_inverse_input(std::uint32_t degree, std::uint64_t seed);

}  // namespace conjrep

#endif  // CONJREP_BUILTINS_HPP_
