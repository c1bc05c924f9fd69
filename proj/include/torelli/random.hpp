#pragma once

// Seeded generators of random exact inputs for property checks.

#include <cstdint>
#include <random>

#include "torelli/exterior.hpp"
#include "torelli/johnson.hpp"
#include "torelli/linalg.hpp"

namespace torelli {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 20240229;

/// num/den with |num| <= max_num and 1 <= den <= max_den.
Rational random_rational(Rng& rng, int max_num = 6, int max_den = 5);
Vector random_vector(Rng& rng, const SymplecticSpace& space);
/// Nonzero vector with integer entries in [-bound, bound].
Vector random_integral_vector(Rng& rng, const SymplecticSpace& space, int bound = 2);
/// Each basis blade gets a random coefficient with probability `density`.
Multivector random_multivector(Rng& rng, const SymplecticSpace& space, int degree, double density = 0.5);
Multivector random_primitive(Rng& rng, const SymplecticSpace& space, double density = 0.5);
Sym2Element random_sym2(Rng& rng, const SymplecticSpace& space, double density = 0.3);
/// Product of `steps` transvections with random integral directions.
LinearMap random_symplectic_map(Rng& rng, const SymplecticSpace& space, int steps = 4);
/// A valid bounding pair: a standard one moved by a random symplectic map,
/// with each side's pairs re-based inside the side and shifted by multiples
/// of d.
BoundingPairSpec random_bounding_pair(Rng& rng, const SymplecticSpace& space);

}  // namespace torelli
