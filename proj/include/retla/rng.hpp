// Seeded randomness shared by the sampling routines. Results depend only on
// the seed, never on std::uniform_int_distribution's library-specific output.

#pragma once

#include <cstdint>
#include <random>

#include "retla/ff_linalg.hpp"

namespace retla {

using Rng = std::mt19937_64;

/// splitmix64 finalizer; derives independent streams from one user seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0) { return Rng(mix_seed(seed, stream)); }

inline std::uint8_t random_residue(Rng& rng, unsigned p) { return static_cast<std::uint8_t>(rng() % p); }

inline Vec random_vector(Rng& rng, unsigned p, std::size_t n) {
  Vec v(n);
  for (auto& c : v) c = random_residue(rng, p);
  return v;
}

/// Uniform element of a subspace.
inline Vec random_element(Rng& rng, const Subspace& s) {
  return s.combine(random_vector(rng, s.p(), s.dim()));
}

}  // namespace retla
