#ifndef SZEGO_RANDOM_HPP
#define SZEGO_RANDOM_HPP

#include <cmath>
#include <numbers>
#include <random>

#include "szego/types.hpp"

namespace szego {

// Deterministic uniform doubles straight from the engine bits, so seeded
// runs reproduce bitwise across standard libraries.
inline double unit_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_double(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * unit_double(rng);
}

// Uniform over the closed disk of the given radius.
inline Cplx random_in_disk(std::mt19937_64& rng, double radius) {
  const double r = radius * std::sqrt(unit_double(rng));
  const double phi = 2.0 * std::numbers::pi * unit_double(rng);
  return std::polar(r, phi);
}

}  // namespace szego

#endif  // SZEGO_RANDOM_HPP
