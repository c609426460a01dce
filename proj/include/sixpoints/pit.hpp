#ifndef SIXPOINTS_PIT_HPP
#define SIXPOINTS_PIT_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "sixpoints/fp.hpp"

namespace sixpoints {

struct PitResult {
  bool zero = false;
  // Witness point and value when a nonzero evaluation was found.
  std::vector<Fp> witness;
  Fp witness_value;
  // Schwartz-Zippel failure bound (degree_bound / P)^trials, as exponent data.
  int degree_bound = 0;
  int trials = 0;
  double failure_probability_bound() const;
};

// Schwartz-Zippel identity test of an implicit polynomial over F_P.
// Trials draw independent points; per-trial seeds derive from (seed, index),
// so a fixed seed is bit-reproducible.
PitResult pit_zero(const std::function<Fp(std::span<const Fp>)>& eval, int arity,
                   int degree_bound, int trials, std::uint64_t seed);

}  // namespace sixpoints

#endif
