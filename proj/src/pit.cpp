#include "sixpoints/pit.hpp"

#include <cmath>
#include <stdexcept>

#include "sixpoints/rng.hpp"

namespace sixpoints {

double PitResult::failure_probability_bound() const {
  return std::pow(double(degree_bound) / double(Fp::P), trials);
}

PitResult pit_zero(const std::function<Fp(std::span<const Fp>)>& eval, int arity,
                   int degree_bound, int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("pit_zero: trials must be >= 1");
  if (degree_bound < 1) throw std::invalid_argument("pit_zero: degree bound must be >= 1");

  PitResult res;
  res.degree_bound = degree_bound;
  std::vector<Fp> point(static_cast<std::size_t>(arity));
  for (int t = 0; t < trials; ++t) {
    std::mt19937_64 gen(derive_seed(seed, 0x1d, std::uint64_t(t)));
    for (auto& x : point) x = Fp(uniform_below(gen, Fp::P));
    Fp v = eval(point);
    res.trials = t + 1;
    if (!v.is_zero()) {
      res.zero = false;
      res.witness = point;
      res.witness_value = v;
      return res;
    }
  }
  res.zero = true;
  res.trials = trials;
  return res;
}

}  // namespace sixpoints
