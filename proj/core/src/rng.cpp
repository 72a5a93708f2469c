#include "qagg/rng.hpp"

#include <stdexcept>

namespace qagg {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::vector<std::uint64_t> derive_seeds(std::uint64_t master_seed, std::size_t count) {
  std::vector<std::uint64_t> seeds(count);
  std::uint64_t state = master_seed;
  for (auto& s : seeds) s = splitmix64(state);
  return seeds;
}

std::uint64_t mix_seed(std::uint64_t master_seed, std::uint64_t stream) {
  std::uint64_t state = master_seed ^ (0xA0761D6478BD642FULL * (stream + 1));
  return splitmix64(state);
}

Rng::Rng(std::uint64_t seed) : engine_(mix_seed(seed, 0)) {}

double Rng::uniform01() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform01();
}

double Rng::rademacher() {
  return (engine_() >> 63) ? 1.0 : -1.0;
}

bool Rng::bernoulli(double p) {
  return uniform01() < p;
}

Index Rng::discrete(const Vector& probabilities) {
  if (probabilities.size() < 1) throw std::invalid_argument("discrete: empty distribution");
  const double u = uniform01();
  double acc = 0.0;
  for (Index i = 0; i < probabilities.size(); ++i) {
    acc += probabilities[i];
    if (u < acc) return i;
  }
  return probabilities.size() - 1;  // mass lost to rounding lands on the last atom
}

}  // namespace qagg
