#pragma once

#include "qagg/types.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace qagg {

// splitmix64 step; used to derive independent per-replication seeds from a
// master seed so results do not depend on scheduling.
std::uint64_t splitmix64(std::uint64_t& state);

std::vector<std::uint64_t> derive_seeds(std::uint64_t master_seed, std::size_t count);
std::uint64_t mix_seed(std::uint64_t master_seed, std::uint64_t stream);

// Deterministic generator with the handful of draws the harness needs.
// Uniform doubles are built from the top 53 bits so the sequence is fixed
// by the engine alone.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  double uniform01();  // [0, 1)
  double uniform(double lo, double hi);
  double rademacher();  // -1 or +1
  bool bernoulli(double p);
  Index discrete(const Vector& probabilities);

 private:
  std::mt19937_64 engine_;
};

}  // namespace qagg
