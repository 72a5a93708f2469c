#pragma once

#include "qagg/types.hpp"

#include <cstdint>
#include <string>

namespace qagg {

enum class GeneratorKind { two_expert_near_tie, random_bounded_dict, sign_noise };

GeneratorKind generator_kind_from_name(const std::string& name);
std::string to_string(GeneratorKind kind);

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::random_bounded_dict;
  int dictionary_size = 5;  // M; two-expert-near-tie always builds M = 2
  int support_size = 20;    // atoms of X
  double bound = 1.0;       // b; every emitted value stays in [-b, b]
  double gap_scale = 1.0;   // near-tie: delta = gap_scale / (4 sqrt(n_ref))
  double amplitude = 0.5;   // near-tie expert level t; sign-noise gamma (fraction of b)
  int n_ref = 1000;         // sample size the near-tie gap is calibrated to
  std::uint64_t seed = 0;
};

// Deterministic in the seed.
//   two-expert-near-tie: one X atom, experts at +-b*t, labels +-b with
//     P(Y = b) = 1/2 + delta; the best expert wins by 8*delta*t*b^2 under
//     the squared loss.
//   random-bounded-dict: uniform S-atom support, entries i.i.d. uniform on
//     [-b, b], labels +-b with a per-atom sign probability drawn once.
//   sign-noise: entries gamma * (random sign), labels independent +-b.
PopulationModel generate_problem(const GeneratorSpec& spec);

// n i.i.d. support draws; deterministic in the seed.
LabeledSample sample_from(const PopulationModel& pop, int n, std::uint64_t seed);

}  // namespace qagg
