#pragma once

#include "qagg/solver.hpp"

#include <string>

namespace qagg {

struct AggregatorOutput {
  Vector theta;
  std::string method;
  SolverResult diagnostics;
  double empirical_risk = 0.0;  // recomputed from theta, never read from solver internals
  double beta_used = 0.0;
};

// Penalized Q-aggregation: minimizes
//   (1-nu) R_n(f_theta) + nu sum_j theta_j R_n(f_j) + (beta/n) sum_j theta_j log(1/pi_j)
// over the simplex, warm-started at the exponential-weights point.
// Throws on solver non-convergence with the diagnostics in the message.
AggregatorOutput q_aggregate(const LossModel& loss, const LabeledSample& sample,
                             const AggregationConfig& config, const SolverConfig& solver);

// Vertex with the smallest empirical risk, lowest index on ties.
AggregatorOutput erm_select(const LossModel& loss, const LabeledSample& sample);

// Minimizes R_n(f_theta) over the simplex (nu = 0, beta = 0).
AggregatorOutput convex_erm(const LossModel& loss, const LabeledSample& sample,
                            const SolverConfig& solver);

// theta_j proportional to pi_j exp(-n R_n(f_j) / beta), log-sum-exp stabilized.
AggregatorOutput exponential_weights(const LossModel& loss, const LabeledSample& sample,
                                     const Vector& prior, double beta);

// The exponential-weights point from already-computed column risks.
Vector exponential_weights_point(const Vector& risks, const Vector& prior, double beta, Index n);

}  // namespace qagg
