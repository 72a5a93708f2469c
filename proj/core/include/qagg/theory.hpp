#pragma once

#include "qagg/generators.hpp"
#include "qagg/report.hpp"
#include "qagg/solver.hpp"

namespace qagg {

enum class BoundedDistribution { rademacher, constant, uniform };

// A bounded-variable Laplace-transform check: |Z| <= c almost surely,
// exponent scale lambda must satisfy 0 < lambda < 2 c0 / (1 + 2 c0 c).
struct LaplaceCheckSpec {
  BoundedDistribution dist = BoundedDistribution::rademacher;
  double c = 1.0;
  double c0 = 1.0;
  double lambda = 0.5;
  int n = 10;
  long draws = 100000;  // at least 10^4
  std::uint64_t seed = 0;
};

struct TailReport {
  double estimate = 0.0;
  double standard_error = 0.0;
  double bound = 0.0;
  bool pass = false;
};

struct BernsteinCheck {
  TailReport forward;   // E exp[n lambda (mean(Z) - EZ - c0 EZ^2)] <= 1
  TailReport reversed;  // same with Z replaced by -Z
};

// Monte Carlo check of the shifted-Bernstein Laplace bound.
BernsteinCheck bernstein_laplace_check(const LaplaceCheckSpec& spec);

// Exact check of prod_i cosh(a_i) <= exp(sum_i a_i^2 / 2); no Monte Carlo.
TailReport rademacher_laplace_check(const Vector& coefficients);

// Exact check of R(f_theta) <= sum_j theta_j R(f_j) - (C_l / 2) V(theta)
// on the finite support.
TailReport jensen_gap_check(const LossModel& loss, const PopulationModel& pop,
                            const Vector& theta);

struct ZnTailResult {
  std::vector<double> x_grid;
  std::vector<TailReport> tails;  // per x: frequency of Z_n > beta x / n against exp(-x)
  TailReport moment;              // mean exp(n Z_n / beta) against 1
  std::vector<double> zn_values;
  Vector oracle_theta;
  double mu = 0.0;
  double s = 0.0;
};

// Replicated check of the exponential-moment statistic behind the oracle
// inequality: draws a size-n sample, aggregates, and evaluates
//   Z_n = (P - P_n)(l~_that - l~_tstar) - mu sum_j that_j ||f_j - f_tstar||^2
//         - mu that' H tstar - K(that) / s
// with s = 3n / beta and exact population terms. The oracle weights are
// computed once; they do not depend on the sample.
ZnTailResult zn_tail_experiment(const LossModel& loss, const PopulationModel& pop,
                                const AggregationConfig& config, int n, int replications,
                                const std::vector<double>& x_grid, const SolverConfig& solver,
                                std::uint64_t seed, int threads = 1);

// Replicated excess-risk experiment: per n and method, population excess risk,
// the deterministic bound value, and tail frequencies at each x.
ExperimentReport oracle_inequality_experiment(const LossModel& loss, const PopulationModel& pop,
                                              const AggregationConfig& config,
                                              const std::vector<int>& n_grid, int replications,
                                              const std::vector<double>& x_grid,
                                              const std::vector<Method>& methods,
                                              const SolverConfig& solver, std::uint64_t seed,
                                              int threads = 1);

// Rate comparison on the near-tie generator: the population is regenerated per
// n with the gap calibrated to that n, and log-log slopes of the mean excess
// over the best aggregate are fitted per method.
ExperimentReport rate_comparison(const LossModel& loss, GeneratorSpec base,
                                 const AggregationConfig& config, const std::vector<int>& n_grid,
                                 int replications, const std::vector<Method>& methods,
                                 const SolverConfig& solver, std::uint64_t seed, int threads = 1);

}  // namespace qagg
