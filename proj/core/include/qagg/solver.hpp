#pragma once

#include "qagg/functionals.hpp"
#include "qagg/types.hpp"

#include <functional>

namespace qagg {

enum class SolverMethod { frank_wolfe, mirror_descent, grid };

struct SolverConfig {
  SolverMethod method = SolverMethod::frank_wolfe;
  double gap_tolerance = 1e-8;
  int max_iterations = 100000;
  int grid_resolution = 200;  // lattice points per edge for the grid oracle
};

struct SolverResult {
  Vector theta;
  double objective_value = 0.0;
  // Frank-Wolfe duality gap of the returned point, or the grid mesh bound.
  double certificate = 0.0;
  int iterations = 0;
  bool converged = false;
};

struct ConvexProgram {
  std::function<double(const Vector&)> value;
  std::function<Vector(const Vector&)> gradient;
  double lipschitz_estimate = 1.0;
};

ConvexProgram make_program(std::shared_ptr<const QObjective> objective);
ConvexProgram make_program(std::shared_ptr<const OracleObjective> objective);

// Conditional gradient over the simplex. The linear minimization oracle is the
// minimal-gradient coordinate, ties broken by lowest index; steps come from a
// backtracking line search on the objective with 2/(t+2) as fallback.
// Terminates when the duality gap max_j grad.(theta - e_j) drops below
// gap_tolerance, else reports converged = false at max_iterations.
SolverResult frank_wolfe_minimize(const ConvexProgram& program, Index m,
                                  const SolverConfig& config, const Vector* start = nullptr);

// Entropic mirror descent (multiplicative updates) from the uniform point,
// step sqrt(2 log M / t) / G_inf with G_inf a running bound on the gradient
// sup-norm. Returns the best iterate by objective value; the certificate is
// the Frank-Wolfe gap of that point.
SolverResult mirror_descent_minimize(const ConvexProgram& program, Index m,
                                     const SolverConfig& config);

// Brute-force oracle: evaluates every lattice point {k / G} of the simplex.
// First-found wins ties; certificate = lipschitz_estimate * M / G.
SolverResult grid_search_minimize(const std::function<double(const Vector&)>& value_fn, Index m,
                                  const SolverConfig& config, double lipschitz_estimate);

SolverResult minimize(const ConvexProgram& program, Index m, const SolverConfig& config,
                      const Vector* start = nullptr);

// Oracle weights: minimizes the population objective
// (1-nu) R(f_theta) + nu sum_j theta_j R(f_j) + mu V(theta) + (beta/n) K(theta).
// Requires mu <= (1 - nu) C_l / 2 so the program stays convex.
SolverResult solve_oracle_weights(const LossModel& loss, const PopulationModel& pop,
                                  const AggregationConfig& config, double mu, int n,
                                  const SolverConfig& solver);

}  // namespace qagg
