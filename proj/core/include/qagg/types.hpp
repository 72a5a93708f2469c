#pragma once

#include <Eigen/Dense>

#include <optional>

namespace qagg {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

// Tolerance for "weights sum to one" checks.
inline constexpr double kSimplexTol = 1e-12;

// Relative slack when checking |value| <= bound; absorbs the round-off of
// convex combinations of in-range values without letting real violations through.
inline constexpr double kBoundSlack = 1e-9;

bool is_simplex_point(const Vector& theta, double tol = kSimplexTol);
void validate_simplex(const Vector& theta, double tol = kSimplexTol);
void validate_prior(const Vector& pi, double tol = kSimplexTol);
Vector uniform_weights(Index m);
Vector simplex_vertex(Index m, Index j);

bool within_bound(double value, double bound);
void validate_bounded(const Matrix& values, double bound, const char* what);
void validate_bounded(const Vector& values, double bound, const char* what);

// Dictionary values on observed samples: rows are observations, columns are
// dictionary functions. Labels are the observed responses.
struct LabeledSample {
  Matrix predictions;  // n x M
  Vector labels;       // n

  Index size() const { return predictions.rows(); }
  Index dictionary_size() const { return predictions.cols(); }
};

void validate_sample(const LabeledSample& sample);

// Finite-support joint law of (X, Y): dictionary values on support atoms plus
// atom masses. Population risks and L2 inner products are exact sums over the
// support, so theory checks carry no quadrature error.
struct PopulationModel {
  Matrix predictions;    // S x M
  Vector labels;         // S
  Vector probabilities;  // S, nonnegative, sums to one

  Index support_size() const { return predictions.rows(); }
  Index dictionary_size() const { return predictions.cols(); }
};

void validate_population(const PopulationModel& pop);

struct AggregationConfig {
  double nu = 0.5;             // mixing parameter, in (0, 1)
  std::optional<double> beta;  // temperature; empty = derived from the loss constants
  Vector prior;                // empty = uniform

  Vector resolved_prior(Index m) const;
};

void validate_config(const AggregationConfig& config);

}  // namespace qagg
