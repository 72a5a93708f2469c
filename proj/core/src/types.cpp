#include "qagg/types.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qagg {

bool is_simplex_point(const Vector& theta, double tol) {
  if (theta.size() < 1) return false;
  double sum = 0.0;
  for (Index j = 0; j < theta.size(); ++j) {
    if (!std::isfinite(theta[j]) || theta[j] < -tol) return false;
    sum += theta[j];
  }
  return std::abs(sum - 1.0) <= tol;
}

void validate_simplex(const Vector& theta, double tol) {
  if (!is_simplex_point(theta, tol)) {
    std::ostringstream msg;
    msg << "weights are not a simplex point (size " << theta.size() << ", sum "
        << (theta.size() ? theta.sum() : 0.0) << ")";
    throw std::invalid_argument(msg.str());
  }
}

void validate_prior(const Vector& pi, double tol) {
  if (pi.size() < 1) throw std::invalid_argument("prior is empty");
  double sum = 0.0;
  for (Index j = 0; j < pi.size(); ++j) {
    if (!std::isfinite(pi[j]) || pi[j] <= 0.0)
      throw std::invalid_argument("prior weights must be strictly positive");
    sum += pi[j];
  }
  if (std::abs(sum - 1.0) > tol) throw std::invalid_argument("prior weights must sum to one");
}

Vector uniform_weights(Index m) {
  if (m < 1) throw std::invalid_argument("uniform_weights: empty dictionary");
  return Vector::Constant(m, 1.0 / static_cast<double>(m));
}

Vector simplex_vertex(Index m, Index j) {
  if (j < 0 || j >= m) throw std::invalid_argument("simplex_vertex: index out of range");
  Vector e = Vector::Zero(m);
  e[j] = 1.0;
  return e;
}

bool within_bound(double value, double bound) {
  return std::isfinite(value) && std::abs(value) <= bound + kBoundSlack * std::max(1.0, bound);
}

namespace {

[[noreturn]] void bound_failure(const char* what, Index i, Index j, double value, double bound) {
  std::ostringstream msg;
  msg << what << ": entry (" << i << ", " << j << ") = " << value << " outside [-" << bound << ", "
      << bound << "]";
  throw std::domain_error(msg.str());
}

}  // namespace

void validate_bounded(const Matrix& values, double bound, const char* what) {
  for (Index i = 0; i < values.rows(); ++i)
    for (Index j = 0; j < values.cols(); ++j)
      if (!within_bound(values(i, j), bound)) bound_failure(what, i, j, values(i, j), bound);
}

void validate_bounded(const Vector& values, double bound, const char* what) {
  for (Index i = 0; i < values.size(); ++i)
    if (!within_bound(values[i], bound)) bound_failure(what, i, 0, values[i], bound);
}

void validate_sample(const LabeledSample& sample) {
  if (sample.predictions.rows() < 1 || sample.predictions.cols() < 1)
    throw std::invalid_argument("sample is empty");
  if (sample.labels.size() != sample.predictions.rows())
    throw std::invalid_argument("label count does not match prediction rows");
}

void validate_population(const PopulationModel& pop) {
  if (pop.predictions.rows() < 1 || pop.predictions.cols() < 1)
    throw std::invalid_argument("population support is empty");
  if (pop.labels.size() != pop.predictions.rows())
    throw std::invalid_argument("population labels do not match support size");
  if (pop.probabilities.size() != pop.predictions.rows())
    throw std::invalid_argument("population probabilities do not match support size");
  double sum = 0.0;
  for (Index s = 0; s < pop.probabilities.size(); ++s) {
    if (!std::isfinite(pop.probabilities[s]) || pop.probabilities[s] < 0.0)
      throw std::invalid_argument("population probabilities must be nonnegative");
    sum += pop.probabilities[s];
  }
  if (std::abs(sum - 1.0) > kSimplexTol)
    throw std::invalid_argument("population probabilities must sum to one");
}

Vector AggregationConfig::resolved_prior(Index m) const {
  if (prior.size() == 0) return uniform_weights(m);
  if (prior.size() != m)
    throw std::invalid_argument("prior size does not match the dictionary size");
  validate_prior(prior);
  return prior;
}

void validate_config(const AggregationConfig& config) {
  if (!(config.nu > 0.0 && config.nu < 1.0))
    throw std::invalid_argument("nu must lie strictly between 0 and 1");
  if (config.beta && !(*config.beta > 0.0))
    throw std::invalid_argument("beta must be positive");
  if (config.prior.size() > 0) validate_prior(config.prior);
}

}  // namespace qagg
