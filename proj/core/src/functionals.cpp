#include "qagg/functionals.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace qagg {

double empirical_risk(const LossModel& loss, const Vector& labels, const Vector& values) {
  if (labels.size() != values.size())
    throw std::invalid_argument("empirical_risk: label/value length mismatch");
  if (labels.size() < 1) throw std::invalid_argument("empirical_risk: empty sample");
  double acc = 0.0;
  for (Index i = 0; i < labels.size(); ++i) acc += loss.value(labels[i], values[i]);
  return acc / static_cast<double>(labels.size());
}

double population_risk(const LossModel& loss, const PopulationModel& pop, const Vector& values) {
  if (values.size() != pop.support_size())
    throw std::invalid_argument("population_risk: value length does not match the support");
  double acc = 0.0;
  for (Index s = 0; s < values.size(); ++s)
    acc += pop.probabilities[s] * loss.value(pop.labels[s], values[s]);
  return acc;
}

Vector mixture(const Matrix& predictions, const Vector& theta) {
  if (predictions.cols() != theta.size())
    throw std::invalid_argument("mixture: weight length does not match the dictionary");
  return predictions * theta;
}

Vector column_risks(const LossModel& loss, const LabeledSample& sample) {
  validate_sample(sample);
  Vector risks(sample.dictionary_size());
  for (Index j = 0; j < risks.size(); ++j)
    risks[j] = empirical_risk(loss, sample.labels, sample.predictions.col(j));
  return risks;
}

Vector population_column_risks(const LossModel& loss, const PopulationModel& pop) {
  validate_population(pop);
  Vector risks(pop.dictionary_size());
  for (Index j = 0; j < risks.size(); ++j)
    risks[j] = population_risk(loss, pop, pop.predictions.col(j));
  return risks;
}

double q_functional(const LossModel& loss, const LabeledSample& sample, const Vector& theta,
                    double nu) {
  if (!(nu >= 0.0 && nu <= 1.0)) throw std::invalid_argument("q_functional: nu outside [0, 1]");
  validate_simplex(theta, 1e-9);
  const double hull_term = empirical_risk(loss, sample.labels, mixture(sample.predictions, theta));
  const Vector risks = column_risks(loss, sample);
  return (1.0 - nu) * hull_term + nu * risks.dot(theta);
}

double penalty(const Vector& theta, const Vector& prior) {
  validate_prior(prior);
  if (theta.size() != prior.size())
    throw std::invalid_argument("penalty: weight/prior length mismatch");
  double acc = 0.0;
  for (Index j = 0; j < theta.size(); ++j) acc -= theta[j] * std::log(prior[j]);
  return acc;
}

double objective_value(const LossModel& loss, const LabeledSample& sample,
                       const AggregationConfig& config, double beta, const Vector& theta) {
  const Vector prior = config.resolved_prior(sample.dictionary_size());
  return q_functional(loss, sample, theta, config.nu) +
         beta / static_cast<double>(sample.size()) * penalty(theta, prior);
}

Vector objective_gradient(const LossModel& loss, const LabeledSample& sample,
                          const AggregationConfig& config, double beta, const Vector& theta) {
  validate_simplex(theta, 1e-9);
  const Vector prior = config.resolved_prior(sample.dictionary_size());
  QObjective objective(loss, sample, config.nu, beta, prior);
  return objective.gradient(theta);
}

Matrix population_gram(const PopulationModel& pop) {
  validate_population(pop);
  Matrix gram = pop.predictions.transpose() * pop.probabilities.asDiagonal() * pop.predictions;
  return 0.5 * (gram + gram.transpose());  // exact symmetry for downstream checks
}

double variance_functional(const Vector& theta, const Matrix& gram) {
  if (gram.rows() != gram.cols()) throw std::invalid_argument("variance_functional: gram not square");
  if (!gram.isApprox(gram.transpose(), 1e-12))
    throw std::invalid_argument("variance_functional: gram not symmetric");
  if (theta.size() != gram.rows())
    throw std::invalid_argument("variance_functional: weight length mismatch");
  return theta.dot(gram.diagonal()) - theta.dot(gram * theta);
}

Matrix squared_distance_matrix(const Matrix& gram) {
  if (gram.rows() != gram.cols())
    throw std::invalid_argument("squared_distance_matrix: gram not square");
  const Index m = gram.rows();
  Matrix h(m, m);
  for (Index j = 0; j < m; ++j) {
    h(j, j) = 0.0;
    for (Index k = j + 1; k < m; ++k) {
      const double d = gram(j, j) + gram(k, k) - 2.0 * gram(j, k);
      h(j, k) = d;
      h(k, j) = d;
    }
  }
  return h;
}

double mixture_sq_distance(const Matrix& gram, const Vector& theta, const Vector& eta) {
  const Vector diff = theta - eta;
  return diff.dot(gram * diff);
}

QObjective::QObjective(LossModel loss, LabeledSample sample, double nu, double beta, Vector prior)
    : loss_(std::move(loss)), sample_(std::move(sample)), nu_(nu) {
  validate_sample(sample_);
  validate_bounded(sample_.predictions, loss_.bound(), "predictions");
  for (Index i = 0; i < sample_.labels.size(); ++i) loss_.check_label(sample_.labels[i]);
  if (!(nu_ >= 0.0 && nu_ <= 1.0)) throw std::invalid_argument("QObjective: nu outside [0, 1]");
  if (beta < 0.0) throw std::invalid_argument("QObjective: beta must be nonnegative");
  validate_prior(prior);
  if (prior.size() != sample_.dictionary_size())
    throw std::invalid_argument("QObjective: prior length mismatch");

  column_risks_ = column_risks(loss_, sample_);
  penalty_gradient_ = Vector(prior.size());
  const double scale = beta / static_cast<double>(sample_.size());
  for (Index j = 0; j < prior.size(); ++j) penalty_gradient_[j] = -scale * std::log(prior[j]);
}

double QObjective::value(const Vector& theta) const {
  const Vector fitted = sample_.predictions * theta;
  double hull = 0.0;
  for (Index i = 0; i < fitted.size(); ++i)
    hull += loss_.value(sample_.labels[i], fitted[i]);
  hull /= static_cast<double>(fitted.size());
  return (1.0 - nu_) * hull + nu_ * column_risks_.dot(theta) + penalty_gradient_.dot(theta);
}

Vector QObjective::gradient(const Vector& theta) const {
  const Vector fitted = sample_.predictions * theta;
  Vector slopes(fitted.size());
  for (Index i = 0; i < fitted.size(); ++i)
    slopes[i] = loss_.derivative(sample_.labels[i], fitted[i]);
  const double inv_n = 1.0 / static_cast<double>(fitted.size());
  return (1.0 - nu_) * inv_n * (sample_.predictions.transpose() * slopes) +
         nu_ * column_risks_ + penalty_gradient_;
}

double QObjective::lipschitz_estimate() const {
  const double hull = (1.0 - nu_) * loss_.lipschitz() * loss_.bound();
  const double linear = nu_ * column_risks_.maxCoeff();
  const double pen = penalty_gradient_.size() ? penalty_gradient_.maxCoeff() : 0.0;
  return hull + linear + pen;
}

OracleObjective::OracleObjective(LossModel loss, PopulationModel pop, double nu, double beta,
                                 Vector prior, double mu, int n)
    : loss_(std::move(loss)), pop_(std::move(pop)), nu_(nu), mu_(mu) {
  validate_population(pop_);
  validate_bounded(pop_.predictions, loss_.bound(), "support predictions");
  for (Index s = 0; s < pop_.labels.size(); ++s) loss_.check_label(pop_.labels[s]);
  if (!(nu_ >= 0.0 && nu_ <= 1.0)) throw std::invalid_argument("OracleObjective: nu outside [0, 1]");
  if (mu_ < 0.0) throw std::invalid_argument("OracleObjective: mu must be nonnegative");
  if (beta < 0.0) throw std::invalid_argument("OracleObjective: beta must be nonnegative");
  if (n < 1) throw std::invalid_argument("OracleObjective: n must be positive");
  validate_prior(prior);
  if (prior.size() != pop_.dictionary_size())
    throw std::invalid_argument("OracleObjective: prior length mismatch");

  gram_ = population_gram(pop_);
  gram_diagonal_ = gram_.diagonal();
  column_risks_ = population_column_risks(loss_, pop_);
  penalty_gradient_ = Vector(prior.size());
  const double scale = beta / static_cast<double>(n);
  for (Index j = 0; j < prior.size(); ++j) penalty_gradient_[j] = -scale * std::log(prior[j]);
}

double OracleObjective::value(const Vector& theta) const {
  const Vector fitted = pop_.predictions * theta;
  double hull = 0.0;
  for (Index s = 0; s < fitted.size(); ++s)
    hull += pop_.probabilities[s] * loss_.value(pop_.labels[s], fitted[s]);
  const double spread = theta.dot(gram_diagonal_) - theta.dot(gram_ * theta);
  return (1.0 - nu_) * hull + nu_ * column_risks_.dot(theta) + mu_ * spread +
         penalty_gradient_.dot(theta);
}

Vector OracleObjective::gradient(const Vector& theta) const {
  const Vector fitted = pop_.predictions * theta;
  Vector weighted_slopes(fitted.size());
  for (Index s = 0; s < fitted.size(); ++s)
    weighted_slopes[s] = pop_.probabilities[s] * loss_.derivative(pop_.labels[s], fitted[s]);
  return (1.0 - nu_) * (pop_.predictions.transpose() * weighted_slopes) + nu_ * column_risks_ +
         mu_ * (gram_diagonal_ - 2.0 * (gram_ * theta)) + penalty_gradient_;
}

double OracleObjective::lipschitz_estimate() const {
  const double hull = (1.0 - nu_) * loss_.lipschitz() * loss_.bound();
  const double linear = nu_ * column_risks_.maxCoeff();
  const double spread = mu_ * 3.0 * gram_diagonal_.maxCoeff();
  const double pen = penalty_gradient_.size() ? penalty_gradient_.maxCoeff() : 0.0;
  return hull + linear + spread + pen;
}

}  // namespace qagg
