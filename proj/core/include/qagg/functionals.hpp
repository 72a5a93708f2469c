#pragma once

#include "qagg/loss.hpp"
#include "qagg/types.hpp"

#include <memory>

namespace qagg {

// Empirical risk (1/n) sum_i loss(y_i, f_i) of one function given by its values.
double empirical_risk(const LossModel& loss, const Vector& labels, const Vector& values);

// Exact population risk sum_s p_s loss(y_s, f_s) over the finite support.
double population_risk(const LossModel& loss, const PopulationModel& pop, const Vector& values);

// predictions * theta; the aggregate's values.
Vector mixture(const Matrix& predictions, const Vector& theta);

// Empirical risk of every dictionary column.
Vector column_risks(const LossModel& loss, const LabeledSample& sample);
Vector population_column_risks(const LossModel& loss, const PopulationModel& pop);

// (1 - nu) R_n(f_theta) + nu sum_j theta_j R_n(f_j). Endpoints nu in {0, 1} allowed.
double q_functional(const LossModel& loss, const LabeledSample& sample, const Vector& theta,
                    double nu);

// K(theta) = sum_j theta_j log(1 / pi_j); linear in theta.
double penalty(const Vector& theta, const Vector& prior);

// Q(theta) + (beta / n) K(theta).
double objective_value(const LossModel& loss, const LabeledSample& sample,
                       const AggregationConfig& config, double beta, const Vector& theta);

// Gradient of the penalized objective at theta (a subgradient for kinked losses).
Vector objective_gradient(const LossModel& loss, const LabeledSample& sample,
                          const AggregationConfig& config, double beta, const Vector& theta);

// Gram matrix G_jk = <f_j, f_k> under the support law; exact.
Matrix population_gram(const PopulationModel& pop);

// V(theta) = sum_j theta_j ||f_j - f_theta||^2 = sum_j theta_j G_jj - theta' G theta.
double variance_functional(const Vector& theta, const Matrix& gram);

// H_jk = ||f_j - f_k||^2 = G_jj + G_kk - 2 G_jk; symmetric, zero diagonal.
Matrix squared_distance_matrix(const Matrix& gram);

// ||f_theta - f_eta||^2 = (theta - eta)' G (theta - eta).
double mixture_sq_distance(const Matrix& gram, const Vector& theta, const Vector& eta);

// Penalized Q objective over a fixed sample with the per-column risks and the
// penalty gradient precomputed; this is what the solvers consume.
class QObjective {
 public:
  QObjective(LossModel loss, LabeledSample sample, double nu, double beta, Vector prior);

  double value(const Vector& theta) const;
  Vector gradient(const Vector& theta) const;

  Index dictionary_size() const { return sample_.dictionary_size(); }
  const Vector& column_risks() const { return column_risks_; }
  // Sup-norm bound on the gradient over the simplex; mesh certificates use it.
  double lipschitz_estimate() const;

 private:
  LossModel loss_;
  LabeledSample sample_;
  double nu_;
  Vector column_risks_;
  Vector penalty_gradient_;  // (beta / n) log(1 / pi_j)
};

// Population counterpart with the V-penalty of the oracle weights:
// (1-nu) R(f_theta) + nu sum_j theta_j R(f_j) + mu V(theta) + (beta / n) K(theta).
class OracleObjective {
 public:
  OracleObjective(LossModel loss, PopulationModel pop, double nu, double beta, Vector prior,
                  double mu, int n);

  double value(const Vector& theta) const;
  Vector gradient(const Vector& theta) const;

  Index dictionary_size() const { return pop_.dictionary_size(); }
  const Matrix& gram() const { return gram_; }
  const Vector& column_risks() const { return column_risks_; }
  double lipschitz_estimate() const;

 private:
  LossModel loss_;
  PopulationModel pop_;
  double nu_;
  double mu_;
  Matrix gram_;
  Vector gram_diagonal_;
  Vector column_risks_;
  Vector penalty_gradient_;
};

}  // namespace qagg
