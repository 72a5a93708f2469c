#pragma once

#include "qagg/loss.hpp"

#include <array>
#include <string>
#include <vector>

namespace qagg {

// Safety factor applied on top of the temperature lower bound when beta is
// derived automatically; the bound itself is an open condition.
inline constexpr double kBetaSafety = 1.01;

struct ConditionCheck {
  std::string name;
  bool satisfied = false;
  double slack = 0.0;  // bound minus value; nonnegative means satisfied
};

struct CalibrationReport {
  double mu = 0.0;
  std::array<double, 3> beta_terms{};  // the three bracketed temperature terms
  double beta_min = 0.0;               // max of beta_terms
  double beta = 0.0;                   // temperature actually used
  double s = 0.0;                      // internal scale, 3n / beta
  std::vector<ConditionCheck> conditions;

  bool all_satisfied() const;
};

// min(nu, 1 - nu) * C_l / 10.
double default_mu(double nu, double strong_convexity);

// The three temperature terms
//   12 C_b^2 (1-nu)^2 / mu,  6 sqrt(3) b C_b (1-nu),  3 C_b nu (nu C_b + 4 mu b) / (2 mu)
// and their maximum.
CalibrationReport beta_lower_bound(double nu, double lipschitz, double strong_convexity,
                                   double bound, double mu);

// Evaluates the named preconditions; a failing condition is a report entry,
// not an error:
//   mu-bound   10 mu <= min(nu, 1-nu) C_l
//   beta-floor beta >= 3 n / s
//   s-bound-1  s <= mu n / [2 C_b (1-nu)]^2
//   s-bound-2  s <  n / [2 sqrt(3) b C_b (1-nu)]
//   s-bound-3  s <  2 mu n / [C_b nu (nu C_b + 4 mu b)]
CalibrationReport validate_conditions(double n, double s, double mu, double beta, double nu,
                                      double lipschitz, double strong_convexity, double bound);

// beta_min * kBetaSafety for the given loss.
double auto_beta(const LossModel& loss, double nu);

// Resolved temperature: the configured one, or auto_beta when absent.
double resolve_beta(const LossModel& loss, const AggregationConfig& config);

// Full report: mu, temperature terms, auto (or supplied) beta, s = 3n/beta,
// and all conditions evaluated at that point.
CalibrationReport calibrate(const LossModel& loss, double nu, double n,
                            std::optional<double> beta = std::nullopt);

}  // namespace qagg
