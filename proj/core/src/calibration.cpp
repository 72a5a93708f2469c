#include "qagg/calibration.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qagg {

namespace {

// Non-strict comparison with a relative epsilon so that the canonical choice
// (s = 3n/beta, mu at its cap) passes despite rounding of the exact equalities.
bool leq_tol(double value, double bound) {
  const double slack = 1e-12 * std::max({1.0, std::abs(value), std::abs(bound)});
  return value <= bound + slack;
}

}  // namespace

bool CalibrationReport::all_satisfied() const {
  return std::all_of(conditions.begin(), conditions.end(),
                     [](const ConditionCheck& c) { return c.satisfied; });
}

double default_mu(double nu, double strong_convexity) {
  if (!(nu > 0.0 && nu < 1.0)) throw std::domain_error("default_mu: nu outside (0, 1)");
  if (!(strong_convexity > 0.0))
    throw std::domain_error("default_mu: strong convexity must be positive");
  return std::min(nu, 1.0 - nu) * strong_convexity / 10.0;
}

CalibrationReport beta_lower_bound(double nu, double lipschitz, double strong_convexity,
                                   double bound, double mu) {
  if (!(nu > 0.0 && nu < 1.0)) throw std::domain_error("beta_lower_bound: nu outside (0, 1)");
  if (!(lipschitz > 0.0 && strong_convexity > 0.0 && bound > 0.0))
    throw std::domain_error("beta_lower_bound: constants must be positive");
  if (!(mu > 0.0)) throw std::domain_error("beta_lower_bound: mu must be positive");

  CalibrationReport report;
  report.mu = mu;
  const double cb = lipschitz;
  report.beta_terms[0] = 12.0 * cb * cb * (1.0 - nu) * (1.0 - nu) / mu;
  report.beta_terms[1] = 6.0 * std::numbers::sqrt3 * bound * cb * (1.0 - nu);
  report.beta_terms[2] = 3.0 * cb * nu * (nu * cb + 4.0 * mu * bound) / (2.0 * mu);
  report.beta_min =
      std::max({report.beta_terms[0], report.beta_terms[1], report.beta_terms[2]});
  report.beta = report.beta_min * kBetaSafety;
  (void)strong_convexity;  // enters through mu; kept in the signature for context
  return report;
}

CalibrationReport validate_conditions(double n, double s, double mu, double beta, double nu,
                                      double lipschitz, double strong_convexity, double bound) {
  if (!(n > 0.0 && s > 0.0 && mu > 0.0 && beta > 0.0 && bound > 0.0))
    throw std::domain_error("validate_conditions: inputs must be positive");
  if (!(nu > 0.0 && nu < 1.0)) throw std::domain_error("validate_conditions: nu outside (0, 1)");

  const double cb = lipschitz;
  const double cl = strong_convexity;

  CalibrationReport report;
  report.mu = mu;
  report.beta = beta;
  report.s = s;

  auto add = [&report](const std::string& name, double value, double limit, bool strict) {
    ConditionCheck check;
    check.name = name;
    check.slack = limit - value;
    check.satisfied = strict ? value < limit : leq_tol(value, limit);
    report.conditions.push_back(std::move(check));
  };

  add("mu-bound", 10.0 * mu, std::min(nu, 1.0 - nu) * cl, false);
  add("beta-floor", 3.0 * n / s, beta, false);
  const double sym = 2.0 * cb * (1.0 - nu);
  add("s-bound-1", s, mu * n / (sym * sym), false);
  add("s-bound-2", s, n / (2.0 * std::numbers::sqrt3 * bound * cb * (1.0 - nu)), true);
  add("s-bound-3", s, 2.0 * mu * n / (cb * nu * (nu * cb + 4.0 * mu * bound)), true);
  return report;
}

double auto_beta(const LossModel& loss, double nu) {
  const double mu = default_mu(nu, loss.strong_convexity());
  return beta_lower_bound(nu, loss.lipschitz(), loss.strong_convexity(), loss.bound(), mu).beta;
}

double resolve_beta(const LossModel& loss, const AggregationConfig& config) {
  validate_config(config);
  return config.beta ? *config.beta : auto_beta(loss, config.nu);
}

CalibrationReport calibrate(const LossModel& loss, double nu, double n,
                            std::optional<double> beta) {
  const double mu = default_mu(nu, loss.strong_convexity());
  CalibrationReport report =
      beta_lower_bound(nu, loss.lipschitz(), loss.strong_convexity(), loss.bound(), mu);
  if (beta) report.beta = *beta;
  report.s = 3.0 * n / report.beta;
  CalibrationReport checks = validate_conditions(n, report.s, mu, report.beta, nu,
                                                 loss.lipschitz(), loss.strong_convexity(),
                                                 loss.bound());
  report.conditions = std::move(checks.conditions);
  return report;
}

}  // namespace qagg
