#include "qagg/loss.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qagg {

namespace {

double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

// log(1 + e^x) without overflow.
double softplus(double x) {
  if (x > 0.0) return x + std::log1p(std::exp(-x));
  return std::log1p(std::exp(x));
}

}  // namespace

LossConstants loss_constants(LossKind kind, double bound) {
  if (!(bound > 0.0)) throw std::domain_error("loss_constants: bound must be positive");
  switch (kind) {
    case LossKind::squared:
      // sup |2(a - y)| = 4b over the box; curvature is 2 everywhere.
      return {4.0 * bound, 2.0};
    case LossKind::logistic: {
      // |d/da log(1 + e^{-ya})| = sigmoid(-ya) <= 1; the curvature
      // sigmoid(a)(1 - sigmoid(a)) is smallest at |a| = b.
      const double sb = sigmoid(bound);
      return {1.0, sb * (1.0 - sb)};
    }
    case LossKind::custom:
      break;
  }
  throw std::invalid_argument("loss_constants: constants for custom losses are user-supplied");
}

LossModel LossModel::squared(double bound) {
  if (!(bound > 0.0)) throw std::domain_error("squared loss: bound must be positive");
  LossModel loss;
  loss.kind_ = LossKind::squared;
  loss.bound_ = bound;
  const LossConstants c = loss_constants(LossKind::squared, bound);
  loss.lipschitz_ = c.lipschitz;
  loss.strong_convexity_ = c.strong_convexity;
  return loss;
}

LossModel LossModel::logistic(double bound) {
  if (!(bound >= 1.0)) throw std::domain_error("logistic loss: bound must be at least 1");
  LossModel loss;
  loss.kind_ = LossKind::logistic;
  loss.bound_ = bound;
  const LossConstants c = loss_constants(LossKind::logistic, bound);
  loss.lipschitz_ = c.lipschitz;
  loss.strong_convexity_ = c.strong_convexity;
  return loss;
}

LossModel LossModel::custom(double bound, double lipschitz, double strong_convexity, Fn value,
                            Fn derivative) {
  if (!(bound > 0.0) || !(lipschitz > 0.0) || !(strong_convexity > 0.0))
    throw std::domain_error("custom loss: bound and constants must be positive");
  if (!value || !derivative)
    throw std::invalid_argument("custom loss: value and derivative callbacks are required");
  LossModel loss;
  loss.kind_ = LossKind::custom;
  loss.bound_ = bound;
  loss.lipschitz_ = lipschitz;
  loss.strong_convexity_ = strong_convexity;
  loss.value_fn_ = std::move(value);
  loss.derivative_fn_ = std::move(derivative);
  return loss;
}

void LossModel::check_label(double label) const {
  if (!within_bound(label, bound_)) {
    std::ostringstream msg;
    msg << "label " << label << " outside [-" << bound_ << ", " << bound_ << "]";
    throw std::domain_error(msg.str());
  }
  if (kind_ == LossKind::logistic && label != 1.0 && label != -1.0) {
    std::ostringstream msg;
    msg << "logistic loss requires labels in {-1, +1}, got " << label;
    throw std::domain_error(msg.str());
  }
}

void LossModel::check_prediction(double prediction) const {
  if (!within_bound(prediction, bound_)) {
    std::ostringstream msg;
    msg << "prediction " << prediction << " outside [-" << bound_ << ", " << bound_ << "]";
    throw std::domain_error(msg.str());
  }
}

LossEval LossModel::eval(double label, double prediction) const {
  check_label(label);
  check_prediction(prediction);
  switch (kind_) {
    case LossKind::squared: {
      const double residual = label - prediction;
      return {residual * residual, -2.0 * residual};
    }
    case LossKind::logistic: {
      const double margin = label * prediction;
      return {softplus(-margin), -label * sigmoid(-margin)};
    }
    case LossKind::custom:
      return {value_fn_(label, prediction), derivative_fn_(label, prediction)};
  }
  throw std::logic_error("unreachable loss kind");
}

double LossModel::value(double label, double prediction) const {
  return eval(label, prediction).value;
}

double LossModel::derivative(double label, double prediction) const {
  return eval(label, prediction).derivative;
}

LossModel make_loss(const std::string& name, double bound) {
  if (name == "squared") return LossModel::squared(bound);
  if (name == "logistic") return LossModel::logistic(bound);
  throw std::invalid_argument("unknown loss '" + name + "' (expected squared or logistic)");
}

}  // namespace qagg
