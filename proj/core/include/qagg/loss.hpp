#pragma once

#include "qagg/types.hpp"

#include <functional>
#include <string>

namespace qagg {

enum class LossKind { squared, logistic, custom };

struct LossEval {
  double value;
  double derivative;  // element of the subdifferential in the prediction argument
};

struct LossConstants {
  double lipschitz;         // C_b: Lipschitz constant in the prediction on [-b, b]
  double strong_convexity;  // C_l: strong-convexity modulus on [-b, b]
};

// Tight constants for the built-in losses on [-b, b]. Throws for custom.
LossConstants loss_constants(LossKind kind, double bound);

// A loss with amplitude bound b and certified constants on [-b, b].
// Out-of-range labels or predictions are hard errors, never clamped:
// the downstream guarantees are boundedness assumptions.
class LossModel {
 public:
  using Fn = std::function<double(double, double)>;

  static LossModel squared(double bound);
  // Labels must be exactly -1 or +1; bound must be >= 1 so labels stay in range.
  static LossModel logistic(double bound);
  // Constants are caller-supplied; larger Lipschitz / smaller strong convexity
  // than the truth is sound, the converse is not.
  static LossModel custom(double bound, double lipschitz, double strong_convexity,
                          Fn value, Fn derivative);

  LossKind kind() const { return kind_; }
  double bound() const { return bound_; }
  double lipschitz() const { return lipschitz_; }
  double strong_convexity() const { return strong_convexity_; }

  LossEval eval(double label, double prediction) const;
  double value(double label, double prediction) const;
  double derivative(double label, double prediction) const;

  void check_label(double label) const;
  void check_prediction(double prediction) const;

 private:
  LossModel() = default;

  LossKind kind_ = LossKind::squared;
  double bound_ = 1.0;
  double lipschitz_ = 4.0;
  double strong_convexity_ = 2.0;
  Fn value_fn_;
  Fn derivative_fn_;
};

// "squared" or "logistic".
LossModel make_loss(const std::string& name, double bound);

}  // namespace qagg
