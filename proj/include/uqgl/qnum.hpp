#pragma once

namespace uqgl {

enum class QMode { Generic, ClassicalLimit };

/// Deformation parameter. Generic mode requires q > 0 and q != 1 (unit-circle
/// and root-of-unity values are rejected at construction). Classical-limit
/// mode replaces every bracket [x] by x and every power q^x by 1, so the same
/// formulas evaluate the underlying non-deformed superalgebra.
class QContext {
 public:
  explicit QContext(double q, QMode mode = QMode::Generic);

  double q() const { return q_; }
  QMode mode() const { return mode_; }
  bool classical() const { return mode_ == QMode::ClassicalLimit; }

  friend bool operator==(const QContext&, const QContext&) = default;

 private:
  double q_;
  QMode mode_;
};

/// Symmetric q-number [x] = (q^x - q^-x) / (q - q^-1). Odd in x, positive for
/// x > 0, and [x] -> x as q -> 1.
double q_number(double x, const QContext& q);

/// [n]! = [1][2]...[n] with [0]! = 1. Throws std::domain_error for n < 0.
double q_factorial(int n, const QContext& q);

/// q^x, evaluated as exactly 1 in classical-limit mode.
double q_power(double x, const QContext& q);

}  // namespace uqgl
