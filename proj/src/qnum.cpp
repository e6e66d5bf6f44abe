#include "uqgl/qnum.hpp"

#include <cmath>
#include <stdexcept>

namespace uqgl {

QContext::QContext(double q, QMode mode) : q_(q), mode_(mode) {
  if (mode_ == QMode::Generic && (!(q_ > 0.0) || q_ == 1.0)) {
    throw std::invalid_argument(
        "deformation parameter must satisfy q > 0, q != 1 in generic mode");
  }
}

double q_number(double x, const QContext& q) {
  if (q.classical()) return x;
  const double v = q.q();
  return (std::pow(v, x) - std::pow(v, -x)) / (v - 1.0 / v);
}

double q_factorial(int n, const QContext& q) {
  if (n < 0) throw std::domain_error("q-factorial of a negative integer");
  double acc = 1.0;
  for (int k = 1; k <= n; ++k) acc *= q_number(k, q);
  return acc;
}

double q_power(double x, const QContext& q) {
  if (q.classical()) return 1.0;
  return std::pow(q.q(), x);
}

}  // namespace uqgl
