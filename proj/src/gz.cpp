#include "uqgl/gz.hpp"

#include <cmath>
#include <stdexcept>

namespace uqgl {

const char* to_string(Gen g) {
  switch (g) {
    case Gen::E11: return "E11";
    case Gen::E22: return "E22";
    case Gen::E33: return "E33";
    case Gen::E12: return "E12";
    case Gen::E21: return "E21";
    case Gen::E23: return "E23";
    case Gen::E32: return "E32";
    case Gen::E13: return "E13";
    case Gen::E31: return "E31";
  }
  return "?";
}

std::optional<Gen> parse_generator(std::string_view name) {
  for (Gen g : all_generators)
    if (name == to_string(g)) return g;
  return std::nullopt;
}

std::vector<GzPattern> enumerate_patterns(const EvenWeight& hw) {
  if (!hw.dominant())
    throw std::domain_error("even signature is not dominant (m12 < m22)");
  std::vector<GzPattern> out;
  out.reserve(hw.dim());
  for (int m11 = hw.m12; m11 >= hw.m22; --m11) out.push_back({hw, m11});
  return out;
}

double h1_eigenvalue(const GzPattern& p) {
  return 2.0 * p.m11 - p.top.m12 - p.top.m22;
}

double h2_eigenvalue(const GzPattern& p) {
  return p.top.m12 + p.top.m22 - p.m11 + p.m31();
}

namespace {

/// Raising coefficient: E12 sends m11 to m11 + 1 with
/// sqrt([l12 - l11][l11 - l22]).
double raising_coeff(const GzPattern& p, const QContext& q) {
  const auto l = LShift::of(p);
  return std::sqrt(q_number(l.l12 - l.l11, q) * q_number(l.l11 - l.l22, q));
}

/// Lowering coefficient: E21 sends m11 to m11 - 1 with
/// sqrt([l12 - l11 + 1][l11 - l22 - 1]).
double lowering_coeff(const GzPattern& p, const QContext& q) {
  const auto l = LShift::of(p);
  return std::sqrt(q_number(l.l12 - l.l11 + 1, q) *
                   q_number(l.l11 - l.l22 - 1, q));
}

}  // namespace

Matrix even_generator_matrix(Gen g, const EvenWeight& hw, const QContext& q) {
  const auto patterns = enumerate_patterns(hw);
  const int n = static_cast<int>(patterns.size());
  Matrix m = Matrix::Zero(n, n);
  for (int c = 0; c < n; ++c) {
    const GzPattern& p = patterns[c];
    switch (g) {
      case Gen::E11:
        m(c, c) = p.m11;
        break;
      case Gen::E22:
        m(c, c) = p.top.m12 + p.top.m22 - p.m11;
        break;
      case Gen::E33:
        m(c, c) = p.m31();
        break;
      case Gen::E12:
        if (p.m11 < hw.m12) m(c - 1, c) = raising_coeff(p, q);
        break;
      case Gen::E21:
        if (p.m11 > hw.m22) m(c + 1, c) = lowering_coeff(p, q);
        break;
      default:
        throw std::domain_error("not an even-subalgebra generator");
    }
  }
  return m;
}

LoweringReport lowering_chain(const EvenWeight& hw, const QContext& q,
                              double tol) {
  const Matrix e21 = even_generator_matrix(Gen::E21, hw, q);
  const int n = hw.dim();
  LoweringReport report;
  Vector v = Vector::Unit(n, 0);  // highest-weight vector
  for (int t = 0; t < n; ++t) {
    const int m11 = hw.m12 - t;
    const double pre = std::sqrt(q_factorial(m11 - hw.m22, q) /
                                 (q_factorial(hw.m12 - hw.m22, q) *
                                  q_factorial(hw.m12 - m11, q)));
    const Vector rebuilt = pre * v;
    const double dev = (rebuilt - Vector::Unit(n, t)).cwiseAbs().maxCoeff();
    report.max_deviation = std::max(report.max_deviation, dev);
    v = e21 * v;
  }
  report.pass = report.max_deviation < tol;
  return report;
}

}  // namespace uqgl
