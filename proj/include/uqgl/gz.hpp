#pragma once

#include "uqgl/qnum.hpp"
#include "uqgl/types.hpp"

#include <vector>

namespace uqgl {

/// Shifted labels of a gl(2)+gl(1) pattern (row offsets -1, -2, -1).
struct LShift {
  double l12;
  double l22;
  double l11;
  double l31;

  static LShift of(const GzPattern& p) {
    return {l_of(1, p.top.m12), l_of(2, p.top.m22), l_of(1, p.m11),
            l_of(3, p.m31())};
  }
};

/// All patterns of the even module with signature hw, ordered by m11
/// descending so the highest-weight vector is index 0.
/// Throws std::domain_error if hw is not dominant.
std::vector<GzPattern> enumerate_patterns(const EvenWeight& hw);

/// Position of the pattern with the given m11 in enumerate_patterns order.
inline int pattern_index(const EvenWeight& hw, int m11) { return hw.m12 - m11; }

/// Matrix of one even generator (E11, E22, E33, E12, E21) on the pattern
/// basis of hw. Entry (r, c) is the coefficient of basis vector r in
/// g * (basis vector c). Throws std::domain_error for odd generators.
Matrix even_generator_matrix(Gen g, const EvenWeight& hw, const QContext& q);

/// Cartan eigenvalues on a single pattern: h1 for E11 - E22 and h2 for
/// E22 + E33 (the pattern basis diagonalises both).
double h1_eigenvalue(const GzPattern& p);
double h2_eigenvalue(const GzPattern& p);

struct LoweringReport {
  double max_deviation = 0.0;
  bool pass = false;
};

/// Rebuilds every pattern vector from the highest-weight one by applying the
/// normalized powers of the lowering generator,
///   (m) = ([m11-m22]! / ([m12-m22]! [m12-m11]!))^{1/2} E21^{m12-m11} (M),
/// and reports the worst deviation from the corresponding unit vector.
LoweringReport lowering_chain(const EvenWeight& hw, const QContext& q,
                              double tol = 1e-9);

}  // namespace uqgl
