#pragma once

#include "uqgl/gz.hpp"
#include "uqgl/qnum.hpp"
#include "uqgl/types.hpp"

#include <string>
#include <vector>

namespace uqgl {

/// Exponent pair of the odd lowering monomial E31^t1 E32^t2 labelling one of
/// the four theta sectors of the induced module.
struct ThetaVector {
  int theta1 = 0;
  int theta2 = 0;

  int parity() const { return (theta1 + theta2) % 2; }
  /// Sector position in the fixed lexicographic order
  /// (0,0), (0,1), (1,0), (1,1).
  int sector() const { return 2 * theta1 + theta2; }
  friend bool operator==(const ThetaVector&, const ThetaVector&) = default;
};

inline constexpr std::array<std::pair<int, int>, 4> theta_order = {
    {{0, 0}, {0, 1}, {1, 0}, {1, 1}}};

/// Even-subalgebra signature of the T-space component containing the theta
/// monomial: 1 spans [0,0;0], {E31, E32} span [0,-1;1], E31E32 spans [-1,-1;2].
EvenWeight theta_sector_signature(const ThetaVector& t);

/// Which irreducible T-component (0, 1 or 2) the monomial belongs to.
int theta_sector_component(const ThetaVector& t);

/// The pattern of the T-space GZ realisation identified with the monomial,
/// together with the relative sign (-1)^{theta1 (theta2 + 1)}.
GzPattern theta_sector_pattern(const ThetaVector& t);
int theta_sector_sign(const ThetaVector& t);

struct InducedBasisVector {
  ThetaVector theta;
  GzPattern pattern;  // pattern of the inducing even module V^q
};

/// Even part of the inducing module: [m13, m23, m33] read as even signature.
inline EvenWeight even_part(const Weight& hw) {
  return {hw.m13, hw.m23, hw.m33};
}

inline int induced_dim(const Weight& hw) { return 4 * (hw.m13 - hw.m23 + 1); }

/// Basis of the induced module: theta sectors in lexicographic order, m11
/// descending inside each sector. Throws std::domain_error if hw is not
/// dominant.
std::vector<InducedBasisVector> enumerate_induced_basis(const Weight& hw);

/// Index of |theta; pattern(m11)> in enumerate_induced_basis order.
int induced_index(const Weight& hw, const ThetaVector& t, int m11);

/// Matrix of a Chevalley generator on the induced basis. The even generators
/// act through their coproduct legs (inner pattern action plus the theta-
/// sector action); the odd ones are pushed through the theta monomial, which
/// contributes q-power twists, sector flips, and Cartan bracket terms.
/// Throws std::domain_error for the composite generators E13/E31 (those are
/// products of the Chevalley matrices).
Matrix induced_action(Gen g, const Weight& hw, const QContext& q);

struct PushingCheck {
  std::string what;
  double deviation = 0.0;
};

struct PushingReport {
  double max_deviation = 0.0;
  bool pass = false;
  std::vector<PushingCheck> failures;  // checks above tolerance
};

/// Verifies the commutation-pushing identities (each generator moved through
/// every theta monomial) as matrix identities on the induced representation:
/// the left side is a product of built matrices, the right side is assembled
/// term by term.
PushingReport verify_pushing_relations(const Weight& hw, const QContext& q,
                                       double tol = 1e-9);

}  // namespace uqgl
