#pragma once

#include "uqgl/rep.hpp"

#include <string>
#include <vector>

namespace uqgl {

/// One leg of a coproduct term: the identity, a generator, or a Cartan power
/// q^{c1*H1 + c2*H2}.
struct AlgebraLeg {
  enum class Kind { Identity, Generator, CartanPower } kind = Kind::Identity;
  Gen g = Gen::E11;
  double c1 = 0.0;
  double c2 = 0.0;

  int parity() const { return kind == Kind::Generator && is_odd(g); }

  static AlgebraLeg one() { return {}; }
  static AlgebraLeg gen(Gen g) { return {Kind::Generator, g, 0, 0}; }
  static AlgebraLeg qh(double c1, double c2) {
    return {Kind::CartanPower, Gen::E11, c1, c2};
  }
};

/// The two coproduct terms of a Chevalley generator:
///   D(Eii) = Eii x 1 + 1 x Eii,
///   D(E12) = E12 x q^{H1} + 1 x E12,   D(E21) = E21 x 1 + q^{-H1} x E21,
///   D(E23) = E23 x q^{H2} + 1 x E23,   D(E32) = E32 x 1 + q^{-H2} x E32.
/// Throws std::domain_error for the composite generators.
std::vector<std::pair<AlgebraLeg, AlgebraLeg>> coproduct_terms(Gen g);

Matrix evaluate_leg(const AlgebraLeg& leg, const Representation& rep);
/// The antipode of a leg as a matrix: S(1) = 1, S(q^{cH}) = q^{-cH}, and the
/// generator table S(Eii) = -Eii, S(E12) = -E12 q^{-H1}, S(E21) = -q^{H1} E21,
/// S(E23) = -E23 q^{-H2}, S(E32) = -q^{H2} E32.
Matrix evaluate_antipode_leg(const AlgebraLeg& leg, const Representation& rep);

/// Matrix of S(g) on a built representation. Chevalley generators only.
Matrix antipode_matrix(Gen g, const Representation& rep);

/// Quantum adjoint action ad_q(x)(y) = sum x_(1) y S(x_(2)) with the right
/// multiplication carrying the grading sign (-1)^{deg x_(2) deg y}.
/// y is an operator given as a matrix together with its Z2 degree.
Matrix adjoint_action(Gen x, const Matrix& y, int y_parity,
                      const Representation& rep);

struct AdjointReport {
  double max_deviation = 0.0;
  bool pass = false;
};

/// Checks the adjoint form of the composite generators,
///   E13 = ad_q(E12)(E23 q^{H2}) q^{H1-H2},   E31 = -ad_q(E21)(E32),
/// against the stored E13/E31 matrices.
AdjointReport adjoint_check(const Representation& rep, double tol = 1e-9);

/// Hopf axiom residuals evaluated on a representation (0 when the bundle is
/// consistent): m(S x id)D(g) = eps(g) = m(id x S)D(g), and the counit laws
/// (eps x id)D(g) = g = (id x eps)D(g), over all Chevalley generators.
double antipode_axiom_deviation(const Representation& rep);
double counit_axiom_deviation(const Representation& rep);

/// Coassociativity residual: generator matrices of (A x A) x A versus
/// A x (A x A), identical pair indexing.
double coassociativity_deviation(const Representation& rep);

/// Tensor product of two modules over the same q. The super convention
/// (x o y)(v o w) = (-1)^{deg y deg v} xv o yw twists the left factor by the
/// parity of the right coproduct leg. Throws std::domain_error on mismatched
/// deformation parameters.
Representation tensor_representation(const Representation& A,
                                     const Representation& B);

/// A module of the even subalgebra alone: the five even generator matrices
/// plus parity per basis vector.
struct EvenModule {
  QContext q{1.7};
  EvenWeight weight;  // signature (for irreducibles) or label sum (tensors)
  std::array<Matrix, 5> matrices;  // E11, E22, E33, E12, E21
  std::vector<std::string> labels;
  std::vector<int> parities;

  int dim() const { return static_cast<int>(matrices[0].rows()); }
  const Matrix& matrix(Gen g) const;
  Vector cartan_h1() const;
  Vector cartan_h2() const;
};

/// GZ realisation of the even module with the given signature.
EvenModule gz_module(const EvenWeight& hw, const QContext& q,
                     int base_parity = 0);

/// The irreducible T-components spanned by the odd lowering monomials, in the
/// theta basis: T0 = {1}, T1 = {|0,1>, |1,0>}, T2 = {|1,1>}.
EvenModule theta_sector_module(int component, const QContext& q);

/// Tensor product of even modules through the even coproduct legs.
EvenModule tensor_even(const EvenModule& A, const EvenModule& B);

/// One irreducible summand of a tensor decomposition.
struct CgSummand {
  EvenWeight signature;
  /// Unit-norm highest-weight vector in the tensor basis (annihilated by the
  /// raising generator, Cartan eigenvector); sign fixed by making its
  /// largest-magnitude component positive.
  Vector highest_vector;
  /// Columns: the whole lowered family, highest first, built from
  /// highest_vector by normalized powers of the lowering generator.
  Matrix family;
};

/// Splits T x V into irreducible even summands by null-space search of the
/// raising generator inside each predicted weight space. The summand list
/// must match the product rule
///   [u12,u22] x [m12,m22] = sum_{i=0..min(u12-u22, m12-m22)}
///                           [u12+m12-i, u22+m22+i]
/// (gl(1) labels add); a count mismatch throws std::runtime_error.
std::vector<CgSummand> cg_decompose(const EvenModule& left,
                                    const EvenModule& right,
                                    double rank_tol = 1e-9);

/// Cross-check of the Clebsch-Gordan route against the closed-form basis
/// change: decomposes T_i x V for i = 0, 1, 2, embeds each summand family
/// into the induced basis, rescales once per summand at the largest
/// closed-form component, and returns the worst entrywise deviation from the
/// corresponding basis-change columns.
double cg_basis_change_deviation(const Weight& hw, const QContext& q,
                                 const Normalization& a = {});

}  // namespace uqgl
