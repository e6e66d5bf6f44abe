#pragma once

#include "uqgl/induced.hpp"

#include <array>
#include <vector>

namespace uqgl {

/// Location of a reduced-basis vector: which even subspace V_k it lies in and
/// its pattern there (the pattern's signature is the k-shifted one).
struct ReducedBasisVector {
  int k = 0;
  GzPattern pattern;
};

/// Signatures of the four even subspaces of W^q:
///   V0 = [m13, m23, m33],       V1 = [m13, m23-1, m33+1],
///   V2 = [m13-1, m23, m33+1],   V3 = [m13-1, m23-1, m33+2].
EvenWeight subspace_signature(const Weight& hw, int k);

/// Subspace dimensions (2l+1, 2l+2, 2l, 2l+1) with 2l = m13 - m23; V2 is
/// empty when l = 0.
std::array<int, 4> subspace_dims(const Weight& hw);

inline int reduced_dim(const Weight& hw) { return 4 * (hw.m13 - hw.m23 + 1); }

/// Reduced (quasi-GZ) basis: k ascending, m11 descending inside each V_k.
/// Throws std::domain_error if hw is not dominant.
std::vector<ReducedBasisVector> enumerate_reduced_basis(const Weight& hw);

/// Index of the V_k pattern with the given m11 in reduced-basis order.
int reduced_index(const Weight& hw, int k, int m11);

enum class TypicalityClass {
  Typical,
  NonTypicalClass1,
  NonTypicalClass2,
  /// Both typicality brackets vanish; cannot happen for a dominant weight
  /// and lies outside the classification.
  Unclassified,
};

const char* to_string(TypicalityClass c);

struct TypicalityReport {
  TypicalityClass cls = TypicalityClass::Typical;
  /// The two typicality brackets [m13 + m33 + 1] and [m23 + m33].
  double bracket1 = 0.0;
  double bracket2 = 0.0;
  /// Reduced-basis indices of the maximal invariant subspace
  /// (V3 u V2 for class 1, V3 u V1 for class 2; empty if typical).
  std::vector<int> invariant_subspace;
};

/// Decides typicality. The zero test is exact on the bracket arguments
/// (a bracket vanishes iff its argument does, for generic real q > 0), so no
/// floating-point bracket comparison is involved.
TypicalityReport classify(const Weight& hw, const QContext& q);

enum class BasisKind { Reduced, Induced, Factor, Tensor };

const char* to_string(BasisKind k);

/// Immutable bundle: one dense matrix per generator plus basis labels and
/// metadata. Built once, then shared read-only.
struct Representation {
  Weight weight;
  QContext q{1.7};
  Normalization a;
  BasisKind kind = BasisKind::Reduced;

  std::vector<ReducedBasisVector> reduced_basis;  // Reduced and Factor kinds
  std::vector<InducedBasisVector> induced_basis;  // Induced kind
  std::vector<int> parities;                      // Z2 degree per basis vector
  std::array<Matrix, 9> matrices;                 // indexed by Gen
  TypicalityReport classification;

  int dim() const { return static_cast<int>(matrices[0].rows()); }
  const Matrix& matrix(Gen g) const { return matrices[index_of(g)]; }
  Matrix& matrix(Gen g) { return matrices[index_of(g)]; }

  /// Diagonals of the two Cartan combinations h1 = E11 - E22 and
  /// h2 = E22 + E33 (every basis built here diagonalises them).
  Vector cartan_h1() const;
  Vector cartan_h2() const;
};

/// diag(q^{c1*h1 + c2*h2 + c0}) on the representation's Cartan eigenbasis.
Matrix q_cartan_power(const Representation& rep, double c1, double c2,
                      double c0);

/// diag([d_j]) -- the bracket applied entrywise to a diagonal.
Matrix bracket_of_diagonal(const Vector& d, const QContext& q);

struct BasisChange {
  Matrix reduced_to_induced;  // columns: reduced vectors in induced coords
  Matrix induced_to_reduced;  // columns: induced vectors in reduced coords
};

/// The two rectangular-free basis-change matrices, built independently from
/// their respective closed forms (they must be mutual inverses).
BasisChange basis_change(const Weight& hw, const QContext& q,
                         const Normalization& a = {});

/// Full module in the reduced basis: even generators block-diagonal over the
/// V_k, odd generators from the closed-form matrix elements. Throws
/// std::runtime_error if any entry fails to be finite.
Representation build_representation(const Weight& hw, const QContext& q,
                                    const Normalization& a = {});

/// Full module in the induced basis; the composite generators are formed from
/// the Chevalley matrices by their defining q-commutators.
Representation induced_representation(const Weight& hw, const QContext& q,
                                      const Normalization& a = {});

/// Quotient by the maximal invariant subspace of a non-typical module:
/// restricts every matrix to the surviving rows/columns. Throws
/// std::domain_error when called on a typical representation.
Representation factor_representation(const Representation& rep);

struct InvariantSubspace {
  std::vector<int> support;  // basis indices carrying the subspace
  int dimension = 0;
};

struct IrreducibilityReport {
  bool irreducible = false;
  bool inconclusive = false;  // some rank decision fell inside the tolerance band
  std::vector<InvariantSubspace> proper_subspaces;  // deduplicated by support
};

/// For every basis vector, closes span{vector} under all nine generator
/// matrices (iterated application with numerical rank decisions at the given
/// tolerance). Irreducible iff every closure is the whole space.
IrreducibilityReport irreducibility_test(const Representation& rep,
                                         double tol = 1e-9);

}  // namespace uqgl
