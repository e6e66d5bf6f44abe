#pragma once

#include "uqgl/rep.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace uqgl {

/// Fixed catalog of verified identities. Every report carries each id exactly
/// once.
enum class RelationId : int {
  CartanCommute,      // [Eii, Ejj] = 0
  CartanRaising,      // [Eii, E_{j,j+1}] = (d_ij - d_{i,j+1}) E_{j,j+1}
  CartanLowering,     // [Eii, E_{j+1,j}] = (d_{i,j+1} - d_ij) E_{j+1,j}
  Sl2Commutator,      // [E12, E21] = [H1]
  OddAnticommutator,  // {E23, E32} = [H2]
  CartanDiagonal,     // E11, E22, E33 simultaneously diagonal
  OddSquares,         // E23^2 = E32^2 = 0
  Serre,              // [E12, E13]_q = [E21, E31]_q = 0
  CompositeDefs,      // E13/E31 defining q-commutators, vanishing squares
  AdjointForm,        // E13/E31 through the quantum adjoint action
  PushingOdd,         // odd generators moved through theta monomials
  PushingGeneral,     // every |i-j|<=1 generator moved through theta monomials
  AntipodeAxiom,
  CounitAxiom,
  BasisChangeInverse,  // the two basis-change matrices are mutual inverses
  RouteEquality,       // induced matrices conjugated = reduced matrices
};

inline constexpr std::array<RelationId, 16> relation_catalog = {
    RelationId::CartanCommute,     RelationId::CartanRaising,
    RelationId::CartanLowering,    RelationId::Sl2Commutator,
    RelationId::OddAnticommutator, RelationId::CartanDiagonal,
    RelationId::OddSquares,        RelationId::Serre,
    RelationId::CompositeDefs,     RelationId::AdjointForm,
    RelationId::PushingOdd,        RelationId::PushingGeneral,
    RelationId::AntipodeAxiom,     RelationId::CounitAxiom,
    RelationId::BasisChangeInverse, RelationId::RouteEquality};

const char* to_string(RelationId id);
std::optional<RelationId> parse_relation(std::string_view name);

struct CheckResult {
  RelationId id = RelationId::CartanCommute;
  double deviation = 0.0;
  bool pass = false;
};

struct VerifyOptions {
  double tolerance = 1e-9;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  double tolerance = 1e-9;
  Weight weight;
  double q_value = 0.0;
  QMode mode = QMode::Generic;
  Normalization a;
  BasisKind kind = BasisKind::Reduced;

  bool all_pass() const;
  double max_deviation() const;
  const CheckResult& check(RelationId id) const;
};

/// The relation checks that are intrinsic to one bundle of matrices (the
/// whole catalog except the two cross-basis entries). Valid on any built
/// representation: the identities are representation-independent statements
/// of the algebra.
std::vector<CheckResult> relation_checks(const Representation& rep,
                                         double tol);

/// Full catalog on a weight-bearing representation (reduced, induced or
/// factor kind). The cross-basis checks rebuild the counterpart basis from
/// the bundle's weight, q and normalization; when the bundle itself is one of
/// the two full-module bases, its own matrices are the compared side, so a
/// corrupted entry shows up here too. Throws std::domain_error for tensor
/// bundles.
VerificationReport run_suite(const Representation& rep,
                             const VerifyOptions& opts = {});

struct RouteReport {
  double basis_change_deviation = 0.0;  // C * C^-1 and C^-1 * C against I
  double route_deviation = 0.0;         // conjugated induced vs reduced
  bool pass = false;
};

/// Builds both bases independently and checks that conjugating every induced
/// generator matrix by the basis change reproduces the reduced matrix.
RouteReport route_equality(const Weight& hw, const QContext& q,
                           const Normalization& a = {}, double tol = 1e-9);

}  // namespace uqgl
