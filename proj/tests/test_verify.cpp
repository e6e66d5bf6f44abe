#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "uqgl/linalg.hpp"
#include "uqgl/verify.hpp"

#include <algorithm>
#include <cmath>
#include <set>

using namespace uqgl;

namespace {

std::set<RelationId> failing_ids(const VerificationReport& report) {
  std::set<RelationId> out;
  for (const auto& c : report.checks)
    if (!c.pass) out.insert(c.id);
  return out;
}

}  // namespace

TEST_CASE("full suite on a typical module") {
  const auto rep = build_representation({1, 0, 5.0}, QContext(1.7));
  const auto report = run_suite(rep);
  CHECK(report.all_pass());
  CHECK(report.max_deviation() < 1e-9);

  // every catalog id appears exactly once
  REQUIRE(report.checks.size() == relation_catalog.size());
  for (RelationId id : relation_catalog)
    CHECK(std::count_if(report.checks.begin(), report.checks.end(),
                        [&](const CheckResult& c) { return c.id == id; }) == 1);
}

TEST_CASE("suite passes on both bases and on factor modules") {
  const QContext q(1.7);
  CHECK(run_suite(induced_representation({2, 0, 1.0}, q)).all_pass());

  const auto factor =
      factor_representation(build_representation({1, 0, 0.0}, q));
  CHECK(factor.dim() == 3);
  const auto report = run_suite(factor);
  CHECK(report.all_pass());
  CHECK(report.kind == BasisKind::Factor);
}

TEST_CASE("a corrupted entry trips exactly the relations touching it") {
  auto rep = build_representation({1, 0, 5.0}, QContext(1.7));
  // a weight-violating position, so the Cartan relations see it too
  rep.matrix(Gen::E32)(0, 0) += 0.5;

  const auto report = run_suite(rep);
  CHECK(!report.all_pass());
  const std::set<RelationId> expected = {
      RelationId::CartanLowering,     // [Eii, E32]
      RelationId::OddAnticommutator,  // {E23, E32}
      RelationId::OddSquares,         // E32^2
      RelationId::CompositeDefs,      // E31 := -[E21, E32]_{q^-1}
      RelationId::AdjointForm,        // E31 through the adjoint action
      RelationId::PushingOdd,
      RelationId::PushingGeneral,
      RelationId::RouteEquality,      // own matrices against the rebuilt route
  };
  CHECK(failing_ids(report) == expected);
}

TEST_CASE("pristine relations stay green when an untouched generator is checked") {
  auto rep = build_representation({1, 0, 5.0}, QContext(1.7));
  rep.matrix(Gen::E12)(0, 0) += 0.25;
  const auto report = run_suite(rep);
  CHECK(!report.all_pass());
  // the odd anticommutator never involves E12
  CHECK(report.check(RelationId::OddAnticommutator).pass);
  CHECK(report.check(RelationId::CartanCommute).pass);
  CHECK(!report.check(RelationId::Sl2Commutator).pass);
}

TEST_CASE("route equality across weights and q values") {
  CHECK(route_equality({1, 0, 0.0}, QContext(0.5)).pass);
  CHECK(route_equality({3, 1, 2.0}, QContext(std::exp(1.0))).pass);

  // diagonal generators agree exactly between the two routes
  const Weight hw{2, 0, 1.0};
  const QContext q(1.7);
  const auto reduced = build_representation(hw, q);
  const auto induced = induced_representation(hw, q);
  const auto bc = basis_change(hw, q);
  const Matrix conj = bc.induced_to_reduced * induced.matrix(Gen::E11) *
                      bc.reduced_to_induced;
  CHECK(max_deviation(conj, reduced.matrix(Gen::E11)) < 1e-12);
}

TEST_CASE("relation names round-trip") {
  for (RelationId id : relation_catalog) {
    const auto parsed = parse_relation(to_string(id));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == id);
  }
  CHECK(!parse_relation("no-such-relation").has_value());
}
