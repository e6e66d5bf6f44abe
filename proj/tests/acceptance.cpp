// Acceptance suite: one line per criterion, non-zero exit on any failure.
// Everything runs at desk scale on fixed seeds.

#include "uqgl/hopf.hpp"
#include "uqgl/linalg.hpp"
#include "uqgl/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

using namespace uqgl;

namespace {

constexpr double tol = 1e-9;
const double pi = std::acos(-1.0);
const double euler = std::exp(1.0);

int failures = 0;

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2e", v);
  return buf;
}

void report(int number, const std::string& what, bool pass,
            const std::string& detail) {
  std::printf("[%s] criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", number,
              what.c_str(), detail.c_str());
  if (!pass) ++failures;
}

std::vector<double> m33_grid() {
  std::vector<double> out;
  for (int m = -5; m <= 5; ++m) out.push_back(m);
  out.push_back(pi);
  out.push_back(-pi);
  return out;
}

// 1. all catalog relations on the full grid, unit and random normalization
void criterion_relations() {
  std::mt19937 rng(20240817);
  std::uniform_real_distribution<double> mag(0.3, 2.5);
  const Normalization random_a{mag(rng), -mag(rng), mag(rng)};
  const std::vector<Normalization> as = {{1, 1, 1}, random_a};

  double worst = 0.0;
  std::string worst_at = "-";
  long cells = 0;
  for (int d = 0; d <= 10; ++d) {
    for (double m33 : m33_grid()) {
      for (double qv : {0.5, 1.7, euler}) {
        for (const auto& a : as) {
          const Weight hw{d, 0, m33};
          const QContext q(qv);
          const auto rep = build_representation(hw, q, a);
          for (const auto& c : relation_checks(rep, tol)) {
            ++cells;
            if (c.deviation > worst) {
              worst = c.deviation;
              worst_at = std::string(to_string(c.id)) + " at [" +
                         std::to_string(d) + ",0," + std::to_string(m33) +
                         "], q=" + std::to_string(qv);
            }
          }
        }
      }
    }
  }
  report(1, "defining, Serre, composite, adjoint and pushing relations",
         worst < tol,
         "max deviation " + sci(worst) + " over " +
             std::to_string(cells) + " checks, worst: " + worst_at);
}

// 2. dimension law and subspace dimensions
void criterion_dimensions() {
  bool pass = true;
  std::string detail = "all dims match 4(m13-m23+1) and (2l+1,2l+2,2l,2l+1)";
  for (int d = 0; d <= 10 && pass; ++d) {
    for (int m23 : {-2, 0, 3}) {
      const Weight hw{m23 + d, m23, 0.5};
      const auto dims = subspace_dims(hw);
      const auto basis = enumerate_reduced_basis(hw);
      const auto rep = build_representation(hw, QContext(1.7));
      std::array<int, 4> counts = {0, 0, 0, 0};
      for (const auto& bv : basis) counts[bv.k]++;
      const bool ok =
          dims == std::array<int, 4>{d + 1, d + 2, d, d + 1} &&
          counts == dims && static_cast<int>(basis.size()) == 4 * (d + 1) &&
          rep.dim() == 4 * (d + 1) && (d > 0 || counts[2] == 0);
      if (!ok) {
        pass = false;
        detail = "mismatch at d=" + std::to_string(d) +
                 ", m23=" + std::to_string(m23);
      }
    }
  }
  report(2, "dimension law", pass, detail);
}

// 3. the scan flags exactly the two non-typical lines
void criterion_typicality_lines() {
  bool pass = true;
  std::string detail = "non-typical exactly on m33 = -m13-1 and m33 = -m23";
  for (int d = 0; d <= 10 && pass; ++d) {
    for (double m33 : m33_grid()) {
      for (double qv : {0.5, 1.7}) {
        const Weight hw{d, 0, m33};
        const auto cls = classify(hw, QContext(qv));
        TypicalityClass expected = TypicalityClass::Typical;
        if (m33 == -hw.m13 - 1) expected = TypicalityClass::NonTypicalClass1;
        if (m33 == -hw.m23) expected = TypicalityClass::NonTypicalClass2;
        if (cls.cls != expected) {
          pass = false;
          detail = "wrong class at [" + std::to_string(d) + ",0," +
                   std::to_string(m33) + "]";
        }
      }
    }
  }
  report(3, "typicality lines", pass, detail);
}

// 4. subspace-closure irreducibility oracle
void criterion_irreducibility() {
  std::mt19937 rng(424242);
  std::uniform_int_distribution<int> d_dist(0, 10);
  std::uniform_int_distribution<int> m23_dist(-3, 3);
  std::uniform_int_distribution<int> m33_dist(-5, 5);
  std::uniform_real_distribution<double> q_dist(0.4, 2.2);

  auto random_q = [&]() {
    double qv = q_dist(rng);
    while (std::abs(qv - 1.0) < 0.05) qv = q_dist(rng);
    return QContext(qv);
  };

  bool pass = true;
  std::string detail = "20 typical irreducible, 10+10 non-typical supports";

  for (int t = 0; t < 20 && pass; ++t) {
    const int d = d_dist(rng);
    const int m23 = m23_dist(rng);
    Weight hw{m23 + d, m23, 0.0};
    do {
      hw.m33 = m33_dist(rng);
    } while (hw.m33 == -hw.m13 - 1 || hw.m33 == -hw.m23);
    const auto rep = build_representation(hw, random_q());
    const auto res = irreducibility_test(rep, tol);
    if (!res.irreducible || res.inconclusive) {
      pass = false;
      detail = "typical sample not irreducible at [" +
               std::to_string(hw.m13) + "," + std::to_string(hw.m23) + "," +
               std::to_string(hw.m33) + "]";
    }
  }

  for (int cls = 1; cls <= 2 && pass; ++cls) {
    for (int t = 0; t < 10 && pass; ++t) {
      const int d = d_dist(rng);
      const int m23 = m23_dist(rng);
      const Weight hw{m23 + d, m23,
                      cls == 1 ? double(-(m23 + d) - 1) : double(-m23)};
      const auto rep = build_representation(hw, random_q());
      const auto res = irreducibility_test(rep, tol);
      const bool support_ok =
          !res.irreducible && res.proper_subspaces.size() == 1 &&
          res.proper_subspaces[0].support ==
              rep.classification.invariant_subspace;
      const auto factor = factor_representation(rep);
      const bool factor_ok = run_suite(factor, {tol}).all_pass() &&
                             irreducibility_test(factor, tol).irreducible;
      if (!support_ok || !factor_ok) {
        pass = false;
        detail = "class " + std::to_string(cls) + " failure at [" +
                 std::to_string(hw.m13) + "," + std::to_string(hw.m23) + "," +
                 std::to_string(hw.m33) + "]";
      }
    }
  }
  report(4, "irreducibility oracle and factor modules", pass, detail);
}

// 5. the two construction routes agree through the basis change
void criterion_route_equality() {
  std::mt19937 rng(5150);
  std::uniform_int_distribution<int> d_dist(0, 8);
  std::uniform_int_distribution<int> m23_dist(-3, 3);
  std::uniform_real_distribution<double> m33_dist(-5.0, 5.0);
  std::uniform_real_distribution<double> q_dist(0.4, 2.2);
  std::uniform_real_distribution<double> mag(0.3, 2.5);

  double worst_route = 0.0;
  double worst_inverse = 0.0;
  for (int t = 0; t < 10; ++t) {
    const int m23 = m23_dist(rng);
    const Weight hw{m23 + d_dist(rng), m23, m33_dist(rng)};
    double qv = q_dist(rng);
    while (std::abs(qv - 1.0) < 0.05) qv = q_dist(rng);
    const Normalization a = t < 5 ? Normalization{1, 1, 1}
                                  : Normalization{mag(rng), -mag(rng), mag(rng)};
    const auto rr = route_equality(hw, QContext(qv), a, tol);
    worst_route = std::max(worst_route, rr.route_deviation);
    worst_inverse = std::max(worst_inverse, rr.basis_change_deviation);
  }
  report(5, "route equality and basis-change inversion",
         worst_route < tol && worst_inverse < tol,
         "route " + sci(worst_route) + ", inverse " + sci(worst_inverse));
}

// 6. Hopf axioms in a module and its tensor square
void criterion_hopf_axioms() {
  const auto rep = build_representation({1, 0, 5.0}, QContext(1.7));
  const auto square = tensor_representation(rep, rep);
  const double dev =
      std::max({antipode_axiom_deviation(rep), counit_axiom_deviation(rep),
                antipode_axiom_deviation(square),
                counit_axiom_deviation(square),
                coassociativity_deviation(rep)});
  report(6, "coassociativity, counit and antipode axioms", dev < tol,
         "max deviation " + sci(dev));
}

// 7. classical limit at q = 1 + 1e-6
void criterion_classical_limit() {
  const QContext near_one(1.0 + 1e-6);
  const QContext classical(1.0, QMode::ClassicalLimit);
  double worst = 0.0;
  for (int d = 0; d <= 10; ++d) {
    for (double m33 : m33_grid()) {
      const Weight hw{d, 0, m33};
      const auto deformed = build_representation(hw, near_one);
      const auto limit = build_representation(hw, classical);
      for (Gen g : all_generators)
        worst = std::max(worst,
                         max_abs(deformed.matrix(g) - limit.matrix(g)));
      // the composite generators degenerate to plain commutators
      const Matrix comm13 =
          deformed.matrix(Gen::E12) * deformed.matrix(Gen::E23) -
          deformed.matrix(Gen::E23) * deformed.matrix(Gen::E12);
      const Matrix comm31 =
          deformed.matrix(Gen::E21) * deformed.matrix(Gen::E32) -
          deformed.matrix(Gen::E32) * deformed.matrix(Gen::E21);
      worst = std::max(worst, max_abs(deformed.matrix(Gen::E13) - comm13));
      worst = std::max(worst, max_abs(deformed.matrix(Gen::E31) + comm31));
    }
  }
  report(7, "classical limit", worst < 1e-4,
         "max entry deviation " + sci(worst));
}

// 8. null-space Clebsch-Gordan route against the closed forms
void criterion_cg_consistency() {
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> d_dist(0, 6);
  std::uniform_int_distribution<int> m23_dist(-2, 2);
  std::uniform_real_distribution<double> m33_dist(-4.0, 4.0);
  std::uniform_real_distribution<double> q_dist(0.4, 2.2);

  double worst = 0.0;
  for (int t = 0; t < 5; ++t) {
    const int m23 = m23_dist(rng);
    const Weight hw{m23 + d_dist(rng), m23, m33_dist(rng)};
    double qv = q_dist(rng);
    while (std::abs(qv - 1.0) < 0.05) qv = q_dist(rng);
    worst = std::max(worst, cg_basis_change_deviation(hw, QContext(qv)));
  }
  report(8, "Clebsch-Gordan coefficients match the closed forms", worst < tol,
         "max deviation " + sci(worst));
}

}  // namespace

int main() {
  criterion_relations();
  criterion_dimensions();
  criterion_typicality_lines();
  criterion_irreducibility();
  criterion_route_equality();
  criterion_hopf_axioms();
  criterion_classical_limit();
  criterion_cg_consistency();
  if (failures == 0) {
    std::printf("acceptance: all 8 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) FAILED\n", failures);
  return 1;
}
