#include "uqgl/verify.hpp"

#include "uqgl/hopf.hpp"
#include "uqgl/linalg.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace uqgl {

const char* to_string(RelationId id) {
  switch (id) {
    case RelationId::CartanCommute: return "cartan-commute";
    case RelationId::CartanRaising: return "cartan-raising";
    case RelationId::CartanLowering: return "cartan-lowering";
    case RelationId::Sl2Commutator: return "sl2-commutator";
    case RelationId::OddAnticommutator: return "odd-anticommutator";
    case RelationId::CartanDiagonal: return "cartan-diagonal";
    case RelationId::OddSquares: return "odd-squares";
    case RelationId::Serre: return "serre";
    case RelationId::CompositeDefs: return "composite-defs";
    case RelationId::AdjointForm: return "adjoint-form";
    case RelationId::PushingOdd: return "pushing-odd";
    case RelationId::PushingGeneral: return "pushing-general";
    case RelationId::AntipodeAxiom: return "antipode-axiom";
    case RelationId::CounitAxiom: return "counit-axiom";
    case RelationId::BasisChangeInverse: return "basis-change-inverse";
    case RelationId::RouteEquality: return "route-equality";
  }
  return "?";
}

std::optional<RelationId> parse_relation(std::string_view name) {
  for (RelationId id : relation_catalog)
    if (name == to_string(id)) return id;
  return std::nullopt;
}

bool VerificationReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

double VerificationReport::max_deviation() const {
  double dev = 0.0;
  for (const auto& c : checks) dev = std::max(dev, c.deviation);
  return dev;
}

const CheckResult& VerificationReport::check(RelationId id) const {
  for (const auto& c : checks)
    if (c.id == id) return c;
  throw std::invalid_argument("relation id not present in report");
}

namespace {

/// Accumulates a right-hand side while tracking the magnitude of every term,
/// so residuals can be judged against the size of what cancelled.
struct TermSum {
  Matrix sum;
  double scale = 0.0;

  explicit TermSum(int n) : sum(Matrix::Zero(n, n)) {}
  void add(const Matrix& term) {
    scale = std::max(scale, max_abs(term));
    sum += term;
  }
  void subtract(const Matrix& term) {
    scale = std::max(scale, max_abs(term));
    sum -= term;
  }
};

/// Residual of LHS against an assembled RHS.
double term_deviation(const Matrix& lhs, const TermSum& rhs) {
  return scaled_deviation(lhs, rhs.sum, std::max(rhs.scale, max_abs(lhs)));
}

/// E31^t1 E32^t2 as a product of the stored matrices.
Matrix theta_monomial(const Representation& rep, int t1, int t2) {
  const int n = rep.dim();
  Matrix p = Matrix::Identity(n, n);
  if (t1) p = rep.matrix(Gen::E31);
  if (t2) p = t1 ? Matrix(p * rep.matrix(Gen::E32)) : rep.matrix(Gen::E32);
  return p;
}

double pushing_odd_deviation(const Representation& rep,
                             std::vector<PushingCheck>* failures,
                             double tol) {
  const int n = rep.dim();
  const QContext& q = rep.q;
  const Matrix& e21 = rep.matrix(Gen::E21);
  const Matrix& e23 = rep.matrix(Gen::E23);
  const Matrix& e31 = rep.matrix(Gen::E31);
  const Matrix& e32 = rep.matrix(Gen::E32);
  const Matrix bracket_h2 = bracket_of_diagonal(rep.cartan_h2(), q);
  const Matrix q_mh2m1 = q_cartan_power(rep, 0, -1, -1);  // q^{-H2 - 1}

  double dev = 0.0;
  auto record = [&](const char* gen, int t1, int t2, double d) {
    dev = std::max(dev, d);
    if (failures && d >= tol) {
      std::ostringstream what;
      what << gen << " past theta (" << t1 << "," << t2 << ")";
      failures->push_back({what.str(), d});
    }
  };

  for (const auto& [t1, t2] : theta_order) {
    const Matrix mono = theta_monomial(rep, t1, t2);

    // E32 picks up (-q)^t1 and raises the second exponent
    {
      const Matrix lhs = e32 * mono;
      TermSum rhs(n);
      if (t2 == 0)
        rhs.add((t1 ? -q_power(1, q) : 1.0) * theta_monomial(rep, t1, 1));
      rhs.scale = std::max(rhs.scale, max_abs(e32) * max_abs(mono));
      record("E32", t1, t2, term_deviation(lhs, rhs));
    }

    // E23: carried term with alternating sign plus three remainders
    {
      const Matrix lhs = e23 * mono;
      TermSum rhs(n);
      rhs.scale = max_abs(e23) * max_abs(mono);
      rhs.add(((t1 + t2) % 2 ? -1.0 : 1.0) * mono * e23);
      if (t2)
        rhs.add((t1 ? -1.0 : 1.0) *
                (t1 ? Matrix(e31 * bracket_h2) : bracket_h2));
      if (t1 && t2) rhs.subtract(e31 * q_mh2m1);
      if (t1)
        rhs.add(q_power(-t2, q) * (t2 ? Matrix(e32 * e21) : e21) * q_mh2m1);
      record("E23", t1, t2, term_deviation(lhs, rhs));
    }
  }
  return dev;
}

double pushing_general_deviation(const Representation& rep,
                                 std::vector<PushingCheck>* failures,
                                 double tol) {
  const int n = rep.dim();
  const QContext& q = rep.q;
  const Matrix& e21 = rep.matrix(Gen::E21);
  const Matrix& e31 = rep.matrix(Gen::E31);
  const Matrix& e32 = rep.matrix(Gen::E32);
  const Matrix bracket_h2 = bracket_of_diagonal(rep.cartan_h2(), q);
  const Matrix q_mh2m1 = q_cartan_power(rep, 0, -1, -1);
  const Matrix q_h1 = q_cartan_power(rep, 1, 0, 0);

  double dev = 0.0;
  for (Gen g : chevalley_generators) {
    const auto [i, j] = weyl_indices(g);
    const int di1j1 = (i == 1 && j == 1);
    const int di2j2 = (i == 2 && j == 2);
    const int di3j3 = (i == 3 && j == 3);
    const int di1j2 = (i == 1 && j == 2);
    const int di2j1 = (i == 2 && j == 1);
    const int di2j3 = (i == 2 && j == 3);
    const int di3j2 = (i == 3 && j == 2);

    for (const auto& [t1, t2] : theta_order) {
      const Matrix mono = theta_monomial(rep, t1, t2);
      const Matrix lhs = rep.matrix(g) * mono;

      TermSum rhs(n);
      rhs.scale = max_abs(rep.matrix(g)) * max_abs(mono);
      const double twist =
          q_power((di3j2 + di2j1) * t1 - di2j1 * t2, q) *
          ((di2j3 * (t1 + t2) + di3j2 * t1) % 2 ? -1.0 : 1.0);
      rhs.add(twist * mono * rep.matrix(g));

      const double charge = di1j1 * t1 + di2j2 * t2 - di3j3 * (t1 + t2);
      if (charge != 0.0) rhs.subtract(charge * mono);

      const int th[4] = {0, t1, t2, t2};
      const int flip = th[i] * (1 - th[j]);
      if (flip) {
        const Matrix flipped = theta_monomial(rep, 1 - t1, 1 - t2);
        rhs.subtract(double(flip) *
                     (di1j2 ? Matrix(flipped * q_h1) : flipped));
      }

      if (di2j3 && t1) {
        Matrix inner = q_power(-t2, q) * (t2 ? Matrix(e32 * e21) : e21);
        if (t2) inner -= e31;
        rhs.add(inner * q_mh2m1);
      }
      if (di2j3 && t2)
        rhs.add((t1 ? -1.0 : 1.0) *
                (t1 ? Matrix(e31 * bracket_h2) : bracket_h2));

      const double d = term_deviation(lhs, rhs);
      dev = std::max(dev, d);
      if (failures && d >= tol) {
        std::ostringstream what;
        what << to_string(g) << " past theta (" << t1 << "," << t2 << ")";
        failures->push_back({what.str(), d});
      }
    }
  }
  return dev;
}

}  // namespace

std::vector<CheckResult> relation_checks(const Representation& rep,
                                         double tol) {
  const int n = rep.dim();
  const QContext& q = rep.q;
  const Matrix zero = Matrix::Zero(n, n);
  auto M = [&](Gen g) -> const Matrix& { return rep.matrix(g); };

  std::vector<CheckResult> out;
  auto push = [&](RelationId id, double dev) {
    out.push_back({id, dev, dev < tol});
  };

  // residual of A*B - B*A (or + for the anticommutator) against rhs
  auto bracket_dev = [&](const Matrix& A, const Matrix& B, double sign,
                         const Matrix& rhs) {
    const Matrix ab = A * B;
    const Matrix ba = B * A;
    const double scale = std::max(max_abs(ab), max_abs(ba));
    return scaled_deviation(ab + sign * ba, rhs, scale);
  };

  {
    double dev = 0.0;
    const std::array<Gen, 3> cartan = {Gen::E11, Gen::E22, Gen::E33};
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b)
        dev = std::max(dev, bracket_dev(M(cartan[a]), M(cartan[b]), -1, zero));
    push(RelationId::CartanCommute, dev);
  }

  {
    double raising = 0.0;
    double lowering = 0.0;
    const std::array<Gen, 3> cartan = {Gen::E11, Gen::E22, Gen::E33};
    for (int i = 1; i <= 3; ++i) {
      for (int j = 1; j <= 2; ++j) {
        const Gen up = (j == 1) ? Gen::E12 : Gen::E23;
        const Gen down = (j == 1) ? Gen::E21 : Gen::E32;
        const double cu = (i == j) - (i == j + 1);
        raising = std::max(raising, bracket_dev(M(cartan[i - 1]), M(up), -1,
                                                Matrix(cu * M(up))));
        lowering = std::max(lowering, bracket_dev(M(cartan[i - 1]), M(down),
                                                  -1, Matrix(-cu * M(down))));
      }
    }
    push(RelationId::CartanRaising, raising);
    push(RelationId::CartanLowering, lowering);
  }

  push(RelationId::Sl2Commutator,
       bracket_dev(M(Gen::E12), M(Gen::E21), -1,
                   bracket_of_diagonal(rep.cartan_h1(), q)));

  push(RelationId::OddAnticommutator,
       bracket_dev(M(Gen::E23), M(Gen::E32), +1,
                   bracket_of_diagonal(rep.cartan_h2(), q)));

  {
    double dev = 0.0;
    for (Gen g : {Gen::E11, Gen::E22, Gen::E33}) {
      const Matrix diag = M(g).diagonal().asDiagonal();
      dev = std::max(dev, max_deviation(M(g), diag));
    }
    push(RelationId::CartanDiagonal, dev);
  }

  {
    double dev = 0.0;
    for (Gen g : {Gen::E23, Gen::E32}) {
      const Matrix sq = M(g) * M(g);
      dev = std::max(dev,
                     scaled_deviation(sq, zero, max_abs(M(g)) * max_abs(M(g))));
    }
    push(RelationId::OddSquares, dev);
  }

  {
    const double qq = q_power(1, q);
    double dev = 0.0;
    for (const auto& [a, b] :
         {std::pair{Gen::E12, Gen::E13}, std::pair{Gen::E21, Gen::E31}}) {
      const Matrix ab = M(a) * M(b);
      const Matrix ba = M(b) * M(a);
      dev = std::max(dev,
                     scaled_deviation(ab - qq * ba, zero,
                                      std::max(max_abs(ab), qq * max_abs(ba))));
    }
    push(RelationId::Serre, dev);
  }

  {
    const double qi = q_power(-1, q);
    double dev = 0.0;
    {
      const Matrix ab = M(Gen::E12) * M(Gen::E23);
      const Matrix ba = M(Gen::E23) * M(Gen::E12);
      dev = std::max(dev, scaled_deviation(
                              Matrix(ab - qi * ba), M(Gen::E13),
                              std::max(max_abs(ab), qi * max_abs(ba))));
    }
    {
      const Matrix ab = M(Gen::E21) * M(Gen::E32);
      const Matrix ba = M(Gen::E32) * M(Gen::E21);
      dev = std::max(dev, scaled_deviation(
                              Matrix(qi * ba - ab), M(Gen::E31),
                              std::max(max_abs(ab), qi * max_abs(ba))));
    }
    for (Gen g : {Gen::E13, Gen::E31}) {
      const Matrix sq = M(g) * M(g);
      dev = std::max(dev,
                     scaled_deviation(sq, zero, max_abs(M(g)) * max_abs(M(g))));
    }
    push(RelationId::CompositeDefs, dev);
  }

  push(RelationId::AdjointForm, adjoint_check(rep, tol).max_deviation);

  push(RelationId::PushingOdd, pushing_odd_deviation(rep, nullptr, tol));
  push(RelationId::PushingGeneral,
       pushing_general_deviation(rep, nullptr, tol));

  push(RelationId::AntipodeAxiom, antipode_axiom_deviation(rep));
  push(RelationId::CounitAxiom, counit_axiom_deviation(rep));

  return out;
}

namespace {

/// Residual of the three-factor conjugation P * M * Q against R, judged
/// against the worst intermediate magnitude the product can reach.
double conjugation_deviation(const Matrix& P, const Matrix& M, const Matrix& Q,
                             const Matrix& R) {
  const Matrix half = P * M;
  const Matrix full = half * Q;
  const double scale =
      static_cast<double>(M.rows()) *
      std::max(max_abs(P) * max_abs(M), max_abs(half) * max_abs(Q));
  return scaled_deviation(full, R, scale);
}

}  // namespace

VerificationReport run_suite(const Representation& rep,
                             const VerifyOptions& opts) {
  if (rep.kind == BasisKind::Tensor)
    throw std::domain_error("the full suite needs a weight-bearing module");

  VerificationReport report;
  report.tolerance = opts.tolerance;
  report.weight = rep.weight;
  report.q_value = rep.q.q();
  report.mode = rep.q.mode();
  report.a = rep.a;
  report.kind = rep.kind;
  report.checks = relation_checks(rep, opts.tolerance);

  // Cross-basis checks. The bundle under test supplies its own side whenever
  // it is one of the two full-module bases; the counterpart is rebuilt from
  // the stored weight, q and normalization.
  const BasisChange bc = basis_change(rep.weight, rep.q, rep.a);
  const int n = static_cast<int>(bc.reduced_to_induced.rows());
  const Matrix id = Matrix::Identity(n, n);
  const double pair_scale =
      n * max_abs(bc.reduced_to_induced) * max_abs(bc.induced_to_reduced);
  const double inv_dev = std::max(
      scaled_deviation(bc.reduced_to_induced * bc.induced_to_reduced, id,
                       pair_scale),
      scaled_deviation(bc.induced_to_reduced * bc.reduced_to_induced, id,
                       pair_scale));
  report.checks.push_back(
      {RelationId::BasisChangeInverse, inv_dev, inv_dev < opts.tolerance});

  const Representation* reduced = nullptr;
  const Representation* induced = nullptr;
  Representation reduced_store, induced_store;
  if (rep.kind == BasisKind::Reduced) {
    reduced = &rep;
  } else {
    reduced_store = build_representation(rep.weight, rep.q, rep.a);
    reduced = &reduced_store;
  }
  if (rep.kind == BasisKind::Induced) {
    induced = &rep;
  } else {
    induced_store = induced_representation(rep.weight, rep.q, rep.a);
    induced = &induced_store;
  }
  double route_dev = 0.0;
  for (Gen g : all_generators)
    route_dev = std::max(
        route_dev,
        conjugation_deviation(bc.induced_to_reduced, induced->matrix(g),
                              bc.reduced_to_induced, reduced->matrix(g)));
  report.checks.push_back(
      {RelationId::RouteEquality, route_dev, route_dev < opts.tolerance});

  return report;
}

RouteReport route_equality(const Weight& hw, const QContext& q,
                           const Normalization& a, double tol) {
  const Representation reduced = build_representation(hw, q, a);
  const Representation induced = induced_representation(hw, q, a);
  const BasisChange bc = basis_change(hw, q, a);
  const int n = reduced.dim();
  const Matrix id = Matrix::Identity(n, n);
  const double pair_scale =
      n * max_abs(bc.reduced_to_induced) * max_abs(bc.induced_to_reduced);

  RouteReport report;
  report.basis_change_deviation = std::max(
      scaled_deviation(bc.reduced_to_induced * bc.induced_to_reduced, id,
                       pair_scale),
      scaled_deviation(bc.induced_to_reduced * bc.reduced_to_induced, id,
                       pair_scale));
  for (Gen g : all_generators)
    report.route_deviation = std::max(
        report.route_deviation,
        conjugation_deviation(bc.induced_to_reduced, induced.matrix(g),
                              bc.reduced_to_induced, reduced.matrix(g)));
  report.pass = report.basis_change_deviation < tol &&
                report.route_deviation < tol;
  return report;
}

PushingReport verify_pushing_relations(const Weight& hw, const QContext& q,
                                       double tol) {
  const Representation rep = induced_representation(hw, q);
  PushingReport report;
  const double odd = pushing_odd_deviation(rep, &report.failures, tol);
  const double general = pushing_general_deviation(rep, &report.failures, tol);
  report.max_deviation = std::max(odd, general);
  report.pass = report.max_deviation < tol;
  return report;
}

}  // namespace uqgl
