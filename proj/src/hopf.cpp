#include "uqgl/hopf.hpp"

#include "uqgl/linalg.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace uqgl {

std::vector<std::pair<AlgebraLeg, AlgebraLeg>> coproduct_terms(Gen g) {
  using L = AlgebraLeg;
  switch (g) {
    case Gen::E11:
    case Gen::E22:
    case Gen::E33:
      return {{L::gen(g), L::one()}, {L::one(), L::gen(g)}};
    case Gen::E12:
      return {{L::gen(g), L::qh(1, 0)}, {L::one(), L::gen(g)}};
    case Gen::E21:
      return {{L::gen(g), L::one()}, {L::qh(-1, 0), L::gen(g)}};
    case Gen::E23:
      return {{L::gen(g), L::qh(0, 1)}, {L::one(), L::gen(g)}};
    case Gen::E32:
      return {{L::gen(g), L::one()}, {L::qh(0, -1), L::gen(g)}};
    default:
      throw std::domain_error("no coproduct is defined for the composites");
  }
}

Matrix antipode_matrix(Gen g, const Representation& rep) {
  switch (g) {
    case Gen::E11:
    case Gen::E22:
    case Gen::E33:
      return -rep.matrix(g);
    case Gen::E12:
      return -rep.matrix(g) * q_cartan_power(rep, -1, 0, 0);
    case Gen::E21:
      return -q_cartan_power(rep, 1, 0, 0) * rep.matrix(g);
    case Gen::E23:
      return -rep.matrix(g) * q_cartan_power(rep, 0, -1, 0);
    case Gen::E32:
      return -q_cartan_power(rep, 0, 1, 0) * rep.matrix(g);
    default:
      throw std::domain_error("no antipode is defined for the composites");
  }
}

Matrix evaluate_leg(const AlgebraLeg& leg, const Representation& rep) {
  switch (leg.kind) {
    case AlgebraLeg::Kind::Identity:
      return Matrix::Identity(rep.dim(), rep.dim());
    case AlgebraLeg::Kind::Generator:
      return rep.matrix(leg.g);
    case AlgebraLeg::Kind::CartanPower:
      return q_cartan_power(rep, leg.c1, leg.c2, 0);
  }
  throw std::logic_error("unreachable");
}

Matrix evaluate_antipode_leg(const AlgebraLeg& leg, const Representation& rep) {
  switch (leg.kind) {
    case AlgebraLeg::Kind::Identity:
      return Matrix::Identity(rep.dim(), rep.dim());
    case AlgebraLeg::Kind::Generator:
      return antipode_matrix(leg.g, rep);
    case AlgebraLeg::Kind::CartanPower:
      return q_cartan_power(rep, -leg.c1, -leg.c2, 0);
  }
  throw std::logic_error("unreachable");
}

namespace {

Matrix adjoint_action_tracked(Gen x, const Matrix& y, int y_parity,
                              const Representation& rep, double* scale) {
  Matrix out = Matrix::Zero(rep.dim(), rep.dim());
  for (const auto& [left, right] : coproduct_terms(x)) {
    const double sign = (right.parity() * y_parity) % 2 ? -1.0 : 1.0;
    const Matrix term = sign * evaluate_leg(left, rep) * y *
                        evaluate_antipode_leg(right, rep);
    if (scale) *scale = std::max(*scale, max_abs(term));
    out += term;
  }
  return out;
}

}  // namespace

Matrix adjoint_action(Gen x, const Matrix& y, int y_parity,
                      const Representation& rep) {
  return adjoint_action_tracked(x, y, y_parity, rep, nullptr);
}

AdjointReport adjoint_check(const Representation& rep, double tol) {
  double scale13 = 0.0;
  double scale31 = 0.0;
  const Matrix y13 = rep.matrix(Gen::E23) * q_cartan_power(rep, 0, 1, 0);
  const Matrix twist = q_cartan_power(rep, 1, -1, 0);
  const Matrix via13 =
      adjoint_action_tracked(Gen::E12, y13, 1, rep, &scale13) * twist;
  scale13 *= max_abs(twist);
  const Matrix via31 =
      -adjoint_action_tracked(Gen::E21, rep.matrix(Gen::E32), 1, rep,
                              &scale31);
  AdjointReport report;
  report.max_deviation =
      std::max(scaled_deviation(rep.matrix(Gen::E13), via13, scale13),
               scaled_deviation(rep.matrix(Gen::E31), via31, scale31));
  report.pass = report.max_deviation < tol;
  return report;
}

double antipode_axiom_deviation(const Representation& rep) {
  const int n = rep.dim();
  const Matrix zero = Matrix::Zero(n, n);
  double dev = 0.0;
  for (Gen g : chevalley_generators) {
    Matrix left = Matrix::Zero(n, n);
    Matrix right = Matrix::Zero(n, n);
    double scale = 0.0;
    for (const auto& [l1, l2] : coproduct_terms(g)) {
      const Matrix lterm =
          evaluate_antipode_leg(l1, rep) * evaluate_leg(l2, rep);
      const Matrix rterm =
          evaluate_leg(l1, rep) * evaluate_antipode_leg(l2, rep);
      scale = std::max({scale, max_abs(lterm), max_abs(rterm)});
      left += lterm;
      right += rterm;
    }
    dev = std::max({dev, scaled_deviation(left, zero, scale),
                    scaled_deviation(right, zero, scale)});
  }
  return dev;
}

double counit_axiom_deviation(const Representation& rep) {
  const int n = rep.dim();
  double dev = 0.0;
  for (Gen g : chevalley_generators) {
    Matrix left = Matrix::Zero(n, n);
    Matrix right = Matrix::Zero(n, n);
    for (const auto& [l1, l2] : coproduct_terms(g)) {
      // counit: 1 on the identity and Cartan powers, 0 on generators
      if (l1.kind != AlgebraLeg::Kind::Generator) left += evaluate_leg(l2, rep);
      if (l2.kind != AlgebraLeg::Kind::Generator) right += evaluate_leg(l1, rep);
    }
    dev = std::max({dev, max_deviation(left, rep.matrix(g)),
                    max_deviation(right, rep.matrix(g))});
  }
  return dev;
}

Representation tensor_representation(const Representation& A,
                                     const Representation& B) {
  if (!(A.q == B.q))
    throw std::domain_error("tensor factors carry different q");
  Representation out;
  out.q = A.q;
  out.a = A.a;
  out.kind = BasisKind::Tensor;
  out.weight = {A.weight.m13 + B.weight.m13, A.weight.m23 + B.weight.m23,
                A.weight.m33 + B.weight.m33};
  out.classification.cls = TypicalityClass::Unclassified;

  const int na = A.dim();
  const int nb = B.dim();
  out.parities.reserve(na * nb);
  for (int ia = 0; ia < na; ++ia)
    for (int ib = 0; ib < nb; ++ib)
      out.parities.push_back((A.parities[ia] + B.parities[ib]) % 2);

  for (Gen g : chevalley_generators) {
    Matrix m = Matrix::Zero(na * nb, na * nb);
    for (const auto& [l1, l2] : coproduct_terms(g)) {
      Matrix left = evaluate_leg(l1, A);
      if (l2.parity()) {
        // super convention: an odd right leg passing an odd left vector
        for (int c = 0; c < na; ++c)
          if (A.parities[c]) left.col(c) *= -1.0;
      }
      m += kronecker(left, evaluate_leg(l2, B));
    }
    out.matrix(g) = std::move(m);
  }

  const double qi = q_power(-1, out.q);
  const Matrix& e12 = out.matrix(Gen::E12);
  const Matrix& e21 = out.matrix(Gen::E21);
  const Matrix& e23 = out.matrix(Gen::E23);
  const Matrix& e32 = out.matrix(Gen::E32);
  out.matrix(Gen::E13) = e12 * e23 - qi * e23 * e12;
  out.matrix(Gen::E31) = -(e21 * e32 - qi * e32 * e21);
  return out;
}

double coassociativity_deviation(const Representation& rep) {
  const Representation square = tensor_representation(rep, rep);
  const Representation left = tensor_representation(square, rep);
  const Representation right = tensor_representation(rep, square);
  double dev = 0.0;
  for (Gen g : all_generators)
    dev = std::max(dev, max_deviation(left.matrix(g), right.matrix(g)));
  return dev;
}

const Matrix& EvenModule::matrix(Gen g) const {
  if (index_of(g) >= 5)
    throw std::domain_error("even module carries even generators only");
  return matrices[index_of(g)];
}

Vector EvenModule::cartan_h1() const {
  return matrices[index_of(Gen::E11)].diagonal() -
         matrices[index_of(Gen::E22)].diagonal();
}

Vector EvenModule::cartan_h2() const {
  return matrices[index_of(Gen::E22)].diagonal() +
         matrices[index_of(Gen::E33)].diagonal();
}

EvenModule gz_module(const EvenWeight& hw, const QContext& q,
                     int base_parity) {
  EvenModule mod{q, hw};
  for (Gen g : even_generators)
    mod.matrices[index_of(g)] = even_generator_matrix(g, hw, q);
  for (const auto& p : enumerate_patterns(hw)) {
    std::ostringstream label;
    label << "[" << p.top.m12 << "," << p.top.m22 << ";" << p.m11 << ";"
          << p.top.m32 << "]";
    mod.labels.push_back(label.str());
    mod.parities.push_back(base_parity % 2);
  }
  return mod;
}

EvenModule theta_sector_module(int component, const QContext& q) {
  EvenModule mod{q};
  auto fill = [&](int dim) {
    for (auto& m : mod.matrices) m = Matrix::Zero(dim, dim);
  };
  switch (component) {
    case 0:
      mod.weight = {0, 0, 0};
      fill(1);
      mod.labels = {"|0,0>"};
      mod.parities = {0};
      break;
    case 1:
      // basis in sector order: |0,1> then |1,0>
      mod.weight = {0, -1, 1};
      fill(2);
      mod.matrices[index_of(Gen::E11)].diagonal() << 0, -1;
      mod.matrices[index_of(Gen::E22)].diagonal() << -1, 0;
      mod.matrices[index_of(Gen::E33)].diagonal() << 1, 1;
      mod.matrices[index_of(Gen::E12)](0, 1) = -1;
      mod.matrices[index_of(Gen::E21)](1, 0) = -1;
      mod.labels = {"|0,1>", "|1,0>"};
      mod.parities = {1, 1};
      break;
    case 2:
      mod.weight = {-1, -1, 2};
      fill(1);
      mod.matrices[index_of(Gen::E11)](0, 0) = -1;
      mod.matrices[index_of(Gen::E22)](0, 0) = -1;
      mod.matrices[index_of(Gen::E33)](0, 0) = 2;
      mod.labels = {"|1,1>"};
      mod.parities = {0};
      break;
    default:
      throw std::domain_error("theta component must be 0, 1 or 2");
  }
  return mod;
}

namespace {

Matrix evaluate_even_leg(const AlgebraLeg& leg, const EvenModule& mod) {
  switch (leg.kind) {
    case AlgebraLeg::Kind::Identity:
      return Matrix::Identity(mod.dim(), mod.dim());
    case AlgebraLeg::Kind::Generator:
      return mod.matrix(leg.g);
    case AlgebraLeg::Kind::CartanPower: {
      const Vector h1 = mod.cartan_h1();
      const Vector h2 = mod.cartan_h2();
      Vector d(mod.dim());
      for (int t = 0; t < mod.dim(); ++t)
        d(t) = q_power(leg.c1 * h1(t) + leg.c2 * h2(t), mod.q);
      return d.asDiagonal();
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

EvenModule tensor_even(const EvenModule& A, const EvenModule& B) {
  if (!(A.q == B.q))
    throw std::domain_error("tensor factors carry different q");
  EvenModule out{A.q,
                 {A.weight.m12 + B.weight.m12, A.weight.m22 + B.weight.m22,
                  A.weight.m32 + B.weight.m32}};
  for (Gen g : even_generators) {
    Matrix m = Matrix::Zero(A.dim() * B.dim(), A.dim() * B.dim());
    for (const auto& [l1, l2] : coproduct_terms(g))
      m += kronecker(evaluate_even_leg(l1, A), evaluate_even_leg(l2, B));
    out.matrices[index_of(g)] = std::move(m);
  }
  for (int ia = 0; ia < A.dim(); ++ia)
    for (int ib = 0; ib < B.dim(); ++ib) {
      out.labels.push_back(A.labels[ia] + "x" + B.labels[ib]);
      out.parities.push_back((A.parities[ia] + B.parities[ib]) % 2);
    }
  return out;
}

std::vector<CgSummand> cg_decompose(const EvenModule& left,
                                    const EvenModule& right,
                                    double rank_tol) {
  const EvenModule prod = tensor_even(left, right);
  const int n = prod.dim();
  const Vector d11 = prod.matrix(Gen::E11).diagonal();
  const Vector d22 = prod.matrix(Gen::E22).diagonal();
  const Vector d33 = prod.matrix(Gen::E33).diagonal();
  const Matrix& raise = prod.matrix(Gen::E12);
  const Matrix& lower = prod.matrix(Gen::E21);

  const int nmax = std::min(left.weight.m12 - left.weight.m22,
                            right.weight.m12 - right.weight.m22);
  std::vector<CgSummand> out;
  int total = 0;
  for (int i = 0; i <= nmax; ++i) {
    const EvenWeight sig{left.weight.m12 + right.weight.m12 - i,
                         left.weight.m22 + right.weight.m22 + i,
                         left.weight.m32 + right.weight.m32};

    std::vector<int> idx;
    for (int t = 0; t < n; ++t)
      if (std::abs(d11(t) - sig.m12) < 1e-9 &&
          std::abs(d22(t) - sig.m22) < 1e-9 &&
          std::abs(d33(t) - sig.m32) < 1e-9)
        idx.push_back(t);

    const Matrix restricted = raise(Eigen::all, idx);
    const Matrix null = nullspace(restricted, rank_tol);
    if (null.cols() != 1)
      throw std::runtime_error(
          "raising-generator null space does not match the predicted "
          "multiplicity");

    Vector hwv = Vector::Zero(n);
    for (size_t t = 0; t < idx.size(); ++t) hwv(idx[t]) = null(t, 0);
    // fix the overall sign at the largest component
    int anchor = 0;
    hwv.cwiseAbs().maxCoeff(&anchor);
    if (hwv(anchor) < 0) hwv = -hwv;

    CgSummand summand{sig, hwv, Matrix::Zero(n, sig.dim())};
    Vector v = hwv;
    for (int t = 0; t < sig.dim(); ++t) {
      const int m11 = sig.m12 - t;
      const double pre =
          std::sqrt(q_factorial(m11 - sig.m22, prod.q) /
                    (q_factorial(sig.m12 - sig.m22, prod.q) *
                     q_factorial(sig.m12 - m11, prod.q)));
      summand.family.col(t) = pre * v;
      v = lower * v;
    }
    total += sig.dim();
    out.push_back(std::move(summand));
  }
  if (total != n)
    throw std::runtime_error(
        "tensor decomposition does not exhaust the product space");
  return out;
}

double cg_basis_change_deviation(const Weight& hw, const QContext& q,
                                 const Normalization& a) {
  const EvenModule v = gz_module(even_part(hw), q, 0);
  const Matrix r2i = basis_change(hw, q, a).reduced_to_induced;
  const int dv = even_part(hw).dim();
  const int n = 4 * dv;
  const auto dims = subspace_dims(hw);

  // theta-component of T feeding each subspace V_k, and the sector offsets of
  // the component's basis inside the induced layout
  const std::array<int, 4> component_of_k = {0, 1, 1, 2};
  const std::array<std::vector<int>, 3> sectors_of_component = {
      {{0}, {1, 2}, {3}}};

  double worst = 0.0;
  for (int component = 0; component <= 2; ++component) {
    const EvenModule t = theta_sector_module(component, q);
    const auto summands = cg_decompose(t, v);
    // summand i of T1 x V lands in V1 (i = 0) and V2 (i = 1)
    size_t next = 0;
    for (int k = 0; k < 4; ++k) {
      if (component_of_k[k] != component || dims[k] == 0) continue;
      const CgSummand& s = summands.at(next++);
      if (!(s.signature == subspace_signature(hw, k)))
        throw std::runtime_error("summand signature does not match subspace");

      // embed the summand family into induced coordinates
      const auto& sectors = sectors_of_component[component];
      Matrix embedded = Matrix::Zero(n, dims[k]);
      for (int ti = 0; ti < t.dim(); ++ti)
        for (int p = 0; p < dv; ++p)
          embedded.row(sectors[ti] * dv + p) = s.family.row(ti * dv + p);

      const Matrix block =
          r2i.block(0, reduced_index(hw, k, s.signature.m12), n, dims[k]);
      int anchor = 0;
      block.col(0).cwiseAbs().maxCoeff(&anchor);
      if (std::abs(embedded(anchor, 0)) < 1e-300)
        throw std::runtime_error("degenerate anchor in summand comparison");
      const double scale = block(anchor, 0) / embedded(anchor, 0);
      worst = std::max(worst, max_deviation(scale * embedded, block));
    }
  }
  return worst;
}

}  // namespace uqgl
