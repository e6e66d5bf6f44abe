#include "uqgl/rep.hpp"

#include "uqgl/linalg.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace uqgl {

EvenWeight subspace_signature(const Weight& hw, int k) {
  switch (k) {
    case 0: return {hw.m13, hw.m23, hw.m33};
    case 1: return {hw.m13, hw.m23 - 1, hw.m33 + 1};
    case 2: return {hw.m13 - 1, hw.m23, hw.m33 + 1};
    case 3: return {hw.m13 - 1, hw.m23 - 1, hw.m33 + 2};
  }
  throw std::domain_error("subspace index must be 0..3");
}

std::array<int, 4> subspace_dims(const Weight& hw) {
  const int twol = hw.m13 - hw.m23;
  return {twol + 1, twol + 2, twol, twol + 1};
}

std::vector<ReducedBasisVector> enumerate_reduced_basis(const Weight& hw) {
  if (!hw.dominant())
    throw std::domain_error("highest weight is not dominant (m13 < m23)");
  const auto dims = subspace_dims(hw);
  std::vector<ReducedBasisVector> out;
  out.reserve(reduced_dim(hw));
  for (int k = 0; k < 4; ++k) {
    if (dims[k] == 0) continue;
    const EvenWeight sig = subspace_signature(hw, k);
    for (int m11 = sig.m12; m11 >= sig.m22; --m11) out.push_back({k, {sig, m11}});
  }
  return out;
}

int reduced_index(const Weight& hw, int k, int m11) {
  const auto dims = subspace_dims(hw);
  int offset = 0;
  for (int kk = 0; kk < k; ++kk) offset += dims[kk];
  return offset + (subspace_signature(hw, k).m12 - m11);
}

const char* to_string(TypicalityClass c) {
  switch (c) {
    case TypicalityClass::Typical: return "typical";
    case TypicalityClass::NonTypicalClass1: return "nontypical-class-1";
    case TypicalityClass::NonTypicalClass2: return "nontypical-class-2";
    case TypicalityClass::Unclassified: return "outside-classification";
  }
  return "?";
}

const char* to_string(BasisKind k) {
  switch (k) {
    case BasisKind::Reduced: return "reduced";
    case BasisKind::Induced: return "induced";
    case BasisKind::Factor: return "factor";
    case BasisKind::Tensor: return "tensor";
  }
  return "?";
}

TypicalityReport classify(const Weight& hw, const QContext& q) {
  if (!hw.dominant())
    throw std::domain_error("highest weight is not dominant (m13 < m23)");
  // The two atypicality brackets vanish iff their arguments do (generic
  // real q > 0), so the zero test is exact on the arguments.
  const double arg1 = hw.m13 + hw.m33 + 1.0;
  const double arg2 = hw.m23 + hw.m33;
  TypicalityReport r;
  r.bracket1 = q_number(arg1, q);
  r.bracket2 = q_number(arg2, q);
  const bool z1 = (arg1 == 0.0);
  const bool z2 = (arg2 == 0.0);

  const auto dims = subspace_dims(hw);
  auto block_indices = [&](int k) {
    std::vector<int> idx;
    int offset = 0;
    for (int kk = 0; kk < k; ++kk) offset += dims[kk];
    for (int t = 0; t < dims[k]; ++t) idx.push_back(offset + t);
    return idx;
  };

  if (!z1 && !z2) {
    r.cls = TypicalityClass::Typical;
  } else if (z1 && !z2) {
    r.cls = TypicalityClass::NonTypicalClass1;  // maximal subspace V3 + V2
    r.invariant_subspace = block_indices(2);
    for (int t : block_indices(3)) r.invariant_subspace.push_back(t);
  } else if (!z1 && z2) {
    r.cls = TypicalityClass::NonTypicalClass2;  // maximal subspace V3 + V1
    r.invariant_subspace = block_indices(1);
    for (int t : block_indices(3)) r.invariant_subspace.push_back(t);
  } else {
    r.cls = TypicalityClass::Unclassified;
  }
  return r;
}

Vector Representation::cartan_h1() const {
  return matrix(Gen::E11).diagonal() - matrix(Gen::E22).diagonal();
}

Vector Representation::cartan_h2() const {
  return matrix(Gen::E22).diagonal() + matrix(Gen::E33).diagonal();
}

Matrix q_cartan_power(const Representation& rep, double c1, double c2,
                      double c0) {
  const Vector h1 = rep.cartan_h1();
  const Vector h2 = rep.cartan_h2();
  const int n = rep.dim();
  Vector d(n);
  for (int t = 0; t < n; ++t)
    d(t) = q_power(c1 * h1(t) + c2 * h2(t) + c0, rep.q);
  return d.asDiagonal();
}

Matrix bracket_of_diagonal(const Vector& d, const QContext& q) {
  Vector b(d.size());
  for (int t = 0; t < d.size(); ++t) b(t) = q_number(d(t), q);
  return b.asDiagonal();
}

namespace {

struct Emitter {
  const Weight& hw;
  Matrix& target;

  /// Adds coeff at (V_k', m11') in the given column. Targets falling outside
  /// the subspace pattern range must carry an exactly vanishing coefficient;
  /// anything else is an internal consistency violation.
  void operator()(int k_to, int m11_to, int column, double coeff) const {
    if (coeff == 0.0) return;
    const EvenWeight sig = subspace_signature(hw, k_to);
    if (m11_to > sig.m12 || m11_to < sig.m22) {
      if (std::abs(coeff) > 1e-12)
        throw std::runtime_error(
            "nonzero matrix element points outside its target subspace");
      return;
    }
    target(reduced_index(hw, k_to, m11_to), column) += coeff;
  }
};

}  // namespace

BasisChange basis_change(const Weight& hw, const QContext& q,
                         const Normalization& a) {
  if (!hw.dominant())
    throw std::domain_error("highest weight is not dominant (m13 < m23)");
  const EvenWeight v0 = even_part(hw);
  const int dv = v0.dim();
  const int n = 4 * dv;
  const double l13 = l_of(1, hw.m13);
  const double l23 = l_of(2, hw.m23);
  const double c2l = q_number(hw.m13 - hw.m23, q);      // [2l]
  const double c2l1 = q_number(hw.m13 - hw.m23 + 1, q); // [2l+1]

  // Columns: each reduced vector expanded in the induced basis. Components
  // falling outside the V^q pattern range must come with an exactly
  // vanishing coefficient.
  Matrix r2i = Matrix::Zero(n, n);
  auto set_ind = [&](int t1, int t2, int m11, int column, double coeff) {
    if (coeff == 0.0) return;
    if (m11 > hw.m13 || m11 < hw.m23) {
      if (std::abs(coeff) > 1e-12)
        throw std::runtime_error(
            "nonzero basis-change coefficient outside the induced basis");
      return;
    }
    r2i(induced_index(hw, {t1, t2}, m11), column) = coeff;
  };
  for (const auto& bv : enumerate_reduced_basis(hw)) {
    const int c = reduced_index(hw, bv.k, bv.pattern.m11);
    const int m11 = bv.pattern.m11;
    const double l11 = l_of(1, m11);
    switch (bv.k) {
      case 0:
        set_ind(0, 0, m11, c, 1.0);
        break;
      case 1:
        set_ind(1, 0, m11 + 1, c,
                -a.a1 * std::sqrt(q_number(l13 - l11, q) / c2l1));
        set_ind(0, 1, m11, c,
                a.a1 * q_power(l11 - l13, q) *
                    std::sqrt(q_number(l11 - l23, q) / c2l1));
        break;
      case 2:
        set_ind(1, 0, m11 + 1, c,
                a.a2 * std::sqrt(q_number(l11 - l23, q) / c2l));
        set_ind(0, 1, m11, c,
                a.a2 * q_power(l11 - l23, q) *
                    std::sqrt(q_number(l13 - l11, q) / c2l));
        break;
      case 3:
        set_ind(1, 1, m11 + 1, c, a.a3);
        break;
    }
  }

  // Columns: each induced vector expanded in the reduced basis. Built from
  // its own closed form, independently of r2i.
  Matrix i2r = Matrix::Zero(n, n);
  const Emitter emit{hw, i2r};
  for (const auto& bv : enumerate_induced_basis(hw)) {
    const int c = induced_index(hw, bv.theta, bv.pattern.m11);
    const int m11 = bv.pattern.m11;
    const double l11 = l_of(1, m11);
    const int s = bv.theta.sector();
    if (s == 0) {
      emit(0, m11, c, 1.0);
    } else if (s == 1) {  // (0,1)
      emit(1, m11, c, std::sqrt(q_number(l11 - l23, q) / c2l1) / a.a1);
      emit(2, m11, c,
           std::sqrt(q_number(l13 - l11, q) * c2l) / c2l1 / a.a2);
    } else if (s == 2) {  // (1,0)
      emit(1, m11 - 1, c,
           -q_power(l11 - l23 - 1, q) *
               std::sqrt(q_number(l13 - l11 + 1, q) / c2l1) / a.a1);
      emit(2, m11 - 1, c,
           q_power(l11 - l13 - 1, q) *
               std::sqrt(q_number(l11 - l23 - 1, q) * c2l) / c2l1 / a.a2);
    } else {  // (1,1)
      emit(3, m11 - 1, c, 1.0 / a.a3);
    }
  }

  return {r2i, i2r};
}

namespace {

void check_finite(const Representation& rep) {
  for (const auto& m : rep.matrices)
    if (!m.allFinite())
      throw std::runtime_error("generator matrix contains a non-finite entry");
}

}  // namespace

Representation build_representation(const Weight& hw, const QContext& q,
                                    const Normalization& a) {
  Representation rep{hw, q, a, BasisKind::Reduced};
  rep.reduced_basis = enumerate_reduced_basis(hw);
  rep.classification = classify(hw, q);
  const auto dims = subspace_dims(hw);
  const int n = reduced_dim(hw);
  for (auto& m : rep.matrices) m = Matrix::Zero(n, n);
  rep.parities.reserve(n);
  for (const auto& bv : rep.reduced_basis)
    rep.parities.push_back(bv.k == 1 || bv.k == 2);

  // Even generators act inside each V_k through the pattern formulas of that
  // subspace's shifted signature.
  int offset = 0;
  for (int k = 0; k < 4; ++k) {
    if (dims[k] == 0) continue;
    const EvenWeight sig = subspace_signature(hw, k);
    for (Gen g : even_generators)
      rep.matrix(g).block(offset, offset, dims[k], dims[k]) =
          even_generator_matrix(g, sig, q);
    offset += dims[k];
  }

  // Odd generators: closed-form matrix elements. b1 and b2 are the two
  // typicality brackets; their vanishing is exactly what cuts the module.
  const double l13 = l_of(1, hw.m13);
  const double l23 = l_of(2, hw.m23);
  const double l33 = l_of(3, hw.m33);
  const double b1 = q_number(l13 + l33 + 3, q);
  const double b2 = q_number(l23 + l33 + 3, q);
  const double c2l = q_number(hw.m13 - hw.m23, q);
  const double c2l1 = q_number(hw.m13 - hw.m23 + 1, q);
  const double qq = q_power(1, q);

  Emitter e23{hw, rep.matrix(Gen::E23)};
  Emitter e32{hw, rep.matrix(Gen::E32)};
  Emitter e13{hw, rep.matrix(Gen::E13)};
  Emitter e31{hw, rep.matrix(Gen::E31)};

  for (const auto& bv : rep.reduced_basis) {
    const int c = reduced_index(hw, bv.k, bv.pattern.m11);
    const int m11 = bv.pattern.m11;
    const double l11 = l_of(1, m11);
    switch (bv.k) {
      case 0:
        e32(1, m11, c, std::sqrt(q_number(l11 - l23, q) / c2l1) / a.a1);
        e32(2, m11, c,
            std::sqrt(q_number(l13 - l11, q) * c2l) / c2l1 / a.a2);
        e31(1, m11 - 1, c,
            -q_power(l11 - l23 - 1, q) *
                std::sqrt(q_number(l13 - l11 + 1, q) / c2l1) / a.a1);
        e31(2, m11 - 1, c,
            q_power(l11 - l13 - 1, q) *
                std::sqrt(q_number(l11 - l23 - 1, q) * c2l) / c2l1 / a.a2);
        break;
      case 1:
        e23(0, m11, c, a.a1 * std::sqrt(q_number(l11 - l23, q) / c2l1) * b2);
        e32(3, m11, c,
            a.a1 * qq / a.a3 * std::sqrt(q_number(l13 - l11, q) / c2l1));
        e31(3, m11 - 1, c,
            a.a1 / a.a3 * q_power(l11 - l13, q) *
                std::sqrt(q_number(l11 - l23, q) / c2l1));
        e13(0, m11 + 1, c,
            -a.a1 * q_power(l23 - l11 - 1, q) *
                std::sqrt(q_number(l13 - l11, q) / c2l1) * b2);
        break;
      case 2:
        e23(0, m11, c, a.a2 * std::sqrt(q_number(l13 - l11, q) / c2l) * b1);
        e32(3, m11, c,
            -a.a2 * qq / a.a3 * std::sqrt(q_number(l11 - l23, q) / c2l));
        e31(3, m11 - 1, c,
            a.a2 / a.a3 * q_power(l11 - l23, q) *
                std::sqrt(q_number(l13 - l11, q) / c2l));
        e13(0, m11 + 1, c,
            a.a2 * q_power(l13 - l11 - 1, q) *
                std::sqrt(q_number(l11 - l23, q) / c2l) * b1);
        break;
      case 3:
        e23(1, m11, c,
            a.a3 / (a.a1 * qq) * std::sqrt(q_number(l13 - l11, q) / c2l1) *
                b1);
        e23(2, m11, c,
            -a.a3 / (a.a2 * qq) *
                std::sqrt(q_number(l11 - l23, q) * c2l) * b2 / c2l1);
        e13(1, m11 + 1, c,
            a.a3 / a.a1 * q_power(l13 - l11 - 2, q) *
                std::sqrt(q_number(l11 - l23 + 1, q) / c2l1) * b1);
        e13(2, m11 + 1, c,
            a.a3 / a.a2 * q_power(l23 - l11 - 2, q) *
                std::sqrt(q_number(l13 - l11 - 1, q) * c2l) * b2 / c2l1);
        break;
    }
  }

  check_finite(rep);
  return rep;
}

Representation induced_representation(const Weight& hw, const QContext& q,
                                      const Normalization& a) {
  Representation rep{hw, q, a, BasisKind::Induced};
  rep.induced_basis = enumerate_induced_basis(hw);
  rep.classification = classify(hw, q);
  for (Gen g : chevalley_generators)
    rep.matrix(g) = induced_action(g, hw, q);
  const double qi = q_power(-1, q);
  const Matrix& e12 = rep.matrix(Gen::E12);
  const Matrix& e21 = rep.matrix(Gen::E21);
  const Matrix& e23 = rep.matrix(Gen::E23);
  const Matrix& e32 = rep.matrix(Gen::E32);
  rep.matrix(Gen::E13) = e12 * e23 - qi * e23 * e12;
  rep.matrix(Gen::E31) = -(e21 * e32 - qi * e32 * e21);
  rep.parities.reserve(rep.induced_basis.size());
  for (const auto& bv : rep.induced_basis)
    rep.parities.push_back(bv.theta.parity());
  check_finite(rep);
  return rep;
}

Representation factor_representation(const Representation& rep) {
  if (rep.kind != BasisKind::Reduced)
    throw std::domain_error("factor modules are taken in the reduced basis");
  const auto& cls = rep.classification;
  if (cls.cls != TypicalityClass::NonTypicalClass1 &&
      cls.cls != TypicalityClass::NonTypicalClass2)
    throw std::domain_error("typical representations have no factor module");

  const int n = rep.dim();
  std::vector<int> keep;
  {
    std::set<int> drop(cls.invariant_subspace.begin(),
                       cls.invariant_subspace.end());
    for (int t = 0; t < n; ++t)
      if (!drop.count(t)) keep.push_back(t);
  }

  Representation out{rep.weight, rep.q, rep.a, BasisKind::Factor};
  out.classification = cls;
  out.classification.invariant_subspace.clear();
  for (int t : keep) {
    out.reduced_basis.push_back(rep.reduced_basis[t]);
    out.parities.push_back(rep.parities[t]);
  }
  for (int g = 0; g < 9; ++g) out.matrices[g] = rep.matrices[g](keep, keep);
  check_finite(out);
  return out;
}

IrreducibilityReport irreducibility_test(const Representation& rep,
                                         double tol) {
  const int n = rep.dim();
  IrreducibilityReport out;
  out.irreducible = true;
  const double accept = std::sqrt(tol);

  for (int seed = 0; seed < n; ++seed) {
    SpanBuilder span(n, tol, accept);
    span.add(Vector::Unit(n, seed));
    bool grew = true;
    bool borderline = false;
    while (grew && !span.full()) {
      grew = false;
      borderline = false;
      const Matrix basis = span.basis();
      for (Gen g : all_generators) {
        const Matrix image = rep.matrix(g) * basis;
        for (int c = 0; c < image.cols(); ++c) {
          const auto outcome = span.try_add(image.col(c));
          if (outcome == SpanBuilder::Outcome::Added) grew = true;
          if (outcome == SpanBuilder::Outcome::Borderline) borderline = true;
        }
      }
    }
    // a borderline residual only matters if it survives to the final sweep
    // of a closure that stopped short of the whole space
    if (!span.full() && borderline) out.inconclusive = true;
    if (!span.full()) {
      out.irreducible = false;
      InvariantSubspace sub{span.support(accept), span.rank()};
      bool known = false;
      for (const auto& s : out.proper_subspaces)
        if (s.support == sub.support) known = true;
      if (!known) out.proper_subspaces.push_back(std::move(sub));
    }
  }
  return out;
}

}  // namespace uqgl
