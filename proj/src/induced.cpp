#include "uqgl/induced.hpp"

#include <stdexcept>

namespace uqgl {

EvenWeight theta_sector_signature(const ThetaVector& t) {
  const int sgn = ((1 - t.theta1) * (1 - t.theta2)) % 2 ? -1 : 1;
  return {-t.theta1 * t.theta2, -(1 + sgn) / 2,
          static_cast<double>(t.theta1 + t.theta2)};
}

int theta_sector_component(const ThetaVector& t) {
  return t.theta1 + t.theta2;
}

GzPattern theta_sector_pattern(const ThetaVector& t) {
  return {theta_sector_signature(t), -t.theta1};
}

int theta_sector_sign(const ThetaVector& t) {
  return (t.theta1 * (t.theta2 + 1)) % 2 ? -1 : 1;
}

std::vector<InducedBasisVector> enumerate_induced_basis(const Weight& hw) {
  if (!hw.dominant())
    throw std::domain_error("highest weight is not dominant (m13 < m23)");
  const EvenWeight v0 = even_part(hw);
  std::vector<InducedBasisVector> out;
  out.reserve(induced_dim(hw));
  for (const auto& [t1, t2] : theta_order)
    for (int m11 = hw.m13; m11 >= hw.m23; --m11)
      out.push_back({{t1, t2}, {v0, m11}});
  return out;
}

int induced_index(const Weight& hw, const ThetaVector& t, int m11) {
  return t.sector() * (hw.m13 - hw.m23 + 1) + (hw.m13 - m11);
}

Matrix induced_action(Gen g, const Weight& hw, const QContext& q) {
  if (g == Gen::E13 || g == Gen::E31)
    throw std::domain_error(
        "composite generators act through products of Chevalley matrices");
  if (!hw.dominant())
    throw std::domain_error("highest weight is not dominant (m13 < m23)");

  const EvenWeight v0 = even_part(hw);
  const int dv = v0.dim();
  const int n = 4 * dv;
  const auto [i, j] = weyl_indices(g);

  const int di1j1 = (i == 1 && j == 1);
  const int di2j2 = (i == 2 && j == 2);
  const int di3j3 = (i == 3 && j == 3);
  const int di1j2 = (i == 1 && j == 2);
  const int di2j1 = (i == 2 && j == 1);
  const int di2j3 = (i == 2 && j == 3);
  const int di3j2 = (i == 3 && j == 2);

  const Matrix inner_e12 = even_generator_matrix(Gen::E12, v0, q);
  const Matrix inner_e21 = even_generator_matrix(Gen::E21, v0, q);

  Matrix M = Matrix::Zero(n, n);
  for (int t1 = 0; t1 <= 1; ++t1) {
    for (int t2 = 0; t2 <= 1; ++t2) {
      for (int m11 = hw.m13; m11 >= hw.m23; --m11) {
        const int c = induced_index(hw, {t1, t2}, m11);
        const int pc = pattern_index(v0, m11);
        const GzPattern p{v0, m11};
        const double h1 = h1_eigenvalue(p);
        const double h2 = h2_eigenvalue(p);

        // Generator carried through the monomial: q-power and sign twists,
        // an extra odd-lowering factor for E32, the inner pattern action for
        // the even generators. E23 cannot be carried: it annihilates V^q.
        if (!di2j3) {
          const double twist =
              q_power((di3j2 + di2j1) * t1 - di2j1 * t2, q) *
              ((di3j2 * t1) % 2 ? -1.0 : 1.0);
          const int nt2 = t2 + di3j2;
          if (nt2 <= 1) {
            if (g == Gen::E32) {
              M(induced_index(hw, {t1, nt2}, m11), c) += twist;
            } else if (g == Gen::E12) {
              if (m11 < hw.m13)
                M(induced_index(hw, {t1, nt2}, m11 + 1), c) +=
                    twist * inner_e12(pc - 1, pc);
            } else if (g == Gen::E21) {
              if (m11 > hw.m23)
                M(induced_index(hw, {t1, nt2}, m11 - 1), c) +=
                    twist * inner_e21(pc + 1, pc);
            } else {  // diagonal generator: eigenvalue on the pattern
              const double eig = (g == Gen::E11)  ? m11
                                 : (g == Gen::E22) ? v0.m12 + v0.m22 - m11
                                                   : p.m31();
              M(induced_index(hw, {t1, nt2}, m11), c) += twist * eig;
            }
          }
        }

        // Cartan charge of the monomial itself.
        if (i == j) {
          const double charge =
              di1j1 * t1 + di2j2 * t2 - di3j3 * (t1 + t2);
          M(c, c) -= charge;
        }

        // Exchange term flipping both sector bits (theta_3 = theta_2).
        {
          const int th[4] = {0, t1, t2, t2};
          const int flip = th[i] * (1 - th[j]);
          if (flip)
            M(induced_index(hw, {1 - t1, 1 - t2}, m11), c) -=
                flip * q_power(di1j2 * h1, q);
        }

        // E23 against a leading E31: lowering remainder plus sector swap.
        if (di2j3 && t1 == 1) {
          const double base = q_power(-1.0 - h2, q);
          if (m11 > hw.m23)
            M(induced_index(hw, {0, t2}, m11 - 1), c) +=
                base * q_power(-t2, q) * inner_e21(pc + 1, pc);
          if (t2)
            M(induced_index(hw, {1, 1 - t2}, m11), c) -= base;
        }

        // E23 against a leading E32: Cartan bracket remainder.
        if (di2j3 && t2 == 1) {
          M(induced_index(hw, {t1, 0}, m11), c) +=
              (t1 ? -1.0 : 1.0) * q_number(h2, q);
        }
      }
    }
  }
  return M;
}

}  // namespace uqgl
