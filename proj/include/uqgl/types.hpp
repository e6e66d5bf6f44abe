#pragma once

#include <Eigen/Dense>

#include <array>
#include <optional>
#include <string_view>

namespace uqgl {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Generator labels of U_q[gl(2/1)] in the Weyl basis. The first seven are
/// the Weyl-Chevalley generators; E13 and E31 are the composite odd
/// generators obtained from q-deformed commutators of the Chevalley ones.
enum class Gen : int { E11, E22, E33, E12, E21, E23, E32, E13, E31 };

inline constexpr std::array<Gen, 9> all_generators = {
    Gen::E11, Gen::E22, Gen::E33, Gen::E12, Gen::E21,
    Gen::E23, Gen::E32, Gen::E13, Gen::E31};

inline constexpr std::array<Gen, 7> chevalley_generators = {
    Gen::E11, Gen::E22, Gen::E33, Gen::E12, Gen::E21, Gen::E23, Gen::E32};

inline constexpr std::array<Gen, 5> even_generators = {
    Gen::E11, Gen::E22, Gen::E33, Gen::E12, Gen::E21};

constexpr int index_of(Gen g) { return static_cast<int>(g); }

/// Z2-grading of the superalgebra: generators moving between the gl(2) and
/// gl(1) blocks are odd, everything else is even.
constexpr bool is_odd(Gen g) {
  return g == Gen::E23 || g == Gen::E32 || g == Gen::E13 || g == Gen::E31;
}

/// Row/column indices (i, j) of the Weyl label E_ij.
constexpr std::pair<int, int> weyl_indices(Gen g) {
  switch (g) {
    case Gen::E11: return {1, 1};
    case Gen::E22: return {2, 2};
    case Gen::E33: return {3, 3};
    case Gen::E12: return {1, 2};
    case Gen::E21: return {2, 1};
    case Gen::E23: return {2, 3};
    case Gen::E32: return {3, 2};
    case Gen::E13: return {1, 3};
    case Gen::E31: return {3, 1};
  }
  return {0, 0};
}

const char* to_string(Gen g);
std::optional<Gen> parse_generator(std::string_view name);

/// Highest weight [m13, m23, m33] labelling an induced module W^q.
/// The gl(2) part must be dominant (m13 >= m23) for finite dimension;
/// the gl(1) label m33 may be any real number.
struct Weight {
  int m13 = 0;
  int m23 = 0;
  double m33 = 0.0;

  bool dominant() const { return m13 >= m23; }
  friend bool operator==(const Weight&, const Weight&) = default;
};

/// Highest weight [m12, m22, m32] of an even-subalgebra module
/// (a gl(2) signature together with the gl(1) factor).
struct EvenWeight {
  int m12 = 0;
  int m22 = 0;
  double m32 = 0.0;

  bool dominant() const { return m12 >= m22; }
  int dim() const { return m12 - m22 + 1; }
  friend bool operator==(const EvenWeight&, const EvenWeight&) = default;
};

/// Gel'fand-Zetlin pattern of U_q[gl(2) + gl(1)]: the even signature plus the
/// free label m11 with m22 <= m11 <= m12. The gl(1) row repeats the factor
/// (m31 = m32), so it is not stored separately.
struct GzPattern {
  EvenWeight top;
  int m11 = 0;

  double m31() const { return top.m32; }
  bool valid() const { return top.m22 <= m11 && m11 <= top.m12; }
  friend bool operator==(const GzPattern&, const GzPattern&) = default;
};

/// Free scale constants (a1, a2, a3) attached to the three lowered subspaces
/// of the reduced basis. Any nonzero values give equivalent modules.
struct Normalization {
  double a1 = 1.0;
  double a2 = 1.0;
  double a3 = 1.0;
};

/// Shifted pattern label l = m - (i - 2*delta_{i,3}) for a label sitting in
/// Weyl row i. Concretely l = m - 1 on rows 1 and 3, l = m - 2 on row 2.
constexpr double l_of(int row, double m) { return m - (row - 2 * (row == 3)); }

}  // namespace uqgl
