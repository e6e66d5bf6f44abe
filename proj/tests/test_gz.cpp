#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "uqgl/gz.hpp"
#include "uqgl/linalg.hpp"
#include "uqgl/rep.hpp"

#include <cmath>
#include <stdexcept>

using namespace uqgl;

TEST_CASE("pattern enumeration") {
  const auto two = enumerate_patterns({1, 0, 0.0});
  REQUIRE(two.size() == 2);
  CHECK(two[0].m11 == 1);  // highest weight first
  CHECK(two[1].m11 == 0);

  CHECK(enumerate_patterns({5, 5, 0.0}).size() == 1);
  CHECK(enumerate_patterns({3, 0, 2.0}).size() == 4);
  CHECK_THROWS_AS(enumerate_patterns({0, 1, 0.0}), std::domain_error);
}

TEST_CASE("shifted labels") {
  const GzPattern p{{4, -1, 2.5}, 3};
  const auto l = LShift::of(p);
  CHECK(l.l12 == 3.0);   // row 1 offset -1
  CHECK(l.l22 == -3.0);  // row 2 offset -2
  CHECK(l.l11 == 2.0);
  CHECK(l.l31 == 1.5);   // row 3 offset -1
}

TEST_CASE("generator matrices on the 2-dimensional module") {
  const QContext q(1.7);
  const EvenWeight hw{1, 0, 0.0};

  const Matrix e11 = even_generator_matrix(Gen::E11, hw, q);
  CHECK(e11(0, 0) == doctest::Approx(1.0));
  CHECK(e11(1, 1) == doctest::Approx(0.0));

  // raising annihilates the top pattern, and acts with ([1][1])^{1/2} = 1
  // on the bottom one
  const Matrix e12 = even_generator_matrix(Gen::E12, hw, q);
  CHECK(e12.col(0).norm() == doctest::Approx(0.0));
  CHECK(e12(0, 1) == doctest::Approx(1.0));

  CHECK_THROWS_AS(even_generator_matrix(Gen::E23, hw, q), std::domain_error);
}

TEST_CASE("cartan eigenvalues on the highest-weight vector") {
  const QContext q(0.5);
  for (const EvenWeight hw :
       {EvenWeight{3, 0, 2.0}, EvenWeight{5, -2, -1.5}, EvenWeight{2, 2, 0.25}}) {
    const Matrix e11 = even_generator_matrix(Gen::E11, hw, q);
    const Matrix e22 = even_generator_matrix(Gen::E22, hw, q);
    const Matrix e33 = even_generator_matrix(Gen::E33, hw, q);
    CHECK(e11(0, 0) == doctest::Approx(hw.m12));
    CHECK(e22(0, 0) == doctest::Approx(hw.m22));
    CHECK(e33(0, 0) == doctest::Approx(hw.m32));
  }
}

TEST_CASE("lowering and raising are mutual transposes for real q") {
  for (double qv : {0.5, 1.7}) {
    const QContext q(qv);
    for (int d = 0; d <= 10; ++d) {
      const EvenWeight hw{d - 3, -3, 1.0};
      const Matrix e12 = even_generator_matrix(Gen::E12, hw, q);
      const Matrix e21 = even_generator_matrix(Gen::E21, hw, q);
      CHECK(max_deviation(e21, e12.transpose()) < 1e-12);
    }
  }
}

TEST_CASE("sl2 commutation relations as matrix identities") {
  for (double qv : {0.5, 1.7}) {
    const QContext q(qv);
    for (int d = 0; d <= 10; ++d) {
      const EvenWeight hw{d, 0, 0.75};
      const Matrix e11 = even_generator_matrix(Gen::E11, hw, q);
      const Matrix e22 = even_generator_matrix(Gen::E22, hw, q);
      const Matrix e33 = even_generator_matrix(Gen::E33, hw, q);
      const Matrix e12 = even_generator_matrix(Gen::E12, hw, q);
      const Matrix e21 = even_generator_matrix(Gen::E21, hw, q);

      // [E12, E21] = [H1] with H1 = E11 - E22
      const Vector h1 = e11.diagonal() - e22.diagonal();
      CHECK(max_deviation(e12 * e21 - e21 * e12,
                          bracket_of_diagonal(h1, q)) < 1e-9);

      // Cartan generators commute, and weight the ladder operators
      CHECK(max_deviation(e11 * e22 - e22 * e11,
                          Matrix::Zero(e11.rows(), e11.cols())) < 1e-12);
      CHECK(max_deviation(e11 * e12 - e12 * e11, e12) < 1e-9);
      CHECK(max_deviation(e22 * e12 - e12 * e22, Matrix(-e12)) < 1e-9);
      CHECK(max_deviation(e33 * e12 - e12 * e33,
                          Matrix::Zero(e11.rows(), e11.cols())) < 1e-12);
      CHECK(max_deviation(e11 * e21 - e21 * e11, Matrix(-e21)) < 1e-9);
      CHECK(max_deviation(e22 * e21 - e21 * e22, e21) < 1e-9);
    }
  }
}

TEST_CASE("lowering chain rebuilds every pattern vector") {
  const QContext q(1.7);

  // one lowering with unit prefactor lands exactly on the m11 = 0 vector
  {
    const EvenWeight hw{1, 0, 0.0};
    const Matrix e21 = even_generator_matrix(Gen::E21, hw, q);
    const Vector v = e21 * Vector::Unit(2, 0);
    CHECK(v(1) == doctest::Approx(1.0));
    const auto report = lowering_chain(hw, q);
    CHECK(report.pass);
  }

  // degenerate range: zero-power chain is the identity
  CHECK(lowering_chain({4, 4, 1.0}, q).max_deviation == doctest::Approx(0.0));

  // middle pattern of [2,0] via one lowering, compared against the matrix
  {
    const EvenWeight hw{2, 0, 0.0};
    const Matrix e21 = even_generator_matrix(Gen::E21, hw, q);
    const double pre = std::sqrt(q_factorial(1, q) /
                                 (q_factorial(2, q) * q_factorial(1, q)));
    const Vector mid = pre * (e21 * Vector::Unit(3, 0));
    CHECK((mid - Vector::Unit(3, 1)).norm() < 1e-12);
  }

  for (double qv : {0.5, 1.7})
    for (int d = 0; d <= 10; ++d)
      CHECK(lowering_chain({d - 2, -2, 0.5}, QContext(qv)).pass);
}
