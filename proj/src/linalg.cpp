#include "uqgl/linalg.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <stdexcept>

namespace uqgl {

Matrix nullspace(const Matrix& A, double rel_tol) {
  if (A.cols() == 0) return Matrix::Zero(0, 0);
  Eigen::JacobiSVD<Matrix> svd(A, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cut = rel_tol * std::max(sv.size() > 0 ? sv(0) : 0.0, 1.0);
  int rank = 0;
  for (int t = 0; t < sv.size(); ++t)
    if (sv(t) > cut) ++rank;
  const int nullity = static_cast<int>(A.cols()) - rank;
  return svd.matrixV().rightCols(nullity);
}

Matrix kronecker(const Matrix& A, const Matrix& B) {
  Matrix out(A.rows() * B.rows(), A.cols() * B.cols());
  for (int ia = 0; ia < A.rows(); ++ia)
    for (int ja = 0; ja < A.cols(); ++ja)
      out.block(ia * B.rows(), ja * B.cols(), B.rows(), B.cols()) =
          A(ia, ja) * B;
  return out;
}

double max_abs(const Matrix& A) {
  return A.size() == 0 ? 0.0 : A.cwiseAbs().maxCoeff();
}

double entry_deviation(double a, double b) {
  const double mag = std::max(std::abs(a), std::abs(b));
  return std::abs(a - b) / std::max(1.0, mag / 1e3);
}

double max_deviation(const Matrix& A, const Matrix& B) {
  if (A.rows() != B.rows() || A.cols() != B.cols())
    throw std::invalid_argument("deviation of mismatched matrix shapes");
  double dev = 0.0;
  for (int j = 0; j < A.cols(); ++j)
    for (int i = 0; i < A.rows(); ++i)
      dev = std::max(dev, entry_deviation(A(i, j), B(i, j)));
  return dev;
}

double scaled_deviation(const Matrix& L, const Matrix& R, double scale) {
  if (L.rows() != R.rows() || L.cols() != R.cols())
    throw std::invalid_argument("deviation of mismatched matrix shapes");
  const double s =
      std::max(1.0, std::max({scale, max_abs(L), max_abs(R)}) / 1e3);
  return (L - R).cwiseAbs().maxCoeff() / s;
}

SpanBuilder::SpanBuilder(int dim, double drop, double accept)
    : dim_(dim), drop_(drop), accept_(accept), cols_(Matrix::Zero(dim, dim)) {}

SpanBuilder::Outcome SpanBuilder::try_add(const Vector& v) {
  if (rank_ == dim_) return Outcome::Dependent;
  const double scale = v.norm();
  if (scale == 0.0) return Outcome::Dependent;
  Vector r = v;
  // two projection passes keep the basis orthonormal to working precision
  for (int pass = 0; pass < 2; ++pass)
    if (rank_ > 0)
      r -= cols_.leftCols(rank_) * (cols_.leftCols(rank_).transpose() * r);
  const double resid = r.norm() / scale;
  if (resid < drop_) return Outcome::Dependent;
  if (resid < accept_) return Outcome::Borderline;
  cols_.col(rank_++) = r / r.norm();
  return Outcome::Added;
}

Matrix SpanBuilder::basis() const { return cols_.leftCols(rank_); }

std::vector<int> SpanBuilder::support(double threshold) const {
  std::vector<int> rows;
  if (rank_ == 0) return rows;
  for (int i = 0; i < dim_; ++i)
    if (cols_.leftCols(rank_).row(i).cwiseAbs().maxCoeff() > threshold)
      rows.push_back(i);
  return rows;
}

}  // namespace uqgl
