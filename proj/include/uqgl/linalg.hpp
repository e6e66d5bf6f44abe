#pragma once

#include "uqgl/types.hpp"

#include <vector>

namespace uqgl {

/// Orthonormal basis of ker(A), columns of the returned matrix. Singular
/// values below rel_tol * max(sigma_max, 1) count as zero.
Matrix nullspace(const Matrix& A, double rel_tol = 1e-9);

/// Kronecker product, row-major pair indexing: (ia*nB+ib, ja*nB+jb).
Matrix kronecker(const Matrix& A, const Matrix& B);

double max_abs(const Matrix& A);

/// Entrywise deviation, absolute for magnitudes up to 1e3 and relative
/// beyond: |a - b| / max(1, max(|a|,|b|) / 1e3). Large entries (q-numbers
/// grow exponentially in the weight) are thereby compared relatively.
double entry_deviation(double a, double b);
double max_deviation(const Matrix& A, const Matrix& B);

/// Deviation of L from R measured against an explicit magnitude scale, for
/// residuals of products: cancellation leaves roundoff proportional to the
/// intermediate terms, not to the (often zero) result. Absolute while the
/// scale stays below 1e3, relative to the scale beyond:
/// max |L - R| / max(1, max(scale, |L|, |R|) / 1e3).
double scaled_deviation(const Matrix& L, const Matrix& R, double scale);

/// Incremental orthonormal span with a banded rank decision: residual norms
/// below `drop` count as dependent, above `accept` as independent, anything
/// in between is reported as borderline and left out.
class SpanBuilder {
 public:
  enum class Outcome { Added, Dependent, Borderline };

  SpanBuilder(int dim, double drop, double accept);

  Outcome try_add(const Vector& v);
  /// Returns true if v enlarged the span.
  bool add(const Vector& v) { return try_add(v) == Outcome::Added; }

  int rank() const { return rank_; }
  bool full() const { return rank_ == dim_; }
  /// dim x rank matrix with orthonormal columns.
  Matrix basis() const;
  /// Row indices where the span has components above the threshold.
  std::vector<int> support(double threshold) const;

 private:
  int dim_;
  int rank_ = 0;
  double drop_;
  double accept_;
  Matrix cols_;
};

}  // namespace uqgl
