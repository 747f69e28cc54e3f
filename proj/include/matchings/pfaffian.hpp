// Exact Pfaffians and determinants of ExactScalar matrices.
#pragma once

#include <utility>
#include <vector>

#include "matchings/scalar.hpp"

namespace matchings {

using Matrix = std::vector<std::vector<ExactScalar>>;

// Skew-symmetric matrix of even dimension; construction validates the shape,
// the zero diagonal, and A[i][j] == -A[j][i].
class SkewMatrix {
 public:
  explicit SkewMatrix(Matrix entries);
  int dim() const { return n_; }
  const ExactScalar& at(int i, int j) const { return a_.at(i).at(j); }
  const Matrix& entries() const { return a_; }

 private:
  Matrix a_;
  int n_ = 0;
};

// Pfaffian by the memoized row-one expansion
// Pf(A) = sum_{i>0} (-1)^i A[0][s_i] Pf(A without rows/cols 0, s_i); Pf of the
// empty matrix is 1.  Satisfies Pf(A)^2 = det(A).
ExactScalar pfaffian(const SkewMatrix& A);

// Exact determinant by fraction-free (Bareiss) elimination; det of the empty
// matrix is 1.
ExactScalar determinant(const Matrix& M);

// Simultaneous interchange of rows i,j and columns i,j.  Returns the swapped
// matrix and the Pfaffian sign factor, always -1.
std::pair<SkewMatrix, int> swap_pair(const SkewMatrix& A, int i, int j);

// Pfaffian of [[0, B], [-B^T, 0]] for a square block B, computed as
// (-1)^{k(k-1)/2} det(B).
ExactScalar pfaffian_block(const Matrix& B);

}  // namespace matchings
