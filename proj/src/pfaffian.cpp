// Pfaffian expansion, Bareiss determinant, sign-tracked pair swaps.
#include "matchings/pfaffian.hpp"

#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace matchings {

SkewMatrix::SkewMatrix(Matrix entries) : a_(std::move(entries)) {
  n_ = static_cast<int>(a_.size());
  if (n_ % 2 != 0) throw std::invalid_argument("skew matrix dimension must be even");
  for (int i = 0; i < n_; ++i) {
    if (static_cast<int>(a_[i].size()) != n_)
      throw std::invalid_argument("skew matrix must be square");
    if (!a_[i][i].is_zero())
      throw std::invalid_argument("skew matrix must have zero diagonal");
    for (int j = i + 1; j < n_; ++j)
      if (a_[i][j] != -a_[j][i])
        throw std::invalid_argument("matrix is not skew-symmetric");
  }
}

namespace {

ExactScalar pf_expand(const Matrix& a, std::uint64_t mask,
                      std::unordered_map<std::uint64_t, ExactScalar>& memo) {
  if (mask == 0) return 1;
  auto it = memo.find(mask);
  if (it != memo.end()) return it->second;
  int lead = 0;
  while (!((mask >> lead) & 1ull)) ++lead;
  std::uint64_t rest0 = mask & ~(1ull << lead);
  ExactScalar total = 0;
  int sign = 1;
  for (int j = lead + 1; j < 64; ++j) {
    if (!((rest0 >> j) & 1ull)) continue;
    if (!a[lead][j].is_zero()) {
      ExactScalar term = a[lead][j] * pf_expand(a, rest0 & ~(1ull << j), memo);
      total += (sign > 0) ? term : -term;
    }
    sign = -sign;
  }
  memo.emplace(mask, total);
  return total;
}

}  // namespace

ExactScalar pfaffian(const SkewMatrix& A) {
  const int n = A.dim();
  if (n == 0) return 1;
  if (n > 64) throw std::invalid_argument("pfaffian limited to dimension 64");
  std::unordered_map<std::uint64_t, ExactScalar> memo;
  std::uint64_t full = (n == 64) ? ~0ull : ((1ull << n) - 1);
  return pf_expand(A.entries(), full, memo);
}

ExactScalar determinant(const Matrix& M) {
  const int n = static_cast<int>(M.size());
  for (const auto& row : M)
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("determinant requires a square matrix");
  if (n == 0) return 1;
  Matrix a = M;
  ExactScalar sign = 1;
  ExactScalar prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      int pivot = -1;
      for (int r = k + 1; r < n; ++r)
        if (!a[r][k].is_zero()) {
          pivot = r;
          break;
        }
      if (pivot < 0) return 0;
      std::swap(a[k], a[pivot]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

std::pair<SkewMatrix, int> swap_pair(const SkewMatrix& A, int i, int j) {
  const int n = A.dim();
  if (i < 0 || j < 0 || i >= n || j >= n) throw std::invalid_argument("index out of range");
  if (i == j) throw std::invalid_argument("swap indices must differ");
  Matrix a = A.entries();
  std::swap(a[i], a[j]);
  for (int r = 0; r < n; ++r) std::swap(a[r][i], a[r][j]);
  return {SkewMatrix(std::move(a)), -1};
}

ExactScalar pfaffian_block(const Matrix& B) {
  const int k = static_cast<int>(B.size());
  for (const auto& row : B)
    if (static_cast<int>(row.size()) != k)
      throw std::invalid_argument("pfaffian_block requires a square block");
  ExactScalar det = determinant(B);
  return ((k * (k - 1) / 2) % 2 == 0) ? det : -det;
}

}  // namespace matchings
