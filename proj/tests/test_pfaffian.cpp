// Pfaffians, determinants, pair swaps, block forms.
#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "matchings/pfaffian.hpp"

using namespace matchings;

namespace {
Matrix skew_from_upper(int n, const std::vector<long>& upper) {
  Matrix m(n, std::vector<ExactScalar>(n, ExactScalar(0)));
  std::size_t at = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      m[i][j] = ExactScalar(upper[at]);
      m[j][i] = -m[i][j];
      ++at;
    }
  return m;
}
}  // namespace

TEST_CASE("pfaffian basics") {
  CHECK_EQ(pfaffian(SkewMatrix(Matrix{})).str(), "1");
  SkewMatrix two(skew_from_upper(2, {5}));
  CHECK_EQ(pfaffian(two).str(), "5");
  SkewMatrix four(skew_from_upper(4, {1, 2, 3, 4, 5, 6}));
  CHECK_EQ(pfaffian(four).str(), "8");  // 1*6 - 2*5 + 3*4
}

TEST_CASE("skew-matrix validation") {
  CHECK_THROWS_AS(SkewMatrix(Matrix{{ExactScalar(0)}}), std::invalid_argument);
  Matrix bad = skew_from_upper(2, {3});
  bad[0][0] = ExactScalar(1);
  CHECK_THROWS_AS(SkewMatrix{bad}, std::invalid_argument);
  Matrix notskew = skew_from_upper(2, {3});
  notskew[1][0] = ExactScalar(3);
  CHECK_THROWS_AS(SkewMatrix{notskew}, std::invalid_argument);
}

TEST_CASE("pfaffian squares to the determinant") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> w(-9, 9);
  for (int n : {2, 4, 6, 8}) {
    std::vector<long> upper(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (auto& x : upper) x = w(rng);
    SkewMatrix A(skew_from_upper(n, upper));
    ExactScalar pf = pfaffian(A);
    CHECK_EQ((pf * pf).str(), determinant(A.entries()).str());
  }
}

TEST_CASE("determinants") {
  CHECK_EQ(determinant(Matrix{}).str(), "1");
  Matrix m = {{ExactScalar(1), ExactScalar(2)}, {ExactScalar(3), ExactScalar(4)}};
  CHECK_EQ(determinant(m).str(), "-2");
  Matrix id3(3, std::vector<ExactScalar>(3, ExactScalar(0)));
  for (int i = 0; i < 3; ++i) id3[i][i] = ExactScalar(1);
  CHECK_EQ(determinant(id3).str(), "1");
  Matrix sing = {{ExactScalar(1), ExactScalar(2)}, {ExactScalar(2), ExactScalar(4)}};
  CHECK_EQ(determinant(sing).str(), "0");
  Matrix rat = {{ExactScalar::from_ratio(1, 2), ExactScalar(1)},
                {ExactScalar(1), ExactScalar(2)}};
  CHECK_EQ(determinant(rat).str(), "0");
}

TEST_CASE("pair swap flips the sign") {
  SkewMatrix A(skew_from_upper(4, {1, 2, 3, 4, 5, 6}));
  auto [B, sign] = swap_pair(A, 1, 2);
  CHECK_EQ(sign, -1);
  CHECK_EQ(pfaffian(B).str(), (-pfaffian(A)).str());
  CHECK_EQ(B.at(0, 1).str(), A.at(0, 2).str());
}

TEST_CASE("block pfaffian") {
  Matrix B = {{ExactScalar(1), ExactScalar(2)}, {ExactScalar(3), ExactScalar(4)}};
  CHECK_EQ(pfaffian_block(B).str(), "2");  // -det for k = 2

  // Against the explicit [[0, B], [-B^T, 0]] matrix for a 3x3 block.
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> w(-9, 9);
  Matrix C(3, std::vector<ExactScalar>(3));
  for (auto& row : C)
    for (auto& x : row) x = ExactScalar(w(rng));
  Matrix big(6, std::vector<ExactScalar>(6, ExactScalar(0)));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      big[i][3 + j] = C[i][j];
      big[3 + j][i] = -C[i][j];
    }
  CHECK_EQ(pfaffian_block(C).str(), pfaffian(SkewMatrix(big)).str());
}
