// Condensation matrices and the identity verifiers on hand-built graphs.
#include <doctest.h>

#include <stdexcept>
#include <utility>
#include <vector>

#include "helpers.hpp"
#include "matchings/condensation.hpp"

using namespace matchings;
using test_helpers::cycle_graph;
using test_helpers::path_graph;

namespace {
// 6-cycle c0..c5 plus a degree-1 vertex p attached to c0.
WeightedPlanarGraph pendant_cycle() {
  std::vector<std::string> ids = {"c0", "c1", "c2", "c3", "c4", "c5", "p"};
  std::vector<EdgeSpec> edges;
  for (int i = 0; i < 6; ++i)
    edges.push_back({ids[i], ids[(i + 1) % 6], ExactScalar(1)});
  edges.push_back({"c0", "p", ExactScalar(1)});
  std::vector<std::vector<int>> rot = {{5, 0, 6}, {0, 1}, {1, 2}, {2, 3},
                                       {3, 4},    {4, 5}, {6}};
  return build_graph(ids, edges, rot);
}
}  // namespace

TEST_CASE("condensation matrix of the unit 4-cycle") {
  WeightedPlanarGraph g = cycle_graph({1, 1, 1, 1});
  SkewMatrix A = condensation_matrix(g, {0, 1, 2, 3});
  const long expect[4][4] = {
      {0, 1, 0, 1}, {-1, 0, 1, 0}, {0, -1, 0, 1}, {-1, 0, -1, 0}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK_EQ(A.at(i, j).str(), ExactScalar(expect[i][j]).str());
  CHECK_EQ(pfaffian(A).str(), "2");
}

TEST_CASE("marked 2k-tuple identity on cycles") {
  WeightedPlanarGraph g4 = cycle_graph({2, 3, 5, 7});
  CHECK(verify_theorem_2_1(g4, {0, 1, 2, 3}).is_zero());
  CHECK(verify_theorem_2_1(g4, {0, 1}).is_zero());

  WeightedPlanarGraph g6 = cycle_graph({2, -3, 5, 7, 1, 4});
  CHECK(verify_theorem_2_1(g6, {0, 3}).is_zero());
  CHECK(verify_theorem_2_1(g6, {0, 1, 3, 4}).is_zero());
  CHECK(verify_theorem_2_1(g6, {0, 1, 2, 3, 4, 5}).is_zero());

  CondensationOptions oracle_opt;
  oracle_opt.use_oracle = true;
  CHECK(verify_theorem_2_1(g4, {0, 1, 2, 3}, oracle_opt).is_zero());
}

TEST_CASE("two-sided expansion of the identity") {
  WeightedPlanarGraph g4 = cycle_graph({2, 3, 5, 7});
  auto [l1, r1] = verify_prop_2_2(g4, {0, 1});
  CHECK_EQ(l1.str(), r1.str());
  CHECK_EQ(l1.str(), "155");  // 31 * 5 at k = 1

  WeightedPlanarGraph g6 = cycle_graph({2, -3, 5, 7, 1, 4});
  auto [l2, r2] = verify_prop_2_2(g6, {0, 2, 3, 5});
  CHECK_EQ(l2.str(), r2.str());
}

TEST_CASE("bipartite determinant form") {
  WeightedPlanarGraph g4 = cycle_graph({2, 3, 5, 7});
  CHECK(verify_corollary_2_4(g4, {0}, {1}).is_zero());

  WeightedPlanarGraph g6 = cycle_graph({2, -3, 5, 7, 1, 4});
  // Ascending boundary marks (v0, v2, v3, v5) have colors (0,0,1,1), so
  // a = (v0, v2) and reading the tail backwards gives b = (v5, v3).
  CHECK(verify_corollary_2_4(g6, {0, 2}, {5, 3}).is_zero());

  // Same color class on both sides violates the hypothesis.
  CHECK_THROWS_AS(verify_corollary_2_4(g4, {0}, {2}), std::invalid_argument);
  // Odd graphs cannot have equal color classes.
  CHECK_THROWS_AS(verify_corollary_2_4(path_graph(3), {0}, {1}),
                  std::invalid_argument);
}

TEST_CASE("four-point identities") {
  WeightedPlanarGraph g4 = cycle_graph({2, 3, 5, 7});
  CHECK(verify_kuo_4pt(g4, 0, 1, 2, 3, KuoVariant::bipartite).is_zero());
  CHECK(verify_kuo_4pt(g4, 0, 1, 2, 3, KuoVariant::general).is_zero());
  CHECK_THROWS_AS(verify_kuo_4pt(g4, 0, 2, 1, 3, KuoVariant::bipartite),
                  std::invalid_argument);

  WeightedPlanarGraph g6 = cycle_graph({2, -3, 5, 7, 1, 4});
  CHECK(verify_kuo_4pt(g6, 0, 1, 2, 3, KuoVariant::bipartite).is_zero());
  // Colors (0,0,1,1): the subtracted cross term is the nonvanishing one.
  CHECK(verify_kuo_4pt(g6, 0, 2, 3, 5, KuoVariant::general).is_zero());
}

TEST_CASE("unbalanced three-term identity") {
  WeightedPlanarGraph p5 = path_graph(5);
  // Color classes {v0, v2, v4} and {v1, v3}; boundary order is the path order.
  CHECK(verify_kuo_unbalanced(p5, 0, 2, 4, 3).is_zero());
  CHECK_THROWS_AS(verify_kuo_unbalanced(path_graph(4), 0, 2, 1, 3),
                  std::invalid_argument);
}

TEST_CASE("pending-edge marks validate and verify in both orders") {
  WeightedPlanarGraph g = pendant_cycle();
  const int p = 6;
  for (std::vector<int> marked :
       {std::vector<int>{0, p}, std::vector<int>{p, 0},
        std::vector<int>{0, p, 2, 4}, std::vector<int>{p, 0, 2, 4}}) {
    CHECK(validate_cyclic_order({&g, marked, std::nullopt}).has_value());
    CHECK(verify_theorem_2_1(g, marked).is_zero());
  }
}

TEST_CASE("block reordering of the checkerboard matrix") {
  WeightedPlanarGraph g = cycle_graph({1, 1, 1, 1});
  SkewMatrix A = condensation_matrix(g, {0, 1, 2, 3});
  BlockSplit split = block_reorder(A, {0, 2}, {1, 3});
  CHECK_EQ(split.sign, -1);
  ExactScalar via = ExactScalar(split.sign) * pfaffian_block(split.block);
  CHECK_EQ(via.str(), pfaffian(A).str());
  CHECK_EQ(via.str(), "2");
}
