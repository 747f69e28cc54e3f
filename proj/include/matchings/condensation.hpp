// Condensation matrices of matching counts and the identity verifiers.
#pragma once

#include <utility>
#include <vector>

#include "matchings/graph.hpp"
#include "matchings/matching.hpp"
#include "matchings/pfaffian.hpp"

namespace matchings {

struct CondensationOptions {
  bool use_oracle = false;  // count entries with the reference recursion
  MatchingOptions matching = MatchingOptions::from_env();
};

// Matching count dispatcher shared by the verifiers.
ExactScalar count_matchings(const WeightedPlanarGraph& g,
                            const CondensationOptions& opt = {});

// 2k x 2k skew matrix with upper entries M(G minus {a_i, a_j}) for i < j.
// marked must be distinct vertex indices of even count >= 2; the cyclic-order
// hypothesis is the caller's responsibility (validate_cyclic_order checks it).
SkewMatrix condensation_matrix(const WeightedPlanarGraph& g,
                               const std::vector<int>& marked,
                               const CondensationOptions& opt = {});

// Residual of the 2k-point identity:
//   M(G)^{k-1} M(G minus all marked) - Pf(condensation matrix); 0 when the
// marked vertices lie in cyclic order on a face.
ExactScalar verify_theorem_2_1(const WeightedPlanarGraph& g,
                               const std::vector<int>& marked,
                               const CondensationOptions& opt = {});

// Both sides of the two-sum form over complementary pair deletions:
//   lhs = M(G) M(G minus all) + sum over odd j >= 3 of term_j,
//   rhs = sum over even j of term_j,
// where term_j = M(G minus {a_1,a_j}) M(G minus the complementary 2k-2 marks).
std::pair<ExactScalar, ExactScalar> verify_prop_2_2(const WeightedPlanarGraph& g,
                                                    const std::vector<int>& marked,
                                                    const CondensationOptions& opt = {});

// Residual of the bipartite determinant identity:
//   M(G)^{k-1} M(G minus all) - det[ M(G minus {a_i, b_j}) ]_{i,j}.
// Requires a bipartite graph with equal color classes, all as in one class and
// all bs in the other; marked order (a_1..a_k, b_k..b_1) cyclic on a face.
ExactScalar verify_corollary_2_4(const WeightedPlanarGraph& g,
                                 const std::vector<int>& as,
                                 const std::vector<int>& bs,
                                 const CondensationOptions& opt = {});

enum class KuoVariant { bipartite, general };

// Residual of the four-point condensation identity on cyclic (a,b,c,d):
//   bipartite: M(G)M(G-abcd) - M(G-ab)M(G-cd) - M(G-ad)M(G-bc)
//   general:   adds + M(G-ac)M(G-bd) to the subtracted side.
ExactScalar verify_kuo_4pt(const WeightedPlanarGraph& g, int a, int b, int c, int d,
                           KuoVariant variant, const CondensationOptions& opt = {});

// Residual of the unbalanced bipartite four-point identity
//   M(G-b)M(G-acd) - M(G-a)M(G-bcd) - M(G-c)M(G-abd)
// for |V1| = |V2|+1 with a,b,c in V1 and d in V2.
ExactScalar verify_kuo_unbalanced(const WeightedPlanarGraph& g, int a, int b, int c,
                                  int d, const CondensationOptions& opt = {});

struct BlockSplit {
  Matrix block;  // k x k top-right block after reordering (entries keep signs)
  int sign;      // permutation sign of the reordering
};

// Reorders a skew matrix with the bipartite checkerboard zero pattern into
// [[0, B], [-B^T, 0]] by listing `rows` then `cols`.  Returns B and the
// Pfaffian sign of the reordering permutation, so that
//   Pf(A) = sign * (-1)^{k(k-1)/2} * det(B).
BlockSplit block_reorder(const SkewMatrix& A, const std::vector<int>& rows,
                         const std::vector<int>& cols);

}  // namespace matchings
