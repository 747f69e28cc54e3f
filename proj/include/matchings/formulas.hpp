// Closed-form tiling counts, hypergeometric checks, and shape classifiers.
#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "matchings/lattice.hpp"
#include "matchings/scalar.hpp"

namespace matchings {

// Rising factorial a(a+1)...(a+k-1); k must be nonnegative.
ExactScalar pochhammer(const ExactScalar& a, int k);

// 0! 1! ... (n-1)!
ExactScalar superfactorial(int n);

// Boxed plane partition count: hexagon with sides a,b,c.
ExactScalar macmahon(int a, int b, int c);

// Dented-trapezoid count: product of (x_j - x_i)/(j - i) over 1 <= i < j <= n.
ExactScalar clp_formula(int m, int n, const std::vector<int>& xs);

// Six-term bracket of the three-dent hexagon formula.
ExactScalar eisenkolbl_bracket(int a, int b, int c, int r, int s, int t);

// Same bracket with each dent position replaced by its complement; agrees with
// eisenkolbl_bracket whenever r,s,t and their complements are all nonzero.
ExactScalar eisenkolbl_det_form(int a, int b, int c, int r, int s, int t);

// Tiling count of eisenkolbl_region(a,b,c,r,s,t).
ExactScalar eisenkolbl_formula(int a, int b, int c, int r, int s, int t);

// Polynomial ingredients of the dent-and-notch hexagon counts.
ExactScalar p_poly(int x, int y, int k, int z, int l);
ExactScalar d_factor(int y, int k, int z);
ExactScalar q_poly(int x, int y, int k, int z, int l);

// Tiling counts of h_kl_region and h_prime_kl_region.
ExactScalar count_h_kl(int x, int y, int z, int k, int l);
ExactScalar count_h_prime_kl(int x, int y, int z, int k, int l);

// Terminating Gauss sum: sum over i of ((-k)_i (b)_i) / (i! (c)_i).
ExactScalar hyp2f1_terminating(int k, const ExactScalar& b, const ExactScalar& c);

// (lhs, rhs) of the evaluation at 1: lhs the terminating sum with parameters
// (-k, k+y; z), rhs the quotient (z-y-k)_k / (z)_k.  Requires k >= 0, z >= 1.
std::pair<ExactScalar, ExactScalar> verify_gauss(int k, int y, int z);

// Recognizes a translated general hexagon; returns its six side lengths
// (N, NE, SE, S, SW, NW) when the region is exactly one.
std::optional<std::array<int, 6>> match_hexagon(const Region& r);

struct TrapezoidMatch {
  int m = 0, n = 0;
  std::vector<int> xs;
};

// Recognizes a dented trapezoid up to the 12 lattice symmetries.
std::optional<TrapezoidMatch> match_t_region(const Region& r);

struct DentedMatch {
  int x = 0, y = 0, z = 0, k = 0, l = 0;
  bool prime = false;
};

// Recognizes a dent-and-notch hexagon up to the 12 lattice symmetries.
std::optional<DentedMatch> match_h_kl(const Region& r);

// Tiling count via the fastest available route: balance check, forced-lozenge
// reduction, closed formulas for recognized shapes, transfer-matrix counting
// otherwise.  Results are memoized by symmetry-canonical shape.
ExactScalar closed_form_count(const Region& r,
                              const MatchingOptions& opt = MatchingOptions::from_env());

struct AssemblyResult {
  ExactScalar lhs;        // direct tiling count of the dented hexagon
  ExactScalar rhs;        // Pfaffian of pairwise counts divided by M^(k-1)
  ExactScalar residual;   // lhs - rhs
  ExactScalar star_count; // tiling count of the companion region
};

// Dented-hexagon count reassembled from the companion region: builds the 2k
// marked cells, validates their boundary order on the dual graph, fills the
// pairwise-deletion matrix from closed_form_count, and compares the direct
// count against Pf / M^(k-1).
AssemblyResult theorem_4_1_assembly(int x, int y, int z, int k,
                                    const std::vector<Dent>& dents,
                                    const MatchingOptions& opt = MatchingOptions::from_env());

}  // namespace matchings
