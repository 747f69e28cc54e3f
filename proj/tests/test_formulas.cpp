// Closed-form counts, hypergeometric checks, shape classifiers, reassembly.
#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "matchings/formulas.hpp"
#include "matchings/lattice.hpp"

using namespace matchings;

TEST_CASE("rising factorials and superfactorials") {
  CHECK_EQ(pochhammer(ExactScalar(3), 4).str(), "360");
  CHECK_EQ(pochhammer(ExactScalar(17), 0).str(), "1");
  CHECK_EQ(pochhammer(ExactScalar(1), 5).str(), "120");
  CHECK_EQ(pochhammer(ExactScalar(-2), 2).str(), "2");
  CHECK_EQ(pochhammer(ExactScalar(-2), 4).str(), "0");
  CHECK_EQ(superfactorial(0).str(), "1");
  CHECK_EQ(superfactorial(4).str(), "12");
}

TEST_CASE("boxed plane partitions") {
  CHECK_EQ(macmahon(0, 0, 0).str(), "1");
  CHECK_EQ(macmahon(5, 7, 0).str(), "1");
  CHECK_EQ(macmahon(1, 1, 1).str(), "2");
  CHECK_EQ(macmahon(2, 2, 2).str(), "20");
  CHECK_EQ(macmahon(2, 3, 4).str(), "490");
  CHECK_EQ(macmahon(3, 3, 3).str(), "980");
}

TEST_CASE("dented trapezoid product") {
  CHECK_EQ(clp_formula(6, 5, {1, 3, 4, 7, 10}).str(), "1701");
  CHECK_EQ(clp_formula(4, 1, {3}).str(), "1");
  CHECK_EQ(clp_formula(2, 3, {2, 3, 4}).str(), "1");  // consecutive
  CHECK_EQ(clp_formula(0, 0, {}).str(), "1");
}

TEST_CASE("three-dent hexagon formula") {
  CHECK_EQ(eisenkolbl_formula(1, 1, 1, 1, 2, 3).str(),
           count_tilings(eisenkolbl_region(1, 1, 1, 1, 2, 3)).str());
  CHECK_EQ(eisenkolbl_formula(1, 1, 1, 0, 0, 0).str(),
           count_tilings(eisenkolbl_region(1, 1, 1, 0, 0, 0)).str());
  // Bracket and determinant forms agree away from vanishing arguments.
  for (int r = 1; r <= 2; ++r)
    for (int s = 1; s <= 2; ++s)
      for (int t = 1; t <= 2; ++t)
        CHECK_EQ(eisenkolbl_bracket(1, 1, 1, r, s, t).str(),
                 eisenkolbl_det_form(1, 1, 1, r, s, t).str());
}

TEST_CASE("dent-and-notch polynomial ingredients") {
  CHECK_EQ(p_poly(2, 1, 2, 0, 0).str(), "1440");
  CHECK_EQ(q_poly(2, 1, 2, 0, 0).str(), "1440");
  CHECK_EQ(d_factor(0, 2, 3).str(), "1/20");  // 1 / ((z+1)..(z+k))
  CHECK_EQ(d_factor(1, 3, 2).str(), "1");
}

TEST_CASE("dent-and-notch hexagon counts") {
  CHECK_EQ(count_h_kl(4, 7, 3, 2, 2).str(), "199577127750");
  CHECK_EQ(count_h_prime_kl(4, 7, 3, 2, 2).str(), "18980761800");
  CHECK_EQ(count_h_kl(4, 6, 5, 0, 2).str(), "6754918170");
  CHECK_EQ(count_h_kl(2, 1, 2, 1, 2).str(),
           count_tilings(h_kl_region(2, 1, 2, 1, 2)).str());
  CHECK_EQ(count_h_prime_kl(2, 1, 2, 1, 2).str(),
           count_tilings(h_prime_kl_region(2, 1, 2, 1, 2)).str());
}

TEST_CASE("terminating hypergeometric evaluation") {
  CHECK_EQ(hyp2f1_terminating(1, ExactScalar(1), ExactScalar(2)).str(), "1/2");
  CHECK_EQ(hyp2f1_terminating(0, ExactScalar(9), ExactScalar(5)).str(), "1");
  CHECK_THROWS_AS(hyp2f1_terminating(2, ExactScalar(1), ExactScalar(-1)),
                  std::domain_error);
  auto [lhs, rhs] = verify_gauss(1, 0, 2);
  CHECK_EQ(lhs.str(), "1/2");
  CHECK_EQ(rhs.str(), "1/2");
  auto [l0, r0] = verify_gauss(0, 7, 3);
  CHECK_EQ(l0.str(), "1");
  CHECK_EQ(r0.str(), "1");
  CHECK_THROWS_AS(verify_gauss(1, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(verify_gauss(-1, 0, 2), std::invalid_argument);
}

TEST_CASE("shape classifiers") {
  auto hex = match_hexagon(hexagon(2, 3, 1));
  REQUIRE(hex.has_value());
  CHECK_EQ((*hex)[0], 2);
  CHECK_EQ((*hex)[1], 3);
  CHECK_EQ((*hex)[2], 1);
  CHECK_FALSE(match_hexagon(t_region(2, 2, {1, 3})).has_value());
  CHECK_FALSE(match_hexagon(h_kl_region(2, 1, 2, 1, 2)).has_value());

  auto trap = match_t_region(t_region(3, 2, {2, 4}));
  REQUIRE(trap.has_value());
  CHECK(congruent(t_region(trap->m, trap->n, trap->xs), t_region(3, 2, {2, 4})));
  // A unit-cornered hexagon is a dented trapezoid in disguise; a fat one is not.
  CHECK(match_t_region(hexagon(1, 1, 1)).has_value());
  CHECK_FALSE(match_t_region(hexagon(2, 2, 2)).has_value());

  auto dn = match_h_kl(h_kl_region(2, 1, 2, 1, 2));
  REQUIRE(dn.has_value());
  auto dnp = match_h_kl(h_prime_kl_region(1, 2, 1, 2, 1));
  CHECK(dnp.has_value());
}

TEST_CASE("count dispatcher agrees with direct counting") {
  MatchingOptions opt;
  CHECK_EQ(closed_form_count(hexagon(2, 2, 2), opt).str(), "20");
  CHECK_EQ(closed_form_count(t_region(6, 5, {1, 3, 4, 7, 10}), opt).str(), "1701");
  CHECK_EQ(closed_form_count(h_kl_region(2, 1, 2, 1, 2), opt).str(),
           count_tilings(h_kl_region(2, 1, 2, 1, 2), opt).str());
  CHECK_EQ(closed_form_count(eisenkolbl_region(1, 1, 1, 1, 1, 1), opt).str(),
           count_tilings(eisenkolbl_region(1, 1, 1, 1, 1, 1), opt).str());
  CHECK_EQ(closed_form_count(Region::from_cells({}), opt).str(), "1");
  CHECK_EQ(closed_form_count(Region::from_cells({{0, 0, kUp}}), opt).str(), "0");
  Region far_apart = Region::from_cells({{0, 0, kUp}, {5, 5, kDown}});
  CHECK_EQ(closed_form_count(far_apart, opt).str(), "0");
}

TEST_CASE("dented-hexagon reassembly") {
  AssemblyResult triv = theorem_4_1_assembly(1, 1, 1, 0, {});
  CHECK(triv.residual.is_zero());
  CHECK_EQ(triv.lhs.str(), "2");

  std::vector<Dent> dents = {{HexSide::south, 0}, {HexSide::northeast, 1}};
  AssemblyResult res = theorem_4_1_assembly(1, 1, 1, 2, dents);
  CHECK(res.residual.is_zero());
  CHECK_EQ(res.lhs.str(), count_tilings(h_k_region(1, 1, 1, 2, dents)).str());
  // Filling the dents and attaching the strings leaves a boxed count.
  CHECK_EQ(res.star_count.str(), macmahon(1, 2, 2).str());

  // The deep case: one dent string per side, endpoint orders interleaved.
  std::vector<Dent> deep = {{HexSide::south, 2},     {HexSide::south, 4},
                            {HexSide::south, 5},     {HexSide::south, 6},
                            {HexSide::northeast, 3}, {HexSide::northwest, 4},
                            {HexSide::northwest, 2}};
  AssemblyResult big = theorem_4_1_assembly(1, 1, 1, 7, deep);
  CHECK(big.residual.is_zero());
}
