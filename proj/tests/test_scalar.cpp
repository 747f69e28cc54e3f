// Exact rational arithmetic.
#include <doctest.h>

#include <stdexcept>

#include "matchings/scalar.hpp"

using matchings::ExactScalar;

TEST_CASE("construction and rendering") {
  CHECK_EQ(ExactScalar().str(), "0");
  CHECK_EQ(ExactScalar(5).str(), "5");
  CHECK_EQ(ExactScalar(-12L).str(), "-12");
  CHECK_EQ(ExactScalar::from_ratio(2, 4).str(), "1/2");
  CHECK_EQ(ExactScalar::from_ratio(-3, -6).str(), "1/2");
  CHECK_EQ(ExactScalar::from_ratio(3, -6).str(), "-1/2");
}

TEST_CASE("parsing") {
  CHECK_EQ(ExactScalar::parse("3/6").str(), "1/2");
  CHECK_EQ(ExactScalar::parse("-7").str(), "-7");
  CHECK_EQ(ExactScalar::parse("-7/1").str(), "-7");
  CHECK_EQ(ExactScalar::parse("123456789012345678901234567890").str(),
           "123456789012345678901234567890");
  CHECK_THROWS_AS(ExactScalar::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(ExactScalar::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(ExactScalar::parse(""), std::invalid_argument);
}

TEST_CASE("arithmetic") {
  ExactScalar half = ExactScalar::from_ratio(1, 2);
  ExactScalar third = ExactScalar::from_ratio(1, 3);
  CHECK_EQ((half + third).str(), "5/6");
  CHECK_EQ((half - third).str(), "1/6");
  CHECK_EQ((half * third).str(), "1/6");
  CHECK_EQ((half / third).str(), "3/2");
  CHECK_EQ((-half).str(), "-1/2");
  CHECK_THROWS_AS(half / ExactScalar(0), std::domain_error);
}

TEST_CASE("powers and predicates") {
  CHECK_EQ(ExactScalar(2).pow(10).str(), "1024");
  CHECK_EQ(ExactScalar(7).pow(0).str(), "1");
  CHECK_EQ(ExactScalar::from_ratio(1, 2).pow(2).str(), "1/4");
  CHECK(ExactScalar(0).is_zero());
  CHECK(ExactScalar(3).is_integer());
  CHECK_FALSE(ExactScalar::from_ratio(1, 2).is_integer());
  CHECK_EQ(ExactScalar(-4).sign(), -1);
  CHECK_EQ(ExactScalar(0).sign(), 0);
  CHECK_EQ(ExactScalar(9).sign(), 1);
}

TEST_CASE("comparisons") {
  CHECK(ExactScalar::from_ratio(1, 3) < ExactScalar::from_ratio(1, 2));
  CHECK(ExactScalar(2) >= ExactScalar(2));
  CHECK(ExactScalar(2) != ExactScalar(3));
  CHECK(ExactScalar::from_ratio(2, 4) == ExactScalar::from_ratio(1, 2));
}

TEST_CASE("combinatorial helpers") {
  CHECK_EQ(matchings::factorial(0).str(), "1");
  CHECK_EQ(matchings::factorial(5).str(), "120");
  CHECK_EQ(matchings::binomial(10, 3).str(), "120");
  CHECK_EQ(matchings::binomial(3, 5).str(), "0");
}
