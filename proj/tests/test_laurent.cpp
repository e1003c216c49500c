#include <doctest.h>

#include "cellgeom/laurent.hpp"

using namespace cellgeom;

TEST_CASE("construction drops zero terms") {
  auto p = LaurentPoly::from_terms({{1, 2}, {-1, 3}, {1, -2}, {0, 0}});
  CHECK(p == LaurentPoly::monomial(-1, 3));
  CHECK(LaurentPoly(0).is_zero());
  CHECK(LaurentPoly().to_string() == "0");
}

TEST_CASE("arithmetic") {
  const auto v = v_pow(1), vi = v_pow(-1);
  CHECK((v + vi) * (v - vi) == v_pow(2) - v_pow(-2));
  CHECK((v - v).is_zero());
  CHECK(-(v + 1) == LaurentPoly::from_terms({{1, -1}, {0, -1}}));
  LaurentPoly acc = v;
  acc.add_scaled(v + 1, 3, 2);
  CHECK(acc == LaurentPoly::from_terms({{3, 3}, {2, 3}, {1, 1}}));
  CHECK(v.shifted(-3) == v_pow(-2));
}

TEST_CASE("degrees and coefficients") {
  auto p = v_pow(3) * 2 + v_pow(-1);
  CHECK(p.max_degree() == 3);
  CHECK(p.min_degree() == -1);
  CHECK(p.coeff(3) == 2);
  CHECK(p.coeff(0) == 0);
  CHECK_THROWS_AS(LaurentPoly().max_degree(), Error);
}

TEST_CASE("bar and positivity predicates") {
  const auto q = v_pow(1) + v_pow(-1);
  CHECK(bar(v_pow(2) + 3) == v_pow(-2) + 3);
  CHECK(is_selfdual(q));
  CHECK(is_selfdual_nonneg(q * q));
  CHECK_FALSE(is_selfdual(v_pow(1)));
  CHECK_FALSE(is_nonneg(v_pow(1) - 1));
  CHECK(is_selfdual_nonneg(LaurentPoly()));
  CHECK_FALSE(is_selfdual_nonneg(LaurentPoly(-1)));
}

TEST_CASE("printing") {
  CHECK((v_pow(2) + 2 + v_pow(-2)).to_string() == "v^2 + 2 + v^-2");
  CHECK((-v_pow(1)).to_string() == "-v");
  CHECK((v_pow(1) * 3 - 1).to_string() == "3v - 1");
}
