#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "koszulator/budget.hpp"
#include "koszulator/errors.hpp"
#include "koszulator/groebner.hpp"
#include "support.hpp"

using kzt::ideal;
using kzt::poly;

TEST_CASE("prime field arithmetic reduces into the canonical range") {
  kz::Field F = kz::Field::prime(7);
  CHECK(F.characteristic() == 7);
  CHECK(F.reduce(mpq_class(10)) == 3);
  CHECK(F.reduce(mpq_class(-1)) == 6);
  CHECK(F.mul(F.inv(3), 3) == 1);
  CHECK(F.reduce(mpq_class(1, 2)) == 4);
  CHECK_THROWS(kz::Field::prime(8));
}

TEST_CASE("grevlex orders by degree then by the last variable") {
  auto R = kzt::ring({"x", "y", "z"});
  const kz::PolyRing& S = R->base();
  auto lead = [&](const std::string& s) { return kz::parse_polynomial(S, s).lead().m; };
  CHECK(kz::grevlex_compare(lead("x^2"), lead("x*y")) > 0);
  CHECK(kz::grevlex_compare(lead("y^2"), lead("x*z")) > 0);
  CHECK(kz::grevlex_compare(lead("z^3"), lead("x^2")) > 0);
  CHECK(S.to_string(kz::parse_polynomial(S, "z^2 + x*z + y^2")) == "y^2 + x*z + z^2");
}

TEST_CASE("polynomial parsing and printing round trip") {
  auto R = kzt::ring({"x", "y"});
  const kz::PolyRing& S = R->base();
  for (const char* s : {"x^3 - 2*x*y + 1/3*y^2", "-x + y", "7", "0"}) {
    kz::Polynomial f = kz::parse_polynomial(S, s);
    CHECK(kz::parse_polynomial(S, S.to_string(f)) == f);
  }
  CHECK(S.mul(kz::parse_polynomial(S, "x+y"), kz::parse_polynomial(S, "x-y")) == kz::parse_polynomial(S, "x^2-y^2"));
  CHECK_THROWS_AS(kz::parse_polynomial(S, "x + w"), kz::Error);
}

TEST_CASE("reduced Groebner bases of small ideals") {
  auto R = kzt::ring({"x", "y"});
  const kz::PolyRing& S = R->base();
  auto gb = kz::groebner_basis(S, kzt::polys(R, {"x+y", "x-y"}));
  REQUIRE(gb.size() == 2);
  CHECK(S.to_string(gb[0]) == "y");
  CHECK(S.to_string(gb[1]) == "x");
  kz::Ideal I = ideal(R, {"x^2-y^2", "x*y"});
  CHECK(I.contains(poly(R, "y^3")));
  CHECK_FALSE(I.contains(poly(R, "y^2")));
  CHECK(I.is_homogeneous());
  CHECK_FALSE(I.is_unit());
  CHECK(ideal(R, {"x*y-1", "x"}).is_unit());
}

TEST_CASE("colon, intersection and dimension") {
  auto R = kzt::ring({"x", "y", "z"});
  kz::Ideal I = ideal(R, {"x^2", "x*y"});
  CHECK(kz::colon_ideal(I, poly(R, "x")).ideal == ideal(R, {"x", "y"}));
  CHECK(kz::colon_ideal(I, poly(R, "0")).by_zero);
  CHECK(kz::intersect(ideal(R, {"x"}), ideal(R, {"y"})) == ideal(R, {"x*y"}));
  CHECK(kz::krull_dimension(I) == 2);
  CHECK(kz::krull_dimension(ideal(R, {"x", "y", "z"})) == 0);
  CHECK_FALSE(kz::krull_dimension(ideal(R, {"1"})).has_value());
}

TEST_CASE("regular elements modulo an ideal") {
  auto R = kzt::ring({"x", "y"});
  kz::Ideal I = ideal(R, {"x*y"});
  CHECK(kz::is_regular_element(poly(R, "x-y"), I).regular);
  CHECK_FALSE(kz::is_regular_element(poly(R, "x"), I).regular);
  CHECK_FALSE(kz::is_regular_element(poly(R, "x*y"), I).regular);
}

TEST_CASE("quotient ring normal forms") {
  auto R = kzt::ring({"x", "y"}, {"x*y"});
  CHECK(R->mul(poly(R, "x+y"), poly(R, "x-y")) == poly(R, "x^2-y^2"));
  CHECK(R->mul(poly(R, "x"), poly(R, "y")).is_zero());
  CHECK(R->is_graded());
}

TEST_CASE("prime characteristic Groebner basis") {
  auto R = kz::make_ring(kz::Field::prime(2), {"x", "y"}, {});
  kz::Ideal I = ideal(R, {"x+y"});
  CHECK(I.contains(poly(R, "x^2+y^2")));
  CHECK(I.contains(poly(R, "x^2-y^2")));
}

TEST_CASE("degree budget stops Buchberger") {
  auto R = kzt::ring({"x", "y", "z"});
  kz::Budget b;
  b.max_degree = 3;
  kz::ScopedBudget guard(b);
  CHECK_THROWS_AS(kz::groebner_basis(R->base(), kzt::polys(R, {"x^3-y*z^2", "y^3-x^2*z", "z^3-x*y^2"})),
                  kz::BudgetExceeded);
}
