#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracle/oracle.hpp"
#include "oracle/suite.hpp"
#include "support.hpp"

namespace {

oracle::Poly P(const kz::RingPtr& R, const std::string& s) { return oracle::convert(R->base(), kzt::poly(R, s)); }

}  // namespace

TEST_CASE("oracle dimensions match hand counts") {
  auto R = kzt::ring({"x", "y"});
  CHECK(oracle::monomials(2, 3).size() == 4);
  CHECK(oracle::monomials(3, 2).size() == 6);
  CHECK(oracle::ideal_dim(2, {P(R, "x"), P(R, "y")}, 2) == 3);
  CHECK(oracle::ideal_dim(2, {P(R, "x^2"), P(R, "y^2")}, 2) == 2);
  CHECK(oracle::ideal_dim(2, {P(R, "x^2"), P(R, "y^2")}, 3) == 4);
  CHECK(oracle::member(2, {P(R, "x^2"), P(R, "x*y")}, P(R, "x^3+x^2*y")));
  CHECK_FALSE(oracle::member(2, {P(R, "x^2"), P(R, "x*y")}, P(R, "y^3")));
  // (x^2, xy) : x = (x, y)
  CHECK(oracle::colon_dim(2, {P(R, "x^2"), P(R, "x*y")}, P(R, "x"), 0) == 0);
  CHECK(oracle::colon_dim(2, {P(R, "x^2"), P(R, "x*y")}, P(R, "x"), 1) == 2);
}

TEST_CASE("oracle lengths and syzygies match hand counts") {
  auto R = kzt::ring({"x", "y"});
  const auto& S = R->base();
  // QQ[x,y]/(x^2, y^3) has length 6.
  auto A = oracle::convert(S, kzt::matrix(R, {{"x^2", "y^3"}}), {0});
  CHECK(oracle::cokernel_length(2, A, {}, 7) == 6);
  // QQ[x,y]/(x) is not of finite length.
  auto B = oracle::convert(S, kzt::matrix(R, {{"x"}}), {0});
  CHECK_FALSE(oracle::cokernel_length(2, B, {}, 7).has_value());
  // Over QQ[x,y]/(xy) the syzygies of [x] are y*R(-2): dimension 1 in every degree >= 2.
  auto Q = kzt::ring({"x", "y"}, {"x*y"});
  std::vector<oracle::Poly> rel = {oracle::convert(S, kz::parse_polynomial(S, "x*y"))};
  auto X = oracle::convert(S, kzt::matrix(Q, {{"x"}}), {0});
  CHECK(oracle::syzygy_dim(2, X, rel, 1) == 0);
  CHECK(oracle::syzygy_dim(2, X, rel, 2) == 1);
  CHECK(oracle::syzygy_dim(2, X, rel, 5) == 1);
  auto Y = oracle::convert(S, kzt::matrix(Q, {{"y"}}), {1});
  CHECK(oracle::span_dim(2, {1}, Y, rel, 4) == 1);
}

TEST_CASE("oracle detects a wrong answer") {
  auto R = kzt::ring({"x", "y"});
  // (x^2, xy) : y = (x), whereas (x^2, xy) : x = (x, y) differ in degree 1.
  const std::vector<oracle::Poly> I = {P(R, "x^2"), P(R, "x*y")};
  CHECK(oracle::colon_dim(2, I, P(R, "y"), 1) == 1);
  CHECK(oracle::colon_dim(2, I, P(R, "y"), 1) != oracle::colon_dim(2, I, P(R, "x"), 1));
}

TEST_CASE("engine agrees with the truncation oracle through degree six") {
  oracle::SuiteReport rep = oracle::run_suite(6);
  CHECK(rep.instances >= 30);
  CHECK(rep.checks > 1000);
  for (const auto& m : rep.mismatches) FAIL_CHECK(m);
  CHECK(rep.mismatches.empty());
}
