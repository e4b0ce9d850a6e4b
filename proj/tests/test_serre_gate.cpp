#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "koszulator/budget.hpp"
#include "koszulator/errors.hpp"
#include "koszulator/module_algebra.hpp"
#include "koszulator/serre.hpp"
#include "support.hpp"

using kzt::ideal;
using kzt::quotient;

TEST_CASE("membership in finite length, support and codimension classes") {
  auto R = kzt::ring({"x", "y", "z"}, {"x*y"});
  kz::SerreSpec fl = kz::SerreSpec::finite_length();
  CHECK(kz::serre_member(quotient(R, {"x", "y", "z"}), fl));
  CHECK(kz::serre_member(quotient(R, {"x-z", "y-z"}), fl));
  CHECK_FALSE(kz::serre_member(quotient(R, {"x", "y"}), fl));

  kz::SerreSpec supp = kz::SerreSpec::support_in(ideal(R, {"x", "y"}));
  CHECK(kz::serre_member(quotient(R, {"x", "y"}), supp));
  CHECK(kz::serre_member(quotient(R, {"x", "y", "z^2"}), supp));
  CHECK(kz::serre_member(quotient(R, {"x-z", "y-z"}), supp));
  CHECK_FALSE(kz::serre_member(quotient(R, {"x-z"}), supp));

  kz::SerreSpec c1 = kz::SerreSpec::codim_at_least(1);
  CHECK(kz::serre_member(quotient(R, {"x-z", "y-z"}), c1));
  CHECK_FALSE(kz::serre_member(quotient(R, {"x"}), c1));
  CHECK(kz::serre_member(kz::FPModule::zero(R), fl));

  kz::SerreSpec both = kz::SerreSpec::intersection({c1, supp});
  CHECK(kz::serre_member(quotient(R, {"x", "y"}), both));
  CHECK_FALSE(kz::serre_member(quotient(R, {"x-z"}), both));
  CHECK(both.to_string().find('&') != std::string::npos);
}

TEST_CASE("regular sequence search stays inside the ideal") {
  auto R = kzt::ring({"x", "y"}, {"x*y"});
  kz::Ideal m = ideal(R, {"x", "y"});
  kz::RegularSequence rs = kz::find_regular_sequence(R, m, kz::SerreSpec::finite_length(), 1);
  REQUIRE(rs.elements.size() == 1);
  CHECK(m.contains(rs.elements[0]));
  CHECK(kz::is_regular_element(rs.elements[0], R->defining_ideal()).regular);
  CHECK(kz::FPModule::cyclic(R, rs.elements).length().has_value());
}

TEST_CASE("regular sequence search is deterministic in the seed") {
  auto R = kzt::ring({"x", "y", "z"});
  kz::Ideal m = ideal(R, {"x", "y", "z"});
  auto a = kz::find_regular_sequence(R, m, kz::SerreSpec::finite_length(), 7);
  auto b = kz::find_regular_sequence(R, m, kz::SerreSpec::finite_length(), 7);
  CHECK(a.elements == b.elements);
  CHECK(a.elements.size() == 3);
}

TEST_CASE("search fails with candidates recorded when every linear form is a zero divisor") {
  auto R = kz::make_ring(kz::Field::prime(2), {"x", "y"}, {"x*y*(x+y)"});
  kz::Budget b;
  b.max_retries = 4;
  kz::ScopedBudget guard(b);
  try {
    kz::find_regular_sequence(R, ideal(R, {"x", "y"}), kz::SerreSpec::finite_length(), 3);
    FAIL("expected the search to fail");
  } catch (const kz::SearchFailed& e) {
    CHECK(e.attempted().size() == 4);
  }
}

TEST_CASE("search rejects rings that are not Cohen-Macaulay") {
  auto R = kzt::ring({"x", "y"}, {"x^2", "x*y"});
  CHECK_THROWS_AS(kz::find_regular_sequence(R, ideal(R, {"x", "y"}), kz::SerreSpec::finite_length(), 3),
                  kz::PreconditionError);
}

TEST_CASE("Cohen-Macaulay test on the corpus rings") {
  auto node = kz::is_cohen_macaulay(kzt::ring({"x", "y"}, {"x*y"}));
  CHECK(node.cohen_macaulay);
  CHECK(node.depth == 1);
  CHECK(node.dimension == 1);
  auto embedded = kz::is_cohen_macaulay(kzt::ring({"x", "y"}, {"x^2", "x*y"}));
  CHECK_FALSE(embedded.cohen_macaulay);
  CHECK(embedded.depth == 0);
  CHECK(embedded.dimension == 1);
  CHECK(kz::is_cohen_macaulay(kzt::ring({"x", "y", "z"})).cohen_macaulay);
}

TEST_CASE("dichotomy report on both branches") {
  auto R = kzt::ring({"x", "y"}, {"x*y"});
  kz::DichotomyReport cm = kz::cm_dichotomy_report(R, {quotient(R, {"x-y"}), kz::residue_field(R)});
  CHECK(cm.branch == "cohen-macaulay");
  CHECK(cm.witness_found);
  CHECK(cm.verified);
  CHECK(cm.modules[0].verdict == "witness");
  CHECK(cm.modules[1].verdict == "infinite-pd");

  auto N = kzt::ring({"x", "y"}, {"x^2", "x*y"});
  kz::DichotomyReport ncm = kz::cm_dichotomy_report(N, {kz::residue_field(N), quotient(N, {"x", "y^2"})});
  CHECK(ncm.branch == "not-cohen-macaulay");
  CHECK_FALSE(ncm.witness_found);
  CHECK(ncm.verified);
  for (const auto& e : ncm.modules) CHECK(e.verdict == "infinite-pd");
}
