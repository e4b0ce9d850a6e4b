#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "koszulator/errors.hpp"
#include "koszulator/module_algebra.hpp"
#include "support.hpp"

using kzt::ideal;
using kzt::matrix;
using kzt::poly;
using kzt::quotient;

TEST_CASE("lengths of cyclic and presented modules") {
  auto R = kzt::ring({"x", "y"}, {"x*y"});
  CHECK(quotient(R, {"x-y"}).length() == 2);
  CHECK(quotient(R, {"x-y", "x^2"}).length() == 2);
  CHECK(quotient(R, {"x^2+y^2"}).length() == 4);
  CHECK_FALSE(quotient(R, {"x"}).length().has_value());
  CHECK(kz::residue_field(R).length() == 1);
  kz::FPModule M(R, {0, 0}, matrix(R, {{"x", "y", "0", "0"}, {"0", "0", "x", "y"}}));
  CHECK(M.length() == 2);
  CHECK(quotient(R, {"1"}).is_zero());
  CHECK(quotient(R, {"x-y"}).hilbert_value(1) == 1);
  CHECK(quotient(R, {"x-y"}).hilbert_value(2) == 0);
}

TEST_CASE("free resolution over a polynomial ring terminates") {
  auto S = kzt::ring({"x", "y"});
  kz::Resolution res = kz::free_resolution(kz::residue_field(S), 5);
  CHECK(res.terminated);
  CHECK(res.ranks() == std::vector<int>{1, 2, 1});
  res.complex->validate();
}

TEST_CASE("residue field over a node has a periodic resolution") {
  auto R = kzt::ring({"x", "y"}, {"x*y"});
  kz::Resolution res = kz::free_resolution(kz::residue_field(R), 5);
  CHECK_FALSE(res.terminated);
  CHECK(res.ranks() == std::vector<int>{1, 2, 2, 2, 2, 2});
  CHECK_FALSE(kz::projective_dimension(kz::residue_field(R)).value.has_value());
}

TEST_CASE("depth and projective dimension obey Auslander-Buchsbaum") {
  auto R = kzt::ring({"x", "y"}, {"x*y"});
  kz::FPModule M = quotient(R, {"x-y"});
  CHECK(kz::depth(M) == 0);
  kz::ProjectiveDimension pd = kz::projective_dimension(M);
  CHECK(pd.value == 1);
  CHECK(pd.depth_of_ring == 1);
  CHECK(kz::depth(kz::FPModule::free(R, std::vector<int>{0})) == 1);
  CHECK(kz::projective_dimension(kz::FPModule::free(R, std::vector<int>{0, 1})).value == 0);
  CHECK(kz::projective_dimension(kz::FPModule::zero(R)).value == -1);
}

TEST_CASE("Ext over a polynomial ring") {
  auto S = kzt::ring({"x", "y"});
  kz::FPModule k = kz::residue_field(S);
  CHECK(kz::ext_module(k, k, 0).length() == 1);
  CHECK(kz::ext_module(k, k, 1).length() == 2);
  CHECK(kz::ext_module(k, k, 2).length() == 1);
  CHECK(kz::ext_module(k, k, 3).is_zero());
  kz::ExtVanishing ev = kz::ext_vanishing_dimension(k, k, 4);
  CHECK(ev.value == 2);
}

TEST_CASE("Hom between cyclic modules") {
  auto R = kzt::ring({"x", "y"}, {"x*y"});
  kz::FPModule M = quotient(R, {"x-y"});
  CHECK(kz::ext_module(M, M, 0).length() == 2);
  CHECK(kz::ext_module(kz::residue_field(R), M, 0).length() == 1);
}

TEST_CASE("annihilators contain the ring relations") {
  auto R = kzt::ring({"x", "y"}, {"x*y"});
  kz::Ideal a = kz::annihilator(quotient(R, {"x-y"}));
  CHECK(a.contains(poly(R, "x-y")));
  CHECK(a.contains(kz::parse_polynomial(R->base(), "x*y")));
  CHECK(a.contains(poly(R, "x^2")));
  CHECK_FALSE(a.contains(poly(R, "x")));
}

TEST_CASE("kernel, cokernel and minimization") {
  auto R = kzt::ring({"x", "y"}, {"x*y"});
  kz::FPModule F = kz::FPModule::free(R, std::vector<int>{0});
  kz::FPModule G = kz::FPModule::free(R, std::vector<int>{1});
  kz::ModuleMorphism mult_x{G, F, matrix(R, {{"x"}})};
  CHECK(mult_x.is_well_defined());
  CHECK_FALSE(mult_x.is_injective());
  CHECK_FALSE(mult_x.is_surjective());
  kz::Subquotient K = kz::kernel(mult_x);
  CHECK(K.module.rank() == 1);
  CHECK(K.module.degrees() == std::vector<int>{2});
  CHECK_FALSE(kz::cokernel(mult_x).length().has_value());

  kz::FPModule redundant(R, {0, 0}, matrix(R, {{"x-y", "1"}, {"0", "-1"}}));
  kz::Minimized mn = kz::minimize(redundant);
  CHECK(mn.module.rank() == 1);
  CHECK(mn.module.length() == 2);

  kz::ModuleMorphism id = kz::ModuleMorphism::identity(quotient(R, {"x-y"}));
  CHECK(kz::equal_morphisms(kz::compose(id, id), id));
}

TEST_CASE("twist and direct sum") {
  auto R = kzt::ring({"x", "y"}, {"x*y"});
  kz::FPModule M = kz::twist(quotient(R, {"x-y"}), 2);
  CHECK(M.degrees() == std::vector<int>{2});
  CHECK(M.hilbert_value(3) == 1);
  CHECK(kz::direct_sum(M, quotient(R, {"x", "y"})).length() == 3);
}

TEST_CASE("Ext of the residue field into a one-dimensional hypersurface vanishes above 1") {
  auto R = kzt::ring({"x", "y"}, {"x*y"});
  kz::ExtVanishing ev = kz::ext_vanishing_dimension(kz::residue_field(R), kz::FPModule::free(R, std::vector<int>{0}), 4);
  CHECK(ev.value == 1);
  CHECK(ev.nonzero == std::vector<bool>{false, true, false, false, false});
}
