#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "koszulator/complex_engine.hpp"
#include "koszulator/errors.hpp"
#include "koszulator/koszul.hpp"
#include "koszulator/module_algebra.hpp"
#include "support.hpp"

using kzt::poly;

TEST_CASE("exterior basis is lexicographic") {
  CHECK(kz::exterior_basis(3, 2) == std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(kz::exterior_basis(3, 0) == std::vector<std::vector<int>>{{}});
  CHECK(kz::exterior_basis(2, 3).empty());
}

TEST_CASE("Koszul complex on a regular sequence resolves the quotient") {
  auto S = kzt::ring({"x", "y"});
  auto K = kz::koszul_complex(S, kzt::polys(S, {"x", "y"}), kz::FPModule::free(S, std::vector<int>{0}), 0);
  K->validate();
  CHECK(K->rank(0) == 1);
  CHECK(K->rank(1) == 2);
  CHECK(K->rank(2) == 1);
  CHECK(kz::homology(*K, 0).module.length() == 1);
  CHECK(kz::homology(*K, 1).module.is_zero());
  CHECK(kz::homology(*K, 2).module.is_zero());
  CHECK(K->term(2).degrees() == std::vector<int>{2});

  auto K3 = kz::koszul_complex(S, kzt::polys(S, {"x"}), kz::FPModule::free(S, std::vector<int>{0, 1}), 3);
  CHECK(K3->min_c() == 3);
  CHECK(K3->rank(4) == 2);
}

TEST_CASE("empty sequence gives the base free module") {
  auto S = kzt::ring({"x", "y"});
  auto K = kz::koszul_complex(S, {}, kz::FPModule::free(S, std::vector<int>{0}), 2);
  CHECK(K->min_c() == 2);
  CHECK(K->max_c() == 2);
}

TEST_CASE("annihilator of endomorphism classes and scalar homotopies") {
  kz::Session s = kzt::corpus("corpus.kz");
  auto P = s.complexes.at("P");
  kz::Ideal ann = kz::homotopy_annihilator(P);
  CHECK(ann.contains(poly(s.ring, "x-y")));
  CHECK_FALSE(ann.contains(poly(s.ring, "x")));
  kz::Homotopy h = kz::scalar_null_homotopy(poly(s.ring, "x^2"), P);
  CHECK(kz::is_homotopy_between(h, kz::scale(kz::identity_map(P), poly(s.ring, "x^2")), kz::zero_map(P, P)));
  CHECK_THROWS_AS(kz::scalar_null_homotopy(poly(s.ring, "x"), P), kz::NotNullHomotopic);
}

TEST_CASE("Koszul cover of a width zero complex") {
  kz::Session s = kzt::corpus("corpus.kz");
  kz::KoszulCover c = kz::koszul_cover(s.complexes.at("P"), kz::SerreSpec::finite_length(), std::nullopt, 1);
  CHECK(c.verified());
  CHECK(c.m == 0);
  CHECK(c.regular_sequence.size() == 1);
  CHECK(c.alpha.is_chain_map());
  kz::Cone cn = kz::cone(c.alpha);
  CHECK(kz::complex_stats(*cn.complex).acyclic);
  CHECK_THROWS_AS(kz::cone_width_report(c), kz::PreconditionError);
}

TEST_CASE("Koszul cover of a width two complex narrows the cone") {
  kz::Session s = kzt::corpus("corpus.kz");
  auto P2 = s.complexes.at("P2");
  kz::KoszulCover c = kz::koszul_cover(P2, kz::SerreSpec::finite_length(), std::nullopt, 1);
  CHECK(c.verified());
  CHECK(c.m == 0);
  for (const auto& f : c.regular_sequence) {
    CHECK(c.endomorphism_annihilator.contains(f));
    CHECK(c.target_ideal.contains(f));
  }
  kz::ConeWidthReport w = kz::cone_width_report(c);
  CHECK(w.verified());
  CHECK(w.input.wid == 2);
  CHECK(w.cone.wid < 2);
  CHECK(w.shifted_sum.wid < 2);
}

TEST_CASE("cover of an acyclic complex is degenerate") {
  kz::Session s = kzt::corpus("corpus.kz");
  kz::KoszulCover c = kz::koszul_cover(s.complexes.at("Z"), kz::SerreSpec::finite_length(), std::nullopt, 1);
  CHECK(c.degenerate);
  CHECK(c.verified());
}

TEST_CASE("cover with a prescribed ideal") {
  kz::Session s = kzt::corpus("corpus.kz");
  kz::Ideal J = s.ideals.at("m");
  kz::KoszulCover c = kz::koszul_cover(s.complexes.at("P"), kz::SerreSpec::finite_length(), J, 5);
  CHECK(c.verified());
  for (const auto& f : c.regular_sequence) CHECK(J.contains(f));
}

TEST_CASE("cover rejects complexes with homology outside the class") {
  auto R = kzt::ring({"x", "y"}, {"x*y"});
  kz::Complex X(R, {{0, kz::FPModule::free(R, std::vector<int>{0})}, {1, kz::FPModule::free(R, std::vector<int>{1})}},
                {{1, kzt::matrix(R, {{"x"}})}});
  CHECK_THROWS_AS(kz::koszul_cover(kz::make_complex(X), kz::SerreSpec::finite_length(), std::nullopt, 1),
                  kz::PreconditionError);
}

TEST_CASE("morphism cover square commutes") {
  kz::Session s = kzt::corpus("corpus.kz");
  kz::MorphismCover mc = kz::morphism_cover(s.maps.at("idM"), kz::SerreSpec::finite_length(), 1);
  CHECK(mc.verified());
  CHECK(mc.betaX.is_chain_map());
  CHECK(mc.betaY.is_chain_map());
  CHECK(mc.kappa.is_chain_map());
  CHECK(mc.alpha.is_chain_map());
}
