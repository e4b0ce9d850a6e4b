#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "koszulator/errors.hpp"
#include "support.hpp"

namespace {

// Line and column of the error raised while parsing text.
std::pair<int, int> error_at(const std::string& text) {
  try {
    kz::parse_session(text);
  } catch (const kz::ParseError& e) {
    return {e.line(), e.column()};
  }
  return {0, 0};
}

bool is_validation_error(const std::string& text) {
  try {
    kz::parse_session(text);
  } catch (const kz::ValidationError&) {
    return true;
  } catch (...) {
  }
  return false;
}

}  // namespace

TEST_CASE("bundled sessions parse") {
  kz::Session s = kzt::corpus("corpus.kz");
  CHECK(s.ring_name == "R");
  CHECK(s.seed == 1);
  CHECK(s.modules.size() == 3);
  CHECK(s.complexes.count("P2") == 1);
  CHECK(s.maps.count("zM") == 1);
  CHECK(s.specs.count("L") == 1);
  CHECK(s.complexes.at("P2")->max_c() == 3);
  for (const char* f : {"non_cm.kz", "polynomial.kz", "dao.kz", "dao_reduced.kz"}) CHECK_NOTHROW(kzt::corpus(f));
}

TEST_CASE("comments, budgets and multi-line statements") {
  kz::Session s = kz::parse_session(
      "# leading comment\n"
      "ring R = GF(101)[x,y]   # trailing\n"
      "budget degree 20\n"
      "budget retries 5\n"
      "module C = coker [[x, y, 0],\n"
      "                  [0, x, y]] {0, 0}\n");
  CHECK(s.ring->field().characteristic() == 101);
  CHECK(s.budget.max_degree == 20);
  CHECK(s.budget.max_retries == 5);
  CHECK(s.modules.at("C").rank() == 2);
}

TEST_CASE("complex literal placement and term degrees") {
  kz::Session s = kz::parse_session(
      "ring R = QQ[x,y]\n"
      "complex K = [R -[[-y], [x]]-> R^2 -[[x, y]]-> R] @ 3\n"
      "complex Kz = koszul(x, y) @ 3\n");
  auto K = s.complexes.at("K");
  CHECK(K->min_c() == 3);
  CHECK(K->max_c() == 5);
  CHECK(K->term(5).degrees() == std::vector<int>{2});
  CHECK(K->term(4).degrees() == std::vector<int>{1, 1});
  CHECK(*s.complexes.at("Kz") == *K);
}

TEST_CASE("chain maps given by components") {
  kz::Session s = kz::parse_session(
      "ring R = QQ[x,y] / (x*y)\n"
      "complex P = [R -(x-y)-> R]\n"
      "map twice : P -> P = {0: [[2]], 1: [[2]]}\n");
  CHECK(s.maps.at("twice").is_chain_map());
  CHECK(is_validation_error(
      "ring R = QQ[x,y] / (x*y)\n"
      "complex P = [R -(x-y)-> R]\n"
      "map bad : P -> P = {0: [[1]], 1: [[2]]}\n"));
}

TEST_CASE("spec and ideal literals resolve") {
  kz::Session s = kzt::corpus("corpus.kz");
  CHECK(s.resolve_spec("fl").kind == kz::SerreSpec::Kind::FiniteLength);
  CHECK(s.resolve_spec("L").kind == kz::SerreSpec::Kind::FiniteLength);
  CHECK(s.resolve_spec("support(m) & codim>=1").kind == kz::SerreSpec::Kind::Intersection);
  CHECK(s.resolve_ideal("(x, y)") == s.ideals.at("m"));
  CHECK_THROWS_AS(s.resolve_spec("nonsense"), kz::ParseError);
}

TEST_CASE("syntax errors carry line and column") {
  CHECK(error_at("ring R = QQ[x,y]\nmodule M = quotient(x +* y)\n").first == 2);
  CHECK(error_at("ring R = QQ[x,y]\nmodule M = quotient(x - w)\n") == std::pair<int, int>{2, 25});
  CHECK(error_at("ring R = QQ[x,y]\n\nfrobnicate X\n") == std::pair<int, int>{3, 1});
  CHECK(error_at("module M = residue\n").first == 1);
  CHECK(error_at("ring R = QQ[x,y]\ncomplex P = [R -(x)-> R\n").first > 0);
}

TEST_CASE("validation catches ill-formed objects") {
  CHECK(is_validation_error("ring R = QQ[x,y]\ncomplex P = [R -(x)-> R -(x)-> R]\n"));
  CHECK(is_validation_error("ring R = QQ[x,y]\ncomplex P = [R -[[x, y^2]]-> R]\n"));
  CHECK(is_validation_error("ring R = QQ[x,y]\nmodule M = quotient(x + y^2)\n"));
  CHECK(is_validation_error("ring R = QQ[x,y]\nmodule M = residue\nmodule M = residue\n"));
  CHECK(is_validation_error("ring R = QQ[x,y]\ncomplex P = shift(Q, 1)\n"));
  CHECK_NOTHROW(kz::parse_session("ring R = QQ[x,y] / (x*y)\ncomplex P = [R -(x)-> R -(y)-> R]\n"));
}
