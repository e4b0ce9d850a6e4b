// Acceptance run: one PASS/FAIL line per criterion, with wall-clock limits.
#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>

#include "koszulator/commands.hpp"
#include "koszulator/complex_engine.hpp"
#include "koszulator/equivalence.hpp"
#include "koszulator/invariants.hpp"
#include "koszulator/koszul.hpp"
#include "koszulator/module_algebra.hpp"
#include "koszulator/serre.hpp"
#include "oracle/suite.hpp"
#include "support.hpp"

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && pass) {
      pass = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(int n, const std::string& name, std::optional<double> limit, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (o.pass && limit && secs >= *limit) {
    o.pass = false;
    o.detail = "exceeded " + std::to_string(*limit) + " s";
  }
  if (!o.pass) ++failures;
  std::printf("%s %2d  %-52s %8.3f s%s%s\n", o.pass ? "PASS" : "FAIL", n, name.c_str(), secs,
              limit ? ("  (limit " + std::to_string(static_cast<int>(*limit)) + " s)").c_str() : "",
              o.pass ? "" : ("  " + o.detail).c_str());
  std::fflush(stdout);
}

const kz::SerreSpec kFl = kz::SerreSpec::finite_length();

}  // namespace

int main() {
  criterion(1, "Koszul complex on (x, y) is exact above 0", 5.0, [](Outcome& o) {
    auto S = kzt::ring({"x", "y"});
    auto K = kz::koszul_complex(S, kzt::polys(S, {"x", "y"}), kz::FPModule::free(S, std::vector<int>{0}), 0);
    K->validate();
    o.require(kz::homology(*K, 0).module.length() == 1, "H0 length is not 1");
    o.require(kz::homology(*K, 1).module.is_zero(), "H1 nonzero");
    o.require(kz::homology(*K, 2).module.is_zero(), "H2 nonzero");
  });

  criterion(2, "ring classification: QQ[x,y]/(xy) is CM (1,1)", 10.0, [](Outcome& o) {
    auto r = kz::is_cohen_macaulay(kzt::ring({"x", "y"}, {"x*y"}));
    o.require(r.cohen_macaulay && r.depth == 1 && r.dimension == 1, "expected CM with (1, 1)");
  });
  criterion(2, "ring classification: QQ[x,y]/(x^2,xy) not CM (0,1)", 10.0, [](Outcome& o) {
    auto r = kz::is_cohen_macaulay(kzt::ring({"x", "y"}, {"x^2", "x*y"}));
    o.require(!r.cohen_macaulay && r.depth == 0 && r.dimension == 1, "expected non-CM with (0, 1)");
  });

  criterion(3, "R/(x-y): length 2, pd 1, pd + depth = depth R", std::nullopt, [](Outcome& o) {
    kz::Session s = kzt::corpus("corpus.kz");
    const kz::FPModule& M = s.modules.at("M");
    kz::ProjectiveDimension pd = kz::projective_dimension(M);
    const int d = kz::depth(M);
    o.require(M.length() == 2, "length is not 2");
    o.require(pd.value == 1, "pd is not 1");
    o.require(d == 0 && pd.depth_of_ring == 1 && *pd.value + d == pd.depth_of_ring, "Auslander-Buchsbaum fails");
  });

  criterion(4, "non-CM ring: finite-length corpus all infinite pd", 30.0, [](Outcome& o) {
    kz::Session s = kzt::corpus("non_cm.kz");
    std::vector<kz::FPModule> corpus;
    for (const auto& [name, M] : s.modules) corpus.push_back(M);
    o.require(corpus.size() >= 5 && s.modules.count("k"), "corpus too small or missing k");
    kz::DichotomyReport rep = kz::cm_dichotomy_report(s.ring, corpus);
    o.require(rep.branch == "not-cohen-macaulay", "wrong branch");
    o.require(!rep.witness_found, "a finite-length finite-pd module was reported");
    for (const auto& e : rep.modules) {
      o.require(e.length.has_value(), "module is not of finite length");
      o.require(e.verdict == "infinite-pd" && !e.projective_dimension, "module not certified infinite-pd");
      o.require(e.syzygy_rank > 0, "syzygy past depth R is free");
      o.require(e.consistent, "entry inconsistent");
    }
    o.require(rep.verified, "report not verified");
  });

  criterion(5, "Koszul cover bullets on width-0 and width-2 inputs", std::nullopt, [](Outcome& o) {
    kz::Session s = kzt::corpus("corpus.kz");
    for (const char* name : {"P", "P2"}) {
      kz::KoszulCover c = kz::koszul_cover(s.complexes.at(name), kFl, std::nullopt, s.seed);
      const std::string tag = std::string(name) + ": ";
      o.require(c.d_squared_zero && c.chain_map, tag + "not a chain map of complexes");
      o.require(c.homology_concentrated, tag + "homology of K not a single degree");
      o.require(c.complex->min_c() == c.m, tag + "min_c(K) != m");
      o.require(c.bottom_surjective, tag + "H_m(alpha) not surjective");
      o.require(c.homologies_in_spec, tag + "H_m(K) outside the class");
    }
  });

  criterion(6, "cone width drops for every positive-width cover", std::nullopt, [](Outcome& o) {
    kz::Session s = kzt::corpus("corpus.kz");
    kz::Session p = kzt::corpus("polynomial.kz");
    std::vector<kz::ComplexPtr> inputs = {s.complexes.at("P2"), s.complexes.at("P3"), p.complexes.at("K2")};
    for (const auto& P : inputs) {
      kz::KoszulCover c = kz::koszul_cover(P, kFl, std::nullopt, 1);
      kz::ConeWidthReport w = kz::cone_width_report(c);
      o.require(w.input.wid > 0, "input has width 0");
      o.require(w.cone.wid < w.input.wid, "wid(cone) not smaller");
      o.require(w.shifted_sum.wid < w.input.wid, "wid(shifted cone + K) not smaller");
      o.require(w.verified(), "report not verified");
    }
  });

  criterion(7, "round trip of P + T^2 P with chi = 4 everywhere", 120.0, [](Outcome& o) {
    kz::Session s = kzt::corpus("corpus.kz");
    kz::RoundtripReport rt = kz::roundtrip_verify(s.complexes.at("P2"), kFl, s.seed);
    for (const auto& a : rt.certificate.arrows)
      o.require(kz::is_quasi_isomorphism(a.map).quasi_isomorphism, "arrow " + a.label + " is not a quasi-isomorphism");
    for (const auto& [n, M] : rt.reduction.ptilde->terms()) {
      o.require(kz::serre_member(M, kFl), "Ptilde term not of finite length");
      o.require(kz::projective_dimension(M).value.has_value(), "Ptilde term has infinite pd");
    }
    for (const auto& node : rt.certificate.nodes)
      o.require(kz::euler_characteristic_fl(*node) == 4, "chi != 4 at a node");
    o.require(rt.verified(), "round trip report not verified");
  });

  criterion(8, "20 random pairs with min P > max Q have [P, Q] = 0", std::nullopt, [](Outcome& o) {
    auto R = kzt::ring({"x", "y"}, {"x*y"});
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 20; ++i) {
      kzt::RandomPair pr = kzt::random_pair(R, rng);
      kz::HomotopyClasses hc = kz::homotopy_classes(pr.P, pr.Q);
      o.require(hc.classes.module.is_zero(), "nonzero classes for" + pr.description);
    }
  });

  criterion(9, "Hom(M, M) = [U_M, U_M] for M = R/(x-y)", std::nullopt, [](Outcome& o) {
    kz::Session s = kzt::corpus("corpus.kz");
    const kz::FPModule& M = s.modules.at("M");
    kz::HomComparisonReport r = kz::module_hom_comparison(M, M);
    o.require(r.module_length == 2 && r.derived_length == 2, "lengths are not 2");
    o.require(r.inverse_maps, "comparison maps are not mutually inverse");
  });

  criterion(10, "engine agrees with the truncation oracle", 60.0, [](Outcome& o) {
    oracle::SuiteReport rep = oracle::run_suite(6);
    o.require(rep.mismatches.empty(), rep.mismatches.empty() ? "" : rep.mismatches.front());
    o.detail += " (" + std::to_string(rep.checks) + " checks)";
  });

  criterion(11, "repeated runs give byte-identical certificates", std::nullopt, [](Outcome& o) {
    const std::vector<std::pair<std::string, std::vector<std::string>>> runs = {
        {"homology", {"K"}},          {"cm-check", {}},         {"depth", {"M"}},
        {"koszul-cover", {"P", "fl"}}, {"koszul-cover", {"P2", "fl"}}, {"roundtrip", {"P2", "fl"}},
        {"hom-vanish", {"PP2", "P"}},  {"hom-compare", {"M", "M"}}, {"resolve", {"M"}}};
    for (const auto& [cmd, args] : runs) {
      const char* file = cmd == "homology" ? "polynomial.kz" : "corpus.kz";
      std::string a = kz::run_command(kzt::corpus(file), cmd, args).json;
      std::string b = kz::run_command(kzt::corpus(file), cmd, args).json;
      o.require(a == b, cmd + " certificates differ");
    }
    std::string a = kz::run_command(kzt::corpus("non_cm.kz"), "cm-check", {}).json;
    std::string b = kz::run_command(kzt::corpus("non_cm.kz"), "cm-check", {}).json;
    o.require(a == b, "non-CM cm-check certificates differ");
  });

  criterion(12, "finite pd upstairs, infinite pd after reduction", 60.0, [](Outcome& o) {
    kz::Session up = kzt::corpus("dao.kz");
    kz::ProjectiveDimension pd = kz::projective_dimension(up.modules.at("M"));
    o.require(pd.value.has_value(), "M has infinite pd over QQ[x,y,z]/(xy)");
    o.require(pd.resolution.terminated, "resolution of M did not terminate");
    kz::Session down = kzt::corpus("dao_reduced.kz");
    kz::ProjectiveDimension pdb = kz::projective_dimension(down.modules.at("Mbar"));
    o.require(!pdb.value.has_value(), "M/zM has finite pd over QQ[x,y]/(xy)");
  });

  std::printf("%s: %d failing\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
