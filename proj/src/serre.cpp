#include "koszulator/serre.hpp"

#include <random>

#include "koszulator/budget.hpp"
#include "koszulator/errors.hpp"
#include "koszulator/module_algebra.hpp"

namespace kz {

SerreSpec SerreSpec::support_in(Ideal J) {
  SerreSpec s;
  s.kind = Kind::SupportIn;
  s.support = std::move(J);
  return s;
}

SerreSpec SerreSpec::codim_at_least(int c) {
  SerreSpec s;
  s.kind = Kind::CodimAtLeast;
  s.codim = c;
  return s;
}

SerreSpec SerreSpec::intersection(std::vector<SerreSpec> parts) {
  SerreSpec s;
  s.kind = Kind::Intersection;
  s.parts = std::move(parts);
  return s;
}

std::string SerreSpec::to_string() const {
  switch (kind) {
    case Kind::FiniteLength:
      return "fl";
    case Kind::SupportIn:
      return "support" + support.to_string();
    case Kind::CodimAtLeast:
      return "codim>=" + std::to_string(codim);
    case Kind::Intersection: {
      std::string out;
      for (size_t i = 0; i < parts.size(); ++i) out += (i ? " & " : "") + parts[i].to_string();
      return out;
    }
  }
  return "";
}

namespace {

int ring_dimension(const QuotientRing& R) {
  auto d = krull_dimension(R.defining_ideal());
  if (!d) throw PreconditionError("the zero ring has no dimension");
  return *d;
}

// g^N in Ann(M) for every generator g of J, with N = (basis size of Ann) x (its top degree).
bool supported_in(const FPModule& M, const Ideal& J) {
  if (M.is_zero()) return true;
  Ideal ann = annihilator(M);
  const PolyRing& S = M.R().base();
  int top = 1;
  for (const auto& g : ann.groebner()) top = std::max(top, S.degree(g));
  const int bound = std::max<int>(1, static_cast<int>(ann.groebner().size()) * top);
  for (const auto& g : J.generators())
    if (!ann.contains(S.pow(g, bound))) return false;
  return true;
}

}  // namespace

bool serre_member(const FPModule& M, const SerreSpec& spec) {
  switch (spec.kind) {
    case SerreSpec::Kind::FiniteLength:
      return M.length().has_value();
    case SerreSpec::Kind::SupportIn:
      return supported_in(M, spec.support);
    case SerreSpec::Kind::CodimAtLeast: {
      auto dm = M.dimension();
      if (!dm) return true;
      return ring_dimension(M.R()) - *dm >= spec.codim;
    }
    case SerreSpec::Kind::Intersection:
      for (const auto& p : spec.parts)
        if (!serre_member(M, p)) return false;
      return true;
  }
  return false;
}

// ------------------------------------------------------ regular sequences

RegularSequence find_regular_sequence(const RingPtr& ring, const Ideal& J, const SerreSpec& spec,
                                      std::uint64_t seed) {
  const QuotientRing& R = *ring;
  const PolyRing& S = R.base();
  if (!J.is_homogeneous()) throw PreconditionError("the ideal must be homogeneous");
  if (!serre_member(FPModule::cyclic(ring, J.generators()), spec))
    throw PreconditionError("R/J is not in the Serre subcategory " + spec.to_string());
  if (!is_cohen_macaulay(ring).cohen_macaulay) throw PreconditionError("the ring is not Cohen-Macaulay");

  // Work inside J ∩ m, where m is the irrelevant ideal.
  std::vector<Polynomial> gens;
  if (sum(J, R.defining_ideal()).is_unit()) {
    for (int i = 0; i < S.nvars(); ++i) gens.push_back(S.variable(i));
  } else {
    for (const auto& g : J.generators())
      if (!R.reduce(g).is_zero()) gens.push_back(R.reduce(g));
  }
  auto dimJ = krull_dimension(sum(J, R.defining_ideal()));
  const int c = ring_dimension(R) - (dimJ ? *dimJ : 0);

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-9, 9);
  const int retries = current_budget().max_retries;
  constexpr int kPerDegree = 8;

  RegularSequence out;
  std::vector<std::string> attempted;
  Ideal current = R.defining_ideal();
  int min_deg = 0;
  if (!gens.empty()) {
    min_deg = S.degree(gens.front());
    for (const auto& g : gens) min_deg = std::min(min_deg, S.degree(g));
  }
  for (int i = 0; i < c; ++i) {
    bool found = false;
    for (int k = 0; k < retries && !found; ++k) {
      const int d = min_deg + k / kPerDegree;
      std::vector<Polynomial> basis;
      for (const auto& g : gens) {
        int e = d - S.degree(g);
        if (e < 0) continue;
        for (const auto& m : S.monomials_of_degree(e)) basis.push_back(S.mul_term(g, m, Coeff(1)));
      }
      Polynomial f;
      if (k % kPerDegree == 0) {
        for (const auto& g : gens)
          if (S.degree(g) == d) f = S.add(f, g);
      }
      if (f.is_zero() || k % kPerDegree != 0) {
        f = Polynomial{};
        for (const auto& b : basis) f = S.add(f, S.scale(b, S.field().reduce(Coeff(coeff(rng)))));
      }
      f = R.reduce(f);
      ++out.attempts;
      if (f.is_zero()) {
        attempted.push_back("0");
        continue;
      }
      attempted.push_back(S.to_string(f));
      if (is_regular_element(f, current).regular) {
        out.elements.push_back(f);
        std::vector<Polynomial> next = current.generators();
        next.push_back(f);
        current = Ideal(R.base_ptr(), next);
        found = true;
      }
    }
    if (!found)
      throw SearchFailed("no regular element found for position " + std::to_string(i + 1) + " within " +
                             std::to_string(retries) + " candidates",
                         attempted);
  }
  if (!serre_member(FPModule::cyclic(ring, out.elements), spec))
    throw SearchFailed("the regular sequence does not cut out a module in " + spec.to_string(), attempted);
  return out;
}

// ---------------------------------------------------- Cohen-Macaulay tests

CohenMacaulayReport is_cohen_macaulay(const RingPtr& ring) {
  CohenMacaulayReport r;
  r.dimension = ring_dimension(*ring);
  r.depth = depth(FPModule::free(ring, 1));
  r.cohen_macaulay = r.depth == r.dimension;
  return r;
}

DichotomyReport cm_dichotomy_report(const RingPtr& ring, const std::vector<FPModule>& corpus) {
  DichotomyReport rep;
  rep.ring = is_cohen_macaulay(ring);
  rep.branch = rep.ring.cohen_macaulay ? "cohen-macaulay" : "not-cohen-macaulay";
  for (const auto& M : corpus) {
    DichotomyEntry e;
    e.length = M.length();
    if (M.is_zero()) {
      e.verdict = "zero";
      rep.modules.push_back(e);
      continue;
    }
    e.depth = depth(M);
    ProjectiveDimension pd = projective_dimension(M);
    e.projective_dimension = pd.value;
    e.syzygy_rank = pd.resolution.complex->rank(pd.depth_of_ring + 1);
    if (pd.value) e.consistent = *pd.value + e.depth == rep.ring.depth;
    if (e.length) {
      if (pd.value) {
        e.verdict = "witness";
        rep.witness_found = true;
        if (!rep.ring.cohen_macaulay) e.consistent = false;
      } else {
        e.verdict = "infinite-pd";
      }
    } else {
      e.verdict = pd.value ? "finite-pd" : "not-finite-length";
    }
    rep.verified = rep.verified && e.consistent;
    rep.modules.push_back(e);
  }
  return rep;
}

}  // namespace kz
