#pragma once

// Small builders shared by the unit tests.

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "koszulator/complex.hpp"
#include "koszulator/module.hpp"
#include "koszulator/session.hpp"

namespace kzt {

inline kz::RingPtr ring(std::vector<std::string> vars, std::vector<std::string> rel = {}) {
  return kz::make_ring(kz::Field::rationals(), std::move(vars), std::move(rel));
}

inline kz::Polynomial poly(const kz::RingPtr& R, const std::string& s) {
  return R->reduce(kz::parse_polynomial(R->base(), s));
}

inline std::vector<kz::Polynomial> polys(const kz::RingPtr& R, const std::vector<std::string>& ss) {
  std::vector<kz::Polynomial> out;
  for (const auto& s : ss) out.push_back(poly(R, s));
  return out;
}

inline kz::Ideal ideal(const kz::RingPtr& R, const std::vector<std::string>& gens) {
  return kz::Ideal(R->base_ptr(), polys(R, gens));
}

inline kz::Matrix matrix(const kz::RingPtr& R, const std::vector<std::vector<std::string>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r ? static_cast<int>(rows.front().size()) : 0;
  kz::Matrix A(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) A.at(i, j) = poly(R, rows[i][j]);
  return A;
}

inline kz::FPModule quotient(const kz::RingPtr& R, const std::vector<std::string>& gens, int degree = 0) {
  return kz::FPModule::cyclic(R, polys(R, gens), degree);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline kz::Session corpus(const std::string& name) {
  return kz::parse_session(read_file(std::string(KZ_CORPUS_DIR) + "/" + name));
}

// [R(-e-g) -f-> R(-g)] in degrees s+1, s.
inline kz::ComplexPtr two_term(const kz::RingPtr& R, const kz::Polynomial& f, int s, int g = 0) {
  const int e = R->base().degree(f);
  kz::Matrix d(1, 1);
  d.at(0, 0) = f;
  return kz::make_complex(kz::Complex(
      R, {{s, kz::FPModule::free(R, std::vector<int>{g})}, {s + 1, kz::FPModule::free(R, std::vector<int>{g + e})}},
      {{s + 1, d}}));
}

/// Random pair of free complexes over QQ[x,y]/(xy) with finite-length homology and
/// min(P) > max(Q). Contractible summands overlap the other side's range.
struct RandomPair {
  kz::ComplexPtr P;
  kz::ComplexPtr Q;
  std::string description;
};

inline RandomPair random_pair(const kz::RingPtr& R, std::mt19937_64& rng) {
  static const std::vector<std::string> gens = {"x-y", "x+y", "x-2*y", "3*x+y", "x^2+y^2", "x^2-y^2"};
  auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };
  const int split = pick(3);
  RandomPair out;
  auto build = [&](int lo, int hi, int clo, int chi, std::string& desc) {
    kz::Complex X(R);
    const int pieces = 1 + pick(2);
    for (int i = 0; i < pieces; ++i) {
      const std::string& f = gens[pick(static_cast<int>(gens.size()))];
      const int s = lo + pick(hi - lo + 1);
      X = kz::direct_sum(X, *two_term(R, poly(R, f), s));
      desc += " [" + f + "]@" + std::to_string(s);
    }
    if (pick(2) == 0) {
      const int t = clo + pick(chi - clo + 1);
      X = kz::direct_sum(X, *two_term(R, R->one(), t, pick(2)));
      desc += " [1]@" + std::to_string(t);
    }
    return kz::make_complex(X);
  };
  std::string dp = "P:", dq = " Q:";
  out.P = build(split + 1, split + 2, split - 2, split, dp);
  out.Q = build(split - 2, split, split, split + 2, dq);
  out.description = dp + dq;
  return out;
}

}  // namespace kzt