#pragma once

#include <set>
#include <vector>

#include "koszulator/polynomial.hpp"

namespace kz {

/// Incremental Buchberger engine for submodules of a free module over a polynomial ring.
///
/// The module order is position-over-term with e_0 largest, so any prefix of the
/// components is eliminated first; callers rely on this for syzygies and lifts.
/// S-pairs are selected by (sugar, lcm degree, component, creation order), which
/// makes the resulting reduced basis independent of scheduling.
class GroebnerBasis {
 public:
  /// comp_degrees[i] is the degree of the basis vector e_i; it only feeds the sugar.
  explicit GroebnerBasis(const PolyRing& ring, std::vector<int> comp_degrees = {});

  /// Wraps elements already known to form a Gröbner basis; no pairs are queued.
  static GroebnerBasis trusted(const PolyRing& ring, std::vector<Vec> basis, std::vector<int> comp_degrees = {});

  void add(const Vec& v);
  /// Runs Buchberger until every queued pair reduces to zero.
  void complete();
  bool is_complete() const { return pairs_.empty() && pending_.empty(); }

  /// Fully reduced remainder; requires a completed basis.
  Vec normal_form(const Vec& v) const;
  bool contains(const Vec& v) const { return normal_form(v).is_zero(); }
  /// True if the term is divisible by some leading term.
  bool is_reducible(const Monomial& m, int comp) const;

  /// Reduced basis: minimal, monic, tail reduced, sorted ascending by leading term.
  std::vector<Vec> reduced() const;
  /// Leading terms of the current basis (not necessarily minimal).
  std::vector<VTerm> leading_terms() const;

  const PolyRing& ring() const { return *ring_; }

 private:
  struct Pair {
    int sugar;
    int lcm_deg;
    int comp;
    long seq;
    int i;
    int j;
    Monomial lcm;
    bool operator<(const Pair& o) const;
  };

  int sugar_of(const Vec& v) const;
  const Vec* find_reducer(const VTerm& t) const;
  void insert(Vec h, int sugar);
  Vec s_vector(int i, int j) const;
  void index(int idx, int comp);

  const PolyRing* ring_;
  std::vector<int> comp_degrees_;
  std::vector<Vec> basis_;
  std::vector<int> sugar_;
  std::vector<bool> redundant_;
  std::vector<std::vector<int>> by_comp_;
  std::set<Pair> pairs_;
  std::vector<Vec> pending_;
  long seq_ = 0;
};

/// Reduced Gröbner basis of an ideal.
std::vector<Polynomial> groebner_basis(const PolyRing& ring, const std::vector<Polynomial>& gens);
/// Normal form of f modulo a Gröbner basis of an ideal.
Polynomial normal_form(const PolyRing& ring, const Polynomial& f, const std::vector<Polynomial>& basis);

}  // namespace kz
