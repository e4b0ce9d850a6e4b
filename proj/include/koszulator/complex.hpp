#pragma once

#include <map>
#include <memory>
#include <set>
#include <vector>

#include "koszulator/module.hpp"

namespace kz {

/// Bounded chain complex whose terms are finitely presented modules; a complex
/// of free modules is the special case with no relations. d(n): X_n -> X_{n-1}.
class Complex {
 public:
  explicit Complex(RingPtr ring);
  Complex(RingPtr ring, std::map<int, FPModule> terms, std::map<int, Matrix> differentials);

  /// One-term complex M placed in degree n.
  static Complex single(const FPModule& M, int n);

  const RingPtr& ring() const { return ring_; }
  const QuotientRing& R() const { return *ring_; }

  /// True if no term has positive rank.
  bool empty() const { return terms_.empty(); }
  /// Structural range (terms of positive rank); min_c > max_c for the empty complex.
  int min_c() const { return empty() ? 0 : terms_.begin()->first; }
  int max_c() const { return empty() ? -1 : terms_.rbegin()->first; }

  const FPModule& term(int n) const;
  int rank(int n) const { return term(n).rank(); }
  Matrix d(int n) const;
  bool is_free() const;
  bool is_graded() const;

  const std::map<int, FPModule>& terms() const { return terms_; }

  /// Throws InvariantViolation naming the first degree where d∘d != 0 or d is not well defined.
  void validate() const;
  bool operator==(const Complex& o) const;

 private:
  RingPtr ring_;
  FPModule zero_;
  std::map<int, FPModule> terms_;
  std::map<int, Matrix> diffs_;
};

using ComplexPtr = std::shared_ptr<const Complex>;

inline ComplexPtr make_complex(Complex c) { return std::make_shared<const Complex>(std::move(c)); }

/// Degreewise map; component n is dst.rank(n) x src.rank(n).
struct ChainMap {
  ComplexPtr src;
  ComplexPtr dst;
  std::map<int, Matrix> comps;

  Matrix at(int n) const;
  /// Commutes with the differentials and each component respects relations.
  bool is_chain_map() const;
  /// Lowest degree where commutation fails, if any.
  std::optional<int> first_failure() const;
};

/// Degree-raising map h_n: src_n -> dst_{n+1}.
struct Homotopy {
  ComplexPtr src;
  ComplexPtr dst;
  std::map<int, Matrix> comps;

  Matrix at(int n) const;
};

ChainMap identity_map(const ComplexPtr& X);
ChainMap zero_map(const ComplexPtr& X, const ComplexPtr& Y);
ChainMap compose(const ChainMap& g, const ChainMap& f);
ChainMap add(const ChainMap& f, const ChainMap& g);
ChainMap sub(const ChainMap& f, const ChainMap& g);
ChainMap scale(const ChainMap& f, const Polynomial& c);
/// Same components, reinterpreted between other (componentwise identical) complexes.
ChainMap retarget(const ChainMap& f, const ComplexPtr& src, const ComplexPtr& dst);

/// d h + h d as a chain map src -> dst.
ChainMap boundary_of(const Homotopy& h);
/// f - g equals d h + h d modulo target relations.
bool is_homotopy_between(const Homotopy& h, const ChainMap& f, const ChainMap& g);

/// (T^s X)_i = X_{i-s} with differentials multiplied by (-1)^s.
Complex shift(const Complex& X, int s);
/// T^s f between shifted complexes (components unchanged).
ChainMap shift_map(const ChainMap& f, const ComplexPtr& shifted_src, const ComplexPtr& shifted_dst, int s);
Complex direct_sum(const Complex& X, const Complex& Y);

/// cone(f)_n = X_{n-1} ⊕ Y_n with D = [[-d_X, 0], [-f, d_Y]].
struct Cone {
  ComplexPtr complex;
  ChainMap injection;   // Y -> cone, y ↦ (0, y)
  ChainMap projection;  // cone -> T X, (x, y) ↦ x
};
Cone cone(const ChainMap& f);
/// Map of cones induced by a strictly commuting square b∘f = f'∘a: (x, y) ↦ (a x, b y).
ChainMap cone_map(const Cone& from, const Cone& to, const ChainMap& a, const ChainMap& b);

/// H_n(X) presented on cycle representatives in X_n.
Subquotient homology(const Complex& X, int n);

struct ComplexStats {
  int min_c = 0;
  int max_c = -1;
  int min = 0;
  int max = 0;
  int wid = 0;
  bool acyclic = true;
  std::set<int> supph;
};
ComplexStats complex_stats(const Complex& X);

}  // namespace kz
