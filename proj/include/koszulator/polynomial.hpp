#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace kz {

using Coeff = mpq_class;

/// Exact coefficient field: the rationals or a prime field F_p with p < 2^63.
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(std::uint64_t p);

  bool is_rationals() const { return p_ == 0; }
  std::uint64_t characteristic() const { return p_; }
  std::string name() const;

  /// Canonical representative; for F_p an integer in [0, p).
  Coeff reduce(const Coeff& c) const;
  Coeff add(const Coeff& a, const Coeff& b) const;
  Coeff sub(const Coeff& a, const Coeff& b) const;
  Coeff mul(const Coeff& a, const Coeff& b) const;
  Coeff neg(const Coeff& a) const;
  Coeff inv(const Coeff& a) const;
  Coeff div(const Coeff& a, const Coeff& b) const { return mul(a, inv(b)); }

  bool operator==(const Field& o) const { return p_ == o.p_; }

 private:
  explicit Field(std::uint64_t p) : p_(p), pz_(static_cast<unsigned long>(p)) {}
  std::uint64_t p_;
  mpz_class pz_;
};

inline constexpr int kMaxVars = 10;

/// Exponent vector with its cached weighted degree.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> exp{};
  std::int32_t deg = 0;

  bool operator==(const Monomial& o) const { return deg == o.deg && exp == o.exp; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }
};

/// Graded reverse lexicographic comparison; -1, 0 or 1.
int grevlex_compare(const Monomial& a, const Monomial& b);
bool divides(const Monomial& a, const Monomial& b);
Monomial mono_mul(const Monomial& a, const Monomial& b);
/// a / b, requires divides(b, a).
Monomial mono_div(const Monomial& a, const Monomial& b);
bool is_one(const Monomial& m);

struct Term {
  Monomial m;
  Coeff c;
};

/// Sparse polynomial, terms strictly decreasing in grevlex, no zero coefficients.
struct Polynomial {
  std::vector<Term> terms;

  bool is_zero() const { return terms.empty(); }
  const Term& lead() const { return terms.front(); }
  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }
};

/// One term of a free-module element: monomial times basis vector e_comp.
struct VTerm {
  Monomial m;
  int comp = 0;
  Coeff c;
};

/// Position-over-term order: e_0 > e_1 > ...; ties broken by grevlex.
int pot_compare(const VTerm& a, const VTerm& b);

/// Sparse free-module element, terms strictly decreasing in position-over-term order.
struct Vec {
  std::vector<VTerm> terms;

  bool is_zero() const { return terms.empty(); }
  const VTerm& lead() const { return terms.front(); }
  bool operator==(const Vec& o) const;
};

/// Polynomial ring k[x_1..x_n] with positive variable weights and grevlex order.
class PolyRing {
 public:
  PolyRing(Field field, std::vector<std::string> names, std::vector<int> weights = {});

  const Field& field() const { return field_; }
  int nvars() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& weights() const { return weights_; }
  bool operator==(const PolyRing& o) const;
  bool operator!=(const PolyRing& o) const { return !(*this == o); }

  Monomial one() const { return Monomial{}; }
  Monomial var_monomial(int i, int power = 1) const;
  Monomial lcm(const Monomial& a, const Monomial& b) const;
  /// Enumerates all monomials of weighted degree d (deterministic order, grevlex descending).
  std::vector<Monomial> monomials_of_degree(int d) const;

  Polynomial zero() const { return {}; }
  Polynomial constant(const Coeff& c) const;
  Polynomial variable(int i) const;
  Polynomial add(const Polynomial& a, const Polynomial& b) const;
  Polynomial sub(const Polynomial& a, const Polynomial& b) const;
  Polynomial neg(const Polynomial& a) const;
  Polynomial mul(const Polynomial& a, const Polynomial& b) const;
  Polynomial scale(const Polynomial& a, const Coeff& c) const;
  Polynomial mul_term(const Polynomial& a, const Monomial& m, const Coeff& c) const;
  Polynomial pow(const Polynomial& a, int e) const;
  /// Divides by the leading coefficient.
  Polynomial monic(const Polynomial& a) const;

  /// Largest weighted degree of a term; -1 for zero.
  int degree(const Polynomial& p) const;
  bool is_homogeneous(const Polynomial& p) const;
  bool is_constant(const Polynomial& p) const;

  Vec vadd(const Vec& a, const Vec& b) const;
  Vec vsub(const Vec& a, const Vec& b) const;
  Vec vscale(const Vec& a, const Coeff& c) const;
  Vec vmul_term(const Vec& a, const Monomial& m, const Coeff& c) const;
  Vec vmul_poly(const Vec& a, const Polynomial& p) const;
  /// Places polynomial p in component comp.
  Vec embed(const Polynomial& p, int comp) const;
  /// Extracts the component comp as a polynomial.
  Polynomial component(const Vec& v, int comp) const;

  std::string to_string(const Polynomial& p) const;
  std::string to_string(const Monomial& m) const;
  std::string coeff_string(const Coeff& c) const;

 private:
  Field field_;
  std::vector<std::string> names_;
  std::vector<int> weights_;
};

}  // namespace kz
