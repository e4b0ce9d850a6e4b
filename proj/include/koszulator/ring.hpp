#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "koszulator/groebner.hpp"
#include "koszulator/polynomial.hpp"

namespace kz {

using PolyRingPtr = std::shared_ptr<const PolyRing>;

/// Ideal of a polynomial ring with a lazily computed reduced Gröbner basis.
class Ideal {
 public:
  Ideal() = default;
  Ideal(PolyRingPtr ring, std::vector<Polynomial> generators);

  const PolyRing& ring() const { return *ring_; }
  const PolyRingPtr& ring_ptr() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }

  /// Reduced Gröbner basis; computed once, thread-safe.
  const std::vector<Polynomial>& groebner() const;
  const GroebnerBasis& engine() const;

  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }
  bool contains(const Ideal& other) const;
  bool is_unit() const;
  bool is_zero() const { return groebner().empty(); }
  bool is_homogeneous() const;
  bool operator==(const Ideal& other) const;

  std::string to_string() const;

 private:
  struct Cache {
    std::once_flag once;
    std::vector<Polynomial> basis;
    std::unique_ptr<GroebnerBasis> engine;
  };
  void ensure() const;

  PolyRingPtr ring_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<Cache> cache_;
};

/// Graded affine algebra S/I; elements are represented by normal forms.
class QuotientRing {
 public:
  QuotientRing(PolyRingPtr base, std::vector<Polynomial> relations);

  const PolyRing& base() const { return *base_; }
  const PolyRingPtr& base_ptr() const { return base_; }
  const Ideal& defining_ideal() const { return ideal_; }
  const Field& field() const { return base_->field(); }
  int nvars() const { return base_->nvars(); }

  Polynomial reduce(const Polynomial& f) const { return ideal_.normal_form(f); }
  Polynomial add(const Polynomial& a, const Polynomial& b) const { return base_->add(a, b); }
  Polynomial sub(const Polynomial& a, const Polynomial& b) const { return base_->sub(a, b); }
  Polynomial mul(const Polynomial& a, const Polynomial& b) const { return reduce(base_->mul(a, b)); }
  Polynomial neg(const Polynomial& a) const { return base_->neg(a); }
  Polynomial one() const { return base_->constant(1); }

  /// True when the defining ideal is homogeneous.
  bool is_graded() const { return graded_; }
  /// Structural equality: same polynomial ring and same defining ideal.
  bool same_as(const QuotientRing& o) const;
  std::string to_string() const;
  std::string to_string(const Polynomial& f) const { return base_->to_string(f); }

 private:
  PolyRingPtr base_;
  Ideal ideal_;
  bool graded_ = true;
};

using RingPtr = std::shared_ptr<const QuotientRing>;

RingPtr make_ring(const Field& field, std::vector<std::string> vars, std::vector<std::string> relations);
RingPtr make_ring(PolyRingPtr base, std::vector<Polynomial> relations);

/// Element of a quotient ring kept in normal form.
struct RingElement {
  RingPtr ring;
  Polynomial value;

  static RingElement of(RingPtr ring, const Polynomial& f);
  std::string to_string() const { return ring->to_string(value); }
};

/// Result of a colon computation; colon by zero yields the unit ideal with the flag set.
struct ColonResult {
  Ideal ideal;
  bool by_zero = false;
};

/// (I : f) = { g | g f in I } in the ambient polynomial ring.
ColonResult colon_ideal(const Ideal& I, const Polynomial& f);
Ideal intersect(const Ideal& a, const Ideal& b);
Ideal sum(const Ideal& a, const Ideal& b);
Ideal product(const Ideal& a, const Ideal& b);

/// Minimal generators of the image of J in S/I, chosen by increasing degree and kept in normal form.
std::vector<Polynomial> generators_modulo(const Ideal& J, const Ideal& I);

/// Krull dimension of S/I from the leading-term ideal; nullopt for the unit ideal.
std::optional<int> krull_dimension(const Ideal& I);
/// Dimension of S/(monomial ideal); nullopt when 1 lies in it.
std::optional<int> monomial_dimension(int nvars, const std::vector<Monomial>& generators);

/// Multiplication by f is injective on S/I. False (with diagnostic) for f in I.
struct RegularityVerdict {
  bool regular = false;
  std::string diagnostic;
};
RegularityVerdict is_regular_element(const Polynomial& f, const Ideal& I);

/// Parses a polynomial in the ASCII syntax used by session files.
Polynomial parse_polynomial(const PolyRing& ring, const std::string& text);

}  // namespace kz
