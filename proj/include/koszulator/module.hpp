#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "koszulator/matrix.hpp"
#include "koszulator/ring.hpp"
#include "koszulator/span.hpp"

namespace kz {

/// Graded module R^n(-degrees) / (column span of the relation matrix).
class FPModule {
 public:
  FPModule() = default;
  FPModule(RingPtr ring, std::vector<int> degrees, Matrix relations);

  static FPModule free(RingPtr ring, std::vector<int> degrees);
  static FPModule free(RingPtr ring, int rank) { return free(std::move(ring), std::vector<int>(rank, 0)); }
  static FPModule zero(RingPtr ring) { return free(std::move(ring), 0); }
  /// R/J generated in the given degree.
  static FPModule cyclic(RingPtr ring, const std::vector<Polynomial>& ideal_generators, int degree = 0);

  const RingPtr& ring() const { return ring_; }
  const QuotientRing& R() const { return *ring_; }
  int rank() const { return static_cast<int>(degrees_.size()); }
  const std::vector<int>& degrees() const { return degrees_; }
  const Matrix& relations() const { return relations_; }

  /// No relations modulo the ring (structurally free).
  bool is_free() const { return free_; }
  /// Every generator lies in the relation submodule.
  bool is_zero() const;
  /// Relations are homogeneous with respect to the generator degrees.
  bool is_graded() const;

  /// Reduced Gröbner data of the relation submodule.
  const ColumnSpan& relation_span() const;
  /// Canonical remainders of columns of v (an element is zero iff its remainder is zero).
  Matrix normal_form(const Matrix& v) const;
  bool is_zero_element(const Matrix& v) const;

  /// Standard monomials per generator; nullopt when infinite.
  std::optional<long> length() const;
  /// Number of standard monomials of degree d (the Hilbert function at d).
  long hilbert_value(int d) const;
  /// Krull dimension of the support; nullopt for the zero module.
  std::optional<int> dimension() const;

 private:
  struct Cache {
    std::once_flag once;
    std::unique_ptr<ColumnSpan> span;
  };

  RingPtr ring_;
  std::vector<int> degrees_;
  Matrix relations_;
  bool free_ = true;
  std::shared_ptr<Cache> cache_;
};

/// Degree-preserving map given on generators: matrix is target.rank x source.rank.
struct ModuleMorphism {
  FPModule source;
  FPModule target;
  Matrix matrix;

  static ModuleMorphism identity(const FPModule& M);
  static ModuleMorphism zero(const FPModule& source, const FPModule& target);

  /// Relations of the source land in the relations of the target.
  bool is_well_defined() const;
  bool is_zero() const;
  bool is_surjective() const;
  bool is_injective() const;
};

ModuleMorphism compose(const ModuleMorphism& g, const ModuleMorphism& f);
/// Difference of two parallel morphisms is zero modulo target relations.
bool equal_morphisms(const ModuleMorphism& f, const ModuleMorphism& g);

/// (span(G) + span(B)) / span(B) inside R^n, presented on a minimal subset of the
/// columns of G. generators holds the chosen columns as ambient vectors.
struct Subquotient {
  FPModule module;
  Matrix generators;
};
Subquotient subquotient(const RingPtr& ring, const Matrix& G, const Matrix& B, const std::vector<int>& ambient_degrees,
                        bool minimize = true);

/// Homology at a term R^n / rel: { v | out v in span(rel_next) } / (im in + span(rel)).
Subquotient homology_at(const RingPtr& ring, const Matrix& in, const Matrix& out, const Matrix& rel,
                        const Matrix& rel_next, const std::vector<int>& degrees);

/// Minimal presentation with mutually inverse comparison maps.
struct Minimized {
  FPModule module;
  Matrix to_original;    // generators of module as elements of the original
  Matrix from_original;  // original generators in terms of the new ones
};
Minimized minimize(const FPModule& M);

/// Kernel of a morphism as a submodule of its source.
Subquotient kernel(const ModuleMorphism& f);
/// Cokernel with the quotient map from the target.
FPModule cokernel(const ModuleMorphism& f);

/// (0 : M) as an ideal of the ambient polynomial ring (containing the ring relations).
Ideal annihilator(const FPModule& M);

/// Direct sum of modules.
FPModule direct_sum(const FPModule& a, const FPModule& b);
/// M twisted so that generator degrees increase by s.
FPModule twist(const FPModule& M, int s);

}  // namespace kz
