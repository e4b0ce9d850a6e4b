#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "koszulator/complex_engine.hpp"
#include "koszulator/serre.hpp"

namespace kz {

/// Kos(f_1..f_c) ⊗ F with bottom term in degree m. Basis of K_{m+p}: p-subsets in
/// lexicographic order, each tensored with the basis of F.
ComplexPtr koszul_complex(const RingPtr& ring, const std::vector<Polynomial>& fs, const FPModule& F, int m);

/// Lexicographic p-subsets of {0..c-1}.
std::vector<std::vector<int>> exterior_basis(int c, int p);

/// Ann of the module of homotopy classes of endomorphisms of a bounded free complex.
Ideal homotopy_annihilator(const ComplexPtr& X);

/// sigma with d sigma + sigma d = f id; throws NotNullHomotopic otherwise.
Homotopy scalar_null_homotopy(const Polynomial& f, const ComplexPtr& X);

struct KoszulCover {
  std::vector<Polynomial> regular_sequence;
  FPModule base_free;
  ComplexPtr complex;     // K
  ChainMap alpha;         // K -> covered
  std::vector<Homotopy> homotopies;
  ComplexPtr covered;     // the input truncated to start at m
  ChainMap to_input;      // covered -> input, a quasi-isomorphism
  int m = 0;
  Ideal endomorphism_annihilator;
  Ideal target_ideal;     // J
  bool degenerate = false;  // acyclic input
  bool closed_form = true;  // alpha from the ordered homotopy products, not the generic solve
  int search_attempts = 0;

  // Verification verdicts.
  bool d_squared_zero = false;
  bool chain_map = false;
  bool homology_concentrated = false;
  bool bottom_surjective = false;
  bool homologies_in_spec = false;
  bool verified() const {
    return d_squared_zero && chain_map && homology_concentrated && bottom_surjective && homologies_in_spec;
  }
};

/// Covers the bottom homology of a bounded free complex by a Koszul complex.
/// J defaults to the annihilator of the bottom homology.
KoszulCover koszul_cover(const ComplexPtr& P, const SerreSpec& spec, std::optional<Ideal> J, std::uint64_t seed);

struct ConeWidthReport {
  ComplexStats input;
  ComplexStats cone;
  ComplexStats shifted_sum;  // T^{-1} cone ⊕ K
  ComplexPtr cone_complex;
  bool cone_narrower = false;
  bool sum_narrower = false;
  bool bottom_killed = false;
  bool verified() const { return cone_narrower && sum_narrower && bottom_killed; }
};
ConeWidthReport cone_width_report(const KoszulCover& cover);

/// Degreewise pullback of f: Q -> Y and beta: M -> Y.
struct Pullback {
  ComplexPtr complex;
  ChainMap nu;  // to Q
  ChainMap mu;  // to M
  bool homologies_in_spec = true;
};
Pullback pullback_complex(const ChainMap& f, const ChainMap& beta, const std::optional<SerreSpec>& spec = {});

/// Square MX -> X, MY -> Y over g with both module complexes concentrated in degree m.
struct MorphismCover {
  int m = 0;
  ComplexPtr MX;
  ComplexPtr MY;
  ChainMap betaX;
  ChainMap betaY;
  ChainMap kappa;
  Pullback pullback;
  ComplexPtr koszul;
  ChainMap alpha;  // koszul -> pullback
  std::vector<Polynomial> regular_sequence;
  Ideal homology_annihilator;  // product of Ann H_i of the pullback
  bool degenerate = false;

  bool square_commutes = false;
  bool betaX_surjective = false;
  bool betaY_surjective = false;
  bool terms_in_spec = false;
  bool verified() const { return square_commutes && betaX_surjective && betaY_surjective && terms_in_spec; }
};
MorphismCover morphism_cover(const ChainMap& g, const SerreSpec& spec, std::uint64_t seed);

}  // namespace kz
