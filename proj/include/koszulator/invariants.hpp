#pragma once

#include <optional>
#include <vector>

#include "koszulator/complex_engine.hpp"

namespace kz {

/// Sum of (-1)^i length H_i(X); throws PreconditionError on infinite length.
long euler_characteristic_fl(const Complex& X);

struct HomVanishingWitness {
  ChainMap map;
  Homotopy homotopy;
  bool verified = false;
};

struct HomVanishingReport {
  bool vacuous = false;  // one side is acyclic
  bool classes_zero = false;
  std::vector<HomVanishingWitness> witnesses;
  bool verified() const;
};

/// Requires min(P) > max(Q) on homology. A non-free P is replaced by a free complex first.
/// Witnesses cover at most max_witnesses cycle generators.
HomVanishingReport hom_vanishing_check(const ComplexPtr& P, const ComplexPtr& Q, int max_witnesses = 8);

struct HomComparisonReport {
  FPModule module_hom;         // Hom_R(M, N)
  HomotopyClasses into_module; // [U_M, N]: the same Hom read off a resolution
  HomotopyClasses derived;     // [U_M, U_N]
  std::optional<long> module_length;
  std::optional<long> derived_length;
  Matrix forward;   // derived -> into_module, composition with the augmentation of N
  Matrix backward;  // into_module -> derived, lifting along the augmentation of N
  bool inverse_maps = false;
  bool lengths_agree = false;
  bool verified() const { return inverse_maps && lengths_agree; }
};

/// Compares Hom_R(M, N) with homotopy classes between free realizations. M, N need finite pd.
HomComparisonReport module_hom_comparison(const FPModule& M, const FPModule& N);

}  // namespace kz
