#pragma once

#include <optional>
#include <vector>

#include "koszulator/complex.hpp"
#include "koszulator/module.hpp"

namespace kz {

/// Free resolution F_0 <- F_1 <- ... <- F_k with augmentation F_0 -> M.
struct Resolution {
  ComplexPtr complex;
  Matrix augmentation;   // M.rank x rank(F_0)
  bool terminated = false;  // the last computed syzygy module was zero
  int length = 0;        // highest index with a nonzero term

  std::vector<int> ranks() const;
};

/// Resolves M through F_{max_steps}. Minimal resolutions need a graded module.
Resolution free_resolution(const FPModule& M, int max_steps, bool minimal = true);

/// Ext^i(M, N) from a resolution of M.
FPModule ext_module(const FPModule& M, const FPModule& N, int i);

/// Residue field R/(x_1, ..., x_n) generated in degree 0.
FPModule residue_field(const RingPtr& ring);

/// min { i | Ext^i(k, M) != 0 }; M must be nonzero.
int depth(const FPModule& M);

/// Projective dimension; nullopt means infinite; -1 for the zero module.
struct ProjectiveDimension {
  std::optional<int> value;
  int depth_of_ring = 0;
  Resolution resolution;
};
ProjectiveDimension projective_dimension(const FPModule& M);

/// Largest n <= cutoff with Ext^n(M, C) != 0 (0 if none); nullopt (above cutoff)
/// when Ext^cutoff itself is nonzero.
struct ExtVanishing {
  std::optional<int> value;
  std::vector<bool> nonzero;  // index i: Ext^i(M, C) != 0, for i = 0..cutoff
};
ExtVanishing ext_vanishing_dimension(const FPModule& M, const FPModule& C, int cutoff);

}  // namespace kz
