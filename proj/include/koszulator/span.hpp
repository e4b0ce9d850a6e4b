#pragma once

#include <optional>
#include <vector>

#include "koszulator/groebner.hpp"
#include "koszulator/matrix.hpp"
#include "koszulator/ring.hpp"

namespace kz {

/// Submodule of R^n spanned by the columns of A, taken modulo the columns of K
/// and the defining ideal of R. With tracking on, membership comes with
/// coefficients on the columns of A.
class ColumnSpan {
 public:
  /// Empty degree lists default to zeros (rows) or to the induced column degrees.
  ColumnSpan(RingPtr ring, const Matrix& A, const Matrix& K = {}, const std::vector<int>& row_degrees = {},
             bool tracking = true, const std::vector<int>& col_degrees = {});

  int ambient_rank() const { return n_; }
  int generator_count() const { return a_; }

  /// Columnwise remainders in R^n; zero columns are exactly the members.
  Matrix normal_form(const Matrix& B) const;
  bool contains(const Matrix& B) const;
  bool contains_column(const Matrix& B, int j) const;

  struct Lift {
    std::optional<Matrix> X;   // A X = B modulo K and the ring relations
    int failed_column = -1;    // first column of B outside the span
    Matrix remainder;          // normal forms of the columns of B
  };
  /// Requires tracking.
  Lift lift(const Matrix& B) const;

  /// Generators of { c in R^a | A c in span(K) }; requires tracking.
  Matrix syzygies() const;

  /// Leading terms of the underlying Gröbner basis (components index rows, then tracking slots).
  std::vector<VTerm> leading_terms() const { return gb_.leading_terms(); }

 private:
  Vec embed_column(const Matrix& B, int j) const;

  RingPtr ring_;
  int n_ = 0;
  int a_ = 0;
  bool tracking_ = true;
  std::vector<int> comp_degrees_;
  GroebnerBasis gb_;
};

/// Degrees of the columns of A relative to row degrees (0 for zero columns).
std::vector<int> column_degrees(const PolyRing& S, const Matrix& A, const std::vector<int>& row_degrees);

/// Indices of a minimal subset of the columns of A generating span(A) + span(K),
/// scanned in increasing column degree (stable). Minimal in the graded sense
/// when the input is homogeneous.
std::vector<int> minimal_generator_indices(const RingPtr& ring, const Matrix& A, const Matrix& K,
                                           const std::vector<int>& row_degrees);

/// Kernel of A modulo span(K): matrix whose columns generate { c | A c in span(K) }.
/// With minimal set, the generators are pruned to a minimal set.
Matrix syzygy_module(const RingPtr& ring, const Matrix& A, const Matrix& K = {}, const std::vector<int>& row_degrees = {},
                     const std::vector<int>& col_degrees = {}, bool minimal = true);

/// X with A X = B (modulo K), or nullopt with the failing column reported.
ColumnSpan::Lift lift_through(const RingPtr& ring, const Matrix& A, const Matrix& B, const Matrix& K = {});

}  // namespace kz
