#pragma once

// Degree-truncation oracle: graded pieces as explicit Q-vector spaces, ranks by
// Gaussian elimination. Shares no algorithm with the Gröbner engine; engine
// polynomials are only read term by term.

#include <gmpxx.h>

#include <map>
#include <optional>
#include <vector>

#include "koszulator/matrix.hpp"

namespace oracle {

using Exp = std::vector<int>;
using Poly = std::map<Exp, mpq_class>;  // exponent vector -> nonzero coefficient

Poly convert(const kz::PolyRing& S, const kz::Polynomial& f);
int degree(const Poly& f);  // standard grading, homogeneous input
std::vector<Exp> monomials(int nvars, int d);

/// Rank of a list of sparse vectors indexed by (component, exponent).
using Vector = std::map<std::pair<int, Exp>, mpq_class>;
long rank(const std::vector<Vector>& vs);

/// dim_Q of (I)_d for homogeneous generators.
long ideal_dim(int nvars, const std::vector<Poly>& gens, int d);
bool member(int nvars, const std::vector<Poly>& gens, const Poly& f);
/// dim_Q (I : f)_d.
long colon_dim(int nvars, const std::vector<Poly>& gens, const Poly& f, int d);

/// Columns of a homogeneous matrix over S with given row degrees.
struct GradedMatrix {
  std::vector<int> row_degrees;
  std::vector<std::vector<Poly>> columns;  // columns[j][i]
  std::vector<int> col_degrees;
};
/// Column degrees are inferred from the first nonzero entry unless given; zero columns get degree 0.
GradedMatrix convert(const kz::PolyRing& S, const kz::Matrix& A, const std::vector<int>& row_degrees,
                     const std::vector<int>& col_degrees = {});

/// dim_Q of (coker A ⊗ S/I)_d.
long cokernel_dim(int nvars, const GradedMatrix& A, const std::vector<Poly>& ring_rel, int d);
/// Sum over degrees up to max_degree; nullopt when degree max_degree is still nonzero.
std::optional<long> cokernel_length(int nvars, const GradedMatrix& A, const std::vector<Poly>& ring_rel, int max_degree);

/// dim_Q of the degree-d syzygies of A over S/I: { c in ⊕ R(-col_degrees) : A c = 0 in R^rows }.
long syzygy_dim(int nvars, const GradedMatrix& A, const std::vector<Poly>& ring_rel, int d);
/// dim_Q of the degree-d part of the submodule of ⊕ R(-col_degrees) spanned by the columns of Z.
long span_dim(int nvars, const std::vector<int>& ambient_degrees, const GradedMatrix& Z, const std::vector<Poly>& ring_rel,
              int d);

}  // namespace oracle
