#pragma once

#include <optional>
#include <string>
#include <vector>

#include "koszulator/ring.hpp"

namespace kz {

/// Dense matrix of polynomials, row-major. Entries are kept in normal form
/// whenever a matrix is produced by the ring-aware helpers below.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<Polynomial> entries;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), entries(static_cast<size_t>(r) * c) {}

  Polynomial& at(int r, int c) { return entries[static_cast<size_t>(r) * cols + c]; }
  const Polynomial& at(int r, int c) const { return entries[static_cast<size_t>(r) * cols + c]; }

  bool is_zero() const;
  bool operator==(const Matrix& o) const { return rows == o.rows && cols == o.cols && entries == o.entries; }
  bool operator!=(const Matrix& o) const { return !(*this == o); }
};

namespace mat {

Matrix identity(const QuotientRing& R, int n);
Matrix scalar(const QuotientRing& R, int n, const Polynomial& f);
Matrix reduce(const QuotientRing& R, const Matrix& A);
Matrix mul(const QuotientRing& R, const Matrix& A, const Matrix& B);
Matrix add(const QuotientRing& R, const Matrix& A, const Matrix& B);
Matrix sub(const QuotientRing& R, const Matrix& A, const Matrix& B);
Matrix neg(const QuotientRing& R, const Matrix& A);
Matrix scale(const QuotientRing& R, const Matrix& A, const Polynomial& f);
Matrix transpose(const Matrix& A);
/// Kronecker product A ⊗ B.
Matrix kron(const QuotientRing& R, const Matrix& A, const Matrix& B);
Matrix hstack(const std::vector<const Matrix*>& parts, int rows);
Matrix vstack(const std::vector<const Matrix*>& parts, int cols);
Matrix hstack(const Matrix& A, const Matrix& B);
Matrix vstack(const Matrix& A, const Matrix& B);
/// [[A, B], [C, D]]; blocks must have compatible shapes.
Matrix block(const Matrix& A, const Matrix& B, const Matrix& C, const Matrix& D);
Matrix block_diag(const Matrix& A, const Matrix& B);
Matrix submatrix(const Matrix& A, int r0, int nr, int c0, int nc);
Matrix select_columns(const Matrix& A, const std::vector<int>& cols);
Matrix column(const Matrix& A, int c);

/// Column j as a free-module vector (row index = component).
Vec column_vec(const PolyRing& S, const Matrix& A, int j, int offset = 0);
/// Inverse of column_vec restricted to components [offset, offset + rows).
void set_column(const PolyRing& S, Matrix& A, int j, const Vec& v, int offset = 0);

/// Degree of column j relative to row degrees: min over nonzero entries of deg + row degree.
std::optional<int> column_degree(const PolyRing& S, const Matrix& A, int j, const std::vector<int>& row_degrees);
/// Every nonzero entry of the column is homogeneous of the degree making the column homogeneous.
bool column_homogeneous(const PolyRing& S, const Matrix& A, int j, const std::vector<int>& row_degrees);
/// Entry (i, j) is zero or homogeneous of degree col_degrees[j] - row_degrees[i].
bool is_graded_map(const PolyRing& S, const Matrix& A, const std::vector<int>& row_degrees,
                   const std::vector<int>& col_degrees);
/// True if some entry is a nonzero constant.
bool has_unit_entry(const PolyRing& S, const Matrix& A);

std::vector<std::vector<std::string>> to_strings(const PolyRing& S, const Matrix& A);
std::string to_string(const PolyRing& S, const Matrix& A);

}  // namespace mat
}  // namespace kz
