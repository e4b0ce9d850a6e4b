#include "koszulator/matrix.hpp"

#include <sstream>

#include "koszulator/errors.hpp"

namespace kz {

bool Matrix::is_zero() const {
  for (const auto& e : entries)
    if (!e.is_zero()) return false;
  return true;
}

namespace mat {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw AmbientMismatch(std::string("matrix shape mismatch in ") + what);
}

}  // namespace

Matrix identity(const QuotientRing& R, int n) { return scalar(R, n, R.one()); }

Matrix scalar(const QuotientRing& R, int n, const Polynomial& f) {
  Matrix I(n, n);
  Polynomial g = R.reduce(f);
  for (int i = 0; i < n; ++i) I.at(i, i) = g;
  return I;
}

Matrix reduce(const QuotientRing& R, const Matrix& A) {
  Matrix out = A;
  for (auto& e : out.entries) e = R.reduce(e);
  return out;
}

Matrix mul(const QuotientRing& R, const Matrix& A, const Matrix& B) {
  require(A.cols == B.rows, "mul");
  const PolyRing& S = R.base();
  Matrix C(A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < B.cols; ++j) {
      Polynomial acc;
      for (int k = 0; k < A.cols; ++k) {
        const auto& a = A.at(i, k);
        const auto& b = B.at(k, j);
        if (a.is_zero() || b.is_zero()) continue;
        acc = S.add(acc, S.mul(a, b));
      }
      C.at(i, j) = R.reduce(acc);
    }
  return C;
}

Matrix add(const QuotientRing& R, const Matrix& A, const Matrix& B) {
  require(A.rows == B.rows && A.cols == B.cols, "add");
  Matrix C(A.rows, A.cols);
  for (size_t k = 0; k < A.entries.size(); ++k) C.entries[k] = R.add(A.entries[k], B.entries[k]);
  return C;
}

Matrix sub(const QuotientRing& R, const Matrix& A, const Matrix& B) {
  require(A.rows == B.rows && A.cols == B.cols, "sub");
  Matrix C(A.rows, A.cols);
  for (size_t k = 0; k < A.entries.size(); ++k) C.entries[k] = R.sub(A.entries[k], B.entries[k]);
  return C;
}

Matrix neg(const QuotientRing& R, const Matrix& A) {
  Matrix C(A.rows, A.cols);
  for (size_t k = 0; k < A.entries.size(); ++k) C.entries[k] = R.neg(A.entries[k]);
  return C;
}

Matrix scale(const QuotientRing& R, const Matrix& A, const Polynomial& f) {
  Matrix C(A.rows, A.cols);
  for (size_t k = 0; k < A.entries.size(); ++k) C.entries[k] = R.mul(A.entries[k], f);
  return C;
}

Matrix transpose(const Matrix& A) {
  Matrix T(A.cols, A.rows);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) T.at(j, i) = A.at(i, j);
  return T;
}

Matrix kron(const QuotientRing& R, const Matrix& A, const Matrix& B) {
  Matrix K(A.rows * B.rows, A.cols * B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) {
      const auto& a = A.at(i, j);
      if (a.is_zero()) continue;
      for (int k = 0; k < B.rows; ++k)
        for (int l = 0; l < B.cols; ++l) {
          const auto& b = B.at(k, l);
          if (b.is_zero()) continue;
          K.at(i * B.rows + k, j * B.cols + l) = R.mul(a, b);
        }
    }
  return K;
}

Matrix hstack(const std::vector<const Matrix*>& parts, int rows) {
  int cols = 0;
  for (const auto* p : parts) {
    require(p->rows == rows || p->cols == 0, "hstack");
    cols += p->cols;
  }
  Matrix C(rows, cols);
  int off = 0;
  for (const auto* p : parts) {
    for (int i = 0; i < p->rows; ++i)
      for (int j = 0; j < p->cols; ++j) C.at(i, off + j) = p->at(i, j);
    off += p->cols;
  }
  return C;
}

Matrix vstack(const std::vector<const Matrix*>& parts, int cols) {
  int rows = 0;
  for (const auto* p : parts) {
    require(p->cols == cols || p->rows == 0, "vstack");
    rows += p->rows;
  }
  Matrix C(rows, cols);
  int off = 0;
  for (const auto* p : parts) {
    for (int i = 0; i < p->rows; ++i)
      for (int j = 0; j < p->cols; ++j) C.at(off + i, j) = p->at(i, j);
    off += p->rows;
  }
  return C;
}

Matrix hstack(const Matrix& A, const Matrix& B) {
  int rows = A.cols ? A.rows : B.rows;
  if (A.cols == 0 && B.cols == 0) rows = std::max(A.rows, B.rows);
  return hstack({&A, &B}, rows);
}

Matrix vstack(const Matrix& A, const Matrix& B) {
  int cols = A.rows ? A.cols : B.cols;
  if (A.rows == 0 && B.rows == 0) cols = std::max(A.cols, B.cols);
  return vstack({&A, &B}, cols);
}

Matrix block(const Matrix& A, const Matrix& B, const Matrix& C, const Matrix& D) {
  require(A.rows == B.rows && C.rows == D.rows && A.cols == C.cols && B.cols == D.cols, "block");
  Matrix M(A.rows + C.rows, A.cols + B.cols);
  auto put = [&M](const Matrix& X, int r0, int c0) {
    for (int i = 0; i < X.rows; ++i)
      for (int j = 0; j < X.cols; ++j) M.at(r0 + i, c0 + j) = X.at(i, j);
  };
  put(A, 0, 0);
  put(B, 0, A.cols);
  put(C, A.rows, 0);
  put(D, A.rows, A.cols);
  return M;
}

Matrix block_diag(const Matrix& A, const Matrix& B) {
  return block(A, Matrix(A.rows, B.cols), Matrix(B.rows, A.cols), B);
}

Matrix submatrix(const Matrix& A, int r0, int nr, int c0, int nc) {
  require(r0 >= 0 && c0 >= 0 && r0 + nr <= A.rows && c0 + nc <= A.cols, "submatrix");
  Matrix S(nr, nc);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) S.at(i, j) = A.at(r0 + i, c0 + j);
  return S;
}

Matrix select_columns(const Matrix& A, const std::vector<int>& cols) {
  Matrix S(A.rows, static_cast<int>(cols.size()));
  for (int i = 0; i < A.rows; ++i)
    for (size_t j = 0; j < cols.size(); ++j) S.at(i, static_cast<int>(j)) = A.at(i, cols[j]);
  return S;
}

Matrix column(const Matrix& A, int c) { return submatrix(A, 0, A.rows, c, 1); }

Vec column_vec(const PolyRing&, const Matrix& A, int j, int offset) {
  Vec v;
  for (int i = 0; i < A.rows; ++i)
    for (const auto& t : A.at(i, j).terms) v.terms.push_back({t.m, offset + i, t.c});
  return v;
}

void set_column(const PolyRing&, Matrix& A, int j, const Vec& v, int offset) {
  for (int i = 0; i < A.rows; ++i) A.at(i, j) = Polynomial{};
  for (const auto& t : v.terms) {
    int r = t.comp - offset;
    if (r < 0 || r >= A.rows) continue;
    A.at(r, j).terms.push_back({t.m, t.c});
  }
}

std::optional<int> column_degree(const PolyRing& S, const Matrix& A, int j, const std::vector<int>& row_degrees) {
  std::optional<int> best;
  for (int i = 0; i < A.rows; ++i) {
    const auto& e = A.at(i, j);
    if (e.is_zero()) continue;
    int rd = i < static_cast<int>(row_degrees.size()) ? row_degrees[i] : 0;
    int d = S.degree(e) + rd;
    // use the lowest-degree term so non-homogeneous columns still get a stable value
    for (const auto& t : e.terms) d = std::min(d, t.m.deg + rd);
    if (!best || d < *best) best = d;
  }
  return best;
}

bool column_homogeneous(const PolyRing& S, const Matrix& A, int j, const std::vector<int>& row_degrees) {
  std::optional<int> deg;
  for (int i = 0; i < A.rows; ++i) {
    const auto& e = A.at(i, j);
    if (e.is_zero()) continue;
    if (!S.is_homogeneous(e)) return false;
    int rd = i < static_cast<int>(row_degrees.size()) ? row_degrees[i] : 0;
    int d = S.degree(e) + rd;
    if (deg && *deg != d) return false;
    deg = d;
  }
  return true;
}

bool is_graded_map(const PolyRing& S, const Matrix& A, const std::vector<int>& row_degrees,
                   const std::vector<int>& col_degrees) {
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) {
      const auto& e = A.at(i, j);
      if (e.is_zero()) continue;
      if (!S.is_homogeneous(e) || S.degree(e) != col_degrees[j] - row_degrees[i]) return false;
    }
  return true;
}

bool has_unit_entry(const PolyRing& S, const Matrix& A) {
  for (const auto& e : A.entries)
    if (!e.is_zero() && S.is_constant(e)) return true;
  return false;
}

std::vector<std::vector<std::string>> to_strings(const PolyRing& S, const Matrix& A) {
  std::vector<std::vector<std::string>> out(A.rows, std::vector<std::string>(A.cols));
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) out[i][j] = S.to_string(A.at(i, j));
  return out;
}

std::string to_string(const PolyRing& S, const Matrix& A) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < A.rows; ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < A.cols; ++j) os << (j ? ", " : "") << S.to_string(A.at(i, j));
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace mat
}  // namespace kz
