#include "koszulator/span.hpp"

#include <algorithm>
#include <numeric>

#include "koszulator/errors.hpp"

namespace kz {

namespace {

int rows_of(const Matrix& A, const Matrix& K) { return A.cols ? A.rows : K.rows; }

}  // namespace

std::vector<int> column_degrees(const PolyRing& S, const Matrix& A, const std::vector<int>& row_degrees) {
  std::vector<int> out(A.cols, 0);
  for (int j = 0; j < A.cols; ++j) out[j] = mat::column_degree(S, A, j, row_degrees).value_or(0);
  return out;
}

ColumnSpan::ColumnSpan(RingPtr ring, const Matrix& A, const Matrix& K, const std::vector<int>& row_degrees,
                       bool tracking, const std::vector<int>& col_degrees)
    : ring_(std::move(ring)),
      n_(rows_of(A, K)),
      a_(tracking ? A.cols : 0),
      tracking_(tracking),
      gb_(ring_->base()) {
  const PolyRing& S = ring_->base();
  if (K.cols && K.rows != n_) throw AmbientMismatch("relation matrix has the wrong number of rows");
  comp_degrees_.assign(n_, 0);
  for (int i = 0; i < n_ && i < static_cast<int>(row_degrees.size()); ++i) comp_degrees_[i] = row_degrees[i];
  std::vector<int> cdeg =
      static_cast<int>(col_degrees.size()) == A.cols ? col_degrees : column_degrees(S, A, comp_degrees_);
  if (tracking_) comp_degrees_.insert(comp_degrees_.end(), cdeg.begin(), cdeg.end());
  gb_ = GroebnerBasis(S, comp_degrees_);

  const auto& rel = ring_->defining_ideal().groebner();
  for (int j = 0; j < A.cols; ++j) {
    Vec v = mat::column_vec(S, A, j);
    if (tracking_) v = S.vadd(v, S.embed(S.constant(1), n_ + j));
    gb_.add(v);
  }
  for (int j = 0; j < K.cols; ++j) gb_.add(mat::column_vec(S, K, j));
  for (int i = 0; i < n_ + a_; ++i)
    for (const auto& g : rel) gb_.add(S.embed(g, i));
  gb_.complete();
}

Vec ColumnSpan::embed_column(const Matrix& B, int j) const {
  if (B.rows != n_) throw AmbientMismatch("vector has the wrong number of rows");
  return mat::column_vec(ring_->base(), B, j);
}

Matrix ColumnSpan::normal_form(const Matrix& B) const {
  Matrix out(B.rows, B.cols);
  for (int j = 0; j < B.cols; ++j) mat::set_column(ring_->base(), out, j, gb_.normal_form(embed_column(B, j)));
  return out;
}

bool ColumnSpan::contains_column(const Matrix& B, int j) const {
  Vec r = gb_.normal_form(embed_column(B, j));
  return r.is_zero() || r.lead().comp >= n_;
}

bool ColumnSpan::contains(const Matrix& B) const {
  for (int j = 0; j < B.cols; ++j)
    if (!contains_column(B, j)) return false;
  return true;
}

ColumnSpan::Lift ColumnSpan::lift(const Matrix& B) const {
  if (!tracking_) throw PreconditionError("lift requires a tracking span");
  const PolyRing& S = ring_->base();
  Lift out;
  out.remainder = Matrix(B.rows, B.cols);
  Matrix X(a_, B.cols);
  for (int j = 0; j < B.cols; ++j) {
    Vec r = gb_.normal_form(embed_column(B, j));
    mat::set_column(S, out.remainder, j, r, 0);
    bool inside = r.is_zero() || r.lead().comp >= n_;
    if (!inside) {
      if (out.failed_column < 0) out.failed_column = j;
      continue;
    }
    mat::set_column(S, X, j, S.vscale(r, Coeff(-1)), n_);
  }
  if (out.failed_column < 0) out.X = mat::reduce(*ring_, X);
  return out;
}

Matrix ColumnSpan::syzygies() const {
  if (!tracking_) throw PreconditionError("syzygies require a tracking span");
  const PolyRing& S = ring_->base();
  std::vector<Vec> found;
  for (const auto& v : gb_.reduced()) {
    if (v.lead().comp < n_) continue;
    found.push_back(v);
  }
  Matrix Z(a_, 0);
  std::vector<Matrix> cols;
  for (const auto& v : found) {
    Matrix c(a_, 1);
    mat::set_column(S, c, 0, v, n_);
    c = mat::reduce(*ring_, c);
    if (!c.is_zero()) cols.push_back(std::move(c));
  }
  std::vector<const Matrix*> ptrs;
  for (const auto& c : cols) ptrs.push_back(&c);
  return mat::hstack(ptrs, a_);
}

std::vector<int> minimal_generator_indices(const RingPtr& ring, const Matrix& A, const Matrix& K,
                                           const std::vector<int>& row_degrees) {
  const PolyRing& S = ring->base();
  const int n = rows_of(A, K);
  std::vector<int> rd(n, 0);
  for (int i = 0; i < n && i < static_cast<int>(row_degrees.size()); ++i) rd[i] = row_degrees[i];
  std::vector<int> cdeg = column_degrees(S, A, rd);
  std::vector<int> order(A.cols);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return cdeg[a] < cdeg[b]; });

  GroebnerBasis gb(S, rd);
  for (int j = 0; j < K.cols; ++j) gb.add(mat::column_vec(S, K, j));
  for (int i = 0; i < n; ++i)
    for (const auto& g : ring->defining_ideal().groebner()) gb.add(S.embed(g, i));
  std::vector<int> kept;
  for (int j : order) {
    gb.complete();
    Vec v = mat::column_vec(S, A, j);
    if (gb.normal_form(v).is_zero()) continue;
    kept.push_back(j);
    gb.add(v);
  }
  std::sort(kept.begin(), kept.end(), [&](int a, int b) {
    if (cdeg[a] != cdeg[b]) return cdeg[a] < cdeg[b];
    return a < b;
  });
  return kept;
}

Matrix syzygy_module(const RingPtr& ring, const Matrix& A, const Matrix& K, const std::vector<int>& row_degrees,
                     const std::vector<int>& col_degrees, bool minimal) {
  ColumnSpan span(ring, A, K, row_degrees, true, col_degrees);
  Matrix Z = span.syzygies();
  if (!minimal || Z.cols == 0) return Z;
  std::vector<int> rd(A.rows, 0);
  for (int i = 0; i < A.rows && i < static_cast<int>(row_degrees.size()); ++i) rd[i] = row_degrees[i];
  std::vector<int> cdeg =
      static_cast<int>(col_degrees.size()) == A.cols ? col_degrees : column_degrees(ring->base(), A, rd);
  return mat::select_columns(Z, minimal_generator_indices(ring, Z, Matrix(A.cols, 0), cdeg));
}

ColumnSpan::Lift lift_through(const RingPtr& ring, const Matrix& A, const Matrix& B, const Matrix& K) {
  if (A.rows != B.rows) throw AmbientMismatch("lift_through: row counts differ");
  ColumnSpan span(ring, A, K, {}, true);
  return span.lift(B);
}

}  // namespace kz
