#include "koszulator/complex.hpp"

#include "koszulator/errors.hpp"

namespace kz {

namespace {

void require_same_ring(const Complex& a, const Complex& b) {
  if (!a.R().same_as(b.R())) throw AmbientMismatch("complexes live over different rings");
}

int lowest(const Complex& a, const Complex& b) { return std::min(a.min_c(), b.min_c()); }
int highest(const Complex& a, const Complex& b) { return std::max(a.max_c(), b.max_c()); }

}  // namespace

Complex::Complex(RingPtr ring) : ring_(std::move(ring)), zero_(FPModule::zero(ring_)) {}

Complex::Complex(RingPtr ring, std::map<int, FPModule> terms, std::map<int, Matrix> differentials)
    : ring_(std::move(ring)), zero_(FPModule::zero(ring_)) {
  for (auto& [n, M] : terms)
    if (M.rank() > 0) terms_.emplace(n, std::move(M));
  for (auto& [n, D] : differentials) {
    int r = rank(n - 1), c = rank(n);
    if (r == 0 || c == 0) continue;
    if (D.rows != r || D.cols != c)
      throw AmbientMismatch("differential in degree " + std::to_string(n) + " has the wrong shape");
    Matrix red = mat::reduce(*ring_, D);
    if (!red.is_zero()) diffs_.emplace(n, std::move(red));
  }
}

Complex Complex::single(const FPModule& M, int n) { return Complex(M.ring(), {{n, M}}, {}); }

const FPModule& Complex::term(int n) const {
  auto it = terms_.find(n);
  return it == terms_.end() ? zero_ : it->second;
}

Matrix Complex::d(int n) const {
  auto it = diffs_.find(n);
  if (it != diffs_.end()) return it->second;
  return Matrix(rank(n - 1), rank(n));
}

bool Complex::is_free() const {
  for (const auto& [n, M] : terms_)
    if (!M.is_free()) return false;
  return true;
}

bool Complex::is_graded() const {
  for (const auto& [n, M] : terms_)
    if (!M.is_graded()) return false;
  for (const auto& [n, D] : diffs_)
    if (!mat::is_graded_map(ring_->base(), D, term(n - 1).degrees(), term(n).degrees())) return false;
  return true;
}

void Complex::validate() const {
  for (int n = min_c(); n <= max_c(); ++n) {
    if (rank(n - 1) == 0) continue;
    const FPModule& src = term(n);
    if (src.relations().cols > 0 && !term(n - 1).relation_span().contains(mat::mul(R(), d(n), src.relations())))
      throw InvariantViolation("differential in degree " + std::to_string(n) + " does not respect relations");
    if (rank(n - 2) == 0) continue;
    if (!term(n - 2).relation_span().contains(mat::mul(R(), d(n - 1), d(n))))
      throw InvariantViolation("d∘d != 0 at degree " + std::to_string(n));
  }
}

bool Complex::operator==(const Complex& o) const {
  if (!R().same_as(o.R()) || terms_.size() != o.terms_.size() || diffs_ != o.diffs_) return false;
  for (const auto& [n, M] : terms_) {
    const FPModule& N = o.term(n);
    if (M.degrees() != N.degrees() || M.relations() != N.relations()) return false;
  }
  return true;
}

// ----------------------------------------------------------- chain maps

Matrix ChainMap::at(int n) const {
  auto it = comps.find(n);
  if (it != comps.end()) return it->second;
  return Matrix(dst->rank(n), src->rank(n));
}

std::optional<int> ChainMap::first_failure() const {
  const QuotientRing& R = src->R();
  int lo = lowest(*src, *dst), hi = highest(*src, *dst) + 1;
  for (int n = lo; n <= hi; ++n) {
    Matrix f = at(n);
    if (f.rows != dst->rank(n) || f.cols != src->rank(n)) return n;
    const FPModule& S = src->term(n);
    if (S.relations().cols > 0 && dst->rank(n) > 0 &&
        !dst->term(n).relation_span().contains(mat::mul(R, f, S.relations())))
      return n;
    if (dst->rank(n - 1) == 0 || src->rank(n) == 0) continue;
    Matrix lhs = mat::mul(R, dst->d(n), f);
    Matrix rhs = mat::mul(R, at(n - 1), src->d(n));
    if (!dst->term(n - 1).relation_span().contains(mat::sub(R, lhs, rhs))) return n;
  }
  return std::nullopt;
}

bool ChainMap::is_chain_map() const { return !first_failure().has_value(); }

Matrix Homotopy::at(int n) const {
  auto it = comps.find(n);
  if (it != comps.end()) return it->second;
  return Matrix(dst->rank(n + 1), src->rank(n));
}

ChainMap identity_map(const ComplexPtr& X) {
  ChainMap f{X, X, {}};
  for (const auto& [n, M] : X->terms()) f.comps[n] = mat::identity(X->R(), M.rank());
  return f;
}

ChainMap zero_map(const ComplexPtr& X, const ComplexPtr& Y) { return ChainMap{X, Y, {}}; }

ChainMap compose(const ChainMap& g, const ChainMap& f) {
  ChainMap h{f.src, g.dst, {}};
  for (const auto& [n, M] : f.src->terms()) {
    if (g.dst->rank(n) == 0) continue;
    h.comps[n] = mat::mul(f.src->R(), g.at(n), f.at(n));
  }
  return h;
}

ChainMap add(const ChainMap& f, const ChainMap& g) {
  ChainMap h{f.src, f.dst, {}};
  for (const auto& [n, M] : f.src->terms()) {
    if (f.dst->rank(n) == 0) continue;
    h.comps[n] = mat::add(f.src->R(), f.at(n), g.at(n));
  }
  return h;
}

ChainMap sub(const ChainMap& f, const ChainMap& g) {
  ChainMap h{f.src, f.dst, {}};
  for (const auto& [n, M] : f.src->terms()) {
    if (f.dst->rank(n) == 0) continue;
    h.comps[n] = mat::sub(f.src->R(), f.at(n), g.at(n));
  }
  return h;
}

ChainMap scale(const ChainMap& f, const Polynomial& c) {
  ChainMap h{f.src, f.dst, {}};
  for (const auto& [n, m] : f.comps) h.comps[n] = mat::scale(f.src->R(), m, c);
  return h;
}

ChainMap retarget(const ChainMap& f, const ComplexPtr& src, const ComplexPtr& dst) {
  ChainMap h{src, dst, f.comps};
  for (auto& [n, m] : h.comps)
    if (m.rows != dst->rank(n) || m.cols != src->rank(n)) throw AmbientMismatch("retarget: ranks differ");
  return h;
}

ChainMap boundary_of(const Homotopy& h) {
  const QuotientRing& R = h.src->R();
  ChainMap f{h.src, h.dst, {}};
  for (const auto& [n, M] : h.src->terms()) {
    if (h.dst->rank(n) == 0) continue;
    Matrix a = mat::mul(R, h.dst->d(n + 1), h.at(n));
    Matrix b = mat::mul(R, h.at(n - 1), h.src->d(n));
    f.comps[n] = mat::add(R, a, b);
  }
  return f;
}

bool is_homotopy_between(const Homotopy& h, const ChainMap& f, const ChainMap& g) {
  ChainMap diff = sub(sub(f, g), boundary_of(h));
  for (const auto& [n, M] : f.src->terms()) {
    if (f.dst->rank(n) == 0) continue;
    if (!f.dst->term(n).relation_span().contains(diff.at(n))) return false;
  }
  return true;
}

// ---------------------------------------------------- shifts, sums, cones

Complex shift(const Complex& X, int s) {
  std::map<int, FPModule> terms;
  std::map<int, Matrix> diffs;
  Polynomial sign = X.R().base().constant(s % 2 == 0 ? 1 : -1);
  for (const auto& [n, M] : X.terms()) {
    terms.emplace(n + s, M);
    diffs.emplace(n + s, mat::scale(X.R(), X.d(n), sign));
  }
  return Complex(X.ring(), std::move(terms), std::move(diffs));
}

ChainMap shift_map(const ChainMap& f, const ComplexPtr& shifted_src, const ComplexPtr& shifted_dst, int s) {
  ChainMap g{shifted_src, shifted_dst, {}};
  for (const auto& [n, m] : f.comps) g.comps[n + s] = m;
  return g;
}

Complex direct_sum(const Complex& X, const Complex& Y) {
  require_same_ring(X, Y);
  std::map<int, FPModule> terms;
  std::map<int, Matrix> diffs;
  int lo = lowest(X, Y), hi = highest(X, Y);
  for (int n = lo; n <= hi; ++n) {
    terms.emplace(n, kz::direct_sum(X.term(n), Y.term(n)));
    diffs.emplace(n, mat::block_diag(X.d(n), Y.d(n)));
  }
  return Complex(X.ring(), std::move(terms), std::move(diffs));
}

Cone cone(const ChainMap& f) {
  const Complex& X = *f.src;
  const Complex& Y = *f.dst;
  require_same_ring(X, Y);
  const QuotientRing& R = X.R();
  std::map<int, FPModule> terms;
  std::map<int, Matrix> diffs;
  int lo = std::min(X.min_c() + 1, Y.min_c()), hi = std::max(X.max_c() + 1, Y.max_c());
  for (int n = lo; n <= hi; ++n) {
    terms.emplace(n, kz::direct_sum(X.term(n - 1), Y.term(n)));
    Matrix dx = mat::neg(R, X.d(n - 1));
    Matrix fx = mat::neg(R, f.at(n - 1));
    Matrix zero(X.rank(n - 2), Y.rank(n));
    diffs.emplace(n, mat::block(dx, zero, fx, Y.d(n)));
  }
  auto C = make_complex(Complex(X.ring(), std::move(terms), std::move(diffs)));
  auto TX = make_complex(shift(X, 1));
  Cone out{C, ChainMap{f.dst, C, {}}, ChainMap{C, TX, {}}};
  for (int n = lo; n <= hi; ++n) {
    int a = X.rank(n - 1), b = Y.rank(n);
    if (b > 0) out.injection.comps[n] = mat::vstack(Matrix(a, b), mat::identity(R, b));
    if (a > 0) out.projection.comps[n] = mat::hstack(mat::identity(R, a), Matrix(a, b));
  }
  return out;
}

ChainMap cone_map(const Cone& from, const Cone& to, const ChainMap& a, const ChainMap& b) {
  ChainMap g{from.complex, to.complex, {}};
  for (const auto& [n, M] : from.complex->terms()) {
    if (to.complex->rank(n) == 0) continue;
    g.comps[n] = mat::block_diag(a.at(n - 1), b.at(n));
  }
  return g;
}

// -------------------------------------------------------------- homology

Subquotient homology(const Complex& X, int n) {
  const FPModule& T = X.term(n);
  if (T.rank() == 0) return {FPModule::zero(X.ring()), Matrix(0, 0)};
  Matrix out = X.rank(n - 1) ? X.d(n) : Matrix(0, T.rank());
  Matrix in = X.rank(n + 1) ? X.d(n + 1) : Matrix(T.rank(), 0);
  return homology_at(X.ring(), in, out, T.relations(), X.term(n - 1).relations(), T.degrees());
}

ComplexStats complex_stats(const Complex& X) {
  ComplexStats s;
  s.min_c = X.min_c();
  s.max_c = X.max_c();
  for (int n = X.min_c(); n <= X.max_c(); ++n)
    if (!homology(X, n).module.is_zero()) s.supph.insert(n);
  if (!s.supph.empty()) {
    s.acyclic = false;
    s.min = *s.supph.begin();
    s.max = *s.supph.rbegin();
    s.wid = s.max - s.min;
  }
  return s;
}

}  // namespace kz
