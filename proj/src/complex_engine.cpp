#include "koszulator/complex_engine.hpp"

#include "koszulator/budget.hpp"
#include "koszulator/errors.hpp"
#include "koszulator/module_algebra.hpp"

namespace kz {

// --------------------------------------------------------- BlockSystem

int BlockSystem::add_unknown(std::vector<int> degrees) {
  unknowns_.push_back(std::move(degrees));
  return static_cast<int>(unknowns_.size()) - 1;
}

int BlockSystem::add_equation(std::vector<int> degrees) {
  equations_.push_back(std::move(degrees));
  return static_cast<int>(equations_.size()) - 1;
}

void BlockSystem::add_term(int eq, int var, const Matrix& coeff) {
  if (coeff.rows != static_cast<int>(equations_[eq].size()) || coeff.cols != static_cast<int>(unknowns_[var].size()))
    throw AmbientMismatch("block system: coefficient block has the wrong shape");
  auto key = std::make_pair(eq, var);
  auto it = terms_.find(key);
  if (it == terms_.end()) terms_.emplace(key, coeff);
  else it->second = mat::add(*ring_, it->second, coeff);
}

void BlockSystem::add_relations(int eq, const Matrix& rel) {
  if (rel.cols == 0) return;
  if (rel.rows != static_cast<int>(equations_[eq].size())) throw AmbientMismatch("block system: relation block shape");
  relations_[eq].push_back(rel);
}

int BlockSystem::unknown_size() const { return unknown_offset(static_cast<int>(unknowns_.size())); }
int BlockSystem::equation_size() const { return equation_offset(static_cast<int>(equations_.size())); }

int BlockSystem::unknown_offset(int var) const {
  int off = 0;
  for (int v = 0; v < var; ++v) off += static_cast<int>(unknowns_[v].size());
  return off;
}

int BlockSystem::equation_offset(int eq) const {
  int off = 0;
  for (int e = 0; e < eq; ++e) off += static_cast<int>(equations_[e].size());
  return off;
}

int BlockSystem::equation_of_row(int row) const {
  int off = 0;
  for (size_t e = 0; e < equations_.size(); ++e) {
    off += static_cast<int>(equations_[e].size());
    if (row < off) return static_cast<int>(e);
  }
  return -1;
}

Matrix BlockSystem::matrix() const {
  Matrix A(equation_size(), unknown_size());
  for (const auto& [key, block] : terms_) {
    int r0 = equation_offset(key.first), c0 = unknown_offset(key.second);
    for (int i = 0; i < block.rows; ++i)
      for (int j = 0; j < block.cols; ++j) A.at(r0 + i, c0 + j) = block.at(i, j);
  }
  return A;
}

Matrix BlockSystem::relation_matrix() const {
  int cols = 0;
  for (const auto& [eq, list] : relations_)
    for (const auto& m : list) cols += m.cols;
  Matrix K(equation_size(), cols);
  int c0 = 0;
  for (const auto& [eq, list] : relations_) {
    int r0 = equation_offset(eq);
    for (const auto& m : list) {
      for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) K.at(r0 + i, c0 + j) = m.at(i, j);
      c0 += m.cols;
    }
  }
  return K;
}

std::vector<int> BlockSystem::unknown_degrees() const {
  std::vector<int> out;
  for (const auto& u : unknowns_) out.insert(out.end(), u.begin(), u.end());
  return out;
}

std::vector<int> BlockSystem::equation_degrees() const {
  std::vector<int> out;
  for (const auto& e : equations_) out.insert(out.end(), e.begin(), e.end());
  return out;
}

Matrix BlockSystem::rhs(const std::map<int, Matrix>& parts) const {
  Matrix b(equation_size(), 1);
  for (const auto& [eq, v] : parts) {
    int r0 = equation_offset(eq);
    for (int i = 0; i < v.rows; ++i) b.at(r0 + i, 0) = v.at(i, 0);
  }
  return b;
}

Matrix BlockSystem::unknown_block(const Matrix& solution, int var) const {
  return mat::submatrix(solution, unknown_offset(var), static_cast<int>(unknowns_[var].size()), 0, 1);
}

// ------------------------------------------------------------- helpers

Matrix vec(const Matrix& A) {
  Matrix v(A.rows * A.cols, 1);
  for (int j = 0; j < A.cols; ++j)
    for (int i = 0; i < A.rows; ++i) v.at(j * A.rows + i, 0) = A.at(i, j);
  return v;
}

Matrix unvec(const Matrix& v, int rows, int cols, int offset) {
  Matrix A(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) A.at(i, j) = v.at(offset + j * rows + i, 0);
  return A;
}

std::vector<int> hom_degrees(const FPModule& source, const FPModule& target) {
  std::vector<int> out;
  for (int j = 0; j < source.rank(); ++j)
    for (int i = 0; i < target.rank(); ++i) out.push_back(target.degrees()[i] - source.degrees()[j]);
  return out;
}

namespace {

// vec(D h) = (I ⊗ D) vec(h)
Matrix left_mul(const QuotientRing& R, int source_rank, const Matrix& D) {
  return mat::kron(R, mat::identity(R, source_rank), D);
}

// vec(h E) = (E^T ⊗ I) vec(h)
Matrix right_mul(const QuotientRing& R, const Matrix& E, int target_rank) {
  return mat::kron(R, mat::transpose(E), mat::identity(R, target_rank));
}

struct Solution {
  std::optional<Matrix> x;
  int failed_equation = -1;
};

Solution solve(const RingPtr& ring, const BlockSystem& sys, const Matrix& b) {
  Matrix A = sys.matrix();
  Matrix K = sys.relation_matrix();
  ColumnSpan span(ring, A, K, sys.equation_degrees(), true, sys.unknown_degrees());
  auto lift = span.lift(b);
  Solution s;
  if (lift.X) {
    s.x = *lift.X;
    return s;
  }
  for (int i = 0; i < lift.remainder.rows; ++i)
    if (!lift.remainder.at(i, 0).is_zero()) {
      s.failed_equation = sys.equation_of_row(i);
      break;
    }
  return s;
}

void require_free_source(const Complex& X, const char* what) {
  if (!X.is_free()) throw PreconditionError(std::string(what) + " requires a complex of free modules as source");
}

}  // namespace

// ----------------------------------------------------- homology maps

HomologyComparison induced_homology_map(const ChainMap& f, int n) {
  const RingPtr& ring = f.src->ring();
  const Complex& Y = *f.dst;
  HomologyComparison out;
  out.degree = n;
  out.source = homology(*f.src, n);
  out.target = homology(Y, n);
  const int hx = out.source.module.rank(), hy = out.target.module.rank();
  Matrix phi(hy, hx);
  if (hx > 0 && hy > 0) {
    Matrix images = mat::mul(*ring, f.at(n), out.source.generators);
    Matrix K = mat::hstack(Y.rank(n + 1) ? Y.d(n + 1) : Matrix(Y.rank(n), 0), Y.term(n).relations());
    ColumnSpan span(ring, out.target.generators, K, Y.term(n).degrees(), true, out.target.module.degrees());
    auto lift = span.lift(images);
    if (!lift.X) throw InvariantViolation("chain map sends a cycle outside the cycles in degree " + std::to_string(n));
    phi = *lift.X;
  }
  out.map = ModuleMorphism{out.source.module, out.target.module, phi};
  out.surjective = out.map.is_surjective();
  out.injective = out.map.is_injective();
  if (out.surjective && out.injective) {
    Matrix psi(hx, hy);
    if (hx > 0 && hy > 0) {
      ColumnSpan span(ring, phi, out.target.module.relations(), out.target.module.degrees(), true,
                      out.source.module.degrees());
      auto lift = span.lift(mat::identity(*ring, hy));
      if (!lift.X) return out;
      psi = *lift.X;
    }
    ModuleMorphism inv{out.target.module, out.source.module, psi};
    bool ok = inv.is_well_defined();
    ok = ok && equal_morphisms(compose(inv, out.map), ModuleMorphism::identity(out.source.module));
    ok = ok && equal_morphisms(compose(out.map, inv), ModuleMorphism::identity(out.target.module));
    out.inverse = psi;
    out.inverse_verified = ok;
  }
  return out;
}

QisReport is_quasi_isomorphism(const ChainMap& f) {
  QisReport r;
  auto fail = f.first_failure();
  r.chain_map = !fail.has_value();
  if (!r.chain_map) {
    r.diagnostic = "not a chain map in degree " + std::to_string(*fail);
    return r;
  }
  r.quasi_isomorphism = true;
  const Complex& X = *f.src;
  const Complex& Y = *f.dst;
  int lo = std::min(X.min_c(), Y.min_c()), hi = std::max(X.max_c(), Y.max_c());
  for (int n = lo; n <= hi; ++n) {
    if (X.rank(n) == 0 && Y.rank(n) == 0) continue;
    auto cmp = induced_homology_map(f, n);
    bool ok = cmp.injective && cmp.surjective && cmp.inverse_verified;
    if (!ok && r.quasi_isomorphism) {
      r.quasi_isomorphism = false;
      r.diagnostic = "homology map in degree " + std::to_string(n) + " is not " +
                     (cmp.injective ? (cmp.surjective ? "invertible" : "surjective") : "injective");
    }
    r.degrees.push_back(std::move(cmp));
  }
  return r;
}

// ---------------------------------------------------------- truncation

Truncation smart_truncate(const ComplexPtr& X, int m) {
  const RingPtr& ring = X->ring();
  if (X->empty() || m <= X->min_c()) return {X, identity_map(X)};
  for (int i = X->min_c(); i < m && i <= X->max_c(); ++i)
    if (!homology(*X, i).module.is_zero())
      throw PreconditionError("homology below the truncation degree is nonzero in degree " + std::to_string(i));

  const FPModule& Xm = X->term(m);
  Matrix Z = X->rank(m - 1) ? syzygy_module(ring, X->d(m), X->term(m - 1).relations(), X->term(m - 1).degrees(),
                                            Xm.degrees(), true)
                            : mat::identity(*ring, Xm.rank());
  Subquotient cycles = subquotient(ring, Z, Xm.relations(), Xm.degrees(), true);

  std::map<int, FPModule> terms;
  std::map<int, Matrix> diffs;
  terms.emplace(m, cycles.module);
  for (int n = m + 1; n <= X->max_c(); ++n) {
    terms.emplace(n, X->term(n));
    if (n > m + 1) diffs.emplace(n, X->d(n));
  }
  if (X->rank(m + 1) > 0 && cycles.module.rank() > 0) {
    ColumnSpan span(ring, cycles.generators, Xm.relations(), Xm.degrees(), true, cycles.module.degrees());
    auto lift = span.lift(X->d(m + 1));
    if (!lift.X) throw InvariantViolation("boundaries are not cycles in degree " + std::to_string(m));
    diffs.emplace(m + 1, *lift.X);
  }
  auto T = make_complex(Complex(ring, std::move(terms), std::move(diffs)));
  ChainMap incl{T, X, {}};
  if (cycles.module.rank() > 0) incl.comps[m] = cycles.generators;
  for (int n = m + 1; n <= X->max_c(); ++n) incl.comps[n] = mat::identity(*ring, X->rank(n));
  return {T, incl};
}

// ---------------------------------------------------- free replacement

FreeReplacement free_replacement(const ComplexPtr& X, std::optional<int> t) {
  if (X->is_free()) return {X, identity_map(X)};
  const RingPtr& ring = X->ring();
  const QuotientRing& R = *ring;
  const int lo = X->min_c();
  const int limit = t ? *t : X->max_c() + depth(FPModule::free(ring, 1)) + 2;
  if (limit - lo > current_budget().max_steps + (X->max_c() - lo) + 2)
    throw BudgetExceeded("free replacement exceeds the step budget");

  std::map<int, FPModule> U;
  std::map<int, Matrix> dU, q;
  auto urank = [&](int n) { return U.count(n) ? U.at(n).rank() : 0; };
  auto udeg = [&](int n) { return U.count(n) ? U.at(n).degrees() : std::vector<int>{}; };
  auto dmat = [&](int n) { return dU.count(n) ? dU.at(n) : Matrix(urank(n - 1), urank(n)); };
  auto qmat = [&](int n) { return q.count(n) ? q.at(n) : Matrix(X->rank(n), urank(n)); };

  bool finished = false;
  for (int n = lo; n <= limit; ++n) {
    const int u1 = urank(n - 1), xn = X->rank(n), u2 = urank(n - 2), x1 = X->rank(n - 1);
    if (!t && n > X->max_c() && u1 == 0) {
      finished = true;
      break;
    }
    // Cycles of the cone of q in degree n: pairs (u, x) in U_{n-1} ⊕ X_n.
    Matrix D = mat::block(mat::neg(R, dmat(n - 1)), Matrix(u2, xn), mat::neg(R, qmat(n - 1)), X->d(n));
    Matrix Kd = mat::vstack(Matrix(u2, X->term(n - 1).relations().cols), X->term(n - 1).relations());
    std::vector<int> degs = udeg(n - 1);
    const auto& xd = X->term(n).degrees();
    degs.insert(degs.end(), xd.begin(), xd.end());
    std::vector<int> target_degs = udeg(n - 2);
    const auto& xd1 = X->term(n - 1).degrees();
    target_degs.insert(target_degs.end(), xd1.begin(), xd1.end());
    Matrix Z = (u2 + x1 > 0) ? syzygy_module(ring, D, Kd, target_degs, degs, true) : mat::identity(R, u1 + xn);
    Matrix rel_n = mat::vstack(Matrix(u1, X->term(n).relations().cols), X->term(n).relations());

    if (t && n == *t) {
      // Stop resolving: the cycle module itself becomes U_t and X continues above it.
      Subquotient F = subquotient(ring, Z, rel_n, degs, true);
      if (F.module.rank() > 0) {
        U.emplace(n, F.module);
        dU.emplace(n, mat::neg(R, mat::submatrix(F.generators, 0, u1, 0, F.generators.cols)));
        q.emplace(n, mat::neg(R, mat::submatrix(F.generators, u1, xn, 0, F.generators.cols)));
      }
      for (int k = n + 1; k <= X->max_c(); ++k) {
        U.emplace(k, X->term(k));
        q.emplace(k, mat::identity(R, X->rank(k)));
        if (k > n + 1) dU.emplace(k, X->d(k));
      }
      if (X->rank(n + 1) > 0 && F.module.rank() > 0) {
        Matrix target = mat::vstack(Matrix(u1, X->rank(n + 1)), mat::neg(R, X->d(n + 1)));
        ColumnSpan span(ring, F.generators, rel_n, degs, true, F.module.degrees());
        auto lift = span.lift(target);
        if (!lift.X) throw InvariantViolation("free replacement: boundary outside the cycle module");
        dU.emplace(n + 1, *lift.X);
      }
      finished = true;
      break;
    }

    Matrix B = mat::hstack(mat::vstack(Matrix(u1, X->rank(n + 1)), X->d(n + 1)), rel_n);
    std::vector<int> kept = minimal_generator_indices(ring, Z, B, degs);
    Matrix G = mat::select_columns(Z, kept);
    if (G.cols > 0) {
      U.emplace(n, FPModule::free(ring, column_degrees(R.base(), G, degs)));
      dU.emplace(n, mat::neg(R, mat::submatrix(G, 0, u1, 0, G.cols)));
      q.emplace(n, mat::neg(R, mat::submatrix(G, u1, xn, 0, G.cols)));
    }
  }
  if (!finished) throw PreconditionError("a term has infinite projective dimension (replacement did not terminate)");

  auto Uc = make_complex(Complex(ring, U, dU));
  ChainMap qm{Uc, X, {}};
  for (const auto& [n, m] : q)
    if (X->rank(n) > 0 && Uc->rank(n) > 0) qm.comps[n] = m;
  Uc->validate();
  if (!qm.is_chain_map()) throw InvariantViolation("free replacement map is not a chain map");
  return {Uc, qm};
}

// ------------------------------------------------------------- zigzags

void Zigzag::push(const ChainMap& map, bool forward, const std::string& label) {
  const ComplexPtr& end = nodes.back();
  const ComplexPtr& attach = forward ? map.src : map.dst;
  if (attach != end && !(*attach == *end)) throw InvariantViolation("zigzag arrow does not attach to the last node");
  nodes.push_back(forward ? map.dst : map.src);
  arrows.push_back({map, forward, label});
}

void Zigzag::append(const Zigzag& other) {
  if (other.nodes.empty()) return;
  if (other.nodes.front() != nodes.back() && !(*other.nodes.front() == *nodes.back()))
    throw InvariantViolation("zigzags do not share an endpoint");
  for (size_t i = 0; i < other.arrows.size(); ++i) {
    nodes.push_back(other.nodes[i + 1]);
    arrows.push_back(other.arrows[i]);
  }
}

Collapse collapse_to_module(const ComplexPtr& X) {
  ComplexStats st = complex_stats(*X);
  if (st.supph.size() != 1) throw PreconditionError("homology is not concentrated in a single degree");
  const int m = st.min;
  if (X->min_c() == m && X->max_c() == m) return {X, Zigzag::trivial(X)};
  const RingPtr& ring = X->ring();

  Truncation tr = smart_truncate(X, m);
  Subquotient H = homology(*X, m);
  auto Y = make_complex(Complex::single(H.module, m));
  ChainMap proj{tr.complex, Y, {}};
  const FPModule& Zm = tr.complex->term(m);
  if (Zm.rank() > 0 && H.module.rank() > 0) {
    Matrix K = mat::hstack(X->rank(m + 1) ? X->d(m + 1) : Matrix(X->rank(m), 0), X->term(m).relations());
    ColumnSpan span(ring, H.generators, K, X->term(m).degrees(), true, H.module.degrees());
    auto lift = span.lift(tr.inclusion.at(m));
    if (!lift.X) throw InvariantViolation("cycle outside the homology generators");
    proj.comps[m] = *lift.X;
  }
  Zigzag z = Zigzag::trivial(X);
  z.push(tr.inclusion, false, "smart truncation");
  z.push(proj, true, "projection to homology");
  return {Y, z};
}

// --------------------------------------------------- homotopy classes

ChainMap HomotopyClasses::chain_map(const Matrix& v, int j) const {
  ChainMap f{source, target, {}};
  int off = 0;
  for (int n : blocks) {
    int a = source->rank(n), b = target->rank(n);
    Matrix col = mat::column(v, j);
    f.comps[n] = unvec(col, b, a, off);
    off += a * b;
  }
  return f;
}

Matrix HomotopyClasses::coordinates(const ChainMap& f) const {
  std::vector<Matrix> parts;
  for (int n : blocks) parts.push_back(vec(f.at(n)));
  std::vector<const Matrix*> ptrs;
  for (const auto& p : parts) ptrs.push_back(&p);
  return mat::vstack(ptrs, 1);
}

HomotopyClasses homotopy_classes(const ComplexPtr& X, const ComplexPtr& Y) {
  require_free_source(*X, "homotopy_classes");
  const RingPtr& ring = X->ring();
  const QuotientRing& R = *ring;
  HomotopyClasses out;
  out.source = X;
  out.target = Y;

  BlockSystem chain(ring);  // unknowns φ_n, equations d φ_n - φ_{n-1} d
  BlockSystem bound(ring);  // unknowns h_n, equations (d h + h d)_n
  std::map<int, int> phi, phi_eq, h;
  for (int n = X->min_c(); n <= X->max_c(); ++n) {
    if (X->rank(n) == 0 || Y->rank(n) == 0) continue;
    out.blocks.push_back(n);
    phi[n] = chain.add_unknown(hom_degrees(X->term(n), Y->term(n)));
    phi_eq[n] = bound.add_equation(hom_degrees(X->term(n), Y->term(n)));
    bound.add_relations(phi_eq[n], left_mul(R, X->rank(n), Y->term(n).relations()));
  }
  for (int n = X->min_c(); n <= X->max_c(); ++n) {
    if (X->rank(n) == 0 || Y->rank(n + 1) == 0) continue;
    h[n] = bound.add_unknown(hom_degrees(X->term(n), Y->term(n + 1)));
  }
  for (int n = X->min_c(); n <= X->max_c(); ++n) {
    const int a = X->rank(n);
    if (a == 0 || Y->rank(n - 1) == 0) continue;
    int eq = chain.add_equation(hom_degrees(X->term(n), Y->term(n - 1)));
    if (phi.count(n)) chain.add_term(eq, phi[n], left_mul(R, a, Y->d(n)));
    if (phi.count(n - 1)) chain.add_term(eq, phi[n - 1], mat::neg(R, right_mul(R, X->d(n), Y->rank(n - 1))));
    chain.add_relations(eq, left_mul(R, a, Y->term(n - 1).relations()));
  }
  for (const auto& [n, eq] : phi_eq) {
    if (h.count(n)) bound.add_term(eq, h[n], left_mul(R, X->rank(n), Y->d(n + 1)));
    if (h.count(n - 1)) bound.add_term(eq, h[n - 1], right_mul(R, X->d(n), Y->rank(n)));
  }

  const int N = chain.unknown_size();
  std::vector<int> degs = chain.unknown_degrees();
  if (N == 0) {
    out.classes = {FPModule::zero(ring), Matrix(0, 0)};
    return out;
  }
  Matrix Z = chain.equation_size() > 0 ? syzygy_module(ring, chain.matrix(), chain.relation_matrix(),
                                                       chain.equation_degrees(), degs, true)
                                       : mat::identity(R, N);
  Matrix B = mat::hstack(bound.matrix(), bound.relation_matrix());
  if (B.cols == 0) B = Matrix(N, 0);
  out.cycles = Z;
  out.boundaries = B;
  out.degrees = degs;
  out.classes = subquotient(ring, Z, B, degs, true);
  return out;
}

std::optional<Matrix> HomotopyClasses::class_of(const Matrix& v) const {
  const RingPtr& ring = source->ring();
  if (classes.module.rank() == 0) {
    if (!ColumnSpan(ring, Matrix(v.rows, 0), boundaries, degrees, false).contains(v)) return std::nullopt;
    return Matrix(0, v.cols);
  }
  ColumnSpan span(ring, classes.generators, boundaries, degrees, true, classes.module.degrees());
  auto lift = span.lift(v);
  if (!lift.X) return std::nullopt;
  return *lift.X;
}

// ------------------------------------------------------- null homotopy

NullHomotopyResult null_homotopy(const ChainMap& f) {
  const Complex& X = *f.src;
  const Complex& Y = *f.dst;
  require_free_source(X, "null_homotopy");
  const RingPtr& ring = X.ring();
  const QuotientRing& R = *ring;
  BlockSystem sys(ring);
  std::map<int, int> eq, h;
  std::map<int, Matrix> rhs;
  for (int n = X.min_c(); n <= X.max_c(); ++n) {
    if (X.rank(n) == 0 || Y.rank(n) == 0) continue;
    eq[n] = sys.add_equation(hom_degrees(X.term(n), Y.term(n)));
    sys.add_relations(eq[n], left_mul(R, X.rank(n), Y.term(n).relations()));
    rhs[eq[n]] = vec(f.at(n));
  }
  for (int n = X.min_c(); n <= X.max_c(); ++n) {
    if (X.rank(n) == 0 || Y.rank(n + 1) == 0) continue;
    h[n] = sys.add_unknown(hom_degrees(X.term(n), Y.term(n + 1)));
  }
  for (const auto& [n, e] : eq) {
    if (h.count(n)) sys.add_term(e, h[n], left_mul(R, X.rank(n), Y.d(n + 1)));
    if (h.count(n - 1)) sys.add_term(e, h[n - 1], right_mul(R, X.d(n), Y.rank(n)));
  }
  NullHomotopyResult out;
  Homotopy H{f.src, f.dst, {}};
  if (sys.equation_size() == 0) {
    out.homotopy = H;
    return out;
  }
  Solution s = solve(ring, sys, sys.rhs(rhs));
  if (!s.x) {
    for (const auto& [n, e] : eq)
      if (e == s.failed_equation) out.obstructed_degree = n;
    return out;
  }
  for (const auto& [n, v] : h) H.comps[n] = unvec(sys.unknown_block(*s.x, v), Y.rank(n + 1), X.rank(n));
  out.homotopy = H;
  return out;
}

// ---------------------------------------------------- lift along a qis

std::optional<QisLift> lift_along_qis(const ChainMap& v, const ChainMap& f) {
  const Complex& X = *f.src;
  const Complex& A = *v.src;
  const Complex& B = *v.dst;
  require_free_source(X, "lift_along_qis");
  const RingPtr& ring = X.ring();
  const QuotientRing& R = *ring;
  BlockSystem sys(ring);
  std::map<int, int> F, H;
  for (int n = X.min_c(); n <= X.max_c(); ++n) {
    if (X.rank(n) == 0) continue;
    if (A.rank(n) > 0) F[n] = sys.add_unknown(hom_degrees(X.term(n), A.term(n)));
    if (B.rank(n + 1) > 0) H[n] = sys.add_unknown(hom_degrees(X.term(n), B.term(n + 1)));
  }
  std::map<int, Matrix> rhs;
  for (int n = X.min_c(); n <= X.max_c(); ++n) {
    const int a = X.rank(n);
    if (a == 0) continue;
    if (A.rank(n - 1) > 0) {  // d F_n - F_{n-1} d = 0
      int e = sys.add_equation(hom_degrees(X.term(n), A.term(n - 1)));
      if (F.count(n)) sys.add_term(e, F[n], left_mul(R, a, A.d(n)));
      if (F.count(n - 1)) sys.add_term(e, F[n - 1], mat::neg(R, right_mul(R, X.d(n), A.rank(n - 1))));
      sys.add_relations(e, left_mul(R, a, A.term(n - 1).relations()));
    }
    if (B.rank(n) > 0) {  // v F_n - d H_n - H_{n-1} d = f_n
      int e = sys.add_equation(hom_degrees(X.term(n), B.term(n)));
      if (F.count(n)) sys.add_term(e, F[n], left_mul(R, a, v.at(n)));
      if (H.count(n)) sys.add_term(e, H[n], mat::neg(R, left_mul(R, a, B.d(n + 1))));
      if (H.count(n - 1)) sys.add_term(e, H[n - 1], mat::neg(R, right_mul(R, X.d(n), B.rank(n))));
      sys.add_relations(e, left_mul(R, a, B.term(n).relations()));
      rhs[e] = vec(f.at(n));
    }
  }
  QisLift out{ChainMap{f.src, v.src, {}}, Homotopy{f.src, v.dst, {}}};
  if (sys.equation_size() == 0 || sys.unknown_size() == 0) {
    bool zero = true;
    for (const auto& [e, r] : rhs)
      if (!r.is_zero()) zero = false;
    if (!zero) return std::nullopt;
    return out;
  }
  Solution s = solve(ring, sys, sys.rhs(rhs));
  if (!s.x) return std::nullopt;
  for (const auto& [n, u] : F) out.map.comps[n] = unvec(sys.unknown_block(*s.x, u), A.rank(n), X.rank(n));
  for (const auto& [n, u] : H) out.homotopy.comps[n] = unvec(sys.unknown_block(*s.x, u), B.rank(n + 1), X.rank(n));
  return out;
}

// ------------------------------------------------- chain map extension

std::optional<ChainMap> extend_chain_map(const ComplexPtr& X, const ComplexPtr& Y, int m, const Matrix& fm) {
  require_free_source(*X, "extend_chain_map");
  const RingPtr& ring = X->ring();
  const QuotientRing& R = *ring;
  ChainMap out{X, Y, {}};
  if (X->rank(m) > 0 && Y->rank(m) > 0) out.comps[m] = fm;
  BlockSystem sys(ring);
  std::map<int, int> var;
  for (int n = m + 1; n <= X->max_c(); ++n)
    if (X->rank(n) > 0 && Y->rank(n) > 0) var[n] = sys.add_unknown(hom_degrees(X->term(n), Y->term(n)));
  std::map<int, Matrix> rhs;
  for (int n = m + 1; n <= X->max_c(); ++n) {
    const int a = X->rank(n);
    if (a == 0 || Y->rank(n - 1) == 0) continue;
    int e = sys.add_equation(hom_degrees(X->term(n), Y->term(n - 1)));
    if (var.count(n)) sys.add_term(e, var[n], left_mul(R, a, Y->d(n)));
    if (var.count(n - 1)) sys.add_term(e, var[n - 1], mat::neg(R, right_mul(R, X->d(n), Y->rank(n - 1))));
    if (n - 1 == m) rhs[e] = vec(mat::mul(R, out.at(m), X->d(n)));
    sys.add_relations(e, left_mul(R, a, Y->term(n - 1).relations()));
  }
  if (sys.equation_size() > 0 && sys.unknown_size() > 0) {
    Solution s = solve(ring, sys, sys.rhs(rhs));
    if (!s.x) return std::nullopt;
    for (const auto& [n, v] : var) out.comps[n] = unvec(sys.unknown_block(*s.x, v), Y->rank(n), X->rank(n));
  }
  if (!out.is_chain_map()) return std::nullopt;
  return out;
}

}  // namespace kz
