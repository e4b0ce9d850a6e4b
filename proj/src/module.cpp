#include "koszulator/module.hpp"

#include <functional>

#include "koszulator/errors.hpp"

namespace kz {

namespace {

std::vector<std::vector<Monomial>> leads_by_component(const ColumnSpan& span, int n) {
  std::vector<std::vector<Monomial>> out(n);
  for (const auto& t : span.leading_terms())
    if (t.comp < n) out[t.comp].push_back(t.m);
  return out;
}

bool standard(const std::vector<Monomial>& leads, const Monomial& m) {
  for (const auto& l : leads)
    if (divides(l, m)) return false;
  return true;
}

}  // namespace

FPModule::FPModule(RingPtr ring, std::vector<int> degrees, Matrix relations)
    : ring_(std::move(ring)), degrees_(std::move(degrees)), cache_(std::make_shared<Cache>()) {
  const int n = rank();
  if (relations.cols == 0) relations = Matrix(n, 0);
  if (relations.rows != n) throw AmbientMismatch("presentation has the wrong number of rows");
  relations_ = mat::reduce(*ring_, relations);
  free_ = relations_.is_zero();
}

FPModule FPModule::free(RingPtr ring, std::vector<int> degrees) {
  int n = static_cast<int>(degrees.size());
  return FPModule(std::move(ring), std::move(degrees), Matrix(n, 0));
}

FPModule FPModule::cyclic(RingPtr ring, const std::vector<Polynomial>& ideal_generators, int degree) {
  Matrix rel(1, static_cast<int>(ideal_generators.size()));
  for (size_t j = 0; j < ideal_generators.size(); ++j) rel.at(0, static_cast<int>(j)) = ideal_generators[j];
  return FPModule(std::move(ring), {degree}, rel);
}

const ColumnSpan& FPModule::relation_span() const {
  std::call_once(cache_->once, [this] {
    cache_->span = std::make_unique<ColumnSpan>(ring_, Matrix(rank(), 0), relations_, degrees_, false);
  });
  return *cache_->span;
}

bool FPModule::is_zero() const {
  if (rank() == 0) return true;
  return relation_span().contains(mat::identity(*ring_, rank()));
}

bool FPModule::is_graded() const {
  if (!ring_->is_graded()) return false;
  for (int j = 0; j < relations_.cols; ++j)
    if (!mat::column_homogeneous(ring_->base(), relations_, j, degrees_)) return false;
  return true;
}

Matrix FPModule::normal_form(const Matrix& v) const { return mat::reduce(*ring_, relation_span().normal_form(v)); }

bool FPModule::is_zero_element(const Matrix& v) const { return relation_span().contains(v); }

std::optional<long> FPModule::length() const {
  const int n = rank();
  const int nv = ring_->nvars();
  auto leads = leads_by_component(relation_span(), n);
  long total = 0;
  for (int c = 0; c < n; ++c) {
    const auto& L = leads[c];
    if (!standard(L, Monomial{})) continue;
    for (int i = 0; i < nv; ++i) {
      bool pure = false;
      for (const auto& l : L) {
        bool only_i = l.exp[i] > 0;
        for (int k = 0; k < nv && only_i; ++k)
          if (k != i && l.exp[k] != 0) only_i = false;
        if (only_i) pure = true;
      }
      if (!pure) return std::nullopt;
    }
    // Standard monomials form an order ideal; walk it with nondecreasing variable index.
    const PolyRing& S = ring_->base();
    std::function<void(const Monomial&, int)> walk = [&](const Monomial& m, int from) {
      ++total;
      for (int i = from; i < nv; ++i) {
        Monomial next = mono_mul(m, S.var_monomial(i));
        if (standard(L, next)) walk(next, i);
      }
    };
    walk(Monomial{}, 0);
  }
  return total;
}

long FPModule::hilbert_value(int d) const {
  const int n = rank();
  auto leads = leads_by_component(relation_span(), n);
  long total = 0;
  for (int c = 0; c < n; ++c) {
    int e = d - degrees_[c];
    if (e < 0) continue;
    for (const auto& m : ring_->base().monomials_of_degree(e))
      if (standard(leads[c], m)) ++total;
  }
  return total;
}

std::optional<int> FPModule::dimension() const {
  const int n = rank();
  auto leads = leads_by_component(relation_span(), n);
  std::optional<int> best;
  for (int c = 0; c < n; ++c) {
    auto d = monomial_dimension(ring_->nvars(), leads[c]);
    if (d && (!best || *d > *best)) best = d;
  }
  return best;
}

// ------------------------------------------------------------ morphisms

ModuleMorphism ModuleMorphism::identity(const FPModule& M) {
  return {M, M, mat::identity(M.R(), M.rank())};
}

ModuleMorphism ModuleMorphism::zero(const FPModule& source, const FPModule& target) {
  return {source, target, Matrix(target.rank(), source.rank())};
}

bool ModuleMorphism::is_well_defined() const {
  if (matrix.rows != target.rank() || matrix.cols != source.rank()) return false;
  if (source.relations().cols == 0) return true;
  return target.relation_span().contains(mat::mul(source.R(), matrix, source.relations()));
}

bool ModuleMorphism::is_zero() const { return target.relation_span().contains(matrix); }

bool ModuleMorphism::is_surjective() const {
  if (target.rank() == 0) return true;
  ColumnSpan span(target.ring(), matrix, target.relations(), target.degrees(), false);
  return span.contains(mat::identity(target.R(), target.rank()));
}

bool ModuleMorphism::is_injective() const { return kernel(*this).module.is_zero(); }

ModuleMorphism compose(const ModuleMorphism& g, const ModuleMorphism& f) {
  if (g.source.rank() != f.target.rank()) throw AmbientMismatch("compose: modules do not match");
  return {f.source, g.target, mat::mul(f.source.R(), g.matrix, f.matrix)};
}

bool equal_morphisms(const ModuleMorphism& f, const ModuleMorphism& g) {
  return f.target.relation_span().contains(mat::sub(f.source.R(), f.matrix, g.matrix));
}

// --------------------------------------------------------- subquotients

Subquotient subquotient(const RingPtr& ring, const Matrix& G, const Matrix& B, const std::vector<int>& ambient_degrees,
                        bool minimize) {
  const PolyRing& S = ring->base();
  std::vector<int> gdeg = column_degrees(S, G, ambient_degrees);
  std::vector<int> kept;
  if (minimize) {
    kept = minimal_generator_indices(ring, G, B, ambient_degrees);
  } else {
    for (int j = 0; j < G.cols; ++j) kept.push_back(j);
  }
  Matrix Gk = mat::select_columns(G, kept);
  std::vector<int> kdeg;
  for (int j : kept) kdeg.push_back(gdeg[j]);
  Matrix rel = syzygy_module(ring, Gk, B, ambient_degrees, kdeg, true);
  return {FPModule(ring, kdeg, rel), Gk};
}

Subquotient homology_at(const RingPtr& ring, const Matrix& in, const Matrix& out, const Matrix& rel,
                        const Matrix& rel_next, const std::vector<int>& degrees) {
  const int n = static_cast<int>(degrees.size());
  Matrix Z;
  if (out.rows == 0) {
    Z = mat::identity(*ring, n);
  } else {
    Z = syzygy_module(ring, out, rel_next, {}, degrees, true);
  }
  Matrix inn = in.cols ? in : Matrix(n, 0);
  Matrix reln = rel.cols ? rel : Matrix(n, 0);
  Matrix B = mat::hstack(inn, reln);
  return subquotient(ring, Z, B, degrees, true);
}

Minimized minimize(const FPModule& M) {
  const RingPtr& ring = M.ring();
  const int n = M.rank();
  Matrix I = mat::identity(*ring, n);
  std::vector<int> kept = minimal_generator_indices(ring, I, M.relations(), M.degrees());
  Matrix G = mat::select_columns(I, kept);
  std::vector<int> deg;
  for (int j : kept) deg.push_back(M.degrees()[j]);
  Matrix rel = syzygy_module(ring, G, M.relations(), M.degrees(), deg, true);
  ColumnSpan span(ring, G, M.relations(), M.degrees(), true, deg);
  auto back = span.lift(I);
  if (!back.X) throw InvariantViolation("minimize: generators do not span the module");
  return {FPModule(ring, deg, rel), G, *back.X};
}

Subquotient kernel(const ModuleMorphism& f) {
  const RingPtr& ring = f.source.ring();
  Matrix Z = syzygy_module(ring, f.matrix, f.target.relations(), f.target.degrees(), f.source.degrees(), true);
  return subquotient(ring, Z, f.source.relations(), f.source.degrees(), true);
}

FPModule cokernel(const ModuleMorphism& f) {
  return FPModule(f.target.ring(), f.target.degrees(), mat::hstack(f.target.relations(), f.matrix));
}

Ideal annihilator(const FPModule& M) {
  const RingPtr& ring = M.ring();
  const auto& base = ring->base_ptr();
  const auto& rel_gens = ring->defining_ideal().generators();
  std::optional<Ideal> acc;
  for (int i = 0; i < M.rank(); ++i) {
    Matrix e(M.rank(), 1);
    e.at(i, 0) = ring->one();
    Matrix Z = syzygy_module(ring, e, M.relations(), M.degrees(), {M.degrees()[i]}, false);
    std::vector<Polynomial> gens = rel_gens;
    for (int j = 0; j < Z.cols; ++j) gens.push_back(Z.at(0, j));
    Ideal col(base, gens);
    acc = acc ? intersect(*acc, col) : col;
  }
  if (!acc) return Ideal(base, {base->constant(1)});
  // Re-present by its reduced basis so equal annihilators print identically.
  return Ideal(base, acc->groebner());
}

FPModule direct_sum(const FPModule& a, const FPModule& b) {
  std::vector<int> deg = a.degrees();
  deg.insert(deg.end(), b.degrees().begin(), b.degrees().end());
  return FPModule(a.ring(), deg, mat::block_diag(a.relations(), b.relations()));
}

FPModule twist(const FPModule& M, int s) {
  std::vector<int> deg = M.degrees();
  for (auto& d : deg) d += s;
  return FPModule(M.ring(), deg, M.relations());
}

}  // namespace kz
