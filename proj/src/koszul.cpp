#include "koszulator/koszul.hpp"

#include <functional>

#include "koszulator/errors.hpp"
#include "koszulator/module_algebra.hpp"

namespace kz {

std::vector<std::vector<int>> exterior_basis(int c, int p) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == p) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < c; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

ComplexPtr koszul_complex(const RingPtr& ring, const std::vector<Polynomial>& fs, const FPModule& F, int m) {
  if (!F.is_free()) throw PreconditionError("Koszul complexes are tensored with a free module");
  const QuotientRing& R = *ring;
  const PolyRing& S = R.base();
  const int c = static_cast<int>(fs.size());
  const int r = F.rank();
  std::vector<int> fdeg;
  for (const auto& f : fs) fdeg.push_back(std::max(0, S.degree(f)));

  std::map<int, FPModule> terms;
  std::map<int, Matrix> diffs;
  std::vector<std::vector<std::vector<int>>> bases;
  for (int p = 0; p <= c; ++p) {
    bases.push_back(exterior_basis(c, p));
    std::vector<int> degs;
    for (const auto& subset : bases[p]) {
      int shift = 0;
      for (int s : subset) shift += fdeg[s];
      for (int i = 0; i < r; ++i) degs.push_back(F.degrees()[i] + shift);
    }
    terms.emplace(m + p, FPModule::free(ring, degs));
  }
  for (int p = 1; p <= c; ++p) {
    std::map<std::vector<int>, int> index;
    for (size_t b = 0; b < bases[p - 1].size(); ++b) index[bases[p - 1][b]] = static_cast<int>(b);
    Matrix D(static_cast<int>(bases[p - 1].size()) * r, static_cast<int>(bases[p].size()) * r);
    for (size_t a = 0; a < bases[p].size(); ++a) {
      const auto& subset = bases[p][a];
      for (int k = 0; k < p; ++k) {
        std::vector<int> face = subset;
        face.erase(face.begin() + k);
        const int b = index.at(face);
        Polynomial entry = R.reduce(k % 2 == 0 ? fs[subset[k]] : S.neg(fs[subset[k]]));
        for (int i = 0; i < r; ++i) D.at(b * r + i, static_cast<int>(a) * r + i) = entry;
      }
    }
    diffs.emplace(m + p, D);
  }
  return make_complex(Complex(ring, std::move(terms), std::move(diffs)));
}

Ideal homotopy_annihilator(const ComplexPtr& X) {
  if (!X->is_free()) throw PreconditionError("homotopy annihilators need a free complex");
  return annihilator(homotopy_classes(X, X).classes.module);
}

Homotopy scalar_null_homotopy(const Polynomial& f, const ComplexPtr& X) {
  NullHomotopyResult r = null_homotopy(scale(identity_map(X), f));
  if (!r.homotopy)
    throw NotNullHomotopic("multiplication by " + X->R().to_string(f) + " is not null-homotopic (degree " +
                           std::to_string(r.obstructed_degree.value_or(0)) + ")");
  return *r.homotopy;
}

// ------------------------------------------------------------ the cover

namespace {

// alpha(e_S ⊗ v) = sigma_{s_1} ... sigma_{s_p}(v), the last homotopy applied first.
ChainMap ordered_homotopy_map(const ComplexPtr& K, const ComplexPtr& P, const std::vector<Homotopy>& sigma, int m) {
  const QuotientRing& R = P->R();
  const int c = static_cast<int>(sigma.size());
  const int r = P->rank(m);
  ChainMap alpha{K, P, {}};
  for (int p = 0; p <= c; ++p) {
    if (P->rank(m + p) == 0) continue;
    auto basis = exterior_basis(c, p);
    std::vector<Matrix> blocks;
    for (const auto& subset : basis) {
      Matrix M = mat::identity(R, r);
      for (int j = p - 1; j >= 0; --j) M = mat::mul(R, sigma[subset[j]].at(m + (p - 1 - j)), M);
      blocks.push_back(M);
    }
    std::vector<const Matrix*> ptrs;
    for (const auto& b : blocks) ptrs.push_back(&b);
    alpha.comps[m + p] = mat::hstack(ptrs, P->rank(m + p));
  }
  return alpha;
}

void require_homology_in(const Complex& X, const SerreSpec& spec) {
  for (int n = X.min_c(); n <= X.max_c(); ++n)
    if (!serre_member(homology(X, n).module, spec))
      throw PreconditionError("homology in degree " + std::to_string(n) + " is not in " + spec.to_string());
}

}  // namespace

KoszulCover koszul_cover(const ComplexPtr& P, const SerreSpec& spec, std::optional<Ideal> J, std::uint64_t seed) {
  if (!P->is_free()) throw PreconditionError("koszul_cover needs a complex of free modules");
  const RingPtr& ring = P->ring();
  KoszulCover cov;
  ComplexStats st = complex_stats(*P);
  if (st.acyclic) {
    cov.degenerate = true;
    cov.m = P->min_c();
    cov.base_free = FPModule::zero(ring);
    cov.complex = make_complex(Complex(ring));
    cov.covered = P;
    cov.alpha = zero_map(cov.complex, P);
    cov.to_input = identity_map(P);
    cov.d_squared_zero = cov.chain_map = cov.homology_concentrated = cov.bottom_surjective = true;
    cov.homologies_in_spec = true;
    return cov;
  }
  require_homology_in(*P, spec);
  const int m = cov.m = st.min;

  Truncation tr = smart_truncate(P, m);
  cov.covered = tr.complex;
  cov.to_input = tr.inclusion;
  if (!cov.covered->is_free()) {
    FreeReplacement fr = free_replacement(cov.covered);
    cov.covered = fr.complex;
    cov.to_input = compose(tr.inclusion, fr.map);
  }
  const ComplexPtr& Pp = cov.covered;

  cov.endomorphism_annihilator = homotopy_annihilator(Pp);
  cov.target_ideal = J ? *J : annihilator(homology(*Pp, m).module);
  Ideal IJ = intersect(cov.endomorphism_annihilator, cov.target_ideal);
  RegularSequence seq = find_regular_sequence(ring, IJ, spec, seed);
  cov.regular_sequence = seq.elements;
  cov.search_attempts = seq.attempts;

  cov.base_free = FPModule::free(ring, Pp->term(m).degrees());
  cov.complex = koszul_complex(ring, cov.regular_sequence, cov.base_free, m);
  for (const auto& f : cov.regular_sequence) cov.homotopies.push_back(scalar_null_homotopy(f, Pp));

  cov.alpha = ordered_homotopy_map(cov.complex, Pp, cov.homotopies, m);
  if (!cov.alpha.is_chain_map()) {
    cov.closed_form = false;
    auto ext = extend_chain_map(cov.complex, Pp, m, mat::identity(*ring, Pp->rank(m)));
    if (!ext) throw InvariantViolation("no chain map from the Koszul complex extends the identity");
    cov.alpha = *ext;
  }

  try {
    cov.complex->validate();
    cov.d_squared_zero = true;
  } catch (const InvariantViolation&) {
    cov.d_squared_zero = false;
  }
  ComplexStats ks = complex_stats(*cov.complex);
  cov.homology_concentrated = cov.complex->min_c() == m && ks.supph == std::set<int>{m};
  cov.chain_map = cov.alpha.is_chain_map();
  cov.bottom_surjective = induced_homology_map(cov.alpha, m).surjective;
  cov.homologies_in_spec = serre_member(homology(*cov.complex, m).module, spec);
  if (!cov.bottom_surjective) throw InvariantViolation("bottom homology map of the Koszul cover is not surjective");
  return cov;
}

ConeWidthReport cone_width_report(const KoszulCover& cover) {
  ConeWidthReport rep;
  rep.input = complex_stats(*cover.covered);
  if (rep.input.acyclic || rep.input.wid == 0) throw PreconditionError("the covered complex must have positive width");
  Cone C = cone(cover.alpha);
  rep.cone_complex = C.complex;
  rep.cone = complex_stats(*C.complex);
  rep.shifted_sum = complex_stats(direct_sum(shift(*C.complex, -1), *cover.complex));
  auto narrower = [&](const ComplexStats& s) { return s.acyclic || s.wid < rep.input.wid; };
  rep.cone_narrower = narrower(rep.cone);
  rep.sum_narrower = narrower(rep.shifted_sum);
  rep.bottom_killed = homology(*C.complex, cover.m).module.is_zero();
  if (!rep.verified()) throw InvariantViolation("cone width inequalities fail");
  return rep;
}

// ----------------------------------------------------------- pullbacks

Pullback pullback_complex(const ChainMap& f, const ChainMap& beta, const std::optional<SerreSpec>& spec) {
  const Complex& Q = *f.src;
  const Complex& M = *beta.src;
  const Complex& Y = *f.dst;
  if (f.dst != beta.dst && !(*f.dst == *beta.dst)) throw AmbientMismatch("pullback needs a common target");
  const RingPtr& ring = Q.ring();
  const QuotientRing& R = *ring;

  std::map<int, FPModule> sums;
  std::map<int, Subquotient> kernels;
  int lo = std::min(Q.min_c(), M.min_c()), hi = std::max(Q.max_c(), M.max_c());
  if (Q.empty()) lo = M.min_c(), hi = M.max_c();
  if (M.empty()) lo = Q.min_c(), hi = Q.max_c();
  for (int n = lo; n <= hi; ++n) {
    FPModule S = direct_sum(Q.term(n), M.term(n));
    if (S.rank() == 0) continue;
    sums.emplace(n, S);
    if (Y.rank(n) == 0) {
      kernels.emplace(n, Subquotient{S, mat::identity(R, S.rank())});
    } else {
      ModuleMorphism diff{S, Y.term(n), mat::hstack(f.at(n), mat::neg(R, beta.at(n)))};
      kernels.emplace(n, kernel(diff));
    }
  }
  std::map<int, FPModule> terms;
  std::map<int, Matrix> diffs;
  for (const auto& [n, K] : kernels) terms.emplace(n, K.module);
  for (const auto& [n, K] : kernels) {
    auto below = kernels.find(n - 1);
    if (below == kernels.end() || K.module.rank() == 0 || below->second.module.rank() == 0) continue;
    Matrix D = mat::mul(R, mat::block_diag(Q.d(n), M.d(n)), K.generators);
    const FPModule& S1 = sums.at(n - 1);
    ColumnSpan span(ring, below->second.generators, S1.relations(), S1.degrees(), true,
                    below->second.module.degrees());
    auto lift = span.lift(D);
    if (!lift.X) throw InvariantViolation("pullback differential leaves the kernel in degree " + std::to_string(n));
    diffs.emplace(n, *lift.X);
  }
  Pullback pb;
  pb.complex = make_complex(Complex(ring, std::move(terms), std::move(diffs)));
  pb.nu = ChainMap{pb.complex, f.src, {}};
  pb.mu = ChainMap{pb.complex, beta.src, {}};
  for (const auto& [n, K] : kernels) {
    if (K.module.rank() == 0) continue;
    if (Q.rank(n) > 0) pb.nu.comps[n] = mat::submatrix(K.generators, 0, Q.rank(n), 0, K.generators.cols);
    if (M.rank(n) > 0) pb.mu.comps[n] = mat::submatrix(K.generators, Q.rank(n), M.rank(n), 0, K.generators.cols);
  }
  if (spec) {
    for (int n = pb.complex->min_c(); n <= pb.complex->max_c(); ++n)
      if (!serre_member(homology(*pb.complex, n).module, *spec)) pb.homologies_in_spec = false;
  }
  return pb;
}

// ------------------------------------------------------ morphism covers

MorphismCover morphism_cover(const ChainMap& g, const SerreSpec& spec, std::uint64_t seed) {
  const ComplexPtr& X = g.src;
  const ComplexPtr& Y = g.dst;
  const RingPtr& ring = X->ring();
  const QuotientRing& R = *ring;
  if (!g.is_chain_map()) throw PreconditionError("morphism_cover needs an honest chain map");

  MorphismCover out;
  Complex both = direct_sum(*X, *Y);
  ComplexStats st = complex_stats(both);
  out.m = st.acyclic ? both.min_c() : st.min;
  const int m = out.m;
  if ((!X->empty() && X->min_c() < m) || (!Y->empty() && Y->min_c() < m))
    throw PreconditionError("both complexes must start at the bottom homology degree");
  for (const Complex* C : {X.get(), Y.get()})
    for (const auto& [n, T] : C->terms()) {
      if (!serre_member(T, spec)) throw PreconditionError("term in degree " + std::to_string(n) + " is not in " + spec.to_string());
      if (!projective_dimension(T).value)
        throw PreconditionError("term in degree " + std::to_string(n) + " has infinite projective dimension");
    }
  out.terms_in_spec = true;

  out.MY = make_complex(Complex::single(Y->term(m), m));
  out.betaY = ChainMap{out.MY, Y, {}};
  if (Y->rank(m) > 0) out.betaY.comps[m] = mat::identity(R, Y->rank(m));
  out.pullback = pullback_complex(g, out.betaY, spec);
  const ComplexPtr& Qp = out.pullback.complex;

  auto empty = make_complex(Complex(ring));
  if (Qp->rank(m) == 0) {
    out.degenerate = true;
    out.MX = empty;
    out.koszul = empty;
    out.alpha = zero_map(empty, Qp);
    out.homology_annihilator = Ideal(R.base_ptr(), {R.one()});
  } else {
    Ideal I0(R.base_ptr(), {R.one()});
    for (int n = Qp->min_c(); n <= Qp->max_c(); ++n) I0 = product(I0, annihilator(homology(*Qp, n).module));
    out.homology_annihilator = I0;
    Ideal J = annihilator(X->term(m));
    RegularSequence seq = find_regular_sequence(ring, intersect(I0, J), spec, seed);
    out.regular_sequence = seq.elements;
    const int r = Qp->rank(m);
    FPModule F = FPModule::free(ring, Qp->term(m).degrees());
    out.koszul = koszul_complex(ring, out.regular_sequence, F, m);
    auto alpha = extend_chain_map(out.koszul, Qp, m, mat::identity(R, r));
    if (!alpha) throw InvariantViolation("no chain map from the Koszul complex onto the pullback");
    out.alpha = *alpha;

    std::vector<Matrix> rels;
    for (const auto& f : out.regular_sequence) rels.push_back(mat::scalar(R, r, f));
    std::vector<const Matrix*> ptrs;
    for (const auto& M : rels) ptrs.push_back(&M);
    FPModule HK(ring, F.degrees(), mat::hstack(ptrs, r));
    out.MX = make_complex(Complex::single(HK, m));
  }

  out.betaX = ChainMap{out.MX, X, {}};
  out.kappa = ChainMap{out.MX, out.MY, {}};
  if (!out.degenerate) {
    if (X->rank(m) > 0) out.betaX.comps[m] = out.pullback.nu.at(m);
    if (Y->rank(m) > 0) out.kappa.comps[m] = out.pullback.mu.at(m);
  }
  if (!out.betaX.is_chain_map() || !out.kappa.is_chain_map() || !out.betaY.is_chain_map())
    throw InvariantViolation("morphism cover maps are not chain maps");
  Homotopy none{out.MX, Y, {}};
  out.square_commutes = is_homotopy_between(none, compose(out.betaY, out.kappa), compose(g, out.betaX));
  out.betaX_surjective = induced_homology_map(out.betaX, m).surjective;
  out.betaY_surjective = induced_homology_map(out.betaY, m).surjective;
  return out;
}

}  // namespace kz
