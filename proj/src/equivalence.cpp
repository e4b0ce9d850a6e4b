#include "koszulator/equivalence.hpp"

#include "koszulator/errors.hpp"
#include "koszulator/module_algebra.hpp"

namespace kz {

NodeSummary summarize_node(const Complex& X) {
  NodeSummary s;
  s.min_c = X.min_c();
  s.max_c = X.max_c();
  s.free = X.is_free();
  long chi = 0;
  bool finite = true;
  for (int n = X.min_c(); n <= X.max_c(); ++n) {
    s.ranks.push_back(X.rank(n));
    Subquotient H = homology(X, n);
    if (H.module.is_zero()) continue;
    HomologyRow row;
    row.degree = n;
    row.length = H.module.length();
    row.annihilator = generators_modulo(annihilator(H.module), X.R().defining_ideal());
    if (row.length)
      chi += (n % 2 == 0 ? 1 : -1) * *row.length;
    else
      finite = false;
    s.homology.push_back(std::move(row));
  }
  if (finite) s.euler = chi;
  return s;
}

std::vector<ArrowCheck> verify_zigzag(const Zigzag& z) {
  std::vector<ArrowCheck> out;
  for (const auto& a : z.arrows) {
    QisReport r = is_quasi_isomorphism(a.map);
    out.push_back({r.chain_map, r.quasi_isomorphism, r.diagnostic});
  }
  return out;
}

namespace {

// Rows of the identity on the summand of rank `rank` at `offset` inside a sum of rank `total`.
Matrix summand_inclusion(int total, int offset, int rank, const QuotientRing& R) {
  Matrix M(total, rank);
  Matrix I = mat::identity(R, rank);
  for (int i = 0; i < rank; ++i) M.at(offset + i, i) = I.at(i, i);
  return M;
}

// phi: U -> last node of z, pulled back to U -> first node.
ChainMap pull_back_along(const Zigzag& z, ChainMap phi) {
  for (size_t i = z.arrows.size(); i-- > 0;) {
    const ZigzagArrow& a = z.arrows[i];
    if (a.forward) {
      auto lift = lift_along_qis(a.map, phi);
      if (!lift) throw InvariantViolation("no lift along certificate arrow '" + a.label + "'");
      phi = lift->map;
    } else {
      phi = compose(a.map, phi);
    }
  }
  return retarget(phi, phi.src, z.source());
}

Reduction reduce_step(const ComplexPtr& P, const SerreSpec& spec, std::uint64_t seed) {
  const RingPtr& ring = P->ring();
  const QuotientRing& R = *ring;
  Reduction out;
  ComplexStats st = complex_stats(*P);

  if (st.acyclic) {
    out.ptilde = make_complex(Complex(ring));
    out.certificate = Zigzag::trivial(P);
    out.certificate.push(zero_map(P, out.ptilde), true, "acyclic to zero");
    return out;
  }
  if (st.wid == 0) {
    Collapse col = collapse_to_module(P);
    out.ptilde = col.module_complex;
    out.certificate = col.certificate;
    out.levels.push_back({st.min, 0, {}, true, 0, true});
    return out;
  }

  const int m = st.min;
  KoszulCover cov = koszul_cover(P, spec, std::nullopt, seed);
  if (!cov.verified()) throw InvariantViolation("Koszul cover failed verification at degree " + std::to_string(m));
  const ComplexPtr& Pp = cov.covered;
  const ComplexPtr& K = cov.complex;
  Cone C = cone(cov.alpha);
  ComplexStats cs = complex_stats(*C.complex);
  out.levels.push_back({m, st.wid, cov.regular_sequence, cov.closed_form, cs.wid, cs.acyclic});
  if (!cs.acyclic && cs.wid >= st.wid) out.widths_decrease = false;
  if (!out.widths_decrease)
    throw InvariantViolation("cone width " + std::to_string(cs.wid) + " does not drop below " + std::to_string(st.wid));

  Reduction sub = reduce_step(C.complex, spec, seed);
  const ComplexPtr& Ct = sub.ptilde;
  if (!Ct->empty() && Ct->min_c() <= m) throw InvariantViolation("reduced cone starts at or below the covered degree");
  out.widths_decrease = sub.widths_decrease;
  out.levels.insert(out.levels.end(), sub.levels.begin(), sub.levels.end());

  // Free realization of the reduced cone, mapped back to the cone itself.
  FreeReplacement fr = free_replacement(Ct);
  const ComplexPtr& U = fr.complex;
  ChainMap w = pull_back_along(sub.certificate, fr.map);

  auto TU = make_complex(shift(*U, -1));
  auto TC = make_complex(shift(*C.complex, -1));
  auto TCt = make_complex(shift(*Ct, -1));
  ChainMap Tw = shift_map(w, TU, TC, -1);
  ChainMap Tu = shift_map(fr.map, TU, TCt, -1);

  // Connecting map T^{-1}C -> K of the rotated triangle and P' -> cone of it.
  ChainMap delta{TC, K, {}};
  for (const auto& [n, T] : K->terms())
    delta.comps[n] = mat::hstack(mat::identity(R, T.rank()), Matrix(T.rank(), Pp->rank(n + 1)));
  Cone E = cone(delta);
  ChainMap into{Pp, E.complex, {}};
  for (const auto& [n, T] : Pp->terms()) into.comps[n] = summand_inclusion(E.complex->rank(n), K->rank(n - 1), T.rank(), R);

  ChainMap dw = compose(delta, Tw);
  Cone E1 = cone(dw);
  ChainMap e1 = cone_map(E1, E, Tw, identity_map(K));

  Matrix hrel = K->rank(m + 1) ? K->d(m + 1) : Matrix(K->rank(m), 0);
  FPModule H(ring, K->term(m).degrees(), hrel);
  auto TH = make_complex(Complex::single(H, m));
  ChainMap aug{K, TH, {{m, mat::identity(R, K->rank(m))}}};
  ChainMap g = compose(aug, dw);
  Cone E2 = cone(g);
  ChainMap e12 = cone_map(E1, E2, identity_map(TU), aug);

  // psi on C~_{m+1}: g composed with a section of u modulo boundaries and relations.
  ChainMap psi{TCt, TH, {}};
  if (Ct->rank(m + 1) > 0) {
    const int r = Ct->rank(m + 1);
    if (U->rank(m + 1) == 0) {
      psi.comps[m] = Matrix(H.rank(), r);
    } else {
      Matrix bd = Ct->rank(m + 2) ? Ct->d(m + 2) : Matrix(r, 0);
      ColumnSpan span(ring, fr.map.at(m + 1), mat::hstack(bd, Ct->term(m + 1).relations()), Ct->term(m + 1).degrees(),
                      true, U->term(m + 1).degrees());
      auto lift = span.lift(mat::identity(R, r));
      if (!lift.X) throw InvariantViolation("realization does not cover the bottom term of the reduced cone");
      psi.comps[m] = mat::mul(R, g.at(m), *lift.X);
    }
  }
  if (!psi.is_chain_map() || !is_homotopy_between(Homotopy{TU, TH, {}}, compose(psi, Tu), g))
    throw InvariantViolation("connecting map does not descend to the reduced cone");
  Cone Pt = cone(psi);
  ChainMap e2p = cone_map(E2, Pt, Tu, identity_map(TH));

  out.ptilde = Pt.complex;
  out.certificate = Zigzag::trivial(P);
  if (!(*Pp == *P)) out.certificate.push(cov.to_input, false, "truncate below the bottom homology");
  out.certificate.push(into, true, "into the rotated cone");
  out.certificate.push(e1, false, "realize the reduced cone");
  out.certificate.push(e12, true, "augment the Koszul complex");
  out.certificate.push(e2p, true, "descend to the reduced cone");
  return out;
}

}  // namespace

Reduction reduce_object(const ComplexPtr& P, const SerreSpec& spec, std::uint64_t seed, bool check_pd) {
  if (!P->is_free()) throw PreconditionError("reduce_object needs a complex of free modules");
  CohenMacaulayReport cm = is_cohen_macaulay(P->ring());
  if (!cm.cohen_macaulay)
    throw PreconditionError("the ring is not Cohen-Macaulay (depth " + std::to_string(cm.depth) + ", dimension " +
                            std::to_string(cm.dimension) +
                            "); by the Cohen-Macaulay dichotomy no nonzero finite-length module has finite "
                            "projective dimension, so no reduction exists");
  for (int n = P->min_c(); n <= P->max_c(); ++n)
    if (!serre_member(homology(*P, n).module, spec))
      throw PreconditionError("homology in degree " + std::to_string(n) + " is not in " + spec.to_string());

  Reduction out = reduce_step(P, spec, seed);
  for (const auto& [n, T] : out.ptilde->terms()) {
    if (!serre_member(T, spec)) out.terms_in_spec = false;
    if (check_pd && !projective_dimension(T).value) out.terms_finite_pd = false;
  }
  return out;
}

Realization realize_in_projectives(const ComplexPtr& X) {
  for (const auto& [n, T] : X->terms())
    if (!T.is_free() && !projective_dimension(T).value)
      throw PreconditionError("term in degree " + std::to_string(n) + " has infinite projective dimension");
  Realization out{X, Zigzag::trivial(X)};
  if (X->is_free()) return out;
  FreeReplacement fr = free_replacement(X);
  out.complex = fr.complex;
  out.certificate.push(fr.map, false, "free realization");
  return out;
}

RoundtripReport roundtrip_verify(const ComplexPtr& P, const SerreSpec& spec, std::uint64_t seed) {
  RoundtripReport rep;
  rep.reduction = reduce_object(P, spec, seed);
  rep.realization = realize_in_projectives(rep.reduction.ptilde);
  rep.certificate = rep.reduction.certificate;
  rep.certificate.append(rep.realization.certificate);

  rep.arrows = verify_zigzag(rep.certificate);
  rep.arrows_verified = true;
  for (const auto& a : rep.arrows) rep.arrows_verified = rep.arrows_verified && a.chain_map && a.quasi_isomorphism;

  for (const auto& node : rep.certificate.nodes) rep.nodes.push_back(summarize_node(*node));
  rep.euler_constant = rep.nodes.front().euler.has_value();
  if (rep.euler_constant) rep.euler = *rep.nodes.front().euler;
  for (const auto& s : rep.nodes) rep.euler_constant = rep.euler_constant && s.euler == rep.nodes.front().euler;

  const Complex& A = *P;
  const Complex& B = *rep.realization.complex;
  const int lo = std::min(A.min_c(), B.min_c()), hi = std::max(A.max_c(), B.max_c());
  rep.homology_matches = true;
  for (int n = lo; n <= hi && rep.homology_matches; ++n) {
    FPModule HA = homology(A, n).module, HB = homology(B, n).module;
    if (HA.is_zero() || HB.is_zero()) {
      rep.homology_matches = HA.is_zero() && HB.is_zero();
      continue;
    }
    rep.homology_matches = HA.length() == HB.length() && annihilator(HA) == annihilator(HB);
  }
  return rep;
}

TransportStep transport_morphism_step(const ChainMap& g, const SerreSpec& spec, std::uint64_t seed) {
  TransportStep out;
  out.cover = morphism_cover(g, spec, seed);
  out.cone_x = cone(out.cover.betaX);
  out.cone_y = cone(out.cover.betaY);
  const Complex& X = *g.src;
  const Complex& Y = *g.dst;
  ComplexStats sx = complex_stats(X), sy = complex_stats(Y);
  ComplexStats both = complex_stats(direct_sum(X, Y));
  out.width = both.acyclic ? 0 : both.wid;
  out.cones = complex_stats(direct_sum(*out.cone_x.complex, *out.cone_y.complex));
  out.cone_x_sum = complex_stats(direct_sum(*out.cone_x.complex, Y));
  out.vacuous = out.width == 0;
  const int k = out.width;
  if (out.vacuous) {
    out.strict_decrease = out.bounded_increase = out.min_bound = true;
  } else {
    out.strict_decrease = out.cones.acyclic || out.cones.wid < k;
    out.bounded_increase = out.cone_x_sum.acyclic || out.cone_x_sum.wid <= k;
    out.min_bound = true;
    if (!sx.acyclic && !sy.acyclic && sx.min < sy.min)
      out.min_bound = out.cone_x_sum.acyclic || out.cone_x_sum.min - out.cover.m <= k - 1;
  }

  if (!sx.acyclic && !sy.acyclic && sx.min > sy.max) {
    FreeReplacement fr = free_replacement(g.src);
    ChainMap f = compose(g, fr.map);
    NullHomotopyResult nh = null_homotopy(f);
    out.null_homotopic = nh.homotopy && is_homotopy_between(*nh.homotopy, f, zero_map(f.src, f.dst));
  }
  return out;
}

}  // namespace kz
