#include "koszulator/invariants.hpp"

#include "koszulator/errors.hpp"
#include "koszulator/module_algebra.hpp"

namespace kz {

long euler_characteristic_fl(const Complex& X) {
  long chi = 0;
  for (int n = X.min_c(); n <= X.max_c(); ++n) {
    auto len = homology(X, n).module.length();
    if (!len) throw PreconditionError("homology in degree " + std::to_string(n) + " has infinite length");
    chi += (n % 2 == 0 ? 1 : -1) * *len;
  }
  return chi;
}

bool HomVanishingReport::verified() const {
  if (!classes_zero) return false;
  for (const auto& w : witnesses)
    if (!w.verified) return false;
  return true;
}

HomVanishingReport hom_vanishing_check(const ComplexPtr& P, const ComplexPtr& Q, int max_witnesses) {
  ComplexStats sp = complex_stats(*P), sq = complex_stats(*Q);
  HomVanishingReport rep;
  if (sp.acyclic || sq.acyclic) {
    rep.vacuous = true;
  } else if (sp.min <= sq.max) {
    throw PreconditionError("Hom vanishing needs min(P) > max(Q); got min " + std::to_string(sp.min) + " and max " +
                            std::to_string(sq.max));
  }
  const ComplexPtr src = P->is_free() ? P : free_replacement(P).complex;
  HomotopyClasses hc = homotopy_classes(src, Q);
  rep.classes_zero = hc.classes.module.is_zero();
  const int count = std::min(max_witnesses, hc.cycles.cols);
  for (int j = 0; j < count; ++j) {
    HomVanishingWitness w{hc.chain_map(hc.cycles, j), Homotopy{src, Q, {}}, false};
    NullHomotopyResult nh = null_homotopy(w.map);
    if (nh.homotopy) {
      w.homotopy = *nh.homotopy;
      w.verified = is_homotopy_between(w.homotopy, w.map, zero_map(src, Q));
    }
    rep.witnesses.push_back(std::move(w));
  }
  return rep;
}

HomComparisonReport module_hom_comparison(const FPModule& M, const FPModule& N) {
  const RingPtr& ring = M.ring();
  const QuotientRing& R = *ring;
  HomComparisonReport rep;
  rep.module_hom = ext_module(M, N, 0);

  auto Mc = make_complex(Complex::single(M, 0));
  auto Nc = make_complex(Complex::single(N, 0));
  FreeReplacement UM = free_replacement(Mc);
  FreeReplacement UN = free_replacement(Nc);
  rep.into_module = homotopy_classes(UM.complex, Nc);
  rep.derived = homotopy_classes(UM.complex, UN.complex);
  const FPModule& A = rep.derived.classes.module;
  const FPModule& B = rep.into_module.classes.module;
  rep.derived_length = A.length();
  rep.module_length = B.length();
  auto hom_len = rep.module_hom.length();
  rep.lengths_agree = rep.derived_length && rep.module_length && hom_len && *rep.derived_length == *hom_len &&
                      *rep.module_length == *hom_len;

  rep.forward = Matrix(B.rank(), A.rank());
  for (int j = 0; j < A.rank(); ++j) {
    ChainMap f = compose(UN.map, rep.derived.chain_map(rep.derived.classes.generators, j));
    auto c = rep.into_module.class_of(rep.into_module.coordinates(f));
    if (!c) throw InvariantViolation("composite with the augmentation is not a chain map");
    for (int i = 0; i < B.rank(); ++i) rep.forward.at(i, j) = c->at(i, 0);
  }
  rep.backward = Matrix(A.rank(), B.rank());
  for (int j = 0; j < B.rank(); ++j) {
    ChainMap phi = rep.into_module.chain_map(rep.into_module.classes.generators, j);
    auto lift = lift_along_qis(UN.map, phi);
    if (!lift) throw InvariantViolation("map into N does not lift along the resolution of N");
    auto c = rep.derived.class_of(rep.derived.coordinates(lift->map));
    if (!c) throw InvariantViolation("lifted map is not a chain map");
    for (int i = 0; i < A.rank(); ++i) rep.backward.at(i, j) = c->at(i, 0);
  }
  ModuleMorphism fw{A, B, rep.forward}, bw{B, A, rep.backward};
  rep.inverse_maps = fw.is_well_defined() && bw.is_well_defined() &&
                     equal_morphisms(compose(bw, fw), ModuleMorphism::identity(A)) &&
                     equal_morphisms(compose(fw, bw), ModuleMorphism::identity(B));
  (void)R;
  return rep;
}

}  // namespace kz
