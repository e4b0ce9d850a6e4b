#include "koszulator/module_algebra.hpp"

#include "koszulator/budget.hpp"
#include "koszulator/errors.hpp"

namespace kz {

namespace {

Matrix drop_zero_columns(const Matrix& A) {
  std::vector<int> keep;
  for (int j = 0; j < A.cols; ++j)
    if (!mat::column(A, j).is_zero()) keep.push_back(j);
  return mat::select_columns(A, keep);
}

FPModule ext_from_resolution(const Resolution& res, const FPModule& N, int i) {
  const RingPtr& ring = N.ring();
  const Complex& F = *res.complex;
  const int rn = N.rank();
  const int ri = F.rank(i);
  if (ri == 0 || rn == 0) return FPModule::zero(ring);

  std::vector<int> degrees;
  for (int k = 0; k < ri; ++k)
    for (int g = 0; g < rn; ++g) degrees.push_back(N.degrees()[g] - F.term(i).degrees()[k]);

  Matrix In = mat::identity(*ring, rn);
  auto coboundary = [&](int j) {  // Hom(F_j, N) -> Hom(F_{j+1}, N)
    return mat::kron(*ring, mat::transpose(F.d(j + 1)), In);
  };
  auto rel = [&](int j) { return mat::kron(*ring, mat::identity(*ring, F.rank(j)), N.relations()); };

  Matrix out = F.rank(i + 1) ? coboundary(i) : Matrix(0, ri * rn);
  Matrix in = (i > 0 && F.rank(i - 1)) ? coboundary(i - 1) : Matrix(ri * rn, 0);
  Matrix rel_next = F.rank(i + 1) ? rel(i + 1) : Matrix(0, 0);
  return homology_at(ring, in, out, rel(i), rel_next, degrees).module;
}

}  // namespace

std::vector<int> Resolution::ranks() const {
  std::vector<int> out;
  for (int j = 0; j <= length; ++j) out.push_back(complex->rank(j));
  return out;
}

Resolution free_resolution(const FPModule& M, int max_steps, bool minimal) {
  if (max_steps < 0) throw PreconditionError("max_steps must be nonnegative");
  if (max_steps > current_budget().max_steps)
    throw BudgetExceeded("resolution length " + std::to_string(max_steps) + " exceeds the step budget");
  if (minimal && !M.is_graded()) throw PreconditionError("minimal resolutions require a graded module");
  const RingPtr& ring = M.ring();

  FPModule start = M;
  Matrix aug = mat::identity(*ring, M.rank());
  if (minimal) {
    Minimized mm = minimize(M);
    start = mm.module;
    aug = mm.to_original;
  }
  std::map<int, FPModule> terms;
  std::map<int, Matrix> diffs;
  terms.emplace(0, FPModule::free(ring, start.degrees()));

  Resolution res;
  res.augmentation = aug;
  std::vector<int> prev_deg = start.degrees();
  Matrix d = minimal ? start.relations() : drop_zero_columns(start.relations());
  res.terminated = d.cols == 0;
  for (int k = 1; k <= max_steps; ++k) {
    if (d.cols == 0) {
      res.terminated = true;
      break;
    }
    std::vector<int> deg = column_degrees(ring->base(), d, prev_deg);
    terms.emplace(k, FPModule::free(ring, deg));
    diffs.emplace(k, d);
    res.length = k;
    if (k == max_steps) {
      res.terminated = false;
      break;
    }
    d = syzygy_module(ring, d, {}, prev_deg, deg, minimal);
    if (!minimal) d = drop_zero_columns(d);
    prev_deg = deg;
  }
  if (max_steps > 0 && res.length == max_steps) {
    // The term in position max_steps exists; termination is unknown unless its syzygies vanish.
    Matrix next = syzygy_module(ring, diffs.at(max_steps), {}, prev_deg, terms.at(max_steps).degrees(), minimal);
    res.terminated = drop_zero_columns(next).cols == 0;
  }
  res.complex = make_complex(Complex(ring, std::move(terms), std::move(diffs)));
  return res;
}

FPModule ext_module(const FPModule& M, const FPModule& N, int i) {
  if (i < 0) throw PreconditionError("Ext index must be nonnegative");
  Resolution res = free_resolution(M, i + 1, M.is_graded());
  return ext_from_resolution(res, N, i);
}

FPModule residue_field(const RingPtr& ring) {
  std::vector<Polynomial> vars;
  for (int i = 0; i < ring->nvars(); ++i) vars.push_back(ring->base().variable(i));
  return FPModule::cyclic(ring, vars, 0);
}

int depth(const FPModule& M) {
  auto dim = M.dimension();
  if (!dim) throw PreconditionError("depth of the zero module is undefined");
  FPModule k = residue_field(M.ring());
  Resolution res = free_resolution(k, *dim + 1, k.is_graded());
  for (int i = 0; i <= *dim; ++i)
    if (!ext_from_resolution(res, M, i).is_zero()) return i;
  throw InvariantViolation("no nonvanishing Ext against the residue field up to the dimension");
}

ProjectiveDimension projective_dimension(const FPModule& M) {
  ProjectiveDimension pd;
  pd.depth_of_ring = depth(FPModule::free(M.ring(), 1));
  if (M.is_zero()) {
    pd.value = -1;
    return pd;
  }
  if (!M.is_graded()) throw PreconditionError("projective dimension requires a graded module");
  pd.resolution = free_resolution(M, pd.depth_of_ring + 1, true);
  if (pd.resolution.complex->rank(pd.depth_of_ring + 1) == 0) pd.value = pd.resolution.length;
  return pd;
}

ExtVanishing ext_vanishing_dimension(const FPModule& M, const FPModule& C, int cutoff) {
  if (cutoff < 1) throw PreconditionError("cutoff must be at least 1");
  Resolution res = free_resolution(M, cutoff + 1, M.is_graded());
  ExtVanishing out;
  int last = 0;
  for (int i = 0; i <= cutoff; ++i) {
    bool nz = !ext_from_resolution(res, C, i).is_zero();
    out.nonzero.push_back(nz);
    if (nz && i >= 1) last = i;
  }
  if (last < cutoff) out.value = last;
  return out;
}

}  // namespace kz
