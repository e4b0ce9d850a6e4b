#include "oracle/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace oracle {

namespace {

Exp add(const Exp& a, const Exp& b) {
  Exp r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

void enumerate(int nvars, int i, int left, Exp& cur, std::vector<Exp>& out) {
  if (i == nvars - 1) {
    cur[i] = left;
    out.push_back(cur);
    return;
  }
  for (int e = left; e >= 0; --e) {
    cur[i] = e;
    enumerate(nvars, i + 1, left - e, cur, out);
  }
}

// m * f placed in component comp.
Vector shifted(const Poly& f, const Exp& m, int comp) {
  Vector v;
  for (const auto& [e, c] : f) v[{comp, add(e, m)}] = c;
  return v;
}

Vector shifted_column(const std::vector<Poly>& col, const Exp& m) {
  Vector v;
  for (size_t i = 0; i < col.size(); ++i)
    for (const auto& [e, c] : col[i]) v[{static_cast<int>(i), add(e, m)}] = c;
  return v;
}

// Spanning set of (I F)_d for F = ⊕ S(-degrees[i]).
void relation_vectors(int nvars, const std::vector<int>& degrees, const std::vector<Poly>& ring_rel, int d,
                      std::vector<Vector>& out) {
  for (size_t i = 0; i < degrees.size(); ++i)
    for (const Poly& g : ring_rel)
      for (const Exp& m : monomials(nvars, d - degrees[i] - degree(g)))
        out.push_back(shifted(g, m, static_cast<int>(i)));
}

void column_vectors(int nvars, const GradedMatrix& A, int d, std::vector<Vector>& out) {
  for (size_t j = 0; j < A.columns.size(); ++j)
    for (const Exp& m : monomials(nvars, d - A.col_degrees[j])) {
      Vector v = shifted_column(A.columns[j], m);
      if (!v.empty()) out.push_back(std::move(v));
    }
}

long free_dim(int nvars, const std::vector<int>& degrees, int d) {
  long n = 0;
  for (int r : degrees) n += static_cast<long>(monomials(nvars, d - r).size());
  return n;
}

long quotient_ideal_dim(int nvars, const std::vector<int>& degrees, const std::vector<Poly>& ring_rel, int d) {
  long n = 0;
  for (int r : degrees) n += ideal_dim(nvars, ring_rel, d - r);
  return n;
}

}  // namespace

Poly convert(const kz::PolyRing& S, const kz::Polynomial& f) {
  Poly p;
  for (const auto& t : f.terms) {
    Exp e(S.nvars());
    for (int i = 0; i < S.nvars(); ++i) e[i] = t.m.exp[i];
    p[e] = t.c;
  }
  return p;
}

int degree(const Poly& f) {
  if (f.empty()) return 0;
  const Exp& e = f.begin()->first;
  return std::accumulate(e.begin(), e.end(), 0);
}

std::vector<Exp> monomials(int nvars, int d) {
  std::vector<Exp> out;
  if (d < 0 || nvars <= 0) return out;
  Exp cur(nvars, 0);
  enumerate(nvars, 0, d, cur, out);
  return out;
}

long rank(const std::vector<Vector>& vs) {
  // Echelon form keyed by leading (smallest) index, pivots normalized to 1.
  std::map<std::pair<int, Exp>, Vector> pivots;
  for (Vector v : vs) {
    while (!v.empty()) {
      auto lead = v.begin();
      auto it = pivots.find(lead->first);
      if (it == pivots.end()) {
        const mpq_class inv = 1 / mpq_class(lead->second);
        for (auto& [k, c] : v) c *= inv;
        auto key = lead->first;
        pivots.emplace(key, std::move(v));
        v.clear();
        break;
      }
      const mpq_class factor = lead->second;
      for (const auto& [k, c] : it->second) {
        mpq_class nc = v[k] - factor * c;
        if (nc == 0)
          v.erase(k);
        else
          v[k] = nc;
      }
    }
  }
  return static_cast<long>(pivots.size());
}

long ideal_dim(int nvars, const std::vector<Poly>& gens, int d) {
  std::vector<Vector> vs;
  relation_vectors(nvars, {0}, gens, d, vs);
  return rank(vs);
}

bool member(int nvars, const std::vector<Poly>& gens, const Poly& f) {
  if (f.empty()) return true;
  const int d = degree(f);
  std::vector<Vector> vs;
  relation_vectors(nvars, {0}, gens, d, vs);
  const long r = rank(vs);
  vs.push_back(shifted(f, Exp(nvars, 0), 0));
  return rank(vs) == r;
}

long colon_dim(int nvars, const std::vector<Poly>& gens, const Poly& f, int d) {
  const auto dom = monomials(nvars, d);
  if (f.empty()) return static_cast<long>(dom.size());
  const int e = degree(f);
  std::vector<Vector> w;
  relation_vectors(nvars, {0}, gens, d + e, w);
  const long rw = rank(w);
  for (const Exp& m : dom) w.push_back(shifted(f, m, 0));
  return static_cast<long>(dom.size()) - (rank(w) - rw);
}

GradedMatrix convert(const kz::PolyRing& S, const kz::Matrix& A, const std::vector<int>& row_degrees,
                     const std::vector<int>& col_degrees) {
  GradedMatrix g;
  g.row_degrees = row_degrees;
  for (int j = 0; j < A.cols; ++j) {
    std::vector<Poly> col;
    int cd = 0;
    bool found = false;
    for (int i = 0; i < A.rows; ++i) {
      col.push_back(convert(S, A.at(i, j)));
      if (!found && !col.back().empty()) {
        cd = degree(col.back()) + row_degrees[i];
        found = true;
      }
    }
    g.columns.push_back(std::move(col));
    g.col_degrees.push_back(col_degrees.empty() ? cd : col_degrees[j]);
  }
  return g;
}

long cokernel_dim(int nvars, const GradedMatrix& A, const std::vector<Poly>& ring_rel, int d) {
  std::vector<Vector> vs;
  column_vectors(nvars, A, d, vs);
  relation_vectors(nvars, A.row_degrees, ring_rel, d, vs);
  return free_dim(nvars, A.row_degrees, d) - rank(vs);
}

std::optional<long> cokernel_length(int nvars, const GradedMatrix& A, const std::vector<Poly>& ring_rel,
                                    int max_degree) {
  if (A.row_degrees.empty()) return 0;
  const int lo = *std::min_element(A.row_degrees.begin(), A.row_degrees.end());
  long total = 0;
  long last = 0;
  for (int d = lo; d <= max_degree; ++d) {
    last = cokernel_dim(nvars, A, ring_rel, d);
    total += last;
  }
  if (last != 0) return std::nullopt;
  return total;
}

long syzygy_dim(int nvars, const GradedMatrix& A, const std::vector<Poly>& ring_rel, int d) {
  std::vector<Vector> w;
  relation_vectors(nvars, A.row_degrees, ring_rel, d, w);
  const long rw = rank(w);
  long domain = 0;
  for (size_t j = 0; j < A.columns.size(); ++j)
    for (const Exp& m : monomials(nvars, d - A.col_degrees[j])) {
      w.push_back(shifted_column(A.columns[j], m));
      ++domain;
    }
  const long lifted_kernel = domain - (rank(w) - rw);
  return lifted_kernel - quotient_ideal_dim(nvars, A.col_degrees, ring_rel, d);
}

long span_dim(int nvars, const std::vector<int>& ambient_degrees, const GradedMatrix& Z,
              const std::vector<Poly>& ring_rel, int d) {
  std::vector<Vector> vs;
  column_vectors(nvars, Z, d, vs);
  relation_vectors(nvars, ambient_degrees, ring_rel, d, vs);
  return rank(vs) - quotient_ideal_dim(nvars, ambient_degrees, ring_rel, d);
}

}  // namespace oracle
