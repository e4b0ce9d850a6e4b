#include "koszulator/groebner.hpp"

#include <algorithm>

#include "koszulator/budget.hpp"
#include "koszulator/errors.hpp"

namespace kz {

bool GroebnerBasis::Pair::operator<(const Pair& o) const {
  if (sugar != o.sugar) return sugar < o.sugar;
  if (lcm_deg != o.lcm_deg) return lcm_deg < o.lcm_deg;
  if (comp != o.comp) return comp < o.comp;
  return seq < o.seq;
}

GroebnerBasis::GroebnerBasis(const PolyRing& ring, std::vector<int> comp_degrees)
    : ring_(&ring), comp_degrees_(std::move(comp_degrees)) {}

GroebnerBasis GroebnerBasis::trusted(const PolyRing& ring, std::vector<Vec> basis, std::vector<int> comp_degrees) {
  GroebnerBasis g(ring, std::move(comp_degrees));
  for (auto& v : basis) {
    if (v.is_zero()) continue;
    v = ring.vscale(v, ring.field().inv(v.lead().c));
    int s = g.sugar_of(v);
    g.index(static_cast<int>(g.basis_.size()), v.lead().comp);
    g.basis_.push_back(std::move(v));
    g.sugar_.push_back(s);
    g.redundant_.push_back(false);
  }
  return g;
}

int GroebnerBasis::sugar_of(const Vec& v) const {
  int s = 0;
  for (const auto& t : v.terms) {
    int cd = t.comp < static_cast<int>(comp_degrees_.size()) ? comp_degrees_[t.comp] : 0;
    s = std::max(s, t.m.deg + cd);
  }
  return s;
}

void GroebnerBasis::add(const Vec& v) {
  if (!v.is_zero()) pending_.push_back(v);
}

const Vec* GroebnerBasis::find_reducer(const VTerm& t) const {
  if (t.comp >= static_cast<int>(by_comp_.size())) return nullptr;
  for (int k : by_comp_[t.comp]) {
    if (redundant_[k]) continue;
    if (divides(basis_[k].lead().m, t.m)) return &basis_[k];
  }
  return nullptr;
}

bool GroebnerBasis::is_reducible(const Monomial& m, int comp) const {
  VTerm t{m, comp, Coeff(1)};
  return find_reducer(t) != nullptr;
}

Vec GroebnerBasis::normal_form(const Vec& v) const {
  const Field& F = ring_->field();
  Vec result;
  std::vector<VTerm> rem = v.terms;
  size_t pos = 0;
  while (pos < rem.size()) {
    const VTerm& t = rem[pos];
    const Vec* red = find_reducer(t);
    if (red == nullptr) {
      result.terms.push_back(t);
      ++pos;
      continue;
    }
    // red is monic: subtract t.c * (t.m / lead) * red, whose lead cancels t.
    Monomial q = mono_div(t.m, red->lead().m);
    Coeff c = F.neg(t.c);
    std::vector<VTerm> merged;
    merged.reserve(rem.size() - pos + red->terms.size());
    size_t i = pos + 1, j = 1;
    const auto& rt = red->terms;
    while (i < rem.size() || j < rt.size()) {
      if (j >= rt.size()) {
        merged.push_back(rem[i++]);
        continue;
      }
      VTerm s{mono_mul(rt[j].m, q), rt[j].comp, Coeff()};
      if (i >= rem.size()) {
        s.c = F.mul(rt[j].c, c);
        merged.push_back(std::move(s));
        ++j;
        continue;
      }
      int cmp = pot_compare(rem[i], s);
      if (cmp > 0) {
        merged.push_back(rem[i++]);
      } else if (cmp < 0) {
        s.c = F.mul(rt[j].c, c);
        merged.push_back(std::move(s));
        ++j;
      } else {
        Coeff sum = F.add(rem[i].c, F.mul(rt[j].c, c));
        if (sum != 0) merged.push_back({rem[i].m, rem[i].comp, sum});
        ++i;
        ++j;
      }
    }
    rem = std::move(merged);
    pos = 0;
  }
  return result;
}

Vec GroebnerBasis::s_vector(int i, int j) const {
  const Vec& a = basis_[i];
  const Vec& b = basis_[j];
  Monomial l = ring_->lcm(a.lead().m, b.lead().m);
  Vec x = ring_->vmul_term(a, mono_div(l, a.lead().m), Coeff(1));
  Vec y = ring_->vmul_term(b, mono_div(l, b.lead().m), Coeff(1));
  return ring_->vsub(x, y);
}

void GroebnerBasis::insert(Vec h, int sugar) {
  const Field& F = ring_->field();
  h = ring_->vscale(h, F.inv(h.lead().c));
  const int idx = static_cast<int>(basis_.size());
  const VTerm& lh = h.lead();

  // Gebauer-Möller: drop old pairs made superfluous by the new leading term.
  for (auto it = pairs_.begin(); it != pairs_.end();) {
    if (it->comp == lh.comp && divides(lh.m, it->lcm)) {
      Monomial li = ring_->lcm(basis_[it->i].lead().m, lh.m);
      Monomial lj = ring_->lcm(basis_[it->j].lead().m, lh.m);
      if (li != it->lcm && lj != it->lcm) {
        it = pairs_.erase(it);
        continue;
      }
    }
    ++it;
  }

  // Candidate pairs with the new element, keeping only lcm-minimal ones.
  std::vector<Pair> fresh;
  for (int i = 0; i < idx; ++i) {
    if (redundant_[i]) continue;
    const VTerm& li = basis_[i].lead();
    if (li.comp != lh.comp) continue;
    Monomial l = ring_->lcm(li.m, lh.m);
    int s = std::max(sugar_[i] + (l.deg - li.m.deg), sugar + (l.deg - lh.m.deg));
    fresh.push_back(Pair{s, l.deg, lh.comp, 0, i, idx, l});
  }
  std::vector<Pair> kept;
  for (size_t a = 0; a < fresh.size(); ++a) {
    bool drop = false;
    for (size_t b = 0; b < fresh.size() && !drop; ++b) {
      if (a == b) continue;
      if (divides(fresh[b].lcm, fresh[a].lcm)) {
        if (fresh[b].lcm != fresh[a].lcm) drop = true;
        else if (b < a) drop = true;
      }
    }
    if (!drop) kept.push_back(fresh[a]);
  }
  for (auto& p : kept) {
    p.seq = seq_++;
    pairs_.insert(p);
  }

  for (int i = 0; i < idx; ++i) {
    if (!redundant_[i] && basis_[i].lead().comp == lh.comp && divides(lh.m, basis_[i].lead().m)) redundant_[i] = true;
  }
  index(idx, lh.comp);
  basis_.push_back(std::move(h));
  sugar_.push_back(sugar);
  redundant_.push_back(false);
}

void GroebnerBasis::index(int idx, int comp) {
  if (comp >= static_cast<int>(by_comp_.size())) by_comp_.resize(comp + 1);
  by_comp_[comp].push_back(idx);
}

void GroebnerBasis::complete() {
  const int max_degree = current_budget().max_degree;
  // Inputs are processed in ascending sugar, ties in insertion order.
  std::vector<Vec> inputs = std::move(pending_);
  pending_.clear();
  std::stable_sort(inputs.begin(), inputs.end(), [&](const Vec& a, const Vec& b) { return sugar_of(a) < sugar_of(b); });
  size_t next_input = 0;

  while (next_input < inputs.size() || !pairs_.empty()) {
    int input_sugar = next_input < inputs.size() ? sugar_of(inputs[next_input]) : -1;
    bool take_input = next_input < inputs.size() && (pairs_.empty() || input_sugar <= pairs_.begin()->sugar);
    Vec h;
    int sugar;
    if (take_input) {
      h = normal_form(inputs[next_input]);
      sugar = input_sugar;
      ++next_input;
    } else {
      Pair p = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      if (p.sugar > max_degree) {
        pairs_.clear();
        throw BudgetExceeded("Gröbner basis computation exceeded degree budget " + std::to_string(max_degree));
      }
      h = normal_form(s_vector(p.i, p.j));
      sugar = p.sugar;
    }
    if (!h.is_zero()) insert(std::move(h), sugar);
  }
}

std::vector<VTerm> GroebnerBasis::leading_terms() const {
  std::vector<VTerm> out;
  for (size_t i = 0; i < basis_.size(); ++i)
    if (!redundant_[i]) out.push_back(basis_[i].lead());
  return out;
}

std::vector<Vec> GroebnerBasis::reduced() const {
  // Minimal subset: leads not divisible by any other lead (ties keep the earliest).
  std::vector<int> minimal;
  for (size_t i = 0; i < basis_.size(); ++i) {
    const VTerm& li = basis_[i].lead();
    bool drop = false;
    for (size_t j = 0; j < basis_.size() && !drop; ++j) {
      if (i == j) continue;
      const VTerm& lj = basis_[j].lead();
      if (lj.comp != li.comp || !divides(lj.m, li.m)) continue;
      if (lj.m != li.m || j < i) drop = true;
    }
    if (!drop) minimal.push_back(static_cast<int>(i));
  }
  std::vector<Vec> mins;
  for (int i : minimal) mins.push_back(basis_[i]);
  GroebnerBasis red = trusted(*ring_, mins, comp_degrees_);
  std::vector<Vec> out;
  for (const auto& g : mins) {
    Vec tail;
    tail.terms.assign(g.terms.begin() + 1, g.terms.end());
    Vec r = red.normal_form(tail);
    Vec head;
    head.terms.push_back(g.lead());
    out.push_back(ring_->vadd(head, r));
  }
  std::sort(out.begin(), out.end(), [](const Vec& a, const Vec& b) { return pot_compare(a.lead(), b.lead()) < 0; });
  return out;
}

std::vector<Polynomial> groebner_basis(const PolyRing& ring, const std::vector<Polynomial>& gens) {
  GroebnerBasis gb(ring);
  for (const auto& g : gens) gb.add(ring.embed(g, 0));
  gb.complete();
  std::vector<Polynomial> out;
  for (const auto& v : gb.reduced()) out.push_back(ring.component(v, 0));
  return out;
}

Polynomial normal_form(const PolyRing& ring, const Polynomial& f, const std::vector<Polynomial>& basis) {
  std::vector<Vec> vs;
  for (const auto& b : basis) vs.push_back(ring.embed(b, 0));
  GroebnerBasis gb = GroebnerBasis::trusted(ring, vs);
  return ring.component(gb.normal_form(ring.embed(f, 0)), 0);
}

}  // namespace kz
