#include "koszulator/polynomial.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "koszulator/errors.hpp"

namespace kz {

// ---------------------------------------------------------------- Field

Field Field::prime(std::uint64_t p) {
  if (p < 2 || p >= (std::uint64_t{1} << 63)) throw PreconditionError("prime field characteristic out of range");
  mpz_class pz(static_cast<unsigned long>(p));
  if (mpz_probab_prime_p(pz.get_mpz_t(), 30) == 0) throw PreconditionError("characteristic " + std::to_string(p) + " is not prime");
  return Field(p);
}

std::string Field::name() const { return p_ == 0 ? "QQ" : "GF(" + std::to_string(p_) + ")"; }

Coeff Field::reduce(const Coeff& c) const {
  if (p_ == 0) return c;
  mpz_class num = c.get_num() % pz_;
  if (num < 0) num += pz_;
  mpz_class den = c.get_den() % pz_;
  if (den == 0) throw PreconditionError("denominator divisible by the characteristic");
  if (den != 1) {
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pz_.get_mpz_t());
    num = (num * inv) % pz_;
  }
  return Coeff(num);
}

Coeff Field::add(const Coeff& a, const Coeff& b) const {
  if (p_ == 0) return a + b;
  mpz_class s = a.get_num() + b.get_num();
  if (s >= pz_) s -= pz_;
  return Coeff(s);
}

Coeff Field::sub(const Coeff& a, const Coeff& b) const {
  if (p_ == 0) return a - b;
  mpz_class s = a.get_num() - b.get_num();
  if (s < 0) s += pz_;
  return Coeff(s);
}

Coeff Field::mul(const Coeff& a, const Coeff& b) const {
  if (p_ == 0) return a * b;
  mpz_class s = (a.get_num() * b.get_num()) % pz_;
  return Coeff(s);
}

Coeff Field::neg(const Coeff& a) const {
  if (p_ == 0) return -a;
  if (a == 0) return a;
  return Coeff(pz_ - a.get_num());
}

Coeff Field::inv(const Coeff& a) const {
  if (a == 0) throw PreconditionError("division by zero");
  if (p_ == 0) return 1 / a;
  mpz_class r;
  mpz_invert(r.get_mpz_t(), a.get_num_mpz_t(), pz_.get_mpz_t());
  return Coeff(r);
}

// ------------------------------------------------------------- Monomial

int grevlex_compare(const Monomial& a, const Monomial& b) {
  if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
  for (int i = kMaxVars - 1; i >= 0; --i) {
    if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? 1 : -1;
  }
  return 0;
}

bool divides(const Monomial& a, const Monomial& b) {
  if (a.deg > b.deg) return false;
  for (int i = 0; i < kMaxVars; ++i)
    if (a.exp[i] > b.exp[i]) return false;
  return true;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.exp[i] = static_cast<std::uint16_t>(a.exp[i] + b.exp[i]);
  r.deg = a.deg + b.deg;
  return r;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.exp[i] = static_cast<std::uint16_t>(a.exp[i] - b.exp[i]);
  r.deg = a.deg - b.deg;
  return r;
}

bool is_one(const Monomial& m) {
  for (auto e : m.exp)
    if (e != 0) return false;
  return true;
}

int pot_compare(const VTerm& a, const VTerm& b) {
  if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
  return grevlex_compare(a.m, b.m);
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms.size() != o.terms.size()) return false;
  for (size_t i = 0; i < terms.size(); ++i)
    if (terms[i].m != o.terms[i].m || terms[i].c != o.terms[i].c) return false;
  return true;
}

bool Vec::operator==(const Vec& o) const {
  if (terms.size() != o.terms.size()) return false;
  for (size_t i = 0; i < terms.size(); ++i)
    if (terms[i].comp != o.terms[i].comp || terms[i].m != o.terms[i].m || terms[i].c != o.terms[i].c) return false;
  return true;
}

// ------------------------------------------------------------- PolyRing

PolyRing::PolyRing(Field field, std::vector<std::string> names, std::vector<int> weights)
    : field_(std::move(field)), names_(std::move(names)), weights_(std::move(weights)) {
  if (static_cast<int>(names_.size()) > kMaxVars)
    throw PreconditionError("at most " + std::to_string(kMaxVars) + " variables are supported");
  if (weights_.empty()) weights_.assign(names_.size(), 1);
  if (weights_.size() != names_.size()) throw PreconditionError("one weight per variable required");
  for (int w : weights_)
    if (w <= 0) throw PreconditionError("variable weights must be positive");
  std::set<std::string> seen(names_.begin(), names_.end());
  if (seen.size() != names_.size()) throw PreconditionError("variable names must be distinct");
}

bool PolyRing::operator==(const PolyRing& o) const {
  return field_ == o.field_ && names_ == o.names_ && weights_ == o.weights_;
}

Monomial PolyRing::var_monomial(int i, int power) const {
  Monomial m;
  m.exp[i] = static_cast<std::uint16_t>(power);
  m.deg = weights_[i] * power;
  return m;
}

Monomial PolyRing::lcm(const Monomial& a, const Monomial& b) const {
  Monomial r;
  int d = 0;
  for (int i = 0; i < nvars(); ++i) {
    r.exp[i] = std::max(a.exp[i], b.exp[i]);
    d += r.exp[i] * weights_[i];
  }
  r.deg = d;
  return r;
}

std::vector<Monomial> PolyRing::monomials_of_degree(int d) const {
  std::vector<Monomial> out;
  if (d < 0) return out;
  Monomial cur;
  // depth-first over variables, remaining weighted degree
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == nvars()) {
      if (left == 0) out.push_back(cur);
      return;
    }
    for (int e = left / weights_[var]; e >= 0; --e) {
      cur.exp[var] = static_cast<std::uint16_t>(e);
      self(self, var + 1, left - e * weights_[var]);
    }
    cur.exp[var] = 0;
  };
  rec(rec, 0, d);
  for (auto& m : out) m.deg = d;
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return grevlex_compare(a, b) > 0; });
  return out;
}

Polynomial PolyRing::constant(const Coeff& c) const {
  Polynomial p;
  Coeff r = field_.reduce(c);
  if (r != 0) p.terms.push_back({one(), r});
  return p;
}

Polynomial PolyRing::variable(int i) const {
  Polynomial p;
  p.terms.push_back({var_monomial(i), Coeff(1)});
  return p;
}

Polynomial PolyRing::add(const Polynomial& a, const Polynomial& b) const {
  Polynomial r;
  r.terms.reserve(a.terms.size() + b.terms.size());
  size_t i = 0, j = 0;
  while (i < a.terms.size() && j < b.terms.size()) {
    int c = grevlex_compare(a.terms[i].m, b.terms[j].m);
    if (c > 0) {
      r.terms.push_back(a.terms[i++]);
    } else if (c < 0) {
      r.terms.push_back(b.terms[j++]);
    } else {
      Coeff s = field_.add(a.terms[i].c, b.terms[j].c);
      if (s != 0) r.terms.push_back({a.terms[i].m, s});
      ++i;
      ++j;
    }
  }
  for (; i < a.terms.size(); ++i) r.terms.push_back(a.terms[i]);
  for (; j < b.terms.size(); ++j) r.terms.push_back(b.terms[j]);
  return r;
}

Polynomial PolyRing::neg(const Polynomial& a) const {
  Polynomial r = a;
  for (auto& t : r.terms) t.c = field_.neg(t.c);
  return r;
}

Polynomial PolyRing::sub(const Polynomial& a, const Polynomial& b) const { return add(a, neg(b)); }

Polynomial PolyRing::scale(const Polynomial& a, const Coeff& c) const {
  Coeff cr = field_.reduce(c);
  if (cr == 0) return {};
  Polynomial r = a;
  for (auto& t : r.terms) t.c = field_.mul(t.c, cr);
  return r;
}

Polynomial PolyRing::mul_term(const Polynomial& a, const Monomial& m, const Coeff& c) const {
  if (c == 0) return {};
  Polynomial r;
  r.terms.reserve(a.terms.size());
  for (const auto& t : a.terms) r.terms.push_back({mono_mul(t.m, m), field_.mul(t.c, c)});
  return r;
}

Polynomial PolyRing::mul(const Polynomial& a, const Polynomial& b) const {
  if (a.is_zero() || b.is_zero()) return {};
  const Polynomial& small = a.terms.size() <= b.terms.size() ? a : b;
  const Polynomial& big = a.terms.size() <= b.terms.size() ? b : a;
  Polynomial r;
  for (const auto& t : small.terms) r = add(r, mul_term(big, t.m, t.c));
  return r;
}

Polynomial PolyRing::pow(const Polynomial& a, int e) const {
  if (e < 0) throw PreconditionError("negative exponent");
  Polynomial r = constant(1);
  for (int i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

Polynomial PolyRing::monic(const Polynomial& a) const {
  if (a.is_zero()) return a;
  return scale(a, field_.inv(a.lead().c));
}

int PolyRing::degree(const Polynomial& p) const {
  int d = -1;
  for (const auto& t : p.terms) d = std::max(d, static_cast<int>(t.m.deg));
  return d;
}

bool PolyRing::is_homogeneous(const Polynomial& p) const {
  for (const auto& t : p.terms)
    if (t.m.deg != p.terms.front().m.deg) return false;
  return true;
}

bool PolyRing::is_constant(const Polynomial& p) const { return p.is_zero() || (p.terms.size() == 1 && p.terms[0].m.deg == 0); }

Vec PolyRing::vadd(const Vec& a, const Vec& b) const {
  Vec r;
  r.terms.reserve(a.terms.size() + b.terms.size());
  size_t i = 0, j = 0;
  while (i < a.terms.size() && j < b.terms.size()) {
    int c = pot_compare(a.terms[i], b.terms[j]);
    if (c > 0) {
      r.terms.push_back(a.terms[i++]);
    } else if (c < 0) {
      r.terms.push_back(b.terms[j++]);
    } else {
      Coeff s = field_.add(a.terms[i].c, b.terms[j].c);
      if (s != 0) r.terms.push_back({a.terms[i].m, a.terms[i].comp, s});
      ++i;
      ++j;
    }
  }
  for (; i < a.terms.size(); ++i) r.terms.push_back(a.terms[i]);
  for (; j < b.terms.size(); ++j) r.terms.push_back(b.terms[j]);
  return r;
}

Vec PolyRing::vscale(const Vec& a, const Coeff& c) const {
  Coeff cr = field_.reduce(c);
  if (cr == 0) return {};
  Vec r = a;
  for (auto& t : r.terms) t.c = field_.mul(t.c, cr);
  return r;
}

Vec PolyRing::vsub(const Vec& a, const Vec& b) const { return vadd(a, vscale(b, field_.neg(Coeff(1)))); }

Vec PolyRing::vmul_term(const Vec& a, const Monomial& m, const Coeff& c) const {
  if (c == 0) return {};
  Vec r;
  r.terms.reserve(a.terms.size());
  for (const auto& t : a.terms) r.terms.push_back({mono_mul(t.m, m), t.comp, field_.mul(t.c, c)});
  return r;
}

Vec PolyRing::vmul_poly(const Vec& a, const Polynomial& p) const {
  Vec r;
  for (const auto& t : p.terms) r = vadd(r, vmul_term(a, t.m, t.c));
  return r;
}

Vec PolyRing::embed(const Polynomial& p, int comp) const {
  Vec v;
  v.terms.reserve(p.terms.size());
  for (const auto& t : p.terms) v.terms.push_back({t.m, comp, t.c});
  return v;
}

Polynomial PolyRing::component(const Vec& v, int comp) const {
  Polynomial p;
  for (const auto& t : v.terms)
    if (t.comp == comp) p.terms.push_back({t.m, t.c});
  return p;
}

std::string PolyRing::to_string(const Monomial& m) const {
  std::string s;
  for (int i = 0; i < nvars(); ++i) {
    if (m.exp[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += names_[i];
    if (m.exp[i] > 1) s += "^" + std::to_string(m.exp[i]);
  }
  return s.empty() ? "1" : s;
}

std::string PolyRing::coeff_string(const Coeff& c) const { return c.get_str(); }

std::string PolyRing::to_string(const Polynomial& p) const {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms) {
    Coeff c = t.c;
    bool negative = field_.is_rationals() && c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    bool unit_monomial = is_one(t.m);
    if (unit_monomial) {
      out += c.get_str();
    } else {
      if (c != 1) out += c.get_str() + "*";
      out += to_string(t.m);
    }
  }
  return out;
}

}  // namespace kz
