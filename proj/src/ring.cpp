#include "koszulator/ring.hpp"

#include <algorithm>
#include <cctype>

#include "koszulator/errors.hpp"

namespace kz {

// ---------------------------------------------------------------- Ideal

Ideal::Ideal(PolyRingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), generators_(std::move(generators)), cache_(std::make_shared<Cache>()) {
  generators_.erase(std::remove_if(generators_.begin(), generators_.end(), [](const Polynomial& p) { return p.is_zero(); }),
                    generators_.end());
}

void Ideal::ensure() const {
  std::call_once(cache_->once, [this] {
    auto gb = std::make_unique<GroebnerBasis>(*ring_);
    for (const auto& g : generators_) gb->add(ring_->embed(g, 0));
    gb->complete();
    std::vector<Vec> red = gb->reduced();
    for (const auto& v : red) cache_->basis.push_back(ring_->component(v, 0));
    cache_->engine = std::make_unique<GroebnerBasis>(GroebnerBasis::trusted(*ring_, red));
  });
}

const std::vector<Polynomial>& Ideal::groebner() const {
  ensure();
  return cache_->basis;
}

const GroebnerBasis& Ideal::engine() const {
  ensure();
  return *cache_->engine;
}

Polynomial Ideal::normal_form(const Polynomial& f) const {
  if (f.is_zero()) return f;
  if (generators_.empty()) return f;
  return ring_->component(engine().normal_form(ring_->embed(f, 0)), 0);
}

bool Ideal::contains(const Ideal& other) const {
  for (const auto& g : other.generators())
    if (!contains(g)) return false;
  return true;
}

bool Ideal::is_unit() const {
  const auto& gb = groebner();
  return gb.size() == 1 && ring_->is_constant(gb[0]);
}

bool Ideal::is_homogeneous() const {
  for (const auto& g : generators_)
    if (!ring_->is_homogeneous(g)) return false;
  return true;
}

bool Ideal::operator==(const Ideal& other) const {
  if (*ring_ != *other.ring_) return false;
  return groebner() == other.groebner();
}

std::string Ideal::to_string() const {
  std::string s = "(";
  for (size_t i = 0; i < generators_.size(); ++i) {
    if (i) s += ", ";
    s += ring_->to_string(generators_[i]);
  }
  return s + ")";
}

// --------------------------------------------------------- QuotientRing

QuotientRing::QuotientRing(PolyRingPtr base, std::vector<Polynomial> relations)
    : base_(std::move(base)), ideal_(base_, std::move(relations)) {
  graded_ = ideal_.is_homogeneous();
  ideal_.groebner();
}

bool QuotientRing::same_as(const QuotientRing& o) const {
  if (this == &o) return true;
  return *base_ == *o.base_ && ideal_ == o.ideal_;
}

std::string QuotientRing::to_string() const {
  std::string s = base_->field().name() + "[";
  for (int i = 0; i < base_->nvars(); ++i) {
    if (i) s += ",";
    s += base_->names()[i];
  }
  s += "]";
  if (!ideal_.generators().empty()) s += "/" + ideal_.to_string();
  return s;
}

RingPtr make_ring(PolyRingPtr base, std::vector<Polynomial> relations) {
  return std::make_shared<const QuotientRing>(std::move(base), std::move(relations));
}

RingPtr make_ring(const Field& field, std::vector<std::string> vars, std::vector<std::string> relations) {
  auto base = std::make_shared<const PolyRing>(field, std::move(vars));
  std::vector<Polynomial> rels;
  for (const auto& r : relations) rels.push_back(parse_polynomial(*base, r));
  return make_ring(base, std::move(rels));
}

RingElement RingElement::of(RingPtr ring, const Polynomial& f) {
  Polynomial v = ring->reduce(f);
  return RingElement{std::move(ring), std::move(v)};
}

// ------------------------------------------------------- ideal algebra

ColonResult colon_ideal(const Ideal& I, const Polynomial& f) {
  const PolyRing& S = I.ring();
  if (f.is_zero()) return {Ideal(I.ring_ptr(), {S.constant(1)}), true};
  // Syzygies of [f | I]: track the coefficient of f in component 1.
  GroebnerBasis gb(S, {0, S.degree(f)});
  Vec fv = S.vadd(S.embed(f, 0), S.embed(S.constant(1), 1));
  gb.add(fv);
  for (const auto& g : I.groebner()) gb.add(S.embed(g, 0));
  gb.complete();
  std::vector<Polynomial> gens;
  for (const auto& v : gb.reduced())
    if (v.lead().comp == 1) gens.push_back(S.component(v, 1));
  return {Ideal(I.ring_ptr(), std::move(gens)), false};
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  const PolyRing& S = a.ring();
  GroebnerBasis gb(S, {0, 0, 0});
  Vec one = S.vadd(S.vadd(S.embed(S.constant(1), 0), S.embed(S.constant(1), 1)), S.embed(S.constant(1), 2));
  gb.add(one);
  for (const auto& g : a.groebner()) gb.add(S.embed(g, 0));
  for (const auto& g : b.groebner()) gb.add(S.embed(g, 1));
  gb.complete();
  std::vector<Polynomial> gens;
  for (const auto& v : gb.reduced())
    if (v.lead().comp == 2) gens.push_back(S.component(v, 2));
  return Ideal(a.ring_ptr(), std::move(gens));
}

Ideal sum(const Ideal& a, const Ideal& b) {
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring_ptr(), std::move(gens));
}

Ideal product(const Ideal& a, const Ideal& b) {
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) gens.push_back(a.ring().mul(f, g));
  return Ideal(a.ring_ptr(), std::move(gens));
}

std::optional<int> monomial_dimension(int nvars, const std::vector<Monomial>& generators) {
  for (const auto& m : generators)
    if (is_one(m)) return std::nullopt;
  int best = 0;
  for (unsigned mask = 0; mask < (1u << nvars); ++mask) {
    int size = __builtin_popcount(mask);
    if (size <= best) continue;
    // U = mask is independent if no generator is supported inside U.
    bool independent = true;
    for (const auto& m : generators) {
      bool inside = true;
      for (int i = 0; i < nvars; ++i)
        if (m.exp[i] != 0 && !(mask & (1u << i))) inside = false;
      if (inside) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}

std::optional<int> krull_dimension(const Ideal& I) {
  std::vector<Monomial> leads;
  for (const auto& g : I.groebner()) leads.push_back(g.lead().m);
  return monomial_dimension(I.ring().nvars(), leads);
}

std::vector<Polynomial> generators_modulo(const Ideal& J, const Ideal& I) {
  const PolyRing& S = J.ring();
  std::vector<Polynomial> cand;
  for (const auto& g : J.groebner()) {
    Polynomial r = I.normal_form(g);
    if (!r.is_zero()) cand.push_back(S.monic(r));
  }
  std::stable_sort(cand.begin(), cand.end(), [&](const Polynomial& a, const Polynomial& b) {
    int da = S.degree(a), db = S.degree(b);
    if (da != db) return da < db;
    return grevlex_compare(a.lead().m, b.lead().m) < 0;
  });
  std::vector<Polynomial> kept;
  std::vector<Polynomial> acc = I.generators();
  for (const auto& g : cand) {
    if (Ideal(J.ring_ptr(), acc).contains(g)) continue;
    kept.push_back(g);
    acc.push_back(g);
  }
  return kept;
}

RegularityVerdict is_regular_element(const Polynomial& f, const Ideal& I) {
  if (I.contains(f)) return {false, "element is zero in the quotient"};
  ColonResult c = colon_ideal(I, f);
  if (!I.contains(c.ideal)) {
    for (const auto& g : c.ideal.generators())
      if (!I.contains(g)) return {false, "annihilated by " + I.ring().to_string(g)};
  }
  return {true, ""};
}

// ---------------------------------------------------- polynomial parser

namespace {

class PolyParser {
 public:
  PolyParser(const PolyRing& ring, const std::string& text) : ring_(ring), s_(text) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, 1, static_cast<int>(pos_) + 1); }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  Polynomial expr() {
    Polynomial acc;
    bool negate = false;
    if (peek('+')) ++pos_;
    else if (peek('-')) {
      ++pos_;
      negate = true;
    }
    Polynomial t = term();
    acc = negate ? ring_.neg(t) : t;
    while (true) {
      if (peek('+')) {
        ++pos_;
        acc = ring_.add(acc, term());
      } else if (peek('-')) {
        ++pos_;
        acc = ring_.sub(acc, term());
      } else {
        break;
      }
    }
    return acc;
  }

  bool starts_factor() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '_';
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (true) {
      if (peek('*')) {
        ++pos_;
        acc = ring_.mul(acc, factor());
      } else if (starts_factor()) {
        acc = ring_.mul(acc, factor());
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (peek('^')) {
      ++pos_;
      skip();
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = ring_.pow(base, std::stoi(s_.substr(start, pos_ - start)));
    }
    return base;
  }

  Polynomial primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of polynomial");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      mpz_class num(s_.substr(start, pos_ - start));
      mpz_class den(1);
      if (pos_ + 1 < s_.size() && s_[pos_] == '/' && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
        ++pos_;
        size_t ds = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        den = mpz_class(s_.substr(ds, pos_ - ds));
        if (den == 0) fail("zero denominator");
      }
      Coeff q(num, den);
      q.canonicalize();
      return ring_.constant(q);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      return identifier(s_.substr(start, pos_ - start), start);
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  // An identifier is a variable name or a juxtaposition of variable names.
  Polynomial identifier(const std::string& id, size_t start) {
    const auto& names = ring_.names();
    Polynomial acc = ring_.constant(1);
    size_t i = 0;
    while (i < id.size()) {
      int best = -1;
      size_t best_len = 0;
      for (size_t v = 0; v < names.size(); ++v) {
        const auto& n = names[v];
        if (n.size() > best_len && id.compare(i, n.size(), n) == 0) {
          best = static_cast<int>(v);
          best_len = n.size();
        }
      }
      if (best < 0) {
        // trailing digits are a coefficient written after a variable, e.g. "x2" is rejected
        pos_ = start + i;
        fail("unknown variable in '" + id + "'");
      }
      acc = ring_.mul(acc, ring_.variable(best));
      i += best_len;
    }
    return acc;
  }

  const PolyRing& ring_;
  std::string s_;
  size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const PolyRing& ring, const std::string& text) { return PolyParser(ring, text).parse(); }

}  // namespace kz
