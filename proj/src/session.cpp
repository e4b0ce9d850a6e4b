#include "koszulator/session.hpp"

#include <cctype>
#include <set>

#include "koszulator/errors.hpp"
#include "koszulator/koszul.hpp"
#include "koszulator/module_algebra.hpp"

namespace kz {

namespace {

struct Statement {
  std::string text;
  std::vector<size_t> offsets;  // original offset of each character
};

std::pair<int, int> locate(const std::string& text, size_t off) {
  int line = 1, col = 1;
  for (size_t i = 0; i < off && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

// Splits into logical statements: a newline ends a statement unless brackets are open.
std::vector<Statement> split_statements(const std::string& text) {
  std::vector<Statement> out;
  Statement cur;
  int depth = 0;
  size_t opened_at = 0;
  auto flush = [&] {
    size_t a = 0, b = cur.text.size();
    while (a < b && std::isspace(static_cast<unsigned char>(cur.text[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(cur.text[b - 1]))) --b;
    if (a < b) {
      Statement s;
      s.text = cur.text.substr(a, b - a);
      s.offsets.assign(cur.offsets.begin() + a, cur.offsets.begin() + b);
      out.push_back(std::move(s));
    }
    cur = Statement{};
  };
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      if (i == text.size()) break;
      c = '\n';
    }
    if (c == '\n' && depth == 0) {
      flush();
      continue;
    }
    if (c == '(' || c == '[' || c == '{') {
      if (depth == 0) opened_at = i;
      ++depth;
    } else if (c == ')' || c == ']' || c == '}') {
      if (depth == 0) {
        auto [l, col] = locate(text, i);
        throw ParseError(std::string("unmatched '") + c + "'", l, col);
      }
      --depth;
    }
    cur.text.push_back(c);
    cur.offsets.push_back(i);
  }
  if (depth != 0) {
    auto [l, col] = locate(text, opened_at);
    throw ParseError("unclosed bracket", l, col);
  }
  flush();
  return out;
}

const std::set<std::string> kKeywords = {"ring", "seed", "budget", "ideal", "module", "complex", "map",
                                         "spec", "id", "zero", "fl", "shift", "sum", "koszul",
                                         "single", "cone", "quotient", "coker", "free", "residue", "support", "codim"};

class Parser {
 public:
  Parser(Session& s, const Statement& st, const std::string& full) : s_(s), st_(st), full_(full) {}

  void statement() {
    const std::string kw = ident("a declaration keyword");
    if (kw == "ring") return ring_decl();
    if (!s_.ring) fail("declare the ring before '" + kw + "'", 0);
    if (kw == "seed") {
      s_.seed = static_cast<std::uint64_t>(integer(false));
    } else if (kw == "budget") {
      size_t at = pos_;
      std::string which = ident("degree, steps or retries");
      long v = integer(false);
      if (v <= 0) fail("budget must be positive", at);
      if (which == "degree")
        s_.budget.max_degree = static_cast<int>(v);
      else if (which == "steps")
        s_.budget.max_steps = static_cast<int>(v);
      else if (which == "retries")
        s_.budget.max_retries = static_cast<int>(v);
      else
        fail("unknown budget '" + which + "'", at);
    } else if (kw == "ideal") {
      auto [name, at] = declare();
      size_t start = pos_;
      Ideal J = ideal_expr();
      if (s_.ring->is_graded() && !J.is_homogeneous()) invalid("ideal " + name + " is not homogeneous", start);
      s_.ideals.emplace(name, std::move(J));
    } else if (kw == "module") {
      auto [name, at] = declare();
      s_.modules.emplace(name, module_expr());
    } else if (kw == "complex") {
      auto [name, at] = declare();
      s_.complexes.emplace(name, complex_expr());
    } else if (kw == "map") {
      map_decl();
    } else if (kw == "spec") {
      auto [name, at] = declare();
      s_.specs.emplace(name, spec_expr());
    } else {
      fail("unknown declaration '" + kw + "'", 0);
    }
    end();
  }

  SerreSpec spec_only() {
    SerreSpec sp = spec_expr();
    end();
    return sp;
  }

  Ideal ideal_only() {
    Ideal J = ideal_expr();
    end();
    return J;
  }

 private:
  [[noreturn]] void fail(const std::string& msg, size_t at) const {
    auto [l, c] = where(at);
    throw ParseError(msg, l, c);
  }
  [[noreturn]] void fail(const std::string& msg) const { fail(msg, pos_); }
  [[noreturn]] void invalid(const std::string& msg, size_t at) const {
    auto [l, c] = where(at);
    throw ValidationError(msg, l, c);
  }
  std::pair<int, int> where(size_t at) const {
    if (st_.offsets.empty()) return {1, 1};
    if (at >= st_.offsets.size()) return locate(full_, st_.offsets.back() + 1);
    return locate(full_, st_.offsets[at]);
  }

  const std::string& t() const { return st_.text; }
  void skip() {
    while (pos_ < t().size() && std::isspace(static_cast<unsigned char>(t()[pos_]))) ++pos_;
  }
  bool peek(const std::string& tok) {
    skip();
    return t().compare(pos_, tok.size(), tok) == 0;
  }
  bool accept(const std::string& tok) {
    if (!peek(tok)) return false;
    pos_ += tok.size();
    return true;
  }
  void expect(const std::string& tok) {
    if (!accept(tok)) fail("expected '" + tok + "'");
  }
  void end() {
    skip();
    if (pos_ < t().size()) fail("unexpected trailing text");
  }
  bool at_ident() {
    skip();
    return pos_ < t().size() && (std::isalpha(static_cast<unsigned char>(t()[pos_])) || t()[pos_] == '_');
  }
  std::string ident(const std::string& what) {
    if (!at_ident()) fail("expected " + what);
    size_t a = pos_;
    while (pos_ < t().size() && (std::isalnum(static_cast<unsigned char>(t()[pos_])) || t()[pos_] == '_')) ++pos_;
    return t().substr(a, pos_ - a);
  }
  long integer(bool allow_sign = true) {
    skip();
    size_t a = pos_;
    if (allow_sign && pos_ < t().size() && (t()[pos_] == '-' || t()[pos_] == '+')) ++pos_;
    size_t digits = pos_;
    while (pos_ < t().size() && std::isdigit(static_cast<unsigned char>(t()[pos_]))) ++pos_;
    if (digits == pos_) fail("expected an integer", a);
    try {
      return std::stol(t().substr(a, pos_ - a));
    } catch (const std::out_of_range&) {
      fail("integer out of range", a);
    }
  }

  // Raw text up to a top-level character from stops.
  std::pair<std::string, size_t> raw_until(const std::string& stops) {
    skip();
    size_t a = pos_;
    int depth = 0;
    while (pos_ < t().size()) {
      char c = t()[pos_];
      if (depth == 0 && stops.find(c) != std::string::npos) break;
      if (c == '(' || c == '[' || c == '{') ++depth;
      if (c == ')' || c == ']' || c == '}') --depth;
      ++pos_;
    }
    return {t().substr(a, pos_ - a), a};
  }

  Polynomial poly(const std::string& raw, size_t at) {
    if (raw.find_first_not_of(" \t\n") == std::string::npos) fail("expected a polynomial", at);
    try {
      return s_.ring->reduce(parse_polynomial(s_.ring->base(), raw));
    } catch (const ParseError& e) {
      fail(e.detail(), at + static_cast<size_t>(e.column() - 1));
    }
  }

  std::vector<Polynomial> poly_list(char close) {
    std::vector<Polynomial> out;
    if (peek(std::string(1, close))) return out;
    do {
      auto [raw, at] = raw_until(std::string(",") + close);
      out.push_back(poly(raw, at));
    } while (accept(","));
    return out;
  }

  Matrix matrix() {
    size_t at = pos_;
    expect("[");
    std::vector<std::vector<Polynomial>> rows;
    if (!peek("]")) {
      do {
        expect("[");
        rows.push_back(poly_list(']'));
        expect("]");
      } while (accept(","));
    }
    expect("]");
    Matrix M(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(rows[i].size()) != M.cols) invalid("matrix rows have different lengths", at);
      for (int j = 0; j < M.cols; ++j) M.at(static_cast<int>(i), j) = rows[i][j];
    }
    return M;
  }

  std::optional<std::vector<int>> degree_list() {
    if (!accept("{")) return std::nullopt;
    std::vector<int> out;
    if (!peek("}")) {
      do out.push_back(static_cast<int>(integer()));
      while (accept(","));
    }
    expect("}");
    return out;
  }

  std::pair<std::string, size_t> declare() {
    skip();
    size_t at = pos_;
    std::string name = ident("a name");
    if (kKeywords.count(name)) fail("'" + name + "' is reserved", at);
    if (name == s_.ring_name || s_.ideals.count(name) || s_.modules.count(name) || s_.complexes.count(name) ||
        s_.maps.count(name) || s_.specs.count(name))
      invalid("name '" + name + "' is already declared", at);
    expect("=");
    return {name, at};
  }

  void ring_decl() {
    if (s_.ring) fail("only one ring may be declared", 0);
    skip();
    size_t at = pos_;
    s_.ring_name = ident("a ring name");
    if (kKeywords.count(s_.ring_name)) fail("'" + s_.ring_name + "' is reserved", at);
    expect("=");
    skip();
    size_t fat = pos_;
    std::string fname = ident("QQ or GF(p)");
    std::optional<Field> field;
    if (fname == "QQ") {
      field = Field::rationals();
    } else if (fname == "GF") {
      expect("(");
      long p = integer(false);
      expect(")");
      try {
        field = Field::prime(static_cast<std::uint64_t>(p));
      } catch (const Error& e) {
        invalid(e.what(), fat);
      }
    } else {
      fail("unknown field '" + fname + "'", fat);
    }
    expect("[");
    std::vector<std::string> vars;
    do vars.push_back(ident("a variable"));
    while (accept(","));
    expect("]");
    if (vars.size() > 10) invalid("at most 10 variables are supported", fat);
    if (std::set<std::string>(vars.begin(), vars.end()).size() != vars.size()) invalid("repeated variable", fat);
    auto base = std::make_shared<const PolyRing>(*field, vars);
    std::vector<Polynomial> rels;
    if (accept("/")) {
      expect("(");
      s_.ring = make_ring(base, {});
      rels = poly_list(')');
      expect(")");
    }
    s_.ring = make_ring(base, rels);
    end();
  }

  Ideal ideal_expr() {
    const PolyRingPtr& S = s_.ring->base_ptr();
    if (accept("(")) {
      auto gens = poly_list(')');
      expect(")");
      return Ideal(S, gens);
    }
    size_t at = pos_;
    std::string name = ident("an ideal");
    auto it = s_.ideals.find(name);
    if (it == s_.ideals.end()) invalid("unknown ideal '" + name + "'", at);
    return it->second;
  }

  FPModule checked(FPModule M, size_t at) {
    if (s_.ring->is_graded() && !M.is_graded()) invalid("module relations are not homogeneous", at);
    return M;
  }

  FPModule module_expr() {
    skip();
    size_t at = pos_;
    std::string kw = ident("a module expression");
    const RingPtr& R = s_.ring;
    if (kw == "quotient") {
      expect("(");
      std::vector<Polynomial> gens;
      size_t save = pos_;
      bool named = false;
      if (at_ident()) {
        std::string n = ident("an ideal");
        if (s_.ideals.count(n) && peek(")")) {
          gens = s_.ideals.at(n).generators();
          named = true;
        }
      }
      if (!named) {
        pos_ = save;
        gens = poly_list(')');
      }
      expect(")");
      auto deg = degree_list();
      if (deg && deg->size() != 1) invalid("a quotient has one generator degree", at);
      return checked(FPModule::cyclic(R, gens, deg ? (*deg)[0] : 0), at);
    }
    if (kw == "coker") {
      Matrix M = matrix();
      auto deg = degree_list();
      std::vector<int> d = deg ? *deg : std::vector<int>(M.rows, 0);
      if (static_cast<int>(d.size()) != M.rows) invalid("degree list does not match the number of rows", at);
      return checked(FPModule(R, d, mat::reduce(*R, M)), at);
    }
    if (kw == "free") {
      long n = integer(false);
      auto deg = degree_list();
      std::vector<int> d = deg ? *deg : std::vector<int>(static_cast<size_t>(n), 0);
      if (static_cast<long>(d.size()) != n) invalid("degree list does not match the rank", at);
      return FPModule::free(R, d);
    }
    if (kw == "residue") return residue_field(R);
    auto it = s_.modules.find(kw);
    if (it == s_.modules.end()) invalid("unknown module '" + kw + "'", at);
    return it->second;
  }

  struct TermSpec {
    enum class Kind { Free, Module, Zero } kind = Kind::Zero;
    int rank = 0;
    std::optional<std::vector<int>> degrees;
    FPModule module;
    size_t at = 0;
  };
  struct ArrowSpec {
    std::optional<Matrix> matrix;
    std::optional<Polynomial> scalar;
    size_t at = 0;
  };

  TermSpec term() {
    skip();
    TermSpec ts;
    ts.at = pos_;
    if (accept("0")) return ts;
    std::string n = ident("a term");
    if (n == s_.ring_name) {
      ts.kind = TermSpec::Kind::Free;
      ts.rank = 1;
      if (accept("^")) ts.rank = static_cast<int>(integer(false));
      ts.degrees = degree_list();
      if (ts.degrees && static_cast<int>(ts.degrees->size()) != ts.rank)
        invalid("degree list does not match the rank", ts.at);
      return ts;
    }
    auto it = s_.modules.find(n);
    if (it == s_.modules.end()) invalid("unknown term '" + n + "'", ts.at);
    ts.kind = TermSpec::Kind::Module;
    ts.module = it->second;
    return ts;
  }

  ArrowSpec arrow() {
    skip();
    ArrowSpec a;
    a.at = pos_;
    expect("-");
    if (accept("->")) return a;
    if (peek("(")) {
      auto [raw, at] = raw_until("-");
      a.scalar = poly(raw, at);
    } else if (peek("[")) {
      a.matrix = matrix();
    } else {
      fail("expected '(', '[' or '->' in an arrow");
    }
    expect("->");
    return a;
  }

  ComplexPtr chain_literal(size_t at) {
    const RingPtr& R = s_.ring;
    std::vector<TermSpec> terms{term()};
    std::vector<ArrowSpec> arrows;
    while (peek("-")) {
      arrows.push_back(arrow());
      terms.push_back(term());
    }
    expect("]");
    int bottom = 0;
    if (accept("@")) bottom = static_cast<int>(integer());

    const int count = static_cast<int>(terms.size());
    std::map<int, FPModule> mods;
    std::map<int, Matrix> diffs;
    auto resolve = [&](int i, const std::vector<int>* lower_degrees, const Matrix* d) -> FPModule {
      const TermSpec& ts = terms[static_cast<size_t>(i)];
      switch (ts.kind) {
        case TermSpec::Kind::Zero:
          return FPModule::zero(R);
        case TermSpec::Kind::Module:
          return ts.module;
        case TermSpec::Kind::Free:
          if (ts.degrees) return FPModule::free(R, *ts.degrees);
          if (d && lower_degrees) return FPModule::free(R, column_degrees(R->base(), *d, *lower_degrees));
          return FPModule::free(R, ts.rank);
      }
      return FPModule::zero(R);
    };
    auto rank_of = [&](int i) {
      const TermSpec& ts = terms[static_cast<size_t>(i)];
      return ts.kind == TermSpec::Kind::Free ? ts.rank : ts.kind == TermSpec::Kind::Module ? ts.module.rank() : 0;
    };
    FPModule lower = resolve(count - 1, nullptr, nullptr);
    mods.emplace(bottom, lower);
    for (int i = count - 2; i >= 0; --i) {
      const int n = bottom + (count - 1 - i);
      const ArrowSpec& a = arrows[static_cast<size_t>(i)];
      const int up = rank_of(i), low = lower.rank();
      Matrix d(low, up);
      if (a.scalar) {
        if (up != 1 || low != 1) invalid("a scalar arrow needs rank-one terms on both sides", a.at);
        d.at(0, 0) = *a.scalar;
      } else if (a.matrix) {
        if (a.matrix->rows != low || a.matrix->cols != up)
          invalid("differential into degree " + std::to_string(n - 1) + " should be " + std::to_string(low) + "x" +
                      std::to_string(up),
                  a.at);
        d = mat::reduce(*R, *a.matrix);
      }
      FPModule upper = resolve(i, &lower.degrees(), &d);
      mods.emplace(n, upper);
      if (up > 0 && low > 0) diffs.emplace(n, d);
      lower = upper;
    }
    Complex C(R, std::move(mods), std::move(diffs));
    return finish(std::move(C), at);
  }

  ComplexPtr finish(Complex C, size_t at) {
    try {
      C.validate();
    } catch (const InvariantViolation& e) {
      invalid(e.what(), at);
    }
    if (s_.ring->is_graded() && !C.is_graded()) invalid("complex is not homogeneous", at);
    return make_complex(std::move(C));
  }

  ComplexPtr complex_expr() {
    skip();
    size_t at = pos_;
    if (accept("[")) return chain_literal(at);
    std::string kw = ident("a complex expression");
    if (kw == "shift") {
      expect("(");
      ComplexPtr X = complex_expr();
      expect(",");
      int s = static_cast<int>(integer());
      expect(")");
      return make_complex(shift(*X, s));
    }
    if (kw == "sum") {
      expect("(");
      ComplexPtr A = complex_expr();
      expect(",");
      ComplexPtr B = complex_expr();
      expect(")");
      return make_complex(direct_sum(*A, *B));
    }
    if (kw == "koszul") {
      expect("(");
      auto fs = poly_list(')');
      expect(")");
      int m = 0;
      if (accept("@")) m = static_cast<int>(integer());
      for (const auto& f : fs)
        if (s_.ring->is_graded() && !s_.ring->base().is_homogeneous(f)) invalid("Koszul entries must be homogeneous", at);
      return koszul_complex(s_.ring, fs, FPModule::free(s_.ring, 1), m);
    }
    if (kw == "single") {
      expect("(");
      FPModule M = module_expr();
      expect(",");
      int n = static_cast<int>(integer());
      expect(")");
      return make_complex(Complex::single(M, n));
    }
    if (kw == "cone") {
      expect("(");
      size_t mat_at = pos_;
      std::string g = ident("a map");
      auto it = s_.maps.find(g);
      if (it == s_.maps.end()) invalid("unknown map '" + g + "'", mat_at);
      expect(")");
      return cone(it->second).complex;
    }
    auto it = s_.complexes.find(kw);
    if (it == s_.complexes.end()) invalid("unknown complex '" + kw + "'", at);
    return it->second;
  }

  ComplexPtr complex_name() {
    skip();
    size_t at = pos_;
    std::string n = ident("a complex");
    auto it = s_.complexes.find(n);
    if (it == s_.complexes.end()) invalid("unknown complex '" + n + "'", at);
    return it->second;
  }

  void map_decl() {
    skip();
    size_t at = pos_;
    std::string name = ident("a map name");
    if (kKeywords.count(name)) fail("'" + name + "' is reserved", at);
    if (name == s_.ring_name || s_.ideals.count(name) || s_.modules.count(name) || s_.complexes.count(name) ||
        s_.maps.count(name) || s_.specs.count(name))
      invalid("name '" + name + "' is already declared", at);
    expect(":");
    ComplexPtr X = complex_name();
    expect("->");
    ComplexPtr Y = complex_name();
    expect("=");
    skip();
    size_t body = pos_;
    ChainMap f{X, Y, {}};
    if (accept("id")) {
      if (X != Y && !(*X == *Y)) invalid("id needs equal source and target", body);
      f = retarget(identity_map(X), X, Y);
    } else if (accept("zero")) {
      f = zero_map(X, Y);
    } else {
      expect("{");
      if (!peek("}")) {
        do {
          size_t cat = pos_;
          int n = static_cast<int>(integer());
          expect(":");
          Matrix M = matrix();
          if (M.rows != Y->rank(n) || M.cols != X->rank(n))
            invalid("component " + std::to_string(n) + " should be " + std::to_string(Y->rank(n)) + "x" +
                        std::to_string(X->rank(n)),
                    cat);
          if (f.comps.count(n)) invalid("component " + std::to_string(n) + " given twice", cat);
          f.comps[n] = mat::reduce(*s_.ring, M);
        } while (accept(","));
      }
      expect("}");
    }
    if (auto bad = f.first_failure()) invalid("map is not a chain map in degree " + std::to_string(*bad), body);
    if (!f.is_chain_map()) invalid("map does not respect the relations of its terms", body);
    s_.maps.emplace(name, std::move(f));
  }

  SerreSpec spec_atom() {
    skip();
    size_t at = pos_;
    std::string kw = ident("a Serre subcategory");
    if (kw == "fl") return SerreSpec::finite_length();
    if (kw == "support") {
      expect("(");
      Ideal J = ideal_expr();
      expect(")");
      return SerreSpec::support_in(J);
    }
    if (kw == "codim") {
      expect(">=");
      return SerreSpec::codim_at_least(static_cast<int>(integer(false)));
    }
    auto it = s_.specs.find(kw);
    if (it == s_.specs.end()) invalid("unknown spec '" + kw + "'", at);
    return it->second;
  }

  SerreSpec spec_expr() {
    std::vector<SerreSpec> parts{spec_atom()};
    while (accept("&")) parts.push_back(spec_atom());
    if (parts.size() == 1) return parts[0];
    return SerreSpec::intersection(std::move(parts));
  }

  Session& s_;
  const Statement& st_;
  const std::string& full_;
  size_t pos_ = 0;
};

Statement literal(const std::string& text) {
  Statement st;
  st.text = text;
  for (size_t i = 0; i < text.size(); ++i) st.offsets.push_back(i);
  return st;
}

}  // namespace

Session parse_session(const std::string& text) {
  Session s;
  s.text = text;
  for (const auto& st : split_statements(text)) Parser(s, st, text).statement();
  if (!s.ring) throw ParseError("no ring declared", 1, 1);
  return s;
}

SerreSpec Session::resolve_spec(const std::string& text) const {
  Statement st = literal(text);
  Session& self = const_cast<Session&>(*this);
  return Parser(self, st, text).spec_only();
}

Ideal Session::resolve_ideal(const std::string& text) const {
  Statement st = literal(text);
  Session& self = const_cast<Session&>(*this);
  return Parser(self, st, text).ideal_only();
}

}  // namespace kz
