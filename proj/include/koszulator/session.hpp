#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "koszulator/budget.hpp"
#include "koszulator/complex.hpp"
#include "koszulator/serre.hpp"

namespace kz {

/// Parsed session file: one ring plus named objects over it.
///
///   ring R = QQ[x,y] / (x*y)          # or GF(101)[x,y], relations optional
///   seed 7
///   budget degree 40                  # degree | steps | retries
///   ideal J = (x, y)
///   module M = quotient(x - y)        # quotient(J) | coker [[..]] {degrees} | free 2 {0,1} | residue
///   complex P = [R -(x-y)-> R]        # highest degree on the left; "@ m" places the right end
///   complex Q = sum(P, shift(P, 2))   # also koszul(f, ..) @ m, single(M, n), cone(g)
///   map g : P -> P = id               # zero | {0: [[1]], 1: [[1]]}
///   spec L = fl & codim>=1            # fl | support(J) | codim>=c, joined by &
struct Session {
  std::string text;
  std::string ring_name;
  RingPtr ring;
  std::uint64_t seed = 0;
  Budget budget;
  std::map<std::string, Ideal> ideals;
  std::map<std::string, FPModule> modules;
  std::map<std::string, ComplexPtr> complexes;
  std::map<std::string, ChainMap> maps;
  std::map<std::string, SerreSpec> specs;

  /// A declared spec name or a spec literal.
  SerreSpec resolve_spec(const std::string& text) const;
  /// A declared ideal name or an ideal literal such as "(x, y)".
  Ideal resolve_ideal(const std::string& text) const;
};

/// Throws ParseError on syntax errors and ValidationError on ill-formed objects, both with line and column.
Session parse_session(const std::string& text);

}  // namespace kz
