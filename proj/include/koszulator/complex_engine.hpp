#pragma once

#include <optional>
#include <string>
#include <vector>

#include "koszulator/complex.hpp"

namespace kz {

/// Block-structured linear system over R: unknown blocks, equation blocks,
/// and per-equation relation columns that are allowed to absorb residues.
class BlockSystem {
 public:
  explicit BlockSystem(RingPtr ring) : ring_(std::move(ring)) {}

  int add_unknown(std::vector<int> degrees);
  int add_equation(std::vector<int> degrees);
  /// Adds coeff (equation size x unknown size) to the (eq, var) block.
  void add_term(int eq, int var, const Matrix& coeff);
  void add_relations(int eq, const Matrix& rel);

  int unknown_size() const;
  int equation_size() const;
  int unknown_offset(int var) const;
  int equation_offset(int eq) const;
  int equation_of_row(int row) const;

  Matrix matrix() const;
  Matrix relation_matrix() const;
  std::vector<int> unknown_degrees() const;
  std::vector<int> equation_degrees() const;

  /// Right-hand side column from per-equation vectors (missing blocks are zero).
  Matrix rhs(const std::map<int, Matrix>& parts) const;
  Matrix unknown_block(const Matrix& solution, int var) const;

 private:
  RingPtr ring_;
  std::vector<std::vector<int>> unknowns_;
  std::vector<std::vector<int>> equations_;
  std::map<std::pair<int, int>, Matrix> terms_;
  std::map<int, std::vector<Matrix>> relations_;
};

/// vec of a b x a matrix, column-major, and its inverse.
Matrix vec(const Matrix& A);
Matrix unvec(const Matrix& v, int rows, int cols, int offset = 0);
/// Degrees of the entries of Hom(source, target) in vec order.
std::vector<int> hom_degrees(const FPModule& source, const FPModule& target);

/// Map on homology in degree n with its inverse witness when it is an isomorphism.
struct HomologyComparison {
  int degree = 0;
  Subquotient source;
  Subquotient target;
  ModuleMorphism map;
  bool injective = false;
  bool surjective = false;
  std::optional<Matrix> inverse;  // target.rank x ... matrix of the inverse morphism
  bool inverse_verified = false;
};
HomologyComparison induced_homology_map(const ChainMap& f, int n);

struct QisReport {
  bool chain_map = false;
  bool quasi_isomorphism = false;
  std::vector<HomologyComparison> degrees;
  std::string diagnostic;
};
QisReport is_quasi_isomorphism(const ChainMap& f);

/// Replaces X_m by its cycles and drops lower terms; incl: X' -> X.
struct Truncation {
  ComplexPtr complex;
  ChainMap inclusion;
};
Truncation smart_truncate(const ComplexPtr& X, int m);

/// q: U -> X quasi-isomorphism with U_i free for i < t (all i when t is unset).
struct FreeReplacement {
  ComplexPtr complex;
  ChainMap map;
};
FreeReplacement free_replacement(const ComplexPtr& X, std::optional<int> t = std::nullopt);

/// Alternating chain of complexes joined by quasi-isomorphisms.
struct ZigzagArrow {
  ChainMap map;
  bool forward = true;  // nodes[i] -> nodes[i+1] when true, nodes[i+1] -> nodes[i] otherwise
  std::string label;
};
struct Zigzag {
  std::vector<ComplexPtr> nodes;
  std::vector<ZigzagArrow> arrows;

  static Zigzag trivial(const ComplexPtr& X) { return Zigzag{{X}, {}}; }
  const ComplexPtr& source() const { return nodes.front(); }
  const ComplexPtr& target() const { return nodes.back(); }
  void push(const ChainMap& map, bool forward, const std::string& label);
  /// Concatenation; other must start at this zigzag's target (same pointer or equal complex).
  void append(const Zigzag& other);
};

/// X with homology only in degree m, replaced by T^m H_m(X).
struct Collapse {
  ComplexPtr module_complex;
  Zigzag certificate;
};
Collapse collapse_to_module(const ComplexPtr& X);

/// Chain maps X -> Y modulo null-homotopic ones, for X free.
struct HomotopyClasses {
  Subquotient classes;
  ComplexPtr source;
  ComplexPtr target;
  std::vector<int> blocks;  // degrees n with a block Hom(X_n, Y_n), in vec order
  Matrix cycles;            // generators of the chain maps, in vec coordinates
  Matrix boundaries;        // null-homotopic maps plus relations, in vec coordinates
  std::vector<int> degrees; // vec coordinate degrees

  /// The chain map represented by column j of a matrix in the ambient vec space.
  ChainMap chain_map(const Matrix& v, int j = 0) const;
  /// vec coordinates of a chain map.
  Matrix coordinates(const ChainMap& f) const;
  /// Coefficients of chain maps (vec columns) on the class generators; nullopt if not all are chain maps.
  std::optional<Matrix> class_of(const Matrix& v) const;
};
HomotopyClasses homotopy_classes(const ComplexPtr& X, const ComplexPtr& Y);

/// h with d h + h d = f; source must be free.
struct NullHomotopyResult {
  std::optional<Homotopy> homotopy;
  std::optional<int> obstructed_degree;
};
NullHomotopyResult null_homotopy(const ChainMap& f);

/// f~: X -> A with v∘f~ - f = d h + h d, for X free and v: A -> B a quasi-isomorphism.
struct QisLift {
  ChainMap map;
  Homotopy homotopy;
};
std::optional<QisLift> lift_along_qis(const ChainMap& v, const ChainMap& f);

/// Chain map X -> Y equal to fm in degree m and zero below m; X free. Solved jointly over all degrees above m.
std::optional<ChainMap> extend_chain_map(const ComplexPtr& X, const ComplexPtr& Y, int m, const Matrix& fm);

}  // namespace kz
