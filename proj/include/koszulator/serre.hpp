#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "koszulator/module.hpp"

namespace kz {

/// A Serre subcategory of finitely generated modules.
struct SerreSpec {
  enum class Kind { FiniteLength, SupportIn, CodimAtLeast, Intersection };

  Kind kind = Kind::FiniteLength;
  Ideal support;                // SupportIn
  int codim = 0;                // CodimAtLeast
  std::vector<SerreSpec> parts; // Intersection

  static SerreSpec finite_length() { return {}; }
  static SerreSpec support_in(Ideal J);
  static SerreSpec codim_at_least(int c);
  static SerreSpec intersection(std::vector<SerreSpec> parts);

  std::string to_string() const;
};

bool serre_member(const FPModule& M, const SerreSpec& spec);

/// Regular sequence f_1..f_c in J with R/(f) in the class described by spec.
struct RegularSequence {
  std::vector<Polynomial> elements;
  int attempts = 0;
};

/// Randomized homogeneous search; SearchFailed once the retry budget runs out.
RegularSequence find_regular_sequence(const RingPtr& ring, const Ideal& J, const SerreSpec& spec,
                                      std::uint64_t seed);

struct CohenMacaulayReport {
  bool cohen_macaulay = false;
  int depth = 0;
  int dimension = 0;
};
CohenMacaulayReport is_cohen_macaulay(const RingPtr& ring);

struct DichotomyEntry {
  std::optional<long> length;                // nullopt: not finite length
  std::optional<int> projective_dimension;  // nullopt: infinite
  int depth = -1;                           // -1 for the zero module
  int syzygy_rank = 0;  // rank of the resolution term just past depth R
  std::string verdict;  // "witness", "infinite-pd", "not-finite-length", "zero", "finite-pd"
  bool consistent = true;  // finite pd obeys pd + depth M = depth R; no finite-length witness off the CM branch
};

struct DichotomyReport {
  CohenMacaulayReport ring;
  std::string branch;  // "cohen-macaulay" or "not-cohen-macaulay"
  std::vector<DichotomyEntry> modules;
  bool witness_found = false;
  bool verified = true;
};
DichotomyReport cm_dichotomy_report(const RingPtr& ring, const std::vector<FPModule>& corpus);

}  // namespace kz
