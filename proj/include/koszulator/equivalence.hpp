#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "koszulator/complex_engine.hpp"
#include "koszulator/koszul.hpp"
#include "koszulator/serre.hpp"

namespace kz {

struct HomologyRow {
  int degree = 0;
  std::optional<long> length;
  std::vector<Polynomial> annihilator;  // generators modulo the ring relations
};

/// Ranks, homology table and Euler characteristic of one certificate node.
struct NodeSummary {
  int min_c = 0;
  int max_c = -1;
  std::vector<int> ranks;  // degrees min_c..max_c
  bool free = true;
  std::vector<HomologyRow> homology;  // nonzero homology only
  std::optional<long> euler;          // unset when some homology has infinite length
};
NodeSummary summarize_node(const Complex& X);

struct ArrowCheck {
  bool chain_map = false;
  bool quasi_isomorphism = false;
  std::string diagnostic;
};
/// Independent re-verification of every arrow of a zigzag.
std::vector<ArrowCheck> verify_zigzag(const Zigzag& z);

struct ReductionLevel {
  int m = 0;
  int width = 0;
  std::vector<Polynomial> regular_sequence;
  bool closed_form = true;
  int cone_width = 0;
  bool cone_acyclic = false;
};

struct Reduction {
  ComplexPtr ptilde;
  Zigzag certificate;  // from the input to ptilde
  std::vector<ReductionLevel> levels;  // outermost first
  bool widths_decrease = true;
  bool terms_in_spec = true;
  bool terms_finite_pd = true;
};

/// Bounded free complex with homology in spec -> quasi-isomorphic complex of modules in spec
/// (of finite projective dimension unless check_pd is off). Rejects rings that are not Cohen-Macaulay.
Reduction reduce_object(const ComplexPtr& P, const SerreSpec& spec, std::uint64_t seed, bool check_pd = true);

struct Realization {
  ComplexPtr complex;  // bounded free
  Zigzag certificate;  // from the module complex to the free one
};
/// Every term must have finite projective dimension.
Realization realize_in_projectives(const ComplexPtr& X);

struct RoundtripReport {
  Reduction reduction;
  Realization realization;
  Zigzag certificate;  // input -> ptilde -> free realization
  std::vector<ArrowCheck> arrows;
  std::vector<NodeSummary> nodes;
  bool arrows_verified = false;
  bool homology_matches = false;  // (length, annihilator) per degree, input vs realization
  bool euler_constant = false;
  long euler = 0;
  bool verified() const {
    return arrows_verified && homology_matches && euler_constant && reduction.widths_decrease &&
           reduction.terms_in_spec && reduction.terms_finite_pd;
  }
};
RoundtripReport roundtrip_verify(const ComplexPtr& P, const SerreSpec& spec, std::uint64_t seed);

struct TransportStep {
  MorphismCover cover;
  Cone cone_x;  // cone of betaX
  Cone cone_y;  // cone of betaY
  int width = 0;  // wid(X ⊕ Y)
  ComplexStats cones;       // C^X ⊕ C^Y
  ComplexStats cone_x_sum;  // C^X ⊕ Y
  bool vacuous = false;     // width 0
  bool strict_decrease = false;
  bool bounded_increase = false;
  bool min_bound = false;   // also true when min X >= min Y
  std::optional<bool> null_homotopic;  // set when min(X) > max(Y)
  bool verified() const {
    return cover.verified() && strict_decrease && bounded_increase && min_bound && null_homotopic.value_or(true);
  }
};
/// One induction step for g: X -> Y between module complexes with terms in spec of finite pd.
TransportStep transport_morphism_step(const ChainMap& g, const SerreSpec& spec, std::uint64_t seed);

}  // namespace kz
