#include "koszulator/commands.hpp"

#include <openssl/evp.h>

#include <functional>
#include <iomanip>
#include <map>
#include <sstream>

#include "json.hpp"

#include "koszulator/budget.hpp"
#include "koszulator/equivalence.hpp"
#include "koszulator/errors.hpp"
#include "koszulator/invariants.hpp"
#include "koszulator/koszul.hpp"
#include "koszulator/module_algebra.hpp"

namespace kz {

using json = nlohmann::json;

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return out.str();
}

namespace {

// ------------------------------------------------------------ serializers

json poly_list_json(const QuotientRing& R, const std::vector<Polynomial>& fs) {
  json a = json::array();
  for (const auto& f : fs) a.push_back(R.to_string(f));
  return a;
}

json matrix_json(const QuotientRing& R, const Matrix& M) {
  return {{"shape", {M.rows, M.cols}}, {"entries", mat::to_strings(R.base(), M)}};
}

json module_json(const FPModule& M) {
  return {{"degrees", M.degrees()}, {"relations", matrix_json(M.R(), M.relations())}};
}

json complex_json(const Complex& X) {
  json terms = json::array(), diffs = json::array();
  for (const auto& [n, T] : X.terms()) {
    terms.push_back({{"degree", n}, {"module", module_json(T)}});
    if (X.rank(n - 1) > 0) diffs.push_back({{"degree", n}, {"matrix", matrix_json(X.R(), X.d(n))}});
  }
  return {{"terms", terms}, {"differentials", diffs}};
}

json components_json(const QuotientRing& R, const std::map<int, Matrix>& comps) {
  json a = json::array();
  for (const auto& [n, M] : comps)
    if (!M.is_zero()) a.push_back({{"degree", n}, {"matrix", matrix_json(R, M)}});
  return a;
}

json length_json(const std::optional<long>& len) { return len ? json(*len) : json("infinite"); }

json node_json(const Complex& X) {
  NodeSummary s = summarize_node(X);
  json hom = json::array();
  for (const auto& h : s.homology)
    hom.push_back({{"degree", h.degree}, {"length", length_json(h.length)}, {"annihilator", poly_list_json(X.R(), h.annihilator)}});
  json node = {{"min_c", s.min_c}, {"max_c", s.max_c}, {"ranks", s.ranks}, {"free", s.free},
               {"homology", hom},  {"complex", complex_json(X)}};
  node["euler_characteristic"] = s.euler ? json(*s.euler) : json("undefined");
  return node;
}

json zigzag_json(const Zigzag& z, const std::vector<ArrowCheck>& checks) {
  json nodes = json::array(), arrows = json::array();
  for (const auto& n : z.nodes) nodes.push_back(node_json(*n));
  for (size_t i = 0; i < z.arrows.size(); ++i) {
    const auto& a = z.arrows[i];
    arrows.push_back({{"from", a.forward ? i : i + 1},
                      {"to", a.forward ? i + 1 : i},
                      {"direction", a.forward ? "forward" : "backward"},
                      {"label", a.label},
                      {"components", components_json(a.map.src->R(), a.map.comps)},
                      {"chain_map", checks[i].chain_map},
                      {"quasi_isomorphism", checks[i].quasi_isomorphism},
                      {"diagnostic", checks[i].diagnostic}});
  }
  return {{"nodes", nodes}, {"arrows", arrows}};
}

json stats_json(const ComplexStats& s) {
  json supph = json::array();
  for (int n : s.supph) supph.push_back(n);
  json j = {{"acyclic", s.acyclic}, {"supph", supph}};
  if (!s.acyclic) {
    j["min"] = s.min;
    j["max"] = s.max;
    j["width"] = s.wid;
  }
  return j;
}

// --------------------------------------------------------------- commands

struct Ctx {
  const Session& s;
  const std::vector<std::string>& args;
  json outputs = json::object();
  json verdicts = json::object();
  std::vector<std::string> lines;

  const QuotientRing& R() const { return *s.ring; }
  const std::string& arg(size_t i, const std::string& what) const {
    if (i >= args.size()) throw ArgumentError("missing argument: " + what);
    return args[i];
  }
  ComplexPtr complex(size_t i) const {
    const std::string& n = arg(i, "complex");
    auto it = s.complexes.find(n);
    if (it == s.complexes.end()) throw ArgumentError("unknown complex '" + n + "'");
    return it->second;
  }
  FPModule module(size_t i) const {
    const std::string& n = arg(i, "module");
    auto it = s.modules.find(n);
    if (it == s.modules.end()) throw ArgumentError("unknown module '" + n + "'");
    return it->second;
  }
  SerreSpec spec(size_t i) const {
    if (i >= args.size()) return SerreSpec::finite_length();
    try {
      return s.resolve_spec(args[i]);
    } catch (const ParseError& e) {
      throw ArgumentError("bad spec '" + args[i] + "': " + e.detail());
    }
  }
  Ideal ideal(size_t i) const {
    const std::string& a = arg(i, "ideal");
    try {
      return s.resolve_ideal(a);
    } catch (const ParseError& e) {
      throw ArgumentError("bad ideal '" + a + "': " + e.detail());
    }
  }
  void verdict(const std::string& name, bool v) { verdicts[name] = v; }
  void line(const std::string& l) { lines.push_back(l); }
};

std::string join(const QuotientRing& R, const std::vector<Polynomial>& fs) {
  std::string out;
  for (size_t i = 0; i < fs.size(); ++i) out += (i ? ", " : "") + R.to_string(fs[i]);
  return out;
}

void cmd_gb(Ctx& c) {
  Ideal J = c.ideal(0);
  Ideal JI = sum(J, c.R().defining_ideal());
  c.outputs["generators"] = poly_list_json(c.R(), J.generators());
  c.outputs["groebner_basis"] = poly_list_json(c.R(), J.groebner());
  c.outputs["groebner_basis_with_ring_relations"] = poly_list_json(c.R(), JI.groebner());
  bool ok = true;
  for (const auto& g : J.generators()) ok = ok && J.contains(g);
  c.verdict("generators_reduce_to_zero", ok);
  c.line("Groebner basis: " + std::to_string(J.groebner().size()) + " elements; with ring relations: " +
         std::to_string(JI.groebner().size()));
}

void cmd_resolve(Ctx& c) {
  FPModule M = c.module(0);
  Resolution res = free_resolution(M, current_budget().max_steps, c.R().is_graded());
  const Complex& F = *res.complex;
  c.outputs["ranks"] = res.ranks();
  c.outputs["length"] = res.length;
  c.outputs["terminated"] = res.terminated;
  c.outputs["resolution"] = complex_json(F);
  c.outputs["augmentation"] = matrix_json(c.R(), res.augmentation);
  bool dd = true;
  try {
    F.validate();
  } catch (const InvariantViolation&) {
    dd = false;
  }
  bool exact = true;
  const int top = res.terminated ? res.length : res.length - 1;
  for (int n = 1; n <= top; ++n) exact = exact && homology(F, n).module.is_zero();
  auto Mc = make_complex(Complex::single(M, 0));
  ChainMap aug{res.complex, Mc, {}};
  if (F.rank(0) > 0 && M.rank() > 0) aug.comps[0] = res.augmentation;
  HomologyComparison h0 = induced_homology_map(aug, 0);
  c.verdict("d_squared_zero", dd);
  c.verdict("exact_above_zero", exact);
  c.verdict("augmentation_iso_on_h0", aug.is_chain_map() && h0.injective && h0.surjective);
  std::string ranks;
  for (int r : res.ranks()) ranks += " " + std::to_string(r);
  c.line("resolution ranks:" + ranks + (res.terminated ? "" : " (truncated at the step budget)"));
}

void cmd_homology(Ctx& c) {
  ComplexPtr X = c.complex(0);
  json node = node_json(*X);
  c.outputs["node"] = node;
  c.outputs["stats"] = stats_json(complex_stats(*X));
  bool dd = true;
  try {
    X->validate();
  } catch (const InvariantViolation&) {
    dd = false;
  }
  c.verdict("d_squared_zero", dd);
  for (const auto& h : node["homology"])
    c.line("H_" + std::to_string(h["degree"].get<int>()) + ": length " + h["length"].dump());
  if (node["homology"].empty()) c.line("acyclic");
}

void cmd_depth(Ctx& c) {
  FPModule M = c.module(0);
  if (M.is_zero()) throw PreconditionError("depth of the zero module is undefined");
  const int d = depth(M);
  auto dim = M.dimension();
  ProjectiveDimension pd = projective_dimension(M);
  c.outputs["depth"] = d;
  c.outputs["dimension"] = dim ? json(*dim) : json("undefined");
  c.outputs["depth_of_ring"] = pd.depth_of_ring;
  c.outputs["projective_dimension"] = pd.value ? json(*pd.value) : json("infinite");
  c.outputs["length"] = length_json(M.length());
  if (pd.value) c.verdict("auslander_buchsbaum", *pd.value + d == pd.depth_of_ring);
  c.verdict("depth_at_most_dimension", dim && d <= *dim);
  c.line("depth " + std::to_string(d) + ", projective dimension " +
         (pd.value ? std::to_string(*pd.value) : std::string("infinite")));
}

void cmd_cm_check(Ctx& c) {
  std::vector<FPModule> corpus;
  std::vector<std::string> names;
  if (c.args.empty()) {
    for (const auto& [n, M] : c.s.modules) {
      names.push_back(n);
      corpus.push_back(M);
    }
  } else {
    for (size_t i = 0; i < c.args.size(); ++i) {
      names.push_back(c.args[i]);
      corpus.push_back(c.module(i));
    }
  }
  DichotomyReport rep = cm_dichotomy_report(c.s.ring, corpus);
  c.outputs["cohen_macaulay"] = rep.ring.cohen_macaulay;
  c.outputs["depth"] = rep.ring.depth;
  c.outputs["dimension"] = rep.ring.dimension;
  c.outputs["branch"] = rep.branch;
  c.outputs["witness_found"] = rep.witness_found;
  json mods = json::array();
  for (size_t i = 0; i < rep.modules.size(); ++i) {
    const auto& e = rep.modules[i];
    mods.push_back({{"name", names[i]},
                    {"length", length_json(e.length)},
                    {"projective_dimension", e.projective_dimension ? json(*e.projective_dimension) : json("infinite")},
                    {"depth", e.depth},
                    {"syzygy_rank", e.syzygy_rank},
                    {"verdict", e.verdict},
                    {"consistent", e.consistent}});
  }
  c.outputs["modules"] = mods;
  c.verdict("dichotomy_consistent", rep.verified);
  c.line(std::string(rep.ring.cohen_macaulay ? "Cohen-Macaulay" : "not Cohen-Macaulay") + ": (depth, dim) = (" +
         std::to_string(rep.ring.depth) + ", " + std::to_string(rep.ring.dimension) + ")");
  for (const auto& m : mods) c.line("  " + m["name"].get<std::string>() + ": " + m["verdict"].get<std::string>());
}

void cmd_koszul_cover(Ctx& c) {
  ComplexPtr P = c.complex(0);
  SerreSpec spec = c.spec(1);
  std::optional<Ideal> J;
  if (c.args.size() > 2) J = c.ideal(2);
  KoszulCover cov = koszul_cover(P, spec, J, c.s.seed);
  const QuotientRing& R = c.R();
  c.outputs["degenerate"] = cov.degenerate;
  c.outputs["m"] = cov.m;
  c.outputs["spec"] = spec.to_string();
  c.outputs["regular_sequence"] = poly_list_json(R, cov.regular_sequence);
  c.outputs["search_attempts"] = cov.search_attempts;
  c.outputs["closed_form"] = cov.closed_form;
  c.outputs["koszul_ranks"] = summarize_node(*cov.complex).ranks;
  c.outputs["koszul_complex"] = complex_json(*cov.complex);
  c.outputs["alpha"] = components_json(R, cov.alpha.comps);
  json hs = json::array();
  for (const auto& h : cov.homotopies) hs.push_back(components_json(R, h.comps));
  c.outputs["homotopies"] = hs;
  if (!cov.degenerate) {
    c.outputs["target_ideal"] = poly_list_json(R, generators_modulo(cov.target_ideal, R.defining_ideal()));
    c.outputs["endomorphism_annihilator"] =
        poly_list_json(R, generators_modulo(cov.endomorphism_annihilator, R.defining_ideal()));
  }
  c.verdict("d_squared_zero", cov.d_squared_zero);
  c.verdict("chain_map", cov.chain_map);
  c.verdict("homology_concentrated", cov.homology_concentrated);
  c.verdict("bottom_surjective", cov.bottom_surjective);
  c.verdict("homologies_in_spec", cov.homologies_in_spec);
  ComplexStats st = complex_stats(*cov.covered);
  if (!st.acyclic && st.wid > 0) {
    ConeWidthReport cw = cone_width_report(cov);
    c.outputs["cone"] = {{"input", stats_json(cw.input)},
                         {"cone", stats_json(cw.cone)},
                         {"shifted_sum", stats_json(cw.shifted_sum)}};
    c.verdict("cone_narrower", cw.cone_narrower);
    c.verdict("sum_narrower", cw.sum_narrower);
    c.verdict("bottom_killed", cw.bottom_killed);
  }
  c.line("Koszul cover at degree " + std::to_string(cov.m) + " by (" + join(R, cov.regular_sequence) + ")");
}

json reduction_json(const QuotientRing& R, const Reduction& red) {
  json levels = json::array();
  for (const auto& l : red.levels)
    levels.push_back({{"m", l.m},
                      {"width", l.width},
                      {"regular_sequence", poly_list_json(R, l.regular_sequence)},
                      {"closed_form", l.closed_form},
                      {"cone_width", l.cone_width},
                      {"cone_acyclic", l.cone_acyclic}});
  return {{"ptilde", node_json(*red.ptilde)}, {"levels", levels}};
}

bool all_verified(const std::vector<ArrowCheck>& checks) {
  for (const auto& a : checks)
    if (!a.chain_map || !a.quasi_isomorphism) return false;
  return true;
}

bool euler_constant(const Zigzag& z) {
  std::optional<long> first;
  for (size_t i = 0; i < z.nodes.size(); ++i) {
    auto e = summarize_node(*z.nodes[i]).euler;
    if (!e) return false;
    if (i == 0) first = e;
    if (e != first) return false;
  }
  return true;
}

void cmd_reduce(Ctx& c) {
  ComplexPtr P = c.complex(0);
  SerreSpec spec = c.spec(1);
  Reduction red = reduce_object(P, spec, c.s.seed);
  auto checks = verify_zigzag(red.certificate);
  c.outputs["spec"] = spec.to_string();
  c.outputs["reduction"] = reduction_json(c.R(), red);
  c.outputs["certificate"] = zigzag_json(red.certificate, checks);
  c.verdict("arrows_verified", all_verified(checks));
  c.verdict("widths_decrease", red.widths_decrease);
  c.verdict("terms_in_spec", red.terms_in_spec);
  c.verdict("terms_finite_pd", red.terms_finite_pd);
  c.verdict("euler_constant", euler_constant(red.certificate));
  c.line("reduced in " + std::to_string(red.levels.size()) + " level(s); certificate has " +
         std::to_string(red.certificate.arrows.size()) + " arrow(s)");
}

void cmd_realize(Ctx& c) {
  ComplexPtr X = c.complex(0);
  Realization real = realize_in_projectives(X);
  auto checks = verify_zigzag(real.certificate);
  c.outputs["realization"] = node_json(*real.complex);
  c.outputs["certificate"] = zigzag_json(real.certificate, checks);
  c.verdict("arrows_verified", all_verified(checks));
  c.verdict("realization_free", real.complex->is_free());
  std::string ranks;
  for (int r : summarize_node(*real.complex).ranks) ranks += " " + std::to_string(r);
  c.line("free realization ranks:" + ranks);
}

void cmd_roundtrip(Ctx& c) {
  ComplexPtr P = c.complex(0);
  SerreSpec spec = c.spec(1);
  RoundtripReport rep = roundtrip_verify(P, spec, c.s.seed);
  c.outputs["spec"] = spec.to_string();
  c.outputs["reduction"] = reduction_json(c.R(), rep.reduction);
  c.outputs["realization"] = node_json(*rep.realization.complex);
  c.outputs["certificate"] = zigzag_json(rep.certificate, rep.arrows);
  c.outputs["euler_characteristic"] = rep.euler;
  c.verdict("arrows_verified", rep.arrows_verified);
  c.verdict("homology_matches", rep.homology_matches);
  c.verdict("euler_constant", rep.euler_constant);
  c.verdict("widths_decrease", rep.reduction.widths_decrease);
  c.verdict("terms_in_spec", rep.reduction.terms_in_spec);
  c.verdict("terms_finite_pd", rep.reduction.terms_finite_pd);
  c.line("round trip through " + std::to_string(rep.certificate.nodes.size()) + " nodes, Euler characteristic " +
         std::to_string(rep.euler));
}

void cmd_k0(Ctx& c) {
  ComplexPtr X = c.complex(0);
  long chi = euler_characteristic_fl(*X);
  c.outputs["euler_characteristic"] = chi;
  c.outputs["node"] = node_json(*X);
  c.verdict("finite_length_homology", true);
  c.line("Euler characteristic " + std::to_string(chi));
}

void cmd_hom_vanish(Ctx& c) {
  ComplexPtr P = c.complex(0), Q = c.complex(1);
  HomVanishingReport rep = hom_vanishing_check(P, Q);
  const QuotientRing& R = c.R();
  json wit = json::array();
  for (const auto& w : rep.witnesses)
    wit.push_back({{"map", components_json(R, w.map.comps)},
                   {"homotopy", components_json(R, w.homotopy.comps)},
                   {"verified", w.verified}});
  c.outputs["vacuous"] = rep.vacuous;
  c.outputs["classes_zero"] = rep.classes_zero;
  c.outputs["witnesses"] = wit;
  c.verdict("classes_zero", rep.classes_zero);
  bool wv = true;
  for (const auto& w : rep.witnesses) wv = wv && w.verified;
  c.verdict("witnesses_verified", wv);
  c.line(std::string("homotopy classes ") + (rep.classes_zero ? "vanish" : "do not vanish") + " (" +
         std::to_string(rep.witnesses.size()) + " null-homotopy witnesses)");
}

void cmd_hom_compare(Ctx& c) {
  FPModule M = c.module(0), N = c.module(1);
  HomComparisonReport rep = module_hom_comparison(M, N);
  c.outputs["module_hom"] = module_json(rep.module_hom);
  c.outputs["module_length"] = length_json(rep.module_length);
  c.outputs["derived_length"] = length_json(rep.derived_length);
  c.outputs["forward"] = matrix_json(c.R(), rep.forward);
  c.outputs["backward"] = matrix_json(c.R(), rep.backward);
  c.verdict("inverse_maps", rep.inverse_maps);
  c.verdict("lengths_agree", rep.lengths_agree);
  c.line("Hom lengths " + length_json(rep.module_length).dump() + " and " + length_json(rep.derived_length).dump());
}

void cmd_transport(Ctx& c) {
  const std::string& g = c.arg(0, "map");
  auto it = c.s.maps.find(g);
  if (it == c.s.maps.end()) throw ArgumentError("unknown map '" + g + "'");
  SerreSpec spec = c.spec(1);
  TransportStep st = transport_morphism_step(it->second, spec, c.s.seed);
  const QuotientRing& R = c.R();
  c.outputs["m"] = st.cover.m;
  c.outputs["width"] = st.width;
  c.outputs["MX"] = node_json(*st.cover.MX);
  c.outputs["MY"] = node_json(*st.cover.MY);
  c.outputs["betaX"] = components_json(R, st.cover.betaX.comps);
  c.outputs["betaY"] = components_json(R, st.cover.betaY.comps);
  c.outputs["kappa"] = components_json(R, st.cover.kappa.comps);
  c.outputs["regular_sequence"] = poly_list_json(R, st.cover.regular_sequence);
  c.outputs["cones"] = stats_json(st.cones);
  c.outputs["cone_x_sum"] = stats_json(st.cone_x_sum);
  c.outputs["vacuous"] = st.vacuous;
  c.verdict("square_commutes", st.cover.square_commutes);
  c.verdict("covers_surjective", st.cover.betaX_surjective && st.cover.betaY_surjective);
  c.verdict("strict_decrease", st.strict_decrease);
  c.verdict("bounded_increase", st.bounded_increase);
  c.verdict("min_bound", st.min_bound);
  if (st.null_homotopic) c.verdict("null_homotopic", *st.null_homotopic);
  c.line("transport step at degree " + std::to_string(st.cover.m) + ", width " + std::to_string(st.width));
}

const std::map<std::string, std::function<void(Ctx&)>>& registry() {
  static const std::map<std::string, std::function<void(Ctx&)>> r = {
      {"gb", cmd_gb},           {"resolve", cmd_resolve},     {"homology", cmd_homology},
      {"depth", cmd_depth},     {"cm-check", cmd_cm_check},   {"koszul-cover", cmd_koszul_cover},
      {"reduce", cmd_reduce},   {"realize", cmd_realize},     {"roundtrip", cmd_roundtrip},
      {"k0", cmd_k0},           {"hom-vanish", cmd_hom_vanish}, {"hom-compare", cmd_hom_compare},
      {"transport", cmd_transport}};
  return r;
}

json envelope(const Session* s, const std::string& command, const std::vector<std::string>& args) {
  json j;
  j["tool"] = "koszulator";
  j["version"] = kVersion;
  j["command"] = {{"name", command}, {"args", args}};
  if (s) {
    j["seed"] = s->seed;
    j["budget"] = {{"degree", s->budget.max_degree}, {"steps", s->budget.max_steps}, {"retries", s->budget.max_retries}};
    j["ring"] = s->ring->to_string();
    std::string digest_input = s->text;
    digest_input += '\0' + command;
    for (const auto& a : args) digest_input += '\0' + a;
    digest_input += '\0' + std::to_string(s->seed) + '\0' + std::to_string(s->budget.max_degree) + '\0' +
                    std::to_string(s->budget.max_steps) + '\0' + std::to_string(s->budget.max_retries);
    j["inputs_digest"] = sha256_hex(digest_input);
  }
  return j;
}

std::string canonical(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

CommandResult run_command(const Session& session, const std::string& command, const std::vector<std::string>& args) {
  auto it = registry().find(command);
  if (it == registry().end()) throw ArgumentError("unknown command '" + command + "'");
  ScopedBudget guard(session.budget);
  Ctx c{session, args, json::object(), json::object(), {}};
  it->second(c);
  json j = envelope(&session, command, args);
  bool ok = true;
  for (const auto& [k, v] : c.verdicts.items()) ok = ok && v.get<bool>();
  j["outputs"] = c.outputs;
  j["verdicts"] = c.verdicts;
  j["ok"] = ok;
  CommandResult r;
  r.json = canonical(j);
  r.ok = ok;
  std::string summary = command + ": " + (ok ? "ok" : "FAILED") + "\n";
  for (const auto& l : c.lines) summary += "  " + l + "\n";
  for (const auto& [k, v] : c.verdicts.items())
    if (!v.get<bool>()) summary += "  verdict failed: " + k + "\n";
  r.summary = summary;
  return r;
}

CommandResult error_certificate(const Session* session, const std::string& command,
                                const std::vector<std::string>& args, const std::string& kind,
                                const std::string& message, const std::vector<std::string>& attempted) {
  json j = envelope(session, command, args);
  j["error"] = {{"kind", kind}, {"message", message}};
  if (!attempted.empty()) j["error"]["attempted"] = attempted;
  j["ok"] = false;
  j["verdicts"] = json::object();
  return {canonical(j), command + ": error (" + kind + "): " + message + "\n", false};
}

}  // namespace kz
