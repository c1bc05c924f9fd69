#include "torelli/report.hpp"

#include <algorithm>

#include "torelli/h3_model.hpp"
#include "torelli/invariant_forms.hpp"
#include "torelli/random.hpp"
#include "torelli/render.hpp"

namespace torelli {

using nlohmann::json;

namespace {

json echo(const SubsurfaceSpec& side) {
  json pairs = json::array();
  for (const auto& [e, f] : side.pairs) pairs.push_back(render(e) + ", " + render(f));
  return {{"d", render(side.d)}, {"genus", side.genus()}, {"pairs", pairs}};
}

json echo(const BoundingPairSpec& pair) { return {{"side1", echo(pair.side1)}, {"side2", echo(pair.side2)}}; }

json echo(const GradedH3Element& m) {
  return {{"scalar", to_string(m.scalar())}, {"sym2", render(m.sym2())}, {"top", render(m.top())}};
}

const JobArgument& require_arg(const JobConfig& config, const std::string& key) {
  if (const JobArgument* a = config.argument(key)) return *a;
  throw ParseError("command '" + config.command + "' needs job argument '" + key + "'");
}

const BoundingPairSpec& lookup_pair(const JobConfig& config, const JobArgument& ref) {
  auto it = config.bounding_pairs.find(ref.value);
  if (it == config.bounding_pairs.end()) throw ParseError("unknown bounding pair '" + ref.value + "'", ref.line);
  return it->second;
}

// Identity checks shared by `johnson` and `act`; reports failures as verdicts
// rather than throwing.
void bounding_pair_checks(const BoundingPairSpec& pair, ReportDocument& doc, json& out) {
  const auto& space = pair.space();
  const Multivector j1 = johnson_element(pair.side1);
  const Multivector j2 = johnson_element(pair.side2);
  const Multivector d_delta = wedge(Multivector::from_vector(pair.side1.d), delta(space));
  const Multivector p1 = project_primitive(j1);
  const Multivector p2 = project_primitive(j2);
  const LinearMap on_v = bounding_pair_action_on_V(pair);

  out["j_side1"] = render(j1);
  out["j_side2"] = render(j2);
  out["d_wedge_delta"] = render(d_delta);
  out["johnson_bp"] = render(p1);
  out["action_on_V_is_identity"] = on_v.is_identity();

  doc.verdicts.push_back(Verdict::pass_fail("johnson-identity", j1 - j2 == d_delta, "j(X') - j(X'') = d^delta"));
  doc.verdicts.push_back(Verdict::pass_fail("johnson-sides-project-equal", p1 == p2));
  doc.verdicts.push_back(Verdict::pass_fail("johnson-bp-primitive", is_primitive(p1)));
  doc.verdicts.push_back(Verdict::pass_fail("torelli-trivial-on-V", on_v.is_identity(), "tau_d tau_d'^-1 on V"));
}

ReportDocument run_decompose(const JobConfig& config) {
  ReportDocument doc;
  const Multivector x = config.resolve_multivector(require_arg(config, "input"), 3);
  const Multivector primitive = project_primitive(x);
  const Vector w = delta_component(x);
  const Multivector rebuilt = primitive + wedge(delta(config.space), Multivector::from_vector(w));

  doc.inputs["input"] = render(x);
  doc.outputs["contraction"] = render(contraction3(x));
  doc.outputs["primitive"] = render(primitive);
  doc.outputs["delta_component"] = render(w);

  doc.verdicts.push_back(Verdict::pass_fail("projector-kills-contraction", is_primitive(primitive)));
  doc.verdicts.push_back(Verdict::pass_fail("splitting-reconstruction", rebuilt == x, "x = P(x) + delta^w"));
  std::string kind = x.is_zero()           ? "ZERO"
                     : primitive == x      ? "PRIMITIVE"
                     : primitive.is_zero() ? "IN-δ∧V"
                                           : "MIXED";
  doc.verdicts.push_back({"classification", kind, false, "summand containing the input"});
  return doc;
}

ReportDocument run_forms(const JobConfig& config) {
  ReportDocument doc;
  const Multivector s = config.resolve_multivector(require_arg(config, "left"));
  const Multivector t = config.resolve_multivector(require_arg(config, "right"), s.degree());
  doc.inputs["left"] = render(s);
  doc.inputs["right"] = render(t);
  doc.inputs["degree"] = s.degree();
  switch (s.degree()) {
    case 1: {
      const Rational value = intersection(s.to_vector(), t.to_vector());
      doc.outputs["intersection"] = to_string(value);
      doc.verdicts.push_back(Verdict::pass_fail("intersection-antisymmetric",
                                                value == -intersection(t.to_vector(), s.to_vector())));
      break;
    }
    case 2: {
      const Rational value = q2(s, t);
      doc.outputs["q"] = to_string(value);
      doc.verdicts.push_back(Verdict::pass_fail("q2-symmetric", value == q2(t, s)));
      break;
    }
    case 3: {
      const Rational w = omega3(s, t);
      const Sym2Element p = phi(s, t);
      doc.outputs["omega3"] = to_string(w);
      doc.outputs["phi"] = render(p);
      doc.outputs["left_primitive"] = is_primitive(s);
      doc.outputs["right_primitive"] = is_primitive(t);
      doc.verdicts.push_back(Verdict::pass_fail("omega3-antisymmetric", w == -omega3(t, s)));
      doc.verdicts.push_back(Verdict::pass_fail("phi-symmetric", p == phi(t, s)));
      break;
    }
  }
  return doc;
}

ReportDocument run_johnson(const JobConfig& config) {
  ReportDocument doc;
  if (const JobArgument* name = config.argument("subsurface")) {
    auto it = config.subsurfaces.find(name->value);
    if (it == config.subsurfaces.end()) throw ParseError("unknown subsurface '" + name->value + "'", name->line);
    const SubsurfaceSpec& side = it->second;
    const Multivector j = johnson_element(side);
    const Vector c = contraction3(j);
    doc.inputs["subsurface"] = echo(side);
    doc.outputs["johnson_element"] = render(j);
    doc.outputs["contraction"] = render(c);
    doc.verdicts.push_back(Verdict::pass_fail("johnson-element-contraction", c == Rational(side.genus()) * side.d,
                                              "contraction3(j(X')) = genus(X') d"));
    return doc;
  }
  const BoundingPairSpec& pair = lookup_pair(config, require_arg(config, "bounding_pair"));
  doc.inputs["bounding_pair"] = echo(pair);
  bounding_pair_checks(pair, doc, doc.outputs);
  return doc;
}

ReportDocument run_act(const JobConfig& config) {
  ReportDocument doc;
  const BoundingPairSpec& pair = lookup_pair(config, require_arg(config, "bounding_pair"));
  const Multivector top = config.resolve_multivector(require_arg(config, "top"), 3);
  if (!is_primitive(top)) throw ValidationError("top class " + render(top) + " is not primitive");
  config.params.validate();

  doc.inputs["bounding_pair"] = echo(pair);
  doc.inputs["top"] = render(top);
  doc.inputs["kappa1"] = to_string(config.params.kappa1);
  doc.inputs["kappa2"] = to_string(config.params.kappa2);

  bounding_pair_checks(pair, doc, doc.outputs);
  const bool identity_ok = std::none_of(doc.verdicts.begin(), doc.verdicts.end(), [](const Verdict& v) { return v.failed; });
  if (!identity_ok) return doc;

  const GradedH3Element var = variation(pair, top, config.params);
  const Multivector t = johnson_bp(pair);
  doc.outputs["variation"] = echo(var);
  doc.outputs["phi_johnson_top"] = render(phi(t, top));
  doc.outputs["omega3_johnson_top"] = to_string(omega3(t, top));
  doc.outputs["weights"] = {{"sub", kSubWeightTag}, {"top", kTopWeightTag}};

  doc.verdicts.push_back(Verdict::pass_fail("variation-top-zero", var.top().is_zero(), "act fixes the top component"));
  doc.verdicts.push_back({"action", var.sym2().is_zero() ? "TRIVIAL" : "NONTRIVIAL", false,
                          "Sym^2 component of the variation in the quotient by the Q-line"});
  return doc;
}

ReportDocument run_audit(const JobConfig& config) {
  ReportDocument doc;
  const DimensionAudit audit = dimension_audit(config.space);
  doc.outputs["sub"] = audit.sub;
  doc.outputs["sub_scalar"] = 1;
  doc.outputs["sub_sym2"] = audit.sym2;
  doc.outputs["quotient"] = audit.quotient;
  doc.outputs["total"] = audit.total;
  doc.outputs["rank_projector_image"] = audit.rank.projector_image;
  doc.outputs["rank_isotropic_span"] = audit.rank.isotropic_span;
  doc.outputs["rank_expected"] = audit.rank.expected;
  doc.outputs["isotropic_triples"] = audit.rank.isotropic_triples;
  doc.outputs["weights"] = {{"sub", kSubWeightTag}, {"top", kTopWeightTag}};
  doc.verdicts.push_back(Verdict::pass_fail("primitive-rank-two-ways", audit.ranks_agree,
                                            "projector image = isotropic span = C(2g,3) - 2g"));
  return doc;
}

ReportDocument run_invariants(const JobConfig& config) {
  ReportDocument doc;
  int trials = 100;
  if (const JobArgument* a = config.argument("trials")) {
    try {
      trials = std::stoi(a->value);
    } catch (const std::exception&) {
      throw ParseError("'trials' expects an integer", a->line);
    }
    if (trials < 1) throw ParseError("'trials' must be positive", a->line);
  }
  const std::uint64_t seed = config.seed.value_or(kDefaultSeed);
  doc.inputs["seed"] = seed;
  doc.inputs["trials"] = trials;
  doc.verdicts = run_property_suite(config.space, seed, trials);
  return doc;
}

void text_value(std::string& out, const json& value, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, v] : value.items()) {
    out += pad + key + ":";
    if (v.is_object()) {
      out += "\n";
      text_value(out, v, indent + 2);
    } else if (v.is_array()) {
      out += "\n";
      for (const auto& item : v) out += pad + "  - " + (item.is_string() ? item.get<std::string>() : item.dump()) + "\n";
    } else {
      out += " " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
    }
  }
}

}  // namespace

bool ReportDocument::all_pass() const {
  return std::none_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.failed; });
}

json ReportDocument::to_json() const {
  json vs = json::array();
  for (const auto& v : verdicts) vs.push_back({{"check", v.check}, {"outcome", v.outcome}, {"detail", v.detail}});
  return {{"command", command}, {"inputs", inputs}, {"outputs", outputs}, {"verdicts", vs}, {"all_pass", all_pass()}};
}

std::string ReportDocument::to_text() const {
  std::string out = "command: " + command + "\n";
  out += "inputs:\n";
  text_value(out, inputs, 2);
  out += "outputs:\n";
  text_value(out, outputs, 2);
  out += "verdicts:\n";
  for (const auto& v : verdicts) {
    out += "  " + v.check + ": " + v.outcome;
    if (!v.detail.empty()) out += "  (" + v.detail + ")";
    out += "\n";
  }
  out += std::string("result: ") + (all_pass() ? "PASS" : "FAIL") + "\n";
  return out;
}

ReportDocument run(const JobConfig& config) {
  ReportDocument doc;
  if (config.command == "decompose")
    doc = run_decompose(config);
  else if (config.command == "forms")
    doc = run_forms(config);
  else if (config.command == "johnson")
    doc = run_johnson(config);
  else if (config.command == "act")
    doc = run_act(config);
  else if (config.command == "audit")
    doc = run_audit(config);
  else if (config.command == "invariants")
    doc = run_invariants(config);
  else
    throw ParseError("unknown command '" + config.command + "'");
  doc.command = config.command;
  doc.inputs["genus"] = config.space.genus();
  if (config.fixture) doc.inputs["fixture"] = *config.fixture;
  return doc;
}

}  // namespace torelli
