#include "fria/validation/shapes.h"

#include "fria/vocab/terms.h"

namespace fria::validation {

namespace {

namespace t = terms;

const std::string kArt27_1 = "AI Act Art. 27(1)";

std::set<Iri> with_refinements(const vocab::Vocabulary& v, std::initializer_list<Iri> base) {
  std::set<Iri> out(base);
  for (const auto& b : base)
    for (const auto& r : v.refinements_of(b)) out.insert(r);
  return out;
}

std::set<Iri> instances(const vocab::Vocabulary& v, const Iri& c) {
  auto list = v.instances_of(c);
  return {list.begin(), list.end()};
}

PropertyConstraint at_least_one(const Iri& path, std::string message, std::string source) {
  PropertyConstraint c{path, 1, std::nullopt, std::nullopt, std::nullopt, std::nullopt, std::move(message),
                       std::move(source)};
  return c;
}

PropertyConstraint exactly_one(const Iri& path, std::string message, std::string source) {
  PropertyConstraint c = at_least_one(path, std::move(message), std::move(source));
  c.max_count = 1;
  return c;
}

Shape procedure_shape(const vocab::Vocabulary& v) {
  Shape s{"FRIAProcedureShape", t::fria::FRIAProcedure, {}, std::nullopt};
  auto& c = s.constraints;
  c.push_back(at_least_one(t::dpv::hasProcess, "describe the deployer's processes in which the AI system is used",
                           kArt27_1 + "(a)"));
  c.push_back(at_least_one(t::dpv::hasPurpose, "state the intended purpose of the AI system", kArt27_1 + "(a)"));

  auto duration = at_least_one(t::dpv::hasDuration, "state the period of time of intended use", kArt27_1 + "(b)");
  duration.value_in = instances(v, t::dpv::Duration);
  c.push_back(duration);
  auto frequency = at_least_one(t::dpv::hasFrequency, "state the frequency of intended use", kArt27_1 + "(b)");
  frequency.value_in = instances(v, t::dpv::Frequency);
  c.push_back(frequency);

  auto subjects = at_least_one(t::dpv::hasDataSubject,
                               "name the categories of natural persons and groups likely to be affected",
                               kArt27_1 + "(c)");
  subjects.value_class = t::fria_ext::HumanSubjectCategory;
  c.push_back(subjects);
  auto impact = at_least_one(t::dpv::hasImpact, "record at least one impact on affected persons or their rights",
                             kArt27_1 + "(c)");
  impact.value_class = t::dpv::Impact;
  c.push_back(impact);

  auto risk = at_least_one(t::dpv::hasRisk, "identify the specific risks of harm likely to affect those persons",
                           kArt27_1 + "(d)");
  risk.value_class = t::dpv::Risk;
  c.push_back(risk);

  auto oversight = at_least_one(t::dpv::hasHumanInvolvement, "describe the human oversight measures",
                                kArt27_1 + "(e)");
  oversight.value_class = t::dpv::HumanInvolvementForOversight;
  c.push_back(oversight);
  PropertyConstraint instructions{t::tech::hasDocumentation,
                                  0,
                                  std::nullopt,
                                  std::nullopt,
                                  std::nullopt,
                                  std::nullopt,
                                  "instructions for use are optional: they apply only where the provider "
                                  "supplies them (warning only)",
                                  kArt27_1 + "(e)"};
  c.push_back(instructions);

  auto mitigation = at_least_one(t::dpv::hasTechnicalOrganisationalMeasure,
                                 "describe the measures to be taken if the risks materialise, including "
                                 "internal governance and complaint mechanisms",
                                 kArt27_1 + "(f)");
  mitigation.value_class = t::dpv::RiskMitigationMeasure;
  c.push_back(mitigation);
  return s;
}

}  // namespace

std::vector<Shape> builtin_shapes(const vocab::Vocabulary& v) {
  std::vector<Shape> out;

  Shape necessity{"FRIANecessityShape", t::fria::FRIANecessityAssessment, {}, std::nullopt};
  auto ns = exactly_one(t::dpv::hasStatus, "a necessity assessment has exactly one status: required or not required",
                        kArt27_1);
  ns.value_in = with_refinements(v, {t::fria::FRIARequired, t::fria::FRIANotRequired});
  necessity.constraints.push_back(ns);
  out.push_back(necessity);

  out.push_back(procedure_shape(v));

  Shape impact{"ImpactShape", t::dpv::Impact, {}, std::nullopt};
  auto likelihood = at_least_one(t::dpv::hasLikelihood, "every impact carries a likelihood", kArt27_1 + "(c)");
  likelihood.value_class = t::dpv::Likelihood;
  impact.constraints.push_back(likelihood);
  impact.constraints.push_back(
      at_least_one(t::dpv::hasImpactOn, "every impact names who or what is affected", kArt27_1 + "(c)"));
  out.push_back(impact);

  Shape rights{"ImpactToRightsShape", t::risk::ImpactToRights, {}, std::nullopt};
  auto right = at_least_one(t::dpv::hasRight, "an impact on rights names the fundamental right concerned",
                            kArt27_1 + "(c)");
  right.value_class = t::dpv::Right;
  rights.constraints.push_back(right);
  out.push_back(rights);

  Shape risk{"RiskShape", t::dpv::Risk, {}, std::nullopt};
  auto harm = at_least_one(t::dpv::hasConsequence, "every risk names the harm it may cause", kArt27_1 + "(d)");
  harm.value_class = t::risk::Harm;
  risk.constraints.push_back(harm);
  auto level = exactly_one(t::fria_ext::hasResidualRiskLevel, "every risk has exactly one residual risk level",
                           kArt27_1 + "(d)");
  level.value_in = instances(v, t::fria_ext::ResidualRiskLevel);
  risk.constraints.push_back(level);
  auto accepted = exactly_one(t::fria_ext::isRiskAccepted, "every risk records whether its residual risk is accepted",
                              kArt27_1 + "(d)");
  accepted.datatype = rdf::xsd::boolean;
  risk.constraints.push_back(accepted);
  out.push_back(risk);

  Shape outcome{"FRIAOutcomeShape", t::fria::FRIAOutcome, {}, std::nullopt};
  auto os = exactly_one(t::dpv::hasStatus, "an outcome has exactly one of the four outcome statuses", kArt27_1);
  os.value_in = with_refinements(v, {t::fria::FRIAOutcomeUnacceptableRisk, t::fria::FRIAOutcomeHighResidualRisk,
                                     t::fria::FRIAOutcomeRisksAcceptable, t::fria::FRIAOutcomeRisksMitigated});
  outcome.constraints.push_back(os);
  out.push_back(outcome);

  Shape notification{"FRIANotificationShape", t::fria::FRIANotificationAssessment, {}, std::nullopt};
  auto nst = exactly_one(t::dpv::hasStatus, "a notification assessment has exactly one notification status",
                         "AI Act Art. 27(3)");
  nst.value_in = with_refinements(v, {t::fria::FRIANotificationNeeded, t::fria::FRIANotificationNotSent,
                                      t::fria::FRIANotificationSent, t::fria::FRIANotificationExempt});
  notification.constraints.push_back(nst);
  out.push_back(notification);

  Shape sent{"FRIANotificationSentShape", t::fria::FRIANotificationAssessment, {},
             TargetFilter{t::dpv::hasStatus, t::fria::FRIANotificationSent}};
  auto notice = at_least_one(t::dpv::hasNotice, "a sent notification links the notice that was sent",
                             "AI Act Art. 27(3)");
  notice.value_class = t::fria::FRIANotice;
  sent.constraints.push_back(notice);
  out.push_back(sent);

  return out;
}

std::vector<Shape> builtin_shapes() { return builtin_shapes(vocab::catalog()); }

void check_shapes(const std::vector<Shape>& shapes, const vocab::Vocabulary& v) {
  std::set<std::string> ids;
  auto require_class = [&](const Iri& c, const std::string& id) {
    const auto* def = v.find(c);
    if (!def || def->kind != vocab::TermKind::Class)
      throw ShapeError("shape " + id + ": <" + c.str() + "> is not a catalogued class");
  };
  for (const auto& s : shapes) {
    if (!ids.insert(s.id).second) throw ShapeError("duplicate shape id " + s.id);
    require_class(s.target_class, s.id);
    for (const auto& c : s.constraints) {
      if (c.min_count < 0) throw ShapeError("shape " + s.id + ": negative min_count");
      if (c.max_count && c.min_count > *c.max_count)
        throw ShapeError("shape " + s.id + ": min_count exceeds max_count on " + c.path.str());
      if (c.value_class) require_class(*c.value_class, s.id);
    }
  }
}

}  // namespace fria::validation
