#include "fria/questionnaire/questionnaire.h"
#include "fria/vocab/terms.h"

namespace fria::questionnaire {

namespace {

namespace t = terms;

Question ask(std::string id, std::string prompt, Iri maps_to, Stage stage, AnswerKindTag tag,
             std::optional<Iri> cls, bool required, std::string guidance, std::optional<Iri> node_class = {}) {
  return Question{std::move(id), std::move(prompt), std::move(maps_to), stage, AnswerKind{tag, std::move(cls)},
                  required,      std::move(guidance), std::move(node_class)};
}

Questionnaire build() {
  using K = AnswerKindTag;
  const auto N = Stage::Necessity;
  const auto I = Stage::Inputs;
  Questionnaire q{t::fria_ext::BuiltinQuestionnaire, "FRIA questionnaire (AI Act Art. 27)", {}};

  q.sections.push_back(Section{
      "necessity",
      "Is a FRIA required?",
      {ask("necessity-status", "Does the deployment of this high-risk AI system require a FRIA?", t::dpv::hasStatus, N,
           K::IriChoice, t::fria::FRIANecessityStatus, true,
           "Required for bodies governed by public law, private entities providing public services, and deployers "
           "of Annex III point 5(b) or 5(c) systems."),
       ask("necessity-justification", "Why is a FRIA required or not required?", t::dct::description, N, K::Text, {},
           false, "Name the deployer category or Annex III point that applies.")},
      std::nullopt});

  q.sections.push_back(Section{
      "27-1a",
      "Processes and intended purpose",
      {ask("process", "In which of your processes will the AI system be used?", t::dpv::hasProcess, I, K::Text, {},
           true, "Describe the deployer's process, not the system itself.", t::fria::AIProcess),
       ask("purpose", "What is the intended purpose of the AI system?", t::dpv::hasPurpose, I, K::Text, {}, true,
           "The purpose as stated by the provider.", t::eu_aiact::IntendedPurpose),
       ask("intended-use", "How will the system be applied in this deployment?", t::tech::hasIntendedUse, I, K::Text,
           {}, false, "The concrete use in your context, as opposed to the declared purpose.", t::fria::IntendedUse)},
      std::nullopt});

  q.sections.push_back(Section{
      "27-1b",
      "Period and frequency of use",
      {ask("duration", "For what period of time will the system be used?", t::dpv::hasDuration, I, K::IriChoice,
           t::dpv::Duration, true, ""),
       ask("frequency", "How frequently will the system be used?", t::dpv::hasFrequency, I, K::IriChoice,
           t::dpv::Frequency, true, "")},
      std::nullopt});

  q.sections.push_back(Section{
      "27-1c",
      "Affected persons",
      {ask("human-subjects", "Which categories of natural persons and groups are likely to be affected?",
           t::dpv::hasDataSubject, I, K::IriMulti, t::fria_ext::HumanSubjectCategory, true, "Select all that apply.")},
      std::nullopt});

  q.sections.push_back(Section{
      "27-1c-impacts",
      "Impacts on affected persons",
      {ask("impact-type", "What kind of impact is it?", t::rdf::type, I, K::IriChoice, t::dpv::Impact, false,
           "Defaults to an impact on rights."),
       ask("impact-affected", "Who is affected by this impact?", t::dpv::hasImpactOn, I, K::IriChoice,
           t::fria_ext::HumanSubjectCategory, true, ""),
       ask("impact-likelihood", "How likely is the impact?", t::dpv::hasLikelihood, I, K::IriChoice,
           t::dpv::Likelihood, true, ""),
       ask("impact-right", "Which fundamental right is concerned?", t::dpv::hasRight, I, K::IriChoice, t::dpv::Right,
           true, "Rights of the EU Charter of Fundamental Rights.")},
      Entry{t::dpv::hasImpact, t::risk::ImpactToRights, true, "impact"}});

  q.sections.push_back(Section{
      "27-1d-risks",
      "Risks of harm",
      {ask("risk-harm", "What harm could the risk cause?", t::dpv::hasConsequence, I, K::IriChoice, t::risk::Harm,
           true, "Take into account the information given by the provider."),
       ask("risk-residual-level", "What level of risk remains after mitigation?", t::fria_ext::hasResidualRiskLevel,
           I, K::IriChoice, t::fria_ext::ResidualRiskLevel, true, ""),
       ask("risk-accepted", "Do you accept the residual risk?", t::fria_ext::isRiskAccepted, I, K::Boolean, {}, true,
           ""),
       ask("risk-mitigated-by", "Which measure mitigates this risk?", t::dpv::isMitigatedByMeasure, I, K::Reference,
           {}, false, "IRI of a measure described under mitigation measures.")},
      Entry{t::dpv::hasRisk, t::dpv::Risk, false, "risk"}});

  q.sections.push_back(Section{
      "27-1e",
      "Human oversight",
      {ask("oversight", "How is human oversight implemented?", t::dpv::hasHumanInvolvement, I, K::Text, {}, true,
           "Follow the provider's instructions for use where they exist.", t::dpv::HumanInvolvementForOversight),
       ask("instructions-for-use", "Where are the provider's instructions for use?", t::tech::hasDocumentation, I,
           K::Reference, {}, false, "Only where the provider supplies them.")},
      std::nullopt});

  q.sections.push_back(Section{
      "27-1f-mitigations",
      "Measures if risks materialise",
      {ask("mitigation", "What will be done if the risks materialise?", t::dct::description, I, K::Text, {}, true,
           "Include internal governance and complaint mechanisms."),
       ask("mitigation-kind", "What kind of measure is it?", t::rdf::type, I, K::IriChoice,
           t::dpv::RiskMitigationMeasure, false, "")},
      Entry{t::dpv::hasTechnicalOrganisationalMeasure, t::dpv::RiskMitigationMeasure, false, "mitigation"}});

  q.sections.push_back(Section{
      "outcome-evidence",
      "Evidence for the outcome",
      {ask("reused-assessment", "Which existing assessment (e.g. a DPIA) does this FRIA build on?", t::dpv::hasData, I,
           K::Reference, {}, false, "An earlier FRIA or a data protection impact assessment may be reused."),
       ask("outcome-notes", "Anything else the outcome should take into account?", t::dct::description,
           Stage::Outcome, K::Text, {}, false, "")},
      std::nullopt});

  q.sections.push_back(Section{
      "notification",
      "Notification of the market surveillance authority",
      {ask("authority", "Which market surveillance authority will be notified?", t::dpv::hasRecipient,
           Stage::Notification, K::Reference, {}, false, "Leave empty if an exemption applies.")},
      std::nullopt});
  return q;
}

}  // namespace

const Questionnaire& builtin_questionnaire() {
  static const Questionnaire q = build();
  return q;
}

}  // namespace fria::questionnaire
