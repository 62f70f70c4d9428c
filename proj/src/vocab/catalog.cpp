#include "fria/vocab/terms.h"
#include "fria/vocab/vocabulary.h"

namespace fria::vocab {

namespace {

using rdf::Iri;
namespace t = terms;

constexpr const char* kArt27 = "AI Act Art. 27";
constexpr const char* kDpvSrc = "Data Privacy Vocabulary (DPV)";
constexpr const char* kDcmiSrc = "DCMI Metadata Terms";

class CatalogBuilder {
 public:
  void cls(const Iri& iri, std::set<Iri> parents, std::string label, std::string definition, std::string source,
           std::string note = {}) {
    add(iri, TermKind::Class, std::move(parents), std::move(label), std::move(definition), std::move(source),
        std::move(note));
  }
  void prop(const Iri& iri, std::set<Iri> parents, std::string label, std::string definition, std::string source) {
    add(iri, TermKind::Property, std::move(parents), std::move(label), std::move(definition), std::move(source), {});
  }
  void inst(const Iri& iri, const Iri& cls, std::string label, std::string definition, std::string source,
            std::string note = {}) {
    add(iri, TermKind::Instance, {cls}, std::move(label), std::move(definition), std::move(source), std::move(note));
  }

  std::vector<TermDef> take() { return std::move(terms_); }

 private:
  void add(const Iri& iri, TermKind kind, std::set<Iri> parents, std::string label, std::string definition,
           std::string source, std::string note) {
    terms_.push_back(TermDef{iri, kind, std::move(parents), std::move(label), std::move(definition),
                             std::move(source), std::move(note), std::nullopt});
  }

  std::vector<TermDef> terms_;
};

void add_fria_terms(CatalogBuilder& b) {
  const std::string src27_1 = std::string(kArt27) + "(1)";

  // necessity
  b.cls(t::fria::FRIANecessityAssessment, {t::eu_aiact::FRIA}, "FRIA Necessity Assessment",
        "Assessment of whether a deployer is obliged to carry out a FRIA for an AI system", src27_1);
  b.cls(t::fria::FRIANecessityStatus, {t::dpv::Status}, "FRIA Necessity Status",
        "Status recording the result of a FRIA necessity assessment", src27_1);
  b.inst(t::fria::FRIARequired, t::fria::FRIANecessityStatus, "FRIA Required",
         "A FRIA must be carried out before the AI system is put into use", src27_1);
  b.inst(t::fria::FRIANotRequired, t::fria::FRIANecessityStatus, "FRIA Not Required",
         "The conditions that oblige a FRIA do not apply", src27_1);

  // procedure and inputs
  b.cls(t::fria::FRIAProcedure, {t::eu_aiact::FRIA}, "FRIA Procedure",
        "The process of carrying out a FRIA and the information it collects", src27_1);
  b.cls(t::fria::AIProcess, {t::dpv::Process}, "AI Process",
        "Description of a deployer process in which the AI system is used", src27_1 + "(a)");
  b.cls(t::fria::IntendedUse, {t::tech::IntendedUse}, "Intended Use",
        "Contextual application of an AI system's intended purpose in a specific deployment", src27_1 + "(b)");

  // outcome
  b.cls(t::fria::FRIAOutcome, {t::eu_aiact::FRIA}, "FRIA Outcome",
        "Determination of the result of a FRIA procedure", src27_1);
  b.cls(t::fria::FRIAOutcomeStatus, {t::dpv::Status}, "FRIA Outcome Status", "Status expressing the result of a FRIA",
        src27_1);
  b.inst(t::fria::FRIAOutcomeUnacceptableRisk, t::fria::FRIAOutcomeStatus, "FRIA Outcome: Unacceptable Risk",
         "The AI system poses an unacceptable risk to fundamental rights and must not be used", src27_1);
  b.inst(t::fria::FRIAOutcomeHighResidualRisk, t::fria::FRIAOutcomeStatus, "FRIA Outcome: High Residual Risk",
         "Residual risk to fundamental rights remains high; use cannot continue", src27_1);
  b.inst(t::fria::FRIAOutcomeRisksAcceptable, t::fria::FRIAOutcomeStatus, "FRIA Outcome: Risks Acceptable",
         "Residual risks to fundamental rights remain but use may continue", src27_1);
  b.inst(t::fria::FRIAOutcomeRisksMitigated, t::fria::FRIAOutcomeStatus, "FRIA Outcome: Risks Mitigated",
         "All identified risks to fundamental rights are mitigated; use may continue", src27_1);

  // notification
  const std::string src27_3 = std::string(kArt27) + "(3)";
  b.cls(t::fria::FRIANotificationAssessment, {t::eu_aiact::FRIA}, "FRIA Notification Assessment",
        "Assessment of whether and how FRIA results are notified to the market surveillance authority", src27_3);
  b.cls(t::fria::FRIANotificationStatus, {t::dpv::Status}, "FRIA Notification Status",
        "Status of the notification of FRIA results", src27_3);
  b.inst(t::fria::FRIANotificationNeeded, t::fria::FRIANotificationStatus, "FRIA Notification Needed",
         "Notification has been identified as needed; sending or exemption is still to be settled", src27_3);
  b.inst(t::fria::FRIANotificationNotSent, t::fria::FRIANotificationStatus, "FRIA Notification Not Sent",
         "Notification is required and prepared but has not been sent", src27_3);
  b.inst(t::fria::FRIANotificationSent, t::fria::FRIANotificationStatus, "FRIA Notification Sent",
         "Notification has been sent to the authority", src27_3);
  b.inst(t::fria::FRIANotificationExempt, t::fria::FRIANotificationStatus, "FRIA Notification Exempt",
         "The deployer is exempt from the obligation to notify", src27_3 + "; AI Act Art. 46(1)");
  b.cls(t::fria::FRIANotice, {t::dpv::Notice}, "FRIA Notice",
        "Notice communicating FRIA results to a market surveillance authority", src27_3);

  // questionnaire and tool
  const std::string src27_5 = std::string(kArt27) + "(5)";
  b.cls(t::fria::FRIAQuestionnaire, {t::tech::Documentation}, "FRIA Questionnaire",
        "Template questionnaire given to deployers to fill out for a FRIA", src27_5);
  b.cls(t::fria::FRIACompletedQuestionnaire, {t::fria::FRIAQuestionnaire}, "FRIA Completed Questionnaire",
        "A questionnaire filled out by a deployer, which may accompany the notification", src27_5 + "; " + src27_3);
  b.cls(t::fria::FRIATool, {t::dpv::Technology}, "FRIA Tool",
        "Technology used to carry out or support steps of a FRIA", src27_5);
}

void add_dct_terms(CatalogBuilder& b) {
  auto p = [&](const Iri& iri, const char* label, const char* def) { b.prop(iri, {}, label, def, kDcmiSrc); };
  p(t::dct::created, "created", "Date of creation of the resource");
  p(t::dct::modified, "modified", "Date on which the resource was changed");
  p(t::dct::dateSubmitted, "date submitted", "Date of submission of the resource");
  p(t::dct::dateAccepted, "date accepted", "Date of acceptance of the resource");
  p(t::dct::temporal, "temporal coverage", "Temporal characteristics of the resource");
  p(t::dct::valid, "valid", "Date (often a range) of validity of the resource");
  p(t::dct::conformsTo, "conforms to", "An established standard or code to which the resource conforms");
  p(t::dct::title, "title", "A name given to the resource");
  p(t::dct::description, "description", "An account of the resource");
  p(t::dct::identifier, "identifier", "An unambiguous reference to the resource within a given context");
  p(t::dct::isVersionOf, "is version of", "A related resource of which the described resource is a version");
  p(t::dct::subject, "subject", "A topic of the resource");
  p(t::dct::coverage, "coverage", "The spatial or temporal topic of the resource or its applicability");
  p(t::dct::publisher, "publisher", "An entity responsible for making the resource available");
  p(t::dct::contributor, "contributor", "An entity responsible for making contributions to the resource");
  p(t::dct::provenance, "provenance", "A statement of changes in ownership and custody of the resource");
  p(t::dct::creator, "creator", "An entity responsible for making the resource");
  p(t::dct::source, "source", "A related resource from which the described resource is derived");
}

void add_dpv_terms(CatalogBuilder& b) {
  const std::string s = kDpvSrc;
  b.cls(t::dpv::ImpactAssessment, {}, "Impact Assessment", "Calculating or determining the likelihood of impact",
        s);
  b.cls(t::dpv::FRIA, {t::dpv::ImpactAssessment}, "Fundamental Rights Impact Assessment",
        "Impact assessment concerning fundamental rights and freedoms", s);
  b.cls(t::dpv::DPIA, {t::dpv::ImpactAssessment}, "Data Protection Impact Assessment",
        "Impact assessment concerning data protection; may be reused as FRIA input", s + "; AI Act Art. 27(4)");
  b.cls(t::dpv::Status, {}, "Status", "The status or state of something", s);
  b.cls(t::dpv::Process, {}, "Process", "An action, activity, or method", s);
  b.cls(t::dpv::Purpose, {}, "Purpose", "Objective or goal for which something is done", s);

  b.cls(t::dpv::Duration, {}, "Duration", "The length or extent of time", s + "; AI Act Art. 27(1)(b)");
  b.inst(t::dpv::EndlessDuration, t::dpv::Duration, "Endless Duration", "Duration without an end", s);
  b.inst(t::dpv::FixedDuration, t::dpv::Duration, "Fixed Duration", "Duration that is fixed", s);
  b.inst(t::dpv::TemporalDuration, t::dpv::Duration, "Temporal Duration", "Duration that is temporary", s);
  b.inst(t::dpv::UntilEventDuration, t::dpv::Duration, "Until Event Duration",
         "Duration that lasts until an event occurs", s);
  b.inst(t::dpv::UntilTimeDuration, t::dpv::Duration, "Until Time Duration",
         "Duration that lasts until a specific time", s);

  b.cls(t::dpv::Frequency, {}, "Frequency", "The frequency or information about periods and repetitions",
        s + "; AI Act Art. 27(1)(b)");
  b.inst(t::dpv::ContinuousFrequency, t::dpv::Frequency, "Continuous Frequency", "Frequency where occurrences are continuous",
         s, "enumerated in the source material with the spelling \"continous\"");
  b.inst(t::dpv::OftenFrequency, t::dpv::Frequency, "Often Frequency", "Frequency where occurrences are often", s);
  b.inst(t::dpv::SingularFrequency, t::dpv::Frequency, "Singular Frequency",
         "Frequency where occurrences are singular i.e. they take place only once", s);
  b.inst(t::dpv::SporadicFrequency, t::dpv::Frequency, "Sporadic Frequency",
         "Frequency where occurrences are sporadic or infrequent", s);

  b.cls(t::dpv::DataSubject, {}, "Data Subject", "The individual (or category of individuals) whose data is processed",
        s);
  b.cls(t::dpv::Likelihood, {}, "Likelihood", "The likelihood or probability of something occurring",
        s + "; AI Act Art. 27(1)(c)");
  b.cls(t::dpv::Consequence, {}, "Consequence", "The consequence(s) possible or arising from a context", s);
  b.cls(t::dpv::Impact, {t::dpv::Consequence}, "Impact", "The impact(s) possible or arising as a consequence", s);
  b.cls(t::dpv::Risk, {}, "Risk", "A risk or possibility of something going wrong", s + "; AI Act Art. 27(1)(d)");
  b.cls(t::dpv::HumanInvolvement, {}, "Human Involvement", "The involvement of humans in specified context", s);
  b.cls(t::dpv::HumanInvolvementForOversight, {t::dpv::HumanInvolvement}, "Human Involvement for Oversight",
        "Human involvement for the purposes of exercising oversight", s + "; AI Act Art. 27(1)(e)");
  b.cls(t::dpv::RiskMitigationMeasure, {}, "Risk Mitigation Measure", "Measures intended to mitigate risks",
        s + "; AI Act Art. 27(1)(f)");
  b.cls(t::dpv::GovernanceProcedures, {t::dpv::RiskMitigationMeasure}, "Governance Procedures",
        "Procedures related to governance, e.g. internal governance and complaint mechanisms",
        s + "; AI Act Art. 27(1)(f)");
  b.cls(t::dpv::IncidentManagementProcedures, {t::dpv::GovernanceProcedures}, "Incident Management Procedures",
        "Procedures related to management of incidents", s);
  b.cls(t::dpv::IncidentReportingCommunication, {t::dpv::GovernanceProcedures}, "Incident Reporting Communication",
        "Procedures related to reporting and communicating incidents", s);
  b.cls(t::dpv::Right, {}, "Right", "A right is a legal, social, or ethical principle of freedom or entitlement", s);
  b.cls(t::dpv::Notice, {}, "Notice", "A notice is an artefact for providing information, choices, or controls", s);
  b.cls(t::dpv::Technology, {}, "Technology", "The technology, technological implementation, or any techniques", s);

  auto p = [&](const Iri& iri, std::set<Iri> parents, const char* label, const char* def) {
    b.prop(iri, std::move(parents), label, def, s);
  };
  p(t::dpv::hasAssessment, {}, "has assessment", "Indicates the assessment with information on the context");
  p(t::dpv::hasStatus, {}, "has status", "Indicates the status of specified concept");
  p(t::dpv::hasProcess, {}, "has process", "Indicates association with a Process");
  p(t::dpv::hasPurpose, {}, "has purpose", "Indicates association with Purpose");
  p(t::dpv::hasDuration, {}, "has duration", "Indicates information about duration");
  p(t::dpv::hasFrequency, {}, "has frequency", "Indicates the frequency with which something takes place");
  p(t::dpv::hasDataSubject, {}, "has data subject", "Indicates association with a category of subjects");
  p(t::dpv::hasLikelihood, {}, "has likelihood", "Indicates the likelihood associated with a concept");
  p(t::dpv::hasConsequence, {}, "has consequence", "Indicates consequence(s) possible or arising");
  p(t::dpv::hasImpact, {t::dpv::hasConsequence}, "has impact", "Indicates impact(s) possible or arising");
  p(t::dpv::hasConsequenceOn, {}, "has consequence on", "Indicates the thing affected by a consequence");
  p(t::dpv::hasImpactOn, {t::dpv::hasConsequenceOn}, "has impact on", "Indicates the thing impacted");
  p(t::dpv::hasRisk, {}, "has risk", "Indicates applicability of Risk for this concept");
  p(t::dpv::hasHumanInvolvement, {}, "has human involvement", "Indicates involvement of humans");
  p(t::dpv::hasTechnicalOrganisationalMeasure, {}, "has technical and organisational measure",
    "Indicates use or applicability of a technical or organisational measure");
  p(t::dpv::isMitigatedByMeasure, {}, "is mitigated by measure", "Indicates the risk is mitigated by the measure");
  p(t::dpv::hasData, {}, "has data", "Indicates associated data or existing assessments reused as input");
  p(t::dpv::hasRight, {}, "has right", "Indicates use or applicability of a Right");
  p(t::dpv::hasNotice, {}, "has notice", "Indicates the use or applicability of a Notice");
  p(t::dpv::hasRecipient, {}, "has recipient", "Indicates the recipient of information");
  p(t::dpv::isImplementedUsingTechnology, {}, "is implemented using technology",
    "Indicates implementation details such as technologies or processes");
}

void add_extension_vocabularies(CatalogBuilder& b) {
  const std::string tech_src = "DPV TECH extension";
  b.cls(t::tech::IntendedUse, {}, "Intended Use", "Indicates the intended use of a technology", tech_src);
  b.cls(t::tech::Documentation, {}, "Documentation", "Documentation about a technology", tech_src);
  b.prop(t::tech::hasIntendedUse, {}, "has intended use", "Indicates the intended use of a technology", tech_src);
  b.prop(t::tech::hasDocumentation, {}, "has documentation", "Indicates documentation for a technology", tech_src);

  const std::string risk_src = "DPV RISK extension";
  b.cls(t::risk::Harm, {}, "Harm", "Physical, psychological, material, or other harm", risk_src + "; AI Act Art. 27(1)(d)");
  b.inst(t::risk::PhysicalHarm, t::risk::Harm, "Physical Harm", "Harm to the body or physical wellbeing", risk_src);
  b.inst(t::risk::PsychologicalHarm, t::risk::Harm, "Psychological Harm", "Harm to mental wellbeing", risk_src);
  b.inst(t::risk::Discrimination, t::risk::Harm, "Discrimination",
         "Unfair or unequal treatment of individuals or groups", risk_src);
  b.cls(t::risk::ImpactToRights, {t::dpv::Impact}, "Impact to Rights", "Impact on rights and freedoms", risk_src);
  b.inst(t::risk::HighLikelihood, t::dpv::Likelihood, "High Likelihood", "Level of likelihood that is high", risk_src);
  b.inst(t::risk::ModerateLikelihood, t::dpv::Likelihood, "Moderate Likelihood",
         "Level of likelihood that is moderate", risk_src);
  b.inst(t::risk::LowLikelihood, t::dpv::Likelihood, "Low Likelihood", "Level of likelihood that is low", risk_src);

  b.cls(t::ai::AISystem, {t::dpv::Technology}, "AI System", "A machine-based system as defined by the AI Act",
        "DPV AI extension; AI Act Art. 3(1)");

  const std::string aiact_src = "DPV EU AI Act extension";
  b.cls(t::eu_aiact::FRIA, {t::dpv::FRIA}, "Fundamental Rights Impact Assessment (AI Act)",
        "A FRIA as defined by the AI Act", aiact_src + "; AI Act Art. 27");
  b.cls(t::eu_aiact::IntendedPurpose, {t::dpv::Purpose}, "Intended Purpose",
        "The use for which an AI system is intended by the provider", aiact_src + "; AI Act Art. 27(1)(a)",
        "also proposed as a subclass of dpv:Process; recorded here as an annotation only");
  b.cls(t::eu_aiact::InstructionsForUse, {t::tech::Documentation}, "Instructions for Use",
        "Information provided by the provider on the AI system's intended purpose and proper use",
        aiact_src + "; AI Act Art. 27(1)(e)");

  const std::string charter = "EU Charter of Fundamental Rights, Art. ";
  auto right = [&](const Iri& iri, const char* label, const char* article) {
    b.inst(iri, t::dpv::Right, label, std::string("Fundamental right: ") + label, charter + article);
  };
  right(t::eu_rights::HumanDignity, "Human Dignity", "1");
  right(t::eu_rights::RespectForPrivateAndFamilyLife, "Respect for Private and Family Life", "7");
  right(t::eu_rights::ProtectionOfPersonalData, "Protection of Personal Data", "8");
  right(t::eu_rights::FreedomOfExpressionAndInformation, "Freedom of Expression and Information", "11");
  right(t::eu_rights::NonDiscrimination, "Non-Discrimination", "21");
  right(t::eu_rights::RightsOfTheChild, "Rights of the Child", "24");
  right(t::eu_rights::EffectiveRemedyAndFairTrial, "Effective Remedy and Fair Trial", "47");
}

void add_local_extension(CatalogBuilder& b) {
  const std::string src = "FRIA engine extension";
  b.cls(t::fria_ext::HumanSubjectCategory, {}, "Human Subject Category",
        "Category of natural persons or groups likely to be affected by the use of an AI system",
        src + "; AI Act Art. 27(1)(c)",
        "stands in for either a broadened dpv:DataSubject (covering data and AI subjects) or a new dpv:HumanSubject "
        "parent of dpv:DataSubject and airo:AISubject; neither upstream change is asserted");
  auto subject = [&](const Iri& iri, const char* label, const char* def) {
    b.inst(iri, t::fria_ext::HumanSubjectCategory, label, def, src);
  };
  subject(t::fria_ext::Adults, "Adults", "Natural persons who are adults");
  subject(t::fria_ext::Minors, "Minors", "Natural persons below the age of majority");
  subject(t::fria_ext::Employees, "Employees", "Persons employed by the deployer");
  subject(t::fria_ext::Tourists, "Tourists", "Persons visiting as tourists");
  subject(t::fria_ext::VulnerablePersons, "Vulnerable Persons", "Persons in a situation of vulnerability");

  b.cls(t::fria_ext::ResidualRiskLevel, {}, "Residual Risk Level",
        "Level of risk to fundamental rights remaining after mitigation", src);
  auto level = [&](const Iri& iri, const char* label, const char* def) {
    b.inst(iri, t::fria_ext::ResidualRiskLevel, label, def, src);
  };
  level(t::fria_ext::ResidualRiskNone, "No Residual Risk", "The risk is fully mitigated");
  level(t::fria_ext::ResidualRiskAcceptable, "Acceptable Residual Risk", "Residual risk remains at an acceptable level");
  level(t::fria_ext::ResidualRiskHigh, "High Residual Risk", "Residual risk remains high");
  level(t::fria_ext::ResidualRiskUnacceptable, "Unacceptable Residual Risk", "Residual risk is unacceptable");

  b.prop(t::fria_ext::conditionFlag, {}, "condition flag",
         "A declared necessity condition as \"name=true|false\"", src + "; AI Act Art. 27(1)");
  b.prop(t::fria_ext::hasResidualRiskLevel, {}, "has residual risk level", "Residual risk level of a risk", src);
  b.prop(t::fria_ext::isRiskAccepted, {}, "is risk accepted", "Whether the deployer accepts the residual risk", src);
  b.prop(t::fria_ext::exemptionBasis, {}, "exemption basis", "Legal basis for an exemption from notification",
         src + "; AI Act Art. 46(1)");
  b.prop(t::fria_ext::hasQuestionnaire, {}, "has questionnaire", "Links a FRIA to a completed questionnaire",
         src + "; AI Act Art. 27(5)");
  b.prop(t::fria_ext::requiresReassessment, {}, "requires reassessment",
         "Marks a FRIA whose information was updated and must be reassessed", src + "; AI Act Art. 27(2)");

  b.inst(t::fria_ext::FRIAComplianceEngine, t::fria::FRIATool, "FRIA compliance engine",
         "This engine, used to record and process the FRIA", src + "; AI Act Art. 27(5)");
  b.inst(t::fria_ext::BuiltinQuestionnaire, t::fria::FRIAQuestionnaire, "Built-in FRIA questionnaire",
         "Questionnaire covering the information required for a FRIA", src + "; AI Act Art. 27(5)");

  auto impact = [&](const char* local, const Iri& right, const char* label) {
    b.cls(ns::in(ns::kFriaExt, local), {t::risk::ImpactToRights}, label,
          std::string("Impact on the right: ") + label + " (" + right.str() + ")", src);
  };
  impact("ImpactOnHumanDignity", t::eu_rights::HumanDignity, "Human Dignity");
  impact("ImpactOnRespectForPrivateAndFamilyLife", t::eu_rights::RespectForPrivateAndFamilyLife,
         "Respect for Private and Family Life");
  impact("ImpactOnProtectionOfPersonalData", t::eu_rights::ProtectionOfPersonalData, "Protection of Personal Data");
  impact("ImpactOnFreedomOfExpressionAndInformation", t::eu_rights::FreedomOfExpressionAndInformation,
         "Freedom of Expression and Information");
  impact("ImpactOnNonDiscrimination", t::eu_rights::NonDiscrimination, "Non-Discrimination");
  impact("ImpactOnRightsOfTheChild", t::eu_rights::RightsOfTheChild, "Rights of the Child");
  impact("ImpactOnEffectiveRemedyAndFairTrial", t::eu_rights::EffectiveRemedyAndFairTrial,
         "Effective Remedy and Fair Trial");
}

Vocabulary build_catalog() {
  CatalogBuilder b;
  add_fria_terms(b);
  add_dct_terms(b);
  add_dpv_terms(b);
  add_extension_vocabularies(b);
  add_local_extension(b);

  rdf::PrefixMap namespaces{
      {"fria", Iri(ns::kFria)},       {"dct", Iri(ns::kDct)},   {"dpv", Iri(ns::kDpv)},
      {"tech", Iri(ns::kTech)},       {"risk", Iri(ns::kRisk)}, {"ai", Iri(ns::kAi)},
      {"eu-aiact", Iri(ns::kEuAiact)},
  };
  rdf::PrefixMap support{
      {"rdf", Iri(ns::kRdf)},           {"rdfs", Iri(ns::kRdfs)},           {"skos", Iri(ns::kSkos)},
      {"xsd", Iri(ns::kXsd)},           {"fria-ext", Iri(ns::kFriaExt)},    {"eu-rights", Iri(ns::kEuRights)},
  };
  return Vocabulary(b.take(), std::move(namespaces), std::move(support));
}

}  // namespace

const Vocabulary& catalog() {
  static const Vocabulary v = build_catalog();
  return v;
}

}  // namespace fria::vocab
