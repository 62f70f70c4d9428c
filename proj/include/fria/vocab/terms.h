#pragma once

// IRI constants for every term the engine refers to in code.
//
// Local names are kept exactly as they appear in the IRIs so code reads
// like the Turtle it produces.

#include "fria/rdf/term.h"

namespace fria::ns {

inline constexpr const char* kFria = "https://example.com/FRIA#";
inline constexpr const char* kFriaExt = "https://example.com/FRIA-ext#";
inline constexpr const char* kDct = "http://purl.org/dc/terms/";
inline constexpr const char* kDpv = "https://w3id.org/dpv#";
inline constexpr const char* kTech = "https://w3id.org/dpv/tech#";
inline constexpr const char* kRisk = "https://w3id.org/dpv/risk#";
inline constexpr const char* kAi = "https://w3id.org/dpv/ai#";
inline constexpr const char* kEuAiact = "https://w3id.org/dpv/legal/eu/aiact#";
inline constexpr const char* kEuRights = "https://w3id.org/dpv/legal/eu/rights#";
inline constexpr const char* kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr const char* kRdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr const char* kSkos = "http://www.w3.org/2004/02/skos/core#";
inline constexpr const char* kXsd = "http://www.w3.org/2001/XMLSchema#";

inline rdf::Iri in(const char* ns, const char* local) { return rdf::Iri(std::string(ns) + local); }

}  // namespace fria::ns

#define FRIA_TERM(ns_const, local) inline const ::fria::rdf::Iri local = ::fria::ns::in(::fria::ns::ns_const, #local)

namespace fria::terms {

namespace rdf {
FRIA_TERM(kRdf, type);
FRIA_TERM(kRdf, Property);
}  // namespace rdf

namespace rdfs {
FRIA_TERM(kRdfs, Class);
FRIA_TERM(kRdfs, subClassOf);
FRIA_TERM(kRdfs, subPropertyOf);
FRIA_TERM(kRdfs, label);
}  // namespace rdfs

namespace skos {
FRIA_TERM(kSkos, Concept);
FRIA_TERM(kSkos, definition);
FRIA_TERM(kSkos, note);
FRIA_TERM(kSkos, broader);
}  // namespace skos

namespace dct {
FRIA_TERM(kDct, created);
FRIA_TERM(kDct, modified);
FRIA_TERM(kDct, dateSubmitted);
FRIA_TERM(kDct, dateAccepted);
FRIA_TERM(kDct, temporal);
FRIA_TERM(kDct, valid);
FRIA_TERM(kDct, conformsTo);
FRIA_TERM(kDct, title);
FRIA_TERM(kDct, description);
FRIA_TERM(kDct, identifier);
FRIA_TERM(kDct, isVersionOf);
FRIA_TERM(kDct, subject);
FRIA_TERM(kDct, coverage);
FRIA_TERM(kDct, publisher);
FRIA_TERM(kDct, contributor);
FRIA_TERM(kDct, provenance);
FRIA_TERM(kDct, creator);
FRIA_TERM(kDct, source);
}  // namespace dct

namespace dpv {
FRIA_TERM(kDpv, FRIA);
FRIA_TERM(kDpv, DPIA);
FRIA_TERM(kDpv, ImpactAssessment);
FRIA_TERM(kDpv, Status);
FRIA_TERM(kDpv, Process);
FRIA_TERM(kDpv, Purpose);
FRIA_TERM(kDpv, Duration);
FRIA_TERM(kDpv, EndlessDuration);
FRIA_TERM(kDpv, FixedDuration);
FRIA_TERM(kDpv, TemporalDuration);
FRIA_TERM(kDpv, UntilEventDuration);
FRIA_TERM(kDpv, UntilTimeDuration);
FRIA_TERM(kDpv, Frequency);
FRIA_TERM(kDpv, ContinuousFrequency);
FRIA_TERM(kDpv, OftenFrequency);
FRIA_TERM(kDpv, SingularFrequency);
FRIA_TERM(kDpv, SporadicFrequency);
FRIA_TERM(kDpv, DataSubject);
FRIA_TERM(kDpv, Likelihood);
FRIA_TERM(kDpv, Consequence);
FRIA_TERM(kDpv, Impact);
FRIA_TERM(kDpv, Risk);
FRIA_TERM(kDpv, HumanInvolvement);
FRIA_TERM(kDpv, HumanInvolvementForOversight);
FRIA_TERM(kDpv, RiskMitigationMeasure);
FRIA_TERM(kDpv, GovernanceProcedures);
FRIA_TERM(kDpv, IncidentManagementProcedures);
FRIA_TERM(kDpv, IncidentReportingCommunication);
FRIA_TERM(kDpv, Right);
FRIA_TERM(kDpv, Notice);
FRIA_TERM(kDpv, Technology);
FRIA_TERM(kDpv, hasAssessment);
FRIA_TERM(kDpv, hasStatus);
FRIA_TERM(kDpv, hasProcess);
FRIA_TERM(kDpv, hasPurpose);
FRIA_TERM(kDpv, hasDuration);
FRIA_TERM(kDpv, hasFrequency);
FRIA_TERM(kDpv, hasDataSubject);
FRIA_TERM(kDpv, hasLikelihood);
FRIA_TERM(kDpv, hasConsequence);
FRIA_TERM(kDpv, hasImpact);
FRIA_TERM(kDpv, hasConsequenceOn);
FRIA_TERM(kDpv, hasImpactOn);
FRIA_TERM(kDpv, hasRisk);
FRIA_TERM(kDpv, hasHumanInvolvement);
FRIA_TERM(kDpv, hasTechnicalOrganisationalMeasure);
FRIA_TERM(kDpv, isMitigatedByMeasure);
FRIA_TERM(kDpv, hasData);
FRIA_TERM(kDpv, hasRight);
FRIA_TERM(kDpv, hasNotice);
FRIA_TERM(kDpv, hasRecipient);
FRIA_TERM(kDpv, isImplementedUsingTechnology);
}  // namespace dpv

namespace tech {
FRIA_TERM(kTech, IntendedUse);
FRIA_TERM(kTech, Documentation);
FRIA_TERM(kTech, hasIntendedUse);
FRIA_TERM(kTech, hasDocumentation);
}  // namespace tech

namespace risk {
FRIA_TERM(kRisk, Harm);
FRIA_TERM(kRisk, PhysicalHarm);
FRIA_TERM(kRisk, PsychologicalHarm);
FRIA_TERM(kRisk, Discrimination);
FRIA_TERM(kRisk, ImpactToRights);
FRIA_TERM(kRisk, HighLikelihood);
FRIA_TERM(kRisk, ModerateLikelihood);
FRIA_TERM(kRisk, LowLikelihood);
}  // namespace risk

namespace ai {
FRIA_TERM(kAi, AISystem);
}  // namespace ai

namespace eu_aiact {
FRIA_TERM(kEuAiact, FRIA);
FRIA_TERM(kEuAiact, IntendedPurpose);
FRIA_TERM(kEuAiact, InstructionsForUse);
}  // namespace eu_aiact

namespace eu_rights {
FRIA_TERM(kEuRights, HumanDignity);
FRIA_TERM(kEuRights, RespectForPrivateAndFamilyLife);
FRIA_TERM(kEuRights, ProtectionOfPersonalData);
FRIA_TERM(kEuRights, FreedomOfExpressionAndInformation);
FRIA_TERM(kEuRights, NonDiscrimination);
FRIA_TERM(kEuRights, RightsOfTheChild);
FRIA_TERM(kEuRights, EffectiveRemedyAndFairTrial);
}  // namespace eu_rights

namespace fria {
FRIA_TERM(kFria, FRIANecessityAssessment);
FRIA_TERM(kFria, FRIANecessityStatus);
FRIA_TERM(kFria, FRIARequired);
FRIA_TERM(kFria, FRIANotRequired);
FRIA_TERM(kFria, FRIAProcedure);
FRIA_TERM(kFria, AIProcess);
FRIA_TERM(kFria, IntendedUse);
FRIA_TERM(kFria, FRIAOutcome);
FRIA_TERM(kFria, FRIAOutcomeStatus);
FRIA_TERM(kFria, FRIAOutcomeUnacceptableRisk);
FRIA_TERM(kFria, FRIAOutcomeHighResidualRisk);
FRIA_TERM(kFria, FRIAOutcomeRisksAcceptable);
FRIA_TERM(kFria, FRIAOutcomeRisksMitigated);
FRIA_TERM(kFria, FRIANotificationAssessment);
FRIA_TERM(kFria, FRIANotificationStatus);
FRIA_TERM(kFria, FRIANotificationNeeded);
FRIA_TERM(kFria, FRIANotificationNotSent);
FRIA_TERM(kFria, FRIANotificationSent);
FRIA_TERM(kFria, FRIANotificationExempt);
FRIA_TERM(kFria, FRIANotice);
FRIA_TERM(kFria, FRIAQuestionnaire);
FRIA_TERM(kFria, FRIACompletedQuestionnaire);
FRIA_TERM(kFria, FRIATool);
}  // namespace fria

namespace fria_ext {
FRIA_TERM(kFriaExt, HumanSubjectCategory);
FRIA_TERM(kFriaExt, Adults);
FRIA_TERM(kFriaExt, Minors);
FRIA_TERM(kFriaExt, Employees);
FRIA_TERM(kFriaExt, Tourists);
FRIA_TERM(kFriaExt, VulnerablePersons);
FRIA_TERM(kFriaExt, ResidualRiskLevel);
FRIA_TERM(kFriaExt, ResidualRiskNone);
FRIA_TERM(kFriaExt, ResidualRiskAcceptable);
FRIA_TERM(kFriaExt, ResidualRiskHigh);
FRIA_TERM(kFriaExt, ResidualRiskUnacceptable);
FRIA_TERM(kFriaExt, conditionFlag);
FRIA_TERM(kFriaExt, hasResidualRiskLevel);
FRIA_TERM(kFriaExt, isRiskAccepted);
FRIA_TERM(kFriaExt, exemptionBasis);
FRIA_TERM(kFriaExt, hasQuestionnaire);
FRIA_TERM(kFriaExt, requiresReassessment);
FRIA_TERM(kFriaExt, FRIAComplianceEngine);
FRIA_TERM(kFriaExt, BuiltinQuestionnaire);
}  // namespace fria_ext

}  // namespace fria::terms

#undef FRIA_TERM
