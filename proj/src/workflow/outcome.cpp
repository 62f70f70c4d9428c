#include "fria/workflow/outcome.h"

#include "fria/vocab/terms.h"

namespace fria::workflow {

namespace t = terms;
using model::ResidualLevel;

rdf::Iri derive_outcome(const model::ProcedureInputs& inputs) {
  bool unacceptable = false, high = false, acceptable = false;
  for (const auto& h : inputs.harms) {
    switch (h.residual_level) {
      case ResidualLevel::Unacceptable: unacceptable = true; break;
      case ResidualLevel::High: (h.accepted ? acceptable : high) = true; break;
      case ResidualLevel::Acceptable: acceptable = true; break;
      case ResidualLevel::None: break;
    }
  }
  if (unacceptable) return t::fria::FRIAOutcomeUnacceptableRisk;
  if (high) return t::fria::FRIAOutcomeHighResidualRisk;
  if (acceptable) return t::fria::FRIAOutcomeRisksAcceptable;
  return t::fria::FRIAOutcomeRisksMitigated;
}

int outcome_severity(const rdf::Iri& status) {
  if (status == t::fria::FRIAOutcomeRisksMitigated) return 0;
  if (status == t::fria::FRIAOutcomeRisksAcceptable) return 1;
  if (status == t::fria::FRIAOutcomeHighResidualRisk) return 2;
  if (status == t::fria::FRIAOutcomeUnacceptableRisk) return 3;
  throw UnknownStatusError("<" + status.str() + "> is not an outcome status");
}

bool deployment_permitted(const rdf::Iri& status) { return outcome_severity(status) < 2; }

}  // namespace fria::workflow
