#pragma once

#include "fria/model/record.h"

namespace fria::workflow {

class UnknownStatusError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Severity-max over the residual risk evidence: any unacceptable entry
// gives UnacceptableRisk; else any high, unaccepted entry gives
// HighResidualRisk; else any acceptable or high-but-accepted entry gives
// RisksAcceptable; else RisksMitigated.
rdf::Iri derive_outcome(const model::ProcedureInputs& inputs);

// False for UnacceptableRisk and HighResidualRisk. Throws
// UnknownStatusError for anything but the four outcome statuses.
bool deployment_permitted(const rdf::Iri& status);

// 0 (mitigated) .. 3 (unacceptable). Throws UnknownStatusError.
int outcome_severity(const rdf::Iri& status);

}  // namespace fria::workflow
