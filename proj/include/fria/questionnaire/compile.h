#pragma once

#include <optional>

#include "fria/model/record.h"
#include "fria/questionnaire/session.h"
#include "fria/rdf/graph.h"

namespace fria::questionnaire {

// What a compiled session contributes to its record.
struct Compiled {
  rdf::Graph fragment;
  Iri completed_questionnaire;
  // Present when the necessity section was answered.
  std::optional<model::Necessity> necessity;
  // Present when any input question was answered.
  std::optional<model::ProcedureInputs> inputs;
  // Triples of the fragment that describe the completed questionnaire node.
  rdf::Graph questionnaire_triples;
};

// The completed questionnaire node of a record.
Iri completed_questionnaire_iri(const Iri& record);

// Throws MissingAnswersError listing unanswered required keys, and
// SessionClosedError for a compiled session.
Compiled compile(const Session& s, const Questionnaire& q, const vocab::Vocabulary& v);

// The session marked compiled.
Session mark_compiled(const Session& s);

}  // namespace fria::questionnaire
