#pragma once

#include "fria/model/record.h"
#include "fria/vocab/vocabulary.h"

namespace fria::model {

// Graph form of a record. Throws vocab::UnknownTermError when a status
// is not a catalogued term.
rdf::Graph to_graph(const FriaRecord& r, const vocab::Vocabulary& v);

// Inverse of to_graph. Triples that do not map onto a record field are
// kept in FriaRecord::remainder, so to_graph(from_graph(g)) == g up to
// blank node labels.
//
// Throws MissingFriaTypeError when `fria` is not typed eu-aiact:FRIA (or
// a subclass), MalformedStatusError for stage nodes with zero or several
// statuses, ModelError when dct:created is missing.
FriaRecord from_graph(const rdf::Graph& g, const Iri& fria, const vocab::Vocabulary& v);

// Stage readers used on graph fragments (e.g. a compiled questionnaire).
// Fields whose triples are absent or ambiguous are left empty.
ProcedureInputs read_procedure(const rdf::Graph& g, const Iri& record, const Iri& node, const vocab::Vocabulary& v);
std::optional<Iri> read_status(const rdf::Graph& g, const Iri& node);

// Prefixes used when printing record graphs.
rdf::PrefixMap record_prefixes(const vocab::Vocabulary& v);

// Removes `node`'s outgoing triples, recursing into blank nodes.
void erase_node(rdf::Graph& g, const rdf::Term& node);

}  // namespace fria::model
