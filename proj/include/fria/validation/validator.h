#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "fria/rdf/graph.h"
#include "fria/validation/shapes.h"

namespace fria::validation {

struct Violation {
  rdf::Term focus;
  std::string shape_id;
  Iri path;
  // "min_count", "max_count", "value_in", "value_class" or "datatype"
  std::string constraint_kind;
  std::string message;
  std::string source;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  bool conforms = true;
  std::vector<Violation> violations;

  friend bool operator==(const ValidationReport&, const ValidationReport&) = default;
};

// Blank node foci are reported under their canonical labels, and
// violations are sorted by (focus, shape, path, kind, message).
ValidationReport validate(const rdf::Graph& g, const std::vector<Shape>& shapes, const vocab::Vocabulary& v);

// Plain text, one line per violation.
std::string to_text(const ValidationReport& r, const vocab::Vocabulary& v);
// {"conforms": bool, "violations": [{focus, shape, path, constraint, message, source}]}
nlohmann::json to_json(const ValidationReport& r);

// IRI string or "_:label".
std::string term_key(const rdf::Term& t);

}  // namespace fria::validation
