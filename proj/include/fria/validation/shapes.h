#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fria/vocab/vocabulary.h"

namespace fria::validation {

using rdf::Iri;

class ShapeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PropertyConstraint {
  Iri path;
  int min_count = 0;
  std::optional<int> max_count;
  // Each value must be an instance of this class.
  std::optional<Iri> value_class;
  // Each value must be one of these IRIs.
  std::optional<std::set<Iri>> value_in;
  // Each value must be a literal of this datatype.
  std::optional<Iri> datatype;
  std::string message;
  // Legal citation, e.g. "AI Act Art. 27(1)(b)".
  std::string source;
};

// Restricts a shape to focus nodes that carry (focus, path, value).
struct TargetFilter {
  Iri path;
  Iri value;
};

struct Shape {
  std::string id;
  Iri target_class;
  std::vector<PropertyConstraint> constraints;
  std::optional<TargetFilter> when;
};

// The built-in shape catalog. Value sets for statuses include catalogued
// refinements (skos:broader) of each status, so jurisdiction extensions
// loaded into `v` validate.
std::vector<Shape> builtin_shapes(const vocab::Vocabulary& v);
std::vector<Shape> builtin_shapes();

// Throws ShapeError on duplicate ids, unknown target or value classes, or
// min_count > max_count.
void check_shapes(const std::vector<Shape>& shapes, const vocab::Vocabulary& v);

}  // namespace fria::validation
