#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "fria/rdf/graph.h"
#include "fria/vocab/vocabulary.h"

namespace fria::validation {

class CqError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CqAnswer {
  int cq = 0;  // 1..8
  std::vector<std::string> variables;
  std::vector<std::vector<rdf::Term>> bindings;
  std::optional<std::string> empty_reason;

  friend bool operator==(const CqAnswer&, const CqAnswer&) = default;
};

// The question text of CQ n. Throws CqError for n outside 1..8.
const std::string& cq_question(int n);
// "5", "CQ5" or "cq5" -> 5. Throws CqError.
int parse_cq_id(std::string_view text);

// Runs the fixed query for CQ n against the record `fria` in `g`. Blank
// nodes in bindings carry canonical labels; rows are sorted and unique.
// Throws CqError for an unknown id or when `fria` is not typed as a FRIA.
CqAnswer answer_cq(const rdf::Graph& g, const rdf::Iri& fria, int cq, const vocab::Vocabulary& v);

// Terms are written in N-Triples form.
nlohmann::json to_json(const CqAnswer& a);
std::string to_text(const CqAnswer& a, const vocab::Vocabulary& v);

}  // namespace fria::validation
