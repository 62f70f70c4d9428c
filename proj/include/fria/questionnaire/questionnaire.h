#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fria/rdf/term.h"
#include "fria/validation/shapes.h"
#include "fria/vocab/vocabulary.h"

namespace fria::questionnaire {

using rdf::Iri;

// A questionnaire definition is malformed or refers to unknown terms.
class QuestionnaireError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Stage { Necessity, Inputs, Outcome, Notification };

std::string_view to_string(Stage s);
std::optional<Stage> stage_from_string(std::string_view s);

enum class AnswerKindTag { Text, Date, IriChoice, IriMulti, Boolean, Reference };

std::string_view to_string(AnswerKindTag k);
std::optional<AnswerKindTag> answer_kind_from_string(std::string_view s);

struct AnswerKind {
  AnswerKindTag tag = AnswerKindTag::Text;
  // Only for iri_choice / iri_multi.
  std::optional<Iri> cls;

  friend bool operator==(const AnswerKind&, const AnswerKind&) = default;
};

struct Question {
  std::string id;
  std::string prompt;
  Iri maps_to;
  Stage target_stage = Stage::Inputs;
  AnswerKind answer_kind;
  bool required = false;
  std::string guidance;
  // Text answers with a node class mint a local node of that class that
  // carries the text as dct:description.
  std::optional<Iri> node_class;

  friend bool operator==(const Question&, const Question&) = default;
};

// A section whose answers describe one linked node per instance (a risk,
// an impact, a measure). Instance 1 answers use the bare question id,
// further instances use "id@2", "id@3", ...
struct Entry {
  Iri link;
  Iri node_class;
  bool blank = false;
  // Fragment for IRI nodes (R#name, R#name-2, ...), label stem for blank ones.
  std::string name;

  friend bool operator==(const Entry&, const Entry&) = default;
};

struct Section {
  std::string id;
  std::string title;
  std::vector<Question> questions;
  std::optional<Entry> entry;

  friend bool operator==(const Section&, const Section&) = default;
};

struct Questionnaire {
  Iri id;
  std::string title;
  std::vector<Section> sections;

  const Question* find(std::string_view qid) const;
  const Section* section_of(std::string_view qid) const;
  // All questions in section order.
  std::vector<const Question*> questions() const;

  friend bool operator==(const Questionnaire&, const Questionnaire&) = default;
};

// Checks the definition invariants against `v`. Throws QuestionnaireError.
void check_questionnaire(const Questionnaire& q, const vocab::Vocabulary& v);

// Values a choice question accepts: the catalog instances of the class,
// or its subclasses when it has no instances.
std::vector<Iri> choices(const Question& q, const vocab::Vocabulary& v);

// Paths a completed questionnaire is guaranteed to fill: maps_to of the
// required questions, plus the entry links of sections holding one.
std::set<Iri> covered_paths(const Questionnaire& q);
// Paths of min_count >= 1 constraints of unconditional shapes.
std::set<Iri> mandatory_paths(const std::vector<validation::Shape>& shapes);

// JSON file format. Unknown fields are rejected; IRIs may be prefixed.
Questionnaire questionnaire_from_json(const nlohmann::json& j, const vocab::Vocabulary& v);
nlohmann::json to_json(const Questionnaire& q, const vocab::Vocabulary& v);
Questionnaire load_questionnaire(const std::string& path, const vocab::Vocabulary& v);

// The questionnaire shipped with the engine.
const Questionnaire& builtin_questionnaire();

}  // namespace fria::questionnaire
