#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "fria/questionnaire/questionnaire.h"
#include "fria/rdf/datetime.h"

namespace fria::questionnaire {

class SessionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class AnswerTypeError : public SessionError {
 public:
  using SessionError::SessionError;
};

class UnknownQuestionError : public SessionError {
 public:
  using SessionError::SessionError;
};

class SessionClosedError : public SessionError {
 public:
  using SessionError::SessionError;
};

class MissingAnswersError : public SessionError {
 public:
  explicit MissingAnswersError(std::vector<std::string> missing);
  const std::vector<std::string>& missing() const noexcept { return missing_; }

 private:
  std::vector<std::string> missing_;
};

// text, boolean, iri_choice / reference, iri_multi, date
using AnswerValue = std::variant<std::string, bool, Iri, std::set<Iri>, rdf::Timestamp>;

enum class SessionStatus { Open, Compiled };

struct Session {
  std::string id;
  Iri questionnaire;
  Iri record;
  std::map<std::string, AnswerValue> answers;
  // Next unanswered required question; none once all are answered.
  std::optional<std::string> cursor;
  SessionStatus status = SessionStatus::Open;

  friend bool operator==(const Session&, const Session&) = default;
};

// Answer key -> question and instance number (1 for a bare id).
struct AnswerKey {
  const Question* question;
  const Section* section;
  int instance;
};
// Throws UnknownQuestionError.
AnswerKey resolve_key(const Questionnaire& q, std::string_view key);

Session new_session(const Questionnaire& q, const Iri& record, std::string id);

// Throws AnswerTypeError when the value does not fit the question.
void check_answer(const Question& question, const AnswerValue& value, const vocab::Vocabulary& v);

// Records (or overwrites) an answer and advances the cursor.
Session answer(const Session& s, const Questionnaire& q, const std::string& key, const AnswerValue& value,
               const vocab::Vocabulary& v);
// Removes an answer; unknown or absent keys are ignored.
Session clear_answer(const Session& s, const Questionnaire& q, const std::string& key);

std::optional<std::string> next_question(const Session& s, const Questionnaire& q);
// Required keys still unanswered, including those of started extra entries.
std::vector<std::string> missing_answers(const Session& s, const Questionnaire& q);

// Back to Open after the record is reopened.
Session reopen_session(const Session& s, const Questionnaire& q);

// Answer values in JSON: text and dates as strings, booleans as booleans,
// IRIs as strings (prefixed or full), iri_multi as arrays of strings.
AnswerValue answer_from_json(const Question& question, const nlohmann::json& j, const vocab::Vocabulary& v);
// Command-line form: booleans true/false/yes/no, iri_multi comma separated.
AnswerValue answer_from_text(const Question& question, const std::string& text, const vocab::Vocabulary& v);
nlohmann::json answer_to_json(const AnswerValue& value);

nlohmann::json to_json(const Session& s);
// Answers are type-checked again and the cursor recomputed.
Session session_from_json(const nlohmann::json& j, const Questionnaire& q, const vocab::Vocabulary& v);

// Question description for clients: prompt, kind, resolved choices.
nlohmann::json question_json(const Question& question, const vocab::Vocabulary& v);

}  // namespace fria::questionnaire
