#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fria/notification/notice.h"
#include "fria/questionnaire/compile.h"
#include "fria/store/record_store.h"
#include "fria/validation/competency.h"
#include "fria/validation/validator.h"
#include "fria/workflow/machine.h"

namespace fria::store {

inline constexpr const char* kDefaultBase = "https://example.com/fria-records/";

struct EngineConfig {
  std::filesystem::path store_path;
  Iri base{kDefaultBase};
  // JSON questionnaire definition replacing the builtin one.
  std::optional<std::filesystem::path> questionnaire_path;
  // Turtle file with extra catalog terms (e.g. national exemption statuses).
  std::optional<std::filesystem::path> extension_path;
  // Pins the clock; otherwise the current UTC time is used.
  std::optional<rdf::Timestamp> date;
};

struct CompileResult {
  StoredRecord stored;
  validation::ValidationReport report;
};

struct OutcomeResult {
  StoredRecord stored;
  Iri status;
  bool deployment_permitted;
};

// The operations behind every CLI command and HTTP endpoint.
class Engine {
 public:
  explicit Engine(EngineConfig config);

  const vocab::Vocabulary& vocab() const noexcept { return *vocab_; }
  const questionnaire::Questionnaire& questionnaire() const noexcept { return questionnaire_; }
  const EngineConfig& config() const noexcept { return config_; }
  RecordStore& records() noexcept { return *store_; }
  rdf::Timestamp now() const;

  StoredRecord create(const std::string& id);
  StoredRecord get(const std::string& id) const;

  StoredRecord necessity(const std::string& id, const std::map<std::string, bool>& flags,
                         const std::optional<Iri>& status, const std::string& justification,
                         std::optional<int> version = {});
  // Answers given as JSON values (see questionnaire::answer_from_json),
  // committed together as one mutation.
  StoredRecord answer(const std::string& id, const std::vector<std::pair<std::string, nlohmann::json>>& answers,
                      std::optional<int> version = {});
  // Command-line text answer.
  StoredRecord answer_text(const std::string& id, const std::string& key, const std::string& text,
                           std::optional<int> version = {});
  std::optional<std::string> next_question(const std::string& id) const;

  CompileResult compile(const std::string& id, std::optional<int> version = {});
  validation::ValidationReport validate(const std::string& id) const;
  validation::CqAnswer cq(const std::string& id, int n) const;
  OutcomeResult outcome(const std::string& id, const std::string& rationale = "", std::optional<int> version = {});
  StoredRecord notify(const std::string& id, notification::NotificationDecision decision,
                      std::optional<int> version = {});
  StoredRecord mark_sent(const std::string& id, std::optional<int> version = {});
  StoredRecord reopen(const std::string& id, const std::string& reason, std::optional<int> version = {});
  // Records that information changed: modified date set, reassessment flagged.
  StoredRecord touch(const std::string& id, std::optional<int> version = {});

  rdf::Graph graph(const StoredRecord& s) const;
  // ttl | nt | report-json | json
  std::string export_record(const std::string& id, const std::string& format) const;
  std::optional<notification::Notice> notice(const std::string& id) const;
  rdf::Graph ontology() const;

 private:
  StoredRecord apply_event(const std::string& id, std::optional<int> version, const workflow::WorkflowEvent& event);

  EngineConfig config_;
  std::unique_ptr<vocab::Vocabulary> vocab_;
  questionnaire::Questionnaire questionnaire_;
  std::unique_ptr<RecordStore> store_;
};

// {id, iri, version, state, state_kind, accepted_events, record, session,
// next_question}
nlohmann::json to_json(const StoredRecord& s, const vocab::Vocabulary& v);

// Unknown export format.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fria::store
