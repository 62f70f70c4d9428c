#pragma once

#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "fria/model/record.h"
#include "fria/notification/notice.h"
#include "fria/validation/validator.h"
#include "fria/workflow/state.h"

namespace fria::workflow {

namespace events {
struct AssessNecessity {
  std::map<std::string, bool> flags;
  // Derived from the flags when absent.
  std::optional<Iri> status;
  std::string justification;
};
struct SubmitInputs {
  model::ProcedureInputs inputs;
};
struct DetermineOutcome {
  std::string rationale;
};
struct ResolveNotification {
  notification::NotificationDecision decision;
};
struct Reopen {
  std::string reason;
  rdf::Timestamp when;
};
}  // namespace events

using WorkflowEvent = std::variant<events::AssessNecessity, events::SubmitInputs, events::DetermineOutcome,
                                   events::ResolveNotification, events::Reopen>;

std::string event_name(const WorkflowEvent& e);
// Single-token form for the transition log.
std::string to_text(const WorkflowEvent& e, const vocab::Vocabulary& v);

class WorkflowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IllegalTransition : public WorkflowError {
 public:
  IllegalTransition(std::string state, std::string event);
  const std::string& state() const noexcept { return state_; }
  const std::string& event() const noexcept { return event_; }

 private:
  std::string state_;
  std::string event_;
};

class InputsIncomplete : public WorkflowError {
 public:
  explicit InputsIncomplete(validation::ValidationReport report);
  const validation::ValidationReport& report() const noexcept { return report_; }

 private:
  validation::ValidationReport report_;
};

// Event payload does not satisfy the transition's preconditions.
class PreconditionError : public WorkflowError {
 public:
  using WorkflowError::WorkflowError;
};

// Condition flags recognised by AssessNecessity; any of them true means
// a FRIA is required.
const std::set<std::string>& default_necessity_flags();

struct WorkflowConfig {
  std::set<std::string> necessity_flags = default_necessity_flags();
};

struct Transition {
  WorkflowState state;
  model::FriaRecord record;
  // Every state entered, in order; the last one equals `state`.
  std::vector<WorkflowState> trace;
};

// The FRIA lifecycle transition function. Pure.
Transition apply(const WorkflowState& state, const WorkflowEvent& event, const model::FriaRecord& record,
                 const vocab::Vocabulary& v, const WorkflowConfig& config = {});

// Event names accepted in `state` (payload checks aside).
std::vector<std::string> accepted_events(const WorkflowState& state);

}  // namespace fria::workflow
