#pragma once

#include <memory>
#include <optional>
#include <string>
#include <type_traits>
#include <variant>

#include "fria/vocab/vocabulary.h"

namespace fria::workflow {

using rdf::Iri;

struct WorkflowState;

namespace states {
struct Draft {
  friend bool operator==(const Draft&, const Draft&) = default;
};
struct NecessityDone {
  bool required = false;
  friend bool operator==(const NecessityDone&, const NecessityDone&) = default;
};
struct InputsComplete {
  friend bool operator==(const InputsComplete&, const InputsComplete&) = default;
};
struct OutcomeDone {
  Iri status;
  friend bool operator==(const OutcomeDone&, const OutcomeDone&) = default;
};
struct NotificationResolved {
  Iri status;
  friend bool operator==(const NotificationResolved&, const NotificationResolved&) = default;
};
struct ClosedNotRequired {
  friend bool operator==(const ClosedNotRequired&, const ClosedNotRequired&) = default;
};
struct Complete {
  friend bool operator==(const Complete&, const Complete&) = default;
};
struct Reopened {
  std::shared_ptr<const WorkflowState> previous;
  friend bool operator==(const Reopened& a, const Reopened& b);
};
}  // namespace states

struct WorkflowState {
  using Value = std::variant<states::Draft, states::NecessityDone, states::InputsComplete, states::OutcomeDone,
                             states::NotificationResolved, states::ClosedNotRequired, states::Complete,
                             states::Reopened>;
  Value value;

  WorkflowState() = default;
  template <typename S>
    requires std::is_constructible_v<Value, S> && (!std::is_same_v<std::decay_t<S>, WorkflowState>)
  WorkflowState(S s) : value(std::move(s)) {}

  template <typename S>
  bool is() const {
    return std::holds_alternative<S>(value);
  }
  template <typename S>
  const S& as() const {
    return std::get<S>(value);
  }

  friend bool operator==(const WorkflowState&, const WorkflowState&) = default;
};

states::Reopened reopened_from(const WorkflowState& previous);

// Name of the alternative, e.g. "OutcomeDone".
std::string kind_name(const WorkflowState& s);

// Compact single-token text form used in the transition log, e.g.
// "NecessityDone(required)", "OutcomeDone(fria:FRIAOutcomeRisksMitigated)",
// "Reopened(Complete)". Never contains whitespace.
std::string to_text(const WorkflowState& s, const vocab::Vocabulary& v);
// Inverse of to_text. Throws std::invalid_argument.
WorkflowState state_from_text(std::string_view text, const vocab::Vocabulary& v);

}  // namespace fria::workflow
