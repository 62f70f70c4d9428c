#include "fria/workflow/state.h"

#include <stdexcept>

namespace fria::workflow {

namespace states {
bool operator==(const Reopened& a, const Reopened& b) {
  if (!a.previous || !b.previous) return a.previous == b.previous;
  return *a.previous == *b.previous;
}
}  // namespace states

states::Reopened reopened_from(const WorkflowState& previous) {
  return states::Reopened{std::make_shared<const WorkflowState>(previous)};
}

std::string kind_name(const WorkflowState& s) {
  static const char* const names[] = {"Draft",           "NecessityDone",        "InputsComplete",
                                      "OutcomeDone",     "NotificationResolved", "ClosedNotRequired",
                                      "Complete",        "Reopened"};
  return names[s.value.index()];
}

std::string to_text(const WorkflowState& s, const vocab::Vocabulary& v) {
  using namespace states;
  std::string name = kind_name(s);
  if (const auto* n = std::get_if<NecessityDone>(&s.value))
    return name + (n->required ? "(required)" : "(not-required)");
  if (const auto* o = std::get_if<OutcomeDone>(&s.value)) return name + "(" + v.compact(o->status) + ")";
  if (const auto* n = std::get_if<NotificationResolved>(&s.value)) return name + "(" + v.compact(n->status) + ")";
  if (const auto* r = std::get_if<Reopened>(&s.value))
    return name + "(" + (r->previous ? to_text(*r->previous, v) : std::string()) + ")";
  return name;
}

WorkflowState state_from_text(std::string_view text, const vocab::Vocabulary& v) {
  using namespace states;
  auto open = text.find('(');
  std::string_view name = text.substr(0, open);
  std::string_view arg;
  if (open != std::string_view::npos) {
    if (text.back() != ')') throw std::invalid_argument("malformed state '" + std::string(text) + "'");
    arg = text.substr(open + 1, text.size() - open - 2);
  }
  auto status = [&]() {
    auto iri = v.expand(arg);
    if (!iri) throw std::invalid_argument("unknown status in state '" + std::string(text) + "'");
    return *iri;
  };
  auto no_arg = [&]() {
    if (open != std::string_view::npos) throw std::invalid_argument("unexpected argument in '" + std::string(text) + "'");
  };
  if (name == "Draft") return no_arg(), WorkflowState(Draft{});
  if (name == "InputsComplete") return no_arg(), WorkflowState(InputsComplete{});
  if (name == "ClosedNotRequired") return no_arg(), WorkflowState(ClosedNotRequired{});
  if (name == "Complete") return no_arg(), WorkflowState(Complete{});
  if (name == "NecessityDone") {
    if (arg == "required") return WorkflowState(NecessityDone{true});
    if (arg == "not-required") return WorkflowState(NecessityDone{false});
    throw std::invalid_argument("malformed state '" + std::string(text) + "'");
  }
  if (name == "OutcomeDone") return WorkflowState(OutcomeDone{status()});
  if (name == "NotificationResolved") return WorkflowState(NotificationResolved{status()});
  if (name == "Reopened") return WorkflowState(reopened_from(state_from_text(arg, v)));
  throw std::invalid_argument("unknown state '" + std::string(text) + "'");
}

}  // namespace fria::workflow
