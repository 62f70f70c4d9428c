#include "fria/workflow/machine.h"

#include <cctype>

#include "fria/model/mapping.h"
#include "fria/validation/shapes.h"
#include "fria/vocab/terms.h"
#include "fria/workflow/outcome.h"

namespace fria::workflow {

namespace {

using model::FriaRecord;
namespace t = terms;
namespace s = states;
namespace e = events;

std::string percent_encode(std::string_view text) {
  static const char* hex = "0123456789ABCDEF";
  std::string out;
  for (unsigned char c : text) {
    if (std::isalnum(c) || c == '-' || c == '_' || c == '.' || c == '~') {
      out += static_cast<char>(c);
    } else {
      out += '%';
      out += hex[c >> 4];
      out += hex[c & 15];
    }
  }
  return out;
}

Transition done(WorkflowState st, FriaRecord r, std::vector<WorkflowState> trace = {}) {
  trace.push_back(st);
  return Transition{std::move(st), std::move(r), std::move(trace)};
}

Transition assess(const e::AssessNecessity& ev, const FriaRecord& record, const WorkflowConfig& cfg) {
  for (const auto& [k, _] : ev.flags) {
    if (!cfg.necessity_flags.count(k)) {
      std::string known;
      for (const auto& f : cfg.necessity_flags) known += (known.empty() ? "" : ", ") + f;
      throw PreconditionError("unknown necessity condition '" + k + "' (known: " + known + ")");
    }
  }
  Iri status = t::fria::FRIANotRequired;
  if (ev.status) {
    if (*ev.status != t::fria::FRIARequired && *ev.status != t::fria::FRIANotRequired)
      throw PreconditionError("<" + ev.status->str() + "> is not a necessity status");
    status = *ev.status;
  } else {
    if (ev.flags.empty()) throw PreconditionError("give a necessity status or at least one condition flag");
    for (const auto& [_, on] : ev.flags)
      if (on) status = t::fria::FRIARequired;
  }
  FriaRecord r = record;
  r.necessity = model::Necessity{status, ev.justification, ev.flags};
  bool required = status == t::fria::FRIARequired;
  if (required) return done(s::NecessityDone{true}, std::move(r));
  return done(s::ClosedNotRequired{}, std::move(r), {s::NecessityDone{false}});
}

Transition submit(const e::SubmitInputs& ev, const FriaRecord& record, const vocab::Vocabulary& v) {
  FriaRecord r = record;
  r.inputs = ev.inputs;
  try {
    model::check_invariants(r, v);
  } catch (const model::ModelError& err) {
    throw PreconditionError(err.what());
  }
  auto report = validation::validate(model::to_graph(r, v), validation::builtin_shapes(v), v);
  if (!report.conforms) throw InputsIncomplete(std::move(report));
  return done(s::InputsComplete{}, std::move(r));
}

std::string default_rationale(const model::ProcedureInputs& in, const Iri& status, const vocab::Vocabulary& v) {
  int counts[4] = {0, 0, 0, 0};
  int accepted_high = 0;
  for (const auto& h : in.harms) {
    ++counts[static_cast<int>(h.residual_level)];
    if (h.residual_level == model::ResidualLevel::High && h.accepted) ++accepted_high;
  }
  return "Derived from " + std::to_string(in.harms.size()) + " risk entries (residual none: " +
         std::to_string(counts[0]) + ", acceptable: " + std::to_string(counts[1]) +
         ", high: " + std::to_string(counts[2]) + " of which accepted: " + std::to_string(accepted_high) +
         ", unacceptable: " + std::to_string(counts[3]) + "); outcome " + v.compact(status) + ".";
}

Transition outcome(const e::DetermineOutcome& ev, const FriaRecord& record, const vocab::Vocabulary& v) {
  if (!record.inputs) throw PreconditionError("no procedure inputs recorded");
  Iri status = derive_outcome(*record.inputs);
  FriaRecord r = record;
  model::Outcome o{status, {}, ev.rationale.empty() ? default_rationale(*record.inputs, status, v) : ev.rationale};
  for (const auto& i : record.inputs->impacts)
    if (i.right && v.contains(i.impact) && v.superclass_closure(i.impact).count(t::risk::ImpactToRights))
      o.rights_impacted.insert(*i.right);
  r.outcome = std::move(o);
  r.notification.reset();
  r = notification::detach_notice(r);
  return done(s::OutcomeDone{status}, std::move(r));
}

Transition resolve(const WorkflowState& state, const e::ResolveNotification& ev, const FriaRecord& record,
                   const vocab::Vocabulary& v) {
  const auto& d = ev.decision;
  Iri target = notification::resolve_notification(record, d, v);
  FriaRecord r = record;
  if (!r.notification) r.notification = model::Notification{t::fria::FRIANotificationNeeded, {}, {}, {}, {}};

  if (d.exempt) {
    r = notification::detach_notice(r);
    r.notification = model::Notification{target, d.authority, std::nullopt, d.basis, std::nullopt};
    return done(s::Complete{}, std::move(r), {s::NotificationResolved{target}});
  }
  if (d.authority) {
    auto notice = notification::build_notice(r, *d.authority, v);
    r = notification::attach_notice(r, notice, v);
  }
  if (d.mark_sent) {
    if (!d.when) throw PreconditionError("marking a notice as sent needs a dispatch date");
    r = notification::mark_sent(r, *d.when, v);
    r.metadata.date_submitted = *d.when;
    Iri sent = r.notification->status;
    return done(s::Complete{}, std::move(r), {s::NotificationResolved{sent}});
  }
  (void)target;
  return done(state, std::move(r));
}

Transition reopen(const WorkflowState& state, const e::Reopen& ev, const FriaRecord& record) {
  const auto& m = record.metadata;
  const auto& last = m.modified ? *m.modified : m.created;
  if (!(ev.when > last))
    throw PreconditionError("reopen date " + ev.when.lexical() + " must be later than " + last.lexical());
  FriaRecord r = model::touch(notification::detach_notice(record), ev.when);
  r.stale = false;
  r.outcome.reset();
  r.notification.reset();
  r.metadata.date_submitted.reset();
  r.metadata.date_accepted.reset();
  WorkflowState previous = state.is<s::Reopened>() ? *state.as<s::Reopened>().previous : state;
  WorkflowState re = reopened_from(previous);
  if (r.necessity && r.necessity->status == t::fria::FRIARequired)
    return done(s::NecessityDone{true}, std::move(r), {re});
  return done(re, std::move(r));
}

}  // namespace

IllegalTransition::IllegalTransition(std::string state, std::string event)
    : WorkflowError("event " + event + " is not allowed in state " + state),
      state_(std::move(state)),
      event_(std::move(event)) {}

InputsIncomplete::InputsIncomplete(validation::ValidationReport report)
    : WorkflowError("procedure inputs are incomplete: " + std::to_string(report.violations.size()) + " violation(s)"),
      report_(std::move(report)) {}

const std::set<std::string>& default_necessity_flags() {
  static const std::set<std::string> flags{"public-body", "public-service-provider", "annex-iii-5b", "annex-iii-5c"};
  return flags;
}

std::string event_name(const WorkflowEvent& ev) {
  static const char* const names[] = {"AssessNecessity", "SubmitInputs", "DetermineOutcome", "ResolveNotification",
                                      "Reopen"};
  return names[ev.index()];
}

std::string to_text(const WorkflowEvent& ev, const vocab::Vocabulary& v) {
  std::string name = event_name(ev);
  if (const auto* a = std::get_if<e::AssessNecessity>(&ev)) {
    if (a->status) return name + "(" + v.compact(*a->status) + ")";
    return name + "(flags)";
  }
  if (const auto* r = std::get_if<e::ResolveNotification>(&ev)) {
    const auto& d = r->decision;
    std::string arg = d.exempt ? "exempt" : d.authority ? (d.mark_sent ? "notice+sent" : "notice")
                                          : d.mark_sent ? "sent"
                                                        : "needed";
    return name + "(" + arg + ")";
  }
  if (const auto* r = std::get_if<e::Reopen>(&ev)) return name + "(" + percent_encode(r->reason) + ")";
  return name;
}

std::vector<std::string> accepted_events(const WorkflowState& state) {
  if (state.is<s::Draft>()) return {"AssessNecessity"};
  if (state.is<s::NecessityDone>()) {
    if (state.as<s::NecessityDone>().required) return {"SubmitInputs", "Reopen"};
    return {"Reopen"};
  }
  if (state.is<s::InputsComplete>()) return {"DetermineOutcome", "Reopen"};
  if (state.is<s::OutcomeDone>()) return {"ResolveNotification", "Reopen"};
  if (state.is<s::Reopened>()) return {"AssessNecessity", "Reopen"};
  return {"Reopen"};
}

Transition apply(const WorkflowState& state, const WorkflowEvent& event, const FriaRecord& record,
                 const vocab::Vocabulary& v, const WorkflowConfig& config) {
  auto illegal = [&]() -> Transition { throw IllegalTransition(to_text(state, v), event_name(event)); };
  bool accepted = false;
  for (const auto& name : accepted_events(state))
    if (name == event_name(event)) accepted = true;
  if (!accepted) return illegal();

  return std::visit(
      [&](const auto& ev) -> Transition {
        using E = std::decay_t<decltype(ev)>;
        if constexpr (std::is_same_v<E, e::AssessNecessity>) {
          return assess(ev, record, config);
        } else if constexpr (std::is_same_v<E, e::SubmitInputs>) {
          return submit(ev, record, v);
        } else if constexpr (std::is_same_v<E, e::DetermineOutcome>) {
          return outcome(ev, record, v);
        } else if constexpr (std::is_same_v<E, e::ResolveNotification>) {
          return resolve(state, ev, record, v);
        } else {
          return reopen(state, ev, record);
        }
      },
      event);
}

}  // namespace fria::workflow
