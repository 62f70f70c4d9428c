#include "fria/notification/notice.h"

#include <algorithm>

#include "fria/model/mapping.h"
#include "fria/validation/competency.h"
#include "fria/vocab/terms.h"

namespace fria::notification {

namespace {

using rdf::Literal;
namespace t = terms;

bool is_exempt_status(const Iri& s, const vocab::Vocabulary& v) {
  if (s == t::fria::FRIANotificationExempt) return true;
  auto refs = v.refinements_of(t::fria::FRIANotificationExempt);
  return std::find(refs.begin(), refs.end(), s) != refs.end();
}

NoticeSummary summarize(const FriaRecord& record, const vocab::Vocabulary& v) {
  NoticeSummary s{record.outcome->status, {}, {}};
  auto cq6 = validation::answer_cq(model::to_graph(record, v), record.iri, 6, v);
  for (const auto& row : cq6.bindings)
    if (const auto* i = std::get_if<Iri>(&row.front())) s.rights.push_back(*i);
  if (record.inputs)
    for (const auto& m : record.inputs->mitigation_measures)
      s.mitigations.push_back(m.description.empty() ? v.compact(m.iri) : m.description);
  std::sort(s.mitigations.begin(), s.mitigations.end());
  return s;
}

std::string display(const Iri& iri, const vocab::Vocabulary& v) {
  std::string out = v.compact(iri);
  if (const auto* def = v.find(iri); def && !def->label.empty()) out += " (" + def->label + ")";
  return out;
}

}  // namespace

Iri notice_iri(const Iri& record) { return model::stage_iri(record, "notice"); }

Iri resolve_notification(const FriaRecord& record, const NotificationDecision& d, const vocab::Vocabulary& v) {
  if (!record.outcome) throw NotificationError("notification requires a determined outcome");
  if (d.exempt) {
    if (!d.basis || d.basis->empty()) throw NotificationError("an exemption from notification requires a basis");
    if (d.exemption_status) {
      if (!is_exempt_status(*d.exemption_status, v))
        throw NotificationError("<" + d.exemption_status->str() + "> is not an exemption status");
      return *d.exemption_status;
    }
    return t::fria::FRIANotificationExempt;
  }
  if (d.basis) throw NotificationError("an exemption basis was given without claiming an exemption");
  const auto& n = record.notification;
  if (n && n->status == t::fria::FRIANotificationSent) return n->status;
  bool have_notice = (n && n->notice) || d.authority.has_value();
  if (d.mark_sent) {
    if (!have_notice) throw NotificationError("cannot mark as sent: no notice has been prepared (give an authority)");
    return t::fria::FRIANotificationSent;
  }
  return have_notice ? t::fria::FRIANotificationNotSent : t::fria::FRIANotificationNeeded;
}

Notice build_notice(const FriaRecord& record, const Iri& authority, const vocab::Vocabulary& v) {
  if (!record.outcome) throw NotificationError("a notice requires a determined outcome");
  if (!record.notification) throw NotificationError("a notice requires a notification assessment");
  const auto& st = record.notification->status;
  if (st != t::fria::FRIANotificationNeeded && st != t::fria::FRIANotificationNotSent)
    throw NotificationError("no notice can be prepared when the notification status is " + v.compact(st));
  Notice n{notice_iri(record.iri), record.iri, authority, std::nullopt, summarize(record, v), std::nullopt,
           std::nullopt};
  if (!record.questionnaires.empty()) n.completed_questionnaire = *record.questionnaires.begin();
  return n;
}

std::optional<Notice> current_notice(const FriaRecord& record, const vocab::Vocabulary& v) {
  if (!record.outcome || !record.notification || !record.notification->notice || !record.notification->authority)
    return std::nullopt;
  Notice n{*record.notification->notice, record.iri, *record.notification->authority, record.notification->sent_on,
           summarize(record, v), std::nullopt, std::nullopt};
  if (!record.questionnaires.empty()) n.completed_questionnaire = *record.questionnaires.begin();
  return n;
}

rdf::Graph notice_graph(const Notice& n, const vocab::Vocabulary& v) {
  rdf::Graph g;
  g.set_prefixes(model::record_prefixes(v));
  g.insert(n.iri, t::rdf::type, t::fria::FRIANotice);
  g.insert(n.iri, t::dct::source, n.record);
  g.insert(n.iri, t::dpv::hasRecipient, n.authority);
  g.insert(n.iri, t::dct::title, Literal("Notification of FRIA results"));
  g.insert(n.iri, t::dct::subject, n.summary.outcome_status);
  for (const auto& r : n.summary.rights) g.insert(n.iri, t::dpv::hasRight, r);
  if (!n.summary.mitigations.empty()) {
    std::string text = "Mitigation measures: ";
    for (std::size_t i = 0; i < n.summary.mitigations.size(); ++i)
      text += (i ? "; " : "") + n.summary.mitigations[i];
    g.insert(n.iri, t::dct::description, Literal(text));
  }
  if (n.completed_questionnaire) g.insert(n.iri, t::fria_ext::hasQuestionnaire, *n.completed_questionnaire);
  if (n.sent_on) g.insert(n.iri, t::dct::dateSubmitted, n.sent_on->to_literal());
  if (n.exemption_basis) g.insert(n.iri, t::fria_ext::exemptionBasis, Literal(*n.exemption_basis));
  return g;
}

std::string render_text(const Notice& n, const vocab::Vocabulary& v) {
  std::string out = "NOTIFICATION OF FRIA RESULTS\n";
  out += "notice: " + n.iri.str() + "\n";
  out += "record: " + n.record.str() + "\n";
  out += "authority: " + n.authority.str() + "\n";
  out += "sent on: " + (n.sent_on ? n.sent_on->lexical() : std::string("not sent")) + "\n";
  out += "outcome: " + display(n.summary.outcome_status, v) + "\n";
  out += "rights affected:";
  if (n.summary.rights.empty()) out += " none recorded";
  out += "\n";
  for (const auto& r : n.summary.rights) out += "  - " + display(r, v) + "\n";
  out += "mitigation measures:";
  if (n.summary.mitigations.empty()) out += " none recorded";
  out += "\n";
  for (const auto& m : n.summary.mitigations) out += "  - " + m + "\n";
  out += "completed questionnaire: " +
         (n.completed_questionnaire ? n.completed_questionnaire->str() : std::string("none")) + "\n";
  if (n.exemption_basis) out += "exemption basis: " + *n.exemption_basis + "\n";
  return out;
}

FriaRecord detach_notice(const FriaRecord& record) {
  FriaRecord out = record;
  model::erase_node(out.remainder, notice_iri(record.iri));
  if (record.notification && record.notification->notice) model::erase_node(out.remainder, *record.notification->notice);
  return out;
}

FriaRecord attach_notice(const FriaRecord& record, const Notice& n, const vocab::Vocabulary& v) {
  if (!record.notification) throw NotificationError("a notice requires a notification assessment");
  FriaRecord out = detach_notice(record);
  out.notification->status = t::fria::FRIANotificationNotSent;
  out.notification->authority = n.authority;
  out.notification->notice = n.iri;
  out.notification->sent_on.reset();
  out.remainder.insert_all(notice_graph(n, v));
  return out;
}

FriaRecord mark_sent(const FriaRecord& record, const Timestamp& when, const vocab::Vocabulary& v) {
  if (!record.notification || record.notification->status != t::fria::FRIANotificationNotSent ||
      !record.notification->notice)
    throw NotificationError("only a prepared, unsent notice can be marked as sent");
  auto notice = current_notice(record, v);
  if (!notice) throw NotificationError("the record has no notice to send");
  notice->sent_on = when;
  FriaRecord out = detach_notice(record);
  out.notification->status = t::fria::FRIANotificationSent;
  out.notification->sent_on = when;
  out.remainder.insert_all(notice_graph(*notice, v));
  return out;
}

}  // namespace fria::notification
