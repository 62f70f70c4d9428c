#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fria/model/record.h"
#include "fria/vocab/vocabulary.h"

namespace fria::notification {

using model::FriaRecord;
using rdf::Iri;
using rdf::Timestamp;

class NotificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct NotificationDecision {
  bool exempt = false;
  std::optional<std::string> basis;
  std::optional<Iri> authority;
  bool mark_sent = false;
  // A catalogued refinement of FRIANotificationExempt to record instead
  // of the generic status (jurisdiction-specific exemptions).
  std::optional<Iri> exemption_status;
  // Dispatch date used when mark_sent is set.
  std::optional<Timestamp> when;
};

struct NoticeSummary {
  Iri outcome_status;
  std::vector<Iri> rights;
  std::vector<std::string> mitigations;

  friend bool operator==(const NoticeSummary&, const NoticeSummary&) = default;
};

struct Notice {
  Iri iri;
  Iri record;
  Iri authority;
  std::optional<Timestamp> sent_on;
  NoticeSummary summary;
  std::optional<Iri> completed_questionnaire;
  std::optional<std::string> exemption_basis;

  friend bool operator==(const Notice&, const Notice&) = default;
};

// The status the notification should have after `decision`.
// Exempt (with a non-empty basis) -> Exempt; otherwise Needed, NotSent
// once a notice exists (or an authority is supplied), Sent once dispatch
// is marked. Throws NotificationError without an outcome, or for an
// exemption without basis.
Iri resolve_notification(const FriaRecord& record, const NotificationDecision& decision,
                         const vocab::Vocabulary& v);

// Requires an outcome and a notification status of Needed or NotSent.
Notice build_notice(const FriaRecord& record, const Iri& authority, const vocab::Vocabulary& v);

// The notice currently linked from the record, rebuilt from its fields.
std::optional<Notice> current_notice(const FriaRecord& record, const vocab::Vocabulary& v);

Iri notice_iri(const Iri& record);

rdf::Graph notice_graph(const Notice& n, const vocab::Vocabulary& v);
std::string render_text(const Notice& n, const vocab::Vocabulary& v);

// Links `n` into the record: notification status NotSent, notice triples
// replacing any earlier draft.
FriaRecord attach_notice(const FriaRecord& record, const Notice& n, const vocab::Vocabulary& v);

// Records dispatch of the attached notice on `when`.
FriaRecord mark_sent(const FriaRecord& record, const Timestamp& when, const vocab::Vocabulary& v);

// Removes notice triples from the record's remainder.
FriaRecord detach_notice(const FriaRecord& record);

}  // namespace fria::notification
