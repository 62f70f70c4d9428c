#include <gtest/gtest.h>

#include "fria/model/mapping.h"
#include "fria/notification/notice.h"
#include "fria/rdf/io.h"
#include "fria/vocab/terms.h"
#include "support.h"

namespace fria::notification {
namespace {

namespace t = terms;

const Iri kRecord("https://example.com/fria-records/n1");
const Iri kAuth(fria::testing::kAuthority);

Timestamp ts(const char* x) { return *Timestamp::parse(x); }
const vocab::Vocabulary& v() { return vocab::catalog(); }

FriaRecord with_outcome() {
  auto r = model::new_record(kRecord, "n1", ts("2025-01-01"));
  r.necessity = model::Necessity{t::fria::FRIARequired, "", {}};
  model::ProcedureInputs in;
  in.impacts.insert({t::risk::ImpactToRights, t::fria_ext::Adults, t::risk::LowLikelihood, t::eu_rights::HumanDignity});
  in.impacts.insert({t::risk::ImpactToRights, t::fria_ext::Minors, t::risk::LowLikelihood, t::eu_rights::RightsOfTheChild});
  in.mitigation_measures.insert({model::stage_iri(kRecord, "m2"), t::dpv::GovernanceProcedures, "weekly audit"});
  in.mitigation_measures.insert({model::stage_iri(kRecord, "m1"), t::dpv::GovernanceProcedures, "appeal channel"});
  r.inputs = in;
  r.outcome = model::Outcome{t::fria::FRIAOutcomeRisksAcceptable, {}, ""};
  return r;
}

NotificationDecision decide(bool exempt, std::optional<std::string> basis = {}, std::optional<Iri> auth = {},
                            bool sent = false) {
  NotificationDecision d;
  d.exempt = exempt;
  d.basis = std::move(basis);
  d.authority = std::move(auth);
  d.mark_sent = sent;
  return d;
}

TEST(Resolve, NeedsOutcome) {
  auto r = with_outcome();
  r.outcome.reset();
  EXPECT_THROW(resolve_notification(r, decide(false), v()), NotificationError);
}

TEST(Resolve, Exemption) {
  auto r = with_outcome();
  EXPECT_THROW(resolve_notification(r, decide(true), v()), NotificationError);
  EXPECT_THROW(resolve_notification(r, decide(true, ""), v()), NotificationError);
  EXPECT_EQ(resolve_notification(r, decide(true, "Art. 46(1)"), v()), t::fria::FRIANotificationExempt);
  EXPECT_THROW(resolve_notification(r, decide(false, "Art. 46(1)"), v()), NotificationError);
}

TEST(Resolve, ExemptionRefinement) {
  const Iri national("https://example.com/FRIA-ext#NationalSecurityExempt");
  vocab::TermDef d{national, vocab::TermKind::Instance, {t::fria::FRIANotificationStatus}, "national", "", "", "",
                   t::fria::FRIANotificationExempt};
  auto ext = v().extended({d});
  auto dec = decide(true, "national security");
  dec.exemption_status = national;
  EXPECT_EQ(resolve_notification(with_outcome(), dec, ext), national);
  dec.exemption_status = t::fria::FRIANotificationSent;
  EXPECT_THROW(resolve_notification(with_outcome(), dec, ext), NotificationError);
}

TEST(Resolve, NeededNotSentSent) {
  auto r = with_outcome();
  EXPECT_EQ(resolve_notification(r, decide(false), v()), t::fria::FRIANotificationNeeded);
  EXPECT_THROW(resolve_notification(r, decide(false, {}, {}, true), v()), NotificationError);
  EXPECT_EQ(resolve_notification(r, decide(false, {}, kAuth), v()), t::fria::FRIANotificationNotSent);

  r.notification = model::Notification{t::fria::FRIANotificationNeeded, {}, {}, {}, {}};
  auto notice = build_notice(r, kAuth, v());
  r = attach_notice(r, notice, v());
  EXPECT_EQ(r.notification->status, t::fria::FRIANotificationNotSent);
  EXPECT_EQ(resolve_notification(r, decide(false), v()), t::fria::FRIANotificationNotSent);
  EXPECT_EQ(resolve_notification(r, decide(false, {}, {}, true), v()), t::fria::FRIANotificationSent);

  r = mark_sent(r, ts("2025-01-09"), v());
  EXPECT_EQ(r.notification->status, t::fria::FRIANotificationSent);
  EXPECT_EQ(r.notification->sent_on, ts("2025-01-09"));
  EXPECT_EQ(current_notice(r, v())->sent_on, ts("2025-01-09"));
  EXPECT_EQ(resolve_notification(r, decide(false), v()), t::fria::FRIANotificationSent);
}

TEST(Notice, NotBuiltForExemptOrSent) {
  auto r = with_outcome();
  EXPECT_THROW(build_notice(r, kAuth, v()), NotificationError);
  for (const auto& st : {t::fria::FRIANotificationExempt, t::fria::FRIANotificationSent}) {
    r.notification = model::Notification{st, {}, {}, {}, {}};
    EXPECT_THROW(build_notice(r, kAuth, v()), NotificationError) << st.str();
  }
}

TEST(Notice, SummaryAndGraph) {
  auto r = with_outcome();
  r.notification = model::Notification{t::fria::FRIANotificationNeeded, {}, {}, {}, {}};
  auto n = build_notice(r, kAuth, v());
  EXPECT_EQ(n.iri, notice_iri(kRecord));
  EXPECT_EQ(n.summary.outcome_status, t::fria::FRIAOutcomeRisksAcceptable);
  EXPECT_EQ(n.summary.rights, (std::vector<Iri>{t::eu_rights::HumanDignity, t::eu_rights::RightsOfTheChild}));
  EXPECT_EQ(n.summary.mitigations, (std::vector<std::string>{"appeal channel", "weekly audit"}));
  auto g = notice_graph(n, v());
  EXPECT_TRUE(v().is_instance_of(g, n.iri, t::fria::FRIANotice));
  EXPECT_TRUE(v().is_instance_of(g, n.iri, t::dpv::Notice));
  EXPECT_TRUE(g.contains(rdf::Triple(n.iri, t::dpv::hasRecipient, kAuth)));
  EXPECT_EQ(g.objects(n.iri, t::dpv::hasRight).size(), 2u);
}

TEST(Notice, RenderIsDeterministic) {
  auto r = with_outcome();
  r.notification = model::Notification{t::fria::FRIANotificationNeeded, {}, {}, {}, {}};
  auto a = render_text(build_notice(r, kAuth, v()), v());
  auto b = render_text(build_notice(r, kAuth, v()), v());
  EXPECT_EQ(a, b);
  EXPECT_EQ(a,
            "NOTIFICATION OF FRIA RESULTS\n"
            "notice: https://example.com/fria-records/n1#notice\n"
            "record: https://example.com/fria-records/n1\n"
            "authority: https://example.com/authorities/market-surveillance\n"
            "sent on: not sent\n"
            "outcome: fria:FRIAOutcomeRisksAcceptable (FRIA Outcome: Risks Acceptable)\n"
            "rights affected:\n"
            "  - eu-rights:HumanDignity (Human Dignity)\n"
            "  - eu-rights:RightsOfTheChild (Rights of the Child)\n"
            "mitigation measures:\n"
            "  - appeal channel\n"
            "  - weekly audit\n"
            "completed questionnaire: none\n");
}

TEST(Notice, AttachSurvivesGraphRoundTrip) {
  auto r = with_outcome();
  r.notification = model::Notification{t::fria::FRIANotificationNeeded, {}, {}, {}, {}};
  r = attach_notice(r, build_notice(r, kAuth, v()), v());
  auto back = model::from_graph(model::to_graph(r, v()), kRecord, v());
  EXPECT_EQ(back, r);
  auto n = current_notice(back, v());
  ASSERT_TRUE(n);
  EXPECT_EQ(n->authority, kAuth);
  auto detached = detach_notice(back);
  EXPECT_TRUE(detached.remainder.match(notice_iri(kRecord), std::nullopt, std::nullopt).empty());
}

}  // namespace
}  // namespace fria::notification
