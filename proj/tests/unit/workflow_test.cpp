#include <gtest/gtest.h>

#include <random>

#include "checks.h"
#include "fria/vocab/terms.h"
#include "fria/workflow/machine.h"
#include "fria/workflow/outcome.h"
#include "support.h"

namespace fria::workflow {
namespace {

namespace t = terms;
namespace s = states;
using model::ResidualLevel;
using rdf::Timestamp;

Timestamp ts(const char* x) { return *Timestamp::parse(x); }

const vocab::Vocabulary& v() { return vocab::catalog(); }

model::ProcedureInputs golden_inputs() {
  static const model::ProcedureInputs in = [] {
    fria::testing::TempDir dir;
    store::Engine engine(fria::testing::golden_config(dir.path()));
    fria::testing::golden_via_engine(engine);
    return *engine.get(fria::testing::kGoldenId).record.inputs;
  }();
  return in;
}

model::FriaRecord fresh() {
  return model::new_record(Iri(std::string(store::kDefaultBase) + "golden"), "golden", ts("2025-01-01"));
}

events::AssessNecessity required() { return {{{"public-body", true}}, std::nullopt, "public body"}; }

struct Lifecycle {
  WorkflowState state;
  model::FriaRecord record = fresh();

  Transition step(const WorkflowEvent& e) {
    auto tr = apply(state, e, record, v());
    state = tr.state;
    record = tr.record;
    return tr;
  }
};

TEST(Machine, RequiredPath) {
  Lifecycle r;
  EXPECT_TRUE(r.step(required()).state.is<s::NecessityDone>());
  EXPECT_TRUE(r.state.as<s::NecessityDone>().required);
  r.step(events::SubmitInputs{golden_inputs()});
  EXPECT_TRUE(r.state.is<s::InputsComplete>());
  r.step(events::DetermineOutcome{});
  ASSERT_TRUE(r.state.is<s::OutcomeDone>());
  EXPECT_EQ(r.state.as<s::OutcomeDone>().status, t::fria::FRIAOutcomeRisksMitigated);
  EXPECT_FALSE(r.record.outcome->rationale.empty());
  notification::NotificationDecision d;
  d.authority = Iri(fria::testing::kAuthority);
  r.step(events::ResolveNotification{d});
  EXPECT_TRUE(r.state.is<s::OutcomeDone>());
  EXPECT_EQ(r.record.notification->status, t::fria::FRIANotificationNotSent);
  notification::NotificationDecision sent;
  sent.mark_sent = true;
  sent.when = ts("2025-01-05");
  auto tr = r.step(events::ResolveNotification{sent});
  EXPECT_TRUE(r.state.is<s::Complete>());
  ASSERT_EQ(tr.trace.size(), 2u);
  EXPECT_EQ(tr.trace[0], WorkflowState(s::NotificationResolved{t::fria::FRIANotificationSent}));
  EXPECT_EQ(r.record.metadata.date_submitted, ts("2025-01-05"));
}

TEST(Machine, NotRequiredCloses) {
  Lifecycle r;
  auto tr = r.step(events::AssessNecessity{{{"public-body", false}}, std::nullopt, ""});
  EXPECT_TRUE(r.state.is<s::ClosedNotRequired>());
  ASSERT_EQ(tr.trace.size(), 2u);
  EXPECT_EQ(tr.trace[0], WorkflowState(s::NecessityDone{false}));
  EXPECT_EQ(r.record.necessity->status, t::fria::FRIANotRequired);
  EXPECT_EQ(accepted_events(r.state), std::vector<std::string>{"Reopen"});
}

TEST(Machine, ExplicitStatusWins) {
  Lifecycle r;
  r.step(events::AssessNecessity{{{"public-body", false}}, t::fria::FRIARequired, "voluntary"});
  EXPECT_TRUE(r.state.is<s::NecessityDone>());
}

TEST(Machine, NecessityPreconditions) {
  Lifecycle r;
  EXPECT_THROW(r.step(events::AssessNecessity{{{"bogus", true}}, std::nullopt, ""}), PreconditionError);
  EXPECT_THROW(r.step(events::AssessNecessity{{}, std::nullopt, ""}), PreconditionError);
  EXPECT_THROW(r.step(events::AssessNecessity{{}, t::fria::FRIAOutcomeRisksMitigated, ""}), PreconditionError);
  EXPECT_TRUE(r.state.is<s::Draft>());
}

TEST(Machine, IllegalEventsCarryStateAndEvent) {
  Lifecycle r;
  try {
    r.step(events::DetermineOutcome{});
    FAIL();
  } catch (const IllegalTransition& e) {
    EXPECT_EQ(e.state(), "Draft");
    EXPECT_EQ(e.event(), "DetermineOutcome");
  }
  r.step(required());
  EXPECT_THROW(r.step(required()), IllegalTransition);
  EXPECT_THROW(r.step(events::ResolveNotification{}), IllegalTransition);
}

TEST(Machine, IncompleteInputsReportViolations) {
  Lifecycle r;
  r.step(required());
  auto in = golden_inputs();
  in.duration.reset();
  try {
    r.step(events::SubmitInputs{in});
    FAIL();
  } catch (const InputsIncomplete& e) {
    ASSERT_EQ(e.report().violations.size(), 1u);
    EXPECT_EQ(e.report().violations[0].path, t::dpv::hasDuration);
  }
  EXPECT_TRUE(r.state.is<s::NecessityDone>());
  auto bad = golden_inputs();
  auto h = *bad.harms.begin();
  bad.harms.clear();
  h.residual_level = ResidualLevel::None;
  h.accepted = false;
  bad.harms.insert(h);
  EXPECT_THROW(r.step(events::SubmitInputs{bad}), PreconditionError);
}

TEST(Machine, ExemptionNeedsBasis) {
  Lifecycle r;
  r.step(required());
  r.step(events::SubmitInputs{golden_inputs()});
  r.step(events::DetermineOutcome{"ok"});
  notification::NotificationDecision d;
  d.exempt = true;
  EXPECT_THROW(r.step(events::ResolveNotification{d}), notification::NotificationError);
  d.basis = "public security exemption";
  r.step(events::ResolveNotification{d});
  EXPECT_TRUE(r.state.is<s::Complete>());
  EXPECT_EQ(r.record.notification->status, t::fria::FRIANotificationExempt);
  EXPECT_EQ(r.record.notification->exemption_basis, "public security exemption");
}

TEST(Machine, ReopenMovesModifiedForward) {
  Lifecycle r;
  r.step(required());
  r.step(events::SubmitInputs{golden_inputs()});
  r.step(events::DetermineOutcome{});
  EXPECT_THROW(r.step(events::Reopen{"too early", ts("2025-01-01")}), PreconditionError);
  r.step(events::Reopen{"new camera", ts("2025-01-02")});
  EXPECT_TRUE(r.state.is<s::NecessityDone>());
  EXPECT_EQ(r.record.metadata.modified, ts("2025-01-02"));
  EXPECT_FALSE(r.record.outcome);
  EXPECT_THROW(r.step(events::Reopen{"same day", ts("2025-01-02")}), PreconditionError);
  r.step(events::Reopen{"later", ts("2025-01-02T09:00:00Z")});
  EXPECT_TRUE(*r.record.metadata.modified > ts("2025-01-02"));
}

TEST(Machine, ReopenAfterNotRequired) {
  Lifecycle r;
  r.step(events::AssessNecessity{{}, t::fria::FRIANotRequired, "private use"});
  auto tr = r.step(events::Reopen{"scope changed", ts("2025-02-01")});
  ASSERT_TRUE(r.state.is<s::Reopened>());
  EXPECT_EQ(*r.state.as<s::Reopened>().previous, WorkflowState(s::ClosedNotRequired{}));
  EXPECT_EQ(accepted_events(r.state), (std::vector<std::string>{"AssessNecessity", "Reopen"}));
  r.step(required());
  EXPECT_TRUE(r.state.is<s::NecessityDone>());
}

TEST(Machine, Deterministic) {
  Lifecycle a, b;
  for (Lifecycle* r : {&a, &b}) {
    r->step(required());
    r->step(events::SubmitInputs{golden_inputs()});
    r->step(events::DetermineOutcome{});
  }
  EXPECT_EQ(a.state, b.state);
  EXPECT_EQ(a.record, b.record);
}

TEST(Machine, ExhaustiveSequences) {
  auto r = fria::testing::check_workflow_exhaustive(5);
  EXPECT_TRUE(r.pass) << r.detail;
}

TEST(State, TextRoundTrip) {
  std::vector<WorkflowState> all{s::Draft{},
                                 s::NecessityDone{true},
                                 s::NecessityDone{false},
                                 s::InputsComplete{},
                                 s::OutcomeDone{t::fria::FRIAOutcomeHighResidualRisk},
                                 s::NotificationResolved{t::fria::FRIANotificationSent},
                                 s::ClosedNotRequired{},
                                 s::Complete{},
                                 reopened_from(s::Complete{})};
  for (const auto& st : all) {
    auto text = to_text(st, v());
    EXPECT_EQ(text.find(' '), std::string::npos);
    EXPECT_EQ(state_from_text(text, v()), st) << text;
  }
  EXPECT_EQ(to_text(all[4], v()), "OutcomeDone(fria:FRIAOutcomeHighResidualRisk)");
  EXPECT_THROW(state_from_text("Nowhere", v()), std::invalid_argument);
}

model::RiskEntry entry(int i, ResidualLevel l, bool accepted) {
  return {Iri("https://example.com/r#risk" + std::to_string(i)), t::risk::Discrimination, l, accepted, {}};
}

TEST(Outcome, Examples) {
  model::ProcedureInputs in;
  EXPECT_EQ(derive_outcome(in), t::fria::FRIAOutcomeRisksMitigated);
  in.harms.insert(entry(0, ResidualLevel::None, true));
  EXPECT_EQ(derive_outcome(in), t::fria::FRIAOutcomeRisksMitigated);
  in.harms.insert(entry(1, ResidualLevel::High, true));
  EXPECT_EQ(derive_outcome(in), t::fria::FRIAOutcomeRisksAcceptable);
  in.harms.insert(entry(2, ResidualLevel::High, false));
  EXPECT_EQ(derive_outcome(in), t::fria::FRIAOutcomeHighResidualRisk);
  in.harms.insert(entry(3, ResidualLevel::Unacceptable, true));
  EXPECT_EQ(derive_outcome(in), t::fria::FRIAOutcomeUnacceptableRisk);
  EXPECT_FALSE(deployment_permitted(t::fria::FRIAOutcomeUnacceptableRisk));
  EXPECT_FALSE(deployment_permitted(t::fria::FRIAOutcomeHighResidualRisk));
  EXPECT_TRUE(deployment_permitted(t::fria::FRIAOutcomeRisksAcceptable));
  EXPECT_TRUE(deployment_permitted(t::fria::FRIAOutcomeRisksMitigated));
  EXPECT_THROW(deployment_permitted(t::fria::FRIANotificationSent), UnknownStatusError);
}

TEST(Outcome, MatchesOracle) {
  auto r = fria::testing::check_outcome_oracle();
  EXPECT_TRUE(r.pass) << r.detail;
}

// Adding evidence never lowers the outcome.
TEST(Outcome, MonotoneInEvidence) {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> lvl(0, 3);
  for (int round = 0; round < 300; ++round) {
    model::ProcedureInputs in;
    int prev = outcome_severity(derive_outcome(in));
    for (int i = 0; i < 6; ++i) {
      auto l = static_cast<ResidualLevel>(lvl(rng));
      in.harms.insert(entry(i, l, l == ResidualLevel::None || std::bernoulli_distribution(0.5)(rng)));
      int now = outcome_severity(derive_outcome(in));
      ASSERT_GE(now, prev);
      prev = now;
    }
  }
}

}  // namespace
}  // namespace fria::workflow
