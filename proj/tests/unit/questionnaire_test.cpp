#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "fria/questionnaire/compile.h"
#include "fria/rdf/io.h"
#include "fria/validation/shapes.h"
#include "fria/vocab/terms.h"
#include "support.h"

namespace fria::questionnaire {
namespace {

namespace t = terms;

const Iri kRecord("https://example.com/fria-records/golden");

const vocab::Vocabulary& v() { return vocab::catalog(); }
const Questionnaire& q() { return builtin_questionnaire(); }

std::vector<std::pair<std::string, AnswerValue>> golden_values() {
  // the engine fills necessity-status from the necessity step
  std::vector<std::pair<std::string, AnswerValue>> out{{"necessity-status", t::fria::FRIARequired}};
  const auto golden = fria::testing::golden_answers();
  for (const auto& [key, value] : golden.items())
    out.emplace_back(key, answer_from_json(*resolve_key(q(), key).question, value, v()));
  return out;
}

Session answered(const std::vector<std::pair<std::string, AnswerValue>>& values) {
  auto s = new_session(q(), kRecord, "golden");
  for (const auto& [k, val] : values) s = answer(s, q(), k, val, v());
  return s;
}

TEST(Definition, BuiltinIsValid) {
  EXPECT_NO_THROW(check_questionnaire(q(), v()));
  std::set<std::string> ids;
  for (const auto* question : q().questions()) EXPECT_TRUE(ids.insert(question->id).second) << question->id;
}

TEST(Definition, CoversMandatoryPaths) {
  auto covered = covered_paths(q());
  for (const auto& p : mandatory_paths(validation::builtin_shapes(v())))
    EXPECT_TRUE(covered.count(p)) << v().compact(p);
}

TEST(Definition, QuestionPathsAreCatalogued) {
  for (const auto* question : q().questions())
    EXPECT_TRUE(v().contains(question->maps_to) || question->maps_to == t::rdf::type) << question->id;
}

TEST(Definition, JsonRoundTrip) {
  auto j = to_json(q(), v());
  EXPECT_EQ(questionnaire_from_json(j, v()), q());
  j["sections"][0]["questions"][0]["surprise"] = 1;
  EXPECT_THROW(questionnaire_from_json(j, v()), QuestionnaireError);
}

TEST(Definition, UnknownMapsToIsRejected) {
  auto j = to_json(q(), v());
  j["sections"][0]["questions"][0]["maps_to"] = "https://example.com/nowhere#p";
  EXPECT_THROW(questionnaire_from_json(j, v()), QuestionnaireError);
}

TEST(Answers, FrequencyQuestion) {
  const auto* f = q().find("frequency");
  ASSERT_NE(f, nullptr);
  EXPECT_EQ(f->maps_to, t::dpv::hasFrequency);
  auto opts = choices(*f, v());
  EXPECT_NE(std::find(opts.begin(), opts.end(), t::dpv::ContinuousFrequency), opts.end());
  EXPECT_EQ(std::find(opts.begin(), opts.end(), t::dpv::FixedDuration), opts.end());
  auto s = new_session(q(), kRecord, "s");
  s = answer(s, q(), "frequency", t::dpv::SporadicFrequency, v());
  EXPECT_EQ(std::get<Iri>(s.answers.at("frequency")), t::dpv::SporadicFrequency);
  EXPECT_THROW(answer(s, q(), "frequency", t::dpv::FixedDuration, v()), AnswerTypeError);
  EXPECT_THROW(answer(s, q(), "frequency", std::string("daily"), v()), AnswerTypeError);
  EXPECT_THROW(check_answer(*f, answer_from_text(*f, "dpv:FixedDuration", v()), v()), AnswerTypeError);
  EXPECT_NO_THROW(check_answer(*f, answer_from_text(*f, "dpv:OftenFrequency", v()), v()));
}

TEST(Answers, WrongShapesOfValue) {
  auto s = new_session(q(), kRecord, "s");
  EXPECT_THROW(answer(s, q(), "risk-accepted", std::string("yes"), v()), AnswerTypeError);
  EXPECT_THROW(answer(s, q(), "process", true, v()), AnswerTypeError);
  EXPECT_THROW(answer(s, q(), "human-subjects", std::set<Iri>{t::dpv::FixedDuration}, v()), AnswerTypeError);
  EXPECT_THROW(answer(s, q(), "no-such-question", true, v()), UnknownQuestionError);
  EXPECT_THROW(answer(s, q(), "process@2", std::string("x"), v()), UnknownQuestionError);
  EXPECT_THROW(answer(s, q(), "mitigation@0", std::string("x"), v()), UnknownQuestionError);
}

TEST(Answers, TextForms) {
  EXPECT_EQ(answer_from_text(*q().find("risk-accepted"), "yes", v()), AnswerValue(true));
  EXPECT_EQ(answer_from_text(*q().find("risk-accepted"), "false", v()), AnswerValue(false));
  auto multi = answer_from_text(*q().find("human-subjects"), "fria-ext:Tourists,fria-ext:Minors", v());
  EXPECT_EQ(std::get<std::set<Iri>>(multi), (std::set<Iri>{t::fria_ext::Tourists, t::fria_ext::Minors}));
  EXPECT_EQ(answer_to_json(multi), nlohmann::json::array({t::fria_ext::Minors.str(), t::fria_ext::Tourists.str()}));
}

TEST(Session, CursorAdvancesAndEnds) {
  auto s = new_session(q(), kRecord, "s");
  ASSERT_TRUE(s.cursor);
  auto first = *s.cursor;
  EXPECT_EQ(next_question(s, q()), first);
  auto full = answered(golden_values());
  EXPECT_FALSE(full.cursor);
  EXPECT_FALSE(next_question(full, q()));
  EXPECT_TRUE(missing_answers(full, q()).empty());
}

TEST(Session, OverwriteKeepsLastValue) {
  auto s = new_session(q(), kRecord, "s");
  s = answer(s, q(), "process", std::string("first"), v());
  s = answer(s, q(), "process", std::string("second"), v());
  EXPECT_EQ(std::get<std::string>(s.answers.at("process")), "second");
  EXPECT_EQ(s.answers.size(), 1u);
  s = clear_answer(s, q(), "process");
  EXPECT_TRUE(s.answers.empty());
  EXPECT_NO_THROW(clear_answer(s, q(), "unknown"));
}

TEST(Session, MissingAnswersIncludeStartedEntries) {
  auto values = golden_values();
  std::erase_if(values, [](const auto& kv) { return kv.first == "duration"; });
  auto s = answered(values);
  auto missing = missing_answers(s, q());
  EXPECT_EQ(missing, std::vector<std::string>{"duration"});
  EXPECT_EQ(s.cursor, "duration");
  s = answer(s, q(), "duration", t::dpv::FixedDuration, v());
  s = answer(s, q(), "risk-harm@2", t::risk::PhysicalHarm, v());
  missing = missing_answers(s, q());
  EXPECT_NE(std::find(missing.begin(), missing.end(), "risk-residual-level@2"), missing.end());
  try {
    compile(s, q(), v());
    FAIL();
  } catch (const MissingAnswersError& e) {
    EXPECT_EQ(e.missing(), missing);
  }
}

TEST(Session, JsonRoundTrip) {
  auto s = answered(golden_values());
  EXPECT_EQ(session_from_json(to_json(s), q(), v()), s);
  auto closed = mark_compiled(s);
  EXPECT_EQ(session_from_json(to_json(closed), q(), v()), closed);
}

TEST(Compile, ClosedSessionIsRejected) {
  auto s = mark_compiled(answered(golden_values()));
  EXPECT_THROW(compile(s, q(), v()), SessionClosedError);
  EXPECT_THROW(answer(s, q(), "process", std::string("x"), v()), SessionClosedError);
  auto reopened = reopen_session(s, q());
  EXPECT_EQ(reopened.status, SessionStatus::Open);
  EXPECT_NO_THROW(compile(reopened, q(), v()));
}

TEST(Compile, FragmentIsTypedAndUsesCataloguedPredicates) {
  auto c = compile(answered(golden_values()), q(), v());
  EXPECT_EQ(c.completed_questionnaire, completed_questionnaire_iri(kRecord));
  EXPECT_TRUE(v().is_instance_of(c.fragment, c.completed_questionnaire, t::fria::FRIACompletedQuestionnaire));
  EXPECT_TRUE(v().is_instance_of(c.fragment, c.completed_questionnaire, t::fria::FRIAQuestionnaire));
  for (const auto& tr : c.fragment)
    EXPECT_TRUE(v().contains(tr.predicate()) || tr.predicate() == t::rdf::type) << tr.predicate().str();
  ASSERT_TRUE(c.inputs);
  EXPECT_EQ(c.inputs->frequency, t::dpv::ContinuousFrequency);
  EXPECT_EQ(c.inputs->mitigation_measures.size(), 2u);
  ASSERT_TRUE(c.necessity);
  EXPECT_EQ(c.necessity->justification, fria::testing::golden_answers()["necessity-justification"]);
}

TEST(Compile, AnswerOrderDoesNotMatter) {
  auto values = golden_values();
  const auto expected = rdf::serialize_ntriples(compile(answered(values), q(), v()).fragment);
  std::mt19937 rng(23);
  for (int i = 0; i < 25; ++i) {
    std::shuffle(values.begin(), values.end(), rng);
    auto c = compile(answered(values), q(), v());
    ASSERT_EQ(rdf::serialize_ntriples(c.fragment), expected);
  }
}

TEST(Json, QuestionDescription) {
  auto j = question_json(*q().find("duration"), v());
  EXPECT_EQ(j["id"], "duration");
  EXPECT_EQ(j["answer_kind"]["kind"], "iri_choice");
  EXPECT_EQ(j["answer_kind"]["class"], t::dpv::Duration.str());
  EXPECT_EQ(j["required"], true);
  EXPECT_TRUE(j["choices"].is_array());
  EXPECT_FALSE(j["choices"].empty());
}

}  // namespace
}  // namespace fria::questionnaire
