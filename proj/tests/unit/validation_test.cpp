#include <gtest/gtest.h>

#include "checks.h"
#include "fria/model/mapping.h"
#include "fria/notification/notice.h"
#include "fria/rdf/io.h"
#include "fria/validation/competency.h"
#include "fria/validation/validator.h"
#include "fria/vocab/terms.h"
#include "support.h"

namespace fria::validation {
namespace {

namespace t = terms;
using fria::testing::TempDir;

class GoldenGraph : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    dir_ = new TempDir;
    engine_ = new store::Engine(fria::testing::golden_config(dir_->path()));
    fria::testing::golden_via_engine(*engine_);
  }
  static void TearDownTestSuite() {
    delete engine_;
    delete dir_;
  }
  static rdf::Graph graph() { return engine_->graph(engine_->get(fria::testing::kGoldenId)); }
  static Iri record() { return engine_->get(fria::testing::kGoldenId).record.iri; }
  static const vocab::Vocabulary& v() { return engine_->vocab(); }

  static TempDir* dir_;
  static store::Engine* engine_;
};
TempDir* GoldenGraph::dir_ = nullptr;
store::Engine* GoldenGraph::engine_ = nullptr;

TEST(Validate, EmptyGraphConforms) {
  auto r = validate(rdf::Graph{}, builtin_shapes(), vocab::catalog());
  EXPECT_TRUE(r.conforms);
  EXPECT_TRUE(r.violations.empty());
}

TEST(Shapes, BuiltinShapesAreWellFormed) {
  EXPECT_NO_THROW(check_shapes(builtin_shapes(), vocab::catalog()));
  auto shapes = builtin_shapes();
  shapes.push_back(shapes.front());
  EXPECT_THROW(check_shapes(shapes, vocab::catalog()), ShapeError);
  shapes.pop_back();
  shapes.front().constraints.push_back({t::dct::title, 2, 1, {}, {}, {}, "", ""});
  EXPECT_THROW(check_shapes(shapes, vocab::catalog()), ShapeError);
}

TEST(Shapes, MutationCoverage) {
  auto r = fria::testing::check_shape_coverage();
  EXPECT_TRUE(r.pass) << r.detail;
}

TEST_F(GoldenGraph, Conforms) {
  auto r = validate(graph(), builtin_shapes(v()), v());
  EXPECT_TRUE(r.conforms) << to_text(r, v());
}

TEST_F(GoldenGraph, MissingDurationIsOneViolation) {
  auto g = graph();
  const Iri proc = model::procedure_node(record());
  auto dur = g.objects(proc, t::dpv::hasDuration);
  ASSERT_EQ(dur.size(), 1u);
  g.erase(rdf::Triple(proc, t::dpv::hasDuration, dur.front()));
  auto r = validate(g, builtin_shapes(v()), v());
  EXPECT_FALSE(r.conforms);
  ASSERT_EQ(r.violations.size(), 1u);
  const auto& x = r.violations.front();
  EXPECT_EQ(x.path, t::dpv::hasDuration);
  EXPECT_EQ(x.constraint_kind, "min_count");
  EXPECT_EQ(x.focus, rdf::Term(proc));
  EXPECT_NE(x.source.find("27(1)(b)"), std::string::npos) << x.source;
}

TEST_F(GoldenGraph, TwoOutcomeStatusesBreakMaxCount) {
  auto g = graph();
  const Iri out = model::outcome_node(record());
  g.insert(out, t::dpv::hasStatus, t::fria::FRIAOutcomeUnacceptableRisk);
  auto r = validate(g, builtin_shapes(v()), v());
  EXPECT_FALSE(r.conforms);
  bool found = false;
  for (const auto& x : r.violations)
    found |= x.focus == rdf::Term(out) && x.constraint_kind == "max_count" && x.path == t::dpv::hasStatus;
  EXPECT_TRUE(found) << to_text(r, v());
}

TEST_F(GoldenGraph, ForeignStatusIsRejected) {
  auto g = graph();
  const Iri out = model::outcome_node(record());
  g.erase(rdf::Triple(out, t::dpv::hasStatus, t::fria::FRIAOutcomeRisksMitigated));
  g.insert(out, t::dpv::hasStatus, t::fria::FRIANotificationSent);
  auto r = validate(g, builtin_shapes(v()), v());
  ASSERT_FALSE(r.conforms);
  EXPECT_EQ(r.violations.front().constraint_kind, "value_in");
}

TEST_F(GoldenGraph, ReportIsDeterministic) {
  auto g = graph();
  g.erase(rdf::Triple(model::outcome_node(record()), t::dpv::hasStatus, t::fria::FRIAOutcomeRisksMitigated));
  g.erase(rdf::Triple(model::procedure_node(record()), t::dpv::hasFrequency, t::dpv::ContinuousFrequency));
  auto a = validate(g, builtin_shapes(v()), v());
  auto b = validate(rdf::parse_ntriples(rdf::serialize_ntriples(g)), builtin_shapes(v()), v());
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.violations.size(), 2u);
  EXPECT_TRUE(std::is_sorted(a.violations.begin(), a.violations.end(), [](const auto& x, const auto& y) {
    return std::tie(x.focus, x.shape_id) < std::tie(y.focus, y.shape_id);
  }));
  auto j = to_json(a);
  EXPECT_EQ(j["conforms"], false);
  for (const auto& key : {"focus", "shape", "path", "constraint", "message", "source"})
    EXPECT_TRUE(j["violations"][0].contains(key)) << key;
}

TEST(Competency, GoldenBindings) {
  auto r = fria::testing::check_competency_questions();
  EXPECT_TRUE(r.pass) << r.detail;
}

TEST(Competency, ParseIds) {
  EXPECT_EQ(parse_cq_id("5"), 5);
  EXPECT_EQ(parse_cq_id("CQ8"), 8);
  EXPECT_EQ(parse_cq_id("cq1"), 1);
  EXPECT_THROW(parse_cq_id("9"), CqError);
  EXPECT_THROW(parse_cq_id("CQ"), CqError);
  EXPECT_THROW(parse_cq_id("10"), CqError);
  EXPECT_THROW(cq_question(0), CqError);
}

TEST(Competency, FreshRecordReasons) {
  TempDir dir;
  store::Engine engine(fria::testing::golden_config(dir.path()));
  engine.create("fresh");
  EXPECT_EQ(engine.cq("fresh", 5).empty_reason, "outcome not determined");
  EXPECT_EQ(engine.cq("fresh", 2).empty_reason, "inputs not recorded");
  EXPECT_EQ(engine.cq("fresh", 7).empty_reason, "no notice prepared");
  EXPECT_FALSE(engine.cq("fresh", 1).empty_reason);
  EXPECT_FALSE(engine.cq("fresh", 8).empty_reason);
}

TEST(Competency, UntypedRecordIsAnError) {
  EXPECT_THROW(answer_cq(rdf::Graph{}, Iri("https://example.com/x"), 1, vocab::catalog()), CqError);
}

TEST_F(GoldenGraph, Cq5IsTheOutcome) {
  auto a = answer_cq(graph(), record(), 5, v());
  ASSERT_EQ(a.bindings.size(), 1u);
  EXPECT_EQ(a.bindings[0][0], rdf::Term(t::fria::FRIAOutcomeRisksMitigated));
}

TEST_F(GoldenGraph, Cq6MatchesNoticeRights) {
  auto a = answer_cq(graph(), record(), 6, v());
  auto notice = engine_->notice(fria::testing::kGoldenId);
  ASSERT_TRUE(notice);
  std::vector<Iri> rights;
  for (const auto& row : a.bindings) rights.push_back(std::get<Iri>(row[0]));
  EXPECT_EQ(rights, notice->summary.rights);
  EXPECT_EQ(rights, std::vector<Iri>{t::eu_rights::NonDiscrimination});
}

TEST_F(GoldenGraph, Cq7NamesTheAuthority) {
  auto a = answer_cq(graph(), record(), 7, v());
  ASSERT_EQ(a.bindings.size(), 1u);
  EXPECT_EQ(a.bindings[0][0], rdf::Term(Iri(fria::testing::kAuthority)));
  EXPECT_NE(to_text(a, v()).find("authority="), std::string::npos);
}

}  // namespace
}  // namespace fria::validation
