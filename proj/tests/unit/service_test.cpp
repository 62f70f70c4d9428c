#include <gtest/gtest.h>

#include <thread>

#include <httplib.h>

#include "fria/rdf/io.h"
#include "fria/service/server.h"
#include "fria/vocab/terms.h"
#include "support.h"

namespace fria::service {
namespace {

using nlohmann::json;
using fria::testing::TempDir;

class ServiceTest : public ::testing::Test {
 protected:
  void start(ServiceConfig cfg = {}) {
    cfg.port = 0;
    cfg.threads = 2;
    service_ = std::make_unique<Service>(engine_, cfg);
    port_ = service_->bind();
    thread_ = std::thread([this] { service_->run(); });
    service_->wait_until_ready();
    client_ = std::make_unique<httplib::Client>("127.0.0.1", port_);
  }
  void SetUp() override { start(); }
  void TearDown() override {
    service_->stop();
    if (thread_.joinable()) thread_.join();
  }

  httplib::Result post(const std::string& path, const json& body) {
    return client_->Post(path, body.dump(), "application/json");
  }
  static json body(const httplib::Result& r) { return json::parse(r->body); }

  TempDir dir_;
  store::Engine engine_{fria::testing::golden_config(dir_.path())};
  std::unique_ptr<Service> service_;
  std::thread thread_;
  int port_ = 0;
  std::unique_ptr<httplib::Client> client_;
};

TEST_F(ServiceTest, CreateListAndView) {
  auto r = post("/records", {{"id", "a"}});
  ASSERT_TRUE(r);
  EXPECT_EQ(r->status, 201);
  EXPECT_EQ(r->get_header_value("Content-Type"), "application/json");
  auto j = body(r);
  for (const auto& key :
       {"id", "iri", "version", "state", "state_kind", "accepted_events", "record", "session", "next_question"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["version"], 1);
  EXPECT_EQ(j["state"], "Draft");
  EXPECT_EQ(j["accepted_events"], json::array({"AssessNecessity"}));

  auto auto_id = post("/records", json::object());
  EXPECT_EQ(auto_id->status, 201);
  EXPECT_EQ(body(auto_id)["id"], "fria-0002");

  auto list = client_->Get("/records");
  EXPECT_EQ(body(list), (json{{"records", {"a", "fria-0002"}}}));
  EXPECT_EQ(body(client_->Get("/records/a")), j);
}

TEST_F(ServiceTest, NotFound) {
  auto r = client_->Get("/records/missing");
  EXPECT_EQ(r->status, 404);
  EXPECT_EQ(body(r)["error"]["type"], "RecordNotFound");
  auto route = client_->Get("/nowhere");
  EXPECT_EQ(route->status, 404);
  EXPECT_EQ(body(route)["error"]["type"], "NotFound");
  post("/records", {{"id", "a"}});
  auto cq = client_->Get("/records/a/cq/9");
  EXPECT_EQ(cq->status, 404);
  EXPECT_EQ(body(cq)["error"]["type"], "UnknownCompetencyQuestion");
  auto notice = client_->Get("/records/a/notice");
  EXPECT_EQ(notice->status, 404);
  EXPECT_EQ(body(notice)["error"]["type"], "NoNotice");
}

TEST_F(ServiceTest, BadRequests) {
  auto r = client_->Post("/records", "{not json", "application/json");
  EXPECT_EQ(r->status, 400);
  EXPECT_EQ(body(r)["error"]["type"], "BadRequest");
  EXPECT_EQ(post("/records", json::array())->status, 400);
  auto bad_id = post("/records", {{"id", ".hidden"}});
  EXPECT_EQ(bad_id->status, 400);
  EXPECT_EQ(body(bad_id)["error"]["type"], "InvalidRecordId");
  post("/records", {{"id", "a"}});
  EXPECT_EQ(post("/records/a/touch", {{"version", "one"}})->status, 400);
  EXPECT_EQ(post("/records/a/answers", {{"value", 1}})->status, 400);
  auto fmt = client_->Get("/records/a/export?format=xml");
  EXPECT_EQ(fmt->status, 400);
  EXPECT_EQ(body(fmt)["error"]["type"], "FormatError");
}

TEST_F(ServiceTest, DuplicateAndStaleWritesConflict) {
  post("/records", {{"id", "a"}});
  auto dup = post("/records", {{"id", "a"}});
  EXPECT_EQ(dup->status, 409);
  EXPECT_EQ(body(dup)["error"]["type"], "RecordExists");
  EXPECT_EQ(post("/records/a/touch", {{"version", 1}})->status, 200);
  auto stale = post("/records/a/touch", {{"version", 1}});
  EXPECT_EQ(stale->status, 409);
  auto e = body(stale)["error"];
  EXPECT_EQ(e["type"], "VersionConflict");
  EXPECT_EQ(e["expected"], 1);
  EXPECT_EQ(e["actual"], 2);
}

TEST_F(ServiceTest, IllegalTransitionIs409) {
  post("/records", {{"id", "a"}});
  auto r = post("/records/a/outcome", json::object());
  EXPECT_EQ(r->status, 409);
  auto e = body(r)["error"];
  EXPECT_EQ(e["type"], "IllegalTransition");
  EXPECT_EQ(e["state"], "Draft");
  EXPECT_EQ(e["event"], "DetermineOutcome");
}

TEST_F(ServiceTest, WrongClassAnswerCarriesModuleMessage) {
  post("/records", {{"id", "a"}});
  engine_.create("direct");
  std::string expected;
  try {
    engine_.answer("direct", {{"frequency", "dpv:FixedDuration"}});
    FAIL();
  } catch (const questionnaire::AnswerTypeError& e) {
    expected = e.what();
  }
  auto r = post("/records/a/answers", {{"question_id", "frequency"}, {"value", "dpv:FixedDuration"}});
  EXPECT_EQ(r->status, 422);
  EXPECT_EQ(body(r)["error"]["type"], "AnswerTypeError");
  EXPECT_EQ(body(r)["error"]["message"], expected);
  EXPECT_EQ(body(client_->Get("/records/a"))["version"], 1);

  auto unknown = post("/records/a/answers", {{"answers", {{"nope", "x"}}}});
  EXPECT_EQ(unknown->status, 422);
  EXPECT_EQ(body(unknown)["error"]["type"], "UnknownQuestion");
}

TEST_F(ServiceTest, PreconditionsAre422) {
  post("/records", {{"id", "a"}});
  auto r = post("/records/a/necessity", {{"flags", {{"bogus", true}}}});
  EXPECT_EQ(r->status, 422);
  EXPECT_EQ(body(r)["error"]["type"], "PreconditionError");
  post("/records/a/necessity", {{"flags", {{"public-body", true}}}});
  auto missing = post("/records/a/compile", json::object());
  EXPECT_EQ(missing->status, 422);
  EXPECT_EQ(body(missing)["error"]["type"], "MissingAnswers");
  EXPECT_TRUE(body(missing)["error"]["missing"].is_array());
}

TEST_F(ServiceTest, GoldenPathShapes) {
  post("/records", {{"id", "g"}});
  auto nec = post("/records/g/necessity", {{"flags", {{"public-body", true}}}, {"version", 1}});
  EXPECT_EQ(body(nec)["state"], "NecessityDone(required)");

  auto next = body(client_->Get("/records/g/questionnaire/next"));
  EXPECT_EQ(next["session_status"], "open");
  EXPECT_TRUE(next["question"].is_object());
  EXPECT_TRUE(next["section"].contains("title"));

  auto ans = post("/records/g/answers", {{"answers", fria::testing::golden_answers()}});
  ASSERT_EQ(ans->status, 200) << ans->body;
  EXPECT_EQ(body(ans)["next_question"], nullptr);
  auto done = body(client_->Get("/records/g/questionnaire/next"));
  EXPECT_EQ(done["remaining"], 0);
  EXPECT_EQ(done["question"], nullptr);

  auto comp = body(post("/records/g/compile", json::object()));
  EXPECT_EQ(comp["report"]["conforms"], true);
  EXPECT_EQ(comp["state"], "InputsComplete");

  auto out = body(post("/records/g/outcome", json::object()));
  EXPECT_EQ(out["status"], terms::fria::FRIAOutcomeRisksMitigated.str());
  EXPECT_EQ(out["status_curie"], "fria:FRIAOutcomeRisksMitigated");
  EXPECT_EQ(out["deployment_permitted"], true);

  auto cq5 = body(client_->Get("/records/g/cq/CQ5"));
  EXPECT_EQ(cq5["cq"], "CQ5");
  EXPECT_EQ(cq5["empty_reason"], nullptr);

  post("/records/g/notification", {{"authority", fria::testing::kAuthority}});
  auto notice = body(client_->Get("/records/g/notice"));
  EXPECT_EQ(notice["authority"], fria::testing::kAuthority);
  EXPECT_EQ(notice["sent_on"], nullptr);
  EXPECT_NE(notice["text"].get<std::string>().find("NOTIFICATION OF FRIA RESULTS"), std::string::npos);
  auto sent = body(post("/records/g/notification/sent", json::object()));
  EXPECT_EQ(sent["state"], "Complete");
  EXPECT_EQ(body(client_->Get("/records/g/notice"))["sent_on"], fria::testing::kGoldenDate);

  auto log = body(client_->Get("/records/g/log"));
  EXPECT_EQ(log["version"], log["log"].size());
  for (const auto& key : {"when", "from", "event", "to"}) EXPECT_TRUE(log["log"][0].contains(key));

  auto reopen = body(post("/records/g/reopen", {{"reason", "new camera"}}));
  EXPECT_TRUE(reopen.is_object());
}

TEST_F(ServiceTest, GetsDoNotMutate) {
  post("/records", {{"id", "a"}});
  post("/records/a/necessity", {{"flags", {{"public-body", true}}}});
  auto before = engine_.get("a");
  auto files = [&] {
    std::vector<std::string> out;
    for (const auto* f : {"record.ttl", "session.json", "log.txt"})
      out.push_back(fria::testing::read_file(dir_.path() / "a" / f));
    return out;
  };
  auto snap = files();
  for (const auto* path : {"/records", "/records/a", "/records/a/log", "/records/a/questionnaire",
                           "/records/a/questionnaire/next", "/records/a/validation", "/records/a/cq/1",
                           "/records/a/export", "/records/a/notice", "/ontology"})
    ASSERT_TRUE(client_->Get(path)) << path;
  EXPECT_EQ(engine_.get("a").version, before.version);
  EXPECT_EQ(files(), snap);
}

TEST_F(ServiceTest, ExportNegotiation) {
  post("/records", {{"id", "a"}});
  auto ttl = client_->Get("/records/a/export");
  EXPECT_EQ(ttl->get_header_value("Content-Type"), "text/turtle");
  auto nt = client_->Get("/records/a/export", {{"Accept", "application/n-triples"}});
  EXPECT_EQ(nt->get_header_value("Content-Type"), "application/n-triples");
  EXPECT_EQ(rdf::serialize_ntriples(rdf::parse_turtle(ttl->body)), nt->body);
  EXPECT_EQ(nt->body, engine_.export_record("a", "nt"));
  auto js = client_->Get("/records/a/export", {{"Accept", "application/json"}});
  EXPECT_EQ(js->get_header_value("Content-Type"), "application/json");
  EXPECT_NO_THROW(json::parse(js->body));
  auto report = client_->Get("/records/a/export?format=report-json");
  EXPECT_TRUE(json::parse(report->body).contains("violations"));
  auto onto = client_->Get("/ontology?format=nt");
  EXPECT_EQ(onto->body, rdf::serialize_ntriples(engine_.ontology()));
  EXPECT_EQ(client_->Get("/ontology?format=json")->status, 400);
}

TEST_F(ServiceTest, NoCorsByDefault) {
  auto r = client_->Get("/records");
  EXPECT_FALSE(r->has_header("Access-Control-Allow-Origin"));
}

class CorsTest : public ServiceTest {
 protected:
  void SetUp() override {
    ServiceConfig cfg;
    cfg.cors_origin = "http://localhost:5173";
    start(cfg);
  }
};

TEST_F(CorsTest, HeadersAndPreflight) {
  auto r = client_->Get("/records");
  EXPECT_EQ(r->get_header_value("Access-Control-Allow-Origin"), "http://localhost:5173");
  auto pre = client_->Options("/records/a/answers");
  EXPECT_EQ(pre->status, 204);
  EXPECT_EQ(pre->get_header_value("Access-Control-Allow-Origin"), "http://localhost:5173");
  EXPECT_NE(pre->get_header_value("Access-Control-Allow-Methods").find("POST"), std::string::npos);
  auto err = client_->Get("/records/missing");
  EXPECT_EQ(err->get_header_value("Access-Control-Allow-Origin"), "http://localhost:5173");
}

TEST(Classify, StatusTable) {
  auto status = [](auto ex) { return classify(std::make_exception_ptr(ex)).status; };
  EXPECT_EQ(status(store::RecordNotFound("x")), 404);
  EXPECT_EQ(status(store::VersionConflict(1, 2)), 409);
  EXPECT_EQ(status(store::RecordExists("x")), 409);
  EXPECT_EQ(status(workflow::IllegalTransition("Draft", "Reopen")), 409);
  EXPECT_EQ(status(questionnaire::SessionClosedError("x")), 409);
  EXPECT_EQ(status(workflow::InputsIncomplete({})), 422);
  EXPECT_EQ(status(questionnaire::MissingAnswersError({"a"})), 422);
  EXPECT_EQ(status(notification::NotificationError("x")), 422);
  EXPECT_EQ(status(model::ModelError("x")), 422);
  EXPECT_EQ(status(validation::CqError("x")), 404);
  EXPECT_EQ(status(store::FormatError("x")), 400);
  EXPECT_EQ(status(RequestError("x")), 400);
  EXPECT_EQ(status(store::InvalidRecordId("x")), 400);
  EXPECT_EQ(status(store::StoreError("x")), 500);
  EXPECT_EQ(status(std::runtime_error("x")), 500);
  auto info = classify(std::make_exception_ptr(std::runtime_error("boom")));
  EXPECT_EQ(info.body, (json{{"error", {{"type", "InternalError"}, {"message", "boom"}}}}));
}

}  // namespace
}  // namespace fria::service
