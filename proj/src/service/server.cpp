#include "fria/service/server.h"

#include <httplib.h>

#include "fria/model/record_json.h"
#include "fria/rdf/io.h"
#include "fria/vocab/terms.h"

namespace fria::service {

namespace {

using nlohmann::json;
using rdf::Iri;
namespace q = questionnaire;
namespace t = terms;

json error_body(const std::string& type, const std::string& message) {
  return {{"error", {{"type", type}, {"message", message}}}};
}

json record_view(const store::StoredRecord& s, const store::Engine& e) { return store::to_json(s, e.vocab()); }

json parse_body(const httplib::Request& req) {
  if (req.body.empty()) return json::object();
  try {
    auto j = json::parse(req.body);
    if (!j.is_object()) throw RequestError("request body must be a JSON object");
    return j;
  } catch (const json::parse_error& e) {
    throw RequestError(std::string("request body is not valid JSON: ") + e.what());
  }
}

std::optional<int> version_of(const json& body) {
  if (!body.contains("version") || body.at("version").is_null()) return std::nullopt;
  if (!body.at("version").is_number_integer()) throw RequestError("'version' must be an integer");
  return body.at("version").get<int>();
}

std::string string_of(const json& body, const char* name, const std::string& fallback = "") {
  if (!body.contains(name) || body.at(name).is_null()) return fallback;
  if (!body.at(name).is_string()) throw RequestError(std::string("'") + name + "' must be a string");
  return body.at(name).get<std::string>();
}

std::optional<Iri> iri_of(const json& body, const char* name, const vocab::Vocabulary& v) {
  auto text = string_of(body, name);
  if (text.empty()) return std::nullopt;
  auto iri = v.expand(text);
  if (!iri) throw RequestError(std::string("'") + name + "': '" + text + "' is not an IRI");
  return iri;
}

void send_json(httplib::Response& res, const json& j, int status = 200) {
  res.status = status;
  res.set_content(j.dump(2) + "\n", "application/json");
}

std::string export_format(const httplib::Request& req) {
  if (req.has_param("format")) return req.get_param_value("format");
  auto accept = req.get_header_value("Accept");
  if (accept.find("application/n-triples") != std::string::npos) return "nt";
  if (accept.find("application/json") != std::string::npos && accept.find("text/turtle") == std::string::npos)
    return "json";
  return "ttl";
}

const char* content_type(const std::string& format) {
  if (format == "nt") return "application/n-triples";
  if (format == "ttl") return "text/turtle";
  return "application/json";
}

}  // namespace

ErrorInfo classify(std::exception_ptr e) {
  try {
    std::rethrow_exception(e);
  } catch (const store::RecordNotFound& x) {
    return {404, error_body("RecordNotFound", x.what())};
  } catch (const store::VersionConflict& x) {
    auto b = error_body("VersionConflict", x.what());
    b["error"]["expected"] = x.expected();
    b["error"]["actual"] = x.actual();
    return {409, b};
  } catch (const store::RecordExists& x) {
    return {409, error_body("RecordExists", x.what())};
  } catch (const workflow::IllegalTransition& x) {
    auto b = error_body("IllegalTransition", x.what());
    b["error"]["state"] = x.state();
    b["error"]["event"] = x.event();
    return {409, b};
  } catch (const q::SessionClosedError& x) {
    return {409, error_body("SessionClosed", x.what())};
  } catch (const workflow::InputsIncomplete& x) {
    auto b = error_body("InputsIncomplete", x.what());
    b["error"]["report"] = validation::to_json(x.report());
    return {422, b};
  } catch (const q::MissingAnswersError& x) {
    auto b = error_body("MissingAnswers", x.what());
    b["error"]["missing"] = x.missing();
    return {422, b};
  } catch (const q::AnswerTypeError& x) {
    return {422, error_body("AnswerTypeError", x.what())};
  } catch (const q::UnknownQuestionError& x) {
    return {422, error_body("UnknownQuestion", x.what())};
  } catch (const q::SessionError& x) {
    return {422, error_body("SessionError", x.what())};
  } catch (const q::QuestionnaireError& x) {
    return {422, error_body("QuestionnaireError", x.what())};
  } catch (const workflow::PreconditionError& x) {
    return {422, error_body("PreconditionError", x.what())};
  } catch (const workflow::WorkflowError& x) {
    return {422, error_body("WorkflowError", x.what())};
  } catch (const notification::NotificationError& x) {
    return {422, error_body("NotificationError", x.what())};
  } catch (const model::ModelError& x) {
    return {422, error_body("ModelError", x.what())};
  } catch (const vocab::VocabularyError& x) {
    return {422, error_body("VocabularyError", x.what())};
  } catch (const validation::CqError& x) {
    return {404, error_body("UnknownCompetencyQuestion", x.what())};
  } catch (const store::FormatError& x) {
    return {400, error_body("FormatError", x.what())};
  } catch (const RequestError& x) {
    return {400, error_body("BadRequest", x.what())};
  } catch (const store::InvalidRecordId& x) {
    return {400, error_body("InvalidRecordId", x.what())};
  } catch (const store::StoreError& x) {
    return {500, error_body("StoreError", x.what())};
  } catch (const std::exception& x) {
    return {500, error_body("InternalError", x.what())};
  } catch (...) {
    return {500, error_body("InternalError", "unknown error")};
  }
}

struct Service::Impl {
  store::Engine& engine;
  ServiceConfig config;
  httplib::Server server;

  Impl(store::Engine& e, ServiceConfig c) : engine(e), config(std::move(c)) {
    int n = std::max(1, config.threads);
    server.new_task_queue = [n] { return new httplib::ThreadPool(n); };
    if (config.cors_origin) {
      server.set_default_headers({{"Access-Control-Allow-Origin", *config.cors_origin},
                                  {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
                                  {"Access-Control-Allow-Headers", "Content-Type, Accept"}});
      server.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
    }
    server.set_exception_handler([](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
      auto info = classify(ep);
      send_json(res, info.body, info.status);
    });
    // unmatched routes and other bodiless errors
    server.set_error_handler([](const httplib::Request& req, httplib::Response& res) {
      if (!res.body.empty()) return;
      auto type = res.status == 404 ? "NotFound" : "HttpError";
      send_json(res, error_body(type, req.method + " " + req.path + ": " + httplib::status_message(res.status)),
                res.status);
    });
    routes();
  }

  // Wraps a handler so that operation errors become JSON responses.
  template <typename F>
  httplib::Server::Handler guard(F f) {
    return [f](const httplib::Request& req, httplib::Response& res) {
      try {
        f(req, res);
      } catch (...) {
        auto info = classify(std::current_exception());
        send_json(res, info.body, info.status);
      }
    };
  }

  void routes() {
    auto& e = engine;
    const auto& v = engine.vocab();
    const std::string rec = R"(/records/([A-Za-z0-9_][A-Za-z0-9._-]*))";

    server.Get("/records", guard([&](const httplib::Request&, httplib::Response& res) {
      send_json(res, {{"records", e.records().list()}});
    }));

    server.Post("/records", guard([&](const httplib::Request& req, httplib::Response& res) {
      auto body = parse_body(req);
      std::string id = string_of(body, "id");
      store::StoredRecord s = [&] {
        if (!id.empty()) return e.create(id);
        for (int n = static_cast<int>(e.records().list().size()) + 1;; ++n) {
          char buf[32];
          std::snprintf(buf, sizeof buf, "fria-%04d", n);
          try {
            return e.create(buf);
          } catch (const store::RecordExists&) {
          }
        }
      }();
      send_json(res, record_view(s, e), 201);
    }));

    server.Get(rec, guard([&](const httplib::Request& req, httplib::Response& res) {
      send_json(res, record_view(e.get(req.matches[1]), e));
    }));

    server.Get(rec + "/log", guard([&](const httplib::Request& req, httplib::Response& res) {
      auto s = e.get(req.matches[1]);
      json log = json::array();
      for (const auto& l : s.log) log.push_back({{"when", l.when}, {"from", l.from}, {"event", l.event}, {"to", l.to}});
      send_json(res, {{"id", s.id}, {"version", s.version}, {"log", log}});
    }));

    server.Post(rec + "/necessity", guard([&](const httplib::Request& req, httplib::Response& res) {
      auto body = parse_body(req);
      std::map<std::string, bool> flags;
      if (body.contains("flags")) {
        if (!body.at("flags").is_object()) throw RequestError("'flags' must be an object of booleans");
        for (const auto& [k, val] : body.at("flags").items()) {
          if (!val.is_boolean()) throw RequestError("flag '" + k + "' must be a boolean");
          flags[k] = val.get<bool>();
        }
      }
      std::optional<Iri> status;
      auto st = string_of(body, "status");
      if (st == "required") status = t::fria::FRIARequired;
      else if (st == "not-required") status = t::fria::FRIANotRequired;
      else if (!st.empty()) status = iri_of(body, "status", v);
      auto s = e.necessity(req.matches[1], flags, status, string_of(body, "justification"), version_of(body));
      send_json(res, record_view(s, e));
    }));

    server.Get(rec + "/questionnaire", guard([&](const httplib::Request& req, httplib::Response& res) {
      auto s = e.get(req.matches[1]);
      send_json(res, {{"questionnaire", q::to_json(e.questionnaire(), v)},
                      {"session", s.session ? q::to_json(*s.session) : json(nullptr)},
                      {"version", s.version}});
    }));

    server.Get(rec + "/questionnaire/next", guard([&](const httplib::Request& req, httplib::Response& res) {
      auto s = e.get(req.matches[1]);
      auto session = s.session ? *s.session : q::new_session(e.questionnaire(), s.record.iri, s.id);
      auto next = q::next_question(session, e.questionnaire());
      json out{{"version", s.version},
               {"session_status", session.status == q::SessionStatus::Open ? "open" : "compiled"},
               {"remaining", q::missing_answers(session, e.questionnaire()).size()}};
      if (next) {
        const auto* sec = e.questionnaire().section_of(*next);
        out["question"] = q::question_json(*e.questionnaire().find(*next), v);
        out["section"] = {{"id", sec->id}, {"title", sec->title}};
      } else {
        out["question"] = nullptr;
        out["section"] = nullptr;
      }
      send_json(res, out);
    }));

    server.Post(rec + "/answers", guard([&](const httplib::Request& req, httplib::Response& res) {
      auto body = parse_body(req);
      std::vector<std::pair<std::string, json>> answers;
      if (body.contains("answers")) {
        if (!body.at("answers").is_object()) throw RequestError("'answers' must be an object");
        for (const auto& [k, val] : body.at("answers").items()) answers.emplace_back(k, val);
      } else {
        auto qid = string_of(body, "question_id");
        if (qid.empty()) throw RequestError("give 'question_id' and 'value', or 'answers'");
        if (!body.contains("value")) throw RequestError("missing 'value'");
        answers.emplace_back(qid, body.at("value"));
      }
      send_json(res, record_view(e.answer(req.matches[1], answers, version_of(body)), e));
    }));

    server.Post(rec + "/compile", guard([&](const httplib::Request& req, httplib::Response& res) {
      auto body = parse_body(req);
      auto r = e.compile(req.matches[1], version_of(body));
      send_json(res, {{"report", validation::to_json(r.report)},
                      {"version", r.stored.version},
                      {"state", workflow::to_text(r.stored.state, v)}});
    }));

    server.Get(rec + "/validation", guard([&](const httplib::Request& req, httplib::Response& res) {
      send_json(res, validation::to_json(e.validate(req.matches[1])));
    }));

    server.Get(rec + R"(/cq/([^/]+))", guard([&](const httplib::Request& req, httplib::Response& res) {
      int n = validation::parse_cq_id(req.matches[2].str());
      send_json(res, validation::to_json(e.cq(req.matches[1], n)));
    }));

    server.Post(rec + "/outcome", guard([&](const httplib::Request& req, httplib::Response& res) {
      auto body = parse_body(req);
      auto r = e.outcome(req.matches[1], string_of(body, "rationale"), version_of(body));
      send_json(res, {{"status", r.status.str()},
                      {"status_curie", v.compact(r.status)},
                      {"deployment_permitted", r.deployment_permitted},
                      {"version", r.stored.version},
                      {"state", workflow::to_text(r.stored.state, v)}});
    }));

    server.Post(rec + "/notification", guard([&](const httplib::Request& req, httplib::Response& res) {
      auto body = parse_body(req);
      notification::NotificationDecision d;
      if (body.contains("exempt")) {
        if (!body.at("exempt").is_boolean()) throw RequestError("'exempt' must be a boolean");
        d.exempt = body.at("exempt").get<bool>();
      }
      if (body.contains("basis") && !body.at("basis").is_null()) d.basis = string_of(body, "basis");
      d.authority = iri_of(body, "authority", v);
      d.exemption_status = iri_of(body, "exemption_status", v);
      send_json(res, record_view(e.notify(req.matches[1], d, version_of(body)), e));
    }));

    server.Post(rec + "/notification/sent", guard([&](const httplib::Request& req, httplib::Response& res) {
      auto body = parse_body(req);
      send_json(res, record_view(e.mark_sent(req.matches[1], version_of(body)), e));
    }));

    server.Post(rec + "/reopen", guard([&](const httplib::Request& req, httplib::Response& res) {
      auto body = parse_body(req);
      send_json(res, record_view(e.reopen(req.matches[1], string_of(body, "reason"), version_of(body)), e));
    }));

    server.Post(rec + "/touch", guard([&](const httplib::Request& req, httplib::Response& res) {
      auto body = parse_body(req);
      send_json(res, record_view(e.touch(req.matches[1], version_of(body)), e));
    }));

    server.Get(rec + "/export", guard([&](const httplib::Request& req, httplib::Response& res) {
      auto format = export_format(req);
      res.set_content(e.export_record(req.matches[1], format), content_type(format));
    }));

    server.Get(rec + "/notice", guard([&](const httplib::Request& req, httplib::Response& res) {
      auto n = e.notice(req.matches[1]);
      if (!n) {
        send_json(res, error_body("NoNotice", "record " + req.matches[1].str() + " has no notice"), 404);
        return;
      }
      send_json(res, {{"iri", n->iri.str()},
                      {"authority", n->authority.str()},
                      {"sent_on", n->sent_on ? json(n->sent_on->lexical()) : json(nullptr)},
                      {"text", notification::render_text(*n, v)},
                      {"turtle", rdf::serialize_turtle(notification::notice_graph(*n, v))}});
    }));

    server.Get("/ontology", guard([&](const httplib::Request& req, httplib::Response& res) {
      auto format = export_format(req);
      auto g = e.ontology();
      if (format == "nt")
        res.set_content(rdf::serialize_ntriples(g), content_type("nt"));
      else if (format == "ttl")
        res.set_content(rdf::serialize_turtle(g), content_type("ttl"));
      else
        throw store::FormatError("ontology export supports ttl and nt");
    }));
  }
};

Service::Service(store::Engine& engine, ServiceConfig config)
    : impl_(std::make_unique<Impl>(engine, std::move(config))) {}

Service::~Service() { stop(); }

int Service::bind() {
  auto& c = impl_->config;
  if (c.port == 0) {
    int port = impl_->server.bind_to_any_port(c.host);
    if (port < 0) throw std::runtime_error("cannot bind " + c.host);
    c.port = port;
    return port;
  }
  if (!impl_->server.bind_to_port(c.host, c.port))
    throw std::runtime_error("cannot bind " + c.host + ":" + std::to_string(c.port));
  return c.port;
}

void Service::run() { impl_->server.listen_after_bind(); }

void Service::stop() {
  if (impl_->server.is_running()) impl_->server.stop();
}

void Service::wait_until_ready() const { impl_->server.wait_until_ready(); }

}  // namespace fria::service
