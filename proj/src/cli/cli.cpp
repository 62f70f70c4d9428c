#include "fria/cli/cli.h"

#include <csignal>
#include <fstream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "fria/rdf/io.h"
#include "fria/service/server.h"
#include "fria/vocab/terms.h"
#include "fria/workflow/outcome.h"

namespace fria::cli {

namespace {

using nlohmann::json;
using rdf::Iri;
namespace q = questionnaire;
namespace t = terms;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string store = "fria-store";
  std::string base = store::kDefaultBase;
  std::string questionnaire;
  std::string extension;
  std::string date;
  bool json = false;
};

store::Engine make_engine(const Globals& g) {
  store::EngineConfig c{g.store, Iri(g.base), {}, {}, {}};
  if (!g.questionnaire.empty()) c.questionnaire_path = g.questionnaire;
  if (!g.extension.empty()) c.extension_path = g.extension;
  if (!g.date.empty()) {
    c.date = rdf::Timestamp::parse(g.date);
    if (!c.date) throw UsageError("--date: '" + g.date + "' is not YYYY-MM-DD or an xsd:dateTime");
  }
  return store::Engine(std::move(c));
}

Iri parse_iri(const std::string& text, const vocab::Vocabulary& v, const char* what) {
  auto iri = v.expand(text);
  if (!iri) throw UsageError(std::string(what) + ": '" + text + "' is not an IRI or known prefixed name");
  return *iri;
}

bool parse_bool(const std::string& key, const std::string& text) {
  if (text == "true" || text == "yes" || text == "1") return true;
  if (text == "false" || text == "no" || text == "0") return false;
  throw UsageError("--flag " + key + ": expected true or false, got '" + text + "'");
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void print_record(std::ostream& out, const store::StoredRecord& s, const vocab::Vocabulary& v, bool as_json) {
  if (as_json) {
    out << store::to_json(s, v).dump(2) << "\n";
    return;
  }
  out << s.id << " v" << s.version << " " << workflow::to_text(s.state, v) << "\n";
}

std::optional<int> version_opt(int v) { return v < 0 ? std::nullopt : std::optional<int>(v); }

// Blocks SIGINT/SIGTERM, serves on a worker thread and stops on signal.
int serve(store::Engine& engine, service::ServiceConfig config, std::ostream& out) {
  sigset_t set;
  sigemptyset(&set);
  sigaddset(&set, SIGINT);
  sigaddset(&set, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &set, nullptr);
  service::Service svc(engine, config);
  int port = svc.bind();
  std::thread worker([&] { svc.run(); });
  svc.wait_until_ready();
  out << "listening on http://" << config.host << ":" << port << std::endl;
  int sig = 0;
  sigwait(&set, &sig);
  svc.stop();
  worker.join();
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"FRIA documentation engine: records, questionnaire, validation, notification"};
  app.name("fria");
  app.require_subcommand(1);
  Globals g;
  app.add_option("--store", g.store, "Record store directory")->capture_default_str();
  app.add_option("--base", g.base, "Base IRI for record IRIs")->capture_default_str();
  app.add_option("--questionnaire", g.questionnaire, "JSON questionnaire replacing the builtin one");
  app.add_option("--extension", g.extension, "Turtle file with extra catalog terms");
  app.add_option("--date", g.date, "Pin the clock (YYYY-MM-DD or xsd:dateTime)");
  app.add_flag("--json", g.json, "Machine-readable JSON output");

  std::string id;
  int version = -1;
  auto with_id = [&](CLI::App* sub) {
    sub->add_option("id", id, "Record id")->required();
    return sub;
  };
  auto with_version = [&](CLI::App* sub) {
    sub->add_option("--version", version, "Expected record version (optimistic concurrency)");
    return sub;
  };

  auto* c_new = with_id(app.add_subcommand("new", "Create a Draft record"));

  std::vector<std::string> flags;
  std::string status;
  std::string justification;
  auto* c_nec = with_version(with_id(app.add_subcommand("necessity", "Assess whether a FRIA is required")));
  c_nec->add_option("--flag", flags, "Condition flag key=true|false (repeatable)");
  c_nec->add_option("--status", status, "required | not-required | status IRI");
  c_nec->add_option("--justification", justification, "Free-text justification");

  std::string qid;
  std::string value;
  std::string answers_file;
  auto* c_answer = with_version(with_id(app.add_subcommand("answer", "Answer questionnaire questions")));
  c_answer->add_option("question", qid, "Question id (qid@k for repeated entries)");
  c_answer->add_option("value", value, "Answer value");
  c_answer->add_option("--file", answers_file, "JSON object {question-id: value}");

  auto* c_compile = with_version(with_id(app.add_subcommand("compile", "Compile the questionnaire into the record")));
  auto* c_validate = with_id(app.add_subcommand("validate", "Validate the record; exit 2 if it does not conform"));

  std::string rationale;
  auto* c_outcome = with_version(with_id(app.add_subcommand("outcome", "Derive the outcome from the procedure inputs")));
  c_outcome->add_option("--rationale", rationale, "Free-text rationale");

  std::string cq_id;
  auto* c_cq = with_id(app.add_subcommand("cq", "Answer a competency question (1..8)"));
  c_cq->add_option("n", cq_id, "Question number")->required();

  bool exempt = false;
  bool mark_sent = false;
  std::string basis;
  std::string authority;
  std::string exemption_status;
  auto* c_notify = with_version(with_id(app.add_subcommand("notify", "Notification to the market surveillance authority")));
  c_notify->add_flag("--exempt", exempt, "Claim an exemption from notification");
  c_notify->add_option("--basis", basis, "Legal basis of the exemption");
  c_notify->add_option("--exemption-status", exemption_status, "Catalogued exemption status to record");
  c_notify->add_option("--authority", authority, "Authority IRI; drafts the notice");
  c_notify->add_flag("--mark-sent", mark_sent, "Mark the drafted notice as sent");

  std::string format = "ttl";
  auto* c_export = with_id(app.add_subcommand("export", "Write the record to stdout"));
  c_export->add_option("--format", format, "ttl | nt | report-json | json")->capture_default_str();

  auto* c_notice = with_id(app.add_subcommand("notice", "Print the notice drafted for the authority"));

  auto* c_onto = app.add_subcommand("ontology", "Vocabulary operations");
  c_onto->require_subcommand(1);
  std::string onto_format = "ttl";
  auto* c_onto_export = c_onto->add_subcommand("export", "Write the vocabulary graph to stdout");
  c_onto_export->add_option("--format", onto_format, "ttl | nt")->capture_default_str();

  service::ServiceConfig svc;
  std::string cors;
  auto* c_serve = app.add_subcommand("serve", "Start the HTTP/JSON service");
  c_serve->add_option("--port", svc.port, "Port (0 picks a free one)")->capture_default_str();
  c_serve->add_option("--host", svc.host, "Bind address")->capture_default_str();
  c_serve->add_option("--cors-origin", cors, "Allowed CORS origin");
  c_serve->add_option("--threads", svc.threads, "Worker threads")->capture_default_str();

  std::string reason;
  auto* c_reopen = with_version(with_id(app.add_subcommand("reopen", "Reopen a finished or closed record")));
  c_reopen->add_option("--reason", reason, "Why the assessment is reopened");
  auto* c_touch = with_version(with_id(app.add_subcommand("touch", "Record that assessed information changed")));
  auto* c_status = with_id(app.add_subcommand("status", "Show state, version and questionnaire progress"));
  auto* c_next = with_id(app.add_subcommand("next", "Show the next unanswered required question"));
  auto* c_log = with_id(app.add_subcommand("log", "Show the transition log"));
  auto* c_list = app.add_subcommand("list", "List record ids");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kFault;
  }

  try {
    auto engine = make_engine(g);
    const auto& v = engine.vocab();
    auto ver = version_opt(version);

    if (c_new->parsed()) {
      print_record(out, engine.create(id), v, g.json);
    } else if (c_nec->parsed()) {
      std::map<std::string, bool> parsed;
      for (const auto& f : flags) {
        auto eq = f.find('=');
        if (eq == std::string::npos) throw UsageError("--flag expects key=value, got '" + f + "'");
        parsed[f.substr(0, eq)] = parse_bool(f.substr(0, eq), f.substr(eq + 1));
      }
      std::optional<Iri> st;
      if (status == "required") st = t::fria::FRIARequired;
      else if (status == "not-required") st = t::fria::FRIANotRequired;
      else if (!status.empty()) st = parse_iri(status, v, "--status");
      print_record(out, engine.necessity(id, parsed, st, justification, ver), v, g.json);
    } else if (c_answer->parsed()) {
      if (!answers_file.empty()) {
        if (!qid.empty()) throw UsageError("answer: give either <question> <value> or --file");
        json j;
        try {
          j = json::parse(read_text(answers_file));
        } catch (const json::parse_error& e) {
          throw UsageError(answers_file + ": " + e.what());
        }
        if (!j.is_object()) throw UsageError(answers_file + ": expected a JSON object of answers");
        std::vector<std::pair<std::string, json>> answers;
        for (const auto& [k, val] : j.items()) answers.emplace_back(k, val);
        print_record(out, engine.answer(id, answers, ver), v, g.json);
      } else {
        if (qid.empty() || c_answer->count("value") == 0)
          throw UsageError("answer: give <question> <value> or --file answers.json");
        print_record(out, engine.answer_text(id, qid, value, ver), v, g.json);
      }
    } else if (c_compile->parsed()) {
      auto r = engine.compile(id, ver);
      if (g.json) {
        out << json{{"report", validation::to_json(r.report)},
                    {"version", r.stored.version},
                    {"state", workflow::to_text(r.stored.state, v)}}
                   .dump(2)
            << "\n";
      } else {
        print_record(out, r.stored, v, false);
        out << validation::to_text(r.report, v);
      }
    } else if (c_validate->parsed()) {
      auto r = engine.validate(id);
      if (g.json)
        out << validation::to_json(r).dump(2) << "\n";
      else
        out << validation::to_text(r, v);
      return r.conforms ? kOk : kNonConforming;
    } else if (c_outcome->parsed()) {
      auto r = engine.outcome(id, rationale, ver);
      if (g.json) {
        out << json{{"status", r.status.str()},
                    {"status_curie", v.compact(r.status)},
                    {"deployment_permitted", r.deployment_permitted},
                    {"version", r.stored.version},
                    {"state", workflow::to_text(r.stored.state, v)}}
                   .dump(2)
            << "\n";
      } else {
        out << "outcome: " << v.compact(r.status) << "\n"
            << "deployment permitted: " << (r.deployment_permitted ? "true" : "false") << "\n";
      }
    } else if (c_cq->parsed()) {
      auto a = engine.cq(id, validation::parse_cq_id(cq_id));
      if (g.json)
        out << validation::to_json(a).dump(2) << "\n";
      else
        out << validation::to_text(a, v);
    } else if (c_notify->parsed()) {
      store::StoredRecord s = [&] {
        if (mark_sent) {
          if (exempt || !authority.empty()) throw UsageError("notify: --mark-sent stands alone");
          return engine.mark_sent(id, ver);
        }
        notification::NotificationDecision d;
        d.exempt = exempt;
        if (c_notify->count("--basis")) d.basis = basis;
        if (!authority.empty()) d.authority = parse_iri(authority, v, "--authority");
        if (!exemption_status.empty()) d.exemption_status = parse_iri(exemption_status, v, "--exemption-status");
        return engine.notify(id, d, ver);
      }();
      print_record(out, s, v, g.json);
    } else if (c_export->parsed()) {
      out << engine.export_record(id, format);
    } else if (c_notice->parsed()) {
      auto n = engine.notice(id);
      if (!n) {
        err << "fria: record " << id << " has no notice\n";
        return kFault;
      }
      if (g.json)
        out << json{{"text", notification::render_text(*n, v)},
                    {"turtle", rdf::serialize_turtle(notification::notice_graph(*n, v))}}
                   .dump(2)
            << "\n";
      else
        out << notification::render_text(*n, v);
    } else if (c_onto_export->parsed()) {
      auto onto = engine.ontology();
      if (onto_format == "ttl")
        out << rdf::serialize_turtle(onto);
      else if (onto_format == "nt")
        out << rdf::serialize_ntriples(onto);
      else
        throw UsageError("ontology export: unknown format '" + onto_format + "' (ttl, nt)");
    } else if (c_serve->parsed()) {
      if (!cors.empty()) svc.cors_origin = cors;
      return serve(engine, svc, out);
    } else if (c_reopen->parsed()) {
      print_record(out, engine.reopen(id, reason, ver), v, g.json);
    } else if (c_touch->parsed()) {
      print_record(out, engine.touch(id, ver), v, g.json);
    } else if (c_status->parsed()) {
      auto s = engine.get(id);
      if (g.json) {
        print_record(out, s, v, true);
      } else {
        out << "record: " << s.id << " <" << s.record.iri.str() << ">\n"
            << "state: " << workflow::to_text(s.state, v) << "\n"
            << "version: " << s.version << "\n";
        if (s.session) {
          auto missing = q::missing_answers(*s.session, engine.questionnaire());
          out << "questionnaire: " << (s.session->status == q::SessionStatus::Open ? "open" : "compiled") << ", "
              << s.session->answers.size() << " answered, " << missing.size() << " required missing\n";
        }
        out << "accepts:";
        for (const auto& e : workflow::accepted_events(s.state)) out << " " << e;
        out << "\n";
      }
    } else if (c_next->parsed()) {
      auto n = engine.next_question(id);
      if (!n) {
        out << (g.json ? "null\n" : "all required questions answered\n");
      } else {
        const auto& question = *engine.questionnaire().find(*n);
        if (g.json) {
          out << q::question_json(question, v).dump(2) << "\n";
        } else {
          out << question.id << ": " << question.prompt << "\n";
          for (const auto& c : q::choices(question, v)) out << "  " << v.compact(c) << "\n";
        }
      }
    } else if (c_log->parsed()) {
      for (const auto& l : engine.get(id).log) out << store::to_line(l) << "\n";
    } else if (c_list->parsed()) {
      for (const auto& r : engine.records().list()) out << r << "\n";
    }
    return kOk;
  } catch (const std::exception& e) {
    err << "fria: " << e.what() << "\n";
    if (const auto* m = dynamic_cast<const q::MissingAnswersError*>(&e))
      for (const auto& k : m->missing()) err << "  missing: " << k << "\n";
    if (const auto* inc = dynamic_cast<const workflow::InputsIncomplete*>(&e))
      err << validation::to_text(inc->report(), vocab::catalog());
    return kFault;
  }
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace fria::cli
