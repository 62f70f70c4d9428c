#include "fria/store/operations.h"

#include <cctype>
#include <fstream>
#include <sstream>

#include "fria/model/mapping.h"
#include "fria/model/record_json.h"
#include "fria/rdf/io.h"
#include "fria/validation/shapes.h"
#include "fria/vocab/terms.h"
#include "fria/workflow/outcome.h"

namespace fria::store {

namespace {

namespace t = terms;
namespace ev = workflow::events;
using questionnaire::Session;

std::string token(std::string_view text) {
  static const char* hex = "0123456789ABCDEF";
  std::string out;
  for (unsigned char c : text) {
    if (std::isalnum(c) || c == '-' || c == '_' || c == '.' || c == '@') {
      out += static_cast<char>(c);
    } else {
      out += '%';
      out += hex[c >> 4];
      out += hex[c & 15];
    }
  }
  return out;
}

std::unique_ptr<vocab::Vocabulary> load_vocabulary(const EngineConfig& c) {
  if (!c.extension_path) return std::make_unique<vocab::Vocabulary>(vocab::catalog());
  std::ifstream in(*c.extension_path);
  if (!in) throw StoreError("cannot read vocabulary extension " + c.extension_path->string());
  std::stringstream buf;
  buf << in.rdbuf();
  auto defs = vocab::term_defs_from_graph(rdf::parse_turtle(buf.str()));
  return std::make_unique<vocab::Vocabulary>(vocab::catalog().extended(defs));
}

bool accepts(const workflow::WorkflowState& s, const char* event) {
  for (const auto& e : workflow::accepted_events(s))
    if (e == event) return true;
  return false;
}

// Removes what an earlier compile put into the record: the procedure
// node, the completed questionnaire node and nodes minted under R#.
model::FriaRecord clear_compiled(const model::FriaRecord& r) {
  model::FriaRecord out = r;
  out.inputs.reset();
  const Iri qn = questionnaire::completed_questionnaire_iri(r.iri);
  out.questionnaires.erase(qn);
  const std::set<Iri> keep{model::necessity_node(r.iri), model::outcome_node(r.iri), model::notification_node(r.iri),
                           notification::notice_iri(r.iri)};
  const std::string prefix = r.iri.str() + "#";
  std::vector<rdf::Term> minted;
  for (const auto& tr : out.remainder) {
    const auto* s = std::get_if<Iri>(&tr.subject());
    if (s && s->str().starts_with(prefix) && !keep.count(*s)) minted.push_back(*s);
  }
  for (const auto& m : minted) model::erase_node(out.remainder, m);
  for (const auto& tr : out.remainder.match(r.iri, t::dpv::hasAssessment, model::procedure_node(r.iri)))
    out.remainder.erase(tr);
  return out;
}

// Fragment triples without the necessity stage, which goes through the
// workflow instead.
rdf::Graph without_necessity(const rdf::Graph& g, const Iri& record) {
  rdf::Graph out;
  out.set_prefixes(g.prefixes());
  const Iri node = model::necessity_node(record);
  for (const auto& tr : g) {
    if (tr.subject() == rdf::Term(node)) continue;
    if (tr.object() == rdf::Term(node) && tr.predicate() == t::dpv::hasAssessment) continue;
    out.insert(tr);
  }
  return out;
}

}  // namespace

Engine::Engine(EngineConfig config)
    : config_(std::move(config)),
      vocab_(load_vocabulary(config_)),
      questionnaire_(config_.questionnaire_path
                         ? questionnaire::load_questionnaire(config_.questionnaire_path->string(), *vocab_)
                         : questionnaire::builtin_questionnaire()) {
  questionnaire::check_questionnaire(questionnaire_, *vocab_);
  store_ = std::make_unique<RecordStore>(config_.store_path, *vocab_, questionnaire_);
}

rdf::Timestamp Engine::now() const { return config_.date ? *config_.date : rdf::Timestamp::now_utc(); }

StoredRecord Engine::create(const std::string& id) {
  if (!RecordStore::valid_id(id))
    throw InvalidRecordId("invalid record id '" + id + "' (letters, digits, '-', '_', '.'; not starting with '.' or '-')");
  const Iri iri(config_.base.str() + id);
  auto when = now();
  auto record = model::new_record(iri, id, when);
  auto session = questionnaire::new_session(questionnaire_, iri, id);
  return store_->create(id, record, session, when.lexical(), "Create");
}

StoredRecord Engine::get(const std::string& id) const { return store_->load(id); }

StoredRecord Engine::apply_event(const std::string& id, std::optional<int> version,
                                 const workflow::WorkflowEvent& event) {
  return store_->update(id, version, now().lexical(), [&](const StoredRecord& cur) {
    auto tr = workflow::apply(cur.state, event, cur.record, *vocab_);
    auto session = cur.session;
    if (session && std::holds_alternative<ev::Reopen>(event)) session = questionnaire::reopen_session(*session, questionnaire_);
    return Change{std::move(tr.record), std::move(tr.state), std::move(session), workflow::to_text(event, *vocab_)};
  });
}

StoredRecord Engine::necessity(const std::string& id, const std::map<std::string, bool>& flags,
                               const std::optional<Iri>& status, const std::string& justification,
                               std::optional<int> version) {
  ev::AssessNecessity e{flags, status, justification};
  return store_->update(id, version, now().lexical(), [&](const StoredRecord& cur) {
    auto tr = workflow::apply(cur.state, e, cur.record, *vocab_);
    auto session = cur.session;
    // Pre-fill the questionnaire's necessity answers with what was decided.
    if (session && session->status == questionnaire::SessionStatus::Open) {
      for (const auto* q : questionnaire_.questions()) {
        if (q->target_stage != questionnaire::Stage::Necessity) continue;
        if (q->maps_to == t::dpv::hasStatus && q->answer_kind.tag == questionnaire::AnswerKindTag::IriChoice)
          session = questionnaire::answer(*session, questionnaire_, q->id, tr.record.necessity->status, *vocab_);
        else if (q->maps_to == t::dct::description && q->answer_kind.tag == questionnaire::AnswerKindTag::Text &&
                 !justification.empty())
          session = questionnaire::answer(*session, questionnaire_, q->id, justification, *vocab_);
      }
    }
    return Change{std::move(tr.record), std::move(tr.state), std::move(session), workflow::to_text(e, *vocab_)};
  });
}

StoredRecord Engine::answer(const std::string& id, const std::vector<std::pair<std::string, nlohmann::json>>& answers,
                            std::optional<int> version) {
  if (answers.empty()) throw questionnaire::SessionError("no answers given");
  return store_->update(id, version, now().lexical(), [&](const StoredRecord& cur) {
    Session s = cur.session ? *cur.session : questionnaire::new_session(questionnaire_, cur.record.iri, cur.id);
    std::string keys;
    for (const auto& [key, value] : answers) {
      auto k = questionnaire::resolve_key(questionnaire_, key);
      s = questionnaire::answer(s, questionnaire_, key,
                                questionnaire::answer_from_json(*k.question, value, *vocab_), *vocab_);
      keys += (keys.empty() ? "" : ",") + token(key);
    }
    return Change{cur.record, cur.state, std::move(s), "Answer(" + keys + ")"};
  });
}

StoredRecord Engine::answer_text(const std::string& id, const std::string& key, const std::string& text,
                                 std::optional<int> version) {
  return store_->update(id, version, now().lexical(), [&](const StoredRecord& cur) {
    Session s = cur.session ? *cur.session : questionnaire::new_session(questionnaire_, cur.record.iri, cur.id);
    auto k = questionnaire::resolve_key(questionnaire_, key);
    s = questionnaire::answer(s, questionnaire_, key, questionnaire::answer_from_text(*k.question, text, *vocab_),
                              *vocab_);
    return Change{cur.record, cur.state, std::move(s), "Answer(" + token(key) + ")"};
  });
}

std::optional<std::string> Engine::next_question(const std::string& id) const {
  auto s = get(id);
  if (!s.session) return questionnaire::next_question(questionnaire::new_session(questionnaire_, s.record.iri, id),
                                                      questionnaire_);
  return questionnaire::next_question(*s.session, questionnaire_);
}

CompileResult Engine::compile(const std::string& id, std::optional<int> version) {
  auto stored = store_->update(id, version, now().lexical(), [&](const StoredRecord& cur) {
    if (!cur.session) throw questionnaire::SessionError("record " + id + " has no questionnaire session");
    auto compiled = questionnaire::compile(*cur.session, questionnaire_, *vocab_);
    workflow::WorkflowState state = cur.state;
    model::FriaRecord record = cur.record;

    if (compiled.necessity) {
      const auto& n = *compiled.necessity;
      if (accepts(state, "AssessNecessity")) {
        std::map<std::string, bool> flags = record.necessity ? record.necessity->condition_flags : std::map<std::string, bool>{};
        auto tr = workflow::apply(state, ev::AssessNecessity{flags, n.status, n.justification}, record, *vocab_);
        state = tr.state;
        record = tr.record;
      } else if (record.necessity && record.necessity->status != n.status) {
        throw workflow::PreconditionError("compiled necessity status " + vocab_->compact(n.status) +
                                          " conflicts with the recorded " + vocab_->compact(record.necessity->status));
      } else if (record.necessity && !n.justification.empty()) {
        record.necessity->justification = n.justification;
      }
    }

    model::FriaRecord base = clear_compiled(record);
    rdf::Graph merged = model::to_graph(base, *vocab_);
    merged.insert_all(without_necessity(compiled.fragment, record.iri));
    model::FriaRecord next = model::from_graph(merged, record.iri, *vocab_);
    if (compiled.inputs) {
      auto inputs = *next.inputs;
      next.inputs.reset();
      auto tr = workflow::apply(state, ev::SubmitInputs{inputs}, next, *vocab_);
      state = tr.state;
      next = tr.record;
    }
    return Change{std::move(next), std::move(state), questionnaire::mark_compiled(*cur.session), "Compile"};
  });
  auto report = validation::validate(graph(stored), validation::builtin_shapes(*vocab_), *vocab_);
  return CompileResult{std::move(stored), std::move(report)};
}

validation::ValidationReport Engine::validate(const std::string& id) const {
  return validation::validate(graph(get(id)), validation::builtin_shapes(*vocab_), *vocab_);
}

validation::CqAnswer Engine::cq(const std::string& id, int n) const {
  auto s = get(id);
  return validation::answer_cq(graph(s), s.record.iri, n, *vocab_);
}

OutcomeResult Engine::outcome(const std::string& id, const std::string& rationale, std::optional<int> version) {
  auto stored = apply_event(id, version, ev::DetermineOutcome{rationale});
  Iri status = stored.record.outcome->status;
  return OutcomeResult{std::move(stored), status, workflow::deployment_permitted(status)};
}

StoredRecord Engine::notify(const std::string& id, notification::NotificationDecision decision,
                            std::optional<int> version) {
  if (decision.mark_sent && !decision.when) decision.when = now();
  return apply_event(id, version, ev::ResolveNotification{std::move(decision)});
}

StoredRecord Engine::mark_sent(const std::string& id, std::optional<int> version) {
  notification::NotificationDecision d;
  d.mark_sent = true;
  d.when = now();
  return apply_event(id, version, ev::ResolveNotification{d});
}

StoredRecord Engine::reopen(const std::string& id, const std::string& reason, std::optional<int> version) {
  return apply_event(id, version, ev::Reopen{reason, now()});
}

StoredRecord Engine::touch(const std::string& id, std::optional<int> version) {
  return store_->update(id, version, now().lexical(), [&](const StoredRecord& cur) {
    try {
      return Change{model::touch(cur.record, now()), cur.state, cur.session, "Touch"};
    } catch (const model::ModelError& e) {
      throw workflow::PreconditionError(e.what());
    }
  });
}

rdf::Graph Engine::graph(const StoredRecord& s) const { return model::to_graph(s.record, *vocab_); }

std::string Engine::export_record(const std::string& id, const std::string& format) const {
  if (format != "ttl" && format != "nt" && format != "report-json" && format != "json")
    throw FormatError("unknown export format '" + format + "' (ttl, nt, report-json, json)");
  auto s = get(id);
  auto g = graph(s);
  if (format == "ttl") return rdf::serialize_turtle(g);
  if (format == "nt") return rdf::serialize_ntriples(g);
  if (format == "report-json")
    return validation::to_json(validation::validate(g, validation::builtin_shapes(*vocab_), *vocab_)).dump(2) + "\n";
  return model::to_json(s.record).dump(2) + "\n";
}

std::optional<notification::Notice> Engine::notice(const std::string& id) const {
  return notification::current_notice(get(id).record, *vocab_);
}

rdf::Graph Engine::ontology() const { return vocab::export_ontology(*vocab_); }

nlohmann::json to_json(const StoredRecord& s, const vocab::Vocabulary& v) {
  nlohmann::json session = nullptr;
  nlohmann::json next = nullptr;
  if (s.session) {
    session = questionnaire::to_json(*s.session);
    if (s.session->cursor) next = *s.session->cursor;
  }
  return {{"id", s.id},
          {"iri", s.record.iri.str()},
          {"version", s.version},
          {"state", workflow::to_text(s.state, v)},
          {"state_kind", workflow::kind_name(s.state)},
          {"accepted_events", workflow::accepted_events(s.state)},
          {"record", model::to_json(s.record)},
          {"session", session},
          {"next_question", next}};
}

}  // namespace fria::store
