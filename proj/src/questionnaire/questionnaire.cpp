#include "fria/questionnaire/questionnaire.h"

#include <fstream>
#include <sstream>

#include "fria/vocab/terms.h"

namespace fria::questionnaire {

namespace {

using nlohmann::json;
namespace t = terms;

void reject_unknown(const json& j, std::initializer_list<std::string_view> allowed, const std::string& where) {
  if (!j.is_object()) throw QuestionnaireError(where + ": expected an object");
  for (const auto& [k, _] : j.items()) {
    bool ok = false;
    for (auto a : allowed) ok = ok || a == k;
    if (!ok) throw QuestionnaireError(where + ": unknown field '" + k + "'");
  }
}

const json& field(const json& j, const char* name, const std::string& where) {
  auto it = j.find(name);
  if (it == j.end()) throw QuestionnaireError(where + ": missing field '" + name + "'");
  return *it;
}

std::string string_field(const json& j, const char* name, const std::string& where) {
  const auto& f = field(j, name, where);
  if (!f.is_string()) throw QuestionnaireError(where + ": field '" + name + "' must be a string");
  return f.get<std::string>();
}

std::string optional_string(const json& j, const char* name, const std::string& where) {
  if (!j.contains(name)) return "";
  return string_field(j, name, where);
}

Iri iri_field(const json& j, const char* name, const std::string& where, const vocab::Vocabulary& v) {
  auto text = string_field(j, name, where);
  auto iri = v.expand(text);
  if (!iri) throw QuestionnaireError(where + ": '" + text + "' is not an IRI or known prefixed name");
  return *iri;
}

bool bool_field(const json& j, const char* name, const std::string& where, bool fallback) {
  if (!j.contains(name)) return fallback;
  const auto& f = j.at(name);
  if (!f.is_boolean()) throw QuestionnaireError(where + ": field '" + name + "' must be a boolean");
  return f.get<bool>();
}

bool is_class(const vocab::Vocabulary& v, const Iri& c) {
  const auto* d = v.find(c);
  return d && d->kind == vocab::TermKind::Class;
}

bool is_property(const vocab::Vocabulary& v, const Iri& p) {
  const auto* d = v.find(p);
  return d && d->kind == vocab::TermKind::Property;
}

bool takes_class(AnswerKindTag k) { return k == AnswerKindTag::IriChoice || k == AnswerKindTag::IriMulti; }

Question question_from_json(const json& j, const std::string& where, const vocab::Vocabulary& v) {
  reject_unknown(j, {"id", "prompt", "maps_to", "target_stage", "answer_kind", "required", "guidance", "node_class"},
                 where);
  std::string id = string_field(j, "id", where);
  const std::string at = where + " '" + id + "'";
  Question q{id, string_field(j, "prompt", at), iri_field(j, "maps_to", at, v), Stage::Inputs, {}, false, "", {}};
  auto stage = string_field(j, "target_stage", at);
  auto st = stage_from_string(stage);
  if (!st) throw QuestionnaireError(at + ": unknown target_stage '" + stage + "'");
  q.target_stage = *st;
  const auto& kind = field(j, "answer_kind", at);
  reject_unknown(kind, {"kind", "class"}, at + " answer_kind");
  auto tag_text = string_field(kind, "kind", at + " answer_kind");
  auto tag = answer_kind_from_string(tag_text);
  if (!tag) throw QuestionnaireError(at + ": unknown answer kind '" + tag_text + "'");
  q.answer_kind.tag = *tag;
  if (kind.contains("class")) q.answer_kind.cls = iri_field(kind, "class", at + " answer_kind", v);
  q.required = bool_field(j, "required", at, false);
  q.guidance = optional_string(j, "guidance", at);
  if (j.contains("node_class")) q.node_class = iri_field(j, "node_class", at, v);
  return q;
}

json question_to_json(const Question& q, const vocab::Vocabulary& v) {
  json kind{{"kind", to_string(q.answer_kind.tag)}};
  if (q.answer_kind.cls) kind["class"] = v.compact(*q.answer_kind.cls);
  json j{{"id", q.id},
         {"prompt", q.prompt},
         {"maps_to", v.compact(q.maps_to)},
         {"target_stage", to_string(q.target_stage)},
         {"answer_kind", kind},
         {"required", q.required},
         {"guidance", q.guidance}};
  if (q.node_class) j["node_class"] = v.compact(*q.node_class);
  return j;
}

}  // namespace

std::string_view to_string(Stage s) {
  switch (s) {
    case Stage::Necessity: return "necessity";
    case Stage::Inputs: return "inputs";
    case Stage::Outcome: return "outcome";
    case Stage::Notification: return "notification";
  }
  return "inputs";
}

std::optional<Stage> stage_from_string(std::string_view s) {
  for (auto st : {Stage::Necessity, Stage::Inputs, Stage::Outcome, Stage::Notification})
    if (to_string(st) == s) return st;
  return std::nullopt;
}

std::string_view to_string(AnswerKindTag k) {
  switch (k) {
    case AnswerKindTag::Text: return "text";
    case AnswerKindTag::Date: return "date";
    case AnswerKindTag::IriChoice: return "iri_choice";
    case AnswerKindTag::IriMulti: return "iri_multi";
    case AnswerKindTag::Boolean: return "boolean";
    case AnswerKindTag::Reference: return "reference";
  }
  return "text";
}

std::optional<AnswerKindTag> answer_kind_from_string(std::string_view s) {
  for (auto k : {AnswerKindTag::Text, AnswerKindTag::Date, AnswerKindTag::IriChoice, AnswerKindTag::IriMulti,
                 AnswerKindTag::Boolean, AnswerKindTag::Reference})
    if (to_string(k) == s) return k;
  return std::nullopt;
}

const Question* Questionnaire::find(std::string_view qid) const {
  for (const auto& s : sections)
    for (const auto& q : s.questions)
      if (q.id == qid) return &q;
  return nullptr;
}

const Section* Questionnaire::section_of(std::string_view qid) const {
  for (const auto& s : sections)
    for (const auto& q : s.questions)
      if (q.id == qid) return &s;
  return nullptr;
}

std::vector<const Question*> Questionnaire::questions() const {
  std::vector<const Question*> out;
  for (const auto& s : sections)
    for (const auto& q : s.questions) out.push_back(&q);
  return out;
}

void check_questionnaire(const Questionnaire& q, const vocab::Vocabulary& v) {
  std::set<std::string> qids, sids;
  auto fail = [](const std::string& msg) { throw QuestionnaireError(msg); };
  if (q.sections.empty()) fail("questionnaire has no sections");
  for (const auto& s : q.sections) {
    if (s.id.empty()) fail("section with an empty id");
    if (!sids.insert(s.id).second) fail("duplicate section id '" + s.id + "'");
    if (s.questions.empty()) fail("section '" + s.id + "' has no questions");
    if (s.entry) {
      const auto& e = *s.entry;
      if (!is_property(v, e.link)) fail("section '" + s.id + "': entry link <" + e.link.str() + "> is not a catalogued property");
      if (!is_class(v, e.node_class))
        fail("section '" + s.id + "': entry class <" + e.node_class.str() + "> is not a catalogued class");
      if (e.name.empty()) fail("section '" + s.id + "': entry needs a name");
    }
    for (const auto& qu : s.questions) {
      const std::string at = "question '" + qu.id + "'";
      if (qu.id.empty() || qu.id.find('@') != std::string::npos || qu.id.find('#') != std::string::npos)
        fail("invalid question id '" + qu.id + "'");
      if (!qids.insert(qu.id).second) fail("duplicate question id '" + qu.id + "'");
      bool type_path = qu.maps_to == t::rdf::type;
      if (!type_path && !is_property(v, qu.maps_to))
        fail(at + ": maps_to <" + qu.maps_to.str() + "> is not a catalogued property");
      if (takes_class(qu.answer_kind.tag)) {
        if (!qu.answer_kind.cls) fail(at + ": " + std::string(to_string(qu.answer_kind.tag)) + " needs a class");
        if (!is_class(v, *qu.answer_kind.cls))
          fail(at + ": choice class <" + qu.answer_kind.cls->str() + "> is not a catalogued class");
      } else if (qu.answer_kind.cls) {
        fail(at + ": only iri_choice and iri_multi take a class");
      }
      if (qu.node_class) {
        if (qu.answer_kind.tag != AnswerKindTag::Text) fail(at + ": node_class applies to text answers only");
        if (!is_class(v, *qu.node_class)) fail(at + ": node_class <" + qu.node_class->str() + "> is not a catalogued class");
      }
      if (type_path && (!s.entry || qu.answer_kind.tag != AnswerKindTag::IriChoice))
        fail(at + ": rdf:type answers are only allowed as an iri_choice inside an entry section");
      if (s.entry && qu.target_stage != s.questions.front().target_stage)
        fail("section '" + s.id + "': entry questions must share one target stage");
    }
  }
}

std::vector<Iri> choices(const Question& q, const vocab::Vocabulary& v) {
  if (!q.answer_kind.cls) return {};
  auto inst = v.instances_of(*q.answer_kind.cls);
  if (!inst.empty()) return inst;
  return v.subclasses_of(*q.answer_kind.cls);
}

std::set<Iri> covered_paths(const Questionnaire& q) {
  std::set<Iri> out;
  for (const auto& s : q.sections) {
    bool any_required = false;
    for (const auto& qu : s.questions) {
      if (!qu.required) continue;
      any_required = true;
      out.insert(qu.maps_to);
    }
    if (s.entry && any_required) out.insert(s.entry->link);
  }
  return out;
}

std::set<Iri> mandatory_paths(const std::vector<validation::Shape>& shapes) {
  std::set<Iri> out;
  for (const auto& s : shapes) {
    if (s.when) continue;
    for (const auto& c : s.constraints)
      if (c.min_count >= 1) out.insert(c.path);
  }
  return out;
}

Questionnaire questionnaire_from_json(const json& j, const vocab::Vocabulary& v) {
  reject_unknown(j, {"id", "title", "sections"}, "questionnaire");
  Questionnaire q{iri_field(j, "id", "questionnaire", v), string_field(j, "title", "questionnaire"), {}};
  const auto& sections = field(j, "sections", "questionnaire");
  if (!sections.is_array()) throw QuestionnaireError("questionnaire: 'sections' must be an array");
  for (const auto& sj : sections) {
    reject_unknown(sj, {"id", "title", "questions", "entry"}, "section");
    Section s;
    s.id = string_field(sj, "id", "section");
    const std::string at = "section '" + s.id + "'";
    s.title = string_field(sj, "title", at);
    if (sj.contains("entry")) {
      const auto& ej = sj.at("entry");
      reject_unknown(ej, {"link", "node_class", "blank", "name"}, at + " entry");
      s.entry = Entry{iri_field(ej, "link", at + " entry", v), iri_field(ej, "node_class", at + " entry", v),
                      bool_field(ej, "blank", at + " entry", false), string_field(ej, "name", at + " entry")};
    }
    const auto& qs = field(sj, "questions", at);
    if (!qs.is_array()) throw QuestionnaireError(at + ": 'questions' must be an array");
    for (const auto& qj : qs) s.questions.push_back(question_from_json(qj, "question", v));
    q.sections.push_back(std::move(s));
  }
  check_questionnaire(q, v);
  return q;
}

json to_json(const Questionnaire& q, const vocab::Vocabulary& v) {
  json sections = json::array();
  for (const auto& s : q.sections) {
    json qs = json::array();
    for (const auto& qu : s.questions) qs.push_back(question_to_json(qu, v));
    json sj{{"id", s.id}, {"title", s.title}};
    if (s.entry)
      sj["entry"] = {{"link", v.compact(s.entry->link)},
                     {"node_class", v.compact(s.entry->node_class)},
                     {"blank", s.entry->blank},
                     {"name", s.entry->name}};
    sj["questions"] = qs;
    sections.push_back(sj);
  }
  return {{"id", v.compact(q.id)}, {"title", q.title}, {"sections", sections}};
}

Questionnaire load_questionnaire(const std::string& path, const vocab::Vocabulary& v) {
  std::ifstream in(path);
  if (!in) throw QuestionnaireError("cannot read questionnaire file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  json j;
  try {
    j = json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw QuestionnaireError(path + ": " + e.what());
  }
  return questionnaire_from_json(j, v);
}

}  // namespace fria::questionnaire
