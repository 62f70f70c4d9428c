#include "fria/questionnaire/session.h"

#include <algorithm>
#include <charconv>

namespace fria::questionnaire {

namespace {

using nlohmann::json;

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::string kind_label(const Question& q, const vocab::Vocabulary& v) {
  std::string out(to_string(q.answer_kind.tag));
  if (q.answer_kind.cls) out += "(" + v.compact(*q.answer_kind.cls) + ")";
  return out;
}

[[noreturn]] void mismatch(const Question& q, const vocab::Vocabulary& v, const std::string& detail) {
  throw AnswerTypeError("answer to '" + q.id + "' must be " + kind_label(q, v) + ": " + detail);
}

void check_choice(const Question& q, const Iri& value, const vocab::Vocabulary& v) {
  auto allowed = choices(q, v);
  if (std::find(allowed.begin(), allowed.end(), value) != allowed.end()) return;
  std::string list;
  for (const auto& c : allowed) list += (list.empty() ? "" : ", ") + v.compact(c);
  mismatch(q, v, v.compact(value) + " is not a " + v.compact(*q.answer_kind.cls) + " (allowed: " + list + ")");
}

Iri expand_iri(const Question& q, const std::string& text, const vocab::Vocabulary& v) {
  auto iri = v.expand(trim(text));
  if (!iri) mismatch(q, v, "'" + text + "' is not an IRI or known prefixed name");
  return *iri;
}

std::optional<int> parse_instance(std::string_view s) {
  if (s.empty() || s.size() > 4 || s.front() == '0') return std::nullopt;
  int n = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
  if (ec != std::errc() || p != s.data() + s.size() || n < 2) return std::nullopt;
  return n;
}

std::string instance_key(const std::string& qid, int k) { return k == 1 ? qid : qid + "@" + std::to_string(k); }

}  // namespace

MissingAnswersError::MissingAnswersError(std::vector<std::string> missing)
    : SessionError([&] {
        std::string msg = "required questions unanswered:";
        for (const auto& m : missing) msg += " " + m;
        return msg;
      }()),
      missing_(std::move(missing)) {}

AnswerKey resolve_key(const Questionnaire& q, std::string_view key) {
  auto at = key.find('@');
  std::string_view base = key.substr(0, at);
  const Question* question = q.find(base);
  if (!question) throw UnknownQuestionError("unknown question '" + std::string(key) + "'");
  const Section* section = q.section_of(base);
  int instance = 1;
  if (at != std::string_view::npos) {
    if (!section->entry)
      throw UnknownQuestionError("question '" + std::string(base) + "' is not part of a repeatable entry");
    auto n = parse_instance(key.substr(at + 1));
    if (!n) throw UnknownQuestionError("bad entry number in '" + std::string(key) + "' (expected @2, @3, ...)");
    instance = *n;
  }
  return AnswerKey{question, section, instance};
}

Session new_session(const Questionnaire& q, const Iri& record, std::string id) {
  Session s{std::move(id), q.id, record, {}, std::nullopt, SessionStatus::Open};
  s.cursor = next_question(s, q);
  return s;
}

void check_answer(const Question& q, const AnswerValue& value, const vocab::Vocabulary& v) {
  switch (q.answer_kind.tag) {
    case AnswerKindTag::Text: {
      const auto* s = std::get_if<std::string>(&value);
      if (!s) mismatch(q, v, "expected text");
      if (trim(*s).empty()) mismatch(q, v, "text must not be empty");
      return;
    }
    case AnswerKindTag::Date:
      if (!std::holds_alternative<rdf::Timestamp>(value)) mismatch(q, v, "expected a date");
      return;
    case AnswerKindTag::Boolean:
      if (!std::holds_alternative<bool>(value)) mismatch(q, v, "expected true or false");
      return;
    case AnswerKindTag::Reference:
      if (!std::holds_alternative<Iri>(value)) mismatch(q, v, "expected an IRI");
      return;
    case AnswerKindTag::IriChoice: {
      const auto* i = std::get_if<Iri>(&value);
      if (!i) mismatch(q, v, "expected one IRI");
      check_choice(q, *i, v);
      return;
    }
    case AnswerKindTag::IriMulti: {
      const auto* set = std::get_if<std::set<Iri>>(&value);
      if (!set) mismatch(q, v, "expected a set of IRIs");
      if (set->empty()) mismatch(q, v, "select at least one value");
      for (const auto& i : *set) check_choice(q, i, v);
      return;
    }
  }
}

Session answer(const Session& s, const Questionnaire& q, const std::string& key, const AnswerValue& value,
               const vocab::Vocabulary& v) {
  if (s.status != SessionStatus::Open) throw SessionClosedError("session " + s.id + " is compiled; reopen the record to change answers");
  auto k = resolve_key(q, key);
  AnswerValue val = value;
  if (k.question->answer_kind.tag == AnswerKindTag::IriMulti)
    if (const auto* one = std::get_if<Iri>(&value)) val = std::set<Iri>{*one};
  check_answer(*k.question, val, v);
  Session out = s;
  out.answers[key] = std::move(val);
  out.cursor = next_question(out, q);
  return out;
}

Session clear_answer(const Session& s, const Questionnaire& q, const std::string& key) {
  if (s.status != SessionStatus::Open) throw SessionClosedError("session " + s.id + " is compiled; reopen the record to change answers");
  Session out = s;
  out.answers.erase(key);
  out.cursor = next_question(out, q);
  return out;
}

std::optional<std::string> next_question(const Session& s, const Questionnaire& q) {
  for (const auto* qu : q.questions())
    if (qu->required && !s.answers.count(qu->id)) return qu->id;
  return std::nullopt;
}

std::vector<std::string> missing_answers(const Session& s, const Questionnaire& q) {
  std::vector<std::string> out;
  for (const auto& sec : q.sections) {
    std::set<int> instances{1};
    if (sec.entry) {
      for (const auto& [key, _] : s.answers) {
        auto at = key.find('@');
        if (at == std::string::npos) continue;
        const auto* owner = q.section_of(key.substr(0, at));
        if (owner == &sec) instances.insert(resolve_key(q, key).instance);
      }
    }
    for (int k : instances)
      for (const auto& qu : sec.questions)
        if (qu.required && !s.answers.count(instance_key(qu.id, k))) out.push_back(instance_key(qu.id, k));
  }
  return out;
}

Session reopen_session(const Session& s, const Questionnaire& q) {
  Session out = s;
  out.status = SessionStatus::Open;
  out.cursor = next_question(out, q);
  return out;
}

AnswerValue answer_from_json(const Question& q, const json& j, const vocab::Vocabulary& v) {
  switch (q.answer_kind.tag) {
    case AnswerKindTag::Text:
      if (!j.is_string()) mismatch(q, v, "expected a JSON string");
      return j.get<std::string>();
    case AnswerKindTag::Date: {
      if (!j.is_string()) mismatch(q, v, "expected a date string");
      auto ts = rdf::Timestamp::parse(j.get<std::string>());
      if (!ts) mismatch(q, v, "'" + j.get<std::string>() + "' is not a date");
      return *ts;
    }
    case AnswerKindTag::Boolean:
      if (!j.is_boolean()) mismatch(q, v, "expected a JSON boolean");
      return j.get<bool>();
    case AnswerKindTag::IriChoice:
    case AnswerKindTag::Reference:
      if (!j.is_string()) mismatch(q, v, "expected an IRI string");
      return expand_iri(q, j.get<std::string>(), v);
    case AnswerKindTag::IriMulti: {
      std::set<Iri> out;
      if (j.is_string()) {
        out.insert(expand_iri(q, j.get<std::string>(), v));
        return out;
      }
      if (!j.is_array()) mismatch(q, v, "expected an array of IRI strings");
      for (const auto& e : j) {
        if (!e.is_string()) mismatch(q, v, "expected an array of IRI strings");
        out.insert(expand_iri(q, e.get<std::string>(), v));
      }
      return out;
    }
  }
  mismatch(q, v, "unsupported answer kind");
}

AnswerValue answer_from_text(const Question& q, const std::string& text, const vocab::Vocabulary& v) {
  switch (q.answer_kind.tag) {
    case AnswerKindTag::Text: return text;
    case AnswerKindTag::Date: {
      auto ts = rdf::Timestamp::parse(trim(text));
      if (!ts) mismatch(q, v, "'" + text + "' is not a date");
      return *ts;
    }
    case AnswerKindTag::Boolean: {
      auto t = trim(text);
      if (t == "true" || t == "yes") return true;
      if (t == "false" || t == "no") return false;
      mismatch(q, v, "'" + text + "' is not true/false/yes/no");
    }
    case AnswerKindTag::IriChoice:
    case AnswerKindTag::Reference: return expand_iri(q, text, v);
    case AnswerKindTag::IriMulti: {
      std::set<Iri> out;
      std::size_t start = 0;
      while (start <= text.size()) {
        auto comma = text.find(',', start);
        auto part = trim(std::string_view(text).substr(start, comma == std::string::npos ? std::string::npos : comma - start));
        if (!part.empty()) out.insert(expand_iri(q, part, v));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
      return out;
    }
  }
  mismatch(q, v, "unsupported answer kind");
}

json answer_to_json(const AnswerValue& value) {
  return std::visit(
      [](const auto& x) -> json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, std::string> || std::is_same_v<T, bool>) {
          return x;
        } else if constexpr (std::is_same_v<T, Iri>) {
          return x.str();
        } else if constexpr (std::is_same_v<T, std::set<Iri>>) {
          json arr = json::array();
          for (const auto& i : x) arr.push_back(i.str());
          return arr;
        } else {
          return x.lexical();
        }
      },
      value);
}

json to_json(const Session& s) {
  json answers = json::object();
  for (const auto& [k, val] : s.answers) answers[k] = answer_to_json(val);
  return {{"id", s.id},
          {"questionnaire", s.questionnaire.str()},
          {"record", s.record.str()},
          {"status", s.status == SessionStatus::Open ? "open" : "compiled"},
          {"cursor", s.cursor ? json(*s.cursor) : json(nullptr)},
          {"answers", answers}};
}

Session session_from_json(const json& j, const Questionnaire& q, const vocab::Vocabulary& v) {
  auto bad = [](const std::string& m) -> SessionError { return SessionError("session file: " + m); };
  if (!j.is_object()) throw bad("expected an object");
  for (const auto& [k, _] : j.items())
    if (k != "id" && k != "questionnaire" && k != "record" && k != "status" && k != "cursor" && k != "answers")
      throw bad("unknown field '" + k + "'");
  for (const char* f : {"id", "questionnaire", "record", "status"})
    if (!j.contains(f) || !j.at(f).is_string()) throw bad(std::string("missing string field '") + f + "'");
  Iri qid(j.at("questionnaire").get<std::string>());
  if (qid != q.id) throw bad("session belongs to questionnaire <" + qid.str() + ">, not <" + q.id.str() + ">");
  Session s{j.at("id").get<std::string>(), qid, Iri(j.at("record").get<std::string>()), {}, std::nullopt,
            SessionStatus::Open};
  auto status = j.at("status").get<std::string>();
  if (status != "open" && status != "compiled") throw bad("unknown status '" + status + "'");
  s.status = status == "open" ? SessionStatus::Open : SessionStatus::Compiled;
  if (j.contains("answers")) {
    if (!j.at("answers").is_object()) throw bad("'answers' must be an object");
    for (const auto& [key, val] : j.at("answers").items()) {
      auto k = resolve_key(q, key);
      AnswerValue a = answer_from_json(*k.question, val, v);
      check_answer(*k.question, a, v);
      s.answers[key] = std::move(a);
    }
  }
  s.cursor = next_question(s, q);
  if (j.contains("cursor") && !j.at("cursor").is_null()) {
    if (!j.at("cursor").is_string() || s.cursor != j.at("cursor").get<std::string>())
      throw bad("cursor is inconsistent with the answers");
  } else if (s.cursor) {
    throw bad("cursor is inconsistent with the answers");
  }
  return s;
}

json question_json(const Question& q, const vocab::Vocabulary& v) {
  json choice_list = json::array();
  for (const auto& c : choices(q, v)) {
    const auto* d = v.find(c);
    choice_list.push_back({{"iri", c.str()}, {"curie", v.compact(c)}, {"label", d ? d->label : ""}});
  }
  json kind{{"kind", to_string(q.answer_kind.tag)}};
  if (q.answer_kind.cls) kind["class"] = q.answer_kind.cls->str();
  return {{"id", q.id},
          {"prompt", q.prompt},
          {"answer_kind", kind},
          {"maps_to", q.maps_to.str()},
          {"target_stage", to_string(q.target_stage)},
          {"required", q.required},
          {"guidance", q.guidance},
          {"choices", choice_list}};
}

}  // namespace fria::questionnaire
