#include "fria/questionnaire/compile.h"

#include "fria/model/mapping.h"
#include "fria/vocab/terms.h"

namespace fria::questionnaire {

namespace {

using rdf::Graph;
using rdf::Literal;
using rdf::Term;
namespace t = terms;

class Emitter {
 public:
  Emitter(const Session& s, const vocab::Vocabulary& v) : s_(s), v_(v), r_(s.record), qn_(completed_questionnaire_iri(r_)) {
    g_.set_prefixes(model::record_prefixes(v));
  }

  Graph& graph() { return g_; }
  const Iri& questionnaire_node() const { return qn_; }

  Term stage_node(Stage st) {
    switch (st) {
      case Stage::Necessity: return linked(model::necessity_node(r_), t::fria::FRIANecessityAssessment);
      case Stage::Inputs: return linked(model::procedure_node(r_), t::fria::FRIAProcedure);
      case Stage::Outcome:
      case Stage::Notification: return qn_;
    }
    return qn_;
  }

  void value(const Term& subject, const Question& q, const AnswerValue& a, int instance) {
    std::visit(
        [&](const auto& x) {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, std::string>) {
            if (q.node_class) {
              Iri node = model::stage_iri(r_, instance == 1 ? q.id : q.id + "-" + std::to_string(instance));
              g_.insert(subject, q.maps_to, node);
              g_.insert(node, t::rdf::type, *q.node_class);
              g_.insert(node, t::dct::description, Literal(x));
            } else {
              g_.insert(subject, q.maps_to, Literal(x));
            }
          } else if constexpr (std::is_same_v<T, bool>) {
            g_.insert(subject, q.maps_to, Literal(x ? "true" : "false", rdf::xsd::boolean));
          } else if constexpr (std::is_same_v<T, Iri>) {
            g_.insert(subject, q.maps_to, x);
          } else if constexpr (std::is_same_v<T, std::set<Iri>>) {
            for (const auto& i : x) g_.insert(subject, q.maps_to, i);
          } else {
            g_.insert(subject, q.maps_to, x.to_literal());
          }
        },
        a);
  }

 private:
  Iri linked(const Iri& node, const Iri& type) {
    g_.insert(r_, t::dpv::hasAssessment, node);
    g_.insert(node, t::rdf::type, type);
    return node;
  }

  const Session& s_;
  const vocab::Vocabulary& v_;
  Iri r_;
  Iri qn_;
  Graph g_;
};

std::string key_for(const std::string& qid, int k) { return k == 1 ? qid : qid + "@" + std::to_string(k); }

}  // namespace

Iri completed_questionnaire_iri(const Iri& record) { return model::stage_iri(record, "questionnaire"); }

Compiled compile(const Session& s, const Questionnaire& q, const vocab::Vocabulary& v) {
  if (s.status != SessionStatus::Open) throw SessionClosedError("session " + s.id + " is already compiled");
  if (s.questionnaire != q.id)
    throw SessionError("session belongs to questionnaire <" + s.questionnaire.str() + ">, not <" + q.id.str() + ">");
  if (auto missing = missing_answers(s, q); !missing.empty()) throw MissingAnswersError(std::move(missing));

  Emitter em(s, v);
  Graph& g = em.graph();
  const Iri& R = s.record;
  const Iri& qn = em.questionnaire_node();
  g.insert(R, t::fria_ext::hasQuestionnaire, qn);
  g.insert(qn, t::rdf::type, t::fria::FRIACompletedQuestionnaire);
  g.insert(qn, t::dct::source, q.id);

  bool any_inputs = false, any_necessity = false;
  for (const auto& sec : q.sections) {
    if (!sec.entry) {
      for (const auto& qu : sec.questions) {
        auto it = s.answers.find(qu.id);
        if (it == s.answers.end()) continue;
        any_inputs |= qu.target_stage == Stage::Inputs;
        any_necessity |= qu.target_stage == Stage::Necessity;
        em.value(em.stage_node(qu.target_stage), qu, it->second, 1);
      }
      continue;
    }
    std::set<int> instances;
    for (const auto& [key, _] : s.answers) {
      auto k = resolve_key(q, key);
      if (k.section == &sec) instances.insert(k.instance);
    }
    const auto& e = *sec.entry;
    const Stage st = sec.questions.front().target_stage;
    for (int k : instances) {
      Term node = e.blank ? Term(rdf::BlankNode{"q" + e.name + std::to_string(k)})
                          : Term(model::stage_iri(R, k == 1 ? e.name : e.name + "-" + std::to_string(k)));
      g.insert(em.stage_node(st), e.link, node);
      any_inputs |= st == Stage::Inputs;
      any_necessity |= st == Stage::Necessity;
      bool typed = false;
      for (const auto& qu : sec.questions) {
        auto it = s.answers.find(key_for(qu.id, k));
        if (it == s.answers.end()) continue;
        typed |= qu.maps_to == t::rdf::type;
        em.value(node, qu, it->second, k);
      }
      if (!typed) g.insert(node, t::rdf::type, e.node_class);
    }
  }

  Compiled out{g, qn, std::nullopt, std::nullopt, {}};
  if (any_necessity) {
    const Iri node = model::necessity_node(R);
    model::Necessity n{t::fria::FRIANotRequired, "", {}};
    if (auto st = model::read_status(g, node)) n.status = *st;
    for (const auto& o : g.objects(node, t::dct::description))
      if (const auto* l = std::get_if<Literal>(&o)) n.justification = l->lexical();
    if (model::read_status(g, node)) out.necessity = n;
  }
  if (any_inputs) out.inputs = model::read_procedure(g, R, model::procedure_node(R), v);
  out.questionnaire_triples.set_prefixes(g.prefixes());
  out.questionnaire_triples.insert(R, t::fria_ext::hasQuestionnaire, qn);
  for (const auto& tr : g.match(qn, std::nullopt, std::nullopt)) out.questionnaire_triples.insert(tr);
  return out;
}

Session mark_compiled(const Session& s) {
  Session out = s;
  out.status = SessionStatus::Compiled;
  return out;
}

}  // namespace fria::questionnaire
